#include "isoimp/catalog.hpp"

#include <algorithm>

namespace isoimp::catalog {

#define ISOIMP_CATALOG_ENTRY(fn, name, arity, bits)              \
  ConstraintPtr fn() {                                           \
    static const ConstraintPtr c = make_constraint(name, arity, bits); \
    return c;                                                    \
  }

ISOIMP_CATALOG_ENTRY(pos1, "POS1", 1, "01")
ISOIMP_CATALOG_ENTRY(neg1, "NEG1", 1, "10")
ISOIMP_CATALOG_ENTRY(true1, "TRUE1", 1, "11")
ISOIMP_CATALOG_ENTRY(false1, "FALSE1", 1, "00")
ISOIMP_CATALOG_ENTRY(and2, "AND2", 2, "0001")
ISOIMP_CATALOG_ENTRY(or2, "OR2", 2, "0111")
ISOIMP_CATALOG_ENTRY(nand2, "NAND2", 2, "1110")
ISOIMP_CATALOG_ENTRY(imp2, "IMP2", 2, "1101")
ISOIMP_CATALOG_ENTRY(iff2, "IFF2", 2, "1001")
ISOIMP_CATALOG_ENTRY(xor2, "XOR2", 2, "0110")
ISOIMP_CATALOG_ENTRY(t_or, "T-OR", 3, "00000111")
ISOIMP_CATALOG_ENTRY(ft_or, "FT-OR", 4, "0000011100000000")
ISOIMP_CATALOG_ENTRY(f_nand, "F-NAND", 3, "11100000")
ISOIMP_CATALOG_ENTRY(ft_nand, "FT-NAND", 4, "0000111000000000")
ISOIMP_CATALOG_ENTRY(t_iff, "T-IFF", 3, "00001001")
ISOIMP_CATALOG_ENTRY(f_iff, "F-IFF", 3, "10010000")
ISOIMP_CATALOG_ENTRY(ft_iff, "FT-IFF", 4, "0000100100000000")
ISOIMP_CATALOG_ENTRY(ft_xor, "FT-XOR", 4, "0000011000000000")
ISOIMP_CATALOG_ENTRY(one_in_three, "ONE-IN-THREE", 3, "01101000")
ISOIMP_CATALOG_ENTRY(nae3, "NAE3", 3, "01111110")
ISOIMP_CATALOG_ENTRY(maj3, "MAJ3", 3, "00010111")

#undef ISOIMP_CATALOG_ENTRY

std::vector<ConstraintPtr> all() {
  std::vector<ConstraintPtr> out{pos1(),   neg1(),   true1(),  false1(), and2(),   or2(),
                                 nand2(),  imp2(),   iff2(),   xor2(),   t_or(),   ft_or(),
                                 f_nand(), ft_nand(), t_iff(), f_iff(),  ft_iff(), ft_xor(),
                                 one_in_three(), nae3(), maj3()};
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a->name() < b->name(); });
  return out;
}

}  // namespace isoimp::catalog
