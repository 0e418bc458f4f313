#include "isoimp/reductions.hpp"

#include <algorithm>
#include <numeric>

#include "isoimp/catalog.hpp"
#include "isoimp/classifier.hpp"
#include "isoimp/error.hpp"

namespace isoimp {

std::string_view to_string(GuardMode mode) {
  switch (mode) {
    case GuardMode::Plain: return "plain";
    case GuardMode::T: return "t";
    case GuardMode::F: return "f";
    case GuardMode::FT: return "ft";
    case GuardMode::NandF: return "nand-f";
    case GuardMode::NandFT: return "nand-ft";
  }
  return "?";
}

std::optional<GuardMode> parse_guard_mode(std::string_view text) {
  for (GuardMode m : {GuardMode::Plain, GuardMode::T, GuardMode::F, GuardMode::FT, GuardMode::NandF,
                      GuardMode::NandFT})
    if (to_string(m) == text) return m;
  return std::nullopt;
}

bool valid_or_mode(GuardMode mode) { return mode != GuardMode::F; }

bool valid_iff_mode(GuardMode mode) {
  return mode == GuardMode::Plain || mode == GuardMode::T || mode == GuardMode::F ||
         mode == GuardMode::FT;
}

bool valid_xor_mode(GuardMode mode) { return mode == GuardMode::Plain || mode == GuardMode::FT; }

namespace {

std::string name(std::string_view prefix, std::size_t j) { return std::string(prefix) + std::to_string(j); }

std::string name(char pool, std::size_t block, std::size_t j) {
  return std::string(1, pool) + "_" + std::to_string(block) + "_" + std::to_string(j);
}

std::vector<std::string> guards(GuardMode mode) {
  switch (mode) {
    case GuardMode::Plain: return {};
    case GuardMode::T: return {"t"};
    case GuardMode::F:
    case GuardMode::NandF: return {"f"};
    case GuardMode::FT:
    case GuardMode::NandFT: return {"f", "t"};
  }
  return {};
}

void require(bool ok, std::string_view family, GuardMode mode) {
  if (!ok)
    throw InvalidInstance("mode " + std::string(to_string(mode)) + " does not apply to the " +
                          std::string(family) + " family");
}

ConstraintPtr or_constraint(GuardMode mode) {
  switch (mode) {
    case GuardMode::Plain: return catalog::or2();
    case GuardMode::T: return catalog::t_or();
    case GuardMode::FT: return catalog::ft_or();
    case GuardMode::NandF: return catalog::f_nand();
    case GuardMode::NandFT: return catalog::ft_nand();
    case GuardMode::F: break;
  }
  require(false, "OR", mode);
  return nullptr;
}

ConstraintPtr iff_constraint(GuardMode mode) {
  switch (mode) {
    case GuardMode::Plain: return catalog::iff2();
    case GuardMode::T: return catalog::t_iff();
    case GuardMode::F: return catalog::f_iff();
    case GuardMode::FT: return catalog::ft_iff();
    default: break;
  }
  require(false, "IFF", mode);
  return nullptr;
}

ConstraintPtr xor_constraint(GuardMode mode) {
  if (mode == GuardMode::Plain) return catalog::xor2();
  if (mode == GuardMode::FT) return catalog::ft_xor();
  require(false, "XOR", mode);
  return nullptr;
}

// A builder whose universe starts with the guards, then the given variables.
SetBuilder guarded_builder(GuardMode mode, const std::vector<std::string>& vars) {
  std::vector<std::string> universe = guards(mode);
  universe.insert(universe.end(), vars.begin(), vars.end());
  return SetBuilder(std::move(universe));
}

void add_guarded(SetBuilder& b, const ConstraintPtr& c, GuardMode mode, const std::string& x,
                 const std::string& y) {
  std::vector<std::string> args = guards(mode);
  args.push_back(x);
  args.push_back(y);
  b.add(c, args);
}

void require_no_isolated(const Graph& g, std::string_view role) {
  if (g.num_vertices() == 0 || g.has_isolated_vertices())
    throw InvalidGraph(std::string(role) + " has an isolated vertex");
}

}  // namespace

ApplicationSet graph_to_or_set(const Graph& g, GuardMode mode, std::string_view prefix) {
  require_no_isolated(g, "graph");
  const ConstraintPtr c = or_constraint(mode);
  std::vector<std::string> vars;
  for (std::size_t v = 1; v <= g.num_vertices(); ++v) vars.push_back(name(prefix, v));
  SetBuilder b = guarded_builder(mode, vars);
  for (const auto& [a, z] : g.edges()) add_guarded(b, c, mode, vars[a], vars[z]);
  return b.build();
}

InstancePair subgraph_instance(const Graph& g, const Graph& h, GuardMode mode) {
  require_no_isolated(g, "G");
  require_no_isolated(h, "H");
  return {graph_to_or_set(g, mode, "x_1_"), graph_to_or_set(h, mode, "x_")};
}

bool subgraph_bruteforce(const Graph& g, const Graph& h) {
  require_no_isolated(g, "G");
  require_no_isolated(h, "H");
  const std::size_t ng = g.num_vertices(), nh = h.num_vertices();
  if (ng > 8) throw BudgetExceeded("subgraph enumeration is limited to 8 host vertices");
  if (nh > ng || h.edges().size() > g.edges().size()) return false;
  // Extend an injection V(H) → V(G) vertex by vertex, checking edges to earlier vertices.
  std::vector<int> image(nh, -1);
  std::vector<bool> used(ng, false);
  auto extend = [&](auto&& self, unsigned v) -> bool {
    if (v == nh) return true;
    for (unsigned w = 0; w < ng; ++w) {
      if (used[w]) continue;
      bool ok = true;
      for (unsigned u = 0; u < v && ok; ++u)
        if (h.has_edge(u, v) && !g.has_edge(static_cast<unsigned>(image[u]), w)) ok = false;
      if (!ok) continue;
      image[v] = static_cast<int>(w);
      used[w] = true;
      if (self(self, v + 1)) return true;
      used[w] = false;
    }
    return false;
  };
  return extend(extend, 0);
}

InstancePair hampath_instance(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n < 2 || !g.connected()) throw InvalidGraph("needs a connected graph on at least two vertices");
  SetBuilder chain;
  for (std::size_t j = 1; j <= n; ++j) chain.declare(name("y_", j));
  for (std::size_t j = 1; j < n; ++j) chain.add(catalog::or2(), {name("y_", j), name("y_", j + 1)});
  return {graph_to_or_set(g, GuardMode::Plain, "y_1_"), chain.build()};
}

bool hamiltonian_path_bruteforce(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n > 10) throw BudgetExceeded("path enumeration is limited to 10 vertices");
  if (n == 0) return false;
  std::vector<unsigned> order(n);
  std::iota(order.begin(), order.end(), 0u);
  do {
    bool ok = true;
    for (std::size_t i = 0; i + 1 < n && ok; ++i) ok = g.has_edge(order[i], order[i + 1]);
    if (ok) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

void ThreePartitionInstance::validate() const {
  if (m == 0 || bound == 0) throw InvalidInstance("m and B must be positive");
  if (sizes.size() != 3 * std::size_t{m})
    throw InvalidInstance("expected " + std::to_string(3 * m) + " sizes, got " +
                          std::to_string(sizes.size()));
  std::size_t total = 0;
  for (unsigned s : sizes) {
    if (s == 0) throw InvalidInstance("sizes must be positive");
    if (strict && !(4 * s > bound && 2 * s < bound))
      throw InvalidInstance("size " + std::to_string(s) + " violates B/4 < s < B/2");
    total += s;
  }
  if (total != std::size_t{m} * bound)
    throw InvalidInstance("sizes sum to " + std::to_string(total) + ", expected m*B = " +
                          std::to_string(std::size_t{m} * bound));
}

namespace {

// Consecutive slices of a pool of m*B names, one per size.
std::vector<std::vector<std::string>> slices(const std::vector<std::string>& pool,
                                             const std::vector<unsigned>& sizes) {
  std::vector<std::vector<std::string>> out;
  std::size_t at = 0;
  for (unsigned s : sizes) {
    out.emplace_back(pool.begin() + static_cast<std::ptrdiff_t>(at),
                     pool.begin() + static_cast<std::ptrdiff_t>(at + s));
    at += s;
  }
  return out;
}

std::vector<std::string> pool(char letter, const ThreePartitionInstance& inst) {
  std::vector<std::string> out;
  for (unsigned i = 1; i <= inst.m; ++i)
    for (unsigned j = 1; j <= inst.bound; ++j) out.push_back(name(letter, i, j));
  return out;
}

}  // namespace

InstancePair three_partition_iff_instance(const ThreePartitionInstance& inst, GuardMode mode) {
  inst.validate();
  const ConstraintPtr c = iff_constraint(mode);
  const std::vector<std::string> xs = pool('x', inst);
  auto build = [&](const std::vector<std::vector<std::string>>& blocks) {
    SetBuilder b = guarded_builder(mode, xs);
    for (const auto& block : blocks)
      for (std::size_t j = 0; j < block.size(); ++j)
        for (std::size_t l = j + 1; l < block.size(); ++l) add_guarded(b, c, mode, block[j], block[l]);
    return b.build();
  };
  std::vector<unsigned> even(inst.m, inst.bound);
  return {build(slices(xs, even)), build(slices(xs, inst.sizes))};
}

InstancePair three_partition_xor_instance(const ThreePartitionInstance& inst, GuardMode mode) {
  inst.validate();
  const ConstraintPtr c = xor_constraint(mode);
  const std::vector<std::string> xs = pool('x', inst), ys = pool('y', inst);
  std::vector<std::string> vars = xs;
  vars.insert(vars.end(), ys.begin(), ys.end());
  auto build = [&](const std::vector<unsigned>& sizes) {
    SetBuilder b = guarded_builder(mode, vars);
    auto xb = slices(xs, sizes), yb = slices(ys, sizes);
    for (std::size_t a = 0; a < sizes.size(); ++a)
      for (const std::string& x : xb[a])
        for (const std::string& y : yb[a]) add_guarded(b, c, mode, x, y);
    return b.build();
  };
  return {build(std::vector<unsigned>(inst.m, inst.bound)), build(inst.sizes)};
}

bool three_partition_bruteforce(const ThreePartitionInstance& inst) {
  inst.validate();
  if (inst.sizes.size() > 12) throw BudgetExceeded("partition search is limited to 12 elements");
  std::vector<unsigned> sizes = inst.sizes;
  std::sort(sizes.rbegin(), sizes.rend());
  std::vector<unsigned> load(inst.m, 0);
  auto place = [&](auto&& self, std::size_t k) -> bool {
    if (k == sizes.size()) return true;
    for (unsigned i = 0; i < inst.m; ++i) {
      if (load[i] + sizes[k] > inst.bound) continue;
      // Empty groups are interchangeable; trying one is enough.
      if (load[i] == 0 && i > 0 && load[i - 1] == 0) break;
      load[i] += sizes[k];
      if (self(self, k + 1)) return true;
      load[i] -= sizes[k];
    }
    return false;
  };
  return place(place, 0);
}

const std::vector<ImplementationTarget>& implementation_targets() {
  static const std::vector<ImplementationTarget> targets = [] {
    std::vector<ImplementationTarget> out;
    auto add = [&](std::string description, const ConstraintPtr& c, std::vector<std::string> args) {
      SetBuilder b(args);
      b.add(c, args);
      out.push_back({std::move(description), b.build()});
    };
    add("t & (x | y)", catalog::t_or(), {"t", "x", "y"});
    add("~f & t & (x | y)", catalog::ft_or(), {"f", "t", "x", "y"});
    add("~f & (~x | ~y)", catalog::f_nand(), {"f", "x", "y"});
    add("~f & t & (~x | ~y)", catalog::ft_nand(), {"f", "t", "x", "y"});
    add("x <-> y", catalog::iff2(), {"x", "y"});
    add("t & (x <-> y)", catalog::t_iff(), {"t", "x", "y"});
    add("~f & (x <-> y)", catalog::f_iff(), {"f", "x", "y"});
    add("~f & t & (x <-> y)", catalog::ft_iff(), {"f", "t", "x", "y"});
    add("x ^ y", catalog::xor2(), {"x", "y"});
    add("~f & t & (x ^ y)", catalog::ft_xor(), {"f", "t", "x", "y"});
    return out;
  }();
  return targets;
}

namespace {

using SatMask = std::uint64_t;  // bit r: assignment with rank r satisfies

SatMask sat_mask(const Application& app, std::size_t n) {
  SatMask m = 0;
  for (std::uint64_t r = 0; r < (std::uint64_t{1} << n); ++r)
    if (app.evaluate([r, n](VarId v) { return (r >> (n - 1 - v)) & 1u; })) m |= SatMask{1} << r;
  return m;
}

}  // namespace

Implementation find_implementation(const Constraint& c, const ImplementationBounds& bounds) {
  if (constraint_properties(c).literal_conjunction)
    throw NotApplicable(c.name() + " is a conjunction of literals");
  const auto shared = std::make_shared<const Constraint>(c);
  const auto& targets = implementation_targets();
  for (std::size_t ti = 0; ti < targets.size(); ++ti) {
    const ApplicationSet& target = targets[ti].set;
    const std::size_t n = target.num_vars();
    if (n > bounds.max_vars) continue;
    const SatMask goal = sat_mask(target.apps().front(), n);

    // Argument tuples in lexicographic order; keep those the target implies.
    std::vector<Application> cands;
    std::vector<SatMask> masks;
    const unsigned k = c.arity();
    std::vector<VarId> digits(k, 0);
    for (;;) {
      Application app{shared, {}};
      for (VarId d : digits) app.args.push_back(Argument::var(d));
      SatMask m = sat_mask(app, n);
      if ((m & goal) == goal) {
        cands.push_back(std::move(app));
        masks.push_back(m);
      }
      std::size_t pos = k;
      while (pos > 0 && ++digits[pos - 1] == n) digits[--pos] = 0;
      if (pos == 0) break;
    }

    std::vector<std::size_t> pick;
    auto choose = [&](auto&& self, std::size_t from, std::size_t size, SatMask acc) -> bool {
      if (pick.size() == size) return acc == goal;
      for (std::size_t i = from; i < cands.size(); ++i) {
        pick.push_back(i);
        if (self(self, i + 1, size, acc & masks[i])) return true;
        pick.pop_back();
      }
      return false;
    };
    const SatMask everything = n == 6 ? ~SatMask{0} : (SatMask{1} << (std::size_t{1} << n)) - 1;
    for (std::size_t size = 1; size <= bounds.max_apps; ++size) {
      pick.clear();
      if (choose(choose, 0, size, everything)) {
        std::vector<Application> apps;
        for (std::size_t i : pick) apps.push_back(cands[i]);
        return Implementation{ti, ApplicationSet(target.universe(), std::move(apps))};
      }
    }
  }
  throw BoundExhausted("no implementation of " + c.name() + " within " +
                       std::to_string(bounds.max_apps) + " applications over " +
                       std::to_string(bounds.max_vars) + " variables");
}

namespace {

ApplicationSet rename_o_side(const ApplicationSet& o, std::size_t index, std::size_t n,
                             SetBuilder& b) {
  const ConstraintPtr imp = catalog::imp2();
  for (const Application& app : o.apps()) {
    if (!app.constraint->same_function(*imp))
      throw InvalidInstance("O-side application " + to_string(app, o) + " is not an implication");
    std::vector<std::string> args;
    for (const Argument& a : app.args)
      args.push_back(a.is_variable() ? name('x', index, a.id() + 1) : (a.constant_value() ? "1" : "0"));
    b.add(imp, args);
  }
  for (std::size_t j = o.num_vars() + 1; j <= n; ++j) {
    b.add(imp, {name('x', index, 1), name('x', index, j)});
    b.add(imp, {name('x', index, j), name('x', index, 1)});
  }
  return b.build();
}

void check_component(const WagnerComponent& c) {
  if (c.o_side.num_vars() == 0) throw InvalidInstance("O-side has no variables");
  require_no_isolated(c.e_side, "E-side graph");
}

}  // namespace

InstancePair wagner_o_instance(const WagnerComponent& component, std::size_t index, std::size_t n) {
  check_component(component);
  if (n < component.o_side.num_vars()) throw InvalidInstance("padding width below the O-side size");
  std::vector<std::string> xs;
  for (std::size_t j = 1; j <= n; ++j) xs.push_back(name('x', index, j));
  SetBuilder o(xs);
  ApplicationSet left = rename_o_side(component.o_side, index, n, o);
  SetBuilder target(xs);
  for (const std::string& a : xs)
    for (const std::string& z : xs) target.add(catalog::imp2(), {a, z});
  return {std::move(left), target.build()};
}

WagnerInstance wagner_compose(const std::vector<WagnerComponent>& components) {
  if (components.empty()) throw InvalidInstance("wagner_compose needs at least one component");
  WagnerInstance out;
  for (const WagnerComponent& c : components) {
    check_component(c);
    out.o_vars.push_back(c.o_side.num_vars());
    out.e_vars.push_back(c.e_side.num_vertices());
    out.n = std::max({out.n, c.o_side.num_vars(), c.e_side.num_vertices() + 2});
  }
  const std::size_t n = out.n;
  const ConstraintPtr imp = catalog::imp2(), disj = catalog::or2();

  SetBuilder s;
  for (std::size_t i = 1; i <= components.size(); ++i) {
    for (std::size_t j = 1; j <= n; ++j) s.declare(name('x', i, j));
    for (std::size_t j = 1; j <= n; ++j) s.declare(name('y', i, j));
  }
  for (std::size_t i = 1; i <= components.size(); ++i) {
    const WagnerComponent& c = components[i - 1];
    rename_o_side(c.o_side, i, n, s);
    const std::size_t ne = c.e_side.num_vertices();
    for (const auto& [a, z] : c.e_side.edges()) s.add(disj, {name('y', i, a + 1), name('y', i, z + 1)});
    for (std::size_t j = 1; j <= ne; ++j) s.add(disj, {name('y', i, j), name('y', i, ne + 1)});
    for (std::size_t j = ne + 1; j < n; ++j) s.add(disj, {name('y', i, j), name('y', i, j + 1)});
    for (std::size_t j = 1; j <= n; ++j)
      for (std::size_t l = 1; l <= n; ++l) s.add(imp, {name('x', i, j), name('y', i, l)});
  }

  SetBuilder u;
  for (std::size_t j = 1; j <= n; ++j) u.declare(name("x_", j));
  for (std::size_t j = 1; j <= n; ++j) u.declare(name("y_", j));
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t l = 1; l <= n; ++l) u.add(imp, {name("x_", j), name("x_", l)});
  for (std::size_t j = 1; j < n; ++j) u.add(disj, {name("y_", j), name("y_", j + 1)});
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t l = 1; l <= n; ++l) u.add(imp, {name("x_", j), name("y_", l)});

  out.left = s.build();
  out.right = u.build();
  return out;
}

}  // namespace isoimp
