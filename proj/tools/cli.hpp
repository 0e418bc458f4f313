#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "isoimp/isoimp.hpp"

namespace isoimp::cli {

/// Exit codes shared by every subcommand.
enum Exit : int {
  kYes = 0,          // answer true, or a classification / generation finished
  kNo = 1,           // answer false
  kUsage = 2,        // bad arguments, unreadable or malformed input
  kBudget = 3,       // a search budget or enumeration limit was crossed
  kDisagreement = 4  // verify: search and oracle differ
};

/// The decision procedures `verify` checks against the oracle. Tests swap in faulty
/// ones to exercise the disagreement path.
struct Engines {
  std::function<Decision(const ApplicationSet&, const ApplicationSet&, const SearchOptions&)> iso_implies =
      [](const ApplicationSet& s, const ApplicationSet& u, const SearchOptions& o) {
        return isoimp::iso_implies(s, u, o);
      };
  std::function<Decision(const ApplicationSet&, const ApplicationSet&, const SearchOptions&)> isomorphic =
      [](const ApplicationSet& s, const ApplicationSet& u, const SearchOptions& o) {
        return isoimp::isomorphic(s, u, o);
      };
};

/// Runs one command. `args` excludes the program name. Reports go to `out`,
/// diagnostics and human-readable tables to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const Engines& engines = {});

/// FNV-1a, 64 bit.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace isoimp::cli
