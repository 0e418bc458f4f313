#include "isoimp/isoimp.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <numeric>
#include <stdexcept>

#include "isoimp/classifier.hpp"
#include "isoimp/error.hpp"
#include "search.hpp"

namespace isoimp {

namespace {

std::vector<VarId> identity_images(std::size_t n) {
  std::vector<VarId> out(n);
  std::iota(out.begin(), out.end(), VarId{0});
  return out;
}

// Truth vector indexed by mask, bit v holding the value of variable v.
std::vector<bool> truth_vector(const ApplicationSet& s) {
  const std::size_t n = s.num_vars();
  std::vector<bool> out(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < out.size(); ++m) {
    bool ok = true;
    for (const Application& app : s.apps())
      if (!app.evaluate([m](VarId v) { return (m >> v) & 1u; })) {
        ok = false;
        break;
      }
    out[m] = ok;
  }
  return out;
}

// First π in lexicographic order with π(S) ⇒ U (or ≡ U when `both_ways`).
std::optional<Permutation> oracle_scan(const ApplicationSet& s_in, const ApplicationSet& u_in,
                                       const Limits& limits, bool both_ways) {
  auto [s, u] = over_union(s_in, u_in);
  const std::size_t n = s.num_vars();
  if (n > limits.max_oracle_vars)
    throw BudgetExceeded("joint universe of " + std::to_string(n) +
                         " variables exceeds the oracle limit of " +
                         std::to_string(limits.max_oracle_vars));
  const std::vector<bool> ts = truth_vector(s);
  const std::vector<bool> tu = truth_vector(u);
  std::vector<VarId> images = identity_images(n);
  do {
    // a satisfies π(S) iff a∘π satisfies S.
    bool ok = true;
    for (std::uint64_t a = 0; a < ts.size() && ok; ++a) {
      std::uint64_t b = 0;
      for (std::size_t v = 0; v < n; ++v) b |= ((a >> images[v]) & 1u) << v;
      if (ts[b] && !tu[a]) ok = false;
      if (both_ways && tu[a] && !ts[b]) ok = false;
    }
    if (ok) return Permutation(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return std::nullopt;
}

bool literal_constraint(const Constraint& c) {
  if (c.arity() > Limits{}.max_classifier_arity) return false;
  return constraint_properties(c).literal_conjunction;
}

enum class Kind { Positive, Negative, Free };

Kind kind_of(const LiteralForm& f, VarId v) {
  auto it = std::lower_bound(f.literals.begin(), f.literals.end(), std::pair<VarId, bool>{v, false});
  if (it == f.literals.end() || it->first != v) return Kind::Free;
  return it->second ? Kind::Positive : Kind::Negative;
}

// Lexicographically least bijection pairing source kinds with compatible target
// kinds. For implication a literal source may also land on a free target; for
// equivalence kinds must match.
std::vector<VarId> least_pairing(const std::vector<Kind>& source, const std::vector<Kind>& target,
                                 bool exact) {
  const std::size_t n = source.size();
  auto allowed = [exact](Kind from, Kind to) {
    if (from == to) return true;
    return !exact && to == Kind::Free;
  };
  // Remaining counts per kind; feasible iff every literal target still has enough same-kind sources.
  std::array<int, 3> src{}, dst{};
  for (Kind k : source) ++src[static_cast<int>(k)];
  for (Kind k : target) ++dst[static_cast<int>(k)];
  auto feasible = [&] {
    if (exact) return src == dst;
    return dst[0] <= src[0] && dst[1] <= src[1];
  };
  // Feasibility depends only on kinds, so the least usable target is the least
  // feasible head among the per-kind index queues.
  std::array<std::vector<VarId>, 3> queue;
  for (std::size_t t = 0; t < n; ++t) queue[static_cast<int>(target[t])].push_back(static_cast<VarId>(t));
  std::array<std::size_t, 3> head{};
  std::vector<VarId> out(n);
  for (std::size_t p = 0; p < n; ++p) {
    const int from = static_cast<int>(source[p]);
    int best = -1;
    for (int to = 0; to < 3; ++to) {
      if (head[to] == queue[to].size() || !allowed(source[p], static_cast<Kind>(to))) continue;
      if (best >= 0 && queue[best][head[best]] < queue[to][head[to]]) continue;
      --src[from];
      --dst[to];
      if (feasible()) best = to;
      ++src[from];
      ++dst[to];
    }
    if (best < 0) throw std::logic_error("literal pairing became infeasible");
    --src[from];
    --dst[best];
    out[p] = queue[best][head[best]++];
  }
  return out;
}

Decision fast_decision(const ApplicationSet& s_in, const ApplicationSet& u_in, bool exact) {
  const auto start = std::chrono::steady_clock::now();
  auto [s, u] = over_union(s_in, u_in);
  const std::size_t n = s.num_vars();
  Decision d;
  d.universe = s.universe();
  d.stats.engine = "fast";
  const LiteralForm fs = literal_form(s);
  const LiteralForm fu = literal_form(u);

  auto done = [&](bool answer, std::optional<std::vector<VarId>> images) {
    d.answer = answer;
    if (answer) d.witness = Permutation(std::move(*images));
    d.stats.elapsed_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
            .count());
    return d;
  };

  if (exact) {
    if (fs.contradictory || fu.contradictory)
      return done(fs.contradictory && fu.contradictory, identity_images(n));
    if (fs.positive() != fu.positive() || fs.negative() != fu.negative())
      return done(false, std::nullopt);
  } else {
    if (fs.contradictory) return done(true, identity_images(n));
    if (fu.tautology()) return done(true, identity_images(n));
    if (fs.tautology()) return done(false, std::nullopt);
    if (fu.contradictory) return done(false, std::nullopt);
    if (fs.positive() < fu.positive() || fs.negative() < fu.negative())
      return done(false, std::nullopt);
  }
  std::vector<Kind> source(n), target(n);
  for (VarId v = 0; v < n; ++v) {
    source[v] = kind_of(fs, v);
    target[v] = kind_of(fu, v);
  }
  return done(true, least_pairing(source, target, exact));
}

Decision oracle_decision(const ApplicationSet& s, const ApplicationSet& u, const Limits& limits,
                         bool both_ways) {
  const auto start = std::chrono::steady_clock::now();
  Decision d;
  d.universe = union_universe(s, u);
  d.stats.engine = "oracle";
  d.witness = oracle_scan(s, u, limits, both_ways);
  d.answer = d.witness.has_value();
  d.stats.elapsed_ms = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
          .count());
  return d;
}

Decision dispatch(const ApplicationSet& s, const ApplicationSet& u, const SearchOptions& options,
                  bool exact) {
  switch (options.engine) {
    case Engine::Oracle:
      return oracle_decision(s, u, options.limits, exact);
    case Engine::Fast:
      if (!literal_language(s, u))
        throw NotApplicable("the fast path needs every constraint to be a literal conjunction");
      return fast_decision(s, u, exact);
    case Engine::Search:
      break;
    case Engine::Auto:
      if (literal_language(s, u)) return fast_decision(s, u, exact);
      break;
  }
  return detail::search(s, u, exact ? detail::Relation::Equivalence : detail::Relation::Implication,
                        options);
}

}  // namespace

std::size_t LiteralForm::positive() const {
  return static_cast<std::size_t>(
      std::count_if(literals.begin(), literals.end(), [](const auto& l) { return l.second; }));
}

std::size_t LiteralForm::negative() const { return literals.size() - positive(); }

LiteralForm literal_form(const ApplicationSet& s) {
  LiteralForm out;
  for (const Application& app : s.apps()) {
    const Constraint& c = *app.constraint;
    if (!literal_constraint(c))
      throw NotLiteralConjunction(c.name() + " is not a conjunction of literals");
    const std::vector<std::uint64_t> sat = c.satisfying();
    if (sat.empty()) {
      out.contradictory = true;
      continue;
    }
    const unsigned k = c.arity();
    const std::uint64_t all = (std::uint64_t{1} << k) - 1;
    std::uint64_t ones = all, zeros = all;
    for (std::uint64_t t : sat) {
      ones &= t;
      zeros &= ~t;
    }
    for (unsigned i = 0; i < k; ++i) {
      const std::uint64_t b = std::uint64_t{1} << (k - 1 - i);  // argument i is read MSB-first
      if (!((ones | zeros) & b)) continue;
      const bool polarity = ones & b;
      const Argument& a = app.args[i];
      if (a.is_variable()) {
        out.literals.emplace_back(a.id(), polarity);
      } else if (a.constant_value() != polarity) {
        out.contradictory = true;
      }
    }
  }
  std::sort(out.literals.begin(), out.literals.end());
  out.literals.erase(std::unique(out.literals.begin(), out.literals.end()), out.literals.end());
  for (std::size_t i = 1; i < out.literals.size(); ++i)
    if (out.literals[i].first == out.literals[i - 1].first) out.contradictory = true;
  if (out.contradictory) out.literals.clear();
  return out;
}

bool literal_language(const ApplicationSet& s, const ApplicationSet& u) {
  for (const ApplicationSet* side : {&s, &u})
    for (const ConstraintPtr& c : side->constraints())
      if (!literal_constraint(*c)) return false;
  return true;
}

bool iso_implies_literal(const ApplicationSet& s, const ApplicationSet& u) {
  return fast_decision(s, u, false).answer;
}

Decision iso_implies_fast(const ApplicationSet& s, const ApplicationSet& u) {
  return fast_decision(s, u, false);
}

Decision iso_implies(const ApplicationSet& s, const ApplicationSet& u, const SearchOptions& options) {
  return dispatch(s, u, options, false);
}

Decision isomorphic(const ApplicationSet& s, const ApplicationSet& u, const SearchOptions& options) {
  return dispatch(s, u, options, true);
}

bool iso_implies_oracle(const ApplicationSet& s, const ApplicationSet& u, const Limits& limits) {
  return oracle_scan(s, u, limits, false).has_value();
}

std::optional<Permutation> oracle_witness(const ApplicationSet& s, const ApplicationSet& u,
                                          const Limits& limits) {
  return oracle_scan(s, u, limits, false);
}

bool isomorphic_oracle(const ApplicationSet& s, const ApplicationSet& u, const Limits& limits) {
  return oracle_scan(s, u, limits, true).has_value();
}

}  // namespace isoimp
