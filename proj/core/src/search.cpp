#include "search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <numeric>

#include "isoimp/error.hpp"

namespace isoimp::detail {
namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

constexpr std::size_t kMaxSolutions = std::size_t{1} << 20;

constexpr Mask bit(unsigned i) { return Mask{1} << i; }

Mask all_of(std::size_t n) { return n >= 64 ? ~Mask{0} : bit(static_cast<unsigned>(n)) - 1; }

class Budget {
 public:
  Budget(const SearchBudget& budget, SearchStats& stats)
      : budget_(budget), stats_(stats), start_(Clock::now()) {}

  void node() {
    ++stats_.nodes;
    if (stats_.nodes > budget_.max_nodes)
      throw BudgetExceeded("search exceeded " + std::to_string(budget_.max_nodes) + " nodes");
    if ((stats_.nodes & 1023u) == 0) check_time();
  }

  void check_time() const {
    if (elapsed_ms() > budget_.max_ms)
      throw BudgetExceeded("search exceeded " + std::to_string(budget_.max_ms) + " ms");
  }

  std::uint64_t elapsed_ms() const {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_).count());
  }

 private:
  SearchBudget budget_;
  SearchStats& stats_;
  Clock::time_point start_;
};

// Everything the search needs to know about one operand, over the joint universe.
struct Compiled {
  std::size_t n = 0;
  bool satisfiable = false;
  Mask support = 0;          // essential variables
  std::vector<Mask> proj;    // satisfying assignments restricted to the support, sorted
  std::vector<std::uint8_t> unary;  // bit a: some solution has x = a
  std::vector<std::uint8_t> pair;   // [x*n+y] bit (2a+b): some solution has x = a, y = b
  std::vector<int> sym_prev;        // previous variable whose swap with this one fixes the set

  unsigned free_vars() const { return static_cast<unsigned>(n) - std::popcount(support); }
  bool contains(Mask m) const { return std::binary_search(proj.begin(), proj.end(), m); }
  std::uint8_t code(unsigned x, unsigned y) const { return pair[x * n + y]; }
};

class Enumerator {
 public:
  Enumerator(const ApplicationSet& s, Budget& budget) : s_(s), budget_(budget) {
    std::vector<int> pos(s.num_vars(), -1);
    for (const Application& app : s.apps())
      for (const Argument& a : app.args)
        if (a.is_variable() && pos[a.id()] < 0) {
          pos[a.id()] = static_cast<int>(order_.size());
          order_.push_back(a.id());
        }
    due_.resize(order_.size());
    for (const Application& app : s.apps()) {
      int last = -1;
      for (const Argument& a : app.args)
        if (a.is_variable()) last = std::max(last, pos[a.id()]);
      if (last < 0) {
        if (!app.evaluate([](VarId) { return false; })) constant_false_ = true;
      } else {
        due_[static_cast<std::size_t>(last)].push_back(&app);
      }
    }
  }

  const std::vector<VarId>& order() const { return order_; }

  std::vector<Mask> run() {
    out_.clear();
    if (!constant_false_) descend(0, 0);
    std::sort(out_.begin(), out_.end());
    return out_;
  }

 private:
  void descend(std::size_t depth, Mask m) {
    if (depth == order_.size()) {
      out_.push_back(m);
      if (out_.size() > kMaxSolutions)
        throw BudgetExceeded("more than " + std::to_string(kMaxSolutions) + " solutions to enumerate");
      if ((out_.size() & 4095u) == 0) budget_.check_time();
      return;
    }
    for (Mask value : {Mask{0}, Mask{1}}) {
      Mask next = m | (value << order_[depth]);
      bool ok = true;
      for (const Application* app : due_[depth])
        if (!app->evaluate([next](VarId v) { return (next >> v) & 1u; })) {
          ok = false;
          break;
        }
      if (ok) descend(depth + 1, next);
    }
  }

  const ApplicationSet& s_;
  Budget& budget_;
  std::vector<VarId> order_;
  std::vector<std::vector<const Application*>> due_;
  std::vector<Mask> out_;
  bool constant_false_ = false;
};

Mask swap_bits(Mask m, unsigned x, unsigned y) {
  Mask bx = (m >> x) & 1u, by = (m >> y) & 1u;
  if (bx == by) return m;
  return m ^ bit(x) ^ bit(y);
}

Compiled compile(const ApplicationSet& s, Budget& budget) {
  Compiled c;
  const std::size_t n = s.num_vars();
  c.n = n;
  c.unary.assign(n, 0);
  c.pair.assign(n * n, 0);
  c.sym_prev.assign(n, -1);

  Enumerator e(s, budget);
  std::vector<Mask> sols = e.run();
  c.satisfiable = !sols.empty();
  if (!c.satisfiable) return c;

  for (VarId v : e.order()) {
    for (Mask m : sols)
      if (!std::binary_search(sols.begin(), sols.end(), m ^ bit(v))) {
        c.support |= bit(v);
        break;
      }
  }
  c.proj.reserve(sols.size());
  for (Mask m : sols) c.proj.push_back(m & c.support);
  std::sort(c.proj.begin(), c.proj.end());
  c.proj.erase(std::unique(c.proj.begin(), c.proj.end()), c.proj.end());

  std::vector<unsigned> supp;
  for (unsigned v = 0; v < n; ++v) {
    if (c.support & bit(v)) {
      supp.push_back(v);
    } else {
      c.unary[v] = 0b11;
    }
  }
  for (Mask m : c.proj)
    for (unsigned v : supp) c.unary[v] |= static_cast<std::uint8_t>(1u << ((m >> v) & 1u));
  for (Mask m : c.proj)
    for (unsigned x : supp)
      for (unsigned y : supp) {
        unsigned a = (m >> x) & 1u, b = (m >> y) & 1u;
        c.pair[x * n + y] |= static_cast<std::uint8_t>(1u << (2 * a + b));
      }
  for (unsigned x = 0; x < n; ++x)
    for (unsigned y = 0; y < n; ++y) {
      if ((c.support & bit(x)) && (c.support & bit(y))) continue;
      std::uint8_t code = 0;
      if (x == y) {
        if (c.unary[x] & 1u) code |= 0b0001;
        if (c.unary[x] & 2u) code |= 0b1000;
      } else {
        for (unsigned a = 0; a < 2; ++a)
          for (unsigned b = 0; b < 2; ++b)
            if ((c.unary[x] >> a & 1u) && (c.unary[y] >> b & 1u))
              code |= static_cast<std::uint8_t>(1u << (2 * a + b));
      }
      c.pair[x * n + y] = code;
    }

  // Swap symmetry is an equivalence relation (transpositions conjugate), so
  // comparing against one representative per class suffices.
  std::vector<unsigned> reps;
  std::vector<int> last_in_class;
  int free_last = -1;
  for (unsigned v = 0; v < n; ++v) {
    if (!(c.support & bit(v))) {
      c.sym_prev[v] = free_last;
      free_last = static_cast<int>(v);
      continue;
    }
    bool placed = false;
    for (std::size_t r = 0; r < reps.size() && !placed; ++r) {
      unsigned w = reps[r];
      bool invariant = c.pair[w * n + w] == c.pair[v * n + v];
      for (std::size_t i = 0; invariant && i < c.proj.size(); ++i)
        invariant = c.contains(swap_bits(c.proj[i], w, v));
      if (invariant) {
        c.sym_prev[v] = last_in_class[r];
        last_in_class[r] = static_cast<int>(v);
        placed = true;
      }
    }
    if (!placed) {
      reps.push_back(v);
      last_in_class.push_back(static_cast<int>(v));
    }
  }
  return c;
}

// -1, 0, 1 comparing |proj_a|·2^free_a with |proj_b|·2^free_b.
int compare_counts(const Compiled& a, const Compiled& b) {
  if (!a.satisfiable || !b.satisfiable) return int{a.satisfiable} - int{b.satisfiable};
  std::uint64_t x = a.proj.size(), y = b.proj.size();
  unsigned fa = a.free_vars(), fb = b.free_vars();
  // Both mantissas stay below 2^21, so a shift of 42 or more decides on its own.
  if (fa >= fb) {
    if (fa - fb >= 42) return 1;
    x <<= (fa - fb);
  } else {
    if (fb - fa >= 42) return -1;
    y <<= (fb - fa);
  }
  return x < y ? -1 : (x > y ? 1 : 0);
}

// An application of U whose truth under π(S) is tested once all its variables have a preimage.
struct Check {
  const Application* app;
  std::vector<unsigned> targets;  // distinct variables
};

// Fails when some k domains jointly offer fewer than k values; values of a
// saturated prefix are removed from the domains that follow it.
bool cheap_all_different(std::vector<Mask>& domains, std::vector<unsigned>& order) {
  order.resize(domains.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](unsigned a, unsigned b) {
    return std::popcount(domains[a]) < std::popcount(domains[b]);
  });
  Mask seen = 0, hall = 0;
  int count = 0;
  for (unsigned i : order) {
    domains[i] &= ~hall;
    if (!domains[i]) return false;
    seen |= domains[i];
    ++count;
    int size = std::popcount(seen);
    if (size < count) return false;
    if (size == count) hall = seen;
  }
  return true;
}

class Searcher {
 public:
  Searcher(const Compiled& s, const Compiled& u, const std::vector<Check>& checks, Relation relation,
           const PruneOptions& prunes, const std::vector<Mask>& allowed, SearchStats& stats,
           Budget& budget)
      : s_(s),
        u_(u),
        checks_(checks),
        relation_(relation),
        prunes_(prunes),
        stats_(stats),
        budget_(budget),
        n_(static_cast<unsigned>(s.n)) {
    image_.assign(n_, -1);
    preimage_.assign(n_, -1);
    remaining_.resize(checks_.size());
    by_target_.resize(n_);
    for (std::size_t i = 0; i < checks_.size(); ++i) {
      remaining_[i] = checks_[i].targets.size();
      for (unsigned t : checks_[i].targets) by_target_[t].push_back(i);
    }
    if (prunes_.signature) {
      compat_.assign(16 * std::size_t{n_}, 0);
      for (unsigned code = 0; code < 16; ++code)
        for (unsigned t = 0; t < n_; ++t) {
          Mask m = 0;
          for (unsigned t2 = 0; t2 < n_; ++t2)
            if (accepts(static_cast<std::uint8_t>(code), u_.code(t, t2))) m |= bit(t2);
          compat_[code * n_ + t] = m;
        }
    }
    domains_.assign(std::size_t{n_} + 1, std::vector<Mask>(n_, 0));
    for (unsigned p = 0; p < n_; ++p) {
      Mask d = allowed[p];
      if (prunes_.signature) {
        for (unsigned t = 0; t < n_; ++t)
          if ((d & bit(t)) && !accepts(s_.unary[p], u_.unary[t])) d &= ~bit(t);
      }
      domains_[0][p] = d;
    }
  }

  std::optional<std::vector<VarId>> run() {
    if (!root_consistent()) return std::nullopt;
    if (!descend(0)) return std::nullopt;
    std::vector<VarId> out(n_);
    for (unsigned p = 0; p < n_; ++p) out[p] = static_cast<VarId>(image_[p]);
    return out;
  }

 private:
  bool accepts(std::uint8_t source, std::uint8_t target) const {
    if (relation_ == Relation::Equivalence) return source == target;
    return (source & ~target) == 0;
  }

  bool root_consistent() {
    std::vector<Mask>& level = domains_[0];
    for (unsigned p = 0; p < n_; ++p)
      if (!level[p]) {
        ++stats_.prune_signature;
        return false;
      }
    if (!all_different(0)) return false;
    // Applications without any variable were settled before the search started.
    return true;
  }

  bool all_different(unsigned level) {
    std::vector<Mask>& dom = domains_[level];
    scratch_.assign(dom.begin() + level, dom.end());
    if (!cheap_all_different(scratch_, order_)) {
      ++stats_.prune_matching;
      return false;
    }
    std::copy(scratch_.begin(), scratch_.end(), dom.begin() + level);
    // Dually, every unused target needs some remaining source.
    Mask unused = 0;
    for (unsigned t = 0; t < n_; ++t)
      if (preimage_[t] < 0) unused |= bit(t);
    transposed_.assign(n_, 0);
    for (unsigned q = level; q < n_; ++q)
      for (Mask d = dom[q]; d; d &= d - 1)
        transposed_[static_cast<unsigned>(std::countr_zero(d))] |= bit(q);
    scratch_.clear();
    for (Mask m = unused; m; m &= m - 1) scratch_.push_back(transposed_[std::countr_zero(m)]);
    if (!cheap_all_different(scratch_, order_)) {
      ++stats_.prune_matching;
      return false;
    }
    return true;
  }

  bool descend(unsigned p) {
    budget_.node();
    if (p == n_) return true;
    for (Mask cand = domains_[p][p]; cand; cand &= cand - 1) {
      const unsigned t = static_cast<unsigned>(std::countr_zero(cand));
      if (prunes_.symmetry) {
        int sp = s_.sym_prev[p];
        if (sp >= 0 && static_cast<int>(t) < image_[static_cast<unsigned>(sp)]) {
          ++stats_.prune_symmetry;
          continue;
        }
        int up = u_.sym_prev[t];
        if (up >= 0 && preimage_[static_cast<unsigned>(up)] < 0) {
          ++stats_.prune_symmetry;
          continue;
        }
      }
      image_[p] = static_cast<int>(t);
      preimage_[t] = static_cast<int>(p);
      bool ok = forward(p, t);
      if (ok) {
        ok = applications_hold(t) && descend(p + 1);
        release(t);
      }
      if (ok) return true;
      image_[p] = -1;
      preimage_[t] = -1;
    }
    return false;
  }

  bool forward(unsigned p, unsigned t) {
    const std::vector<Mask>& from = domains_[p];
    std::vector<Mask>& to = domains_[p + 1];
    for (unsigned q = p + 1; q < n_; ++q) {
      Mask d = from[q] & ~bit(t);
      if (prunes_.signature) d &= compat_[std::size_t{s_.code(p, q)} * n_ + t];
      if (!d) {
        ++stats_.prune_signature;
        return false;
      }
      to[q] = d;
    }
    return p + 1 == n_ || all_different(p + 1);
  }

  // Decrements the pending counts of checks touching t and evaluates those that completed.
  bool applications_hold(unsigned t) {
    bool ok = true;
    for (std::size_t i : by_target_[t])
      if (--remaining_[i] == 0 && ok && !holds(checks_[i])) ok = false;
    if (!ok) ++stats_.prune_application;
    return ok;
  }

  void release(unsigned t) {
    for (std::size_t i : by_target_[t]) ++remaining_[i];
  }

  // Does π(S) imply this application? Only the preimages of its variables matter.
  bool holds(const Check& c) {
    const std::size_t r = c.targets.size();
    std::vector<unsigned> src(r);
    std::vector<std::size_t> bound, unbound;
    for (std::size_t i = 0; i < r; ++i) {
      src[i] = static_cast<unsigned>(preimage_[c.targets[i]]);
      if (s_.support & bit(src[i])) {
        bound.push_back(i);
      } else {
        unbound.push_back(i);
      }
    }
    keys_.clear();
    for (Mask m : s_.proj) {
      Mask key = 0;
      for (std::size_t j = 0; j < bound.size(); ++j) key |= ((m >> src[bound[j]]) & 1u) << j;
      keys_.push_back(key);
    }
    std::sort(keys_.begin(), keys_.end());
    keys_.erase(std::unique(keys_.begin(), keys_.end()), keys_.end());

    Mask value = 0;  // bit = target variable index
    for (Mask key : keys_) {
      for (Mask spread = 0; spread < (Mask{1} << unbound.size()); ++spread) {
        value = 0;
        for (std::size_t j = 0; j < bound.size(); ++j)
          if ((key >> j) & 1u) value |= bit(c.targets[bound[j]]);
        for (std::size_t j = 0; j < unbound.size(); ++j)
          if ((spread >> j) & 1u) value |= bit(c.targets[unbound[j]]);
        if (!c.app->evaluate([value](VarId v) { return (value >> v) & 1u; })) return false;
      }
    }
    return true;
  }

  const Compiled& s_;
  const Compiled& u_;
  const std::vector<Check>& checks_;
  Relation relation_;
  PruneOptions prunes_;
  SearchStats& stats_;
  Budget& budget_;
  unsigned n_;

  std::vector<int> image_, preimage_;
  std::vector<std::size_t> remaining_;
  std::vector<std::vector<std::size_t>> by_target_;
  std::vector<Mask> compat_;
  std::vector<std::vector<Mask>> domains_;  // domains_[level][position]
  std::vector<Mask> scratch_, transposed_, keys_;
  std::vector<unsigned> order_;
};

std::vector<Check> collect_checks(const ApplicationSet& u, bool signature) {
  std::vector<Check> out;
  for (const Application& app : u.apps()) {
    Check c{&app, {}};
    for (const Argument& a : app.args)
      if (a.is_variable()) c.targets.push_back(a.id());
    std::sort(c.targets.begin(), c.targets.end());
    c.targets.erase(std::unique(c.targets.begin(), c.targets.end()), c.targets.end());
    // Pair signatures already decide applications on at most two variables.
    if (c.targets.empty() || (signature && c.targets.size() <= 2)) continue;
    out.push_back(std::move(c));
  }
  return out;
}

Decision finish(Decision d, bool answer, std::optional<std::vector<VarId>> images,
                const Budget& budget) {
  d.answer = answer;
  if (answer) d.witness = Permutation(std::move(*images));
  d.stats.elapsed_ms = budget.elapsed_ms();
  return d;
}

}  // namespace

Decision search(const ApplicationSet& s_in, const ApplicationSet& u_in, Relation relation,
                const SearchOptions& options) {
  auto [s, u] = over_union(s_in, u_in);
  const std::size_t n = s.num_vars();
  if (n > 64)
    throw BudgetExceeded("joint universe of " + std::to_string(n) +
                         " variables exceeds the search limit of 64");
  Decision d;
  d.universe = s.universe();
  d.stats.engine = "search";
  Budget budget(options.budget, d.stats);
  const PruneOptions& prunes = options.prunes;

  std::vector<VarId> identity(n);
  std::iota(identity.begin(), identity.end(), VarId{0});

  const Compiled cs = compile(s, budget);
  const Compiled cu = compile(u, budget);

  if (!cs.satisfiable) {
    bool yes = relation == Relation::Implication || !cu.satisfiable;
    if (!yes) ++d.stats.prune_count;
    return finish(std::move(d), yes, identity, budget);
  }
  if (!cu.satisfiable) return finish(std::move(d), false, std::nullopt, budget);

  const int cmp = compare_counts(cs, cu);
  if (relation == Relation::Equivalence ? cmp != 0 : (prunes.count && cmp > 0)) {
    ++d.stats.prune_count;
    return finish(std::move(d), false, std::nullopt, budget);
  }

  const std::vector<Check> checks = collect_checks(u, prunes.signature);
  const Mask every = all_of(n);
  std::vector<Mask> open(n, every);

  auto run = [&](const std::vector<Mask>& allowed) {
    Searcher searcher(cs, cu, checks, relation, prunes, allowed, d.stats, budget);
    return searcher.run();
  };

  if (prunes.normalize) {
    // Some witness routes the smaller support entirely into the larger one: swapping
    // an unmatched U-support target with an unused image of the S-support keeps the
    // implication, since neither side depends on the variable it loses.
    const Mask ss = cs.support, us = cu.support;
    const int ks = std::popcount(ss), ku = std::popcount(us);
    std::vector<Mask> allowed(n);
    for (unsigned p = 0; p < n; ++p) {
      const bool in_s = ss & bit(p);
      Mask m = every;
      if (relation == Relation::Equivalence) {
        m = in_s ? us : every & ~us;
      } else if (ks >= ku) {
        if (!in_s) m &= ~us;
      } else if (in_s) {
        m = us;
      }
      allowed[p] = m;
      d.stats.prune_normalize += static_cast<std::uint64_t>(std::popcount(every & ~m));
    }
    auto restricted = run(allowed);
    // For equivalences the restriction is forced on every witness, so it keeps the least one.
    if (!restricted || relation == Relation::Equivalence)
      return finish(std::move(d), restricted.has_value(), std::move(restricted), budget);
  }
  auto images = run(open);
  return finish(std::move(d), images.has_value(), std::move(images), budget);
}

}  // namespace isoimp::detail
