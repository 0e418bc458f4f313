#include "isoimp/application_set.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "isoimp/error.hpp"

namespace isoimp {

ApplicationSet::ApplicationSet(std::vector<std::string> universe, std::vector<Application> apps)
    : universe_(std::move(universe)), apps_(std::move(apps)) {
  {
    std::vector<std::string_view> names(universe_.begin(), universe_.end());
    std::sort(names.begin(), names.end());
    if (std::adjacent_find(names.begin(), names.end()) != names.end())
      throw DomainError("duplicate variable in universe");
  }
  for (const Application& app : apps_) {
    if (!app.constraint) throw DomainError("application without constraint");
    if (app.args.size() != app.constraint->arity())
      throw DomainError("application of " + app.name() + " has " + std::to_string(app.args.size()) +
                        " arguments, arity is " + std::to_string(app.constraint->arity()));
    for (const Argument& a : app.args)
      if (a.is_variable() && a.id() >= universe_.size())
        throw DomainError("application of " + app.name() + " uses a variable outside the universe");
  }
  std::sort(apps_.begin(), apps_.end());
  apps_.erase(std::unique(apps_.begin(), apps_.end()), apps_.end());
}

std::optional<VarId> ApplicationSet::find(std::string_view name) const {
  for (VarId v = 0; v < universe_.size(); ++v)
    if (universe_[v] == name) return v;
  return std::nullopt;
}

std::vector<VarId> ApplicationSet::occurring() const {
  std::vector<bool> seen(universe_.size(), false);
  for (const Application& app : apps_)
    for (const Argument& a : app.args)
      if (a.is_variable()) seen[a.id()] = true;
  std::vector<VarId> out;
  for (VarId v = 0; v < seen.size(); ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

std::vector<ConstraintPtr> ApplicationSet::constraints() const {
  std::map<std::string, ConstraintPtr> by_name;
  for (const Application& app : apps_) by_name.emplace(app.name(), app.constraint);
  std::vector<ConstraintPtr> out;
  for (auto& [name, c] : by_name) out.push_back(c);
  return out;
}

ApplicationSet ApplicationSet::over(const std::vector<std::string>& universe) const {
  std::unordered_map<std::string_view, VarId> index;
  for (VarId v = 0; v < universe.size(); ++v) index.emplace(universe[v], v);
  std::vector<VarId> remap(universe_.size());
  for (VarId v = 0; v < universe_.size(); ++v) {
    auto it = index.find(universe_[v]);
    if (it == index.end()) throw DomainError("variable " + universe_[v] + " missing from target universe");
    remap[v] = it->second;
  }
  std::vector<Application> apps;
  apps.reserve(apps_.size());
  for (const Application& app : apps_) {
    Application copy = app;
    for (Argument& a : copy.args)
      if (a.is_variable()) a = Argument::var(remap[a.id()]);
    apps.push_back(std::move(copy));
  }
  return ApplicationSet(universe, std::move(apps));
}

std::vector<std::string> union_universe(const ApplicationSet& left, const ApplicationSet& right) {
  std::vector<std::string> out = left.universe();
  std::unordered_set<std::string_view> seen(out.begin(), out.end());
  for (const std::string& name : right.universe())
    if (!seen.count(name)) out.push_back(name);
  return out;
}

std::pair<ApplicationSet, ApplicationSet> over_union(const ApplicationSet& left,
                                                     const ApplicationSet& right) {
  std::vector<std::string> universe = union_universe(left, right);
  return {left.over(universe), right.over(universe)};
}

SetBuilder::SetBuilder(std::vector<std::string> universe) {
  for (auto& name : universe) declare(name);
}

VarId SetBuilder::declare(const std::string& name) {
  auto [it, fresh] = index_.emplace(name, static_cast<VarId>(universe_.size()));
  if (fresh) universe_.push_back(name);
  return it->second;
}

SetBuilder& SetBuilder::add(const ConstraintPtr& constraint,
                            std::initializer_list<std::string_view> args) {
  return add(constraint, std::vector<std::string>(args.begin(), args.end()));
}

SetBuilder& SetBuilder::add(const ConstraintPtr& constraint, const std::vector<std::string>& args) {
  Application app{constraint, {}};
  for (const std::string& name : args) {
    if (name == "0")
      app.args.push_back(Argument::zero());
    else if (name == "1")
      app.args.push_back(Argument::one());
    else
      app.args.push_back(Argument::var(declare(name)));
  }
  apps_.push_back(std::move(app));
  return *this;
}

Assignment Assignment::from_rank(std::size_t num_vars, std::uint64_t rank) {
  std::vector<bool> values(num_vars);
  for (std::size_t v = 0; v < num_vars; ++v) values[v] = (rank >> (num_vars - 1 - v)) & 1u;
  return Assignment(std::move(values));
}

bool Assignment::at(VarId v) const {
  if (v >= values_.size()) throw DomainError("variable outside assignment domain");
  return values_[v];
}

Assignment Assignment::flipped() const {
  std::vector<bool> values = values_;
  values.flip();
  return Assignment(std::move(values));
}

std::string Assignment::bits() const {
  std::string out;
  for (bool b : values_) out.push_back(b ? '1' : '0');
  return out;
}

Permutation::Permutation(std::vector<VarId> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (VarId v : images_) {
    if (v >= images_.size() || hit[v]) throw DomainError("image list is not a permutation");
    hit[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<VarId> images(n);
  for (VarId v = 0; v < n; ++v) images[v] = v;
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(std::size_t n, VarId a, VarId b) {
  std::vector<VarId> images = identity(n).images();
  if (a >= n || b >= n) throw DomainError("transposition outside universe");
  std::swap(images[a], images[b]);
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<VarId> inv(images_.size());
  for (VarId v = 0; v < images_.size(); ++v) inv[images_[v]] = v;
  return Permutation(std::move(inv));
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) throw DomainError("composing permutations of different size");
  std::vector<VarId> images(inner.size());
  for (VarId v = 0; v < images.size(); ++v) images[v] = outer(inner(v));
  return Permutation(std::move(images));
}

bool eval_application(const Application& app, const Assignment& a) {
  return app.evaluate([&](VarId v) { return a.at(v); });
}

bool eval_set(const ApplicationSet& s, const Assignment& a) {
  if (a.size() != s.num_vars()) throw DomainError("assignment domain differs from set universe");
  for (const Application& app : s.apps())
    if (!eval_application(app, a)) return false;
  return true;
}

namespace {

void check_enumerable(const ApplicationSet& s, const Limits& limits) {
  if (s.num_vars() > limits.max_enumeration_vars)
    throw BudgetExceeded("universe of " + std::to_string(s.num_vars()) +
                         " variables exceeds the enumeration limit of " +
                         std::to_string(limits.max_enumeration_vars));
}

}  // namespace

std::vector<Assignment> sat_assignments(const ApplicationSet& s, const Limits& limits) {
  check_enumerable(s, limits);
  std::vector<Assignment> out;
  const std::uint64_t total = std::uint64_t{1} << s.num_vars();
  for (std::uint64_t rank = 0; rank < total; ++rank) {
    Assignment a = Assignment::from_rank(s.num_vars(), rank);
    if (eval_set(s, a)) out.push_back(std::move(a));
  }
  return out;
}

std::uint64_t count_sat(const ApplicationSet& s, const Limits& limits) {
  check_enumerable(s, limits);
  std::uint64_t count = 0;
  const std::uint64_t total = std::uint64_t{1} << s.num_vars();
  for (std::uint64_t rank = 0; rank < total; ++rank)
    if (eval_set(s, Assignment::from_rank(s.num_vars(), rank))) ++count;
  return count;
}

ApplicationSet apply_permutation(const Permutation& pi, const ApplicationSet& s) {
  if (pi.size() != s.num_vars()) throw DomainError("permutation domain differs from set universe");
  std::vector<Application> apps;
  apps.reserve(s.size());
  for (const Application& app : s.apps()) {
    Application copy = app;
    for (Argument& a : copy.args)
      if (a.is_variable()) a = Argument::var(pi(a.id()));
    apps.push_back(std::move(copy));
  }
  return ApplicationSet(s.universe(), std::move(apps));
}

ApplicationSet complement_set(const ApplicationSet& s) {
  std::map<std::string, ConstraintPtr> complemented;
  std::vector<Application> apps;
  apps.reserve(s.size());
  for (const Application& app : s.apps()) {
    auto [it, fresh] = complemented.try_emplace(app.name());
    if (fresh) it->second = std::make_shared<const Constraint>(complement_constraint(*app.constraint));
    apps.push_back(Application{it->second, app.args});
  }
  return ApplicationSet(s.universe(), std::move(apps));
}

std::string to_string(const Application& app, const ApplicationSet& context) {
  std::string out = app.name() + "(";
  for (std::size_t i = 0; i < app.args.size(); ++i) {
    if (i) out += ",";
    const Argument& a = app.args[i];
    if (a.is_variable())
      out += context.var_name(a.id());
    else
      out += a.constant_value() ? "1" : "0";
  }
  return out + ")";
}

}  // namespace isoimp
