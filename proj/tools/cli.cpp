#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "isoimp/catalog.hpp"
#include "isoimp/classifier.hpp"
#include "isoimp/error.hpp"
#include "isoimp/model_io.hpp"
#include "isoimp/reductions.hpp"
#include "isoimp/semantics.hpp"

namespace isoimp::cli {

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string hex64(std::uint64_t v) {
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << v;
  return s.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
  if (!out) throw UsageError("write failed for " + path);
}

struct Input {
  std::string path;
  std::string text;
  Model model;
};

Input load(const std::string& path) {
  Input in{path, read_file(path), {}};
  in.model = parse_model(in.text);
  return in;
}

json input_json(const Input& in) {
  return json{{"file", in.path}, {"digest", "fnv1a64:" + hex64(fnv1a64(in.text))}};
}

std::pair<std::string, std::string> pick_sets(const Model& m, std::string left, std::string right) {
  if (left.empty() || right.empty()) {
    if (m.sets.size() != 1)
      throw UsageError("--left and --right are required unless the file holds exactly one set");
    if (left.empty()) left = m.sets.begin()->first;
    if (right.empty()) right = m.sets.begin()->first;
  }
  for (const std::string& n : {left, right})
    if (!m.sets.count(n)) throw UsageError("no set named " + n);
  return {left, right};
}

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  std::uint64_t v = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty())
    throw UsageError("invalid " + what + ": '" + text + "'");
  return v;
}

unsigned parse_unsigned(const std::string& text, const std::string& what) {
  std::uint64_t v = parse_u64(text, what);
  if (v > 0xffffffffull) throw UsageError(what + " out of range");
  return static_cast<unsigned>(v);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

// path:N cycle:N complete:N star:L random:N:P:SEED edges:N:1-2,2-3 (vertices 1-based)
Graph parse_graph(const std::string& spec) {
  auto parts = split(spec, ':');
  const std::string& kind = parts[0];
  auto want = [&](std::size_t n) {
    if (parts.size() != n) throw UsageError("malformed graph '" + spec + "'");
  };
  if (kind == "path" || kind == "cycle" || kind == "complete" || kind == "star") {
    want(2);
    std::size_t n = parse_unsigned(parts[1], "vertex count");
    if (kind == "path") return Graph::path(n);
    if (kind == "cycle") return Graph::cycle(n);
    if (kind == "complete") return Graph::complete(n);
    return Graph::star(n);
  }
  if (kind == "random") {
    want(4);
    std::size_t n = parse_unsigned(parts[1], "vertex count");
    double p = 0;
    try {
      std::size_t used = 0;
      p = std::stod(parts[2], &used);
      if (used != parts[2].size()) throw std::invalid_argument(parts[2]);
    } catch (const std::logic_error&) {
      throw UsageError("invalid edge probability '" + parts[2] + "'");
    }
    if (p < 0 || p > 1) throw UsageError("edge probability must lie in [0, 1]");
    return random_graph(n, p, parse_u64(parts[3], "seed"));
  }
  if (kind == "edges") {
    want(3);
    std::size_t n = parse_unsigned(parts[1], "vertex count");
    std::vector<Graph::Edge> edges;
    if (!parts[2].empty())
      for (const std::string& e : split(parts[2], ',')) {
        auto ends = split(e, '-');
        if (ends.size() != 2) throw UsageError("malformed edge '" + e + "'");
        unsigned a = parse_unsigned(ends[0], "vertex"), b = parse_unsigned(ends[1], "vertex");
        if (a == 0 || b == 0) throw UsageError("vertices are numbered from 1");
        edges.emplace_back(a - 1, b - 1);
      }
    return Graph(n, std::move(edges));
  }
  throw UsageError("unknown graph kind '" + kind + "'");
}

json graph_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({a + 1, b + 1});
  return json{{"vertices", g.num_vertices()}, {"edges", edges}};
}

GuardMode parse_mode(const std::string& text) {
  auto m = parse_guard_mode(text);
  if (!m) throw UsageError("unknown mode '" + text + "'");
  return *m;
}

json witness_json(const Decision& d) {
  if (!d.witness) return nullptr;
  json w = json::object();
  for (VarId v = 0; v < d.universe.size(); ++v) w[d.universe[v]] = d.universe[(*d.witness)(v)];
  return w;
}

json stats_json(const SearchStats& s) {
  return json{{"nodes", s.nodes},
              {"prunes",
               {{"count", s.prune_count},
                {"signature", s.prune_signature},
                {"matching", s.prune_matching},
                {"application", s.prune_application},
                {"symmetry", s.prune_symmetry},
                {"normalize", s.prune_normalize}}}};
}

json flags_json(const PropertyRecord& p) {
  return json{{"zero_valid", p.zero_valid}, {"one_valid", p.one_valid},
              {"horn", p.horn},             {"anti_horn", p.anti_horn},
              {"bijunctive", p.bijunctive}, {"affine", p.affine},
              {"two_affine", p.two_affine}, {"complementive", p.complementive},
              {"literal_conjunction", p.literal_conjunction}};
}

struct Budget {
  std::optional<std::uint64_t> nodes;
  std::optional<std::uint64_t> ms;
};

SearchOptions make_options(const Budget& b, Engine engine) {
  SearchOptions o;
  o.engine = engine;
  if (b.nodes) o.budget.max_nodes = *b.nodes;
  if (b.ms) {
    o.budget.max_ms = *b.ms;
  } else if (const char* env = std::getenv("ISOIMP_BUDGET_MS")) {
    o.budget.max_ms = parse_u64(env, "ISOIMP_BUDGET_MS");
  }
  return o;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------- classify

struct ClassifyArgs {
  std::string file;
  std::string set;
};

int cmd_classify(const ClassifyArgs& a, std::ostream& out, std::ostream& err) {
  Input in = load(a.file);
  std::vector<ConstraintPtr> language;
  if (a.set.empty()) {
    for (const auto& [name, c] : in.model.catalog) language.push_back(c);
  } else {
    auto it = in.model.sets.find(a.set);
    if (it == in.model.sets.end()) throw UsageError("no set named " + a.set);
    language = it->second.constraints();
  }
  SetProperties agg = set_properties(language);
  const ComplexityClass verdict = classify(language);

  json report;
  report["command"] = "classify";
  report["input"] = input_json(in);
  if (!a.set.empty()) report["set"] = a.set;
  json members = json::array();
  err << std::left << std::setw(16) << "constraint" << " arity  0v 1v horn anti bij aff 2aff comp lit\n";
  auto mark = [](bool b) { return b ? "x" : "."; };
  for (const ConstraintPtr& c : language) {
    PropertyRecord p = constraint_properties(*c);
    members.push_back({{"name", c->name()}, {"arity", c->arity()}, {"table", c->bits()}, {"flags", flags_json(p)}});
    err << std::left << std::setw(16) << c->name() << " " << std::setw(6) << c->arity() << " " << mark(p.zero_valid)
        << "  " << mark(p.one_valid) << "  " << mark(p.horn) << "    " << mark(p.anti_horn) << "    "
        << mark(p.bijunctive) << "   " << mark(p.affine) << "   " << mark(p.two_affine) << "    "
        << mark(p.complementive) << "    " << mark(p.literal_conjunction) << "\n";
  }
  report["constraints"] = members;
  report["flags"] = flags_json(agg.flags);
  report["schaefer"] = agg.flags.schaefer();
  report["class"] = std::string(to_string(verdict));
  report["warnings"] = agg.warnings;
  err << "schaefer: " << yes_no(agg.flags.schaefer()) << "\nclass: " << to_string(verdict) << "\n";
  for (const std::string& w : agg.warnings) err << "warning: " << w << "\n";
  out << report.dump(2) << "\n";
  return kYes;
}

// ---------------------------------------------------------------- decide

struct DecideArgs {
  std::string relation;
  std::string file;
  std::string left, right;
  bool oracle = false, fast = false, search = false;
  Budget budget;
  bool json = false;
  bool timing = false;
};

int cmd_decide(const DecideArgs& a, const Engines& engines, std::ostream& out, std::ostream& err) {
  Input in = load(a.file);
  auto [ln, rn] = pick_sets(in.model, a.left, a.right);
  const ApplicationSet& s = in.model.set(ln);
  const ApplicationSet& u = in.model.set(rn);
  Engine engine = a.oracle ? Engine::Oracle : a.fast ? Engine::Fast : a.search ? Engine::Search : Engine::Auto;
  SearchOptions options = make_options(a.budget, engine);

  Decision d;
  if (a.relation == "implies") {
    d.answer = implies(s, u, options.limits);
    d.universe = union_universe(s, u);
    d.stats.engine = "semantics";
  } else if (a.relation == "iso") {
    d = engines.isomorphic(s, u, options);
  } else {
    d = engines.iso_implies(s, u, options);
  }

  if (a.json) {
    json report;
    report["command"] = "decide";
    report["relation"] = a.relation;
    report["input"] = input_json(in);
    report["input"]["left"] = ln;
    report["input"]["right"] = rn;
    report["engine"] = d.stats.engine;
    report["answer"] = d.answer;
    report["witness"] = witness_json(d);
    report["universe"] = d.universe;
    report["stats"] = stats_json(d.stats);
    report["budget"] = {{"max_nodes", options.budget.max_nodes}, {"max_ms", options.budget.max_ms}};
    if (a.timing) report["elapsed_ms"] = d.stats.elapsed_ms;
    out << report.dump(2) << "\n";
  } else {
    out << "answer: " << yes_no(d.answer) << "\n";
    if (d.witness) {
      out << "witness:";
      for (VarId v = 0; v < d.universe.size(); ++v)
        out << (v ? ", " : " ") << d.universe[v] << " -> " << d.universe[(*d.witness)(v)];
      out << "\n";
    }
    out << "engine: " << d.stats.engine << ", nodes: " << d.stats.nodes << "\n";
    if (a.timing) out << "elapsed_ms: " << d.stats.elapsed_ms << "\n";
  }
  (void)err;
  return d.answer ? kYes : kNo;
}

// ---------------------------------------------------------------- verify

// The generator's expected answer, if `<file>.json` exists and describes these two sets.
std::optional<bool> sidecar_expectation(const std::string& file, const std::string& left, const std::string& right) {
  std::ifstream in(file + ".json");
  if (!in) return std::nullopt;
  json meta = json::parse(in, nullptr, false);
  if (meta.is_discarded() || !meta.is_object()) return std::nullopt;
  const json sets = meta.value("sets", json::object());
  if (sets.value("left", "") != left || sets.value("right", "") != right) return std::nullopt;
  const json expected = meta.value("expected", json());
  if (!expected.is_boolean()) return std::nullopt;
  return expected.get<bool>();
}

struct VerifyArgs {
  std::string file;
  std::string left, right;
  std::string relation = "iso-imp";
  Budget budget;
};

int cmd_verify(const VerifyArgs& a, const Engines& engines, std::ostream& out, std::ostream& err) {
  Input in = load(a.file);
  auto [ln, rn] = pick_sets(in.model, a.left, a.right);
  const ApplicationSet& s = in.model.set(ln);
  const ApplicationSet& u = in.model.set(rn);
  SearchOptions options = make_options(a.budget, Engine::Search);
  const bool iso = a.relation == "iso";

  Decision d = iso ? engines.isomorphic(s, u, options) : engines.iso_implies(s, u, options);
  bool oracle_answer = false;
  std::optional<Permutation> oracle_pi;
  std::string oracle_name = "permutation-scan";
  try {
    if (iso) {
      oracle_answer = isomorphic_oracle(s, u, options.limits);
    } else {
      oracle_pi = oracle_witness(s, u, options.limits);
      oracle_answer = oracle_pi.has_value();
    }
  } catch (const BudgetExceeded&) {
    // Too large to scan: fall back to the combinatorial answer a generator recorded.
    std::optional<bool> expected = iso ? std::nullopt : sidecar_expectation(a.file, ln, rn);
    if (!expected) throw;
    oracle_answer = *expected;
    oracle_name = "sidecar";
  }

  std::vector<std::string> problems;
  bool witness_checked = false;
  if (d.answer != oracle_answer) problems.push_back("answers differ");
  if (d.answer && !d.witness) problems.push_back("yes without a witness");
  if (d.witness) {
    auto [sj, uj] = over_union(s, u);
    if (d.witness->size() != sj.num_vars()) {
      problems.push_back("witness has the wrong size");
    } else {
      try {
        ApplicationSet image = apply_permutation(*d.witness, sj);
        if (!(iso ? equivalent(image, uj, options.limits) : implies(image, uj, options.limits)))
          problems.push_back("witness does not satisfy the relation");
        witness_checked = true;
      } catch (const BudgetExceeded&) {
      }
    }
    if (!iso && oracle_pi && *d.witness != *oracle_pi) problems.push_back("witness is not the least one");
  }

  Decision od;
  od.answer = oracle_answer;
  od.witness = oracle_pi;
  od.universe = union_universe(s, u);
  json report;
  report["command"] = "verify";
  report["relation"] = a.relation;
  report["input"] = input_json(in);
  report["input"]["left"] = ln;
  report["input"]["right"] = rn;
  report["search"] = {{"answer", d.answer}, {"witness", witness_json(d)}, {"stats", stats_json(d.stats)}};
  report["search"]["witness_checked"] = witness_checked;
  report["oracle"] = {{"kind", oracle_name}, {"answer", od.answer}, {"witness", iso ? json(nullptr) : witness_json(od)}};
  report["agree"] = problems.empty();
  report["problems"] = problems;
  out << report.dump(2) << "\n";
  for (const std::string& p : problems) err << "verify: " << p << "\n";
  return problems.empty() ? kYes : kDisagreement;
}

// ---------------------------------------------------------------- gen

struct GenArgs {
  std::string output;
  std::string g, h;
  std::string mode = "plain";
  unsigned m = 1, bound = 1;
  std::string sizes;
  bool strict = false;
  std::string constraint, table;
  unsigned max_apps = 4, max_vars = 4;
  std::vector<std::string> o_sides, e_sides;
};

template <typename F>
json oracle_or_null(F&& f) {
  try {
    return json(f());
  } catch (const BudgetExceeded&) {
    return nullptr;
  }
}

int finish_gen(const GenArgs& a, const Model& model, json meta, std::ostream& out, std::ostream& err) {
  const std::string text = serialize_model(model);
  write_file(a.output, text);
  meta["output"] = {{"file", a.output}, {"digest", "fnv1a64:" + hex64(fnv1a64(text))}};
  const std::string sidecar = meta.dump(2) + "\n";
  write_file(a.output + ".json", sidecar);
  out << sidecar;
  err << "wrote " << a.output << " and " << a.output << ".json\n";
  return kYes;
}

Model pair_model(const InstancePair& p) {
  Model m;
  m.add_set("S", p.first);
  m.add_set("U", p.second);
  return m;
}

json guards_json(GuardMode mode) {
  switch (mode) {
    case GuardMode::Plain: return json::array();
    case GuardMode::T: return json::array({"t"});
    case GuardMode::F:
    case GuardMode::NandF: return json::array({"f"});
    default: return json::array({"f", "t"});
  }
}

int gen_subgraph(const GenArgs& a, std::ostream& out, std::ostream& err) {
  Graph g = parse_graph(a.g), h = parse_graph(a.h);
  GuardMode mode = parse_mode(a.mode);
  InstancePair p = subgraph_instance(g, h, mode);
  json meta{{"family", "subgraph"},
            {"params", {{"host", a.g}, {"pattern", a.h}, {"mode", a.mode}}},
            {"sets", {{"left", "S"}, {"right", "U"}}},
            {"naming", {{"left", "x_1_<v>"}, {"right", "x_<v>"}, {"guards", guards_json(mode)}}},
            {"graphs", {{"host", graph_json(g)}, {"pattern", graph_json(h)}}},
            {"oracle", "subgraph_bruteforce"},
            {"expected", oracle_or_null([&] { return subgraph_bruteforce(g, h); })}};
  return finish_gen(a, pair_model(p), std::move(meta), out, err);
}

int gen_hampath(const GenArgs& a, std::ostream& out, std::ostream& err) {
  Graph g = parse_graph(a.g);
  InstancePair p = hampath_instance(g);
  json meta{{"family", "hampath"},
            {"params", {{"graph", a.g}}},
            {"sets", {{"left", "S"}, {"right", "U"}}},
            {"naming", {{"left", "y_1_<v>"}, {"right", "y_<j>"}}},
            {"graphs", {{"graph", graph_json(g)}}},
            {"oracle", "hamiltonian_path_bruteforce"},
            {"expected", oracle_or_null([&] { return hamiltonian_path_bruteforce(g); })}};
  return finish_gen(a, pair_model(p), std::move(meta), out, err);
}

int gen_partition(const GenArgs& a, bool xor_family, std::ostream& out, std::ostream& err) {
  ThreePartitionInstance inst;
  inst.m = a.m;
  inst.bound = a.bound;
  for (const std::string& s : split(a.sizes, ',')) inst.sizes.push_back(parse_unsigned(s, "size"));
  inst.strict = a.strict;
  GuardMode mode = parse_mode(a.mode);
  InstancePair p = xor_family ? three_partition_xor_instance(inst, mode) : three_partition_iff_instance(inst, mode);

  // Pool position k is variable <pool>_<k / B + 1>_<k % B + 1>.
  auto var = [&](std::size_t k) {
    return std::to_string(k / inst.bound + 1) + "_" + std::to_string(k % inst.bound + 1);
  };
  json blocks = json::array(), slices = json::array();
  for (unsigned i = 0; i < inst.m; ++i)
    blocks.push_back({var(std::size_t{i} * inst.bound), var(std::size_t{i + 1} * inst.bound - 1)});
  std::size_t start = 0;
  for (unsigned s : inst.sizes) {
    slices.push_back({var(start), var(start + s - 1)});
    start += s;
  }
  json meta{{"family", xor_family ? "3part-xor" : "3part-iff"},
            {"params", {{"m", inst.m}, {"bound", inst.bound}, {"sizes", inst.sizes}, {"strict", inst.strict},
                        {"mode", a.mode}}},
            {"sets", {{"left", "S"}, {"right", "U"}}},
            {"naming", {{"pools", xor_family ? json::array({"x", "y"}) : json::array({"x"})},
                        {"variable", "<pool>_<block>_<j>"},
                        {"guards", guards_json(mode)}}},
            {"blocks", {{"left", blocks}, {"right", slices}}},
            {"oracle", "three_partition_bruteforce"},
            {"expected", oracle_or_null([&] { return three_partition_bruteforce(inst); })}};
  return finish_gen(a, pair_model(p), std::move(meta), out, err);
}

int gen_implement(const GenArgs& a, std::ostream& out, std::ostream& err) {
  ConstraintPtr c;
  if (!a.table.empty()) {
    unsigned arity = 0;
    while ((std::size_t{1} << arity) < a.table.size()) ++arity;
    std::string name = a.constraint.empty() ? "C" : a.constraint;
    try {
      c = make_constraint(name, arity, a.table);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  } else {
    for (const ConstraintPtr& k : catalog::all())
      if (k->name() == a.constraint) c = k;
    if (!c) throw UsageError("unknown catalog constraint '" + a.constraint + "' (use --table for others)");
  }
  Implementation impl = find_implementation(*c, {a.max_apps, a.max_vars});
  const ImplementationTarget& target = implementation_targets()[impl.target];
  Model m;
  m.add_set("I", impl.set);
  m.add_set("T", target.set);
  json meta{{"family", "implement"},
            {"params", {{"constraint", c->name()}, {"table", c->bits()}, {"max_apps", a.max_apps},
                        {"max_vars", a.max_vars}}},
            {"sets", {{"implementation", "I"}, {"target", "T"}}},
            {"target", {{"index", impl.target}, {"description", target.description}}},
            {"applications", impl.set.size()},
            {"verified", equivalent(impl.set, target.set)}};
  return finish_gen(a, m, std::move(meta), out, err);
}

// O-side: N:a-b,c-d, i.e. N variables and implications x_a -> x_b (1-based).
ApplicationSet parse_o_side(const std::string& spec) {
  auto parts = split(spec, ':');
  if (parts.size() != 2) throw UsageError("malformed O-side '" + spec + "'");
  unsigned n = parse_unsigned(parts[0], "O-side size");
  if (n == 0) throw UsageError("O-side needs at least one variable");
  std::vector<std::string> names;
  for (unsigned j = 1; j <= n; ++j) names.push_back("x_" + std::to_string(j));
  SetBuilder b(names);
  if (!parts[1].empty())
    for (const std::string& e : split(parts[1], ',')) {
      auto ends = split(e, '-');
      if (ends.size() != 2) throw UsageError("malformed implication '" + e + "'");
      unsigned x = parse_unsigned(ends[0], "variable"), y = parse_unsigned(ends[1], "variable");
      if (x == 0 || y == 0 || x > n || y > n) throw UsageError("implication '" + e + "' out of range");
      b.add(catalog::imp2(), {names[x - 1], names[y - 1]});
    }
  return b.build();
}

int gen_wagner(const GenArgs& a, std::ostream& out, std::ostream& err) {
  if (a.o_sides.size() != a.e_sides.size() || a.o_sides.empty())
    throw UsageError("give one --o-side and one --e-graph per component");
  std::vector<WagnerComponent> comps;
  for (std::size_t i = 0; i < a.o_sides.size(); ++i)
    comps.push_back({parse_o_side(a.o_sides[i]), parse_graph(a.e_sides[i])});
  WagnerInstance w = wagner_compose(comps);

  json components = json::array();
  bool any = false, known = true;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    json o_yes = oracle_or_null([&] {
      auto [o, t] = wagner_o_instance(comps[i], i + 1, w.n);
      return iso_implies(o, t).answer;
    });
    json e_yes = oracle_or_null([&] { return hamiltonian_path_bruteforce(comps[i].e_side); });
    if (o_yes.is_null() || e_yes.is_null()) known = false;
    else if (o_yes.get<bool>() && e_yes.get<bool>()) any = true;
    components.push_back({{"o", a.o_sides[i]},
                          {"e", a.e_sides[i]},
                          {"n_o", w.o_vars[i]},
                          {"n_e", w.e_vars[i]},
                          {"o_yes", o_yes},
                          {"e_yes", e_yes}});
  }
  json meta{{"family", "wagner"},
            {"params", {{"components", comps.size()}}},
            {"sets", {{"left", "S"}, {"right", "U"}}},
            {"naming", {{"left", "x_<i>_<j>, y_<i>_<j>"}, {"right", "x_<j>, y_<j>"}}},
            {"n", w.n},
            {"components", components},
            {"oracle", "exists i: o_yes and e_yes"},
            {"expected", any ? json(true) : known ? json(false) : json(nullptr)}};
  return finish_gen(a, pair_model({w.left, w.right}), std::move(meta), out, err);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Engines& engines) {
  CLI::App app{"Isomorphic implication toolkit", "isoimp"};
  app.require_subcommand(1);

  ClassifyArgs ca;
  auto* classify_cmd = app.add_subcommand("classify", "Structural flags and complexity class of a constraint language");
  classify_cmd->add_option("file", ca.file, "Model file")->required();
  classify_cmd->add_option("--set", ca.set, "Classify only the constraints used by this set");

  DecideArgs da;
  std::string budget_nodes, budget_ms;
  auto* decide_cmd = app.add_subcommand("decide", "Decide iso-imp, iso or plain implication between two sets");
  decide_cmd->add_option("relation", da.relation, "iso-imp | iso | implies")
      ->required()
      ->check(CLI::IsMember({"iso-imp", "iso", "implies"}));
  decide_cmd->add_option("file", da.file, "Model file")->required();
  decide_cmd->add_option("--left", da.left, "Left set (S)");
  decide_cmd->add_option("--right", da.right, "Right set (U)");
  auto* f_oracle = decide_cmd->add_flag("--oracle", da.oracle, "Permutation scan");
  auto* f_fast = decide_cmd->add_flag("--fast", da.fast, "Literal-conjunction counting");
  auto* f_search = decide_cmd->add_flag("--search", da.search, "Pruned search");
  f_oracle->excludes(f_fast, f_search);
  f_fast->excludes(f_search);
  decide_cmd->add_option("--budget-nodes", budget_nodes, "Search node limit");
  decide_cmd->add_option("--budget-ms", budget_ms, "Search time limit (falls back to ISOIMP_BUDGET_MS)");
  decide_cmd->add_flag("--json", da.json, "JSON report on stdout");
  decide_cmd->add_flag("--timing", da.timing, "Include wall time (makes output nondeterministic)");

  VerifyArgs va;
  std::string v_nodes, v_ms;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check the pruned search against the oracle");
  verify_cmd->add_option("file", va.file, "Model file")->required();
  verify_cmd->add_option("--left", va.left, "Left set (S)");
  verify_cmd->add_option("--right", va.right, "Right set (U)");
  verify_cmd->add_option("--relation", va.relation, "iso-imp | iso")->check(CLI::IsMember({"iso-imp", "iso"}));
  verify_cmd->add_option("--budget-nodes", v_nodes, "Search node limit");
  verify_cmd->add_option("--budget-ms", v_ms, "Search time limit");

  GenArgs ga;
  auto* gen_cmd = app.add_subcommand("gen", "Generate reduction instances with a JSON sidecar");
  gen_cmd->require_subcommand(1);
  auto output = [&](CLI::App* c) { c->add_option("-o,--output", ga.output, "Model file to write")->required(); };
  const std::string graph_help = "path:N | cycle:N | complete:N | star:L | random:N:P:SEED | edges:N:1-2,...";

  auto* g_sub = gen_cmd->add_subcommand("subgraph", "Subgraph isomorphism as iso-imp over OR-family sets");
  g_sub->add_option("--host", ga.g, "Host graph G: " + graph_help)->required();
  g_sub->add_option("--pattern", ga.h, "Pattern graph H")->required();
  g_sub->add_option("--mode", ga.mode, "plain | t | ft | nand-f | nand-ft");
  output(g_sub);

  auto* g_ham = gen_cmd->add_subcommand("hampath", "Hamiltonian path as iso-imp");
  g_ham->add_option("--graph", ga.g, "Graph: " + graph_help)->required();
  output(g_ham);

  auto partition = [&](const std::string& name, const std::string& modes) {
    auto* c = gen_cmd->add_subcommand(name, "Unary 3-partition as iso-imp over " + std::string(name == "3part-iff" ? "IFF" : "XOR") + " sets");
    c->add_option("--m", ga.m, "Number of groups")->required();
    c->add_option("--bound", ga.bound, "Group sum B")->required();
    c->add_option("--sizes", ga.sizes, "Comma-separated element sizes")->required();
    c->add_option("--mode", ga.mode, modes);
    c->add_flag("--strict", ga.strict, "Require B/4 < s < B/2");
    output(c);
    return c;
  };
  auto* g_iff = partition("3part-iff", "plain | t | f | ft");
  auto* g_xor = partition("3part-xor", "plain | ft");

  auto* g_impl = gen_cmd->add_subcommand("implement", "Bounded search for an implementation of a guarded target");
  g_impl->add_option("--constraint", ga.constraint, "Catalog name (or the name for --table)");
  g_impl->add_option("--table", ga.table, "Truth table bits, index 0 first");
  g_impl->add_option("--max-apps", ga.max_apps, "Application bound");
  g_impl->add_option("--max-vars", ga.max_vars, "Variable bound");
  output(g_impl);

  auto* g_wag = gen_cmd->add_subcommand("wagner", "Composition of O-sides and E-graphs");
  g_wag->add_option("--o-side", ga.o_sides, "O-side N:a-b,... (repeat per component)")->required();
  g_wag->add_option("--e-graph", ga.e_sides, "E-graph (repeat per component)")->required();
  output(g_wag);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().back()->help());
    return kYes;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kYes;
  } catch (const CLI::ParseError& e) {
    err << "isoimp: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (!budget_nodes.empty()) da.budget.nodes = parse_u64(budget_nodes, "--budget-nodes");
    if (!budget_ms.empty()) da.budget.ms = parse_u64(budget_ms, "--budget-ms");
    if (!v_nodes.empty()) va.budget.nodes = parse_u64(v_nodes, "--budget-nodes");
    if (!v_ms.empty()) va.budget.ms = parse_u64(v_ms, "--budget-ms");

    if (classify_cmd->parsed()) return cmd_classify(ca, out, err);
    if (decide_cmd->parsed()) return cmd_decide(da, engines, out, err);
    if (verify_cmd->parsed()) return cmd_verify(va, engines, out, err);
    if (g_sub->parsed()) return gen_subgraph(ga, out, err);
    if (g_ham->parsed()) return gen_hampath(ga, out, err);
    if (g_iff->parsed()) return gen_partition(ga, false, out, err);
    if (g_xor->parsed()) return gen_partition(ga, true, out, err);
    if (g_impl->parsed()) {
      if (ga.constraint.empty() && ga.table.empty()) throw UsageError("give --constraint or --table");
      return gen_implement(ga, out, err);
    }
    if (g_wag->parsed()) return gen_wagner(ga, out, err);
    throw UsageError("no command");
  } catch (const BudgetExceeded& e) {
    err << "isoimp: budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const BoundExhausted& e) {
    err << "isoimp: bound exhausted: " << e.what() << "\n";
    return kBudget;
  } catch (const isoimp::ParseError& e) {
    err << "isoimp: parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "isoimp: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "isoimp: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace isoimp::cli
