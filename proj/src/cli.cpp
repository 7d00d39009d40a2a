#include "diagramkit/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <json.hpp>
#include <ostream>
#include <sstream>
#include <tuple>

#include "diagramkit/canonical.hpp"
#include "diagramkit/dcc.hpp"
#include "diagramkit/diagram.hpp"
#include "diagramkit/discrepancy.hpp"
#include "diagramkit/enumerate.hpp"
#include "diagramkit/errors.hpp"
#include "diagramkit/graph_file.hpp"
#include "diagramkit/star.hpp"
#include "diagramkit/verify.hpp"

#ifndef DIAGRAMKIT_VERSION
#define DIAGRAMKIT_VERSION "0.0.0"
#endif

namespace diagramkit::cli {

std::string version() { return DIAGRAMKIT_VERSION; }

namespace {

using json = nlohmann::json;

json rational(const Rational& q) { return to_string(q); }

json rationals(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(rational(v));
  return out;
}

json signature_json(const Signature& s) {
  return {{"positive", s.positive}, {"zero", s.zero}, {"negative", s.negative}};
}

// Vertices and edges in canonical order; original ids are kept.
json graph_json(const WeightedGraph& g) {
  const auto order = canonical_order(g);
  std::vector<std::size_t> rank(g.size());
  for (std::size_t k = 0; k < order.size(); ++k) rank[order[k]] = k;
  json vertices = json::array();
  for (std::size_t i : order) {
    const auto& v = g.vertex(i);
    vertices.push_back({{"id", v.id}, {"weight", v.weight}, {"genus", v.genus}});
  }
  std::vector<std::tuple<std::size_t, std::size_t, int>> es;
  for (const auto& [e, m] : g.edges()) {
    auto [a, b] = std::minmax(rank[e.first], rank[e.second]);
    es.emplace_back(a, b, m);
  }
  std::sort(es.begin(), es.end());
  json edges = json::array();
  for (const auto& [a, b, m] : es) {
    edges.push_back({{"u", g.vertex(order[a]).id}, {"v", g.vertex(order[b]).id}, {"m", m}});
  }
  return {{"key", canonical_form(g)}, {"vertices", vertices}, {"edges", edges}};
}

// [{id, <name>: value}] in canonical vertex order.
json per_vertex(const WeightedGraph& g, std::initializer_list<std::pair<const char*, const std::vector<Rational>*>> cols) {
  json out = json::array();
  for (std::size_t i : canonical_order(g)) {
    json row = {{"id", g.vertex(i).id}};
    for (const auto& [name, values] : cols) row[name] = rational((*values)[i]);
    out.push_back(row);
  }
  return out;
}

json ids(const WeightedGraph& g, const std::vector<std::size_t>& positions) {
  json out = json::array();
  for (std::size_t i : positions) out.push_back(g.vertex(i).id);
  return out;
}

json singular_json(const WeightedGraph& g, const SingularReport& r) {
  return {{"rank", r.rank}, {"consistent", r.consistent}, {"kernel", per_vertex(g, {{"value", &r.kernel}})}};
}

json report(const std::string& command, json inputs, json result) {
  return {{"command", command}, {"inputs", std::move(inputs)}, {"result", std::move(result)}, {"version", version()}};
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

Rational parse_epsilon(const std::string& text) {
  const Rational eps = parse_rational(text);
  require_epsilon(eps);
  return eps;
}

std::size_t subgraph_budget() {
  const char* env = std::getenv("DIAGRAMKIT_BUDGET");
  if (env == nullptr) return kDefaultSubgraphBudget;
  const std::string text = env;
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
    throw PreconditionError("DIAGRAMKIT_BUDGET must be a positive integer, got '" + text + "'");
  }
  return value;
}

json enumeration_json(const EnumerationResult& r) {
  json graphs = json::array();
  for (const auto& g : r.graphs) graphs.push_back(graph_json(g));
  return {
      {"family", r.family},
      {"count", r.graphs.size()},
      {"exhausted", r.exhausted},
      {"steps", r.steps},
      {"evaluated", r.evaluated},
      {"max_excess", r.max_excess},
      {"max_weight", r.max_weight},
      {"max_vertices", r.max_vertices},
      {"max_degree", r.max_degree},
      {"max_diameter", r.max_diameter ? json(*r.max_diameter) : json(nullptr)},
      {"graphs", graphs},
  };
}

json bound_json(const BoundReport& b) {
  json out = {{"case", to_string(b.nikulin_case)}, {"c1", rational(b.c1)}, {"c2", rational(b.c2)},
              {"bound", rational(b.bound)}};
  if (b.d) out["d"] = *b.d;
  return out;
}

// Values shared by all subcommands; only one subcommand runs per call.
struct Args {
  std::string file;
  std::string epsilon;
  std::string reading = "discrepancy";
  std::string vertex;
  std::vector<std::string> edge;
  std::string new_id;
  std::string mode;
  std::size_t max_vertices = 0;
  std::string seed;
  std::size_t max_steps = 32;
  unsigned threads = 1;
  std::string nikulin_case;
  std::string c1;
  std::string c2;
  int d = 0;
  std::string suite;
  std::string graph;
  int k_max = 20;
  std::size_t corpus_size = 200;
  int w1 = 2;
  int w2 = 2;
  std::string set;
  std::vector<std::string> op;
};

int cmd_classify(const Args& a, std::ostream& out) {
  const auto g = read_graph_file(a.file);
  const auto c = classify_graph(g);
  json result = {{"class", to_string(c.kind)}, {"lanner", c.lanner}, {"signature", signature_json(c.signature)},
                 {"vertices", g.size()}};
  emit(out, report("classify", {{"file", a.file}, {"graph", graph_json(g)}}, result));
  return kOk;
}

int cmd_discrepancies(const Args& a, std::ostream& out) {
  const auto g = read_graph_file(a.file);
  json inputs = {{"file", a.file}, {"graph", graph_json(g)}, {"reading", a.reading}};
  std::optional<Rational> eps;
  if (!a.epsilon.empty()) {
    eps = parse_epsilon(a.epsilon);
    inputs["epsilon"] = rational(*eps);
  }
  const auto solved = log_discrepancies(g);
  if (const auto* singular = std::get_if<SingularReport>(&solved)) {
    emit(out, report("discrepancies", inputs, {{"singular", singular_json(g, *singular)}}));
    return kSingular;
  }
  const auto& dv = std::get<DiscrepancyVector>(solved);
  Rational min_f = 1;
  for (const auto& f : dv.log_discrepancy) min_f = std::min(min_f, f);
  json result = {
      {"vertices", per_vertex(g, {{"log_discrepancy", &dv.log_discrepancy}, {"codiscrepancy", &dv.codiscrepancy}})},
      {"min_log_discrepancy", rational(min_f)},
  };
  const auto lt = is_log_terminal_graph(g, subgraph_budget());
  result["log_terminal_graph"] = {{"log_terminal", lt.log_terminal},
                                  {"witness", ids(g, lt.witness)},
                                  {"witness_log_discrepancy", rationals(lt.witness_log_discrepancy)}};
  if (eps) {
    const auto reading = a.reading == "literal" ? CanonicalReading::literal : CanonicalReading::discrepancy;
    const auto s = classify_singularity(g, *eps, reading);
    result["classification"] = {
        {"terminal", s.terminal},
        {"canonical", s.canonical},
        {"eps_log_terminal", s.eps_log_terminal},
        {"eps_log_canonical", s.eps_log_canonical},
        {"kawamata_log_terminal", s.kawamata_log_terminal},
        {"log_canonical", s.log_canonical},
        {"strongest", to_string(s.strongest)},
    };
  }
  emit(out, report("discrepancies", inputs, result));
  return kOk;
}

int cmd_star(const Args& a, std::ostream& out) {
  const auto g = read_graph_file(a.file);
  const Rational eps = parse_epsilon(a.epsilon);
  const auto cert = check_star(g, eps);
  json result = {{"feasible", cert.feasible},
                 {"witness", cert.feasible ? per_vertex(g, {{"b", &cert.witness}}) : json(nullptr)}};
  emit(out, report("star", {{"file", a.file}, {"graph", graph_json(g)}, {"epsilon", rational(eps)}}, result));
  return kOk;
}

int cmd_blowup(const Args& a, std::ostream& out) {
  const auto g = read_graph_file(a.file);
  const std::string new_id = a.new_id.empty() ? g.fresh_id("E") : a.new_id;
  if (!a.vertex.empty()) {
    out << serialize_graph(blowup_vertex(g, a.vertex, new_id));
  } else if (a.edge.size() == 2) {
    out << serialize_graph(blowup_edge(g, a.edge[0], a.edge[1], new_id));
  } else {
    throw PreconditionError("blowup needs --vertex <id> or --edge <id> <id>");
  }
  return kOk;
}

int cmd_blowdown(const Args& a, std::ostream& out) {
  out << serialize_graph(blowdown(read_graph_file(a.file), a.vertex));
  return kOk;
}

int cmd_enumerate(const Args& a, std::ostream& out) {
  const Rational eps = parse_epsilon(a.epsilon);
  EnumerationOptions options;
  options.threads = std::max(1u, a.threads);
  options.subgraph_budget = subgraph_budget();
  json inputs = {{"mode", a.mode}, {"epsilon", rational(eps)}};
  json result;
  if (a.mode == "minimal-elliptic") {
    if (a.max_vertices == 0) throw PreconditionError("minimal-elliptic needs --max-vertices n (n >= 1)");
    inputs["max_vertices"] = a.max_vertices;
    const auto r = enumerate_minimal_elliptic_star(eps, a.max_vertices, options);
    result = enumeration_json(r);
    result["empirical_s1"] = r.max_excess;
  } else {
    const WeightedGraph seed = a.seed.empty() ? lanner_chain(1) : read_graph_file(a.seed);
    inputs["seed"] = graph_json(seed);
    inputs["max_steps"] = a.max_steps;
    result = enumeration_json(lanner_blowup_search(seed, eps, a.max_steps, options));
  }
  emit(out, report("enumerate", inputs, result));
  return kOk;
}

int cmd_bounds(const Args& a, std::ostream& out) {
  json inputs = json::object();
  json result = json::object();
  std::optional<std::pair<Rational, Rational>> pair;
  if (!a.epsilon.empty()) {
    const Rational eps = parse_epsilon(a.epsilon);
    if (a.d < 1) throw PreconditionError("--epsilon needs --d n (n >= 1)");
    inputs["epsilon"] = rational(eps);
    inputs["d"] = a.d;
    pair = pair_bound_constants(eps, a.d);
    result["pair_constants"] = {{"c1", rational(pair->first)}, {"c2", rational(pair->second)},
                                {"q", rational(Rational(2) / eps - 2)}};
  }
  if (!a.nikulin_case.empty()) {
    const auto c = parse_nikulin_case(a.nikulin_case);
    inputs["case"] = a.nikulin_case;
    Rational c1 = 0;
    Rational c2 = 0;
    if (!a.c1.empty() || !a.c2.empty() || !pair) {
      if (!a.c1.empty()) c1 = parse_rational(a.c1);
      if (!a.c2.empty()) c2 = parse_rational(a.c2);
      inputs["c1"] = rational(c1);
      inputs["c2"] = rational(c2);
      result["nikulin"] = bound_json(nikulin_bound(c, c1, c2));
    } else {
      result["nikulin"] = bound_json(empirical_picard_bound(c, parse_epsilon(a.epsilon), a.d));
    }
  }
  if (inputs.empty()) throw PreconditionError("bounds needs --case and/or --epsilon with --d");
  emit(out, report("bounds", inputs, result));
  return kOk;
}

int cmd_verify(const Args& a, std::ostream& out) {
  json inputs = {{"suite", a.suite}};
  json result;
  bool pass = false;
  if (a.suite == "e9") {
    inputs["w1"] = a.w1;
    inputs["w2"] = a.w2;
    const auto r = e9_lemma_check(a.w1, a.w2);
    json steps = json::array();
    for (const auto& s : r.steps) {
      json witness = json::array();
      for (const auto& id : s.witness) witness.push_back(id);
      steps.push_back({{"k", s.k},
                       {"log_terminal", s.log_terminal},
                       {"witness", witness},
                       {"witness_log_discrepancy", rationals(s.witness_log_discrepancy)}});
    }
    pass = r.pass;
    result = {{"steps", steps}, {"first_failure", r.first_failure ? json(*r.first_failure) : json(nullptr)}};
  } else if (a.suite == "star-closure" || a.suite == "pair-bounds") {
    const Rational eps = parse_epsilon(a.epsilon.empty() ? "1/2" : a.epsilon);
    EnumerationOptions options;
    options.threads = std::max(1u, a.threads);
    options.subgraph_budget = subgraph_budget();
    const auto corpus = star_corpus(eps, a.corpus_size, options);
    inputs["epsilon"] = rational(eps);
    inputs["corpus_size"] = a.corpus_size;
    if (a.suite == "star-closure") {
      const auto r = verify_star_closure(corpus, eps);
      json violations = json::array();
      for (const auto& v : r.violations) violations.push_back({{"graph", v.graph}, {"operation", v.operation}});
      pass = r.pass();
      result = {{"corpus", corpus.size()},
                {"graphs", r.graphs},
                {"subgraph_cases", r.subgraph_cases},
                {"blowdown_cases", r.blowdown_cases},
                {"violations", violations}};
    } else {
      const int d = a.d < 1 ? 2 : a.d;
      inputs["d"] = d;
      const auto r = verify_pair_bounds(corpus, eps, d);
      pass = r.pass();
      result = {{"corpus", corpus.size()},
                {"elliptic_graphs", r.elliptic_graphs},
                {"checks", r.checks},
                {"violations", r.violations}};
    }
  } else {
    const WeightedGraph g = a.graph.empty() ? lanner_chain(1) : read_graph_file(a.graph);
    const std::string v = a.vertex.empty() ? (g.empty() ? "" : g.vertex(0).id) : a.vertex;
    inputs["graph"] = graph_json(g);
    inputs["vertex"] = v;
    inputs["k_max"] = a.k_max;
    const auto r = vertex_blowup_horizon(g, v, a.k_max);
    pass = r.found && r.persistent;
    result = {{"found", r.found},
              {"k", r.found ? json(r.k) : json(nullptr)},
              {"persistent", r.persistent},
              {"horizon", r.found ? "found" : "not-found"}};
  }
  result["pass"] = pass;
  result["status"] = pass ? "pass" : "fail";
  emit(out, report("verify", inputs, result));
  return kOk;
}

int cmd_dcc(const Args& a, std::ostream& out) {
  const auto set = a.set == "standard" ? CoefficientSet::standard() : CoefficientSet::parse(a.set);
  const std::string& op = a.op.at(0);
  const std::string arg = a.op.size() > 1 ? a.op[1] : "";
  json inputs = {{"set", set.describe()}, {"op", op}};
  if (!arg.empty()) inputs["argument"] = arg;
  auto need_arg = [&] {
    if (arg.empty()) throw PreconditionError("--op " + op + " needs an argument");
  };
  json result;
  if (op == "min-positive") {
    const auto m = min_positive(set);
    result = {{"min_positive", m ? rational(*m) : json(nullptr)}};
  } else if (op == "contains") {
    need_arg();
    result = {{"contains", contains(set, parse_rational(arg))}};
  } else if (op == "below") {
    need_arg();
    result = {{"values", rationals(below_threshold(set, parse_rational(arg)))}};
  } else if (op == "quotient") {
    need_arg();
    std::vector<int> bounds;
    std::istringstream in(arg);
    for (std::string item; std::getline(in, item, ',');) {
      std::size_t used = 0;
      bounds.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument("bad quotient bound '" + item + "'");
    }
    if (bounds.size() != 3) throw PreconditionError("quotient needs max_m,max_terms,max_n");
    const auto q = hurwitz_quotient_transform(set, bounds[0], bounds[1], bounds[2]);
    result = {{"values", rationals(q.values)}, {"complete", q.complete}};
  } else {
    throw PreconditionError("unknown --op '" + op + "'");
  }
  emit(out, report("dcc", inputs, result));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on weighted dual graphs of surface singularities", "diagramkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", version());
  Args a;
  const auto epsilon_help = "epsilon as an exact fraction p/q";

  auto* classify = app.add_subcommand("classify", "signature, elliptic/parabolic/hyperbolic type, Lanner flag");
  classify->add_option("file", a.file, "graph file")->required();

  auto* disc = app.add_subcommand("discrepancies", "log discrepancies and singularity class");
  disc->add_option("file", a.file, "graph file")->required();
  disc->add_option("--epsilon", a.epsilon, epsilon_help);
  disc->add_option("--reading", a.reading, "how canonical/terminal are read")
      ->check(CLI::IsMember({"discrepancy", "literal"}));

  auto* star = app.add_subcommand("star", "check condition *(eps)");
  star->add_option("file", a.file, "graph file")->required();
  star->add_option("--epsilon", a.epsilon, epsilon_help)->required();

  auto* blowup = app.add_subcommand("blowup", "blow up a vertex or an edge; prints the new graph file");
  blowup->add_option("file", a.file, "graph file")->required();
  auto* bv = blowup->add_option("--vertex", a.vertex, "vertex id");
  auto* be = blowup->add_option("--edge", a.edge, "two vertex ids")->expected(2);
  bv->excludes(be);
  blowup->add_option("--new", a.new_id, "id of the new vertex");

  auto* blowdown_cmd = app.add_subcommand("blowdown", "contract a weight-1 vertex; prints the new graph file");
  blowdown_cmd->add_option("file", a.file, "graph file")->required();
  blowdown_cmd->add_option("--vertex", a.vertex, "vertex id")->required();

  auto* enumerate = app.add_subcommand("enumerate", "enumerate graph families up to isomorphism");
  enumerate->add_option("--mode", a.mode)->required()->check(CLI::IsMember({"minimal-elliptic", "lanner-closure"}));
  enumerate->add_option("--epsilon", a.epsilon, epsilon_help)->required();
  enumerate->add_option("--max-vertices", a.max_vertices, "vertex limit (minimal-elliptic)");
  enumerate->add_option("--seed", a.seed, "seed graph file (lanner-closure; default the 1,1,1 chain)");
  enumerate->add_option("--max-steps", a.max_steps, "blowup levels (lanner-closure)")->capture_default_str();
  enumerate->add_option("--threads", a.threads, "worker threads")->capture_default_str();

  auto* bounds = app.add_subcommand("bounds", "Nikulin bound and pair-count constants");
  bounds->add_option("--case", a.nikulin_case)->check(CLI::IsMember({"nu2", "nu1", "nu0"}));
  bounds->add_option("--c1", a.c1, "exact fraction");
  bounds->add_option("--c2", a.c2, "exact fraction");
  bounds->add_option("--epsilon", a.epsilon, epsilon_help);
  bounds->add_option("--d", a.d, "distance parameter");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", a.suite)
      ->required()
      ->check(CLI::IsMember({"e9", "star-closure", "pair-bounds", "lanner-horizon"}));
  verify->add_option("--epsilon", a.epsilon, "epsilon (default 1/2)");
  verify->add_option("--d", a.d, "distance parameter (pair-bounds, default 2)");
  verify->add_option("--corpus-size", a.corpus_size, "minimum corpus size")->capture_default_str();
  verify->add_option("--graph", a.graph, "graph file (lanner-horizon; default the 1,1,1 chain)");
  verify->add_option("--vertex", a.vertex, "vertex to blow up (lanner-horizon)");
  verify->add_option("--k-max", a.k_max, "tower length (lanner-horizon)")->capture_default_str();
  verify->add_option("--w1", a.w1, "seed weight (e9)")->capture_default_str();
  verify->add_option("--w2", a.w2, "seed weight (e9)")->capture_default_str();
  verify->add_option("--threads", a.threads, "worker threads")->capture_default_str();

  auto* dcc = app.add_subcommand("dcc", "operations on coefficient sets");
  dcc->add_option("--set", a.set, "\"standard\" or items p/q and fam(c,a,kmin), comma separated")->required();
  dcc->add_option("--op", a.op, "min-positive | contains x | below t | quotient m,terms,n")
      ->required()
      ->expected(1, 2);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (*classify) return cmd_classify(a, out);
    if (*disc) return cmd_discrepancies(a, out);
    if (*star) return cmd_star(a, out);
    if (*blowup) return cmd_blowup(a, out);
    if (*blowdown_cmd) return cmd_blowdown(a, out);
    if (*enumerate) return cmd_enumerate(a, out);
    if (*bounds) return cmd_bounds(a, out);
    if (*verify) return cmd_verify(a, out);
    return cmd_dcc(a, out);
  } catch (const SingularSystem& e) {
    err << "error: " << e.what() << '\n';
    return kSingular;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const InfiniteTail& e) {
    err << "error: " << e.what() << '\n';
    return kInfiniteTail;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace diagramkit::cli
