#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "diagramkit/cli.hpp"
#include "diagramkit/dcc.hpp"
#include "diagramkit/diagram.hpp"
#include "diagramkit/discrepancy.hpp"
#include "diagramkit/enumerate.hpp"
#include "diagramkit/errors.hpp"
#include "diagramkit/graph_file.hpp"
#include "diagramkit/linalg.hpp"
#include "diagramkit/star.hpp"

namespace py = pybind11;
using namespace diagramkit;

// Graphs cross the boundary as graph-file text, rationals as "p/q" strings.

namespace {

Rational rat(const std::string& s) { return parse_rational(s); }

py::list strings(const std::vector<Rational>& values) {
  py::list out;
  for (const auto& v : values) out.append(to_string(v));
  return out;
}

py::list ids(const WeightedGraph& g, const std::vector<std::size_t>& positions) {
  py::list out;
  for (auto i : positions) out.append(g.vertex(i).id);
  return out;
}

py::list vertex_ids(const WeightedGraph& g) {
  py::list out;
  for (std::size_t i = 0; i < g.size(); ++i) out.append(g.vertex(i).id);
  return out;
}

py::dict sig(const Signature& s) {
  py::dict d;
  d["positive"] = s.positive;
  d["zero"] = s.zero;
  d["negative"] = s.negative;
  return d;
}

py::dict signature_of(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Rational>> m;
  for (const auto& row : rows) {
    auto& r = m.emplace_back();
    for (const auto& x : row) r.push_back(rat(x));
  }
  return sig(signature(SymMatrix(m)));
}

py::dict classify(const std::string& text) {
  const auto g = parse_graph(text);
  const auto c = classify_graph(g);
  py::dict d;
  d["class"] = to_string(c.kind);
  d["lanner"] = c.lanner;
  d["signature"] = sig(c.signature);
  return d;
}

py::dict discrepancies(const std::string& text) {
  const auto g = parse_graph(text);
  py::dict d;
  d["ids"] = vertex_ids(g);
  const auto r = log_discrepancies(g);
  if (const auto* s = std::get_if<SingularReport>(&r)) {
    py::dict singular;
    singular["rank"] = s->rank;
    singular["consistent"] = s->consistent;
    singular["kernel"] = strings(s->kernel);
    d["singular"] = singular;
    return d;
  }
  const auto& v = std::get<DiscrepancyVector>(r);
  d["log_discrepancy"] = strings(v.log_discrepancy);
  d["codiscrepancy"] = strings(v.codiscrepancy);
  return d;
}

py::dict singularity(const std::string& text, const std::string& eps, bool literal) {
  const auto r = classify_singularity(parse_graph(text), rat(eps),
                                      literal ? CanonicalReading::literal : CanonicalReading::discrepancy);
  py::dict d;
  d["min_log_discrepancy"] = to_string(r.min_log_discrepancy);
  d["terminal"] = r.terminal;
  d["canonical"] = r.canonical;
  d["kawamata_log_terminal"] = r.kawamata_log_terminal;
  d["log_canonical"] = r.log_canonical;
  d["eps_log_terminal"] = r.eps_log_terminal;
  d["eps_log_canonical"] = r.eps_log_canonical;
  d["strongest"] = to_string(r.strongest);
  return d;
}

py::dict log_terminal(const std::string& text, std::size_t budget) {
  const auto g = parse_graph(text);
  const auto r = is_log_terminal_graph(g, budget);
  py::dict d;
  d["log_terminal"] = r.log_terminal;
  d["witness"] = ids(g, r.witness);
  d["witness_log_discrepancy"] = strings(r.witness_log_discrepancy);
  return d;
}

py::dict star(const std::string& text, const std::string& eps) {
  const auto c = check_star(parse_graph(text), rat(eps));
  py::dict d;
  d["feasible"] = c.feasible;
  d["witness"] = c.feasible ? py::object(strings(c.witness)) : py::object(py::none());
  return d;
}

std::string blowup(const std::string& text, const std::string& u, const std::optional<std::string>& v,
                   const std::optional<std::string>& new_id) {
  const auto g = parse_graph(text);
  const auto id = new_id.value_or(g.fresh_id("E"));
  return serialize_graph(v ? blowup_edge(g, u, *v, id) : blowup_vertex(g, u, id));
}

py::dict enumeration(const EnumerationResult& r) {
  py::dict d;
  py::list graphs;
  for (const auto& g : r.graphs) graphs.append(serialize_graph(g));
  d["graphs"] = graphs;
  d["keys"] = r.keys;
  d["exhausted"] = r.exhausted;
  d["steps"] = r.steps;
  d["max_excess"] = r.max_excess;
  d["max_degree"] = r.max_degree;
  return d;
}

py::dict minimal_elliptic(const std::string& eps, std::size_t max_vertices, unsigned threads) {
  EnumerationOptions o;
  o.threads = threads;
  return enumeration(enumerate_minimal_elliptic_star(rat(eps), max_vertices, o));
}

py::dict lanner_closure(const std::string& eps, const std::optional<std::string>& seed, std::size_t max_steps,
                        unsigned threads) {
  EnumerationOptions o;
  o.threads = threads;
  const auto g = seed ? parse_graph(*seed) : lanner_chain(1);
  return enumeration(lanner_blowup_search(g, rat(eps), max_steps, o));
}

py::tuple run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact weighted dual graph computations";
  m.attr("__version__") = cli::version();

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<GraphError>(m, "GraphError", error);
  py::register_exception<PreconditionError>(m, "PreconditionError", error);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", error);
  py::register_exception<InfiniteTail>(m, "InfiniteTail", error);
  py::register_exception<ParseError>(m, "ParseError", error);
  py::register_exception<SingularSystem>(m, "SingularSystem", error);

  m.def("normalize", [](const std::string& s) { return to_string(rat(s)); });
  m.def("signature", &signature_of, py::arg("rows"));
  m.def("normalize_graph", [](const std::string& text) { return serialize_graph(parse_graph(text)); });
  m.def("classify", &classify, py::arg("graph"));
  m.def("discrepancies", &discrepancies, py::arg("graph"));
  m.def("classify_singularity", &singularity, py::arg("graph"), py::arg("epsilon"), py::arg("literal") = false);
  m.def("log_terminal", &log_terminal, py::arg("graph"), py::arg("budget") = kDefaultSubgraphBudget);
  m.def("check_star", &star, py::arg("graph"), py::arg("epsilon"));
  m.def("blowup", &blowup, py::arg("graph"), py::arg("u"), py::arg("v") = py::none(), py::arg("new_id") = py::none());
  m.def("blowdown", [](const std::string& text, const std::string& e) { return serialize_graph(blowdown(parse_graph(text), e)); },
        py::arg("graph"), py::arg("vertex"));
  m.def("minimal_elliptic", &minimal_elliptic, py::arg("epsilon"), py::arg("max_vertices"), py::arg("threads") = 1);
  m.def("lanner_closure", &lanner_closure, py::arg("epsilon"), py::arg("seed") = py::none(),
        py::arg("max_steps") = 32, py::arg("threads") = 1);
  m.def("pair_constants", [](const std::string& eps, int d) {
    const auto [c1, c2] = pair_bound_constants(rat(eps), d);
    return py::make_tuple(to_string(c1), to_string(c2));
  });
  m.def("dcc_contains", [](const std::string& set, const std::string& x) { return contains(CoefficientSet::parse(set), rat(x)); });
  m.def("dcc_min_positive", [](const std::string& set) -> std::optional<std::string> {
    const auto v = min_positive(CoefficientSet::parse(set));
    if (!v) return std::nullopt;
    return to_string(*v);
  });
  m.def("dcc_below", [](const std::string& set, const std::string& t) { return strings(below_threshold(CoefficientSet::parse(set), rat(t))); });
  m.def("dcc_quotient", [](const std::string& set, int max_m, int max_terms, int max_n) {
    const auto q = hurwitz_quotient_transform(CoefficientSet::parse(set), max_m, max_terms, max_n);
    return py::make_tuple(strings(q.values), q.complete);
  });
  m.def("run_cli", &run_cli, py::arg("args"));
}
