#include "diagramkit/graph_file.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "diagramkit/errors.hpp"

namespace diagramkit {

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

int parse_field(const std::string& token, const std::string& name, std::size_t line) {
  const std::string prefix = name + "=";
  if (token.rfind(prefix, 0) != 0) throw ParseError(line, "expected " + prefix + "<int>, got '" + token + "'");
  const char* first = token.data() + prefix.size();
  const char* last = token.data() + token.size();
  int value = 0;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw ParseError(line, "malformed integer in '" + token + "'");
  }
  return value;
}

}  // namespace

WeightedGraph parse_graph(const std::string& text) {
  WeightedGraph g;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto t = tokens(line);
    if (t.empty() || t[0][0] == '#') continue;
    try {
      if (t[0] == "v") {
        if (t.size() < 3 || t.size() > 4) throw ParseError(lineno, "vertex line needs: v <id> w=<int> [g=<int>]");
        const int w = parse_field(t[2], "w", lineno);
        const int genus = t.size() == 4 ? parse_field(t[3], "g", lineno) : 0;
        g.add_vertex(t[1], w, genus);
      } else if (t[0] == "e") {
        if (t.size() < 3 || t.size() > 4) throw ParseError(lineno, "edge line needs: e <id> <id> [m=<int>]");
        const int m = t.size() == 4 ? parse_field(t[3], "m", lineno) : 1;
        if (m < 1) throw ParseError(lineno, "edge multiplicity must be >= 1");
        for (int i = 1; i <= 2; ++i) {
          if (!g.contains(t[i])) throw ParseError(lineno, "edge endpoint '" + t[i] + "' is not a declared vertex");
        }
        const std::size_t u = g.index_of(t[1]);
        const std::size_t v = g.index_of(t[2]);
        if (g.multiplicity(u, v) != 0) throw ParseError(lineno, "edge " + t[1] + "-" + t[2] + " declared twice");
        g.set_edge(u, v, m);
      } else {
        throw ParseError(lineno, "unknown record '" + t[0] + "'");
      }
    } catch (const GraphError& e) {
      throw ParseError(lineno, e.what());
    }
  }
  return g;
}

WeightedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string serialize_graph(const WeightedGraph& g) {
  std::string out;
  for (const auto& v : g.vertices()) {
    out += "v " + v.id + " w=" + std::to_string(v.weight) + " g=" + std::to_string(v.genus) + "\n";
  }
  for (const auto& [e, m] : g.edges()) {
    out += "e " + g.vertex(e.first).id + " " + g.vertex(e.second).id + " m=" + std::to_string(m) + "\n";
  }
  return out;
}

}  // namespace diagramkit
