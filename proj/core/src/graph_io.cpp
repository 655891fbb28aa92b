#include "geoclique/graph_io.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace geoclique {

namespace {

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::string save_graph_json(const Graph& g) {
  std::ostringstream os;
  os << "{\"n\":" << g.size() << ",\"edges\":[";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    os << (first ? "" : ",") << '[' << u << ',' << v << ']';
    first = false;
  }
  os << ']';
  if (g.weighted()) {
    os << ",\"weights\":[";
    for (std::size_t i = 0; i < g.size(); ++i) os << (i ? "," : "") << num(g.weight(i));
    os << ']';
  }
  os << "}\n";
  return os.str();
}

Graph load_graph_json(const std::string& text) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("graph: malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw InputError("$: expected an object");
  auto n_it = j.find("n");
  if (n_it == j.end() || !n_it->is_number_integer() || n_it->get<long long>() < 0)
    throw InputError("$.n: expected a nonnegative integer");
  const auto n = static_cast<std::size_t>(n_it->get<long long>());
  Graph g(n);
  auto e_it = j.find("edges");
  if (e_it == j.end() || !e_it->is_array()) throw InputError("$.edges: expected an array");
  for (std::size_t k = 0; k < e_it->size(); ++k) {
    const std::string path = "$.edges[" + std::to_string(k) + "]";
    const json& e = (*e_it)[k];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw InputError(path + ": expected [u, v]");
    const long long u = e[0].get<long long>(), v = e[1].get<long long>();
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
      throw InputError(path + ": endpoint out of range");
    if (u == v) throw InputError(path + ": self-loop");
    g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  if (auto w_it = j.find("weights"); w_it != j.end() && !w_it->is_null()) {
    if (!w_it->is_array() || w_it->size() != n) throw InputError("$.weights: expected n numbers");
    std::vector<double> w;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(*w_it)[i].is_number()) throw InputError("$.weights[" + std::to_string(i) + "]: expected a number");
      w.push_back((*w_it)[i].get<double>());
    }
    try {
      g.set_weights(std::move(w));
    } catch (const InputError& e) {
      throw InputError(std::string("$.") + e.what());
    }
  }
  return g;
}

std::string save_dimacs(const Graph& g) {
  std::ostringstream os;
  os << "p edge " << g.size() << ' ' << g.edge_count() << '\n';
  if (g.weighted())
    for (std::size_t i = 0; i < g.size(); ++i) os << "n " << i + 1 << ' ' << num(g.weight(i)) << '\n';
  for (auto [u, v] : g.edges()) os << "e " << u + 1 << ' ' << v + 1 << '\n';
  return os.str();
}

Graph load_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  Graph g;
  bool header = false;
  std::vector<double> w;
  bool any_weight = false;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string where = "line " + std::to_string(lineno);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string fmt;
      long long n = -1, m = -1;
      if (!(ls >> fmt >> n >> m) || n < 0) throw InputError(where + ": malformed problem line");
      g = Graph(static_cast<std::size_t>(n));
      w.assign(static_cast<std::size_t>(n), 1.0);
      header = true;
    } else if (tag == "e") {
      long long u, v;
      if (!header) throw InputError(where + ": edge before problem line");
      if (!(ls >> u >> v) || u < 1 || v < 1 || static_cast<std::size_t>(u) > g.size() ||
          static_cast<std::size_t>(v) > g.size() || u == v)
        throw InputError(where + ": bad edge");
      g.add_edge(static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1));
    } else if (tag == "n") {
      long long v;
      double x;
      if (!header) throw InputError(where + ": weight before problem line");
      if (!(ls >> v >> x) || v < 1 || static_cast<std::size_t>(v) > g.size()) throw InputError(where + ": bad weight");
      w[static_cast<std::size_t>(v - 1)] = x;
      any_weight = true;
    } else {
      throw InputError(where + ": unknown line tag '" + tag + "'");
    }
  }
  if (!header) throw InputError("dimacs: missing problem line");
  if (any_weight) g.set_weights(std::move(w));
  return g;
}

Graph load_graph(const std::string& text) {
  for (char c : text) {
    if (c == ' ' || c == '\n' || c == '\t' || c == '\r') continue;
    return c == '{' ? load_graph_json(text) : load_dimacs(text);
  }
  throw InputError("graph: empty input");
}

}  // namespace geoclique
