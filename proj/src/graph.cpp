#include "densedelta/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "densedelta/errors.hpp"

namespace densedelta {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
  Graph g;
  g.n_ = n;
  g.adj_.assign(n, {});
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw invalid_input("edge endpoint out of range: " + std::to_string(u) + " " +
                          std::to_string(v));
    if (u == v) throw invalid_input("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  for (size_t i = 1; i < edges.size(); ++i)
    if (edges[i] == edges[i - 1])
      throw invalid_input("duplicate edge " + std::to_string(edges[i].first) + " " +
                          std::to_string(edges[i].second));
  for (auto [u, v] : edges) {
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
    g.delta_ = std::max(g.delta_, static_cast<int>(nb.size()));
  }
  g.edges_ = std::move(edges);
  return g;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
  const auto& nb = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  int other = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(nb.begin(), nb.end(), other);
}

Graph read_graph(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw io_error("empty input", 1);
  std::istringstream header(line);
  long long n = -1, m = -1, delta = -1;
  if (!(header >> n >> m >> delta) || n < 0 || m < 0 || delta < 0)
    throw io_error("malformed header, expected \"n m delta\"", 1);
  std::string trailing;
  if (header >> trailing) throw io_error("trailing tokens in header", 1);

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(m));
  for (long long i = 0; i < m; ++i) {
    int lineno = static_cast<int>(i) + 2;
    if (!std::getline(in, line)) throw io_error("unexpected end of file, expected edge", lineno);
    std::istringstream es(line);
    long long u, v;
    if (!(es >> u >> v)) throw io_error("malformed edge line", lineno);
    if (es >> trailing) throw io_error("trailing tokens on edge line", lineno);
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw io_error("vertex index out of range", lineno);
    if (u == v) throw io_error("self-loop", lineno);
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }

  Graph g;
  try {
    g = Graph::from_edges(static_cast<int>(n), std::move(edges));
  } catch (const invalid_input& e) {
    throw io_error(e.what(), 0);
  }
  if (g.delta() != delta)
    throw io_error("header delta " + std::to_string(delta) + " does not match maximum degree " +
                       std::to_string(g.delta()),
                   1);
  return g;
}

void write_graph(const Graph& g, std::ostream& out) {
  out << g.n() << ' ' << g.m() << ' ' << g.delta() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path);
  return read_graph(in);
}

void write_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot open " + path + " for writing");
  write_graph(g, out);
  if (!out) throw io_error("write failed: " + path);
}

std::optional<std::vector<int>> detect_k_delta_plus_one(const Graph& g) {
  int d = g.delta();
  if (d == 0) return std::nullopt;
  for (int v = 0; v < g.n(); ++v) {
    if (g.degree(v) != d) continue;
    const auto& nb = g.neighbors(v);
    bool clique = true;
    for (size_t i = 0; i < nb.size() && clique; ++i)
      for (size_t j = i + 1; j < nb.size(); ++j)
        if (!g.has_edge(nb[i], nb[j])) {
          clique = false;
          break;
        }
    if (clique) {
      std::vector<int> vs = nb;
      vs.push_back(v);
      std::sort(vs.begin(), vs.end());
      return vs;
    }
  }
  return std::nullopt;
}

Induced induced_subgraph(const Graph& g, std::vector<int> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  for (int v : vertices)
    if (v < 0 || v >= g.n()) throw invalid_input("induced vertex out of range");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
    for (int u : g.neighbors(vertices[i])) {
      if (u <= vertices[i]) continue;
      auto it = std::lower_bound(vertices.begin(), vertices.end(), u);
      if (it != vertices.end() && *it == u)
        edges.emplace_back(i, static_cast<int>(it - vertices.begin()));
    }
  Induced result;
  result.graph = Graph::from_edges(static_cast<int>(vertices.size()), std::move(edges));
  result.vertices = std::move(vertices);
  return result;
}

bool Coloring::is_total() const {
  for (int c : colors)
    if (c < 0) return false;
  return true;
}

int Coloring::colored_count() const {
  int k = 0;
  for (int c : colors) k += c >= 0;
  return k;
}

ColoringReport verify_coloring(const Graph& g, const Coloring& c, bool require_total) {
  ColoringReport r;
  if (static_cast<int>(c.colors.size()) != g.n())
    throw invalid_input("coloring has " + std::to_string(c.colors.size()) +
                        " entries for a graph with " + std::to_string(g.n()) + " vertices");
  for (int v = 0; v < g.n(); ++v) {
    int col = c.colors[v];
    if (col == -1) {
      if (require_total) r.uncolored.push_back(v);
      continue;
    }
    if (col < 0 || col >= c.delta) r.out_of_range.push_back(v);
  }
  for (auto [u, v] : g.edges())
    if (c.colors[u] != -1 && c.colors[u] == c.colors[v]) r.monochromatic_edges.emplace_back(u, v);
  r.pass = r.monochromatic_edges.empty() && r.out_of_range.empty() && r.uncolored.empty();
  return r;
}

std::vector<int> palette(const Graph& g, const Coloring& c, int v) {
  std::vector<char> used(c.delta, 0);
  for (int u : g.neighbors(v)) {
    int col = c.colors[u];
    if (col >= 0 && col < c.delta) used[col] = 1;
  }
  std::vector<int> free;
  for (int col = 0; col < c.delta; ++col)
    if (!used[col]) free.push_back(col);
  return free;
}

nlohmann::json coloring_to_json(const Coloring& c) {
  return nlohmann::json{{"delta", c.delta}, {"colors", c.colors}};
}

Coloring coloring_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("delta") || !j.contains("colors"))
    throw io_error("coloring JSON must be an object with \"delta\" and \"colors\"");
  Coloring c;
  c.delta = j.at("delta").get<int>();
  c.colors = j.at("colors").get<std::vector<int>>();
  return c;
}

Coloring read_coloring_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw io_error(std::string("bad JSON in ") + path + ": " + e.what());
  }
  return coloring_from_json(j);
}

void write_coloring_file(const Coloring& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot open " + path + " for writing");
  out << coloring_to_json(c).dump(2) << '\n';
}

}  // namespace densedelta
