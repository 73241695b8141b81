#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace densedelta {

// Simple undirected graph with 0-indexed vertex IDs. Immutable after
// construction; adjacency lists are sorted and the edge list is kept in
// canonical form (u < v, lexicographically sorted). IDs double as the
// tie-breakers everywhere downstream, so nothing here renumbers vertices.
class Graph {
 public:
  Graph() = default;

  // Validates: indices in range, no self-loops, no duplicates.
  static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  int delta() const { return delta_; }  // maximum degree

  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const;

  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

 private:
  int n_ = 0;
  int delta_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

// Text format, newline-terminated ASCII:
//   line 1: "n m delta"
//   m lines: "u v"
// The reader accepts edges in any order (and either endpoint order) but
// rejects self-loops, duplicates, out-of-range indices and a delta field
// that disagrees with the true maximum degree, each with its line number.
// The writer always emits canonical form, so write(read(x)) == x for
// canonical x.
Graph read_graph(std::istream& in);
void write_graph(const Graph& g, std::ostream& out);
Graph read_graph_file(const std::string& path);
void write_graph_file(const Graph& g, const std::string& path);

// Vertices of some K_{delta+1}, sorted by ID, if one exists. A graph with
// max degree delta contains K_{delta+1} iff some vertex of full degree has a
// complete closed neighborhood, so the scan is over those vertices only.
std::optional<std::vector<int>> detect_k_delta_plus_one(const Graph& g);

// Subgraph induced on `vertices` (deduplicated and sorted). Vertex i of the
// subgraph is vertices[i].
struct Induced {
  Graph graph;
  std::vector<int> vertices;
};

Induced induced_subgraph(const Graph& g, std::vector<int> vertices);

// Partial vertex coloring. colors[v] == -1 means uncolored; the color space
// is [0, delta). `delta` is carried explicitly so a coloring file can be
// checked against the graph it claims to color.
struct Coloring {
  int delta = 0;
  std::vector<int> colors;

  bool is_total() const;
  int colored_count() const;
};

struct ColoringReport {
  bool pass = false;
  std::vector<std::pair<int, int>> monochromatic_edges;
  std::vector<int> out_of_range;  // colored outside [0, delta)
  std::vector<int> uncolored;     // populated only when require_total
};

ColoringReport verify_coloring(const Graph& g, const Coloring& c, bool require_total);

// Free colors for v: [0, delta) minus the colors of colored neighbors.
std::vector<int> palette(const Graph& g, const Coloring& c, int v);

// JSON: {"delta": D, "colors": [c0, c1, ...]} with -1 for uncolored.
nlohmann::json coloring_to_json(const Coloring& c);
Coloring coloring_from_json(const nlohmann::json& j);
Coloring read_coloring_file(const std::string& path);
void write_coloring_file(const Coloring& c, const std::string& path);

}  // namespace densedelta
