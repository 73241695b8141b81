#pragma once

#include <utility>
#include <vector>

#include "densedelta/acd.hpp"
#include "densedelta/graph.hpp"

// Small graph builders shared across test files.

inline densedelta::Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return densedelta::Graph::from_edges(n, std::move(e));
}

inline densedelta::Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return densedelta::Graph::from_edges(n, std::move(e));
}

inline densedelta::Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return densedelta::Graph::from_edges(n, std::move(e));
}

// A decomposition handed to the loophole/classification stages directly,
// bypassing compute_acd: consecutive blocks of the given sizes become the
// cliques and anything left over is sparse.
inline densedelta::Acd block_acd(int n, const std::vector<int>& sizes) {
  densedelta::Acd acd;
  acd.clique_of.assign(n, -1);
  int next = 0;
  for (int s : sizes) {
    std::vector<int> c;
    for (int i = 0; i < s; ++i) {
      acd.clique_of[next] = static_cast<int>(acd.cliques.size());
      c.push_back(next++);
    }
    acd.cliques.push_back(std::move(c));
  }
  for (int v = next; v < n; ++v) acd.sparse.push_back(v);
  return acd;
}

// Disjoint complete cliques of the given sizes plus explicit crossing edges.
inline densedelta::Graph clique_union(const std::vector<int>& sizes,
                                      std::vector<std::pair<int, int>> crossing) {
  int n = 0;
  std::vector<std::pair<int, int>> e = std::move(crossing);
  for (int s : sizes) {
    for (int i = 0; i < s; ++i)
      for (int j = i + 1; j < s; ++j) e.emplace_back(n + i, n + j);
    n += s;
  }
  return densedelta::Graph::from_edges(n, std::move(e));
}
