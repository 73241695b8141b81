#pragma once

#include <utility>
#include <vector>

#include "densedelta/graph.hpp"

namespace densedelta {

// ----- degree splitting ------------------------------------------------

// Splits a multigraph's edges into 2^levels parts by repeated Eulerian
// 2-splits (a virtual vertex is joined to the odd-degree vertices, circuits
// are traversed alternately). Per level each vertex's two half-degrees
// differ by at most 2; after every invocation the composite window
//   |part_degree * 2^levels - degree| <= 4 * 2^levels - 4
// is asserted for every vertex and part (check_failure on violation).
// Self-loops are not supported. Deterministic: circuits start at the
// virtual vertex when present, otherwise at the min-ID vertex with unused
// edges, and always traverse the smallest (neighbor, edge) first.
struct SplitResult {
  int parts = 1;
  std::vector<int> part;  // per edge, in [0, parts)
};

SplitResult degree_split(int n_vertices, const std::vector<std::pair<int, int>>& edges,
                         int levels);

// The window above as a predicate, integer-exact. Exposed for tests.
bool split_window_ok(int degree, int part_degree, int levels);

// ----- splitting claim -------------------------------------------------

// Numeric check of (1/2 + eps)^n <= 1/2^n + 2*eps over n in 1..20 and
// eps in {0, 0.01, ..., 0.5}.
struct SplitClaimCell {
  int n = 0;
  double eps = 0;
  double lhs = 0;
  double rhs = 0;
};

struct SplitClaimReport {
  bool pass = false;
  double max_slack = 0;  // max over the grid of rhs - lhs
  double min_slack = 0;  // min over the grid (>= 0 iff pass)
  std::vector<SplitClaimCell> violations;
};

SplitClaimReport check_split_claim();

// ----- list coloring ---------------------------------------------------

// A coloring instance: a graph on compact IDs plus one color list per
// vertex. Lists are arbitrary integer sets (callers use a global palette).
struct ListInstance {
  Graph g;
  std::vector<std::vector<int>> lists;
};

struct ListColorResult {
  std::vector<int> colors;  // one per instance vertex, drawn from its list
  int rounds = 0;
};

// Simulated-distributed list coloring under the deg+1 precondition
// |list(v)| >= deg(v) + 1 (invalid_input naming the vertex otherwise).
// Vertices first agree on a proper auxiliary labeling with Delta_inst + 1
// classes by iterated ID-based relabeling (local maxima among the
// out-of-range labels move first), then color class by class, each vertex
// taking its smallest free list color. Rounds are the driver's count.
ListColorResult deg_plus1_list_color(const ListInstance& inst);

// ----- ruling sets -----------------------------------------------------

// (2, r)-ruling set: members are pairwise non-adjacent and every vertex is
// within distance r of a member. Simulated-distributed greedy by ID: in
// each phase the minimum active ID within every r-ball joins and its r-ball
// is suppressed. Members end up pairwise at distance >= r + 1.
struct RulingSetResult {
  std::vector<char> in_set;
  int rounds = 0;
};

RulingSetResult ruling_set(const Graph& g, int r);

// BFS check of the two ruling properties; used by tests and debug mode.
bool verify_ruling_set(const Graph& g, const std::vector<char>& in_set, int r);

}  // namespace densedelta
