#pragma once

#include <vector>

#include "densedelta/graph.hpp"
#include "json.hpp"

namespace densedelta {

// Almost-clique decomposition. Two adjacent vertices are friends when they
// share at least (1-eta)*Delta common neighbors; a vertex is dense when at
// least (1-eta)*Delta of its neighbors are friends. Almost-cliques are the
// connected components of the friend graph restricted to dense vertices,
// listed in order of their smallest vertex. All thresholds compare exactly
// in integers; epsilon is fixed at 1/63 and eta defaults to 1/20.

struct AcdParams {
  int eta_num = 1;
  int eta_den = 20;
};

struct Acd {
  std::vector<std::vector<int>> cliques;  // sorted vertex lists
  std::vector<int> clique_of;             // vertex -> clique id, -1 if sparse
  std::vector<int> sparse;                // sorted non-dense vertices
};

Acd compute_acd(const Graph& g, AcdParams params = {});

// Checks each almost-clique against the decomposition guarantees:
//   size      (1-eps/4)*Delta <= |C| <= (1+eps)*Delta
//   internal  every member has >= (1-eps)*Delta neighbors inside C
//   external  every member has <= eps*Delta neighbors outside C
//   outsider  every non-member has <= (1-eps/2)*Delta neighbors inside C
struct AcdReport {
  bool pass = true;
  nlohmann::json violations = nlohmann::json::array();
};

AcdReport verify_acd(const Graph& g, const Acd& acd);

inline bool is_dense(const Acd& acd) { return acd.sparse.empty(); }

nlohmann::json acd_to_json(const Acd& acd, const AcdParams& params = {});

}  // namespace densedelta
