#pragma once

#include <cstdint>
#include <vector>

#include "densedelta/graph.hpp"
#include "json.hpp"

namespace densedelta {

// Instance generators. Both build k disjoint cliques of size delta whose
// external edges realize a delta-regular bipartite "super" graph on the
// cliques, one real edge per super edge. The result is delta-regular and
// every planted clique is an almost-clique of the decomposition.
//
// gen_hard_dense leaves that structure intact, so no vertex set of at most
// six vertices forms a non-clique even cycle and nobody is short a neighbor:
// every clique is hard. gen_mixed_dense then plants defects:
//   easy_drop   deletes an external edge, leaving one vertex on each side
//               with degree delta-1 (two cliques turn easy);
//   easy_double reroutes two external edges so one clique pair is joined
//               twice, which creates an induced 4-cycle across the pair
//               (two cliques turn easy; the two donor cliques stay hard).
//
// Requires k even, k >= 2*delta, delta >= 2. The bound k >= 2*delta is
// structural: the super graph must be delta-regular, simple and
// triangle-free, which by Mantel's theorem forces at least 2*delta cliques.

struct GenResult {
  Graph graph;
  std::vector<std::vector<int>> cliques;  // cliques[c] = vertices of clique c
  std::vector<int> planted_easy;          // clique ids expected to turn easy
};

GenResult gen_hard_dense(int k, int delta, std::uint64_t seed);
GenResult gen_mixed_dense(int k, int delta, std::uint64_t seed, int easy_drop, int easy_double);

nlohmann::json gen_metadata_json(const GenResult& r);

}  // namespace densedelta
