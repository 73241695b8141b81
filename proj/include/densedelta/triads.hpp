#pragma once

#include <vector>

#include "densedelta/acd.hpp"
#include "densedelta/graph.hpp"
#include "densedelta/loopholes.hpp"
#include "densedelta/matching.hpp"
#include "densedelta/sim.hpp"
#include "json.hpp"

namespace densedelta {

// Later matching stages: thin the oriented matching down to two outgoing
// edges per linked clique, extract one slack triad per clique from those,
// and color the hard cliques around the slack the triads create.

// Multigraph on the per-clique tail and head groups, one edge per oriented
// edge. Clique c owns nodes 2c (tails) and 2c+1 (heads); heads are never
// tails because the matching is vertex-disjoint.
struct SubCliqueGraph {
  int nodes = 0;
  std::vector<std::pair<int, int>> edges;  // parallel to the matching's edge list
};

SubCliqueGraph build_gq(const Acd& acd, const OrientedMatching& f2);

// Splits the group multigraph into four parts and keeps part zero, so each
// clique's out- and in-degrees drop to roughly a quarter. Asserts that every
// linked clique keeps >= 2 outgoing edges and that every hard clique's
// incoming count stays below (delta - 2*eps*delta - 1)/2, then discards all
// but the two lowest-tail outgoing edges per clique.
OrientedMatching derive_f3(const Graph& g, const Acd& acd, const CliqueClassification& cls,
                           const OrientedMatching& f2);

struct SlackTriad {
  int u = -1;      // slack vertex, tail of the lower outgoing edge
  int v = -1;      // pair vertex inside the clique, tail of the other edge
  int w = -1;      // pair vertex outside, head of the lower edge
  int clique = -1;
};

std::vector<SlackTriad> form_triads(const Graph& g, const Acd& acd,
                                    const CliqueClassification& cls,
                                    const OrientedMatching& f3);

// Colors every slack pair {v, w} through the virtual pair graph; both real
// vertices take the node's color. Asserts the pair graph's maximum degree
// is at most delta - 2.
void color_slack_pairs(const Graph& g, const std::vector<SlackTriad>& triads,
                       Coloring& coloring, RoundTrace& trace);

// Two list-coloring instances finish the hard cliques: first everything
// except slack vertices and anchors (their uncolored clique-mate is the
// slack source), then the slack vertices (two pair neighbors share a color)
// and anchors (an uncolored easy neighbor is the slack source).
void color_remaining_hard(const Graph& g, const Acd& acd, const CliqueClassification& cls,
                          const std::vector<SlackTriad>& triads, Coloring& coloring,
                          RoundTrace& trace);

nlohmann::json triads_to_json(const std::vector<SlackTriad>& triads);

}  // namespace densedelta
