#pragma once

#include <vector>

#include "densedelta/acd.hpp"
#include "densedelta/graph.hpp"
#include "densedelta/loopholes.hpp"
#include "json.hpp"

namespace densedelta {

// First matching stage over the crossing edges between hard cliques, the
// 28-way sub-clique hypergraph built on top of it, and the rearranged
// oriented matching every linked clique draws its outgoing edges from.

struct MatchingF1 {
  std::vector<std::pair<int, int>> edges;  // u < v, sorted
  std::vector<int> partner;                // per vertex, -1 when unmatched
  int rounds = 0;
};

// Maximal matching on edges whose endpoints lie in two distinct hard
// cliques. Simulated-distributed: an edge joins once it is the smallest
// alive key at both endpoints; matched vertices withdraw their edges.
MatchingF1 maximal_matching_f1(const Graph& g, const Acd& acd, const CliqueClassification& cls);

struct GrabHypergraph {
  std::vector<std::vector<int>> subs;  // sub-clique -> sorted member vertices
  std::vector<int> sub_clique;         // sub-clique -> home clique
  std::vector<int> sub_of;             // vertex -> sub-clique or -1
  std::vector<int> f;                  // vertex -> proposal target or -1
  std::vector<int> phi;                // vertex -> F1 edge index or -1
  std::vector<std::vector<int>> incidence;  // sub-clique -> sorted F1 edge indices
  std::vector<std::vector<int>> hyper;      // F1 edge index -> sub-cliques proposing it
  int delta_h = 0;  // min incident hyperedges over sub-cliques
  int r_h = 0;      // max sub-cliques on one hyperedge
  bool margin_ok = false;  // 10*delta_h > 11*r_h, diagnostic only
};

// Splits every linked clique into 28 balanced ID blocks and derives the
// proposal maps: f(v) is v itself when matched, otherwise v's smallest
// external neighbor inside a hard clique (matched by maximality); phi(v) is
// the matching edge at f(v). Asserts that proposals are distinct within
// each sub-clique, that delta_h >= r_h, and that 63*r_h <= 2*delta(g).
GrabHypergraph build_grab_hypergraph(const Graph& g, const Acd& acd,
                                     const CliqueClassification& cls, const MatchingF1& f1);

// Distinct-representative assignment: item per row drawn from that row's
// candidates, no candidate used twice. Augmenting paths in row order,
// candidates tried in ascending order. Returns one pick per row or throws
// check_failure when some row cannot be completed.
std::vector<int> assign_distinct(const std::vector<std::vector<int>>& incidence, int n_items);

struct Grabbing {
  std::vector<int> grab_of_sub;  // sub-clique -> grabbed F1 edge index
  std::vector<int> sub_of_edge;  // F1 edge index -> sub-clique or -1
  std::vector<int> witness;      // F1 edge index -> proposing vertex or -1
};

// Every sub-clique grabs one of its incident hyperedges, no hyperedge
// grabbed twice; the assignment is re-verified independently after solving.
Grabbing solve_heg(const GrabHypergraph& h);

bool verify_grabbing(const GrabHypergraph& h, const Grabbing& grab);

struct OrientedEdge {
  int tail = -1;
  int head = -1;
};

struct OrientedMatching {
  std::vector<OrientedEdge> edges;
};

// Rearranged matching: a grabbed hyperedge whose witness is one of its own
// endpoints is kept as is; otherwise the witness's proposal edge {v, f(v)}
// replaces it. Tails sit inside the grabbing clique, heads outside. Asserts
// vertex-disjointness and >= 28 outgoing edges per linked clique.
OrientedMatching build_f2(const Graph& g, const Acd& acd, const CliqueClassification& cls,
                          const MatchingF1& f1, const GrabHypergraph& h, const Grabbing& grab);

nlohmann::json f1_to_json(const MatchingF1& f1);
nlohmann::json oriented_to_json(const OrientedMatching& m);

}  // namespace densedelta
