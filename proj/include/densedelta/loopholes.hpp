#pragma once

#include <vector>

#include "densedelta/acd.hpp"
#include "densedelta/graph.hpp"
#include "densedelta/sim.hpp"

namespace densedelta {

// Structures that keep a dense graph from being Delta-colorable greedily.
// A loophole is either a single almost-clique member that is short a
// neighbor (kind 1) or a set of 4 or 6 vertices carrying a spanning even
// cycle without being a clique (kind 2). By Erdos-Rubin-Taylor such sets
// are colorable from degree lists, which is what the final stage exploits.

struct Loophole {
  int kind = 0;
  std::vector<int> vertices;  // sorted

  friend bool operator==(const Loophole& a, const Loophole& b) {
    return a.kind == b.kind && a.vertices == b.vertices;
  }
  friend bool operator<(const Loophole& a, const Loophole& b) {
    return a.vertices != b.vertices ? a.vertices < b.vertices : a.kind < b.kind;
  }
};

// Exhaustive reference enumeration over all 4- and 6-subsets. Throws
// budget_exceeded when the subset count is out of reach.
std::vector<Loophole> enumerate_loopholes_brute(const Graph& g, const Acd& acd);

// Closed-form enumeration for graphs whose almost-cliques are complete and
// whose vertices carry at most one crossing edge (invalid_input otherwise).
// Exhaustive under those preconditions: cycle loopholes are the missing
// diagonals' 4-sets, two-clique round trips with fillers, and three-clique
// tours.
std::vector<Loophole> enumerate_loopholes_structured(const Graph& g, const Acd& acd);

// Tiered enumeration: brute force on small graphs, otherwise a structured
// search that requires every almost-clique to induce a complete graph and
// every vertex to carry at most one crossing edge (throws invalid_input
// when either precondition fails; the decomposition's external-degree
// bound implies the latter whenever delta <= 125, and the generators
// satisfy it at every delta). Results are sorted.
std::vector<Loophole> enumerate_loopholes(const Graph& g, const Acd& acd);

// Classification of almost-cliques once loopholes are known. A clique
// touching a loophole is easy. The remaining (hard) cliques are genuine
// cliques whose members all have full degree; they split into linked
// cliques, where every member has an external neighbor in another hard
// clique, and anchored cliques, which designate their smallest member with
// an easy external neighbor as the anchor.
enum class CliqueType { Easy, Linked, Anchored };

struct CliqueClassification {
  std::vector<CliqueType> type;
  std::vector<int> anchor;    // -1 unless anchored
  std::vector<int> ext_deg;   // external edges per member, -1 for easy cliques
};

CliqueClassification classify_cliques(const Graph& g, const Acd& acd,
                                      const std::vector<Loophole>& loopholes);

// Final coloring stage: colors every still-uncolored vertex (the easy
// cliques) with the palette 0..Delta-1. Votes thin the loophole list, a
// (2,6)-ruling set spaces the survivors out, layers peel inward toward
// them, and each ruling loophole finishes by brute force from its lists.
void color_easy_and_loopholes(const Graph& g, const Acd& acd,
                              const std::vector<Loophole>& loopholes,
                              const CliqueClassification& cls, Coloring& coloring,
                              RoundTrace& trace);

inline constexpr int kLoopholeRulingRadius = 6;
inline constexpr int kPeelDepth = 25;

}  // namespace densedelta
