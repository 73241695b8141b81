#include "densedelta/triads.hpp"

#include <algorithm>
#include <cstdint>

#include "densedelta/errors.hpp"
#include "densedelta/subroutines.hpp"

namespace densedelta {

SubCliqueGraph build_gq(const Acd& acd, const OrientedMatching& f2) {
  SubCliqueGraph gq;
  gq.nodes = 2 * static_cast<int>(acd.cliques.size());
  for (const auto& e : f2.edges)
    gq.edges.emplace_back(2 * acd.clique_of[e.tail], 2 * acd.clique_of[e.head] + 1);
  return gq;
}

OrientedMatching derive_f3(const Graph& g, const Acd& acd, const CliqueClassification& cls,
                           const OrientedMatching& f2) {
  const std::int64_t delta = g.delta();
  const int k = static_cast<int>(acd.cliques.size());

  SubCliqueGraph gq = build_gq(acd, f2);
  SplitResult split = degree_split(gq.nodes, gq.edges, 2);

  std::vector<std::vector<int>> out0(k);  // part-zero outgoing edge indices per clique
  std::vector<std::int64_t> in0(k, 0);
  for (int i = 0; i < static_cast<int>(f2.edges.size()); ++i) {
    if (split.part[i] != 0) continue;
    out0[acd.clique_of[f2.edges[i].tail]].push_back(i);
    in0[acd.clique_of[f2.edges[i].head]]++;
  }

  for (int c = 0; c < k; ++c) {
    if (cls.type[c] == CliqueType::Linked && static_cast<int>(out0[c].size()) < 2)
      throw check_failure("linked clique lost its outgoing edges in the split",
                          {{"clique", c},
                           {"outgoing_before", std::count_if(f2.edges.begin(), f2.edges.end(),
                                                             [&](const OrientedEdge& e) {
                                                               return acd.clique_of[e.tail] == c;
                                                             })},
                           {"outgoing_after", out0[c].size()}});
    if (cls.type[c] != CliqueType::Easy && 126 * in0[c] >= 61 * delta - 63)
      throw check_failure("hard clique over the incoming ceiling",
                          {{"clique", c}, {"incoming", in0[c]}, {"delta", delta}});
  }

  std::vector<char> keep(f2.edges.size(), 0);
  for (int c = 0; c < k; ++c) {
    auto& cand = out0[c];
    std::sort(cand.begin(), cand.end(),
              [&](int a, int b) { return f2.edges[a].tail < f2.edges[b].tail; });
    for (size_t i = 0; i < cand.size() && i < 2; ++i) keep[cand[i]] = 1;
  }

  OrientedMatching f3;
  for (int i = 0; i < static_cast<int>(f2.edges.size()); ++i)
    if (keep[i]) f3.edges.push_back(f2.edges[i]);
  return f3;
}

std::vector<SlackTriad> form_triads(const Graph& g, const Acd& acd,
                                    const CliqueClassification& cls,
                                    const OrientedMatching& f3) {
  const std::int64_t delta = g.delta();
  const int k = static_cast<int>(acd.cliques.size());

  std::vector<std::vector<OrientedEdge>> out(k);
  for (const auto& e : f3.edges) out[acd.clique_of[e.tail]].push_back(e);

  std::vector<SlackTriad> triads;
  for (int c = 0; c < k; ++c) {
    if (cls.type[c] != CliqueType::Linked) continue;
    if (out[c].size() != 2)
      throw check_failure("linked clique without exactly two outgoing edges",
                          {{"clique", c}, {"outgoing", out[c].size()}});
    auto& e = out[c];
    std::sort(e.begin(), e.end(),
              [](const OrientedEdge& a, const OrientedEdge& b) { return a.tail < b.tail; });
    SlackTriad t{e[0].tail, e[1].tail, e[0].head, c};
    if (g.has_edge(t.v, t.w))
      throw check_failure("slack pair is adjacent",
                          {{"clique", c}, {"v", t.v}, {"w", t.w}});
    triads.push_back(t);
  }

  std::vector<char> seen(g.n(), 0);
  for (const auto& t : triads)
    for (int x : {t.u, t.v, t.w}) {
      if (seen[x])
        throw check_failure("slack triads overlap", {{"vertex", x}, {"clique", t.clique}});
      seen[x] = 1;
    }

  std::vector<std::int64_t> pair_count(k, 0);
  for (const auto& t : triads) {
    pair_count[acd.clique_of[t.v]]++;
    pair_count[acd.clique_of[t.w]]++;
  }
  for (int c = 0; c < k; ++c)
    if (126 * pair_count[c] > 61 * delta + 63)
      throw check_failure("too many pair vertices in one clique",
                          {{"clique", c}, {"count", pair_count[c]}});
  return triads;
}

void color_slack_pairs(const Graph& g, const std::vector<SlackTriad>& triads,
                       Coloring& coloring, RoundTrace& trace) {
  const int delta = g.delta();
  std::vector<std::vector<int>> groups;
  for (const auto& t : triads) groups.push_back({std::min(t.v, t.w), std::max(t.v, t.w)});

  VirtualGraph vg = lift_virtual(g, groups);
  for (int i = 0; i < vg.quotient.n(); ++i)
    if (vg.quotient.degree(i) > delta - 2)
      throw check_failure("pair graph degree over its ceiling",
                          {{"pair", groups[i]}, {"degree", vg.quotient.degree(i)}});

  ListInstance inst;
  inst.g = vg.quotient;
  inst.lists.resize(groups.size());
  for (size_t i = 0; i < groups.size(); ++i) {
    std::vector<char> used(delta, 0);
    for (int member : groups[i])
      for (int u : g.neighbors(member)) {
        int col = coloring.colors[u];
        if (col >= 0 && col < delta) used[col] = 1;
      }
    for (int col = 0; col < delta; ++col)
      if (!used[col]) inst.lists[i].push_back(col);
    if (static_cast<int>(inst.lists[i].size()) < vg.quotient.degree(static_cast<int>(i)) + 1)
      throw check_failure("slack pair short on colors", {{"pair", groups[i]}});
  }

  auto res = deg_plus1_list_color(inst);
  for (size_t i = 0; i < groups.size(); ++i)
    for (int member : groups[i]) coloring.colors[member] = res.colors[i];
  trace.add("pair-coloring", res.rounds, kModeSimulated);
}

namespace {

int color_instance(const Graph& g, const std::vector<int>& members, Coloring& coloring) {
  Induced ind = induced_subgraph(g, members);
  ListInstance inst;
  inst.g = ind.graph;
  inst.lists.resize(ind.vertices.size());
  for (size_t i = 0; i < ind.vertices.size(); ++i) {
    inst.lists[i] = palette(g, coloring, ind.vertices[i]);
    if (static_cast<int>(inst.lists[i].size()) < ind.graph.degree(static_cast<int>(i)) + 1) {
      std::vector<int> around;
      for (int u : g.neighbors(ind.vertices[i]))
        if (coloring.colors[u] != -1) around.push_back(coloring.colors[u]);
      std::sort(around.begin(), around.end());
      throw check_failure("vertex short on colors for its instance",
                          {{"vertex", ind.vertices[i]}, {"neighbor_colors", around}});
    }
  }
  auto res = deg_plus1_list_color(inst);
  for (size_t i = 0; i < ind.vertices.size(); ++i)
    coloring.colors[ind.vertices[i]] = res.colors[i];
  return res.rounds;
}

}  // namespace

void color_remaining_hard(const Graph& g, const Acd& acd, const CliqueClassification& cls,
                          const std::vector<SlackTriad>& triads, Coloring& coloring,
                          RoundTrace& trace) {
  const int k = static_cast<int>(acd.cliques.size());
  std::vector<char> held_back(g.n(), 0);  // slack vertices and anchors
  for (const auto& t : triads) held_back[t.u] = 1;

  std::vector<int> anchors;
  for (int c = 0; c < k; ++c) {
    if (cls.type[c] != CliqueType::Anchored) continue;
    int a = cls.anchor[c];
    if (coloring.colors[a] != -1) {
      // The designated anchor was colored as somebody's pair vertex; fall
      // back to the smallest uncolored member with an easy external
      // neighbor, which serves the same purpose.
      a = -1;
      for (int v : acd.cliques[c]) {
        if (coloring.colors[v] != -1) continue;
        bool easy_out = false;
        for (int u : g.neighbors(v)) {
          int cu = acd.clique_of[u];
          if (cu != c && (cu == -1 || cls.type[cu] == CliqueType::Easy)) easy_out = true;
        }
        if (easy_out) {
          a = v;
          break;
        }
      }
      if (a == -1)
        throw check_failure("anchored clique fully constrained", {{"clique", c}});
    }
    anchors.push_back(a);
    held_back[a] = 1;
  }

  std::vector<int> first;
  for (int c = 0; c < k; ++c) {
    if (cls.type[c] == CliqueType::Easy) continue;
    for (int v : acd.cliques[c])
      if (coloring.colors[v] == -1 && !held_back[v]) first.push_back(v);
  }
  trace.add("hard-residual-coloring", color_instance(g, first, coloring), kModeSimulated);

  std::vector<int> second;
  for (const auto& t : triads) second.push_back(t.u);
  second.insert(second.end(), anchors.begin(), anchors.end());
  trace.add("anchor-slack-coloring", color_instance(g, second, coloring), kModeSimulated);

  for (int c = 0; c < k; ++c) {
    if (cls.type[c] == CliqueType::Easy) continue;
    for (int v : acd.cliques[c])
      if (coloring.colors[v] == -1)
        throw check_failure("hard vertex left uncolored", {{"vertex", v}, {"clique", c}});
  }
}

nlohmann::json triads_to_json(const std::vector<SlackTriad>& triads) {
  auto arr = nlohmann::json::array();
  for (const auto& t : triads)
    arr.push_back({{"u", t.u}, {"v", t.v}, {"w", t.w}, {"clique", t.clique}});
  return arr;
}

}  // namespace densedelta
