#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "densedelta/acd.hpp"
#include "densedelta/errors.hpp"
#include "densedelta/generator.hpp"
#include "densedelta/loopholes.hpp"
#include "densedelta/matching.hpp"
#include "densedelta/oracle.hpp"
#include "helpers.hpp"

using namespace densedelta;

namespace {

struct Staged {
  GenResult gen;
  Acd acd;
  CliqueClassification cls;
  MatchingF1 f1;
};

Staged stage_ring() {
  Staged s{gen_hard_dense(128, 63, 0), {}, {}, {}};
  s.acd = compute_acd(s.gen.graph);
  s.cls = classify_cliques(s.gen.graph, s.acd, enumerate_loopholes(s.gen.graph, s.acd));
  s.f1 = maximal_matching_f1(s.gen.graph, s.acd, s.cls);
  return s;
}

CliqueClassification all_linked(int k) {
  CliqueClassification cls;
  cls.type.assign(k, CliqueType::Linked);
  cls.anchor.assign(k, -1);
  cls.ext_deg.assign(k, -1);
  return cls;
}

}  // namespace

TEST_CASE("crossing matching on the hard ring is perfect") {
  Staged s = stage_ring();
  const Graph& g = s.gen.graph;

  CHECK(s.f1.edges.size() == 4032);  // every vertex has one crossing edge
  CHECK(s.f1.rounds == 1);
  CHECK(std::is_sorted(s.f1.edges.begin(), s.f1.edges.end()));
  for (int v = 0; v < g.n(); ++v) {
    REQUIRE(s.f1.partner[v] != -1);
    CHECK(s.f1.partner[s.f1.partner[v]] == v);
    CHECK(g.has_edge(v, s.f1.partner[v]));
    CHECK(s.acd.clique_of[v] != s.acd.clique_of[s.f1.partner[v]]);
  }
}

TEST_CASE("contended crossing edges still end in a maximal matching") {
  // Vertex 2 and vertex 4 both carry two crossing edges; the smallest key
  // (1,2) wins first and (3,4) needs the withdrawal notification round.
  Graph g = clique_union({2, 2, 2}, {{1, 2}, {2, 4}, {3, 4}});
  Acd acd = block_acd(6, {2, 2, 2});
  MatchingF1 m = maximal_matching_f1(g, acd, all_linked(3));

  CHECK(m.edges == std::vector<std::pair<int, int>>{{1, 2}, {3, 4}});
  CHECK(m.partner == std::vector<int>{-1, 2, 1, 4, 3, -1});
  CHECK(m.rounds == 3);

  // Maximality: every crossing edge touches a matched vertex.
  for (auto [u, v] : g.edges())
    if (acd.clique_of[u] != acd.clique_of[v])
      CHECK((m.partner[u] != -1 || m.partner[v] != -1));
}

TEST_CASE("edges touching easy cliques are invisible to the matching") {
  Graph g = clique_union({2, 2, 2}, {{1, 2}, {2, 4}, {3, 4}});
  Acd acd = block_acd(6, {2, 2, 2});
  CliqueClassification cls = all_linked(3);
  cls.type[2] = CliqueType::Easy;

  MatchingF1 m = maximal_matching_f1(g, acd, cls);
  CHECK(m.edges == std::vector<std::pair<int, int>>{{1, 2}});
  CHECK(m.partner[3] == -1);
  CHECK(m.partner[4] == -1);
}

TEST_CASE("grab hypergraph blocks, proposals and degree bounds on the ring") {
  Staged s = stage_ring();
  GrabHypergraph h = build_grab_hypergraph(s.gen.graph, s.acd, s.cls, s.f1);

  CHECK(h.subs.size() == 128 * 28);
  CHECK(h.delta_h == 2);
  CHECK(h.r_h == 2);
  CHECK_FALSE(h.margin_ok);  // 10 * 2 > 11 * 2 fails; margin needs bigger delta

  // 63 members split 28 ways: 7 blocks of three, 21 blocks of two.
  std::vector<int> sizes(29, 0);
  for (int q = 0; q < 28; ++q) ++sizes[h.subs[q].size()];
  CHECK(sizes[2] == 21);
  CHECK(sizes[3] == 7);

  for (int q = 0; q < static_cast<int>(h.subs.size()); ++q) {
    CHECK(h.sub_clique[q] == q / 28);
    for (int v : h.subs[q]) CHECK(h.sub_of[v] == q);
    CHECK(h.incidence[q].size() == h.subs[q].size());  // distinct proposals
  }

  // Everyone is matched, so f is the identity and phi points at own edge.
  for (int v = 0; v < s.gen.graph.n(); ++v) {
    CHECK(h.f[v] == v);
    auto e = s.f1.edges[h.phi[v]];
    CHECK((e.first == v || e.second == v));
  }

  for (const auto& proposers : h.hyper) CHECK(proposers.size() <= 2);
}

TEST_CASE("hypergraph grabbing is solved and independently verified") {
  Staged s = stage_ring();
  GrabHypergraph h = build_grab_hypergraph(s.gen.graph, s.acd, s.cls, s.f1);
  Grabbing grab = solve_heg(h);

  CHECK(verify_grabbing(h, grab));
  std::set<int> grabbed(grab.grab_of_sub.begin(), grab.grab_of_sub.end());
  CHECK(grabbed.size() == h.subs.size());  // all distinct
  for (int q = 0; q < static_cast<int>(h.subs.size()); ++q) {
    int e = grab.grab_of_sub[q];
    CHECK(std::binary_search(h.incidence[q].begin(), h.incidence[q].end(), e));
    CHECK(grab.sub_of_edge[e] == q);
    int w = grab.witness[e];
    CHECK(h.sub_of[w] == q);
    CHECK(h.phi[w] == e);
  }

  SUBCASE("tampering is caught") {
    Grabbing bad = grab;
    std::swap(bad.grab_of_sub[0], bad.grab_of_sub[1]);
    CHECK_FALSE(verify_grabbing(h, bad));

    Grabbing dup = grab;
    dup.grab_of_sub[1] = dup.grab_of_sub[0];
    CHECK_FALSE(verify_grabbing(h, dup));
  }
}

TEST_CASE("row assignment agrees with the exhaustive oracle") {
  std::mt19937 rng(17);
  int solved = 0, infeasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    int rows = 1 + trial % 10;
    int items = 1 + static_cast<int>(rng() % 12);
    std::vector<std::vector<int>> inc(rows);
    for (auto& row : inc) {
      std::set<int> cand;
      int want = 1 + static_cast<int>(rng() % 3);
      while (static_cast<int>(cand.size()) < std::min(want, items))
        cand.insert(static_cast<int>(rng() % items));
      row.assign(cand.begin(), cand.end());
    }

    auto reference = oracle::brute_sdr(inc);
    if (!reference) {
      ++infeasible;
      CHECK_THROWS_AS(assign_distinct(inc, items), check_failure);
      continue;
    }
    ++solved;
    auto pick = assign_distinct(inc, items);
    REQUIRE(pick.size() == inc.size());
    std::set<int> used;
    for (int i = 0; i < rows; ++i) {
      CHECK(std::count(inc[i].begin(), inc[i].end(), pick[i]) == 1);
      CHECK(used.insert(pick[i]).second);
    }
  }
  CHECK(solved > 50);
  CHECK(infeasible > 50);
}

TEST_CASE("oriented matching covers every linked clique 28 times disjointly") {
  Staged s = stage_ring();
  const Graph& g = s.gen.graph;
  GrabHypergraph h = build_grab_hypergraph(g, s.acd, s.cls, s.f1);
  Grabbing grab = solve_heg(h);
  OrientedMatching f2 = build_f2(g, s.acd, s.cls, s.f1, h, grab);

  CHECK(f2.edges.size() == h.subs.size());

  std::set<int> seen;
  std::vector<int> outgoing(128, 0);
  for (const auto& e : f2.edges) {
    CHECK(g.has_edge(e.tail, e.head));
    CHECK(seen.insert(e.tail).second);
    CHECK(seen.insert(e.head).second);
    int c = s.acd.clique_of[e.tail];
    CHECK(c != s.acd.clique_of[e.head]);
    ++outgoing[c];
  }
  for (int c = 0; c < 128; ++c) CHECK(outgoing[c] == 28);
}

TEST_CASE("matching artifacts serialize as plain arrays") {
  Graph g = clique_union({2, 2}, {{1, 2}});
  Acd acd = block_acd(4, {2, 2});
  MatchingF1 m = maximal_matching_f1(g, acd, all_linked(2));
  nlohmann::json j = f1_to_json(m);
  REQUIRE(j.size() == 1);
  CHECK(j[0]["u"] == 1);
  CHECK(j[0]["v"] == 2);

  OrientedMatching om;
  om.edges.push_back({5, 9});
  nlohmann::json oj = oriented_to_json(om);
  CHECK(oj[0]["tail"] == 5);
  CHECK(oj[0]["head"] == 9);
}
