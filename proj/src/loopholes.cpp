#include "densedelta/loopholes.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <set>

#include "densedelta/errors.hpp"
#include "densedelta/oracle.hpp"
#include "densedelta/subroutines.hpp"

namespace densedelta {

namespace {

constexpr std::int64_t kBruteBudget = 40'000'000;
constexpr std::int64_t kStructuredBudget = 400'000'000;
constexpr std::size_t kFoundCap = 2'000'000;

void collect_short_members(const Graph& g, const Acd& acd, std::vector<Loophole>& out) {
  for (const auto& c : acd.cliques)
    for (int v : c)
      if (g.degree(v) < g.delta()) out.push_back({1, {v}});
}

bool set_is_complete(const Graph& g, const std::vector<int>& s) {
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j)
      if (!g.has_edge(s[i], s[j])) return false;
  return true;
}

bool has_spanning_cycle(const Graph& g, const std::vector<int>& s) {
  std::vector<int> rest(s.begin() + 1, s.end());
  std::sort(rest.begin(), rest.end());
  do {
    bool ok = g.has_edge(s[0], rest.front()) && g.has_edge(rest.back(), s[0]);
    for (size_t i = 0; ok && i + 1 < rest.size(); ++i) ok = g.has_edge(rest[i], rest[i + 1]);
    if (ok) return true;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return false;
}

// Saturates once the result is already beyond any budget, so large n cannot
// overflow the running product.
std::int64_t choose(std::int64_t n, int k) {
  std::int64_t r = 1;
  for (int i = 0; i < k; ++i) {
    if (r > kBruteBudget) return r;
    r = r * (n - i) / (i + 1);
  }
  return r;
}

// Structured search for the cycle loopholes. The caller guarantees no
// sparse vertices, complete almost-cliques and at most one crossing edge
// per vertex. A spanning cycle then decomposes into runs inside cliques
// joined by crossing edges, and only two shapes fit in six vertices: a
// round trip between two cliques or a tour of three.
struct CycleSearch {
  const Graph& g;
  const Acd& acd;
  std::int64_t steps = 0;
  std::set<std::vector<int>> found;

  CycleSearch(const Graph& g_, const Acd& acd_) : g(g_), acd(acd_) {}

  void charge() {
    if (++steps > kStructuredBudget || found.size() > kFoundCap)
      throw oracle::budget_exceeded("cycle loophole search budget exceeded");
  }

  void emit(std::vector<int> s) {
    charge();
    std::sort(s.begin(), s.end());
    if (!set_is_complete(g, s)) found.insert(std::move(s));
  }

  // All non-complete 4-sets with a spanning cycle have a non-adjacent
  // diagonal {p, q}; both remaining vertices are common neighbors of it.
  void find_squares() {
    const int n = g.n();
    std::vector<char> is_nbr(n, 0);
    std::vector<int> seen(n, -1);
    for (int p = 0; p < n; ++p) {
      for (int u : g.neighbors(p)) is_nbr[u] = 1;
      for (int r : g.neighbors(p))
        for (int q : g.neighbors(r)) {
          charge();
          if (q <= p || is_nbr[q] || seen[q] == p) continue;
          seen[q] = p;
          std::vector<int> cn;
          const auto& a = g.neighbors(p);
          const auto& b = g.neighbors(q);
          std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(cn));
          for (size_t i = 0; i < cn.size(); ++i)
            for (size_t j = i + 1; j < cn.size(); ++j) {
              charge();
              std::vector<int> s{p, q, cn[i], cn[j]};
              std::sort(s.begin(), s.end());
              found.insert(std::move(s));
            }
        }
      for (int u : g.neighbors(p)) is_nbr[u] = 0;
    }
  }

  // A 6-cycle crossing clique borders splits into intra-clique runs, one
  // per crossing edge. With one crossing edge per vertex every run has at
  // least two vertices, so there are two runs (both crossing edges between
  // one clique pair, two filler vertices on either side) or three runs of
  // two (three crossing edges over three pairwise adjacent cliques).
  void find_hexagons() {
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> cross;
    for (auto [u, v] : g.edges()) {
      int cu = acd.clique_of[u], cv = acd.clique_of[v];
      if (cu == cv) continue;
      if (cu < cv)
        cross[{cu, cv}].push_back({u, v});
      else
        cross[{cv, cu}].push_back({v, u});
    }

    for (const auto& [cd, es] : cross) {
      const auto& side_c = acd.cliques[cd.first];
      const auto& side_d = acd.cliques[cd.second];
      for (size_t i = 0; i < es.size(); ++i)
        for (size_t j = i + 1; j < es.size(); ++j) {
          const auto [p1, q1] = es[i];
          const auto [p2, q2] = es[j];
          auto filler = [&](int a) { return a != p1 && a != p2 && a != q1 && a != q2; };
          for (size_t x = 0; x < side_c.size(); ++x) {
            if (!filler(side_c[x])) continue;
            for (size_t y = x + 1; y < side_c.size(); ++y)
              if (filler(side_c[y])) emit({p1, q1, p2, q2, side_c[x], side_c[y]});
          }
          for (size_t x = 0; x < side_d.size(); ++x) {
            if (!filler(side_d[x])) continue;
            for (size_t y = x + 1; y < side_d.size(); ++y)
              if (filler(side_d[y])) emit({p1, q1, p2, q2, side_d[x], side_d[y]});
          }
          for (int a : side_c) {
            if (!filler(a)) continue;
            for (int b : side_d)
              if (filler(b)) emit({p1, q1, p2, q2, a, b});
          }
        }
    }

    const int k = static_cast<int>(acd.cliques.size());
    std::vector<std::vector<int>> sadj(k);
    for (const auto& [cd, es] : cross) {
      sadj[cd.first].push_back(cd.second);
      sadj[cd.second].push_back(cd.first);
    }
    for (auto& a : sadj) std::sort(a.begin(), a.end());
    for (const auto& [cd, es_ab] : cross) {
      const auto [a, b] = cd;
      std::vector<int> third;
      std::set_intersection(sadj[a].begin(), sadj[a].end(), sadj[b].begin(), sadj[b].end(),
                            std::back_inserter(third));
      for (int c : third) {
        if (c <= b) continue;  // each triangle exactly once, via its two lowest cliques
        const auto& es_bc = cross.at({b, c});
        const auto& es_ac = cross.at({a, c});
        for (auto [ua, vb] : es_ab)
          for (auto [ub, vc] : es_bc)
            for (auto [wa, xc] : es_ac) {
              charge();
              if (vb == ub || vc == xc || wa == ua) continue;
              emit({ua, vb, ub, vc, wa, xc});
            }
      }
    }
  }
};

}  // namespace

std::vector<Loophole> enumerate_loopholes_brute(const Graph& g, const Acd& acd) {
  const int n = g.n();
  if (choose(n, 4) * 6 + choose(n, 6) * 120 > kBruteBudget)
    throw oracle::budget_exceeded("graph too large for subset loophole enumeration");

  std::vector<Loophole> out;
  collect_short_members(g, acd, out);

  auto consider = [&](std::vector<int> s) {
    for (int v : s)
      if (g.degree(v) < 2) return;  // spanning cycles need degree two
    if (set_is_complete(g, s)) return;
    if (has_spanning_cycle(g, s)) out.push_back({2, std::move(s)});
  };

  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          consider({a, b, c, d});
          for (int e = d + 1; e < n; ++e)
            for (int f = e + 1; f < n; ++f) consider({a, b, c, d, e, f});
        }

  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Loophole> enumerate_loopholes_structured(const Graph& g, const Acd& acd) {
  const int n = g.n();
  if (!acd.sparse.empty())
    throw invalid_input("structured loophole enumeration requires a dense graph");
  for (int id = 0; id < static_cast<int>(acd.cliques.size()); ++id) {
    const auto& c = acd.cliques[id];
    for (int v : c) {
      int inside = 0;
      for (int u : g.neighbors(v)) inside += acd.clique_of[u] == id;
      if (inside != static_cast<int>(c.size()) - 1)
        throw invalid_input("structured loophole enumeration requires complete almost-cliques");
    }
  }
  std::vector<int> crossing(n, 0);
  for (auto [u, v] : g.edges()) {
    if (acd.clique_of[u] == acd.clique_of[v]) continue;
    ++crossing[u];
    ++crossing[v];
  }
  for (int v = 0; v < n; ++v)
    if (crossing[v] > 1)
      throw invalid_input(
          "structured loophole enumeration requires at most one crossing edge per vertex");

  std::vector<Loophole> out;
  collect_short_members(g, acd, out);

  CycleSearch search(g, acd);
  search.find_squares();
  search.find_hexagons();
  for (const auto& s : search.found) out.push_back({2, s});

  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Loophole> enumerate_loopholes(const Graph& g, const Acd& acd) {
  if (choose(g.n(), 4) * 6 + choose(g.n(), 6) * 120 <= kBruteBudget)
    return enumerate_loopholes_brute(g, acd);
  return enumerate_loopholes_structured(g, acd);
}

CliqueClassification classify_cliques(const Graph& g, const Acd& acd,
                                      const std::vector<Loophole>& loopholes) {
  const int k = static_cast<int>(acd.cliques.size());
  const int delta = g.delta();

  CliqueClassification cls;
  cls.type.assign(k, CliqueType::Linked);
  cls.anchor.assign(k, -1);
  cls.ext_deg.assign(k, -1);

  for (const auto& l : loopholes)
    for (int v : l.vertices) {
      int c = acd.clique_of[v];
      if (c != -1) cls.type[c] = CliqueType::Easy;
    }

  std::vector<char> hard(k, 0);
  for (int c = 0; c < k; ++c) hard[c] = cls.type[c] != CliqueType::Easy;

  // Hard cliques are genuine cliques of full-degree vertices, and no outside
  // vertex touches one twice: any violation would itself produce a loophole,
  // so these are consistency checks on the enumeration.
  std::vector<int> touch(g.n(), 0);
  for (int c = 0; c < k; ++c) {
    if (!hard[c]) continue;
    const auto& cl = acd.cliques[c];
    for (int v : cl) {
      if (g.degree(v) != delta)
        throw check_failure("hard clique member short a neighbor",
                            {{"clique", c}, {"vertex", v}, {"degree", g.degree(v)}});
      int inside = 0;
      for (int u : g.neighbors(v)) inside += acd.clique_of[u] == c;
      if (inside != static_cast<int>(cl.size()) - 1)
        throw check_failure("hard clique not complete",
                            {{"clique", c}, {"vertex", v}, {"inside", inside}});
    }
    for (int v : cl)
      for (int u : g.neighbors(v)) {
        if (acd.clique_of[u] == c) continue;
        if (++touch[u] >= 2)
          throw check_failure("outside vertex tied twice to a hard clique",
                              {{"clique", c}, {"vertex", u}});
      }
    for (int v : cl)
      for (int u : g.neighbors(v)) touch[u] = 0;
    cls.ext_deg[c] = delta - static_cast<int>(cl.size()) + 1;
  }

  for (int c = 0; c < k; ++c) {
    if (!hard[c]) continue;
    bool linked = true;
    int anchor = -1;
    for (int v : acd.cliques[c]) {
      bool ext_hard = false, ext_soft = false;
      for (int u : g.neighbors(v)) {
        int cu = acd.clique_of[u];
        if (cu == c) continue;
        (cu != -1 && hard[cu] ? ext_hard : ext_soft) = true;
      }
      if (!ext_hard) linked = false;
      if (ext_soft && anchor == -1) anchor = v;  // members are sorted
    }
    if (!linked) {
      if (anchor == -1)
        throw check_failure("anchored clique without an easy external neighbor", {{"clique", c}});
      cls.type[c] = CliqueType::Anchored;
      cls.anchor[c] = anchor;
    }
  }
  return cls;
}

void color_easy_and_loopholes(const Graph& g, const Acd& acd,
                              const std::vector<Loophole>& loopholes,
                              const CliqueClassification& cls, Coloring& coloring,
                              RoundTrace& trace) {
  const int n = g.n();

  std::vector<int> uncolored;
  for (int v = 0; v < n; ++v)
    if (coloring.colors[v] == -1) uncolored.push_back(v);
  if (uncolored.empty()) return;

  for (int v : uncolored) {
    int c = acd.clique_of[v];
    if (c == -1 || cls.type[c] != CliqueType::Easy)
      throw check_failure("uncolored vertex outside the easy cliques", {{"vertex", v}});
  }

  // Each vertex covered by loopholes votes for its smallest one; only voted
  // loopholes compete for the ruling set.
  std::vector<int> vote(n, -1);
  for (int i = 0; i < static_cast<int>(loopholes.size()); ++i)
    for (int v : loopholes[i].vertices)
      if (vote[v] == -1 || loopholes[i] < loopholes[vote[v]]) vote[v] = i;
  std::vector<int> elected;
  for (int v = 0; v < n; ++v)
    if (vote[v] != -1) elected.push_back(vote[v]);
  std::sort(elected.begin(), elected.end());
  elected.erase(std::unique(elected.begin(), elected.end()), elected.end());
  if (elected.empty())
    throw check_failure("easy cliques present but no loopholes elected", {});

  // Loophole graph: elected loopholes, adjacent when they share a vertex or
  // an edge of g joins them.
  const int nl = static_cast<int>(elected.size());
  std::vector<std::vector<int>> holding(n);
  for (int i = 0; i < nl; ++i)
    for (int v : loopholes[elected[i]].vertices) holding[v].push_back(i);
  std::set<std::pair<int, int>> ledges;
  for (int i = 0; i < nl; ++i)
    for (int v : loopholes[elected[i]].vertices) {
      for (int j : holding[v])
        if (j != i) ledges.insert({std::min(i, j), std::max(i, j)});
      for (int u : g.neighbors(v))
        for (int j : holding[u])
          if (j != i) ledges.insert({std::min(i, j), std::max(i, j)});
    }
  Graph gl = Graph::from_edges(nl, {ledges.begin(), ledges.end()});
  auto ruling = ruling_set(gl, kLoopholeRulingRadius);
  trace.add("loophole-ruling-set", ruling.rounds, kModeSimulated);

  // Peel toward the ruling loopholes: BFS inside the uncolored subgraph.
  std::vector<int> layer(n, -1);
  std::queue<int> q;
  for (int i = 0; i < nl; ++i)
    if (ruling.in_set[i])
      for (int v : loopholes[elected[i]].vertices)
        if (layer[v] == -1) {
          layer[v] = 0;
          q.push(v);
        }
  int max_layer = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    if (layer[v] == kPeelDepth) continue;
    for (int u : g.neighbors(v))
      if (coloring.colors[u] == -1 && layer[u] == -1) {
        layer[u] = layer[v] + 1;
        max_layer = std::max(max_layer, layer[u]);
        q.push(u);
      }
  }
  for (int v : uncolored)
    if (layer[v] == -1)
      throw check_failure("uncolored vertex beyond peel depth",
                          {{"vertex", v}, {"depth", kPeelDepth}});

  // Outer layers first: every vertex keeps its BFS parent uncolored while
  // its own layer runs, which leaves the lists one color longer than needed.
  int peel_rounds = 0;
  for (int d = max_layer; d >= 1; --d) {
    std::vector<int> members;
    for (int v : uncolored)
      if (layer[v] == d) members.push_back(v);
    if (members.empty()) continue;
    Induced ind = induced_subgraph(g, members);
    ListInstance inst;
    inst.g = ind.graph;
    inst.lists.resize(members.size());
    for (size_t i = 0; i < ind.vertices.size(); ++i) {
      inst.lists[i] = palette(g, coloring, ind.vertices[i]);
      if (static_cast<int>(inst.lists[i].size()) < ind.graph.degree(static_cast<int>(i)) + 1)
        throw check_failure("peel layer vertex short on colors",
                            {{"vertex", ind.vertices[i]}, {"layer", d}});
    }
    auto res = deg_plus1_list_color(inst);
    peel_rounds += res.rounds;
    for (size_t i = 0; i < ind.vertices.size(); ++i)
      coloring.colors[ind.vertices[i]] = res.colors[i];
  }
  trace.add("easy-peel-coloring", peel_rounds, kModeSimulated);

  // Ruling loopholes are pairwise non-adjacent, so they finish independently
  // from their remaining lists; such subgraphs are always list-colorable.
  for (int i = 0; i < nl; ++i) {
    if (!ruling.in_set[i]) continue;
    const auto& s = loopholes[elected[i]].vertices;
    Induced ind = induced_subgraph(g, s);
    std::vector<std::vector<int>> lists(s.size());
    for (size_t j = 0; j < ind.vertices.size(); ++j)
      lists[j] = palette(g, coloring, ind.vertices[j]);
    auto pick = oracle::brute_list_color(ind.graph, lists);
    if (!pick)
      throw check_failure("ruling loophole not colorable from its lists",
                          {{"vertices", s}, {"kind", loopholes[elected[i]].kind}});
    for (size_t j = 0; j < ind.vertices.size(); ++j)
      coloring.colors[ind.vertices[j]] = (*pick)[j];
  }
  trace.add("loophole-finish", 1, kModeCentralized);

  for (int v : uncolored)
    if (coloring.colors[v] == -1)
      throw check_failure("vertex left uncolored after loophole stage", {{"vertex", v}});
}

}  // namespace densedelta
