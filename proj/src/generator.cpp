#include "densedelta/generator.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <utility>

#include "densedelta/errors.hpp"

namespace densedelta {

namespace {

// mt19937_64 output is fully specified, so rng() % n keeps instances
// reproducible across standard libraries (the tiny modulo bias is harmless
// for structure).
int draw(std::mt19937_64& rng, int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); }

void shuffle_vec(std::mt19937_64& rng, std::vector<int>& v) {
  for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) std::swap(v[i], v[draw(rng, i + 1)]);
}

std::vector<int> shuffled_range(std::mt19937_64& rng, int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  shuffle_vec(rng, v);
  return v;
}

struct SuperEdge {
  int c = -1;  // left-side clique
  int d = -1;  // right-side clique
  int slot_c = -1;  // handler index inside c; vertex c*delta + slot_c
  int slot_d = -1;
};

struct Blueprint {
  int k = 0;
  int delta = 0;
  std::vector<SuperEdge> edges;
  std::vector<std::vector<int>> incident;  // clique -> indices into edges
};

Blueprint build_blueprint(int k, int delta, std::mt19937_64& rng) {
  if (delta < 2) throw invalid_input("generator requires delta >= 2");
  if (k % 2 != 0) throw invalid_input("generator requires an even clique count");
  if (k < 2 * delta)
    throw invalid_input("generator requires k >= 2*delta (got k=" + std::to_string(k) +
                        ", delta=" + std::to_string(delta) + ")");

  const int h = k / 2;
  std::vector<int> offsets = shuffled_range(rng, h);
  offsets.resize(delta);
  std::vector<int> left = shuffled_range(rng, h);
  std::vector<int> right = shuffled_range(rng, h);

  Blueprint bp;
  bp.k = k;
  bp.delta = delta;
  for (int off : offsets)
    for (int a = 0; a < h; ++a) {
      SuperEdge e;
      e.c = left[a];
      e.d = h + right[(a + off) % h];
      bp.edges.push_back(e);
    }

  // Each clique meets exactly delta super edges (the offsets are distinct
  // matchings). Vertex j of a clique handles its j-th partner in id order.
  bp.incident.assign(k, {});
  for (int i = 0; i < static_cast<int>(bp.edges.size()); ++i) {
    bp.incident[bp.edges[i].c].push_back(i);
    bp.incident[bp.edges[i].d].push_back(i);
  }
  for (int c = 0; c < k; ++c) {
    auto& inc = bp.incident[c];
    std::sort(inc.begin(), inc.end(), [&](int i, int j) {
      int pi = bp.edges[i].c == c ? bp.edges[i].d : bp.edges[i].c;
      int pj = bp.edges[j].c == c ? bp.edges[j].d : bp.edges[j].c;
      return pi < pj;
    });
    for (int slot = 0; slot < static_cast<int>(inc.size()); ++slot) {
      SuperEdge& e = bp.edges[inc[slot]];
      (e.c == c ? e.slot_c : e.slot_d) = slot;
    }
  }
  return bp;
}

int handler(const Blueprint& bp, const SuperEdge& e, int clique) {
  return clique * bp.delta + (e.c == clique ? e.slot_c : e.slot_d);
}

GenResult realize(const Blueprint& bp, const std::vector<char>& alive,
                  const std::vector<std::pair<int, int>>& extra,
                  std::vector<int> planted_easy) {
  const int n = bp.k * bp.delta;
  std::vector<std::pair<int, int>> edges;
  for (int c = 0; c < bp.k; ++c)
    for (int i = 0; i < bp.delta; ++i)
      for (int j = i + 1; j < bp.delta; ++j)
        edges.emplace_back(c * bp.delta + i, c * bp.delta + j);
  for (size_t i = 0; i < bp.edges.size(); ++i)
    if (alive[i]) edges.emplace_back(handler(bp, bp.edges[i], bp.edges[i].c),
                                     handler(bp, bp.edges[i], bp.edges[i].d));
  for (auto [u, v] : extra) edges.emplace_back(u, v);

  GenResult r{Graph::from_edges(n, edges), {}, std::move(planted_easy)};
  r.cliques.assign(bp.k, {});
  for (int c = 0; c < bp.k; ++c) {
    r.cliques[c].resize(bp.delta);
    std::iota(r.cliques[c].begin(), r.cliques[c].end(), c * bp.delta);
  }
  std::sort(r.planted_easy.begin(), r.planted_easy.end());
  return r;
}

}  // namespace

GenResult gen_hard_dense(int k, int delta, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Blueprint bp = build_blueprint(k, delta, rng);
  return realize(bp, std::vector<char>(bp.edges.size(), 1), {}, {});
}

GenResult gen_mixed_dense(int k, int delta, std::uint64_t seed, int easy_drop, int easy_double) {
  if (easy_drop < 0 || easy_double < 0) throw invalid_input("plant counts must be nonnegative");
  std::mt19937_64 rng(seed);
  Blueprint bp = build_blueprint(k, delta, rng);
  if (2 * easy_drop + 4 * easy_double > k)
    throw invalid_input("not enough cliques for the requested plants");
  if (easy_double > 0 && k == 2 * delta)
    throw invalid_input(
        "doubled pairs need k >= 2*delta + 2: at k = 2*delta the super graph is the complete "
        "bipartite graph, leaving no non-adjacent clique pair to rewire toward");

  std::vector<char> alive(bp.edges.size(), 1);
  std::vector<char> affected(k, 0);
  std::vector<std::pair<int, int>> extra;
  std::vector<int> planted_easy;

  auto fresh = [&](const SuperEdge& e) { return !affected[e.c] && !affected[e.d]; };

  for (int t = 0; t < easy_drop; ++t) {
    std::vector<int> cand;
    for (int i = 0; i < static_cast<int>(bp.edges.size()); ++i)
      if (alive[i] && fresh(bp.edges[i])) cand.push_back(i);
    if (cand.empty()) throw invalid_input("unable to place dropped edge");
    int i = cand[draw(rng, static_cast<int>(cand.size()))];
    alive[i] = 0;
    affected[bp.edges[i].c] = affected[bp.edges[i].d] = 1;
    planted_easy.push_back(bp.edges[i].c);
    planted_easy.push_back(bp.edges[i].d);
  }

  // A doubled pair rewires two neighbors of an existing super edge (A,B):
  // drop (A,X) and (B,Y), join their handlers inside A and B as a second
  // real A-B edge, and join the orphaned handlers in X and Y so those two
  // cliques keep full degree. Needs X-Y not already super-adjacent so the
  // donors stay singly joined.
  for (int t = 0; t < easy_double; ++t) {
    bool placed = false;
    std::vector<int> order = shuffled_range(rng, static_cast<int>(bp.edges.size()));
    for (int i1 : order) {
      if (!alive[i1] || !fresh(bp.edges[i1])) continue;
      const int a = bp.edges[i1].c, b = bp.edges[i1].d;
      std::vector<int> from_a, from_b;
      for (int i : bp.incident[a])
        if (alive[i] && i != i1 && fresh(bp.edges[i])) from_a.push_back(i);
      for (int i : bp.incident[b])
        if (alive[i] && i != i1 && fresh(bp.edges[i])) from_b.push_back(i);
      shuffle_vec(rng, from_a);
      shuffle_vec(rng, from_b);
      for (int i2 : from_a) {
        if (placed) break;
        const int x = bp.edges[i2].d;  // a is on the left, so the partner is d
        for (int i3 : from_b) {
          const int y = bp.edges[i3].c;
          bool xy_adjacent = false;
          for (int i : bp.incident[x])
            if (alive[i] && (bp.edges[i].c == y || bp.edges[i].d == y)) xy_adjacent = true;
          if (xy_adjacent) continue;
          alive[i2] = alive[i3] = 0;
          extra.emplace_back(handler(bp, bp.edges[i2], a), handler(bp, bp.edges[i3], b));
          extra.emplace_back(handler(bp, bp.edges[i2], x), handler(bp, bp.edges[i3], y));
          affected[a] = affected[b] = affected[x] = affected[y] = 1;
          planted_easy.push_back(a);
          planted_easy.push_back(b);
          placed = true;
          break;
        }
      }
      if (placed) break;
    }
    if (!placed) throw invalid_input("unable to place doubled pair");
  }

  return realize(bp, alive, extra, std::move(planted_easy));
}

nlohmann::json gen_metadata_json(const GenResult& r) {
  return nlohmann::json{{"cliques", r.cliques}, {"planted_easy", r.planted_easy}};
}

}  // namespace densedelta
