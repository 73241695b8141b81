#include "densedelta/acd.hpp"

#include <algorithm>
#include <cstdint>

#include "densedelta/errors.hpp"

namespace densedelta {

namespace {

int common_neighbors(const Graph& g, int u, int v) {
  const auto& a = g.neighbors(u);
  const auto& b = g.neighbors(v);
  int cnt = 0;
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j])
      ++i;
    else if (a[i] > b[j])
      ++j;
    else
      ++cnt, ++i, ++j;
  }
  return cnt;
}

}  // namespace

Acd compute_acd(const Graph& g, AcdParams params) {
  if (params.eta_num <= 0 || params.eta_den <= 0 || params.eta_num >= params.eta_den)
    throw invalid_input("eta must lie strictly between 0 and 1");

  const int n = g.n();
  const std::int64_t delta = g.delta();
  const std::int64_t num = params.eta_num, den = params.eta_den;

  std::vector<std::vector<int>> friends(n);
  for (auto [u, v] : g.edges())
    if (den * common_neighbors(g, u, v) >= (den - num) * delta) {
      friends[u].push_back(v);
      friends[v].push_back(u);
    }

  std::vector<char> dense(n, 0);
  for (int v = 0; v < n; ++v)
    dense[v] = den * static_cast<std::int64_t>(friends[v].size()) >= (den - num) * delta;

  Acd acd;
  acd.clique_of.assign(n, -1);
  for (int s = 0; s < n; ++s) {
    if (!dense[s] || acd.clique_of[s] != -1) continue;
    const int id = static_cast<int>(acd.cliques.size());
    std::vector<int> comp, stack{s};
    acd.clique_of[s] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int u : friends[v])
        if (dense[u] && acd.clique_of[u] == -1) {
          acd.clique_of[u] = id;
          stack.push_back(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    acd.cliques.push_back(std::move(comp));
  }
  for (int v = 0; v < n; ++v)
    if (!dense[v]) acd.sparse.push_back(v);
  return acd;
}

AcdReport verify_acd(const Graph& g, const Acd& acd) {
  const std::int64_t delta = g.delta();
  AcdReport report;
  auto flag = [&](nlohmann::json v) {
    report.pass = false;
    report.violations.push_back(std::move(v));
  };

  for (int id = 0; id < static_cast<int>(acd.cliques.size()); ++id) {
    const auto& c = acd.cliques[id];
    const std::int64_t size = static_cast<std::int64_t>(c.size());
    if (252 * size < 251 * delta || 63 * size > 64 * delta)
      flag({{"clique", id}, {"property", "size"}, {"size", size}});
    for (int v : c) {
      std::int64_t inside = 0;
      for (int u : g.neighbors(v))
        if (acd.clique_of[u] == id) ++inside;
      std::int64_t outside = g.degree(v) - inside;
      if (63 * inside < 62 * delta)
        flag({{"clique", id}, {"property", "internal"}, {"vertex", v}, {"inside", inside}});
      if (63 * outside > delta)
        flag({{"clique", id}, {"property", "external"}, {"vertex", v}, {"outside", outside}});
    }
  }

  // Outsider degrees into each clique, one sweep over all vertices.
  std::vector<std::int64_t> into(acd.cliques.size(), 0);
  for (int v = 0; v < g.n(); ++v) {
    for (int u : g.neighbors(v)) {
      int id = acd.clique_of[u];
      if (id != -1 && id != acd.clique_of[v]) ++into[id];
    }
    for (int u : g.neighbors(v)) {
      int id = acd.clique_of[u];
      if (id == -1 || id == acd.clique_of[v]) continue;
      if (into[id] != 0 && 126 * into[id] > 125 * delta)
        flag({{"clique", id}, {"property", "outsider"}, {"vertex", v}, {"inside", into[id]}});
      into[id] = 0;
    }
  }
  return report;
}

nlohmann::json acd_to_json(const Acd& acd, const AcdParams& params) {
  return nlohmann::json{{"cliques", acd.cliques},
                        {"sparse", acd.sparse},
                        {"eta", {params.eta_num, params.eta_den}},
                        {"epsilon", {1, 63}}};
}

}  // namespace densedelta
