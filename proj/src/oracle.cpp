#include "densedelta/oracle.hpp"

#include <algorithm>

namespace densedelta::oracle {

namespace {

bool extend_coloring(const Graph& g, int delta, int v, std::vector<int>& colors) {
  if (v == g.n()) return true;
  for (int c = 0; c < delta; ++c) {
    bool ok = true;
    for (int u : g.neighbors(v))
      if (u < v && colors[u] == c) {
        ok = false;
        break;
      }
    if (!ok) continue;
    colors[v] = c;
    if (extend_coloring(g, delta, v + 1, colors)) return true;
  }
  colors[v] = -1;
  return false;
}

bool extend_sdr(const std::vector<std::vector<int>>& incidence, size_t i,
                std::vector<int>& pick, std::vector<char>& used) {
  if (i == incidence.size()) return true;
  for (int e : incidence[i]) {
    if (used[e]) continue;
    used[e] = 1;
    pick[i] = e;
    if (extend_sdr(incidence, i + 1, pick, used)) return true;
    used[e] = 0;
  }
  pick[i] = -1;
  return false;
}

bool extend_list(const Graph& g, const std::vector<std::vector<int>>& lists, int v,
                 std::vector<int>& colors) {
  if (v == g.n()) return true;
  for (int c : lists[v]) {
    bool ok = true;
    for (int u : g.neighbors(v))
      if (u < v && colors[u] == c) {
        ok = false;
        break;
      }
    if (!ok) continue;
    colors[v] = c;
    if (extend_list(g, lists, v + 1, colors)) return true;
  }
  colors[v] = -1;
  return false;
}

}  // namespace

std::optional<Coloring> brute_delta_color(const Graph& g, int delta) {
  if (g.n() > 22)
    throw budget_exceeded("brute_delta_color budget is n <= 22, got n = " +
                          std::to_string(g.n()));
  std::vector<int> colors(g.n(), -1);
  if (!extend_coloring(g, delta, 0, colors)) return std::nullopt;
  return Coloring{delta, std::move(colors)};
}

std::optional<std::vector<int>> brute_sdr(const std::vector<std::vector<int>>& incidence) {
  if (incidence.size() > 12)
    throw budget_exceeded("brute_sdr budget is 12 grabbing vertices, got " +
                          std::to_string(incidence.size()));
  int max_edge = -1;
  for (const auto& inc : incidence)
    for (int e : inc) {
      if (e < 0) throw invalid_input("negative hyperedge ID");
      max_edge = std::max(max_edge, e);
    }
  std::vector<int> pick(incidence.size(), -1);
  std::vector<char> used(max_edge + 1, 0);
  if (!extend_sdr(incidence, 0, pick, used)) return std::nullopt;
  return pick;
}

std::optional<std::vector<int>> brute_list_color(const Graph& g,
                                                 const std::vector<std::vector<int>>& lists) {
  if (g.n() > 8)
    throw budget_exceeded("brute_list_color budget is n <= 8, got n = " + std::to_string(g.n()));
  if (static_cast<int>(lists.size()) != g.n())
    throw invalid_input("one list per vertex required");
  std::vector<int> colors(g.n(), -1);
  if (!extend_list(g, lists, 0, colors)) return std::nullopt;
  return colors;
}

bool brute_deg_list(const Graph& g, const std::vector<std::vector<int>>& lists) {
  return brute_list_color(g, lists).has_value();
}

}  // namespace densedelta::oracle
