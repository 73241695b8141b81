#include "densedelta/sim.hpp"

#include <algorithm>
#include <fstream>
#include <map>

namespace densedelta {

void RoundTrace::add(std::string name, int rounds, std::string mode) {
  phases.push_back(PhaseRecord{std::move(name), rounds, std::move(mode)});
}

int RoundTrace::total() const {
  int t = 0;
  for (const auto& p : phases) t += p.rounds;
  return t;
}

nlohmann::json RoundTrace::to_json() const {
  nlohmann::json ph = nlohmann::json::array();
  for (const auto& p : phases)
    ph.push_back({{"name", p.name}, {"rounds", p.rounds}, {"mode", p.mode}});
  return nlohmann::json{{"phases", ph}, {"total", total()}};
}

RoundTrace RoundTrace::from_json(const nlohmann::json& j) {
  RoundTrace t;
  if (!j.is_object() || !j.contains("phases"))
    throw io_error("trace JSON must be an object with \"phases\"");
  for (const auto& p : j.at("phases"))
    t.add(p.at("name").get<std::string>(), p.at("rounds").get<int>(),
          p.at("mode").get<std::string>());
  if (j.contains("total") && j.at("total").get<int>() != t.total())
    throw io_error("trace total disagrees with phase sum");
  return t;
}

RoundTrace read_trace_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw io_error(std::string("bad JSON in ") + path + ": " + e.what());
  }
  return RoundTrace::from_json(j);
}

void write_trace_file(const RoundTrace& t, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot open " + path + " for writing");
  out << t.to_json().dump(2) << '\n';
}

VirtualGraph lift_virtual(const Graph& g, std::vector<std::vector<int>> groups) {
  VirtualGraph vg;
  vg.group_of.assign(g.n(), -1);
  for (size_t i = 0; i < groups.size(); ++i) {
    for (int v : groups[i]) {
      if (v < 0 || v >= g.n())
        throw invalid_input("group member out of range: " + std::to_string(v));
      if (vg.group_of[v] != -1)
        throw invalid_input("groups overlap at vertex " + std::to_string(v));
      vg.group_of[v] = static_cast<int>(i);
    }
    std::sort(groups[i].begin(), groups[i].end());
  }
  vg.groups = std::move(groups);

  // For each crossing group pair keep the lex-smallest real edge as witness.
  std::map<std::pair<int, int>, std::pair<int, int>> best;
  for (auto [u, v] : g.edges()) {
    int a = vg.group_of[u], b = vg.group_of[v];
    if (a == -1 || b == -1 || a == b) continue;
    std::pair<int, int> key{std::min(a, b), std::max(a, b)};
    auto it = best.find(key);
    if (it == best.end() || std::make_pair(u, v) < it->second) best[key] = {u, v};
  }

  std::vector<std::pair<int, int>> qedges;
  qedges.reserve(best.size());
  vg.witness.reserve(best.size());
  for (const auto& [key, wit] : best) {
    qedges.push_back(key);
    vg.witness.push_back(wit);
  }
  vg.quotient = Graph::from_edges(static_cast<int>(vg.groups.size()), std::move(qedges));
  return vg;
}

}  // namespace densedelta
