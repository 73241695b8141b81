#include "densedelta/subroutines.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <queue>

#include "densedelta/errors.hpp"
#include "densedelta/sim.hpp"

namespace densedelta {

namespace {

// One Eulerian 2-split of the sub-multigraph spanned by the edges in `ids`.
// Returns one bit per position of `ids`. A virtual vertex (index n) is
// joined to every odd-degree vertex so circuits always exist; alternating
// labels along a circuit leave each real vertex's halves within 2, and the
// wrap-around imbalance of an odd circuit lands on the circuit's start,
// which is the virtual vertex whenever the component has one.
std::vector<char> euler_halve(int n, const std::vector<std::pair<int, int>>& edges,
                              const std::vector<int>& ids) {
  const int real = static_cast<int>(ids.size());
  std::vector<int> deg(n, 0);
  for (int i = 0; i < real; ++i) {
    deg[edges[ids[i]].first]++;
    deg[edges[ids[i]].second]++;
  }

  // Slots: 0..real-1 are the given edges, then one per odd vertex.
  std::vector<std::pair<int, int>> slot_ends(real, {0, 0});
  for (int i = 0; i < real; ++i) slot_ends[i] = edges[ids[i]];
  for (int v = 0; v < n; ++v)
    if (deg[v] % 2 == 1) slot_ends.push_back({v, n});
  const int total = static_cast<int>(slot_ends.size());

  std::vector<std::vector<std::pair<int, int>>> adj(n + 1);  // (other, slot)
  for (int s = 0; s < total; ++s) {
    auto [u, v] = slot_ends[s];
    adj[u].push_back({v, s});
    adj[v].push_back({u, s});
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  std::vector<size_t> cursor(n + 1, 0);
  std::vector<char> used(total, 0);
  std::vector<char> bit(real, 0);

  auto run_circuit = [&](int start) {
    std::vector<std::pair<int, int>> stack;  // (vertex, slot used to arrive)
    std::vector<int> order;
    stack.push_back({start, -1});
    while (!stack.empty()) {
      auto& [v, in_slot] = stack.back();
      bool advanced = false;
      while (cursor[v] < adj[v].size()) {
        auto [w, s] = adj[v][cursor[v]];
        if (used[s]) {
          cursor[v]++;
          continue;
        }
        used[s] = 1;
        cursor[v]++;
        stack.push_back({w, s});
        advanced = true;
        break;
      }
      if (!advanced) {
        if (in_slot >= 0) order.push_back(in_slot);
        stack.pop_back();
      }
    }
    std::reverse(order.begin(), order.end());
    for (size_t i = 0; i < order.size(); ++i)
      if (order[i] < real) bit[order[i]] = static_cast<char>(i % 2);
  };

  if (!adj[n].empty()) run_circuit(n);
  for (int v = 0; v < n; ++v)
    if (cursor[v] < adj[v].size()) run_circuit(v);
  return bit;
}

}  // namespace

bool split_window_ok(int degree, int part_degree, int levels) {
  // |part_degree - degree / 2^levels| <= 4 - 2^(2 - levels), scaled by 2^levels.
  const std::int64_t scale = std::int64_t{1} << levels;
  const std::int64_t bound = 4 * scale - 4;
  return std::llabs(std::int64_t{part_degree} * scale - degree) <= bound;
}

SplitResult degree_split(int n_vertices, const std::vector<std::pair<int, int>>& edges,
                         int levels) {
  if (levels < 0 || levels > 20) throw invalid_input("degree_split: bad level count");
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n_vertices || v < 0 || v >= n_vertices)
      throw invalid_input("degree_split: endpoint out of range");
    if (u == v) throw invalid_input("degree_split: self-loops not supported");
  }

  const int m = static_cast<int>(edges.size());
  SplitResult res;
  res.parts = 1 << levels;
  res.part.assign(m, 0);

  std::vector<std::vector<int>> groups(1);
  groups[0].resize(m);
  for (int i = 0; i < m; ++i) groups[0][i] = i;

  for (int lvl = 0; lvl < levels; ++lvl) {
    std::vector<std::vector<int>> next;
    next.reserve(groups.size() * 2);
    for (const auto& ids : groups) {
      auto bits = euler_halve(n_vertices, edges, ids);
      std::vector<int> zero, one;
      for (size_t i = 0; i < ids.size(); ++i) {
        res.part[ids[i]] = res.part[ids[i]] * 2 + bits[i];
        (bits[i] ? one : zero).push_back(ids[i]);
      }
      next.push_back(std::move(zero));
      next.push_back(std::move(one));
    }
    groups = std::move(next);
  }

  // Window certificate over every vertex and part.
  std::vector<int> deg(n_vertices, 0);
  std::vector<std::vector<int>> part_deg(n_vertices, std::vector<int>(res.parts, 0));
  for (int i = 0; i < m; ++i) {
    auto [u, v] = edges[i];
    deg[u]++;
    deg[v]++;
    part_deg[u][res.part[i]]++;
    part_deg[v][res.part[i]]++;
  }
  for (int v = 0; v < n_vertices; ++v)
    for (int p = 0; p < res.parts; ++p)
      if (!split_window_ok(deg[v], part_deg[v][p], levels))
        throw check_failure("degree_split window violated",
                            {{"vertex", v},
                             {"part", p},
                             {"degree", deg[v]},
                             {"part_degree", part_deg[v][p]},
                             {"levels", levels}});
  return res;
}

SplitClaimReport check_split_claim() {
  SplitClaimReport rep;
  rep.pass = true;
  rep.max_slack = -1e300;
  rep.min_slack = 1e300;
  for (int n = 1; n <= 20; ++n) {
    for (int j = 0; j <= 50; ++j) {
      double eps = j / 100.0;
      double lhs = std::pow(0.5 + eps, n);
      double rhs = std::pow(0.5, n) + 2 * eps;
      double slack = rhs - lhs;
      rep.max_slack = std::max(rep.max_slack, slack);
      rep.min_slack = std::min(rep.min_slack, slack);
      if (lhs > rhs + 1e-12) {
        rep.pass = false;
        rep.violations.push_back({n, eps, lhs, rhs});
      }
    }
  }
  return rep;
}

// ----- deg+1 list coloring ----------------------------------------------

namespace {

// Nodes know their neighbors' IDs (= initial labels) up front, so messages
// flow only when something changes: once when a node relabels and once when
// it picks its color. Idle steps are O(1) via the counters below.
struct ListColorProgram {
  struct Message {
    int label;
    int color;  // -1 until picked
  };
  using Output = int;

  struct State {
    LocalView view;
    int label = -1;
    int color = -1;
    int high_above = 0;      // neighbors still out of range with larger label
    int cnt_high = 0;        // neighbors with label >= K
    int lower_unpicked = 0;  // in-range neighbors below me that have not picked
    std::vector<int> nb_label;
    std::vector<int> nb_color;
    std::vector<char> taken;  // labels < K already used around me
  };

  const std::vector<std::vector<int>>* lists = nullptr;
  int K = 0;  // class count = Delta_inst + 1; labels >= K must relabel

  State init(const LocalView& view) const {
    State s;
    s.view = view;
    s.label = view.id;
    s.taken.assign(K, 0);
    const auto& nbrs = *view.neighbors;
    s.nb_label.assign(nbrs.begin(), nbrs.end());
    s.nb_color.assign(nbrs.size(), -1);
    for (int u : nbrs) {
      if (u >= K) {
        s.cnt_high++;
        if (u > s.label) s.high_above++;
      } else {
        s.taken[u] = 1;
        if (u < s.label) s.lower_unpicked++;
      }
    }
    return s;
  }

  int nb_index(const State& s, int u) const {
    const auto& nbrs = *s.view.neighbors;
    return static_cast<int>(std::lower_bound(nbrs.begin(), nbrs.end(), u) - nbrs.begin());
  }

  StepResult<Message, Output> step(State& s, int /*round*/,
                                   const std::vector<Envelope<Message>>& inbox) const {
    for (const auto& e : inbox) {
      int idx = nb_index(s, e.from);
      if (e.body.label != s.nb_label[idx]) {
        // Only out-of-range nodes relabel, and their old label is their ID.
        s.cnt_high--;
        if (s.label >= K && e.from > s.label) s.high_above--;
        s.nb_label[idx] = e.body.label;
        s.taken[e.body.label] = 1;
        if (s.label < K && e.body.label < s.label && s.nb_color[idx] == -1) s.lower_unpicked++;
      }
      if (e.body.color != -1 && s.nb_color[idx] == -1) {
        s.nb_color[idx] = e.body.color;
        if (s.label < K && s.nb_label[idx] < s.label) s.lower_unpicked--;
      }
    }

    StepResult<Message, Output> r;
    if (s.color != -1) return r;  // unreachable; picked nodes halt

    bool changed = false;
    if (s.label >= K) {
      if (s.high_above == 0) {
        int l = 0;
        while (s.taken[l]) ++l;  // < K free labels always remain
        s.label = l;
        s.lower_unpicked = 0;
        for (size_t i = 0; i < s.nb_label.size(); ++i)
          if (s.nb_label[i] < s.label && s.nb_color[i] == -1) s.lower_unpicked++;
        changed = true;
      }
    }
    if (s.label < K && s.cnt_high == 0 && s.lower_unpicked == 0) {
      std::vector<int> blocked;
      for (int c : s.nb_color)
        if (c != -1) blocked.push_back(c);
      std::sort(blocked.begin(), blocked.end());
      for (int c : (*lists)[s.view.id]) {
        if (!std::binary_search(blocked.begin(), blocked.end(), c)) {
          s.color = c;
          break;
        }
      }
      if (s.color == -1)
        throw check_failure("list exhausted despite deg+1 precondition", {{"vertex", s.view.id}});
      changed = true;
    }

    if (changed)
      for (int u : *s.view.neighbors) r.outbox.push_back({u, Message{s.label, s.color}});
    if (s.color != -1) {
      r.output = s.color;
      r.halt = true;
    }
    return r;
  }
};

}  // namespace

ListColorResult deg_plus1_list_color(const ListInstance& inst) {
  const Graph& g = inst.g;
  if (static_cast<int>(inst.lists.size()) != g.n())
    throw invalid_input("deg_plus1_list_color: one list per vertex required");

  std::vector<std::vector<int>> lists = inst.lists;
  for (int v = 0; v < g.n(); ++v) {
    auto& l = lists[v];
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
    if (static_cast<int>(l.size()) < g.degree(v) + 1)
      throw invalid_input("deg_plus1_list_color: vertex " + std::to_string(v) + " has list size " +
                          std::to_string(l.size()) + " < degree+1 = " +
                          std::to_string(g.degree(v) + 1));
  }

  ListColorProgram prog;
  prog.lists = &lists;
  prog.K = g.delta() + 1;
  auto run = run_sync(g, prog);

  ListColorResult res;
  res.colors = std::move(run.outputs);
  res.rounds = run.rounds;
  return res;
}

// ----- ruling set ---------------------------------------------------------

namespace {

struct RulingProgram {
  struct Message {
    int value;
  };
  using Output = char;

  struct State {
    LocalView view;
    bool active = true;
    bool member = false;
    int best = 0;   // min active ID seen this phase
    int jdist = 0;  // distance to nearest new member this phase
    bool heard_active = false;
  };

  int r = 2;
  int inf = 0;  // sentinel > any ID

  State init(const LocalView& view) const {
    State s;
    s.view = view;
    return s;
  }

  StepResult<Message, Output> step(State& s, int round,
                                   const std::vector<Envelope<Message>>& inbox) const {
    const int P = 2 * r + 1;
    const int q = round % P;
    StepResult<Message, Output> out;
    auto send = [&](int value) {
      for (int u : *s.view.neighbors) out.outbox.push_back({u, Message{value}});
    };

    if (q == 0) {
      s.best = s.active ? s.view.id : inf;
      send(s.best);
      return out;
    }
    if (q <= r) {
      for (const auto& e : inbox) s.best = std::min(s.best, e.body.value);
      if (q < r) {
        send(s.best);
        return out;
      }
      // q == r: join decision, then start the suppression flood.
      s.heard_active = s.best != inf;
      if (s.active && s.best == s.view.id) {
        s.member = true;
        s.active = false;
      }
      s.jdist = s.member ? 0 : inf;
      send(s.jdist >= inf ? inf : s.jdist);
      return out;
    }
    // r < q <= 2r: suppression flood.
    for (const auto& e : inbox)
      if (e.body.value < inf) s.jdist = std::min(s.jdist, e.body.value + 1);
    if (q < 2 * r) {
      send(s.jdist >= inf ? inf : s.jdist);
      return out;
    }
    // q == 2r: phase ends.
    if (s.jdist <= r) s.active = false;
    if (!s.heard_active) {
      out.output = static_cast<char>(s.member ? 1 : 0);
      out.halt = true;
      return out;
    }
    return out;
  }
};

}  // namespace

RulingSetResult ruling_set(const Graph& g, int r) {
  if (r < 1) throw invalid_input("ruling_set: r must be >= 1");
  RulingProgram prog;
  prog.r = r;
  prog.inf = g.n();
  auto run = run_sync(g, prog);
  RulingSetResult res;
  res.in_set = std::move(run.outputs);
  res.rounds = run.rounds;
  return res;
}

bool verify_ruling_set(const Graph& g, const std::vector<char>& in_set, int r) {
  if (static_cast<int>(in_set.size()) != g.n()) return false;
  std::vector<int> dist(g.n(), -1);
  std::queue<int> q;
  for (int v = 0; v < g.n(); ++v)
    if (in_set[v]) {
      for (int u : g.neighbors(v))
        if (in_set[u]) return false;  // adjacent members
      dist[v] = 0;
      q.push(v);
    }
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u : g.neighbors(v))
      if (dist[u] == -1) {
        dist[u] = dist[v] + 1;
        q.push(u);
      }
  }
  for (int v = 0; v < g.n(); ++v)
    if (dist[v] == -1 || dist[v] > r) return false;
  return true;
}

}  // namespace densedelta
