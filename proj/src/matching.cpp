#include "densedelta/matching.hpp"

#include <algorithm>
#include <utility>

#include "densedelta/errors.hpp"
#include "densedelta/sim.hpp"

namespace densedelta {

namespace {

std::pair<int, int> edge_key(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

// One node per vertex; only crossing edges carry the protocol. A vertex
// proposes along its smallest alive crossing edge every round; an edge
// matches when its endpoints propose to each other in the same round, and
// matched vertices notify their other partners before halting. A proposal
// only counts as mutual against the receiver's own previous-round proposal:
// judging it against the current list front instead would let a same-round
// withdrawal promote a bystander to front and match it one-sidedly, leaving
// the bystander proposing to a halted node forever. The globally smallest
// alive edge is proposed from both ends every round, so it matches within
// two rounds and progress is guaranteed.
struct MatchProgram {
  struct Message {
    int kind;  // 0 proposal, 1 matched
    int ka, kb;
  };
  using Output = int;  // partner or -1

  struct State {
    LocalView view;
    std::vector<int> alive;  // crossing partners, sorted by edge key
    int proposed_to = -1;
    int matched = -1;
  };

  const std::vector<std::vector<int>>* crossing = nullptr;

  State init(const LocalView& view) const {
    State s;
    s.view = view;
    s.alive = (*crossing)[view.id];
    std::sort(s.alive.begin(), s.alive.end(), [&](int a, int b) {
      return edge_key(view.id, a) < edge_key(view.id, b);
    });
    return s;
  }

  StepResult<Message, Output> step(State& s, int /*round*/,
                                   const std::vector<Envelope<Message>>& inbox) const {
    StepResult<Message, Output> r;
    const int me = s.view.id;

    bool mutual = false;
    for (const auto& e : inbox) {
      if (e.body.kind == 1) {
        s.alive.erase(std::remove(s.alive.begin(), s.alive.end(), e.from), s.alive.end());
        continue;
      }
      if (std::make_pair(e.body.ka, e.body.kb) != edge_key(me, e.from))
        throw check_failure("proposal for a foreign edge",
                            {{"vertex", me}, {"from", e.from}});
      if (e.from == s.proposed_to) mutual = true;
    }

    if (mutual) {
      s.matched = s.proposed_to;
      for (int u : s.alive)
        if (u != s.matched) r.outbox.push_back({u, Message{1, 0, 0}});
      r.output = s.matched;
      r.halt = true;
      return r;
    }
    if (s.alive.empty()) {
      r.output = -1;
      r.halt = true;
      return r;
    }
    s.proposed_to = s.alive.front();
    auto key = edge_key(me, s.proposed_to);
    r.outbox.push_back({s.proposed_to, Message{0, key.first, key.second}});
    return r;
  }
};

}  // namespace

MatchingF1 maximal_matching_f1(const Graph& g, const Acd& acd, const CliqueClassification& cls) {
  const int n = g.n();
  std::vector<std::vector<int>> crossing(n);
  auto hard = [&](int v) {
    int c = acd.clique_of[v];
    return c != -1 && cls.type[c] != CliqueType::Easy;
  };
  for (auto [u, v] : g.edges())
    if (acd.clique_of[u] != acd.clique_of[v] && hard(u) && hard(v)) {
      crossing[u].push_back(v);
      crossing[v].push_back(u);
    }

  MatchProgram prog;
  prog.crossing = &crossing;
  auto run = run_sync(g, prog);

  MatchingF1 f1;
  f1.rounds = run.rounds;
  f1.partner.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    int p = run.outputs[v];
    if (p == -1) continue;
    f1.partner[v] = p;
    if (v < p) f1.edges.emplace_back(v, p);
  }
  for (auto [u, v] : f1.edges)
    if (f1.partner[v] != u)
      throw check_failure("asymmetric matching outcome", {{"u", u}, {"v", v}});
  return f1;
}

GrabHypergraph build_grab_hypergraph(const Graph& g, const Acd& acd,
                                     const CliqueClassification& cls, const MatchingF1& f1) {
  const int n = g.n();
  GrabHypergraph h;
  h.sub_of.assign(n, -1);
  h.f.assign(n, -1);
  h.phi.assign(n, -1);
  h.hyper.assign(f1.edges.size(), {});

  auto hard = [&](int v) {
    int c = acd.clique_of[v];
    return c != -1 && cls.type[c] != CliqueType::Easy;
  };
  auto edge_index = [&](int u, int v) {
    auto key = edge_key(u, v);
    auto it = std::lower_bound(f1.edges.begin(), f1.edges.end(), key);
    if (it == f1.edges.end() || *it != key)
      throw check_failure("proposal edge missing from the matching",
                          {{"u", key.first}, {"v", key.second}});
    return static_cast<int>(it - f1.edges.begin());
  };

  for (int c = 0; c < static_cast<int>(acd.cliques.size()); ++c) {
    if (cls.type[c] != CliqueType::Linked) continue;
    const auto& cl = acd.cliques[c];
    const int sz = static_cast<int>(cl.size());
    if (sz < 28)
      throw check_failure("linked clique too small for its 28 blocks",
                          {{"clique", c}, {"size", sz}});
    const int base = sz / 28, extra = sz % 28;
    int at = 0;
    for (int i = 0; i < 28; ++i) {
      int len = base + (i < extra);
      std::vector<int> part(cl.begin() + at, cl.begin() + at + len);
      at += len;
      for (int v : part) h.sub_of[v] = static_cast<int>(h.subs.size());
      h.subs.push_back(std::move(part));
      h.sub_clique.push_back(c);
    }

    for (int v : cl) {
      if (f1.partner[v] != -1) {
        h.f[v] = v;
      } else {
        for (int u : g.neighbors(v))
          if (acd.clique_of[u] != c && hard(u)) {
            h.f[v] = u;
            break;  // neighbors are sorted, first hit is the minimum
          }
        if (h.f[v] == -1)
          throw check_failure("linked clique member without external hard neighbor",
                              {{"clique", c}, {"vertex", v}});
        if (f1.partner[h.f[v]] == -1)
          throw check_failure("proposal target unmatched despite maximality",
                              {{"vertex", v}, {"target", h.f[v]}});
      }
      h.phi[v] = edge_index(h.f[v], f1.partner[h.f[v]]);
    }
  }

  h.incidence.resize(h.subs.size());
  for (int s = 0; s < static_cast<int>(h.subs.size()); ++s) {
    auto& inc = h.incidence[s];
    for (int v : h.subs[s]) inc.push_back(h.phi[v]);
    std::sort(inc.begin(), inc.end());
    if (std::adjacent_find(inc.begin(), inc.end()) != inc.end()) {
      int e = *std::adjacent_find(inc.begin(), inc.end());
      std::vector<int> collide;
      for (int v : h.subs[s])
        if (h.phi[v] == e) collide.push_back(v);
      throw check_failure("sub-clique proposals collide",
                          {{"clique", h.sub_clique[s]},
                           {"vertices", collide},
                           {"edge", {f1.edges[e].first, f1.edges[e].second}}});
    }
    for (int e : inc) h.hyper[e].push_back(s);
  }

  h.delta_h = h.subs.empty() ? 0 : static_cast<int>(h.incidence[0].size());
  for (const auto& inc : h.incidence)
    h.delta_h = std::min(h.delta_h, static_cast<int>(inc.size()));
  for (const auto& he : h.hyper) h.r_h = std::max(h.r_h, static_cast<int>(he.size()));
  h.margin_ok = 10 * h.delta_h > 11 * h.r_h;

  if (h.delta_h < h.r_h)
    throw check_failure("hypergraph min degree below max rank",
                        {{"delta_h", h.delta_h}, {"r_h", h.r_h}});
  if (!h.subs.empty() && 63 * h.r_h > 2 * g.delta())
    throw check_failure("hyperedge rank above its ceiling",
                        {{"r_h", h.r_h}, {"delta", g.delta()}});
  return h;
}

std::vector<int> assign_distinct(const std::vector<std::vector<int>>& incidence, int n_items) {
  std::vector<int> owner(n_items, -1);
  std::vector<int> pick(incidence.size(), -1);
  std::vector<int> stamp(n_items, -1);

  // Standard augmenting search over rows; `stamp` marks items visited in
  // the current augmentation.
  auto augment = [&](auto&& self, int row, int tag) -> bool {
    for (int item : incidence[row]) {
      if (stamp[item] == tag) continue;
      stamp[item] = tag;
      if (owner[item] == -1 || self(self, owner[item], tag)) {
        owner[item] = row;
        pick[row] = item;
        return true;
      }
    }
    return false;
  };
  for (int row = 0; row < static_cast<int>(incidence.size()); ++row)
    if (!augment(augment, row, row))
      throw check_failure("no distinct assignment for row", {{"row", row}});
  return pick;
}

Grabbing solve_heg(const GrabHypergraph& h) {
  Grabbing grab;
  grab.grab_of_sub = assign_distinct(h.incidence, static_cast<int>(h.hyper.size()));
  grab.sub_of_edge.assign(h.hyper.size(), -1);
  grab.witness.assign(h.hyper.size(), -1);
  for (int s = 0; s < static_cast<int>(grab.grab_of_sub.size()); ++s) {
    int e = grab.grab_of_sub[s];
    grab.sub_of_edge[e] = s;
    for (int v : h.subs[s])
      if (h.phi[v] == e) grab.witness[e] = v;
  }
  if (!verify_grabbing(h, grab))
    throw check_failure("grab assignment failed its certificate", {});
  return grab;
}

bool verify_grabbing(const GrabHypergraph& h, const Grabbing& grab) {
  if (grab.grab_of_sub.size() != h.subs.size()) return false;
  std::vector<char> used(h.hyper.size(), 0);
  for (int s = 0; s < static_cast<int>(h.subs.size()); ++s) {
    int e = grab.grab_of_sub[s];
    if (e < 0 || e >= static_cast<int>(h.hyper.size()) || used[e]) return false;
    used[e] = 1;
    if (!std::binary_search(h.incidence[s].begin(), h.incidence[s].end(), e)) return false;
    if (grab.sub_of_edge[e] != s) return false;
    int w = grab.witness[e];
    if (w == -1 || h.sub_of[w] != s || h.phi[w] != e) return false;
  }
  for (int e = 0; e < static_cast<int>(h.hyper.size()); ++e)
    if (!used[e] && grab.sub_of_edge[e] != -1) return false;
  return true;
}

OrientedMatching build_f2(const Graph& g, const Acd& acd, const CliqueClassification& cls,
                          const MatchingF1& f1, const GrabHypergraph& h, const Grabbing& grab) {
  OrientedMatching f2;
  for (int e = 0; e < static_cast<int>(f1.edges.size()); ++e) {
    int s = grab.sub_of_edge[e];
    if (s == -1) continue;
    int v = grab.witness[e];
    auto [a, b] = f1.edges[e];
    OrientedEdge oe;
    if (v == a || v == b) {
      oe = {v, v == a ? b : a};
    } else {
      oe = {v, h.f[v]};
      if (!g.has_edge(oe.tail, oe.head))
        throw check_failure("flipped edge is not a real edge",
                            {{"tail", oe.tail}, {"head", oe.head}});
    }
    if (acd.clique_of[oe.tail] != h.sub_clique[s] ||
        acd.clique_of[oe.head] == acd.clique_of[oe.tail])
      throw check_failure("oriented edge leaves the wrong clique",
                          {{"tail", oe.tail}, {"head", oe.head}, {"clique", h.sub_clique[s]}});
    f2.edges.push_back(oe);
  }

  std::vector<char> seen(g.n(), 0);
  for (const auto& oe : f2.edges) {
    if (seen[oe.tail] || seen[oe.head])
      throw check_failure("rearranged matching reuses a vertex",
                          {{"tail", oe.tail}, {"head", oe.head}});
    seen[oe.tail] = seen[oe.head] = 1;
  }

  std::vector<int> outgoing(acd.cliques.size(), 0);
  for (const auto& oe : f2.edges) outgoing[acd.clique_of[oe.tail]]++;
  for (int c = 0; c < static_cast<int>(acd.cliques.size()); ++c)
    if (cls.type[c] == CliqueType::Linked && outgoing[c] < 28)
      throw check_failure("linked clique short on outgoing edges",
                          {{"clique", c}, {"outgoing", outgoing[c]}});
  return f2;
}

nlohmann::json f1_to_json(const MatchingF1& f1) {
  auto arr = nlohmann::json::array();
  for (auto [u, v] : f1.edges) arr.push_back({{"u", u}, {"v", v}});
  return arr;
}

nlohmann::json oriented_to_json(const OrientedMatching& m) {
  auto arr = nlohmann::json::array();
  for (const auto& e : m.edges) arr.push_back({{"tail", e.tail}, {"head", e.head}});
  return arr;
}

}  // namespace densedelta
