#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "densedelta/errors.hpp"
#include "densedelta/sim.hpp"
#include "helpers.hpp"

using namespace densedelta;

namespace {

// Outputs its own ID in round 0 without talking to anyone.
struct Silent {
  struct State {
    int id;
  };
  using Message = int;
  using Output = int;
  State init(const LocalView& view) const { return {view.id}; }
  StepResult<int, int> step(State& s, int, const std::vector<Envelope<int>>&) const {
    return {{}, true, s.id};
  }
};

// Round 0: send own ID to every neighbor. Round 1: output the sorted sender
// list (which must equal the neighbor list) and record that round 0 saw an
// empty inbox.
struct ExchangeIds {
  struct State {
    int id;
    std::vector<int> neighbors;
    bool round0_inbox_empty = false;
  };
  using Message = int;
  using Output = std::vector<int>;
  State init(const LocalView& view) const { return {view.id, *view.neighbors}; }
  StepResult<Message, Output> step(State& s, int round,
                                   const std::vector<Envelope<int>>& inbox) const {
    if (round == 0) {
      s.round0_inbox_empty = inbox.empty();
      StepResult<Message, Output> r;
      for (int u : s.neighbors) r.outbox.emplace_back(u, s.id);
      return r;
    }
    std::vector<int> senders;
    for (const auto& e : inbox) {
      CHECK(e.body == e.from);
      senders.push_back(e.from);
    }
    CHECK(s.round0_inbox_empty);
    return {{}, true, senders};
  }
};

// Floods the smallest ID seen for `radius` rounds, then outputs it. After
// round t a node knows the minimum over its distance-t ball, so the output
// depends only on the distance-`radius` neighborhood.
struct MinWithin {
  int radius;
  struct State {
    int best;
    std::vector<int> neighbors;
  };
  using Message = int;
  using Output = int;
  State init(const LocalView& view) const { return {view.id, *view.neighbors}; }
  StepResult<int, int> step(State& s, int round, const std::vector<Envelope<int>>& inbox) const {
    for (const auto& e : inbox) s.best = std::min(s.best, e.body);
    if (round == radius) return {{}, true, s.best};
    StepResult<int, int> r;
    for (int u : s.neighbors) r.outbox.emplace_back(u, s.best);
    return r;
  }
};

template <typename Misbehave>
struct Rogue {
  Misbehave act;
  struct State {
    int id;
    std::vector<int> neighbors;
  };
  using Message = int;
  using Output = int;
  State init(const LocalView& view) const { return {view.id, *view.neighbors}; }
  StepResult<int, int> step(State& s, int round, const std::vector<Envelope<int>>&) const {
    return act(s.id, s.neighbors, round);
  }
};

template <typename Misbehave>
Rogue<Misbehave> rogue(Misbehave act) {
  return Rogue<Misbehave>{act};
}

}  // namespace

TEST_CASE("a program that outputs immediately costs zero rounds") {
  Graph g = cycle_graph(5);
  auto res = run_sync(g, Silent{});
  CHECK(res.rounds == 0);
  std::vector<int> want(5);
  std::iota(want.begin(), want.end(), 0);
  CHECK(res.outputs == want);

  auto empty = run_sync(Graph{}, Silent{});
  CHECK(empty.rounds == 0);
  CHECK(empty.outputs.empty());
}

TEST_CASE("messages sent in a round arrive the next round, sorted by sender") {
  Graph g = path_graph(4);
  auto res = run_sync(g, ExchangeIds{});
  CHECK(res.rounds == 1);
  for (int v = 0; v < 4; ++v) CHECK(res.outputs[v] == g.neighbors(v));
}

TEST_CASE("driver rejects rule violations") {
  Graph g = path_graph(3);

  auto to_non_neighbor = rogue([](int id, const std::vector<int>&, int) {
    StepResult<int, int> r{{}, true, 0};
    if (id == 0) r.outbox.emplace_back(2, 7);
    return r;
  });
  CHECK_THROWS_WITH_AS(run_sync(g, to_non_neighbor), "message to non-neighbor", check_failure);

  auto double_send = rogue([](int id, const std::vector<int>& nbrs, int) {
    StepResult<int, int> r{{}, true, 0};
    if (id == 1) {
      r.outbox.emplace_back(nbrs[0], 1);
      r.outbox.emplace_back(nbrs[0], 2);
    }
    return r;
  });
  CHECK_THROWS_AS(run_sync(g, double_send), check_failure);

  auto silent_halt = rogue([](int id, const std::vector<int>&, int) {
    StepResult<int, int> r;
    r.halt = true;
    if (id != 1) r.output = 0;
    return r;
  });
  CHECK_THROWS_WITH_AS(run_sync(g, silent_halt), "node halted without emitting output",
                       check_failure);

  auto chatty = rogue([](int, const std::vector<int>&, int round) {
    StepResult<int, int> r;
    r.output = round;
    r.halt = round == 1;
    return r;
  });
  CHECK_THROWS_WITH_AS(run_sync(g, chatty), "node emitted output twice", check_failure);

  auto forever = rogue([](int, const std::vector<int>&, int) {
    StepResult<int, int> r;
    return r;
  });
  CHECK_THROWS_AS(run_sync(g, forever, 64), check_failure);
}

TEST_CASE("an r-round program cannot see past distance r") {
  MinWithin prog{2};
  Graph whole = path_graph(8);
  auto base = run_sync(whole, prog);
  CHECK(base.rounds == 2);
  for (int v = 0; v < 8; ++v) CHECK(base.outputs[v] == std::max(0, v - 2));

  // Cutting the far end of the path changes nothing within distance 2 of the
  // low vertices, so their outputs must be identical.
  Graph cut = Graph::from_edges(
      8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}});
  auto res = run_sync(cut, prog);
  for (int v = 0; v <= 4; ++v) CHECK(res.outputs[v] == base.outputs[v]);
  CHECK(res.outputs[7] == 7);  // isolated now
}

TEST_CASE("round trace serializes with a consistent total") {
  RoundTrace t;
  t.add("alpha", 3, kModeSimulated);
  t.add("beta", 0, kModeCentralized);
  CHECK(t.total() == 3);

  nlohmann::json j = t.to_json();
  CHECK(j["total"] == 3);
  CHECK(j["phases"].size() == 2);
  CHECK(j["phases"][0]["name"] == "alpha");
  CHECK(j["phases"][1]["mode"] == kModeCentralized);

  RoundTrace back = RoundTrace::from_json(j);
  CHECK(back.phases.size() == 2);
  CHECK(back.phases[0].rounds == 3);

  j["total"] = 99;
  CHECK_THROWS_AS(RoundTrace::from_json(j), io_error);
  CHECK_THROWS_AS(RoundTrace::from_json(nlohmann::json::array()), io_error);
}

TEST_CASE("virtual lift quotients groups and keeps edge witnesses") {
  Graph g = cycle_graph(4);  // edges 0-1 1-2 2-3 0-3

  SUBCASE("two groups joined by two real edges") {
    VirtualGraph vg = lift_virtual(g, {{1, 0}, {2, 3}});
    CHECK(vg.groups == std::vector<std::vector<int>>{{0, 1}, {2, 3}});
    CHECK(vg.group_of == std::vector<int>{0, 0, 1, 1});
    CHECK(vg.quotient.n() == 2);
    CHECK(vg.quotient.edges() == std::vector<std::pair<int, int>>{{0, 1}});
    // Realized by 0-3 and 1-2; the witness is the smaller.
    CHECK(vg.witness == std::vector<std::pair<int, int>>{{0, 3}});
  }

  SUBCASE("ungrouped vertices induce no quotient edges") {
    VirtualGraph vg = lift_virtual(g, {{0, 1}});
    CHECK(vg.group_of == std::vector<int>{0, 0, -1, -1});
    CHECK(vg.quotient.n() == 1);
    CHECK(vg.quotient.m() == 0);
    CHECK(vg.witness.empty());
  }

  SUBCASE("bad groups are rejected") {
    CHECK_THROWS_AS(lift_virtual(g, {{0}, {0}}), invalid_input);
    CHECK_THROWS_AS(lift_virtual(g, {{4}}), invalid_input);
  }
}
