#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "densedelta/errors.hpp"
#include "densedelta/graph.hpp"

namespace densedelta {

// What a node knows before the first round: its own ID and its neighbor IDs.
struct LocalView {
  int id = -1;
  const std::vector<int>* neighbors = nullptr;
};

template <typename Msg>
struct Envelope {
  int from;
  Msg body;
};

template <typename Msg, typename Out>
struct StepResult {
  std::vector<std::pair<int, Msg>> outbox;  // (neighbor ID, message)
  bool halt = false;
  std::optional<Out> output;
};

template <typename P>
struct RunResult {
  std::vector<typename P::Output> outputs;  // one per node
  int rounds = 0;
};

// Synchronous message-passing driver. A program type P supplies:
//
//   struct X { using State = ...; using Message = ...; using Output = ...;
//     State init(const LocalView&) const;
//     StepResult<Message, Output> step(State&, int round,
//                                      const std::vector<Envelope<Message>>&) const; };
//
// Round t delivers the messages sent in round t-1; round 0 runs on empty
// inboxes. Nodes step in ascending ID order, but a message sent in round t is
// never visible before round t+1, so any step order gives the same run.
// Inboxes arrive sorted by sender ID. A node may send at most one message per
// neighbor per round and must emit its output exactly once before (or when)
// it halts; halted nodes stop stepping and their pending inbound messages are
// dropped. Rounds used = index of the last round in which any node stepped,
// so a program that outputs and halts immediately costs 0 rounds.
template <typename P>
RunResult<P> run_sync(const Graph& g, const P& prog, int round_cap = 1 << 20) {
  using Msg = typename P::Message;
  using Out = typename P::Output;

  const int n = g.n();
  std::vector<typename P::State> state;
  state.reserve(n);
  for (int v = 0; v < n; ++v) state.push_back(prog.init(LocalView{v, &g.neighbors(v)}));

  std::vector<char> halted(n, 0);
  std::vector<std::optional<Out>> outputs(n);
  std::vector<std::vector<Envelope<Msg>>> inbox(n), pending(n);

  int alive = n;
  int last_round = 0;
  for (int round = 0; alive > 0; ++round) {
    if (round > round_cap)
      throw check_failure("simulation exceeded round cap",
                          {{"round_cap", round_cap}});
    last_round = round;
    for (int v = 0; v < n; ++v) {
      if (halted[v]) continue;
      auto res = prog.step(state[v], round, inbox[v]);
      for (auto& [to, msg] : res.outbox) {
        if (!g.has_edge(v, to))
          throw check_failure("message to non-neighbor",
                              {{"from", v}, {"to", to}, {"round", round}});
        if (!pending[to].empty() && pending[to].back().from == v)
          throw check_failure("two messages from one sender to one receiver in a round",
                              {{"from", v}, {"to", to}, {"round", round}});
        pending[to].push_back(Envelope<Msg>{v, std::move(msg)});
      }
      if (res.output) {
        if (outputs[v])
          throw check_failure("node emitted output twice", {{"node", v}, {"round", round}});
        outputs[v] = std::move(res.output);
      }
      if (res.halt) {
        halted[v] = 1;
        --alive;
      }
    }
    for (int v = 0; v < n; ++v) {
      inbox[v].clear();
      if (halted[v]) {
        pending[v].clear();  // dropped
      } else {
        inbox[v] = std::move(pending[v]);  // already sorted: senders step in ID order
        pending[v] = {};
      }
    }
  }

  RunResult<P> result;
  result.outputs.reserve(n);
  for (int v = 0; v < n; ++v) {
    if (!outputs[v]) throw check_failure("node halted without emitting output", {{"node", v}});
    result.outputs.push_back(std::move(*outputs[v]));
  }
  result.rounds = n == 0 ? 0 : last_round;
  return result;
}

inline constexpr const char* kModeSimulated = "simulated-distributed";
inline constexpr const char* kModeCentralized = "centralized-with-certificate";

// Per-phase round ledger for a pipeline run.
struct PhaseRecord {
  std::string name;
  int rounds = 0;
  std::string mode;
};

struct RoundTrace {
  std::vector<PhaseRecord> phases;

  void add(std::string name, int rounds, std::string mode);
  int total() const;

  nlohmann::json to_json() const;  // {"phases": [{"name","rounds","mode"}...], "total": T}
  static RoundTrace from_json(const nlohmann::json& j);
};

RoundTrace read_trace_file(const std::string& path);
void write_trace_file(const RoundTrace& t, const std::string& path);

// Quotient of g by disjoint vertex groups: one virtual node per group, an
// edge where some real edge crosses between two groups (edges inside a group
// are not quotient edges). `witness[i]` is the lexicographically smallest
// real edge realizing quotient edge i. Running a node program on `quotient`
// simulates the virtual graph with O(1) real-round overhead per virtual
// round, since a group's members can mirror the group state locally.
struct VirtualGraph {
  std::vector<std::vector<int>> groups;
  std::vector<int> group_of;  // real vertex -> group index, -1 if ungrouped
  Graph quotient;
  std::vector<std::pair<int, int>> witness;  // aligned with quotient.edges()
};

VirtualGraph lift_virtual(const Graph& g, std::vector<std::vector<int>> groups);

}  // namespace densedelta
