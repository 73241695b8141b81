#pragma once

#include <optional>
#include <vector>

#include "densedelta/errors.hpp"
#include "densedelta/graph.hpp"

namespace densedelta::oracle {

// Raised when an exhaustive oracle is asked for more than its budget.
// Callers treat this as "skip", never as a pass or a fail.
struct budget_exceeded : invalid_input {
  explicit budget_exceeded(const std::string& what) : invalid_input(what) {}
};

// Exhaustive search for a proper coloring with colors [0, delta).
// Backtracks in ID order trying smaller colors first, so the result is
// deterministic. Budget: n <= 22.
std::optional<Coloring> brute_delta_color(const Graph& g, int delta);

// System of distinct representatives: incidence[i] lists the hyperedge IDs
// vertex i may grab. Returns one hyperedge per vertex, all distinct, or
// nullopt. Exhaustive backtracking; budget: incidence.size() <= 12.
std::optional<std::vector<int>> brute_sdr(const std::vector<std::vector<int>>& incidence);

// Exhaustive list coloring. Returns an assignment (colors drawn from each
// vertex's list, proper on g) or nullopt. Budget: n <= 8.
std::optional<std::vector<int>> brute_list_color(const Graph& g,
                                                 const std::vector<std::vector<int>>& lists);

// Decision wrapper used by the desk-scale list-colorability checks.
bool brute_deg_list(const Graph& g, const std::vector<std::vector<int>>& lists);

}  // namespace densedelta::oracle
