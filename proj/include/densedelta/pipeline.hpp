#pragma once

#include <string>

#include "densedelta/acd.hpp"
#include "densedelta/graph.hpp"
#include "densedelta/sim.hpp"

namespace densedelta {

// End-to-end run: decompose, detect loopholes, classify cliques, build the
// matchings and triads, color the hard cliques, then the easy ones. Either
// returns a TOTAL proper coloring with colors in [0, delta) or throws; no
// partial colorings escape.
//
// Scope gates (invalid_input): delta >= 63 (below that the 1/63 density
// thresholds are vacuous), no K_{delta+1}, no sparse vertices.
// Every structural guarantee asserted inside the phase modules runs inline;
// a violation surfaces as check_failure with its witness.

struct PipelineOptions {
  AcdParams acd;
  std::string artifacts_dir;  // when non-empty, intermediates are written here
  bool debug = false;         // extra cross-checks (CLI: DENSEDELTA_DEBUG=1)
};

struct PipelineResult {
  Coloring coloring;
  RoundTrace trace;
};

PipelineResult run_pipeline(const Graph& g, const PipelineOptions& opts = {});

}  // namespace densedelta
