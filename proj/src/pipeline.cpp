#include "densedelta/pipeline.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "densedelta/errors.hpp"
#include "densedelta/loopholes.hpp"
#include "densedelta/matching.hpp"
#include "densedelta/oracle.hpp"
#include "densedelta/triads.hpp"

namespace densedelta {

namespace {

void write_artifact(const std::string& dir, const std::string& name, const nlohmann::json& j) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  const std::string path = (fs::path(dir) / name).string();
  std::ofstream out(path, std::ios::binary);
  out << j.dump(2) << '\n';
  if (!out) throw io_error("cannot write " + path);
}

const char* type_name(CliqueType t) {
  switch (t) {
    case CliqueType::Easy: return "easy";
    case CliqueType::Linked: return "linked";
    default: return "anchored";
  }
}

nlohmann::json classification_json(const std::vector<Loophole>& loopholes,
                                   const CliqueClassification& cls) {
  nlohmann::json lj = nlohmann::json::array();
  for (const Loophole& l : loopholes) lj.push_back({{"kind", l.kind}, {"vertices", l.vertices}});
  nlohmann::json cj = nlohmann::json::array();
  for (size_t c = 0; c < cls.type.size(); ++c)
    cj.push_back({{"type", type_name(cls.type[c])},
                  {"anchor", cls.anchor[c]},
                  {"external_degree", cls.ext_deg[c]}});
  return {{"loopholes", lj}, {"cliques", cj}};
}

// Debug-only guard between phases: a partial coloring must already be proper.
void check_partial(const Graph& g, const Coloring& c, const char* stage) {
  ColoringReport rep = verify_coloring(g, c, false);
  if (!rep.pass)
    throw check_failure(std::string("improper partial coloring after ") + stage,
                        {{"monochromatic_edges", rep.monochromatic_edges},
                         {"out_of_range", rep.out_of_range}});
}

// Debug-only: F1 is maximal iff no crossing edge has two unmatched endpoints.
void check_f1_maximal(const Graph& g, const Acd& acd, const CliqueClassification& cls,
                      const MatchingF1& f1) {
  for (const auto& [u, v] : g.edges()) {
    int cu = acd.clique_of[u], cv = acd.clique_of[v];
    if (cu == cv || cls.type[cu] == CliqueType::Easy || cls.type[cv] == CliqueType::Easy)
      continue;
    if (f1.partner[u] == -1 && f1.partner[v] == -1)
      throw check_failure("crossing matching not maximal", {{"u", u}, {"v", v}});
  }
}

}  // namespace

PipelineResult run_pipeline(const Graph& g, const PipelineOptions& opts) {
  PipelineResult res;
  res.coloring.delta = g.delta();
  res.coloring.colors.assign(g.n(), -1);
  if (g.n() == 0) return res;

  const int delta = g.delta();
  if (delta < 63)
    throw invalid_input("maximum degree " + std::to_string(delta) +
                        " is below 63, where the 1/63 density thresholds are vacuous");
  if (auto clique = detect_k_delta_plus_one(g))
    throw invalid_input("graph contains a K_{delta+1}, which is not delta-colorable; vertices " +
                        nlohmann::json(*clique).dump());

  const Acd acd = compute_acd(g, opts.acd);
  if (!is_dense(acd))
    throw invalid_input("graph has " + std::to_string(acd.sparse.size()) +
                        " sparse vertices; only dense graphs are in scope");
  AcdReport acd_rep = verify_acd(g, acd);
  if (!acd_rep.pass)
    throw check_failure("decomposition violates its own guarantees",
                        {{"violations", acd_rep.violations}});
  res.trace.add("almost-clique-decomposition", 2, kModeCentralized);
  if (!opts.artifacts_dir.empty())
    write_artifact(opts.artifacts_dir, "partition.json", acd_to_json(acd, opts.acd));

  const std::vector<Loophole> loopholes = enumerate_loopholes(g, acd);
  res.trace.add("loophole-detect", 3, kModeCentralized);
  if (opts.debug) {
    try {
      if (enumerate_loopholes_brute(g, acd) != loopholes)
        throw check_failure("loophole enumeration tiers disagree", {});
    } catch (const oracle::budget_exceeded&) {
      // reference enumeration out of reach; nothing to compare
    }
  }

  const CliqueClassification cls = classify_cliques(g, acd, loopholes);
  res.trace.add("clique-classification", 2, kModeCentralized);
  if (!opts.artifacts_dir.empty())
    write_artifact(opts.artifacts_dir, "classification.json", classification_json(loopholes, cls));

  const bool any_hard =
      std::any_of(cls.type.begin(), cls.type.end(),
                  [](CliqueType t) { return t != CliqueType::Easy; });
  if (any_hard) {
    const MatchingF1 f1 = maximal_matching_f1(g, acd, cls);
    res.trace.add("crossing-matching", f1.rounds, kModeSimulated);
    if (opts.debug) check_f1_maximal(g, acd, cls, f1);
    if (!opts.artifacts_dir.empty())
      write_artifact(opts.artifacts_dir, "matching.json", f1_to_json(f1));

    const GrabHypergraph heg = build_grab_hypergraph(g, acd, cls, f1);
    const Grabbing grab = solve_heg(heg);
    res.trace.add("hyperedge-grab", 4, kModeCentralized);

    const OrientedMatching f2 = build_f2(g, acd, cls, f1, heg, grab);
    if (!opts.artifacts_dir.empty())
      write_artifact(opts.artifacts_dir, "oriented-matching.json", oriented_to_json(f2));

    const OrientedMatching f3 = derive_f3(g, acd, cls, f2);
    res.trace.add("outdegree-split", 3, kModeCentralized);
    if (!opts.artifacts_dir.empty())
      write_artifact(opts.artifacts_dir, "thinned-matching.json", oriented_to_json(f3));

    const std::vector<SlackTriad> triads = form_triads(g, acd, cls, f3);
    res.trace.add("triad-form", 2, kModeCentralized);
    if (!opts.artifacts_dir.empty())
      write_artifact(opts.artifacts_dir, "triads.json", triads_to_json(triads));

    color_slack_pairs(g, triads, res.coloring, res.trace);
    if (opts.debug) check_partial(g, res.coloring, "pair coloring");
    color_remaining_hard(g, acd, cls, triads, res.coloring, res.trace);
    if (opts.debug) check_partial(g, res.coloring, "hard-clique coloring");
  }

  color_easy_and_loopholes(g, acd, loopholes, cls, res.coloring, res.trace);

  ColoringReport rep = verify_coloring(g, res.coloring, true);
  if (!rep.pass)
    throw check_failure("final coloring is not total and proper",
                        {{"monochromatic_edges", rep.monochromatic_edges},
                         {"out_of_range", rep.out_of_range},
                         {"uncolored", rep.uncolored}});
  return res;
}

}  // namespace densedelta
