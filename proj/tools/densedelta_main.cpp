#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "densedelta/errors.hpp"
#include "densedelta/generator.hpp"
#include "densedelta/graph.hpp"
#include "densedelta/pipeline.hpp"
#include "densedelta/sim.hpp"

namespace dd = densedelta;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitInternal = 3;

struct GenArgs {
  std::string kind;
  int k = 0;
  int delta = 0;
  std::uint64_t seed = 0;
  std::string out;
  int easy_drop = 0;
  int easy_double = 0;
};

int cmd_gen(const GenArgs& a) {
  if (a.kind == "hard" && (a.easy_drop != 0 || a.easy_double != 0))
    throw dd::invalid_input("--easy-drop/--easy-double only apply to --kind mixed");
  dd::GenResult r = a.kind == "hard"
                        ? dd::gen_hard_dense(a.k, a.delta, a.seed)
                        : dd::gen_mixed_dense(a.k, a.delta, a.seed, a.easy_drop, a.easy_double);
  dd::write_graph_file(r.graph, a.out);
  {
    std::ofstream meta(a.out + ".meta.json", std::ios::binary);
    meta << dd::gen_metadata_json(r).dump(2) << '\n';
    if (!meta) throw dd::io_error("cannot write " + a.out + ".meta.json");
  }
  std::cout << "wrote " << a.out << ": n=" << r.graph.n() << " m=" << r.graph.m()
            << " delta=" << r.graph.delta() << " cliques=" << r.cliques.size()
            << " planted-easy=" << r.planted_easy.size() << "\n";
  return kExitOk;
}

struct RunArgs {
  std::string in;
  std::string out_coloring;
  std::string out_trace;
  std::string out_artifacts;
};

int cmd_run(const RunArgs& a) {
  dd::Graph g = dd::read_graph_file(a.in);
  dd::PipelineOptions opts;
  opts.artifacts_dir = a.out_artifacts;
  const char* dbg = std::getenv("DENSEDELTA_DEBUG");
  opts.debug = dbg != nullptr && std::string(dbg) == "1";

  dd::PipelineResult res = dd::run_pipeline(g, opts);

  // Output files are written only now, after the pipeline's own total
  // verification has passed; an abort above leaves no stale files behind.
  dd::write_coloring_file(res.coloring, a.out_coloring);
  dd::write_trace_file(res.trace, a.out_trace);
  std::cout << "colored " << g.n() << " vertices with " << g.delta() << " colors in "
            << res.trace.total() << " rounds\n";
  return kExitOk;
}

struct VerifyArgs {
  std::string in;
  std::string coloring;
};

int cmd_verify(const VerifyArgs& a) {
  dd::Graph g = dd::read_graph_file(a.in);
  dd::Coloring c = dd::read_coloring_file(a.coloring);
  bool delta_match = c.delta == g.delta();
  dd::ColoringReport rep = dd::verify_coloring(g, c, true);
  if (delta_match && rep.pass) {
    std::cout << "OK: total proper coloring with " << c.delta << " colors\n";
    return kExitOk;
  }
  if (!delta_match)
    std::cout << "coloring claims delta=" << c.delta << " but the graph has delta=" << g.delta()
              << "\n";
  if (!rep.monochromatic_edges.empty()) {
    std::cout << rep.monochromatic_edges.size() << " monochromatic edges, first:";
    for (size_t i = 0; i < rep.monochromatic_edges.size() && i < 5; ++i)
      std::cout << " {" << rep.monochromatic_edges[i].first << ","
                << rep.monochromatic_edges[i].second << "}";
    std::cout << "\n";
  }
  if (!rep.out_of_range.empty())
    std::cout << rep.out_of_range.size() << " vertices colored outside [0, delta)\n";
  if (!rep.uncolored.empty()) std::cout << rep.uncolored.size() << " vertices uncolored\n";
  std::cout << "FAIL\n";
  return kExitVerifyFailed;
}

int cmd_stats(const std::string& trace_path) {
  dd::RoundTrace t = dd::read_trace_file(trace_path);
  size_t width = 5;
  for (const dd::PhaseRecord& p : t.phases) width = std::max(width, p.name.size());
  for (const dd::PhaseRecord& p : t.phases)
    std::cout << p.name << std::string(width - p.name.size() + 2, ' ') << p.rounds << "  ("
              << p.mode << ")\n";
  std::cout << "total" << std::string(width - 5 + 2, ' ') << t.total() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"delta-coloring of dense graphs: generate, run, verify, inspect"};
  app.require_subcommand(1);

  GenArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate an instance");
  gen_cmd->add_option("--kind", gen.kind, "hard | mixed")
      ->required()
      ->check(CLI::IsMember({"hard", "mixed"}));
  gen_cmd->add_option("--k", gen.k, "number of planted cliques")->required();
  gen_cmd->add_option("--delta", gen.delta, "target maximum degree")->required();
  gen_cmd->add_option("--seed", gen.seed, "generator seed")->required();
  gen_cmd->add_option("--out", gen.out, "output graph file")->required();
  gen_cmd->add_option("--easy-drop", gen.easy_drop, "planted missing-edge defects");
  gen_cmd->add_option("--easy-double", gen.easy_double, "planted doubled-pair defects");

  RunArgs run;
  CLI::App* run_cmd = app.add_subcommand("run", "color an instance");
  run_cmd->add_option("--in", run.in, "input graph file")->required();
  run_cmd->add_option("--out-coloring", run.out_coloring, "coloring output")->required();
  run_cmd->add_option("--out-trace", run.out_trace, "round trace output")->required();
  run_cmd->add_option("--out-artifacts", run.out_artifacts,
                      "directory for per-phase intermediates");

  VerifyArgs verify;
  CLI::App* verify_cmd = app.add_subcommand("verify", "check a coloring against a graph");
  verify_cmd->add_option("--in", verify.in, "input graph file")->required();
  verify_cmd->add_option("--coloring", verify.coloring, "coloring file")->required();

  std::string trace_path;
  CLI::App* stats_cmd = app.add_subcommand("stats", "print a round trace");
  stats_cmd->add_option("--trace", trace_path, "trace file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return kExitInvalidInput;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen);
    if (*run_cmd) return cmd_run(run);
    if (*verify_cmd) return cmd_verify(verify);
    return cmd_stats(trace_path);
  } catch (const dd::check_failure& e) {
    nlohmann::json cert = {{"error", e.what()}, {"witness", e.witness}};
    std::cerr << "internal assertion failed: " << e.what() << "\n" << cert.dump(2) << "\n";
    return kExitInternal;
  } catch (const dd::invalid_input& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const dd::io_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
