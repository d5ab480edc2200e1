// Copyright (c) apasp contributors.
// SPDX-License-Identifier: Apache-2.0

// apasp: replay, verify, generate and benchmark dynamic APSP workloads.
//
//   apasp run    --graph G [--trace T] [--distances] [--bc] [--timing]
//   apasp verify --graph G [--trace T] [--every K] [--census-max-n N]
//   apasp gen    --generator NAME -n N --graph-out G [--trace-out T] ...
//   apasp bench  --generator NAME -n N --steps S ...

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "apasp/harness.hpp"

namespace {

void add_file_flags(CLI::App* cmd, apasp::FileArgs& a) {
  cmd->add_option("--graph", a.graph, "graph file")->required();
  cmd->add_option("--trace", a.trace, "trace file");
  cmd->add_option("--scale", a.scale, "weight denominator")->check(CLI::PositiveNumber);
  cmd->add_option("--format-version", a.format_version, "file format version (0: any)");
}

void add_spec_flags(CLI::App* cmd, apasp::WorkloadSpec& s, std::int64_t& scale) {
  cmd->add_option("--generator", s.generator, "random-gnm | planted-partition | path | diamond-mesh")
      ->check(CLI::IsMember({"random-gnm", "planted-partition", "path", "diamond-mesh"}));
  cmd->add_option("-n,--vertices", s.n, "vertex count");
  cmd->add_option("-m,--edges", s.m, "edge count (random-gnm)");
  cmd->add_option("-k,--clusters", s.k, "cluster count (planted-partition)");
  cmd->add_option("--delta", s.delta, "intra-cluster weights in (delta, 2 delta]");
  cmd->add_option("--bridges", s.bridges, "edges per ordered cluster pair");
  cmd->add_option("--max-weight", s.max_weight, "random-gnm weights in [1, max]");
  cmd->add_option("--steps", s.steps, "trace length");
  cmd->add_option("--mix-increase", s.mix.increase, "fraction of weight-raising reweights");
  cmd->add_option("--mix-decrease", s.mix.decrease, "fraction of weight-lowering reweights");
  cmd->add_option("--mix-insert", s.mix.insert, "fraction of vertex inserts");
  cmd->add_option("--mix-delete", s.mix.remove, "fraction of vertex deletes");
  cmd->add_option("--seed", s.seed, "generator seed");
  cmd->add_option("--scale", scale, "weight denominator")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fully dynamic all-pairs shortest paths: replay, verify, generate, bench"};
  app.require_subcommand(1);

  apasp::RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "replay a trace and print the update report");
  add_file_flags(run_cmd, run);
  run_cmd->add_flag("--distances", run.distances, "print final distances and path counts");
  run_cmd->add_flag("--bc", run.bc, "print final betweenness scores");
  run_cmd->add_flag("--timing", run.timing, "print timing lines");
  bool no_lines = false;
  run_cmd->add_flag("--no-lines", no_lines, "omit per-update lines");

  apasp::FileArgs ver;
  apasp::VerifyOptions vopt;
  std::uint64_t fault = 0;
  bool no_bc = false;
  auto* ver_cmd = app.add_subcommand("verify", "replay a trace against the static oracle");
  add_file_flags(ver_cmd, ver);
  ver_cmd->add_option("--every", vopt.every, "check after every k-th vertex update")
      ->check(CLI::PositiveNumber);
  ver_cmd->add_option("--census-max-n", vopt.census_max_n, "full census up to this n");
  ver_cmd->add_flag("--no-bc", no_bc, "skip betweenness comparison");
  ver_cmd->add_option("--inject-fault", fault, "corrupt a stored count at the first checkpoint from this vertex update on");
  ver_cmd->add_option("--dump-dir", vopt.dump_dir, "write engine and oracle state on failure");
  ver_cmd->add_option("--repro-out", vopt.repro_out, "write the failing trace prefix");

  apasp::WorkloadSpec gspec;
  std::int64_t gscale = 1000;
  std::string graph_out, trace_out;
  auto* gen_cmd = app.add_subcommand("gen", "generate a graph and trace");
  add_spec_flags(gen_cmd, gspec, gscale);
  gen_cmd->add_option("--graph-out", graph_out, "graph file to write")->required();
  gen_cmd->add_option("--trace-out", trace_out, "trace file to write");

  apasp::BenchArgs bargs;
  bool bench_lines = false, no_timing = false;
  auto* bench_cmd = app.add_subcommand("bench", "generate a workload and time its replay");
  add_spec_flags(bench_cmd, bargs.spec, bargs.scale);
  bench_cmd->add_flag("--lines", bench_lines, "print per-update lines");
  bench_cmd->add_flag("--no-timing", no_timing, "omit timing lines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? apasp::kExitPass : apasp::kExitUsage;
  }

  if (*run_cmd) {
    run.lines = !no_lines;
    return apasp::cmd_run(run, std::cout, std::cerr);
  }
  if (*ver_cmd) {
    vopt.bc = !no_bc;
    if (ver_cmd->count("--inject-fault") > 0) vopt.inject_fault = fault;
    return apasp::cmd_verify(ver, vopt, std::cout, std::cerr);
  }
  if (*gen_cmd) return apasp::cmd_gen(gspec, gscale, graph_out, trace_out, std::cerr);
  bargs.lines = bench_lines;
  bargs.timing = !no_timing;
  return apasp::cmd_bench(bargs, std::cout, std::cerr);
}
