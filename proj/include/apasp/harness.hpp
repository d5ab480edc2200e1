// Copyright (c) apasp contributors.
// SPDX-License-Identifier: Apache-2.0

// Trace replay, differential verification, generation and benchmarking.
// The command functions return process exit codes.

#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "apasp/graph.hpp"
#include "apasp/io.hpp"
#include "apasp/scheduler.hpp"
#include "apasp/workload.hpp"

namespace apasp {

inline constexpr int kExitPass = 0;
inline constexpr int kExitDivergence = 1;
inline constexpr int kExitUsage = 2;

struct UpdateLine {
  std::uint64_t step = 0;
  Vid v = 0;
  RecordKind kind = RecordKind::kReal;
  UpdateKind update_kind = UpdateKind::kReweight;
  bool skipped = false;
  UpdateStats stats;
  std::size_t triples = 0;  // P plus P* after the update
  double seconds = 0;
};

struct RunReport {
  std::vector<UpdateLine> lines;
  std::size_t build_lines = 0;  // lines of the initial build, before the trace
  std::uint64_t real_updates = 0;
  std::uint64_t total_dummies = 0;
  std::uint64_t skipped_dummies = 0;
  std::uint64_t epochs = 0;
  std::size_t max_touched = 0;
  std::size_t max_triples = 0;
  std::size_t final_triples = 0;
  std::size_t max_through_vertex = 0;
  std::size_t nu_star = 0;
  std::size_t m_star = 0;
  double wall_seconds = 0;

  // "U" lines (if `lines`), then "A" aggregates, then "T" timing lines (if
  // `timing`). Everything but the timing lines is deterministic.
  void write(std::ostream& out, bool lines, bool timing) const;
};

// Replays `trace` from `g`, including the initial epoch build. `at_end`
// sees the system after the last step.
RunReport replay(const DynGraph& g, const std::vector<TraceStep>& trace,
                 const std::function<void(const DynamicApasp&)>& at_end = {});

struct VerifyOptions {
  std::uint64_t every = 1;          // check after every k-th vertex update
  std::size_t census_max_n = 12;    // census and historical checks up to this n
  bool bc = true;
  std::optional<std::uint64_t> inject_fault;  // corrupt a count at the first checkpoint from this update on
  std::string dump_dir;             // state dumps on failure
  std::string repro_out;            // failing trace prefix on failure
};

struct VerifyResult {
  bool ok = true;
  std::uint64_t steps = 0;
  std::uint64_t updates = 0;        // vertex updates, real and dummy
  std::uint64_t checkpoints = 0;
  std::uint64_t failed_step = 0;    // trace step (0 for the initial build)
  std::uint64_t failed_update = 0;
  Vid failed_vertex = 0;
  std::string failed_check;
  std::vector<std::string> failures;
  std::uint64_t oracle_checks = 0;
  std::uint64_t census_checks = 0;
  std::uint64_t constituent_checks = 0;
  std::uint64_t updated_vertex_checks = 0;
  std::uint64_t recency_checks = 0;
  std::uint64_t historical_checks = 0;
  std::uint64_t structure_checks = 0;
  // bulk: live triples / (m* nu* log2 n); cleanup: examined / (nu*^2 log2^2 n),
  // with m* and nu* the running maxima over the run
  double max_bulk_ratio = 0;
  double max_cleanup_ratio = 0;
  std::size_t max_m_star = 0;
  std::size_t max_nu_star = 0;
};

VerifyResult verify_workload(const DynGraph& g, const std::vector<TraceStep>& trace,
                             const WeightScale& scale, const VerifyOptions& opt,
                             std::ostream* err = nullptr);

struct FileArgs {
  std::string graph;
  std::string trace;
  std::int64_t scale = 1000;
  int format_version = 0;
};

struct RunArgs : FileArgs {
  bool lines = true;
  bool timing = false;
  bool distances = false;
  bool bc = false;
};

struct BenchArgs {
  WorkloadSpec spec;
  std::int64_t scale = 1000;
  bool lines = false;
  bool timing = true;
};

struct BenchSummary {
  RunReport report;
  std::uint64_t build_steps = 0;
  std::vector<std::size_t> touched_per_step;  // trace steps only, dummies included
  double first_quarter_mean = 0;
  double last_quarter_mean = 0;
};

BenchSummary bench(const BenchArgs& args);

int cmd_run(const RunArgs& args, std::ostream& out, std::ostream& err);
int cmd_verify(const FileArgs& args, const VerifyOptions& opt, std::ostream& out,
               std::ostream& err);
int cmd_gen(const WorkloadSpec& spec, std::int64_t scale, const std::string& graph_out,
            const std::string& trace_out, std::ostream& err);
int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err);

}  // namespace apasp
