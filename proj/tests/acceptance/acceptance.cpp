// Copyright (c) apasp contributors.
// SPDX-License-Identifier: Apache-2.0

// Acceptance run: one PASS/FAIL line per criterion, exit 0 only if all pass.
//
//   acceptance [--only N]... [--workloads K] [--bench-n N] [--bench-steps S]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "apasp/harness.hpp"
#include "apasp/invariants.hpp"
#include "apasp/oracle.hpp"
#include "apasp/scheduler.hpp"

namespace {

using namespace apasp;
namespace fs = std::filesystem;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct SuiteRun {
  std::uint64_t seed = 0;
  std::size_t n = 0, m = 0;
  int exit_code = 0;
  VerifyResult r;
};

// Suite 1: random digraphs with n in [5, 30], m <= 4n, 200-step traces,
// verified after every vertex update. Runs with n <= 12 form suite 2 and
// additionally get the census, constituent and historical checks.
std::vector<SuiteRun> run_suite(std::size_t workloads, std::size_t steps, const fs::path& dir) {
  std::vector<SuiteRun> runs;
  for (std::size_t i = 0; i < workloads; ++i) {
    WorkloadSpec s;
    s.generator = "random-gnm";
    s.n = 5 + i % 26;
    s.m = (i / 26) % 2 == 0 ? std::min(4 * s.n, s.n * (s.n - 1)) : 2 * s.n;
    s.max_weight = 1 + static_cast<std::int64_t>(i % 4);  // small ranges force ties
    s.steps = steps;
    s.seed = 1000 + i;
    const std::string g = (dir / ("g" + std::to_string(i) + ".txt")).string();
    const std::string t = (dir / ("t" + std::to_string(i) + ".txt")).string();
    std::ostringstream sink;
    SuiteRun run;
    run.seed = s.seed;
    run.n = s.n;
    run.m = s.m;
    if (cmd_gen(s, 1000, g, t, sink) != kExitPass) {
      run.exit_code = kExitUsage;
      run.r.ok = false;
      run.r.failed_check = "gen: " + sink.str();
      runs.push_back(run);
      continue;
    }
    // what `apasp verify --graph g --trace t --every 1` runs
    FileArgs files{g, t, 1000, 0};
    VerifyOptions opt;
    opt.every = 1;
    opt.census_max_n = 12;
    opt.bc = true;
    WeightScale scale(files.scale);
    try {
      run.r = verify_workload(load_graph(files.graph, scale), load_trace(files.trace, scale), scale,
                              opt);
      run.exit_code = run.r.ok ? kExitPass : kExitDivergence;
    } catch (const Error& e) {
      run.r.ok = false;
      run.r.failed_check = std::string("exception: ") + e.what();
      run.exit_code = kExitDivergence;
    }
    std::cerr << "  workload " << i << " n=" << s.n << " m=" << s.m << " seed=" << s.seed
              << (run.r.ok ? " ok" : " FAIL " + run.r.failed_check) << " updates=" << run.r.updates
              << '\n';
    runs.push_back(std::move(run));
  }
  return runs;
}

std::string first_failure(const SuiteRun& r) {
  std::ostringstream s;
  s << "seed " << r.seed << " n=" << r.n << " step " << r.r.failed_step << " update "
    << r.r.failed_update << " check " << r.r.failed_check;
  if (!r.r.failures.empty()) s << ": " << r.r.failures.front();
  return s.str();
}

Outcome criterion_oracle(const std::vector<SuiteRun>& runs, std::size_t steps) {
  Outcome o;
  std::size_t checks = 0, updates = 0;
  std::set<std::size_t> ns;
  for (const auto& r : runs) {
    checks += r.r.oracle_checks;
    updates += r.r.updates;
    ns.insert(r.n);
    if (r.exit_code != kExitPass) {
      if (o.pass) o.detail = first_failure(r);
      o.pass = false;
    } else if (r.r.steps != steps || r.r.checkpoints != r.r.updates) {
      if (o.pass) o.detail = "seed " + std::to_string(r.seed) + " skipped checkpoints";
      o.pass = false;
    }
  }
  if (runs.size() < 50) {
    o.pass = false;
    o.detail = "only " + std::to_string(runs.size()) + " workloads";
  }
  if (o.pass) {
    o.detail = std::to_string(runs.size()) + " workloads, n in [" + std::to_string(*ns.begin()) +
               "," + std::to_string(*ns.rbegin()) + "], " + std::to_string(updates) +
               " vertex updates, " + std::to_string(checks) + " oracle checks (d, sigma, BC)";
  }
  return o;
}

template <typename Field>
Outcome criterion_check(const std::vector<SuiteRun>& runs, const std::string& check, Field field,
                        bool small_only) {
  Outcome o;
  std::size_t total = 0, workloads = 0;
  for (const auto& r : runs) {
    if (small_only && r.n > 12) continue;
    ++workloads;
    total += r.r.*field;
    if (!r.r.ok && r.r.failed_check == check) {
      if (o.pass) o.detail = first_failure(r);
      o.pass = false;
    }
    if (r.r.ok && r.r.*field == 0) {
      if (o.pass) o.detail = "seed " + std::to_string(r.seed) + " ran no " + check + " checks";
      o.pass = false;
    }
  }
  if (workloads == 0) {
    o.pass = false;
    o.detail = "no workloads";
  }
  if (o.pass) {
    o.detail = std::to_string(total) + " " + check + " checks over " + std::to_string(workloads) +
               " workloads, zero violations";
  }
  return o;
}

Outcome criterion_scheduler() {
  Outcome o;
  // step arithmetic over t <= 4096 on a replayed history
  const std::size_t n = 2048;
  History h(n);
  std::mt19937_64 rng(5);
  std::set<Vid> touched;
  std::uint64_t dummies = 0, identity = 0, membership = 0;
  for (std::uint64_t t = 1; t <= 4096 && o.pass; ++t) {
    UpdateRecord real;
    real.step = t;
    real.v = static_cast<Vid>(rng() % n);
    h.record(real);
    touched.insert(real.v);
    for (std::uint64_t src : h.dummy_steps(t)) {
      UpdateRecord d;
      d.step = t;
      d.kind = RecordKind::kDummy;
      d.v = h.real_vertex(src);
      d.source_step = src;
      h.record(d);
      ++dummies;
    }
    identity += (std::uint64_t{1} << set_bit(t)) - 1;
    const auto pt = prior_times(t);
    for (Vid v : touched) {
      ++membership;
      if (!std::binary_search(pt.begin(), pt.end(), *h.last_update(v))) {
        o.pass = false;
        o.detail = "t=" + std::to_string(t) + " vertex " + std::to_string(v);
        break;
      }
    }
  }
  if (o.pass && dummies != identity) {
    o.pass = false;
    o.detail = "dummy count " + std::to_string(dummies) + " != " + std::to_string(identity);
  }
  // the engine's own history on an 8-step epoch
  DynGraph g(4);
  for (Vid v = 0; v < 4; ++v) g.add_edge(v, (v + 1) % 4, Weight(1));
  DynamicApasp d(g);
  for (Vid v = 0; v < 4; ++v) {
    VertexUpdate up;
    up.v = v;
    up.out.push_back({(v + 1) % 4, Weight(2 + v)});
    d.apply(up);
    if (!check::recency(d.graph(), d.history()).empty()) {
      o.pass = false;
      o.detail = "engine history violates recency at step " + std::to_string(d.step());
    }
  }
  if (o.pass && d.total_dummies() != 12) {
    o.pass = false;
    o.detail = "8-step epoch ran " + std::to_string(d.total_dummies()) + " dummies, expected 12";
  }
  if (o.pass) {
    o.detail = "t <= 4096: " + std::to_string(membership) + " last-update memberships, " +
               std::to_string(dummies) + " dummies = sum(2^set_bit(t) - 1); 8-step epoch: 12 dummies";
  }
  return o;
}

Outcome criterion_recency_in_suite(const std::vector<SuiteRun>& runs, Outcome o) {
  std::size_t checks = 0;
  for (const auto& r : runs) {
    checks += r.r.recency_checks;
    if (!r.r.ok && r.r.failed_check == "recency") {
      if (o.pass) o.detail = first_failure(r);
      o.pass = false;
    }
  }
  if (o.pass) o.detail += "; " + std::to_string(checks) + " recency checks in suite 1";
  return o;
}

Outcome criterion_ratios(const std::vector<SuiteRun>& runs) {
  Outcome o;
  double bulk = 0, cleanup = 0;
  for (const auto& r : runs) {
    bulk = std::max(bulk, r.r.max_bulk_ratio);
    cleanup = std::max(cleanup, r.r.max_cleanup_ratio);
    if (r.r.max_bulk_ratio > 10 || r.r.max_cleanup_ratio > 10) {
      if (o.pass) {
        std::ostringstream s;
        s << "seed " << r.seed << " bulk ratio " << r.r.max_bulk_ratio << " cleanup ratio "
          << r.r.max_cleanup_ratio;
        o.detail = s.str();
      }
      o.pass = false;
    }
  }
  if (o.pass) {
    std::ostringstream s;
    s << std::setprecision(3) << "max triples/(m* nu* log2 n) = " << bulk
      << ", max cleanup-examined/(nu*^2 log2^2 n) = " << cleanup << " (limit 10)";
    o.detail = s.str();
  }
  return o;
}

Outcome criterion_bench(std::size_t n, std::size_t steps) {
  Outcome o;
  BenchArgs b;
  b.spec.generator = "planted-partition";
  b.spec.n = n;
  b.spec.k = 5;
  b.spec.steps = steps;
  b.spec.seed = 1;
  b.timing = true;
  const auto t0 = std::chrono::steady_clock::now();
  BenchSummary s = bench(b);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = secs < 600;
  const bool bounded = s.last_quarter_mean <= 4 * s.first_quarter_mean;
  o.pass = in_time && bounded && s.touched_per_step.size() == steps;
  std::ostringstream d;
  d << std::fixed << std::setprecision(1) << "n=" << n << " k=5 " << steps << " updates in " << secs
    << "s (limit 600s); touched per step: first-quarter mean " << s.first_quarter_mean
    << ", last-quarter mean " << s.last_quarter_mean << " (limit 4x); max per vertex update "
    << s.report.max_touched << "; " << s.report.total_dummies << " dummies";
  o.detail = d.str();
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria 1-8"};
  std::vector<int> only;
  std::size_t workloads = 52, steps = 200, bench_n = 500, bench_steps = 500;
  app.add_option("--only", only, "run only these criteria");
  app.add_option("--workloads", workloads, "suite 1 workload count");
  app.add_option("--steps", steps, "trace length per suite 1 workload");
  app.add_option("--bench-n", bench_n, "criterion 8 vertex count");
  app.add_option("--bench-steps", bench_steps, "criterion 8 trace length");
  CLI11_PARSE(app, argc, argv);
  auto want = [&](int c) { return only.empty() || std::count(only.begin(), only.end(), c) > 0; };

  std::map<int, Outcome> results;
  const bool need_suite = want(1) || want(2) || want(3) || want(4) || want(5) || want(6) || want(7);
  std::vector<SuiteRun> runs;
  if (need_suite) {
    const fs::path dir = fs::temp_directory_path() / "apasp_acceptance";
    fs::remove_all(dir);
    fs::create_directories(dir);
    std::cerr << "suite 1: " << workloads << " workloads x " << steps << " steps\n";
    runs = run_suite(workloads, steps, dir);
    fs::remove_all(dir);
  }
  if (want(1)) results[1] = criterion_oracle(runs, steps);
  if (want(2)) results[2] = criterion_check(runs, "census", &VerifyResult::census_checks, true);
  if (want(3)) {
    results[3] = criterion_check(runs, "updated-vertex", &VerifyResult::updated_vertex_checks, false);
  }
  if (want(4)) {
    results[4] = criterion_check(runs, "constituents", &VerifyResult::constituent_checks, true);
  }
  if (want(5)) results[5] = criterion_recency_in_suite(runs, criterion_scheduler());
  if (want(6)) {
    results[6] = criterion_check(runs, "historical", &VerifyResult::historical_checks, true);
  }
  if (want(7)) results[7] = criterion_ratios(runs);
  if (want(8)) {
    std::cerr << "criterion 8: bench n=" << bench_n << " steps=" << bench_steps << '\n';
    results[8] = criterion_bench(bench_n, bench_steps);
  }

  static const char* names[] = {"",
                                "oracle equivalence",
                                "tuple census",
                                "updated-vertex invariant",
                                "constituent invariant",
                                "scheduler arithmetic",
                                "historical property",
                                "instrumentation ratios",
                                "desk-scale bench"};
  bool all = true;
  for (const auto& [c, o] : results) {
    std::cout << "criterion " << c << " (" << names[c] << "): " << (o.pass ? "PASS" : "FAIL")
              << ": " << o.detail << '\n';
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
