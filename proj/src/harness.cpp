// Copyright (c) apasp contributors.
// SPDX-License-Identifier: Apache-2.0

#include "apasp/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "apasp/invariants.hpp"
#include "apasp/oracle.hpp"
#include "apasp/queries.hpp"

namespace apasp {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

UpdateLine to_line(const UpdateRecord& r, std::size_t triples, double seconds) {
  UpdateLine l;
  l.step = r.step;
  l.v = r.v;
  l.kind = r.kind;
  l.update_kind = r.update_kind;
  l.skipped = r.skipped;
  l.stats = r.stats;
  l.triples = triples;
  l.seconds = seconds;
  return l;
}

double log2n(std::size_t n) { return std::log2(static_cast<double>(std::max<std::size_t>(n, 2))); }

double percentile(std::vector<double> v, double p) {
  if (v.empty()) return 0;
  std::sort(v.begin(), v.end());
  std::size_t i = static_cast<std::size_t>(std::ceil(p * static_cast<double>(v.size()))) - 1;
  return v[std::min(i, v.size() - 1)];
}

void finish(RunReport& rep, const DynamicApasp& d) {
  rep.real_updates = d.real_updates();
  rep.total_dummies = d.total_dummies();
  rep.skipped_dummies = d.skipped_dummies();
  rep.epochs = d.epoch();
  for (const auto& l : rep.lines) {
    rep.max_touched = std::max(rep.max_touched, l.stats.touched());
    rep.max_triples = std::max(rep.max_triples, l.triples);
  }
  rep.final_triples = d.tuples().p_size() + d.tuples().s_size();
  rep.max_through_vertex = d.tuples().bulk_bound_report().max_through_vertex;
  auto r = oracle::static_apasp(d.graph());
  rep.nu_star = oracle::nu_star(d.graph(), r);
  rep.m_star = oracle::m_star(d.graph(), r);
}

}  // namespace

void RunReport::write(std::ostream& out, bool with_lines, bool timing) const {
  out << "apasp-report " << kFormatVersion << '\n';
  if (with_lines) {
    for (const auto& l : lines) {
      out << "U " << l.step << ' ' << l.v << ' ' << (l.kind == RecordKind::kReal ? "real" : "dummy")
          << ' ' << (l.kind == RecordKind::kReal ? to_string(l.update_kind) : "-") << ' '
          << (l.skipped ? "skipped" : "done") << ' ' << l.stats.cleanup.examined << ' '
          << l.stats.cleanup.removed + l.stats.fixup.removed << ' '
          << l.stats.cleanup.added + l.stats.fixup.added << ' '
          << l.stats.cleanup.heap_ops + l.stats.fixup.heap_ops << ' ' << l.stats.touched() << ' '
          << l.triples << '\n';
    }
  }
  out << "A updates " << lines.size() << '\n';
  out << "A build_updates " << build_lines << '\n';
  out << "A real_updates " << real_updates << '\n';
  out << "A total_dummies " << total_dummies << '\n';
  out << "A skipped_dummies " << skipped_dummies << '\n';
  out << "A epochs " << epochs << '\n';
  out << "A max_touched " << max_touched << '\n';
  out << "A max_triples " << max_triples << '\n';
  out << "A final_triples " << final_triples << '\n';
  out << "A max_triples_through_vertex " << max_through_vertex << '\n';
  out << "A nu_star " << nu_star << '\n';
  out << "A m_star " << m_star << '\n';
  if (timing) {
    std::vector<double> secs;
    for (const auto& l : lines) secs.push_back(l.seconds);
    double mean = secs.empty() ? 0 : wall_seconds / static_cast<double>(secs.size());
    out << std::fixed << std::setprecision(6);
    out << "T wall_seconds " << wall_seconds << '\n';
    out << "T mean_update_seconds " << mean << '\n';
    out << "T p50_update_seconds " << percentile(secs, 0.5) << '\n';
    out << "T p90_update_seconds " << percentile(secs, 0.9) << '\n';
    out << "T p99_update_seconds " << percentile(secs, 0.99) << '\n';
    out << "T max_update_seconds " << percentile(secs, 1.0) << '\n';
    out << std::defaultfloat;
  }
}

RunReport replay(const DynGraph& g, const std::vector<TraceStep>& trace,
                 const std::function<void(const DynamicApasp&)>& at_end) {
  RunReport rep;
  const auto t0 = Clock::now();
  auto mark = t0;
  DynamicApasp d(DynGraph(g.capacity(), false));
  d.set_options({[&](const UpdateRecord& r) {
                   const std::size_t triples = d.tuples().p_size() + d.tuples().s_size();
                   rep.lines.push_back(to_line(r, triples, since(mark)));
                   mark = Clock::now();
                 },
                 false});
  for (const auto& up : build_updates(g)) d.apply(up);
  rep.build_lines = rep.lines.size();
  for (const auto& st : trace) d.apply(st.up);
  rep.wall_seconds = since(t0);
  finish(rep, d);
  if (at_end) at_end(d);
  return rep;
}

VerifyResult verify_workload(const DynGraph& g, const std::vector<TraceStep>& trace,
                             const WeightScale& scale, const VerifyOptions& opt,
                             std::ostream* err) {
  if (opt.every == 0) throw Error("--every must be at least 1");
  VerifyResult res;
  const std::size_t n = g.capacity();
  const bool small = n <= opt.census_max_n;
  const double lg = log2n(n);
  DynamicApasp* dp = nullptr;
  std::uint64_t trace_step = 0;

  auto fail = [&](const std::string& check, Vid v, check::Failures f) {
    if (!res.ok) return;
    res.ok = false;
    res.failed_check = check;
    res.failed_step = trace_step;
    res.failed_update = res.updates;
    res.failed_vertex = v;
    res.failures = std::move(f);
  };

  auto checkpoint = [&](const UpdateRecord& rec) {
    const DynamicApasp& d = *dp;
    const DynGraph& cur = d.graph();
    const TupleSystem& ts = d.tuples();
    ++res.checkpoints;
    const auto r = oracle::static_apasp(cur);
    res.max_m_star = std::max(res.max_m_star, oracle::m_star(cur, r));
    res.max_nu_star = std::max(res.max_nu_star, oracle::nu_star(cur, r));
    const double bulk = static_cast<double>(res.max_m_star * res.max_nu_star) * lg;
    const double triples = static_cast<double>(ts.p_size() + ts.s_size());
    if (triples > 0) res.max_bulk_ratio = std::max(res.max_bulk_ratio, bulk > 0 ? triples / bulk : INFINITY);
    const double nu = static_cast<double>(res.max_nu_star);
    const double cl = nu * nu * lg * lg;
    const double examined = static_cast<double>(rec.stats.cleanup.examined);
    if (examined > 0) res.max_cleanup_ratio = std::max(res.max_cleanup_ratio, cl > 0 ? examined / cl : INFINITY);

    ++res.oracle_checks;
    if (auto f = check::oracle_equivalence(cur, ts, r, opt.bc); !f.empty()) {
      return fail("oracle", rec.v, std::move(f));
    }
    if (!rec.skipped) {
      ++res.updated_vertex_checks;
      if (auto f = check::updated_vertex(cur, ts, r, rec.v, rec.stats.update_num); !f.empty()) {
        return fail("updated-vertex", rec.v, std::move(f));
      }
      if (rec.stats.fixup_decreases != 0 || rec.stats.heap_order_violations != 0) {
        return fail("engine-counters", rec.v,
                    {"fixup decreases " + std::to_string(rec.stats.fixup_decreases) +
                     ", heap order violations " +
                     std::to_string(rec.stats.heap_order_violations)});
      }
    }
    ++res.constituent_checks;
    if (auto f = check::constituents(cur, ts); !f.empty()) {
      return fail("constituents", rec.v, std::move(f));
    }
    if (small) {
      ++res.census_checks;
      if (auto f = check::census(cur, ts, r); !f.empty()) return fail("census", rec.v, std::move(f));
      ++res.structure_checks;
      if (auto f = check::structure(cur, ts); !f.empty()) {
        return fail("structure", rec.v, std::move(f));
      }
    }
  };

  SchedulerOptions so;
  so.keep_graphs = small;
  bool injected = false;
  so.on_update = [&](const UpdateRecord& rec) {
    if (!res.ok) return;
    ++res.updates;
    if (res.updates % opt.every != 0) return;
    if (opt.inject_fault && !injected && res.updates >= *opt.inject_fault) {
      // bump the count of the first shortest triple found, just before the
      // checks, so a later update cannot repair it first
      TupleSystem& ts = dp->mutable_tuples();
      for (Vid x = 0; x < ts.n() && !injected; ++x) {
        for (Vid y = 0; y < ts.n() && !injected; ++y) {
          if (ts.s(x, y).empty()) continue;
          const auto& e = ts.s(x, y).front();
          ts.find_s(x, y, e.a, e.b, e.wt)->count += Count(1);
          injected = true;
        }
      }
    }
    checkpoint(rec);
  };

  // The epoch build goes through the same checks as the trace.
  DynamicApasp d(DynGraph(n, false), so);
  dp = &d;
  auto step_checks = [&]() {
    if (!res.ok) return;
    ++res.recency_checks;
    if (auto f = check::recency(d.graph(), d.history()); !f.empty()) {
      return fail("recency", 0, std::move(f));
    }
    if (small) {
      ++res.historical_checks;
      if (auto f = check::historical(d); !f.empty()) return fail("historical", 0, std::move(f));
    }
  };
  for (const auto& up : build_updates(g)) {
    if (!res.ok) break;
    d.apply(up);
    step_checks();
  }

  for (const auto& st : trace) {
    if (!res.ok) break;
    trace_step = st.step;
    d.apply(st.up);
    ++res.steps;
    step_checks();
  }

  if (!res.ok) {
    if (!opt.dump_dir.empty()) {
      std::filesystem::create_directories(opt.dump_dir);
      std::ofstream eng(std::filesystem::path(opt.dump_dir) / "engine.txt");
      d.tuples().dump(eng, scale);
      std::ofstream orc(std::filesystem::path(opt.dump_dir) / "oracle.txt");
      const auto r = oracle::static_apasp(d.graph());
      for (const auto& c : oracle::census_tuples(d.graph(), r)) {
        orc << "T " << c.x << ' ' << c.a << ' ' << c.b << ' ' << c.y << ' ' << scale.format(c.wt)
            << ' ' << c.count << ' ' << (c.shortest ? "ST" : "LST") << '\n';
      }
      std::ofstream gr(std::filesystem::path(opt.dump_dir) / "graph.txt");
      write_graph(gr, d.graph(), scale);
    } else if (err && n <= opt.census_max_n) {
      *err << "engine state:\n";
      d.tuples().dump(*err, scale);
      *err << "graph:\n";
      write_graph(*err, d.graph(), scale);
    }
    if (!opt.repro_out.empty()) {
      std::ofstream out(opt.repro_out);
      std::vector<TraceStep> prefix(trace.begin(),
                                    trace.begin() + static_cast<std::ptrdiff_t>(res.failed_step));
      write_trace(out, prefix, scale);
    }
  }
  return res;
}

int cmd_run(const RunArgs& args, std::ostream& out, std::ostream& err) {
  try {
    WeightScale scale(args.scale);
    DynGraph g = load_graph(args.graph, scale, args.format_version);
    auto trace = args.trace.empty() ? std::vector<TraceStep>{}
                                    : load_trace(args.trace, scale, args.format_version);
    std::ostringstream queries;
    RunReport rep = replay(g, trace, [&](const DynamicApasp& d) {
      Queries q(d.graph(), d.tuples());
      const auto live = d.graph().live_vertices();
      if (args.distances) {
        for (Vid x : live) {
          for (Vid y : live) {
            if (x != y) queries << "d " << x << ' ' << y << ' ' << scale.format(q.distance(x, y)) << '\n';
          }
        }
        for (Vid x : live) {
          for (Vid y : live) {
            if (x != y) queries << "s " << x << ' ' << y << ' ' << q.sigma(x, y) << '\n';
          }
        }
      }
      if (args.bc) {
        const auto bc = q.bc_all();
        for (Vid v : live) {
          queries << "bc " << v << ' ' << boost::multiprecision::numerator(bc[v]) << '/'
                  << boost::multiprecision::denominator(bc[v]) << '\n';
        }
      }
    });
    rep.write(out, args.lines, args.timing);
    out << queries.str();
    return kExitPass;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int cmd_verify(const FileArgs& args, const VerifyOptions& opt, std::ostream& out,
               std::ostream& err) {
  WeightScale scale(1000);
  DynGraph g;
  std::vector<TraceStep> trace;
  try {
    scale = WeightScale(args.scale);
    g = load_graph(args.graph, scale, args.format_version);
    if (!args.trace.empty()) trace = load_trace(args.trace, scale, args.format_version);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  VerifyResult r;
  try {
    r = verify_workload(g, trace, scale, opt, &err);
  } catch (const GraphError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    // an internal consistency error is a divergence, not a usage problem
    out << "verify: FAIL internal error: " << e.what() << '\n';
    return kExitDivergence;
  }
  out << std::setprecision(4);
  if (r.ok) {
    out << "verify: pass steps=" << r.steps << " updates=" << r.updates
        << " checkpoints=" << r.checkpoints << '\n';
  } else {
    out << "verify: FAIL at step " << r.failed_step << " update " << r.failed_update << " vertex "
        << r.failed_vertex << " check " << r.failed_check << '\n';
    for (const auto& f : r.failures) out << "  " << f << '\n';
    out << "repro: first " << r.failed_step << " trace steps"
        << (opt.repro_out.empty() ? "" : " written to " + opt.repro_out) << '\n';
  }
  out << "checks oracle=" << r.oracle_checks << " updated_vertex=" << r.updated_vertex_checks
      << " constituents=" << r.constituent_checks << " census=" << r.census_checks
      << " structure=" << r.structure_checks << " recency=" << r.recency_checks
      << " historical=" << r.historical_checks << '\n';
  out << "ratio bulk=" << r.max_bulk_ratio << " cleanup=" << r.max_cleanup_ratio
      << " m_star=" << r.max_m_star << " nu_star=" << r.max_nu_star << '\n';
  return r.ok ? kExitPass : kExitDivergence;
}

int cmd_gen(const WorkloadSpec& spec, std::int64_t scale_den, const std::string& graph_out,
            const std::string& trace_out, std::ostream& err) {
  try {
    WeightScale scale(scale_den);
    Workload w = generate(spec, scale);
    std::ofstream g(graph_out);
    if (!g) throw Error("cannot write '" + graph_out + "'");
    write_graph(g, w.graph, scale);
    if (!trace_out.empty()) {
      std::ofstream t(trace_out);
      if (!t) throw Error("cannot write '" + trace_out + "'");
      write_trace(t, w.trace, scale);
    }
    return kExitPass;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

BenchSummary bench(const BenchArgs& args) {
  WeightScale scale(args.scale);
  Workload w = generate(args.spec, scale);
  BenchSummary s;
  s.report = replay(w.graph, w.trace);
  s.build_steps = w.graph.live_count();
  // per trace step: the real update and its dummies
  for (std::size_t i = s.report.build_lines; i < s.report.lines.size(); ++i) {
    const auto& l = s.report.lines[i];
    if (l.kind == RecordKind::kReal) s.touched_per_step.push_back(0);
    s.touched_per_step.back() += l.stats.touched();
  }
  const std::size_t q = s.touched_per_step.size() / 4;
  if (q > 0) {
    double first = 0, last = 0;
    for (std::size_t i = 0; i < q; ++i) {
      first += static_cast<double>(s.touched_per_step[i]);
      last += static_cast<double>(s.touched_per_step[s.touched_per_step.size() - q + i]);
    }
    s.first_quarter_mean = first / static_cast<double>(q);
    s.last_quarter_mean = last / static_cast<double>(q);
  }
  return s;
}

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  BenchSummary s;
  try {
    s = bench(args);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  s.report.write(out, args.lines, args.timing);
  std::vector<double> touched(s.touched_per_step.begin(), s.touched_per_step.end());
  out << "B build_steps " << s.build_steps << '\n';
  out << "B trace_steps " << touched.size() << '\n';
  out << std::fixed << std::setprecision(1);
  out << "B touched_p50 " << percentile(touched, 0.5) << '\n';
  out << "B touched_p90 " << percentile(touched, 0.9) << '\n';
  out << "B touched_p99 " << percentile(touched, 0.99) << '\n';
  out << "B touched_max " << percentile(touched, 1.0) << '\n';
  out << "B touched_mean_first_quarter " << s.first_quarter_mean << '\n';
  out << "B touched_mean_last_quarter " << s.last_quarter_mean << '\n';
  out << std::defaultfloat;
  return kExitPass;
}

}  // namespace apasp
