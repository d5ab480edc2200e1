// Copyright (c) apasp contributors.
// SPDX-License-Identifier: Apache-2.0

// Random workloads replayed through the scheduler and compared against the
// static oracle after every vertex update.

#include <gtest/gtest.h>

#include "apasp/invariants.hpp"
#include "apasp/oracle.hpp"
#include "apasp/scheduler.hpp"
#include "apasp/workload.hpp"

namespace apasp {
namespace {

std::string join(const check::Failures& f) {
  std::string s;
  for (const auto& l : f) s += "  " + l + "\n";
  return s;
}

struct Case {
  std::string generator;
  std::size_t n, m;
  std::uint64_t seed;
};

void run_case(const Case& c, std::size_t steps, bool every_update) {
  WeightScale scale;
  WorkloadSpec spec;
  spec.generator = c.generator;
  spec.n = c.n;
  spec.m = c.m;
  spec.steps = steps;
  spec.seed = c.seed;
  Workload w = generate(spec, scale);

  DynamicApasp d(w.graph, {nullptr, true});
  std::size_t checks = 0;
  auto full = [&](const std::string& where) {
    auto r = oracle::static_apasp(d.graph());
    auto f = check::oracle_equivalence(d.graph(), d.tuples(), r, true);
    ASSERT_TRUE(f.empty()) << where << " oracle\n" << join(f);
    f = check::census(d.graph(), d.tuples(), r);
    ASSERT_TRUE(f.empty()) << where << " census\n" << join(f);
    f = check::constituents(d.graph(), d.tuples());
    ASSERT_TRUE(f.empty()) << where << " constituents\n" << join(f);
    f = check::structure(d.graph(), d.tuples());
    ASSERT_TRUE(f.empty()) << where << " structure\n" << join(f);
    ++checks;
  };
  if (every_update) {
    d.set_options({[&](const UpdateRecord& rec) {
                     if (rec.skipped) return;
                     const std::string where = "step " + std::to_string(rec.step) + " vertex " +
                                               std::to_string(rec.v);
                     EXPECT_EQ(rec.stats.fixup_decreases, 0u) << where;
                     EXPECT_EQ(rec.stats.heap_order_violations, 0u) << where;
                     auto r = oracle::static_apasp(d.graph());
                     auto f = check::updated_vertex(d.graph(), d.tuples(), r, rec.v,
                                                    rec.stats.update_num);
                     EXPECT_TRUE(f.empty()) << where << " updated vertex\n" << join(f);
                     full(where);
                   },
                   true});
  }
  full("initial");
  for (const auto& st : w.trace) {
    d.apply(st.up);
    const std::string where = "after step " + std::to_string(st.step);
    full(where);
    if (::testing::Test::HasFailure()) return;
    auto f = check::recency(d.graph(), d.history());
    ASSERT_TRUE(f.empty()) << where << " recency\n" << join(f);
    f = check::historical(d);
    ASSERT_TRUE(f.empty()) << where << " historical\n" << join(f);
  }
  EXPECT_GT(checks, steps);
}

class Differential : public ::testing::TestWithParam<Case> {};

TEST_P(Differential, MatchesOracleAfterEveryUpdate) { run_case(GetParam(), 60, true); }

INSTANTIATE_TEST_SUITE_P(Random, Differential,
                         ::testing::Values(Case{"random-gnm", 5, 8, 1}, Case{"random-gnm", 6, 12, 2},
                                           Case{"random-gnm", 8, 20, 3},
                                           Case{"random-gnm", 10, 30, 4},
                                           Case{"random-gnm", 12, 40, 5},
                                           Case{"diamond-mesh", 7, 0, 6},
                                           Case{"path", 6, 0, 7}));

}  // namespace
}  // namespace apasp
