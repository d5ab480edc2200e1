// Copyright (c) apasp contributors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "apasp/invariants.hpp"
#include "apasp/oracle.hpp"
#include "apasp/scheduler.hpp"

namespace apasp {
namespace {

using Steps = std::vector<std::uint64_t>;

TEST(SetBit, LeastSignificantOne) {
  EXPECT_EQ(set_bit(12), 2u);
  EXPECT_EQ(set_bit(1), 0u);
  EXPECT_EQ(set_bit(8), 3u);
  EXPECT_THROW(set_bit(0), StepError);
}

TEST(PriorTimes, ClearsBitsBelowEachSetBit) {
  EXPECT_EQ(prior_times(12), (Steps{8, 12}));
  EXPECT_EQ(prior_times(7), (Steps{4, 6, 7}));
  EXPECT_EQ(prior_times(1), (Steps{1}));
  EXPECT_THROW(prior_times(0), StepError);
}

TEST(History, DummyStepsMostRecentFirst) {
  History h(4);
  for (std::uint64_t t = 1; t <= 4; ++t) {
    UpdateRecord r;
    r.step = t;
    r.v = static_cast<Vid>(t - 1);
    h.record(r);
  }
  EXPECT_EQ(h.dummy_steps(4), (Steps{3, 2, 1}));
  EXPECT_TRUE(h.dummy_steps(3).empty());
  EXPECT_EQ(h.dummy_steps(2), (Steps{1}));
}

// Replays the step arithmetic alone: a real update at each step followed by
// dummies on the vertices of the last 2^set_bit(t) - 1 steps.
TEST(History, RecencyHoldsForEveryStepUpTo4096) {
  const std::size_t n = 2048;
  History h(n);
  std::mt19937_64 rng(7);
  std::vector<Vid> touched;
  std::uint64_t dummies = 0, expected = 0;
  for (std::uint64_t t = 1; t <= 4096; ++t) {
    UpdateRecord real;
    real.step = t;
    real.v = static_cast<Vid>(rng() % n);
    h.record(real);
    touched.push_back(real.v);
    for (std::uint64_t src : h.dummy_steps(t)) {
      UpdateRecord d;
      d.step = t;
      d.kind = RecordKind::kDummy;
      d.v = h.real_vertex(src);
      d.source_step = src;
      h.record(d);
      ++dummies;
    }
    expected += (std::uint64_t{1} << set_bit(t)) - 1;
    const Steps pt = prior_times(t);
    for (Vid v : touched) {
      auto last = h.last_update(v);
      ASSERT_TRUE(last.has_value());
      ASSERT_TRUE(std::binary_search(pt.begin(), pt.end(), *last))
          << "t=" << t << " v=" << v << " last=" << *last;
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
  }
  EXPECT_EQ(dummies, expected);
}

TEST(DynamicApasp, EightStepEpochHasTwelveDummies) {
  // four build inserts, then four reweights
  DynGraph g(4);
  g.add_edge(0, 1, Weight(1));
  g.add_edge(1, 2, Weight(1));
  g.add_edge(2, 3, Weight(1));
  g.add_edge(3, 0, Weight(1));
  DynamicApasp d(g);
  EXPECT_EQ(d.step(), 4u);
  EXPECT_EQ(d.total_dummies(), 4u);  // 0 + 1 + 0 + 3
  for (Vid v = 0; v < 4; ++v) {
    VertexUpdate up;
    up.v = v;
    up.out.push_back({(v + 1) % 4, Weight(2 + v)});
    auto recs = d.apply(up);
    EXPECT_EQ(recs.size(), std::size_t{1} << set_bit(d.step()));
  }
  EXPECT_EQ(d.step(), 8u);
  EXPECT_EQ(d.total_dummies(), 12u);
  EXPECT_EQ(d.epoch_limit(), 8u);

  // t = 8 replays steps 7, 6, ..., 1 in that order
  const auto& recs = d.history().records();
  std::vector<std::uint64_t> sources;
  for (const auto& r : recs) {
    if (r.step == 8 && r.kind == RecordKind::kDummy) sources.push_back(r.source_step);
  }
  EXPECT_EQ(sources, (Steps{7, 6, 5, 4, 3, 2, 1}));

  // the next update starts a new epoch
  VertexUpdate up;
  up.v = 0;
  up.out.push_back({1, Weight(1)});
  d.apply(up);
  EXPECT_EQ(d.epoch(), 2u);
  EXPECT_EQ(d.step(), 5u);
  auto r = oracle::static_apasp(d.graph());
  EXPECT_TRUE(check::oracle_equivalence(d.graph(), d.tuples(), r, true).empty());
}

TEST(DynamicApasp, DummiesOnDeadVerticesAreSkipped) {
  DynGraph g(3);
  g.add_edge(0, 1, Weight(1));
  g.add_edge(1, 2, Weight(1));
  DynamicApasp d(g);  // steps 1..3
  VertexUpdate del;
  del.v = 2;
  del.kind = UpdateKind::kDelete;
  auto recs = d.apply(del);  // step 4 replays 3 (vertex 2, now dead), 2, 1
  ASSERT_EQ(recs.size(), 4u);
  EXPECT_TRUE(recs[1].skipped);
  EXPECT_EQ(recs[1].v, 2u);
  EXPECT_FALSE(recs[2].skipped);
  EXPECT_EQ(d.skipped_dummies(), 1u);
  EXPECT_TRUE(check::recency(d.graph(), d.history()).empty());
}

TEST(DynamicApasp, ResetRebuildsToTheSameAnswers) {
  DynGraph g(5);
  for (Vid v = 0; v < 5; ++v) g.add_edge(v, (v + 1) % 5, Weight(1 + v));
  g.add_edge(0, 2, Weight(3));
  DynamicApasp d(g);
  VertexUpdate up;
  up.v = 2;
  up.out.push_back({3, Weight(9)});
  d.apply(up);
  auto before = oracle::static_apasp(d.graph());
  d.epoch_reset();
  EXPECT_EQ(d.step(), 5u);
  EXPECT_TRUE(check::oracle_equivalence(d.graph(), d.tuples(), before, true).empty());
}

TEST(DynamicApasp, OutOfOrderStepIsRejected) {
  DynGraph g(2);
  DynamicApasp d(g);
  VertexUpdate up;
  up.v = 0;
  EXPECT_THROW(d.fully_dynamic(up, 5), StepError);
}

TEST(DynamicApasp, EmptyGraphResetsToEmptyState) {
  DynGraph g(3, false);
  DynamicApasp d(g);
  EXPECT_EQ(d.step(), 0u);
  EXPECT_EQ(d.tuples().p_size() + d.tuples().s_size(), 0u);
}

}  // namespace
}  // namespace apasp
