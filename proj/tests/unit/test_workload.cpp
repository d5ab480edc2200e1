// Copyright (c) apasp contributors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <sstream>

#include "apasp/workload.hpp"

namespace apasp {
namespace {

const WeightScale kScale;

std::string text(const Workload& w) {
  std::ostringstream s;
  write_graph(s, w.graph, kScale);
  write_trace(s, w.trace, kScale);
  return s.str();
}

TEST(Workload, PathOfThreeHasTwoEdges) {
  WorkloadSpec s;
  s.generator = "path";
  s.n = 3;
  Workload w = generate(s, kScale);
  EXPECT_EQ(w.graph.edge_count(), 2u);
  EXPECT_TRUE(w.graph.weight(0, 1).has_value());
  EXPECT_TRUE(w.graph.weight(1, 2).has_value());
}

TEST(Workload, PlantedPartitionBuildsCliquesAndBridges) {
  WorkloadSpec s;
  s.generator = "planted-partition";
  s.n = 10;
  s.k = 2;
  s.delta = 10;
  s.bridges = 1;
  Workload w = generate(s, kScale);
  auto cluster = [](Vid v) { return v / 5; };
  std::size_t intra = 0, inter = 0;
  for (const Edge& e : w.graph.edges()) {
    if (cluster(e.u) == cluster(e.v)) {
      ++intra;
      EXPECT_GT(e.w.raw(), 10 * kScale.denominator());
      EXPECT_LE(e.w.raw(), 20 * kScale.denominator());
    } else {
      ++inter;
    }
  }
  EXPECT_EQ(intra, 2u * 5 * 4);  // two complete 5-cliques, both directions
  EXPECT_EQ(inter, 2u);          // one bridge per ordered cluster pair
}

TEST(Workload, DiamondMeshShape) {
  WorkloadSpec s;
  s.generator = "diamond-mesh";
  s.n = 10;
  EXPECT_EQ(generate(s, kScale).graph.edge_count(), 12u);
  s.n = 9;
  EXPECT_THROW(generate(s, kScale), Error);
}

TEST(Workload, InfeasibleSpecsAreRejected) {
  WorkloadSpec s;
  s.generator = "planted-partition";
  s.n = 3;
  s.k = 4;
  EXPECT_THROW(generate(s, kScale), Error);
  s.generator = "random-gnm";
  s.n = 4;
  s.m = 13;
  EXPECT_THROW(generate(s, kScale), Error);
  s.generator = "grid";
  EXPECT_THROW(generate(s, kScale), Error);
}

TEST(Workload, SameSeedSameBytes) {
  WorkloadSpec s;
  s.n = 12;
  s.m = 30;
  s.steps = 50;
  s.seed = 42;
  EXPECT_EQ(text(generate(s, kScale)), text(generate(s, kScale)));
  WorkloadSpec other = s;
  other.seed = 43;
  EXPECT_NE(text(generate(s, kScale)), text(generate(other, kScale)));
}

TEST(Workload, TraceStepsApplyCleanlyAndMixKinds) {
  WorkloadSpec s;
  s.n = 15;
  s.m = 40;
  s.steps = 200;
  s.seed = 3;
  Workload w = generate(s, kScale);
  ASSERT_EQ(w.trace.size(), 200u);
  DynGraph g = w.graph;
  std::size_t kinds[3] = {0, 0, 0};
  for (const auto& st : w.trace) {
    ASSERT_NO_THROW(g.validate(st.up)) << "step " << st.step;
    g.apply(st.up);
    ++kinds[static_cast<int>(st.up.kind)];
    EXPECT_LE(g.edge_count(), 4 * s.n);
  }
  EXPECT_GT(kinds[0], 0u);
  EXPECT_GT(kinds[1], 0u);
  EXPECT_GT(kinds[2], 0u);
}

}  // namespace
}  // namespace apasp
