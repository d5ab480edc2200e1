// Copyright (c) apasp contributors.
// SPDX-License-Identifier: Apache-2.0

// Distances, path counts and betweenness on a fixed 6-vertex digraph through
// three updates. Expected values were computed with networkx
// (tests/oracle/freeze.py) and are compared against both the static oracle
// and the dynamic engine.

#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "apasp/io.hpp"
#include "apasp/oracle.hpp"
#include "apasp/queries.hpp"
#include "apasp/scheduler.hpp"

namespace apasp {
namespace {

constexpr const char* kGraph = R"(apasp-graph 1
n 6
e 0 1 1
e 0 2 1
e 1 3 1
e 2 3 1
e 3 4 2
e 1 4 3
e 4 5 1
e 2 5 4
e 5 0 2.5
)";

constexpr const char* kTrace = R"(apasp-trace 1
step 1 reweight 3 out 4 1 in 1 -
step 2 delete 2
step 3 insert 2 out 5 0.5 in 0 1
)";

struct Expected {
  std::vector<std::vector<std::string>> d;  // "-" for a dead row/column
  std::vector<std::vector<int>> sigma;
  std::vector<std::string> bc;
};

const std::vector<Expected>& expected() {
  static const std::vector<Expected> e = {
      {{{"0", "1", "1", "2", "4", "5"},
        {"6.5", "0", "7.5", "1", "3", "4"},
        {"6.5", "7.5", "0", "1", "3", "4"},
        {"5.5", "6.5", "6.5", "0", "2", "3"},
        {"3.5", "4.5", "4.5", "5.5", "0", "1"},
        {"2.5", "3.5", "3.5", "4.5", "6.5", "0"}},
       {{1, 1, 1, 2, 3, 4},
        {2, 1, 2, 1, 2, 2},
        {2, 2, 1, 1, 1, 2},
        {1, 1, 1, 1, 1, 1},
        {1, 1, 1, 2, 1, 1},
        {1, 1, 1, 2, 3, 1}},
       {"11", "10/3", "8/3", "19/3", "37/4", "11"}},
      {{{"0", "1", "1", "2", "3", "4"},
        {"6.5", "0", "7.5", "8.5", "3", "4"},
        {"5.5", "6.5", "0", "1", "2", "3"},
        {"4.5", "5.5", "5.5", "0", "1", "2"},
        {"3.5", "4.5", "4.5", "5.5", "0", "1"},
        {"2.5", "3.5", "3.5", "4.5", "5.5", "0"}},
       {{1, 1, 1, 1, 1, 1},
        {1, 1, 1, 1, 1, 1},
        {1, 1, 1, 1, 1, 1},
        {1, 1, 1, 1, 1, 1},
        {1, 1, 1, 1, 1, 1},
        {1, 1, 1, 1, 1, 1}},
       {"12", "0", "7", "7", "12", "12"}},
      {{{"0", "1", "-", "inf", "4", "5"},
        {"6.5", "0", "-", "inf", "3", "4"},
        {"-", "-", "-", "-", "-", "-"},
        {"4.5", "5.5", "-", "0", "1", "2"},
        {"3.5", "4.5", "-", "inf", "0", "1"},
        {"2.5", "3.5", "-", "inf", "6.5", "0"}},
       {{1, 1, 0, 0, 1, 1},
        {1, 1, 0, 0, 1, 1},
        {0, 0, 0, 0, 0, 0},
        {1, 1, 0, 1, 1, 1},
        {1, 1, 0, 0, 1, 1},
        {1, 1, 0, 0, 1, 1}},
       {"4", "3", "0", "0", "6", "5"}},
      {{{"0", "1", "1", "inf", "4", "1.5"},
        {"6.5", "0", "7.5", "inf", "3", "4"},
        {"3", "4", "0", "inf", "7", "0.5"},
        {"4.5", "5.5", "5.5", "0", "1", "2"},
        {"3.5", "4.5", "4.5", "inf", "0", "1"},
        {"2.5", "3.5", "3.5", "inf", "6.5", "0"}},
       {{1, 1, 1, 0, 1, 1},
        {1, 1, 1, 0, 1, 1},
        {1, 1, 1, 0, 1, 1},
        {1, 1, 1, 1, 1, 1},
        {1, 1, 1, 0, 1, 1},
        {1, 1, 1, 0, 1, 1}},
       {"10", "3", "1", "0", "7", "11"}},
  };
  return e;
}

std::string str(const Rational& r) {
  std::ostringstream s;
  s << r;
  return s.str();
}

void expect_matches(const DynGraph& g, const TupleSystem& ts, const Expected& e,
                    const std::string& where) {
  const WeightScale scale;
  const auto r = oracle::static_apasp(g);
  const auto bc_oracle = oracle::static_bc(g, r);
  Queries q(g, ts);
  const auto bc_engine = q.bc_all();
  for (Vid x = 0; x < 6; ++x) {
    EXPECT_EQ(str(bc_oracle[x]), e.bc[x]) << where << " oracle bc " << x;
    EXPECT_EQ(str(bc_engine[x]), e.bc[x]) << where << " engine bc " << x;
    for (Vid y = 0; y < 6; ++y) {
      const std::string& d = e.d[x][y];
      if (d == "-") {
        EXPECT_FALSE(g.alive(x) && g.alive(y)) << where;
        EXPECT_THROW(q.distance(x, y), GraphError);
        continue;
      }
      EXPECT_EQ(scale.format(r.d(x, y)), d) << where << " oracle d " << x << "," << y;
      EXPECT_EQ(scale.format(q.distance(x, y)), d) << where << " engine d " << x << "," << y;
      EXPECT_EQ(r.s(x, y), e.sigma[x][y]) << where << " oracle sigma " << x << "," << y;
      EXPECT_EQ(q.sigma(x, y), e.sigma[x][y]) << where << " engine sigma " << x << "," << y;
    }
  }
}

TEST(Frozen, SixVertexTraceMatchesReference) {
  const WeightScale scale;
  std::istringstream gin(kGraph), tin(kTrace);
  DynGraph g = parse_graph(gin, scale);
  auto trace = parse_trace(tin, scale);
  ASSERT_EQ(trace.size(), 3u);

  DynamicApasp d(g);
  expect_matches(d.graph(), d.tuples(), expected()[0], "initial");
  for (std::size_t i = 0; i < trace.size(); ++i) {
    d.apply(trace[i].up);
    expect_matches(d.graph(), d.tuples(), expected()[i + 1], "after step " + std::to_string(i + 1));
  }
}

TEST(Frozen, DiamondChainCountsDouble) {
  // sigma(0, 3k) = 2^k on k chained diamonds with unit weights
  const WeightScale scale;
  for (auto [k, sigma] : {std::pair{1, 2}, {3, 8}, {10, 1024}}) {
    DynGraph g(3 * k + 1);
    for (Vid s = 0; s + 3 <= static_cast<Vid>(3 * k); s += 3) {
      g.add_edge(s, s + 1, Weight(1000));
      g.add_edge(s, s + 2, Weight(1000));
      g.add_edge(s + 1, s + 3, Weight(1000));
      g.add_edge(s + 2, s + 3, Weight(1000));
    }
    DynamicApasp d(g);
    Queries q(d.graph(), d.tuples());
    EXPECT_EQ(q.sigma(0, 3 * k), sigma) << "k=" << k;
    EXPECT_EQ(scale.format(q.distance(0, 3 * k)), std::to_string(2 * k));
    EXPECT_EQ(q.enumerate_paths(0, 3 * k, 5000).size(), static_cast<std::size_t>(sigma));
  }
}

TEST(Frozen, LongDiamondChainSpillsToBigCounts) {
  // 70 diamonds: 2^70 paths, beyond 64 bits
  const std::size_t k = 70;
  DynGraph g(3 * k + 1);
  for (Vid s = 0; s + 3 <= 3 * k; s += 3) {
    g.add_edge(s, s + 1, Weight(1));
    g.add_edge(s, s + 2, Weight(1));
    g.add_edge(s + 1, s + 3, Weight(1));
    g.add_edge(s + 2, s + 3, Weight(1));
  }
  DynamicApasp d(g);
  Queries q(d.graph(), d.tuples());
  EXPECT_EQ(q.sigma(0, 3 * k), BigInt(1) << 70);
  EXPECT_EQ(oracle::static_apasp(g).s(0, 3 * k), BigInt(1) << 70);
}

}  // namespace
}  // namespace apasp
