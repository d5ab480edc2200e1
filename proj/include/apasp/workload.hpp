// Copyright (c) apasp contributors.
// SPDX-License-Identifier: Apache-2.0

// Seeded workload generators. Weights are whole multiples of the scale unit.

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "apasp/graph.hpp"
#include "apasp/io.hpp"
#include "apasp/weight.hpp"

namespace apasp {

struct UpdateMix {
  double increase = 0.3;
  double decrease = 0.3;
  double insert = 0.2;
  double remove = 0.2;
};

struct WorkloadSpec {
  // random-gnm | planted-partition | path | diamond-mesh
  std::string generator = "random-gnm";
  std::size_t n = 10;
  std::size_t m = 20;             // random-gnm
  std::size_t k = 2;              // planted-partition clusters
  std::int64_t delta = 10;        // planted-partition: weights in (delta, 2 delta]
  std::size_t bridges = 1;        // planted-partition: edges per ordered cluster pair
  std::int64_t max_weight = 4;    // random-gnm: weights in [1, max_weight]
  std::size_t steps = 0;
  UpdateMix mix;
  std::size_t max_changes = 3;    // edge changes per reweight
  std::size_t max_degree = 3;     // out- and in-edges of an inserted vertex
  std::uint64_t seed = 1;
};

struct Workload {
  DynGraph graph;
  std::vector<TraceStep> trace;
};

// Throws Error if the parameters are infeasible.
DynGraph generate_graph(const WorkloadSpec& spec, const WeightScale& scale, std::mt19937_64& rng);
std::vector<TraceStep> generate_trace(DynGraph g, const WorkloadSpec& spec,
                                      const WeightScale& scale, std::mt19937_64& rng);
Workload generate(const WorkloadSpec& spec, const WeightScale& scale);

}  // namespace apasp
