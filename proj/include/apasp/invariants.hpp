// Copyright (c) apasp contributors.
// SPDX-License-Identifier: Apache-2.0

// Full-scan checks of a quiescent system against the oracle. Each returns a
// list of human-readable failures, empty on success.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "apasp/graph.hpp"
#include "apasp/oracle.hpp"
#include "apasp/scheduler.hpp"
#include "apasp/tuple_system.hpp"

namespace apasp::check {

using Failures = std::vector<std::string>;

// Distances and path counts of every live pair; exact betweenness when `bc`.
Failures oracle_equivalence(const DynGraph& g, const TupleSystem& ts, const oracle::Apsp& r,
                            bool bc);

// Min-weight P* triples equal the shortest-tuple census, and every locally
// shortest tuple is in P with its exact count.
Failures census(const DynGraph& g, const TupleSystem& ts, const oracle::Apsp& r);

// Every P triple has both constituents in P* at the matching weights.
Failures constituents(const DynGraph& g, const TupleSystem& ts);

// After an update of v stamped `update_num`: P* triples through v are
// shortest, and P triples through v are locally shortest unless v is an
// endpoint.
Failures updated_vertex(const DynGraph& g, const TupleSystem& ts, const oracle::Apsp& r, Vid v,
                        std::uint32_t update_num);

// Every live vertex was last updated at a step in prior_times(step).
Failures recency(const DynGraph& g, const History& h);

// Every P* triple is shortest in the graph of some t' in prior_times(t),
// restricted to vertices not updated in (t', t]. Needs keep_graphs.
Failures historical(const DynamicApasp& d);

// Storage consistency: endpoints alive, edges present, edge triples of
// count 1, derived P counts, cb flags, extension sets.
Failures structure(const DynGraph& g, const TupleSystem& ts);

}  // namespace apasp::check
