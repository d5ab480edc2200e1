// Copyright (c) apasp contributors.
// SPDX-License-Identifier: Apache-2.0

// Read-only queries over a quiescent tuple system.

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "apasp/count.hpp"
#include "apasp/graph.hpp"
#include "apasp/tuple_system.hpp"

namespace apasp {

struct InDag {
  Vid root = 0;
  std::vector<std::pair<Vid, Vid>> edges;  // sorted
};

// Distances and shortest-path counts for every pair, read off P*.
struct PairTable {
  std::size_t n = 0;
  std::vector<Distance> dist;
  std::vector<BigInt> sigma;

  const Distance& d(Vid x, Vid y) const { return dist[x * n + y]; }
  const BigInt& s(Vid x, Vid y) const { return sigma[x * n + y]; }
};

class Queries {
 public:
  Queries(const DynGraph& g, const TupleSystem& ts) : g_(g), ts_(ts) {}

  // Min weight in P*(x, y); 0 for x == y. Throws GraphError on dead vertices.
  Distance distance(Vid x, Vid y) const;
  // Sum of counts of min-weight P*(x, y) triples; 1 for x == y.
  BigInt sigma(Vid x, Vid y) const;
  // The min-weight P*(x, y) triples.
  std::vector<Triple> shortest_triples(Vid x, Vid y) const;

  PairTable table() const;

  // Edges (u, v) with d(u, x) = w(u, v) + d(v, x).
  InDag build_in_dag(Vid x) const;
  // Up to `limit` distinct shortest x-y paths as vertex sequences.
  std::vector<std::vector<Vid>> enumerate_paths(Vid x, Vid y, std::size_t limit) const;
  // Exact betweenness of every vertex (0 for dead ones), accumulated per
  // target over its in-dag.
  std::vector<Rational> bc_all() const;

 private:
  void check_live(Vid v) const;
  Distance raw_distance(Vid x, Vid y) const;

  const DynGraph& g_;
  const TupleSystem& ts_;
};

}  // namespace apasp
