// Copyright (c) apasp contributors.
// SPDX-License-Identifier: Apache-2.0

// Static reference computations used to check the dynamic engine. Nothing
// here reads tuple-system state; only DynGraph and Weight are shared.

#pragma once

#include <cstddef>
#include <vector>

#include "apasp/count.hpp"
#include "apasp/graph.hpp"

namespace apasp::oracle {

// All-pairs distances and shortest-path counts. sigma(x, x) == 1 for live x;
// sigma is 0 for unreachable pairs and for dead endpoints.
struct Apsp {
  std::size_t n = 0;
  std::vector<Distance> dist;
  std::vector<BigInt> sigma;

  const Distance& d(Vid x, Vid y) const { return dist[x * n + y]; }
  const BigInt& s(Vid x, Vid y) const { return sigma[x * n + y]; }
};

// Dijkstra with path counting from every live source.
Apsp static_apasp(const DynGraph& g);

// Exact betweenness by direct summation over (s, t) pairs:
// BC(v) = sum over s != v != t, s != t of sigma(s,v) sigma(v,t) / sigma(s,t)
// when v lies on a shortest s-t path. Dead vertices get 0.
std::vector<Rational> static_bc(const DynGraph& g, const Apsp& r);

// A locally shortest tuple (xa, by): edge x->a, a shortest a-b path, edge
// b->y. A single edge appears as (xa, xa), i.e. b == x and y == a.
struct CensusTuple {
  Vid x = 0, a = 0, b = 0, y = 0;
  Weight wt;
  BigInt count;
  bool shortest = false;
};

// Every locally shortest tuple of g, with shortest == true for those that are
// also shortest. Sorted by (x, y, wt, a, b).
std::vector<CensusTuple> census_tuples(const DynGraph& g, const Apsp& r);

// Number of edges that lie on at least one shortest path.
std::size_t m_star(const DynGraph& g, const Apsp& r);

// Max over vertices v of the number of edges on shortest paths that contain
// v (as an endpoint or an interior vertex).
std::size_t nu_star(const DynGraph& g, const Apsp& r);

// Copy of g with the given vertices (and their edges) removed.
DynGraph without_vertices(const DynGraph& g, const std::vector<Vid>& removed);

}  // namespace apasp::oracle
