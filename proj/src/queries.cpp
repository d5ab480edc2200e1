// Copyright (c) apasp contributors.
// SPDX-License-Identifier: Apache-2.0

#include "apasp/queries.hpp"

#include <algorithm>
#include <numeric>

namespace apasp {

void Queries::check_live(Vid v) const {
  if (!g_.alive(v)) throw GraphError("query on dead vertex " + std::to_string(v));
}

Distance Queries::raw_distance(Vid x, Vid y) const {
  if (x == y) return Weight(0);
  auto m = ts_.s_min_weight(x, y);
  return m ? Distance(Weight(*m)) : Distance::infinite();
}

Distance Queries::distance(Vid x, Vid y) const {
  check_live(x);
  check_live(y);
  return raw_distance(x, y);
}

BigInt Queries::sigma(Vid x, Vid y) const {
  check_live(x);
  check_live(y);
  if (x == y) return 1;
  const auto& s = ts_.s(x, y);
  BigInt sum = 0;
  for (const auto& e : s) {
    if (e.wt != s.front().wt) break;
    sum += e.count.to_big();
  }
  return sum;
}

std::vector<Triple> Queries::shortest_triples(Vid x, Vid y) const {
  check_live(x);
  check_live(y);
  std::vector<Triple> out;
  const auto& s = ts_.s(x, y);
  for (const auto& e : s) {
    if (e.wt != s.front().wt) break;
    out.push_back(Triple{{x, e.a, e.b, y}, Weight(e.wt), e.count.to_big(), false, e.update_num, 0});
  }
  return out;
}

PairTable Queries::table() const {
  const std::size_t n = g_.capacity();
  PairTable t;
  t.n = n;
  t.dist.assign(n * n, Distance::infinite());
  t.sigma.assign(n * n, BigInt(0));
  for (Vid x = 0; x < n; ++x) {
    if (!g_.alive(x)) continue;
    for (Vid y = 0; y < n; ++y) {
      if (!g_.alive(y)) continue;
      t.dist[x * n + y] = raw_distance(x, y);
      t.sigma[x * n + y] = sigma(x, y);
    }
  }
  return t;
}

InDag Queries::build_in_dag(Vid x) const {
  check_live(x);
  InDag dag;
  dag.root = x;
  std::vector<char> seen(g_.capacity(), 0);
  std::vector<Vid> stack{x};
  seen[x] = 1;
  while (!stack.empty()) {
    Vid v = stack.back();
    stack.pop_back();
    const std::int64_t dv = raw_distance(v, x).value().raw();
    for (auto [u, w] : g_.in(v)) {
      Distance du = raw_distance(u, x);
      if (!du.finite() || du.value().raw() != w.raw() + dv) continue;
      dag.edges.emplace_back(u, v);
      if (!seen[u]) {
        seen[u] = 1;
        stack.push_back(u);
      }
    }
  }
  std::sort(dag.edges.begin(), dag.edges.end());
  return dag;
}

std::vector<std::vector<Vid>> Queries::enumerate_paths(Vid x, Vid y, std::size_t limit) const {
  check_live(x);
  check_live(y);
  if (limit == 0) throw Error("enumerate_paths limit must be at least 1");
  std::vector<std::vector<Vid>> out;
  if (x == y) {
    out.push_back({x});
    return out;
  }
  if (!raw_distance(x, y).finite()) return out;
  // Depth-first over next hops that stay on a shortest path; every branch
  // reaches y, so the work is proportional to the output.
  std::vector<Vid> path{x};
  auto rec = [&](auto&& self, Vid u) -> void {
    if (out.size() >= limit) return;
    if (u == y) {
      out.push_back(path);
      return;
    }
    const std::int64_t du = raw_distance(u, y).value().raw();
    for (auto [a, w] : g_.out(u)) {
      Distance da = raw_distance(a, y);
      if (!da.finite() || da.value().raw() + w.raw() != du) continue;
      path.push_back(a);
      self(self, a);
      path.pop_back();
      if (out.size() >= limit) return;
    }
  };
  rec(rec, x);
  return out;
}

std::vector<Rational> Queries::bc_all() const {
  const std::size_t n = g_.capacity();
  const PairTable tab = table();
  std::vector<Rational> bc(n, Rational(0));
  std::vector<Rational> delta(n);
  std::vector<Vid> order;
  for (Vid t = 0; t < n; ++t) {
    if (!g_.alive(t)) continue;
    const InDag dag = build_in_dag(t);
    order.clear();
    for (Vid v = 0; v < n; ++v) {
      if (v != t && tab.d(v, t).finite()) order.push_back(v);
    }
    // farthest first, so every upstream dependency is final when used
    std::sort(order.begin(), order.end(), [&](Vid p, Vid q) {
      if (tab.d(p, t) != tab.d(q, t)) return tab.d(q, t) < tab.d(p, t);
      return p < q;
    });
    for (Vid v : order) delta[v] = 0;
    // in-dag edges grouped by head
    std::vector<std::vector<Vid>> preds(n);
    for (auto [u, v] : dag.edges) preds[v].push_back(u);
    for (Vid v : order) {
      Rational acc = 0;
      for (Vid u : preds[v]) acc += Rational(tab.s(v, t), tab.s(u, t)) * (1 + delta[u]);
      delta[v] = acc;
      bc[v] += acc;
    }
  }
  return bc;
}

}  // namespace apasp
