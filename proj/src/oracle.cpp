// Copyright (c) apasp contributors.
// SPDX-License-Identifier: Apache-2.0

#include "apasp/oracle.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <tuple>

namespace apasp::oracle {

Apsp static_apasp(const DynGraph& g) {
  const std::size_t n = g.capacity();
  Apsp r;
  r.n = n;
  r.dist.assign(n * n, Distance::infinite());
  r.sigma.assign(n * n, BigInt(0));

  using Item = std::pair<std::int64_t, Vid>;
  std::vector<std::int64_t> dist(n);
  std::vector<char> reached(n), done(n);
  for (Vid s = 0; s < n; ++s) {
    if (!g.alive(s)) continue;
    std::fill(reached.begin(), reached.end(), 0);
    std::fill(done.begin(), done.end(), 0);
    BigInt* sig = &r.sigma[s * n];
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[s] = 0;
    reached[s] = 1;
    sig[s] = 1;
    pq.push({0, s});
    while (!pq.empty()) {
      auto [du, u] = pq.top();
      pq.pop();
      if (done[u] || du != dist[u]) continue;
      done[u] = 1;
      for (auto [v, w] : g.out(u)) {
        std::int64_t nd = du + w.raw();
        if (!reached[v] || nd < dist[v]) {
          reached[v] = 1;
          dist[v] = nd;
          sig[v] = sig[u];
          pq.push({nd, v});
        } else if (nd == dist[v]) {
          sig[v] += sig[u];
        }
      }
    }
    for (Vid v = 0; v < n; ++v) {
      if (reached[v]) r.dist[s * n + v] = Weight(dist[v]);
    }
  }
  return r;
}

std::vector<Rational> static_bc(const DynGraph& g, const Apsp& r) {
  const std::size_t n = g.capacity();
  std::vector<Rational> bc(n, Rational(0));
  for (Vid s = 0; s < n; ++s) {
    for (Vid t = 0; t < n; ++t) {
      if (s == t || !r.d(s, t).finite()) continue;
      const std::int64_t dst = r.d(s, t).value().raw();
      for (Vid v = 0; v < n; ++v) {
        if (v == s || v == t) continue;
        const Distance& a = r.d(s, v);
        const Distance& b = r.d(v, t);
        if (!a.finite() || !b.finite()) continue;
        if (a.value().raw() + b.value().raw() != dst) continue;
        bc[v] += Rational(r.s(s, v) * r.s(v, t), r.s(s, t));
      }
    }
  }
  (void)g;
  return bc;
}

std::vector<CensusTuple> census_tuples(const DynGraph& g, const Apsp& r) {
  std::vector<CensusTuple> out;
  const std::vector<Edge> edges = g.edges();
  auto raw = [&](Vid p, Vid q) -> std::optional<std::int64_t> {
    if (p == q) return 0;
    const Distance& d = r.d(p, q);
    if (!d.finite()) return std::nullopt;
    return d.value().raw();
  };
  for (const Edge& e : edges) {
    CensusTuple t{e.u, e.v, e.u, e.v, e.w, BigInt(1), false};
    t.shortest = r.d(e.u, e.v) == Distance(e.w);
    out.push_back(t);
  }
  for (const Edge& first : edges) {
    const Vid x = first.u;
    const Vid a = first.v;
    for (const Edge& last : edges) {
      const Vid b = last.u;
      const Vid y = last.v;
      if (first == last || x == y) continue;
      auto dab = raw(a, b);
      auto dxb = raw(x, b);
      auto day = raw(a, y);
      if (!dab || !dxb || !day) continue;
      if (first.w.raw() + *dab != *dxb) continue;
      if (*dab + last.w.raw() != *day) continue;
      CensusTuple t;
      t.x = x;
      t.a = a;
      t.b = b;
      t.y = y;
      t.wt = Weight(first.w.raw() + *dab + last.w.raw());
      t.count = a == b ? BigInt(1) : r.s(a, b);
      t.shortest = r.d(x, y) == Distance(t.wt);
      out.push_back(std::move(t));
    }
  }
  std::sort(out.begin(), out.end(), [](const CensusTuple& p, const CensusTuple& q) {
    return std::tie(p.x, p.y, p.wt, p.a, p.b) < std::tie(q.x, q.y, q.wt, q.a, q.b);
  });
  return out;
}

std::size_t m_star(const DynGraph& g, const Apsp& r) {
  std::size_t m = 0;
  for (const Edge& e : g.edges()) {
    if (r.d(e.u, e.v) == Distance(e.w)) ++m;
  }
  return m;
}

std::size_t nu_star(const DynGraph& g, const Apsp& r) {
  // A shortest path through v splits at v into a shortest path ending at v
  // and one starting at v, so the edges in question are exactly the union of
  // the shortest-path in-dag and out-dag of v.
  const std::vector<Edge> edges = g.edges();
  auto dist = [&](Vid p, Vid q) -> std::optional<std::int64_t> {
    if (p == q) return 0;
    if (!r.d(p, q).finite()) return std::nullopt;
    return r.d(p, q).value().raw();
  };
  std::size_t best = 0;
  for (Vid v = 0; v < g.capacity(); ++v) {
    if (!g.alive(v)) continue;
    std::size_t count = 0;
    for (const Edge& e : edges) {
      auto into = dist(e.v, v);
      auto into_u = dist(e.u, v);
      auto from = dist(v, e.u);
      auto from_v = dist(v, e.v);
      bool in_dag = into && into_u && *into_u == e.w.raw() + *into;
      bool out_dag = from && from_v && *from_v == *from + e.w.raw();
      if (in_dag || out_dag) ++count;
    }
    best = std::max(best, count);
  }
  return best;
}

DynGraph without_vertices(const DynGraph& g, const std::vector<Vid>& removed) {
  DynGraph h = g;
  for (Vid v : removed) h.set_alive(v, false);
  return h;
}

}  // namespace apasp::oracle
