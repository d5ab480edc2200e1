// Copyright (c) apasp contributors.
// SPDX-License-Identifier: Apache-2.0

#include "apasp/workload.hpp"

#include <algorithm>

namespace apasp {

namespace {

struct Range {
  std::int64_t lo, hi;
};

Range weight_range(const WorkloadSpec& s) {
  if (s.generator == "planted-partition") return {s.delta + 1, 2 * s.delta};
  return {1, s.max_weight};
}

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

template <typename T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& v) {
  return v[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(v.size()) - 1))];
}

Weight units(const WeightScale& scale, std::int64_t u) { return Weight(u * scale.denominator()); }

}  // namespace

DynGraph generate_graph(const WorkloadSpec& s, const WeightScale& scale, std::mt19937_64& rng) {
  const std::size_t n = s.n;
  if (n == 0 || n >= (1u << 16)) throw Error("vertex count must be in [1, 65535]");
  DynGraph g(n);
  const Range r = weight_range(s);
  if (r.lo < 1 || r.hi < r.lo) throw Error("empty weight range");
  if (s.generator == "random-gnm") {
    if (s.m > n * (n - 1)) {
      throw Error("random-gnm: m = " + std::to_string(s.m) + " exceeds n(n-1) = " +
                  std::to_string(n * (n - 1)));
    }
    while (g.edge_count() < s.m) {
      Vid u = static_cast<Vid>(uniform(rng, 0, n - 1));
      Vid v = static_cast<Vid>(uniform(rng, 0, n - 1));
      if (u == v || g.weight(u, v)) continue;
      g.add_edge(u, v, units(scale, uniform(rng, r.lo, r.hi)));
    }
  } else if (s.generator == "planted-partition") {
    if (s.k == 0 || s.k > n) throw Error("planted-partition: need 1 <= k <= n");
    if (s.delta < 1) throw Error("planted-partition: delta must be positive");
    std::vector<std::vector<Vid>> cl(s.k);
    for (Vid v = 0; v < n; ++v) cl[v * s.k / n].push_back(v);
    for (const auto& c : cl) {
      for (Vid u : c) {
        for (Vid v : c) {
          if (u != v) g.add_edge(u, v, units(scale, uniform(rng, r.lo, r.hi)));
        }
      }
    }
    for (std::size_t i = 0; i < s.k; ++i) {
      for (std::size_t j = 0; j < s.k; ++j) {
        if (i == j) continue;
        const std::size_t cap = cl[i].size() * cl[j].size();
        if (s.bridges > cap) throw Error("planted-partition: too many bridges");
        std::size_t added = 0;
        while (added < s.bridges) {
          Vid u = pick(rng, cl[i]);
          Vid v = pick(rng, cl[j]);
          if (g.weight(u, v)) continue;
          g.add_edge(u, v, units(scale, uniform(rng, r.lo, r.hi)));
          ++added;
        }
      }
    }
  } else if (s.generator == "path") {
    for (Vid v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1, units(scale, 1));
  } else if (s.generator == "diamond-mesh") {
    // s_0 -> {l, r} -> s_1 -> ..., three vertices per stage
    if (n < 4 || (n - 1) % 3 != 0) throw Error("diamond-mesh: n must be 3k + 1 with k >= 1");
    for (Vid s0 = 0; s0 + 3 < n; s0 += 3) {
      g.add_edge(s0, s0 + 1, units(scale, 1));
      g.add_edge(s0, s0 + 2, units(scale, 1));
      g.add_edge(s0 + 1, s0 + 3, units(scale, 1));
      g.add_edge(s0 + 2, s0 + 3, units(scale, 1));
    }
  } else {
    throw Error("unknown generator '" + s.generator + "'");
  }
  return g;
}

std::vector<TraceStep> generate_trace(DynGraph g, const WorkloadSpec& s, const WeightScale& scale,
                                      std::mt19937_64& rng) {
  const Range r = weight_range(s);
  const std::int64_t cap = 4 * r.hi;
  const std::size_t max_edges = 4 * g.capacity();
  const std::int64_t den = scale.denominator();
  std::discrete_distribution<int> kind_dist(
      {s.mix.increase, s.mix.decrease, s.mix.insert, s.mix.remove});
  std::vector<TraceStep> trace;

  auto live = [&] { return g.live_vertices(); };
  auto dead = [&] {
    std::vector<Vid> d;
    for (Vid v = 0; v < g.capacity(); ++v) {
      if (!g.alive(v)) d.push_back(v);
    }
    return d;
  };
  // incident edges of v as (is_out, other endpoint, weight units)
  struct Inc {
    bool out;
    Vid u;
    std::int64_t w;
  };
  auto incident = [&](Vid v) {
    std::vector<Inc> e;
    for (auto [u, w] : g.out(v)) e.push_back({true, u, w.raw() / den});
    for (auto [u, w] : g.in(v)) e.push_back({false, u, w.raw() / den});
    return e;
  };

  for (std::size_t t = 1; t <= s.steps; ++t) {
    TraceStep st;
    st.step = t;
    int kind = kind_dist(rng);
    const auto lv = live();
    const auto dv = dead();
    if (kind == 2 && dv.empty()) kind = 1;
    if (kind == 3 && lv.size() <= 2) kind = dv.empty() ? 0 : 2;
    if (lv.empty()) kind = 2;

    if (kind == 2) {
      st.up.kind = UpdateKind::kInsert;
      st.up.v = pick(rng, dv);
      std::vector<Vid> cand = lv;
      std::shuffle(cand.begin(), cand.end(), rng);
      std::size_t dout = std::min<std::size_t>(cand.size(), uniform(rng, 1, s.max_degree));
      for (std::size_t i = 0; i < dout; ++i) {
        st.up.out.push_back({cand[i], units(scale, uniform(rng, r.lo, r.hi))});
      }
      std::shuffle(cand.begin(), cand.end(), rng);
      std::size_t din = std::min<std::size_t>(cand.size(), uniform(rng, 1, s.max_degree));
      for (std::size_t i = 0; i < din; ++i) {
        st.up.in.push_back({cand[i], units(scale, uniform(rng, r.lo, r.hi))});
      }
      std::sort(st.up.out.begin(), st.up.out.end(), [](auto& p, auto& q) { return p.u < q.u; });
      std::sort(st.up.in.begin(), st.up.in.end(), [](auto& p, auto& q) { return p.u < q.u; });
    } else if (kind == 3) {
      st.up.kind = UpdateKind::kDelete;
      st.up.v = pick(rng, lv);
    } else {
      st.up.kind = UpdateKind::kReweight;
      Vid v = pick(rng, lv);
      auto inc = incident(v);
      if (kind == 0 && inc.empty()) kind = 1;
      st.up.v = v;
      std::vector<char> used_out(g.capacity(), 0), used_in(g.capacity(), 0);
      const std::size_t changes = uniform(rng, 1, s.max_changes);
      for (std::size_t c = 0; c < changes; ++c) {
        if (kind == 0) {
          const Inc& e = pick(rng, inc);
          auto& used = e.out ? used_out : used_in;
          if (used[e.u]) continue;
          used[e.u] = 1;
          EdgeChange ch{e.u, std::nullopt};
          if (e.w < cap && uniform(rng, 0, 3) != 0) {
            ch.w = units(scale, std::min(cap, e.w + uniform(rng, 1, r.hi - r.lo + 1)));
          }
          (e.out ? st.up.out : st.up.in).push_back(ch);
        } else {
          // add a new edge or lower an existing one
          bool add = inc.empty() || uniform(rng, 0, 1) == 0;
          if (add && g.edge_count() + c < max_edges && lv.size() > 1) {
            Vid u = pick(rng, lv);
            bool out = uniform(rng, 0, 1) == 0;
            auto& used = out ? used_out : used_in;
            if (u == v || used[u] || (out ? g.weight(v, u) : g.weight(u, v))) continue;
            used[u] = 1;
            (out ? st.up.out : st.up.in).push_back({u, units(scale, uniform(rng, r.lo, r.hi))});
          } else if (!inc.empty()) {
            const Inc& e = pick(rng, inc);
            auto& used = e.out ? used_out : used_in;
            if (used[e.u] || e.w <= r.lo) continue;
            used[e.u] = 1;
            (e.out ? st.up.out : st.up.in).push_back({e.u, units(scale, uniform(rng, r.lo, e.w - 1))});
          }
        }
      }
    }
    g.apply(st.up);
    trace.push_back(std::move(st));
  }
  return trace;
}

Workload generate(const WorkloadSpec& spec, const WeightScale& scale) {
  std::mt19937_64 rng(spec.seed);
  Workload w;
  w.graph = generate_graph(spec, scale, rng);
  w.trace = generate_trace(w.graph, spec, scale, rng);
  return w;
}

}  // namespace apasp
