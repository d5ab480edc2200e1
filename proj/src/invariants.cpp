// Copyright (c) apasp contributors.
// SPDX-License-Identifier: Apache-2.0

#include "apasp/invariants.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "apasp/queries.hpp"

namespace apasp::check {

namespace {

constexpr std::size_t kMaxReported = 20;

class Sink {
 public:
  explicit Sink(Failures& out) : out_(out) {}
  template <typename... Args>
  void fail(const Args&... args) {
    ++total_;
    if (out_.size() >= kMaxReported) return;
    std::ostringstream os;
    (os << ... << args);
    out_.push_back(os.str());
  }
  bool full() const { return out_.size() >= kMaxReported; }

 private:
  Failures& out_;
  std::size_t total_ = 0;
};

std::string tuple_str(Vid x, Vid a, Vid b, Vid y, std::int64_t wt) {
  std::ostringstream os;
  os << "(" << x << " " << a << ", " << b << " " << y << ")@" << wt;
  return os.str();
}

std::optional<std::int64_t> dist_raw(const oracle::Apsp& r, Vid p, Vid q) {
  if (p == q) return 0;
  if (!r.d(p, q).finite()) return std::nullopt;
  return r.d(p, q).value().raw();
}

// wt is the weight of a shortest x-y path whose first edge is x->a and last
// edge is b->y (an edge tuple when a == y and b == x).
bool is_shortest(const DynGraph& g, const oracle::Apsp& r, Vid x, Vid a, Vid b, Vid y,
                 std::int64_t wt) {
  for (Vid v : {x, a, b, y}) {
    if (!g.alive(v)) return false;
  }
  auto dxy = dist_raw(r, x, y);
  if (!dxy || *dxy != wt) return false;
  if (a == y && b == x) {
    auto w = g.weight(x, y);
    return w && w->raw() == wt;
  }
  auto wxa = g.weight(x, a);
  auto wby = g.weight(b, y);
  auto dab = dist_raw(r, a, b);
  return wxa && wby && dab && wxa->raw() + *dab + wby->raw() == wt;
}

bool is_locally_shortest(const DynGraph& g, const oracle::Apsp& r, Vid x, Vid a, Vid b, Vid y,
                         std::int64_t wt) {
  if (a == y && b == x) {
    auto w = g.weight(x, y);
    return w && w->raw() == wt;
  }
  auto wxa = g.weight(x, a);
  auto wby = g.weight(b, y);
  if (!wxa || !wby) return false;
  auto dxb = dist_raw(r, x, b);
  auto day = dist_raw(r, a, y);
  return dxb && day && *dxb == wt - wby->raw() && *day == wt - wxa->raw();
}

}  // namespace

Failures oracle_equivalence(const DynGraph& g, const TupleSystem& ts, const oracle::Apsp& r,
                            bool bc) {
  Failures out;
  Sink sink(out);
  Queries q(g, ts);
  const auto live = g.live_vertices();
  for (Vid x : live) {
    for (Vid y : live) {
      if (x == y) continue;
      Distance d = q.distance(x, y);
      if (d != r.d(x, y)) {
        sink.fail("d(", x, ",", y, "): engine ", d.finite() ? std::to_string(d.value().raw()) : "inf",
                  " oracle ",
                  r.d(x, y).finite() ? std::to_string(r.d(x, y).value().raw()) : "inf");
        continue;
      }
      BigInt s = q.sigma(x, y);
      if (s != r.s(x, y)) sink.fail("sigma(", x, ",", y, "): engine ", s, " oracle ", r.s(x, y));
    }
  }
  if (bc && out.empty()) {
    auto mine = q.bc_all();
    auto ref = oracle::static_bc(g, r);
    for (Vid v : live) {
      if (mine[v] != ref[v]) sink.fail("bc(", v, "): engine ", mine[v], " oracle ", ref[v]);
    }
  }
  return out;
}

Failures census(const DynGraph& g, const TupleSystem& ts, const oracle::Apsp& r) {
  Failures out;
  Sink sink(out);
  const auto cen = oracle::census_tuples(g, r);
  const std::size_t n = g.capacity();
  std::vector<std::size_t> shortest_per_pair(n * n, 0);
  for (const auto& c : cen) {
    const std::int64_t wt = c.wt.raw();
    const auto* p = ts.find_p(c.x, c.y, c.a, c.b, wt);
    if (!p) {
      sink.fail("LST ", tuple_str(c.x, c.a, c.b, c.y, wt), " missing from P");
    } else if (p->count.to_big() != c.count) {
      sink.fail("LST ", tuple_str(c.x, c.a, c.b, c.y, wt), " P count ", p->count.str(),
                " census ", c.count);
    }
    if (!c.shortest) continue;
    ++shortest_per_pair[c.x * n + c.y];
    const auto* s = ts.find_s(c.x, c.y, c.a, c.b, wt);
    if (!s) {
      sink.fail("ST ", tuple_str(c.x, c.a, c.b, c.y, wt), " missing from P*");
    } else if (s->count.to_big() != c.count) {
      sink.fail("ST ", tuple_str(c.x, c.a, c.b, c.y, wt), " P* count ", s->count.str(),
                " census ", c.count);
    }
  }
  // no extra min-weight triples
  for (Vid x : g.live_vertices()) {
    for (Vid y : g.live_vertices()) {
      if (x == y) continue;
      const auto& s = ts.s(x, y);
      std::size_t at_min = 0;
      for (const auto& e : s) {
        if (e.wt != s.front().wt) break;
        ++at_min;
      }
      if (at_min != shortest_per_pair[x * n + y]) {
        sink.fail("pair (", x, ",", y, "): ", at_min, " min-weight P* triples, census has ",
                  shortest_per_pair[x * n + y]);
      }
    }
  }
  return out;
}

Failures constituents(const DynGraph& g, const TupleSystem& ts) {
  Failures out;
  Sink sink(out);
  ts.for_each_p([&](Vid x, Vid y, const TupleSystem::PEntry& e) {
    if (e.a == y && e.b == x) return;
    auto wxa = g.weight(x, e.a);
    auto wby = g.weight(e.b, y);
    if (!wxa || !wby) {
      sink.fail("P ", tuple_str(x, e.a, e.b, y, e.wt), " has a missing end edge");
      return;
    }
    if (ts.sum_s_last(e.a, y, e.wt - wxa->raw(), e.b).is_zero()) {
      sink.fail("P ", tuple_str(x, e.a, e.b, y, e.wt), " has no right constituent in P*");
    }
    if (ts.sum_s_first(x, e.b, e.wt - wby->raw(), e.a).is_zero()) {
      sink.fail("P ", tuple_str(x, e.a, e.b, y, e.wt), " has no left constituent in P*");
    }
  });
  return out;
}

Failures updated_vertex(const DynGraph& g, const TupleSystem& ts, const oracle::Apsp& r, Vid v,
                        std::uint32_t update_num) {
  Failures out;
  Sink sink(out);
  // A P triple goes through v if it names v, or if v is interior and both of
  // its constituent groups in P* hold a triple through v (a represented path
  // has both halves historical). A P* copy only carries paths through v if it
  // names v or was written by this update.
  std::map<std::tuple<Vid, Vid, Vid, Vid, std::int64_t>, bool> memo;
  auto through = [&](auto&& self, Vid x, Vid y, Vid a, Vid b, std::int64_t wt) -> bool {
    if (Tuple{x, a, b, y}.contains_named(v)) return true;
    if (a == y && b == x) return false;
    auto key = std::make_tuple(x, a, b, y, wt);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    auto star_through = [&](Vid p, Vid q, const TupleSystem::SEntry& e) {
      if (Tuple{p, e.a, e.b, q}.contains_named(v)) return true;
      return e.update_num == update_num && self(self, p, q, e.a, e.b, e.wt);
    };
    auto wxa = g.weight(x, a);
    auto wby = g.weight(b, y);
    bool right = false;
    bool left = false;
    if (wxa) {
      const std::int64_t w2 = wt - wxa->raw();
      for (const auto& e : ts.s(a, y)) {
        if (e.wt == w2 && e.b == b && star_through(a, y, e)) {
          right = true;
          break;
        }
      }
    }
    if (right && wby) {
      const std::int64_t w2 = wt - wby->raw();
      for (const auto& e : ts.s(x, b)) {
        if (e.wt == w2 && e.a == a && star_through(x, b, e)) {
          left = true;
          break;
        }
      }
    }
    memo[key] = right && left;
    return right && left;
  };
  ts.for_each_s([&](Vid x, Vid y, const TupleSystem::SEntry& e) {
    if (!Tuple{x, e.a, e.b, y}.contains_named(v) &&
        !(e.update_num == update_num && through(through, x, y, e.a, e.b, e.wt))) {
      return;
    }
    if (!is_shortest(g, r, x, e.a, e.b, y, e.wt)) {
      sink.fail("P* ", tuple_str(x, e.a, e.b, y, e.wt), " through ", v, " is not shortest");
    }
  });
  ts.for_each_p([&](Vid x, Vid y, const TupleSystem::PEntry& e) {
    if (x == v || y == v) return;
    if (!through(through, x, y, e.a, e.b, e.wt)) return;
    if (!is_locally_shortest(g, r, x, e.a, e.b, y, e.wt)) {
      sink.fail("P ", tuple_str(x, e.a, e.b, y, e.wt), " through ", v,
                " is not locally shortest and ", v, " is not an endpoint");
    }
  });
  return out;
}

Failures recency(const DynGraph& g, const History& h) {
  Failures out;
  Sink sink(out);
  const std::uint64_t t = h.step();
  if (t == 0) return out;
  const auto pt = prior_times(t);
  for (Vid u : g.live_vertices()) {
    auto last = h.last_update(u);
    if (!last) {
      sink.fail("live vertex ", u, " has no update in this epoch");
    } else if (!std::binary_search(pt.begin(), pt.end(), *last)) {
      sink.fail("vertex ", u, " last updated at step ", *last, ", not a prior time of ", t);
    }
  }
  return out;
}

Failures historical(const DynamicApasp& d) {
  Failures out;
  Sink sink(out);
  const std::uint64_t t = d.step();
  if (t == 0) {
    if (d.tuples().s_size() != 0) sink.fail("P* not empty at step 0");
    return out;
  }
  struct View {
    DynGraph g;
    oracle::Apsp r;
  };
  std::vector<View> views;
  for (std::uint64_t tp : prior_times(t)) {
    View v;
    v.g = oracle::without_vertices(d.graph_at(tp), d.history().updated_between(tp, t));
    v.r = oracle::static_apasp(v.g);
    views.push_back(std::move(v));
  }
  d.tuples().for_each_s([&](Vid x, Vid y, const TupleSystem::SEntry& e) {
    for (const auto& v : views) {
      if (is_shortest(v.g, v.r, x, e.a, e.b, y, e.wt)) return;
    }
    sink.fail("P* ", tuple_str(x, e.a, e.b, y, e.wt), " is not shortest in any view at step ", t);
  });
  return out;
}

Failures structure(const DynGraph& g, const TupleSystem& ts) {
  Failures out;
  Sink sink(out);
  using K3 = std::tuple<Vid, Vid, Vid>;
  using K4 = std::tuple<Vid, Vid, Vid, std::int64_t>;
  std::map<std::pair<K3, Vid>, std::uint32_t> left, right;
  std::map<K4, std::uint32_t> lstar, rstar;

  ts.for_each_p([&](Vid x, Vid y, const TupleSystem::PEntry& e) {
    const std::string id = tuple_str(x, e.a, e.b, y, e.wt);
    if (x == y) sink.fail("P ", id, " is a cycle");
    for (Vid u : {x, e.a, e.b, y}) {
      if (!g.alive(u)) sink.fail("P ", id, " names dead vertex ", u);
    }
    if (e.count.is_zero()) sink.fail("P ", id, " has count 0");
    if (e.a == y && e.b == x) {
      auto w = g.weight(x, y);
      if (!w || w->raw() != e.wt) sink.fail("P edge ", id, " does not match the graph");
      if (e.count != Count(1)) sink.fail("P edge ", id, " has count ", e.count.str());
    } else {
      auto wxa = g.weight(x, e.a);
      auto wby = g.weight(e.b, y);
      if (!wxa || !wby) {
        sink.fail("P ", id, " has a missing end edge");
      } else {
        Count r = ts.sum_s_last(e.a, y, e.wt - wxa->raw(), e.b);
        Count l = ts.sum_s_first(x, e.b, e.wt - wby->raw(), e.a);
        if (e.count != min(r, l)) {
          sink.fail("P ", id, " count ", e.count.str(), " but constituents give ", r.str(), "/",
                    l.str());
        }
      }
      ++left[{{e.a, e.b, y}, x}];
      ++right[{{x, e.a, e.b}, y}];
    }
    const auto* s = ts.find_s(x, y, e.a, e.b, e.wt);
    bool cb = s && s->count == e.count;
    if (cb != e.cb) sink.fail("P ", id, " cb flag ", e.cb, " expected ", cb);
  });
  ts.for_each_s([&](Vid x, Vid y, const TupleSystem::SEntry& e) {
    const std::string id = tuple_str(x, e.a, e.b, y, e.wt);
    for (Vid u : {x, e.a, e.b, y}) {
      if (!g.alive(u)) sink.fail("P* ", id, " names dead vertex ", u);
    }
    if (e.count.is_zero()) sink.fail("P* ", id, " has count 0");
    if (!ts.find_p(x, y, e.a, e.b, e.wt)) sink.fail("P* ", id, " has no copy in P");
    ++lstar[{e.a, y, x, e.wt}];
    ++rstar[{x, e.b, y, e.wt}];
  });

  std::size_t total = 0;
  auto find_mult = [](const auto* vec, Vid v) -> std::uint32_t {
    if (!vec) return 0;
    for (const auto& e : *vec) {
      if (e.v == v) return e.mult;
    }
    return 0;
  };
  for (const auto& [k, m] : left) {
    auto [a, b, y] = k.first;
    total += m;
    if (find_mult(ts.left(a, b, y), k.second) != m) {
      sink.fail("L(", a, ",", b, ",", y, ") multiplicity of ", k.second, " out of sync");
    }
  }
  for (const auto& [k, m] : right) {
    auto [x, a, b] = k.first;
    total += m;
    if (find_mult(ts.right(x, a, b), k.second) != m) {
      sink.fail("R(", x, ",", a, ",", b, ") multiplicity of ", k.second, " out of sync");
    }
  }
  auto star_mult = [](const std::vector<TupleSystem::StarEntry>& vec, Vid v, std::int64_t wt) {
    for (const auto& e : vec) {
      if (e.v == v && e.wt == wt) return e.mult;
    }
    return std::uint32_t{0};
  };
  for (const auto& [k, m] : lstar) {
    auto [a, y, x, wt] = k;
    total += m;
    if (star_mult(ts.left_star(a, y), x, wt) != m) {
      sink.fail("L*(", a, ",", y, ") multiplicity of ", x, "@", wt, " out of sync");
    }
  }
  for (const auto& [k, m] : rstar) {
    auto [x, b, y, wt] = k;
    total += m;
    if (star_mult(ts.right_star(x, b), y, wt) != m) {
      sink.fail("R*(", x, ",", b, ") multiplicity of ", y, "@", wt, " out of sync");
    }
  }
  if (total != ts.ext_total()) {
    sink.fail("extension sets hold ", ts.ext_total(), " memberships, expected ", total);
  }
  return out;
}

}  // namespace apasp::check
