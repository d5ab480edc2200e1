// Copyright (c) apasp contributors.
// SPDX-License-Identifier: Apache-2.0

#include "apasp/update_engine.hpp"

#include <algorithm>
#include <tuple>

#include "apasp/triple_heap.hpp"

namespace apasp {

std::int64_t UpdateEngine::w(Vid u, Vid v) const {
  auto wt = g_.weight(u, v);
  if (!wt) throw Error("stored triple uses missing edge " + std::to_string(u) + "->" +
                       std::to_string(v));
  return wt->raw();
}

void UpdateEngine::begin_update(Vid v) {
  ++stamp_;
  stats_ = UpdateStats{};
  stats_.v = v;
  stats_.update_num = stamp_;
  journal_.clear();
  first_log_.clear();
}

UpdateStats UpdateEngine::fully_update(const VertexUpdate& up) {
  g_.validate(up);
  fully_cleanup(up.v);
  g_.apply(up);
  fully_fixup(up.v);
  return stats_;
}

UpdateStats UpdateEngine::refresh(Vid v) {
  if (!g_.alive(v)) throw GraphError("refresh of dead vertex " + std::to_string(v));
  fully_cleanup(v);
  fully_fixup(v);
  return stats_;
}

void UpdateEngine::journal(Vid x, Vid y) {
  journal_.try_emplace(static_cast<std::size_t>(x) * ts_.n() + y, ts_.s_min_weight(x, y));
}

Distance UpdateEngine::snapshot_distance(Vid x, Vid y) const {
  if (x == y) return Weight(0);
  auto it = journal_.find(static_cast<std::size_t>(x) * ts_.n() + y);
  std::optional<std::int64_t> m = it != journal_.end() ? it->second : ts_.s_min_weight(x, y);
  return m ? Distance(Weight(*m)) : Distance::infinite();
}

Count UpdateEngine::derived_count(Vid x, Vid y, Vid a, Vid b, std::int64_t wt) const {
  return derived_count(x, y, a, b, wt, w(x, a), w(b, y));
}

Count UpdateEngine::derived_count(Vid x, Vid y, Vid a, Vid b, std::int64_t wt, std::int64_t w_xa,
                                  std::int64_t w_by) const {
  Count right = ts_.sum_s_last(a, y, wt - w_xa, b);
  if (right.is_zero()) return right;
  Count left = ts_.sum_s_first(x, b, wt - w_by, a);
  return min(right, left);
}

void UpdateEngine::refresh_cb(Vid x, Vid y, TupleSystem::PEntry* e) {
  const auto* s = ts_.find_s(x, y, e->a, e->b, e->wt);
  e->cb = s != nullptr && s->count == e->count;
}

PhaseStats UpdateEngine::fully_cleanup(Vid v) {
  begin_update(v);
  PhaseStats& ps = stats_.cleanup;
  ++mark_;
  KeyedHeap<CleanupItem> hc;
  std::vector<Key5> dirty;

  // Record the triple, adjust P*, and queue it for further extension.
  auto gen = [&](Vid x, Vid y, Vid a, Vid b, std::int64_t wt, const Count& f) {
    auto* e = ts_.find_p(x, y, a, b, wt);
    if (!e || e->mark == mark_) return;
    e->mark = mark_;
    hc.push({wt, x, y}, {a, b, f});
    dirty.push_back(Key5{x, a, b, y, wt});
    auto* s = ts_.find_s(x, y, a, b, wt);
    if (!s) return;
    const Distance d = snapshot_distance(x, y);
    journal(x, y);
    if (d == Distance(Weight(wt))) {
      s->count -= f;
      if (!s->count.is_zero()) return;
    }
    ts_.erase_s(x, y, a, b, wt);
    ++ps.removed;
  };

  // The trivial tuple at v extends to every edge incident to v.
  if (g_.alive(v)) {
    for (auto [u, wu] : DynGraph::Adjacency(g_.out(v))) gen(v, u, u, v, wu.raw(), Count(1));
    for (auto [u, wu] : DynGraph::Adjacency(g_.in(v))) gen(u, v, v, u, wu.raw(), Count(1));
  }

  HeapKey last{};
  bool have_last = false;
  while (!hc.empty()) {
    auto [key, items] = hc.extract_min_set();
    if (have_last && key < last) ++stats_.heap_order_violations;
    last = key;
    have_last = true;
    ps.examined += items.size();
    const Vid x = key.x;
    const Vid y = key.y;
    const std::int64_t wt = key.wt;

    // left extensions, one pass per last edge (b, y)
    std::sort(items.begin(), items.end(),
              [](const CleanupItem& p, const CleanupItem& q) { return p.b < q.b; });
    for (std::size_t i = 0; i < items.size();) {
      const Vid b = items[i].b;
      Count f;
      for (; i < items.size() && items[i].b == b; ++i) f += items[i].f;
      const auto* lset = ts_.left(x, b, y);
      if (!lset) continue;
      const auto& ext = *lset;
      for (const auto& e : ext) {
        auto wx = g_.weight(e.v, x);
        if (!wx) continue;
        gen(e.v, y, x, b, wt + wx->raw(), f);
      }
    }
    // right extensions, one pass per first edge (x, a)
    std::sort(items.begin(), items.end(),
              [](const CleanupItem& p, const CleanupItem& q) { return p.a < q.a; });
    for (std::size_t i = 0; i < items.size();) {
      const Vid a = items[i].a;
      Count f;
      for (; i < items.size() && items[i].a == a; ++i) f += items[i].f;
      const auto* rset = ts_.right(x, a, y);
      if (!rset) continue;
      const auto& ext = *rset;
      for (const auto& e : ext) {
        auto wy = g_.weight(y, e.v);
        if (!wy) continue;
        gen(x, e.v, a, y, wt + wy->raw(), f);
      }
    }
  }

  // Every P triple reached above lost paths through v; recount it from its
  // constituents. Edges incident to v lose their only path.
  for (const Key5& k : dirty) {
    auto* e = ts_.find_p(k.x, k.y, k.a, k.b, k.wt);
    if (!e) continue;
    Count c;
    if (!(k.a == k.y && k.b == k.x)) c = derived_count(k.x, k.y, k.a, k.b, k.wt);
    if (c.is_zero()) {
      ts_.erase_p(k.x, k.y, k.a, k.b, k.wt);
      ++ps.removed;
      continue;
    }
    e->count = std::move(c);
    e->update_num = stamp_;
    e->paths_v = Count();
    refresh_cb(k.x, k.y, e);
  }
  ps.heap_ops = hc.ops();
  return ps;
}

bool UpdateEngine::promote(Vid x, Vid y, Vid a, Vid b, std::int64_t wt) {
  auto* e = ts_.find_p(x, y, a, b, wt);
  auto* s = ts_.find_s(x, y, a, b, wt);
  bool changed = false;
  if (!s) {
    ts_.insert_s(x, y, a, b, wt, e->count, stamp_);
    ++stats_.fixup.added;
    changed = true;
  } else if (s->count != e->count) {
    s->count = e->count;
    s->update_num = stamp_;
    changed = true;
  }
  e->cb = true;
  return changed;
}

PhaseStats UpdateEngine::fully_fixup(Vid v) {
  PhaseStats& ps = stats_.fixup;
  ps = PhaseStats{};
  ++mark_;
  const std::size_t n = ts_.n();
  if (first_done_.size() != n * n) first_done_.assign(n * n, 0);
  KeyedHeap<FixupItem> hf;

  // Recount (xa, by) at wt from its constituents and queue it.
  auto derive = [&](Vid x, Vid y, Vid a, Vid b, std::int64_t wt, std::int64_t w_xa,
                    std::int64_t w_by) {
    Count c = derived_count(x, y, a, b, wt, w_xa, w_by);
    if (c.is_zero()) return;
    auto* e = ts_.find_p(x, y, a, b, wt);
    if (!e) {
      e = &ts_.insert_p(x, y, a, b, wt, c, stamp_);
      e->paths_v = std::move(c);
      ++ps.added;
    } else {
      if (e->update_num != stamp_) {
        e->update_num = stamp_;
        e->paths_v = Count();
      }
      if (c < e->count) {
        ++stats_.fixup_decreases;
      } else if (e->count < c) {
        e->paths_v += c - e->count;
      }
      e->count = std::move(c);
    }
    refresh_cb(x, y, e);
    if (e->mark != mark_) {
      e->mark = mark_;
      hf.push({wt, x, y}, {a, b});
    }
  };

  if (g_.alive(v)) {
    auto add_edge = [&](Vid x, Vid y, std::int64_t wt) {
      auto& e = ts_.insert_p(x, y, y, x, wt, Count(1), stamp_);
      e.paths_v = Count(1);
      ++ps.added;
      e.mark = mark_;
      hf.push({wt, x, y}, {y, x});
    };
    for (auto [u, wu] : g_.out(v)) add_edge(v, u, wu.raw());
    for (auto [u, wu] : g_.in(v)) add_edge(u, v, wu.raw());
  }
  // Pairs whose P* minimum rose during cleanup get an explicit candidate.
  // Every other pair is handled lazily below: its candidate would be the
  // current P minimum, and extracting it first changes nothing.
  std::vector<std::size_t> rose;
  for (const auto& [pair, old] : journal_) {
    if (!old) continue;
    const Vid x = static_cast<Vid>(pair / n);
    const Vid y = static_cast<Vid>(pair % n);
    auto cur = ts_.s_min_weight(x, y);
    if (cur && *cur <= *old) continue;
    rose.push_back(pair);
  }
  std::sort(rose.begin(), rose.end());
  for (std::size_t pair : rose) {
    const Vid x = static_cast<Vid>(pair / n);
    const Vid y = static_cast<Vid>(pair % n);
    const auto& p = ts_.p(x, y);
    if (!p.empty()) hf.push({p.front().wt, x, y}, {p.front().a, p.front().b});
  }

  HeapKey last{};
  bool have_last = false;
  std::vector<std::pair<Vid, Vid>> s_set;
  while (!hf.empty()) {
    auto [key, items] = hf.extract_min_set();
    if (have_last && key < last) ++stats_.heap_order_violations;
    last = key;
    have_last = true;
    ps.examined += items.size();
    const Vid x = key.x;
    const Vid y = key.y;
    const std::int64_t wt = key.wt;
    const std::size_t pair = static_cast<std::size_t>(x) * n + y;
    if (first_done_[pair] == stamp_) continue;
    first_done_[pair] = stamp_;
    if (ts_.p(x, y).front().wt < wt) continue;
    if (record_first_) first_log_.push_back({x, y, wt});

    const Distance old = snapshot_distance(x, y);
    const auto cur = ts_.s_min_weight(x, y);
    const bool increased = old.finite() && (!cur || *cur > old.value().raw());

    s_set.clear();
    if (increased) {
      ++stats_.restored_pairs;
      auto [lo, hi] = ts_.p_range(x, y, wt);
      std::vector<std::pair<Vid, Vid>> cand;
      for (std::size_t i = lo; i < hi; ++i) {
        const auto& e = ts_.p(x, y)[i];
        if (!e.cb) cand.emplace_back(e.a, e.b);
      }
      for (auto [a, b] : cand) {
        if (promote(x, y, a, b, wt)) s_set.emplace_back(a, b);
      }
    } else {
      std::sort(items.begin(), items.end(), [](const FixupItem& p, const FixupItem& q) {
        return std::tie(p.a, p.b) < std::tie(q.a, q.b);
      });
      for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0 && items[i].a == items[i - 1].a && items[i].b == items[i - 1].b) continue;
        const auto* e = ts_.find_p(x, y, items[i].a, items[i].b, wt);
        if (!e || e->cb || e->update_num != stamp_ || e->paths_v.is_zero()) continue;
        if (promote(x, y, items[i].a, items[i].b, wt)) s_set.emplace_back(items[i].a, items[i].b);
      }
    }
    if (s_set.empty()) continue;

    // left extensions, one pass per last edge (b, y)
    std::sort(s_set.begin(), s_set.end(),
              [](const auto& p, const auto& q) { return p.second < q.second; });
    for (std::size_t i = 0; i < s_set.size();) {
      const Vid b = s_set[i].second;
      while (i < s_set.size() && s_set[i].second == b) ++i;
      const std::int64_t inner = wt - w(b, y);
      const auto& ext = ts_.left_star(x, b);
      for (const auto& e : ext) {
        if (e.v == y) continue;
        auto wx = g_.weight(e.v, x);
        if (!wx || e.wt != wx->raw() + inner) continue;
        derive(e.v, y, x, b, wt + wx->raw(), wx->raw(), wt - inner);
      }
    }
    // right extensions, one pass per first edge (x, a)
    std::sort(s_set.begin(), s_set.end());
    for (std::size_t i = 0; i < s_set.size();) {
      const Vid a = s_set[i].first;
      while (i < s_set.size() && s_set[i].first == a) ++i;
      const std::int64_t inner = wt - w(x, a);
      const auto& ext = ts_.right_star(a, y);
      for (const auto& e : ext) {
        if (e.v == x) continue;
        auto wy = g_.weight(y, e.v);
        if (!wy || e.wt != wy->raw() + inner) continue;
        derive(x, e.v, a, y, wt + wy->raw(), wt - inner, wy->raw());
      }
    }
  }
  ps.heap_ops = hf.ops();
  return ps;
}

}  // namespace apasp
