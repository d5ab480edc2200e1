// Copyright (c) apasp contributors.
// SPDX-License-Identifier: Apache-2.0

#include "apasp/tuple_system.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>

namespace apasp {

namespace {

bool p_less(const TupleSystem::PEntry& e, std::int64_t wt, Vid a, Vid b) {
  return std::tie(e.wt, e.a, e.b) < std::tie(wt, a, b);
}

bool s_less(const TupleSystem::SEntry& e, std::int64_t wt, Vid a, Vid b) {
  return std::tie(e.wt, e.a, e.b) < std::tie(wt, a, b);
}

template <typename Vec>
auto p_lower(Vec& v, std::int64_t wt, Vid a, Vid b) {
  return std::lower_bound(v.begin(), v.end(), 0,
                          [&](const auto& e, int) { return p_less(e, wt, a, b); });
}

template <typename Vec>
auto s_lower(Vec& v, std::int64_t wt, Vid a, Vid b) {
  return std::lower_bound(v.begin(), v.end(), 0,
                          [&](const auto& e, int) { return s_less(e, wt, a, b); });
}

void mult_add(std::vector<TupleSystem::ExtEntry>& v, Vid x) {
  auto it = std::lower_bound(v.begin(), v.end(), x,
                             [](const TupleSystem::ExtEntry& e, Vid k) { return e.v < k; });
  if (it != v.end() && it->v == x) {
    ++it->mult;
  } else {
    v.insert(it, {x, 1});
  }
}

bool mult_remove(std::vector<TupleSystem::ExtEntry>& v, Vid x) {
  auto it = std::lower_bound(v.begin(), v.end(), x,
                             [](const TupleSystem::ExtEntry& e, Vid k) { return e.v < k; });
  if (it == v.end() || it->v != x) throw Error("extension set out of sync");
  if (--it->mult == 0) v.erase(it);
  return v.empty();
}

void star_mult_add(std::vector<TupleSystem::StarEntry>& v, Vid x, std::int64_t wt) {
  auto it = std::lower_bound(v.begin(), v.end(), std::make_pair(x, wt),
                             [](const TupleSystem::StarEntry& e, std::pair<Vid, std::int64_t> k) {
                               return std::make_pair(e.v, e.wt) < k;
                             });
  if (it != v.end() && it->v == x && it->wt == wt) {
    ++it->mult;
  } else {
    v.insert(it, {x, wt, 1});
  }
}

void star_mult_remove(std::vector<TupleSystem::StarEntry>& v, Vid x, std::int64_t wt) {
  auto it = std::lower_bound(v.begin(), v.end(), std::make_pair(x, wt),
                             [](const TupleSystem::StarEntry& e, std::pair<Vid, std::int64_t> k) {
                               return std::make_pair(e.v, e.wt) < k;
                             });
  if (it == v.end() || it->v != x || it->wt != wt) throw Error("star extension set out of sync");
  if (--it->mult == 0) v.erase(it);
}

}  // namespace

TupleSystem::TupleSystem(std::size_t n)
    : n_(n), pairs_(n * n), lstar_(n * n), rstar_(n * n) {}

void TupleSystem::clear() {
  pairs_.assign(n_ * n_, PairStore{});
  lstar_.assign(n_ * n_, {});
  rstar_.assign(n_ * n_, {});
  left_.clear();
  right_.clear();
  p_count_ = 0;
  s_count_ = 0;
}

// ---- P ----

const TupleSystem::PEntry* TupleSystem::find_p(Vid x, Vid y, Vid a, Vid b,
                                               std::int64_t wt) const {
  return const_cast<TupleSystem*>(this)->find_p(x, y, a, b, wt);
}

TupleSystem::PEntry* TupleSystem::find_p(Vid x, Vid y, Vid a, Vid b, std::int64_t wt) {
  auto& v = pairs_[idx(x, y)].p;
  auto it = p_lower(v, wt, a, b);
  if (it != v.end() && it->wt == wt && it->a == a && it->b == b) return &*it;
  return nullptr;
}

TupleSystem::PEntry& TupleSystem::insert_p(Vid x, Vid y, Vid a, Vid b, std::int64_t wt,
                                           Count count, std::uint32_t update_num) {
  auto& v = pairs_[idx(x, y)].p;
  auto it = p_lower(v, wt, a, b);
  if (it != v.end() && it->wt == wt && it->a == a && it->b == b) {
    throw Error("duplicate P triple");
  }
  it = v.insert(it, PEntry{wt, a, b, update_num, 0, false, std::move(count), Count()});
  ++p_count_;
  ext_add(x, y, a, b);
  return *it;
}

void TupleSystem::erase_p(Vid x, Vid y, Vid a, Vid b, std::int64_t wt) {
  PEntry* e = find_p(x, y, a, b, wt);
  if (!e) throw Error("erase of missing P triple");
  auto& v = pairs_[idx(x, y)].p;
  v.erase(v.begin() + (e - v.data()));
  --p_count_;
  ext_remove(x, y, a, b);
}

TupleSystem::PEntry* TupleSystem::set_cb(Vid x, Vid y, Vid a, Vid b, std::int64_t wt, bool cb) {
  PEntry* e = find_p(x, y, a, b, wt);
  if (!e) throw Error("set_cb on missing P triple");
  e->cb = cb;
  return e;
}

std::pair<std::size_t, std::size_t> TupleSystem::p_range(Vid x, Vid y, std::int64_t wt) const {
  const auto& v = pairs_[idx(x, y)].p;
  auto lo = p_lower(v, wt, 0, 0);
  auto hi = lo;
  while (hi != v.end() && hi->wt == wt) ++hi;
  return {static_cast<std::size_t>(lo - v.begin()), static_cast<std::size_t>(hi - v.begin())};
}

// ---- P* ----

const TupleSystem::SEntry* TupleSystem::find_s(Vid x, Vid y, Vid a, Vid b,
                                               std::int64_t wt) const {
  return const_cast<TupleSystem*>(this)->find_s(x, y, a, b, wt);
}

TupleSystem::SEntry* TupleSystem::find_s(Vid x, Vid y, Vid a, Vid b, std::int64_t wt) {
  auto& v = pairs_[idx(x, y)].s;
  auto it = s_lower(v, wt, a, b);
  if (it != v.end() && it->wt == wt && it->a == a && it->b == b) return &*it;
  return nullptr;
}

TupleSystem::SEntry& TupleSystem::insert_s(Vid x, Vid y, Vid a, Vid b, std::int64_t wt,
                                           Count count, std::uint32_t update_num) {
  auto& v = pairs_[idx(x, y)].s;
  auto it = s_lower(v, wt, a, b);
  if (it != v.end() && it->wt == wt && it->a == a && it->b == b) {
    throw Error("duplicate P* triple");
  }
  it = v.insert(it, SEntry{wt, a, b, update_num, std::move(count)});
  ++s_count_;
  star_add(x, y, a, b, wt);
  return *it;
}

void TupleSystem::erase_s(Vid x, Vid y, Vid a, Vid b, std::int64_t wt) {
  SEntry* e = find_s(x, y, a, b, wt);
  if (!e) throw Error("erase of missing P* triple");
  auto& v = pairs_[idx(x, y)].s;
  v.erase(v.begin() + (e - v.data()));
  --s_count_;
  star_remove(x, y, a, b, wt);
}

std::optional<std::int64_t> TupleSystem::s_min_weight(Vid x, Vid y) const {
  const auto& v = pairs_[idx(x, y)].s;
  if (v.empty()) return std::nullopt;
  return v.front().wt;
}

Count TupleSystem::sum_s_last(Vid x, Vid y, std::int64_t wt, Vid b) const {
  const auto& v = pairs_[idx(x, y)].s;
  Count sum;
  for (auto it = s_lower(v, wt, 0, 0); it != v.end() && it->wt == wt; ++it) {
    if (it->b == b) sum += it->count;
  }
  return sum;
}

Count TupleSystem::sum_s_first(Vid x, Vid y, std::int64_t wt, Vid a) const {
  const auto& v = pairs_[idx(x, y)].s;
  Count sum;
  for (auto it = s_lower(v, wt, a, 0); it != v.end() && it->wt == wt && it->a == a; ++it) {
    sum += it->count;
  }
  return sum;
}

// ---- extension sets ----

const std::vector<TupleSystem::ExtEntry>* TupleSystem::left(Vid x, Vid b, Vid y) const {
  auto it = left_.find(key3(x, b, y));
  return it == left_.end() ? nullptr : &it->second;
}

const std::vector<TupleSystem::ExtEntry>* TupleSystem::right(Vid x, Vid a, Vid b) const {
  auto it = right_.find(key3(x, a, b));
  return it == right_.end() ? nullptr : &it->second;
}

void TupleSystem::ext_add(Vid x, Vid y, Vid a, Vid b) {
  if (a == y && b == x) return;  // single edge
  mult_add(left_[key3(a, b, y)], x);
  mult_add(right_[key3(x, a, b)], y);
}

void TupleSystem::ext_remove(Vid x, Vid y, Vid a, Vid b) {
  if (a == y && b == x) return;
  auto l = left_.find(key3(a, b, y));
  auto r = right_.find(key3(x, a, b));
  if (l == left_.end() || r == right_.end()) throw Error("extension set out of sync");
  if (mult_remove(l->second, x)) left_.erase(l);
  if (mult_remove(r->second, y)) right_.erase(r);
}

void TupleSystem::star_add(Vid x, Vid y, Vid a, Vid b, std::int64_t wt) {
  star_mult_add(lstar_[idx(a, y)], x, wt);
  star_mult_add(rstar_[idx(x, b)], y, wt);
}

void TupleSystem::star_remove(Vid x, Vid y, Vid a, Vid b, std::int64_t wt) {
  star_mult_remove(lstar_[idx(a, y)], x, wt);
  star_mult_remove(rstar_[idx(x, b)], y, wt);
}

// ---- whole-system views ----

std::size_t TupleSystem::ext_total() const {
  std::size_t t = 0;
  for (const auto* m : {&left_, &right_}) {
    for (const auto& [k, v] : *m) {
      for (const auto& e : v) t += e.mult;
    }
  }
  for (const auto* m : {&lstar_, &rstar_}) {
    for (const auto& v : *m) {
      for (const auto& e : v) t += e.mult;
    }
  }
  return t;
}

BulkBound TupleSystem::bulk_bound_report() const {
  BulkBound r;
  r.p = p_count_;
  r.pstar = s_count_;
  r.total = p_count_ + s_count_;
  std::vector<std::size_t> per(n_, 0);
  auto bump = [&](Vid x, Vid a, Vid b, Vid y) {
    Vid vs[4] = {x, a, b, y};
    std::sort(vs, vs + 4);
    for (int i = 0; i < 4; ++i) {
      if (i == 0 || vs[i] != vs[i - 1]) ++per[vs[i]];
    }
  };
  for (Vid x = 0; x < n_; ++x) {
    for (Vid y = 0; y < n_; ++y) {
      const auto& ps = pairs_[idx(x, y)];
      for (const auto& e : ps.p) bump(x, e.a, e.b, y);
      for (const auto& e : ps.s) bump(x, e.a, e.b, y);
    }
  }
  for (std::size_t c : per) r.max_through_vertex = std::max(r.max_through_vertex, c);
  return r;
}

void TupleSystem::for_each_p(const std::function<void(Vid, Vid, const PEntry&)>& fn) const {
  for (Vid x = 0; x < n_; ++x) {
    for (Vid y = 0; y < n_; ++y) {
      for (const auto& e : pairs_[idx(x, y)].p) fn(x, y, e);
    }
  }
}

void TupleSystem::for_each_s(const std::function<void(Vid, Vid, const SEntry&)>& fn) const {
  for (Vid x = 0; x < n_; ++x) {
    for (Vid y = 0; y < n_; ++y) {
      for (const auto& e : pairs_[idx(x, y)].s) fn(x, y, e);
    }
  }
}

std::vector<Triple> TupleSystem::triples(Store store) const {
  std::vector<Triple> out;
  if (store == Store::kP) {
    for_each_p([&](Vid x, Vid y, const PEntry& e) {
      out.push_back(Triple{{x, e.a, e.b, y}, Weight(e.wt), e.count.to_big(), e.cb, e.update_num,
                           e.paths_v.to_big()});
    });
  } else {
    for_each_s([&](Vid x, Vid y, const SEntry& e) {
      out.push_back(
          Triple{{x, e.a, e.b, y}, Weight(e.wt), e.count.to_big(), false, e.update_num, 0});
    });
  }
  return out;
}

void TupleSystem::dump(std::ostream& os, const WeightScale& scale) const {
  std::vector<std::string> lines;
  auto line = [&](Vid x, Vid a, Vid b, Vid y, std::int64_t wt, const Count& c, bool cb,
                  const char* store) {
    std::ostringstream s;
    s << "T " << x << ' ' << a << ' ' << b << ' ' << y << ' ' << scale.format(Weight(wt)) << ' '
      << c.str() << ' ' << (cb ? 1 : 0) << ' ' << store;
    lines.push_back(s.str());
  };
  for_each_p([&](Vid x, Vid y, const PEntry& e) { line(x, e.a, e.b, y, e.wt, e.count, e.cb, "P"); });
  for_each_s(
      [&](Vid x, Vid y, const SEntry& e) { line(x, e.a, e.b, y, e.wt, e.count, false, "P*"); });
  std::sort(lines.begin(), lines.end());
  for (const auto& l : lines) os << l << '\n';
}

TupleClass classify(const Tuple& t, std::int64_t wt, std::int64_t w_xa, std::int64_t w_by,
                    const std::function<Distance(Vid, Vid)>& d) {
  if (d(t.x, t.y) == Distance(Weight(wt))) return TupleClass::kShortest;
  if (d(t.x, t.b) == Distance(Weight(wt - w_by)) && d(t.a, t.y) == Distance(Weight(wt - w_xa))) {
    return TupleClass::kLocallyShortest;
  }
  return TupleClass::kNeither;
}

}  // namespace apasp
