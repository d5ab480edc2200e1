// Copyright (c) apasp contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include <absl/container/flat_hash_map.h>

#include "apasp/count.hpp"
#include "apasp/weight.hpp"

namespace apasp {

// A tuple (xa, by) names the set of paths that start with edge x->a and end
// with edge b->y. A single edge x->y is the tuple (xy, xy): a == y, b == x.
struct Tuple {
  Vid x = 0, a = 0, b = 0, y = 0;

  bool is_edge() const { return a == y && b == x; }
  bool contains_named(Vid v) const { return v == x || v == a || v == b || v == y; }
  auto operator<=>(const Tuple&) const = default;
};

// Public value view of a stored triple.
struct Triple {
  Tuple tuple;
  Weight wt;
  BigInt count;
  bool cb = false;  // P only: the P* copy exists with an equal count
  std::uint32_t update_num = 0;
  BigInt paths_thru_v;  // P only: paths through the vertex of update `update_num`
};

enum class Store { kP, kPStar };

enum class TupleClass { kShortest, kLocallyShortest, kNeither };

// (wt, x, y) ordering key used by both heaps.
struct HeapKey {
  std::int64_t wt = 0;
  Vid x = 0, y = 0;
  auto operator<=>(const HeapKey&) const = default;
};

struct BulkBound {
  std::size_t total = 0;  // triples in P plus triples in P*
  std::size_t p = 0;
  std::size_t pstar = 0;
  std::size_t max_through_vertex = 0;  // over v: triples whose tuple names v
};

// Storage for the two triple stores and the extension sets derived from them.
//
// P(x, y) holds the locally historical triples and P*(x, y) the historical
// triples, both sorted by [wt, a, b]. The extension sets are maintained
// on every insert and erase:
//   L(x, b, y)  = { x' : P(x', y) holds (x'x, by) }       (non-edge tuples)
//   R(x, a, b)  = { y  : P(x, y)  holds (xa, by) }        keyed by (x', x, b)
//   L*(a, y)    = { (x, wt) : P*(x, y) holds (xa, *y) at wt }
//   R*(x, b)    = { (y, wt) : P*(x, y) holds (x*, by) at wt }
// with multiplicities, since several stored triples can contribute the same
// element.
class TupleSystem {
 public:
  struct PEntry {
    std::int64_t wt;
    Vid a, b;
    std::uint32_t update_num;
    std::uint32_t mark;  // scratch for the update engine's phase marks
    bool cb;
    Count count;
    Count paths_v;
  };
  struct SEntry {
    std::int64_t wt;
    Vid a, b;
    std::uint32_t update_num;
    Count count;
  };
  struct ExtEntry {
    Vid v;
    std::uint32_t mult;
  };
  struct StarEntry {
    Vid v;
    std::int64_t wt;
    std::uint32_t mult;
  };

  explicit TupleSystem(std::size_t n = 0);

  std::size_t n() const { return n_; }
  void clear();

  // --- P ---
  const std::vector<PEntry>& p(Vid x, Vid y) const { return pairs_[idx(x, y)].p; }
  const PEntry* find_p(Vid x, Vid y, Vid a, Vid b, std::int64_t wt) const;
  PEntry* find_p(Vid x, Vid y, Vid a, Vid b, std::int64_t wt);
  // Throws Error if the triple is already present.
  PEntry& insert_p(Vid x, Vid y, Vid a, Vid b, std::int64_t wt, Count count,
                   std::uint32_t update_num);
  void erase_p(Vid x, Vid y, Vid a, Vid b, std::int64_t wt);
  // Throws Error if the triple is missing.
  PEntry* set_cb(Vid x, Vid y, Vid a, Vid b, std::int64_t wt, bool cb);
  // Index range of the entries of P(x, y) at weight wt.
  std::pair<std::size_t, std::size_t> p_range(Vid x, Vid y, std::int64_t wt) const;

  // --- P* ---
  const std::vector<SEntry>& s(Vid x, Vid y) const { return pairs_[idx(x, y)].s; }
  const SEntry* find_s(Vid x, Vid y, Vid a, Vid b, std::int64_t wt) const;
  SEntry* find_s(Vid x, Vid y, Vid a, Vid b, std::int64_t wt);
  SEntry& insert_s(Vid x, Vid y, Vid a, Vid b, std::int64_t wt, Count count,
                   std::uint32_t update_num);
  void erase_s(Vid x, Vid y, Vid a, Vid b, std::int64_t wt);
  std::optional<std::int64_t> s_min_weight(Vid x, Vid y) const;

  // Sum of counts of P*(x, y) triples at weight wt whose last edge is b->y.
  Count sum_s_last(Vid x, Vid y, std::int64_t wt, Vid b) const;
  // Sum of counts of P*(x, y) triples at weight wt whose first edge is x->a.
  Count sum_s_first(Vid x, Vid y, std::int64_t wt, Vid a) const;

  // --- extension sets ---
  const std::vector<ExtEntry>* left(Vid x, Vid b, Vid y) const;
  const std::vector<ExtEntry>* right(Vid x, Vid a, Vid b) const;
  const std::vector<StarEntry>& left_star(Vid a, Vid y) const { return lstar_[idx(a, y)]; }
  const std::vector<StarEntry>& right_star(Vid x, Vid b) const { return rstar_[idx(x, b)]; }
  // Sum of multiplicities over L, R, L*, R*.
  std::size_t ext_total() const;

  // --- whole-system views ---
  std::size_t p_size() const { return p_count_; }
  std::size_t s_size() const { return s_count_; }
  BulkBound bulk_bound_report() const;
  void for_each_p(const std::function<void(Vid, Vid, const PEntry&)>& fn) const;
  void for_each_s(const std::function<void(Vid, Vid, const SEntry&)>& fn) const;
  std::vector<Triple> triples(Store store) const;
  // One line per triple: "T x a b y wt count cb P|P*", sorted.
  void dump(std::ostream& os, const WeightScale& scale) const;

 private:
  struct PairStore {
    std::vector<PEntry> p;
    std::vector<SEntry> s;
  };

  std::size_t idx(Vid x, Vid y) const { return static_cast<std::size_t>(x) * n_ + y; }
  std::uint64_t key3(Vid p, Vid q, Vid r) const {
    return (static_cast<std::uint64_t>(p) * n_ + q) * n_ + r;
  }
  void ext_add(Vid x, Vid y, Vid a, Vid b);
  void ext_remove(Vid x, Vid y, Vid a, Vid b);
  void star_add(Vid x, Vid y, Vid a, Vid b, std::int64_t wt);
  void star_remove(Vid x, Vid y, Vid a, Vid b, std::int64_t wt);

  std::size_t n_ = 0;
  std::vector<PairStore> pairs_;
  absl::flat_hash_map<std::uint64_t, std::vector<ExtEntry>> left_;
  absl::flat_hash_map<std::uint64_t, std::vector<ExtEntry>> right_;
  std::vector<std::vector<StarEntry>> lstar_;
  std::vector<std::vector<StarEntry>> rstar_;
  std::size_t p_count_ = 0;
  std::size_t s_count_ = 0;
};

// Classifies (xa, by) at weight wt against distance function d, where
// d(p, p) must be 0. Shortest: wt == d(x, y). Locally shortest: removing the
// first or the last edge leaves a shortest path.
TupleClass classify(const Tuple& t, std::int64_t wt, std::int64_t w_xa, std::int64_t w_by,
                    const std::function<Distance(Vid, Vid)>& d);

}  // namespace apasp
