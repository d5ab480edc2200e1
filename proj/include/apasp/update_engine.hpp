// Copyright (c) apasp contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <absl/container/flat_hash_map.h>

#include "apasp/graph.hpp"
#include "apasp/tuple_system.hpp"

namespace apasp {

struct PhaseStats {
  std::size_t examined = 0;  // triples extracted from the phase heap
  std::size_t removed = 0;   // triples erased from P or P*
  std::size_t added = 0;     // triples inserted into P or P*
  std::size_t heap_ops = 0;  // pushes plus pops
};

struct UpdateStats {
  Vid v = 0;
  std::uint32_t update_num = 0;
  PhaseStats cleanup;
  PhaseStats fixup;
  std::size_t restored_pairs = 0;   // pairs whose distance rose and were restored from P
  std::size_t fixup_decreases = 0;  // P counts lowered during fixup; expected 0
  std::size_t heap_order_violations = 0;  // extraction keys going backwards; expected 0

  std::size_t touched() const {
    return cleanup.examined + cleanup.removed + cleanup.added + fixup.examined + fixup.removed +
           fixup.added;
  }
};

// One (x, y, wt) per pair at its first extraction from the fixup heap.
struct FirstExtraction {
  Vid x = 0, y = 0;
  std::int64_t wt = 0;
};

// Runs one vertex update against the tuple system: cleanup removes every
// triple holding a path through v, the graph update is applied, and fixup
// rebuilds the triples through v and restores pairs whose distance rose.
//
// P* is the primary state. A P triple (xa, by) at wt is kept equal to
//   min(sum of P*(a, y) triples (a*, by) at wt - w(x, a),
//       sum of P*(x, b) triples (xa, *b) at wt - w(b, y)),
// which is the exact path count whenever the tuple is locally shortest.
class UpdateEngine {
 public:
  UpdateEngine(DynGraph& g, TupleSystem& ts) : g_(g), ts_(ts) {}

  // Validates `up`, then cleanup, apply, fixup.
  UpdateStats fully_update(const VertexUpdate& up);
  // Cleanup and fixup at v with its weights unchanged.
  UpdateStats refresh(Vid v);

  PhaseStats fully_cleanup(Vid v);
  PhaseStats fully_fixup(Vid v);

  // Distance from P* as of the start of the current cleanup.
  Distance snapshot_distance(Vid x, Vid y) const;

  std::uint32_t update_num() const { return stamp_; }
  void reset_counter() {
    stamp_ = 0;
    first_done_.clear();
  }

  // When enabled, the first fixup extraction of every pair is recorded.
  void set_record_first_extractions(bool on) { record_first_ = on; }
  const std::vector<FirstExtraction>& first_extractions() const { return first_log_; }

  const UpdateStats& last_stats() const { return stats_; }

 private:
  struct Key5 {
    Vid x, a, b, y;
    std::int64_t wt;
    bool operator==(const Key5&) const = default;
  };
  struct CleanupItem {
    Vid a, b;
    Count f;
  };
  struct FixupItem {
    Vid a, b;
  };

  std::int64_t w(Vid u, Vid v) const;
  void begin_update(Vid v);
  void journal(Vid x, Vid y);
  Count derived_count(Vid x, Vid y, Vid a, Vid b, std::int64_t wt) const;
  Count derived_count(Vid x, Vid y, Vid a, Vid b, std::int64_t wt, std::int64_t w_xa,
                      std::int64_t w_by) const;
  void refresh_cb(Vid x, Vid y, TupleSystem::PEntry* e);
  bool promote(Vid x, Vid y, Vid a, Vid b, std::int64_t wt);

  DynGraph& g_;
  TupleSystem& ts_;
  std::uint32_t stamp_ = 0;
  UpdateStats stats_;

  absl::flat_hash_map<std::size_t, std::optional<std::int64_t>> journal_;
  std::uint32_t mark_ = 0;  // current phase mark in PEntry::mark
  std::vector<std::uint32_t> first_done_;

  bool record_first_ = false;
  std::vector<FirstExtraction> first_log_;
};

}  // namespace apasp
