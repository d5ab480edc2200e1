// Copyright (c) apasp contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "apasp/graph.hpp"
#include "apasp/tuple_system.hpp"
#include "apasp/update_engine.hpp"

namespace apasp {

class StepError : public Error {
 public:
  using Error::Error;
};

// Index of the least significant 1-bit of t. Throws StepError for t == 0.
unsigned set_bit(std::uint64_t t);

// For each set bit i of t, t with bits below i cleared; ascending.
std::vector<std::uint64_t> prior_times(std::uint64_t t);

// The insert updates that build `g` from the empty graph: its live vertices
// in id order, each with its edges to the vertices inserted before it.
std::vector<VertexUpdate> build_updates(const DynGraph& g);

enum class RecordKind { kReal, kDummy };

struct UpdateRecord {
  std::uint64_t step = 0;
  Vid v = 0;
  RecordKind kind = RecordKind::kReal;
  UpdateKind update_kind = UpdateKind::kReweight;  // real records only
  std::uint64_t source_step = 0;  // dummy records: the real step being replayed
  bool skipped = false;           // dummy on a vertex that is dead now
  UpdateStats stats;
};

// Step bookkeeping of one epoch, independent of the tuple system.
class History {
 public:
  explicit History(std::size_t n = 0) : last_(n) {}

  void clear();
  std::uint64_t step() const { return real_.size(); }
  Vid real_vertex(std::uint64_t t) const { return real_.at(t - 1); }

  // Real steps t-1, ..., t-(2^set_bit(t) - 1), most recent first.
  std::vector<std::uint64_t> dummy_steps(std::uint64_t t) const;

  void record(const UpdateRecord& r);
  std::optional<std::uint64_t> last_update(Vid v) const { return last_.at(v); }
  const std::vector<UpdateRecord>& records() const { return records_; }

  // Vertices given a real or dummy update at some step in (t1, t2].
  std::vector<Vid> updated_between(std::uint64_t t1, std::uint64_t t2) const;

 private:
  std::vector<Vid> real_;
  std::vector<UpdateRecord> records_;
  std::vector<std::optional<std::uint64_t>> last_;
};

struct SchedulerOptions {
  // Called after every real or dummy vertex update.
  std::function<void(const UpdateRecord&)> on_update;
  // Keep a copy of the graph after every step of the epoch (index = step).
  bool keep_graphs = false;
};

// The fully dynamic driver: each real update is followed by dummy updates on
// the vertices of the last 2^set_bit(t) - 1 real steps, and the epoch is
// rebuilt from scratch after 2n real updates.
class DynamicApasp {
 public:
  explicit DynamicApasp(const DynGraph& g, SchedulerOptions opts = {});
  DynamicApasp(const DynamicApasp&) = delete;
  DynamicApasp& operator=(const DynamicApasp&) = delete;

  const DynGraph& graph() const { return g_; }
  const TupleSystem& tuples() const { return ts_; }
  TupleSystem& mutable_tuples() { return ts_; }
  UpdateEngine& engine() { return engine_; }
  const History& history() const { return history_; }

  std::uint64_t step() const { return history_.step(); }
  std::uint64_t epoch() const { return epoch_; }
  std::uint64_t epoch_limit() const { return 2 * g_.capacity(); }
  std::uint64_t total_dummies() const { return dummies_; }
  std::uint64_t skipped_dummies() const { return skipped_; }
  std::uint64_t real_updates() const { return reals_; }

  // Applies `up` at the next step, resetting the epoch first when it is full.
  std::vector<UpdateRecord> apply(const VertexUpdate& up);
  // Applies `up` at step t; throws StepError unless t == step() + 1.
  std::vector<UpdateRecord> fully_dynamic(const VertexUpdate& up, std::uint64_t t);
  // Rebuilds the tuple system from the current graph by inserting its live
  // vertices one at a time, numbering steps from 1.
  void epoch_reset();

  // Graph as of step t of this epoch (keep_graphs only; step 0 is empty).
  const DynGraph& graph_at(std::uint64_t t) const { return graphs_.at(t); }

  void set_options(SchedulerOptions opts) { opts_ = std::move(opts); }

 private:
  DynGraph g_;
  TupleSystem ts_;
  UpdateEngine engine_;
  History history_;
  SchedulerOptions opts_;
  std::uint64_t epoch_ = 0;
  std::uint64_t dummies_ = 0;
  std::uint64_t skipped_ = 0;
  std::uint64_t reals_ = 0;
  std::vector<DynGraph> graphs_;
};

}  // namespace apasp
