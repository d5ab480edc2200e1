// Copyright (c) apasp contributors.
// SPDX-License-Identifier: Apache-2.0

#include "apasp/scheduler.hpp"

#include <algorithm>
#include <bit>

namespace apasp {

unsigned set_bit(std::uint64_t t) {
  if (t == 0) throw StepError("set_bit(0) is undefined");
  return static_cast<unsigned>(std::countr_zero(t));
}

std::vector<std::uint64_t> prior_times(std::uint64_t t) {
  if (t == 0) throw StepError("prior_times(0) is undefined");
  std::vector<std::uint64_t> out;
  for (unsigned i = 64; i-- > 0;) {
    if ((t >> i) & 1u) out.push_back(i == 0 ? t : (t >> i) << i);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void History::clear() {
  real_.clear();
  records_.clear();
  std::fill(last_.begin(), last_.end(), std::nullopt);
}

std::vector<std::uint64_t> History::dummy_steps(std::uint64_t t) const {
  const std::uint64_t span = (std::uint64_t{1} << set_bit(t)) - 1;
  std::vector<std::uint64_t> out;
  for (std::uint64_t j = 1; j <= span && j < t; ++j) out.push_back(t - j);
  return out;
}

void History::record(const UpdateRecord& r) {
  if (r.kind == RecordKind::kReal) {
    if (r.step != real_.size() + 1) throw StepError("real update out of order");
    real_.push_back(r.v);
  }
  if (!r.skipped) last_.at(r.v) = r.step;
  records_.push_back(r);
}

std::vector<Vid> History::updated_between(std::uint64_t t1, std::uint64_t t2) const {
  std::vector<Vid> out;
  for (const auto& r : records_) {
    if (!r.skipped && r.step > t1 && r.step <= t2) out.push_back(r.v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<VertexUpdate> build_updates(const DynGraph& g) {
  std::vector<VertexUpdate> out;
  std::vector<char> added(g.capacity(), 0);
  for (Vid v : g.live_vertices()) {
    VertexUpdate up;
    up.v = v;
    up.kind = UpdateKind::kInsert;
    for (auto [u, w] : g.out(v)) {
      if (added[u]) up.out.push_back({u, w});
    }
    for (auto [u, w] : g.in(v)) {
      if (added[u]) up.in.push_back({u, w});
    }
    added[v] = 1;
    out.push_back(std::move(up));
  }
  return out;
}

DynamicApasp::DynamicApasp(const DynGraph& g, SchedulerOptions opts)
    : g_(g), ts_(g.capacity()), engine_(g_, ts_), history_(g.capacity()), opts_(std::move(opts)) {
  epoch_reset();
}

void DynamicApasp::epoch_reset() {
  const DynGraph target = g_;
  g_ = DynGraph(target.capacity(), false);
  ts_.clear();
  history_.clear();
  engine_.reset_counter();
  graphs_.clear();
  if (opts_.keep_graphs) graphs_.push_back(g_);
  ++epoch_;
  for (const VertexUpdate& up : build_updates(target)) fully_dynamic(up, history_.step() + 1);
}

std::vector<UpdateRecord> DynamicApasp::apply(const VertexUpdate& up) {
  g_.validate(up);
  if (history_.step() >= epoch_limit()) epoch_reset();
  return fully_dynamic(up, history_.step() + 1);
}

std::vector<UpdateRecord> DynamicApasp::fully_dynamic(const VertexUpdate& up, std::uint64_t t) {
  if (t != history_.step() + 1) {
    throw StepError("step " + std::to_string(t) + " out of order; expected " +
                    std::to_string(history_.step() + 1));
  }
  std::vector<UpdateRecord> out;
  UpdateRecord real;
  real.step = t;
  real.v = up.v;
  real.kind = RecordKind::kReal;
  real.update_kind = up.kind;
  real.stats = engine_.fully_update(up);
  history_.record(real);
  ++reals_;
  out.push_back(real);
  if (opts_.on_update) opts_.on_update(real);

  for (std::uint64_t src : history_.dummy_steps(t)) {
    UpdateRecord d;
    d.step = t;
    d.v = history_.real_vertex(src);
    d.kind = RecordKind::kDummy;
    d.source_step = src;
    ++dummies_;
    if (!g_.alive(d.v)) {
      d.skipped = true;
      ++skipped_;
    } else {
      d.stats = engine_.refresh(d.v);
    }
    history_.record(d);
    out.push_back(d);
    if (opts_.on_update) opts_.on_update(d);
  }
  if (opts_.keep_graphs) graphs_.push_back(g_);
  return out;
}

}  // namespace apasp
