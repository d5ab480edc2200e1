// Copyright (c) apasp contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/container/flat_map.hpp>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "apasp/weight.hpp"

namespace apasp {

class GraphError : public Error {
 public:
  using Error::Error;
};

enum class UpdateKind { kInsert, kDelete, kReweight };

std::string to_string(UpdateKind k);

// New weight for one edge incident to the updated vertex; nullopt removes it.
struct EdgeChange {
  Vid u = 0;
  std::optional<Weight> w;

  bool operator==(const EdgeChange&) const = default;
};

// A vertex update. For kReweight and kInsert, `out` lists edges v->u and `in`
// lists edges u->v. kDelete removes every incident edge and ignores both.
// A reweight may raise some weights and lower others.
struct VertexUpdate {
  Vid v = 0;
  UpdateKind kind = UpdateKind::kReweight;
  std::vector<EdgeChange> out;
  std::vector<EdgeChange> in;

  bool operator==(const VertexUpdate&) const = default;
};

struct Edge {
  Vid u = 0;
  Vid v = 0;
  Weight w;

  bool operator==(const Edge&) const = default;
};

// Directed graph over a fixed id space [0, capacity). Deleted vertices keep
// their id (dead flag) until the owner rebuilds; no parallel edges or loops.
class DynGraph {
 public:
  using Adjacency = boost::container::flat_map<Vid, Weight>;

  DynGraph() = default;
  // All `n` vertices start alive unless `alive` is false.
  explicit DynGraph(std::size_t n, bool alive = true);

  std::size_t capacity() const { return alive_.size(); }
  std::size_t live_count() const { return live_; }
  std::size_t edge_count() const { return m_; }
  bool alive(Vid v) const { return v < alive_.size() && alive_[v]; }

  std::optional<Weight> weight(Vid u, Vid v) const {
    auto it = out_[u].find(v);
    if (it == out_[u].end()) return std::nullopt;
    return it->second;
  }
  const Adjacency& out(Vid v) const { return out_[v]; }
  const Adjacency& in(Vid v) const { return in_[v]; }

  void add_edge(Vid u, Vid v, Weight w);
  void remove_edge(Vid u, Vid v);
  void set_alive(Vid v, bool alive);

  // Throws GraphError if the update is malformed for the current graph.
  void validate(const VertexUpdate& up) const;
  void apply(const VertexUpdate& up);

  std::vector<Edge> edges() const;
  std::vector<Vid> live_vertices() const;

  bool operator==(const DynGraph& o) const {
    return alive_ == o.alive_ && out_ == o.out_;
  }

 private:
  void check_vertex(Vid v) const;

  std::vector<char> alive_;
  std::vector<Adjacency> out_;
  std::vector<Adjacency> in_;
  std::size_t live_ = 0;
  std::size_t m_ = 0;
};

}  // namespace apasp
