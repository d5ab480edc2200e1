// Copyright (c) apasp contributors.
// SPDX-License-Identifier: Apache-2.0

#include "apasp/graph.hpp"

#include <unordered_set>

namespace apasp {

std::string to_string(UpdateKind k) {
  switch (k) {
    case UpdateKind::kInsert:
      return "insert";
    case UpdateKind::kDelete:
      return "delete";
    case UpdateKind::kReweight:
      return "reweight";
  }
  return "?";
}

DynGraph::DynGraph(std::size_t n, bool alive)
    : alive_(n, alive ? 1 : 0), out_(n), in_(n), live_(alive ? n : 0) {
  if (n >= (1u << 16)) throw GraphError("vertex capacity must be below 65536");
}

void DynGraph::check_vertex(Vid v) const {
  if (v >= alive_.size()) throw GraphError("vertex " + std::to_string(v) + " out of range");
}

void DynGraph::add_edge(Vid u, Vid v, Weight w) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw GraphError("self-loop on vertex " + std::to_string(u));
  if (w.raw() <= 0) throw GraphError("non-positive weight on edge " + std::to_string(u) + "->" +
                                     std::to_string(v));
  if (!alive_[u] || !alive_[v]) throw GraphError("edge touches a dead vertex");
  if (out_[u].contains(v)) {
    throw GraphError("parallel edge " + std::to_string(u) + "->" + std::to_string(v));
  }
  out_[u].emplace(v, w);
  in_[v].emplace(u, w);
  ++m_;
}

void DynGraph::remove_edge(Vid u, Vid v) {
  check_vertex(u);
  check_vertex(v);
  if (out_[u].erase(v) != 0) {
    in_[v].erase(u);
    --m_;
  }
}

void DynGraph::set_alive(Vid v, bool alive) {
  check_vertex(v);
  if (static_cast<bool>(alive_[v]) == alive) return;
  if (!alive) {
    for (auto [u, w] : Adjacency(out_[v])) remove_edge(v, u);
    for (auto [u, w] : Adjacency(in_[v])) remove_edge(u, v);
  }
  alive_[v] = alive ? 1 : 0;
  live_ += alive ? 1 : -1;
}

void DynGraph::validate(const VertexUpdate& up) const {
  check_vertex(up.v);
  const std::string vs = std::to_string(up.v);
  switch (up.kind) {
    case UpdateKind::kInsert:
      if (alive_[up.v]) throw GraphError("insert of live vertex " + vs);
      break;
    case UpdateKind::kDelete:
      if (!alive_[up.v]) throw GraphError("delete of dead vertex " + vs);
      return;
    case UpdateKind::kReweight:
      if (!alive_[up.v]) throw GraphError("reweight of dead vertex " + vs);
      break;
  }
  for (const auto* list : {&up.out, &up.in}) {
    std::unordered_set<Vid> seen;
    for (const auto& c : *list) {
      check_vertex(c.u);
      if (c.u == up.v) throw GraphError("self-loop on vertex " + vs);
      if (!alive_[c.u]) {
        throw GraphError("edge from " + vs + " to dead vertex " + std::to_string(c.u));
      }
      if (!seen.insert(c.u).second) {
        throw GraphError("parallel edge between " + vs + " and " + std::to_string(c.u));
      }
      if (c.w && c.w->raw() <= 0) throw GraphError("non-positive weight at vertex " + vs);
    }
  }
}

void DynGraph::apply(const VertexUpdate& up) {
  validate(up);
  if (up.kind == UpdateKind::kDelete) {
    set_alive(up.v, false);
    return;
  }
  if (up.kind == UpdateKind::kInsert) set_alive(up.v, true);
  for (const auto& c : up.out) {
    remove_edge(up.v, c.u);
    if (c.w) add_edge(up.v, c.u, *c.w);
  }
  for (const auto& c : up.in) {
    remove_edge(c.u, up.v);
    if (c.w) add_edge(c.u, up.v, *c.w);
  }
}

std::vector<Edge> DynGraph::edges() const {
  std::vector<Edge> res;
  res.reserve(m_);
  for (Vid u = 0; u < out_.size(); ++u) {
    for (auto [v, w] : out_[u]) res.push_back({u, v, w});
  }
  return res;
}

std::vector<Vid> DynGraph::live_vertices() const {
  std::vector<Vid> res;
  for (Vid v = 0; v < alive_.size(); ++v) {
    if (alive_[v]) res.push_back(v);
  }
  return res;
}

}  // namespace apasp
