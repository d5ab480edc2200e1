// Copyright (c) apasp contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <queue>
#include <utility>
#include <vector>

#include "apasp/tuple_system.hpp"

namespace apasp {

// Min-heap on (wt, x, y) whose extraction returns every item sharing the
// minimum key, in insertion order.
template <typename Payload>
class KeyedHeap {
 public:
  void push(HeapKey key, Payload payload) {
    q_.push(Item{key, seq_++, std::move(payload)});
    ++ops_;
  }

  bool empty() const { return q_.empty(); }
  std::size_t size() const { return q_.size(); }
  std::size_t ops() const { return ops_; }
  const HeapKey& top_key() const { return q_.top().key; }

  // Throws Error when empty.
  std::pair<HeapKey, std::vector<Payload>> extract_min_set() {
    if (q_.empty()) throw Error("extract_min_set on empty heap");
    HeapKey key = q_.top().key;
    std::vector<Payload> out;
    while (!q_.empty() && q_.top().key == key) {
      out.push_back(q_.top().payload);
      q_.pop();
      ++ops_;
    }
    return {key, std::move(out)};
  }

 private:
  struct Item {
    HeapKey key;
    std::uint64_t seq;
    Payload payload;
    bool operator>(const Item& o) const {
      if (key != o.key) return key > o.key;
      return seq > o.seq;
    }
  };
  std::priority_queue<Item, std::vector<Item>, std::greater<>> q_;
  std::uint64_t seq_ = 0;
  std::size_t ops_ = 0;
};

}  // namespace apasp
