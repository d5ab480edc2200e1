// Copyright (c) apasp contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <memory>
#include <string>

namespace apasp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Non-negative path count. Values that fit in 64 bits are stored inline;
// larger ones spill to a heap-allocated BigInt. Shortest-path counts grow
// exponentially on meshes, so no fixed width is enough, but nearly all counts
// are small and this keeps stored triples compact.
class Count {
 public:
  Count() = default;
  Count(std::uint64_t v) : small_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Count(const BigInt& v);

  Count(const Count& o) : small_(o.small_) {
    if (o.big_) big_ = std::make_unique<BigInt>(*o.big_);
  }
  Count(Count&&) noexcept = default;
  Count& operator=(const Count& o) {
    if (this != &o) {
      small_ = o.small_;
      big_ = o.big_ ? std::make_unique<BigInt>(*o.big_) : nullptr;
    }
    return *this;
  }
  Count& operator=(Count&&) noexcept = default;

  bool is_zero() const { return !big_ && small_ == 0; }
  bool is_big() const { return big_ != nullptr; }

  Count& operator+=(const Count& o);
  // Throws Error if the result would be negative.
  Count& operator-=(const Count& o);

  friend Count operator+(Count a, const Count& b) { return a += b; }
  friend Count operator-(Count a, const Count& b) { return a -= b; }

  friend bool operator==(const Count& a, const Count& b) {
    if (a.big_ || b.big_) return a.to_big() == b.to_big();
    return a.small_ == b.small_;
  }
  friend std::strong_ordering operator<=>(const Count& a, const Count& b);

  BigInt to_big() const { return big_ ? *big_ : BigInt(small_); }
  std::string str() const;

 private:
  void normalize();

  std::uint64_t small_ = 0;
  std::unique_ptr<BigInt> big_;
};

inline const Count& min(const Count& a, const Count& b) { return b < a ? b : a; }

}  // namespace apasp
