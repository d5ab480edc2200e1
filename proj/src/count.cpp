// Copyright (c) apasp contributors.
// SPDX-License-Identifier: Apache-2.0

#include "apasp/count.hpp"

#include <limits>

#include "apasp/weight.hpp"

namespace apasp {

Count::Count(const BigInt& v) {
  if (v < 0) throw Error("negative count");
  if (v <= std::numeric_limits<std::uint64_t>::max()) {
    small_ = static_cast<std::uint64_t>(v);
  } else {
    big_ = std::make_unique<BigInt>(v);
  }
}

void Count::normalize() {
  if (big_ && *big_ <= std::numeric_limits<std::uint64_t>::max()) {
    small_ = static_cast<std::uint64_t>(*big_);
    big_.reset();
  }
}

Count& Count::operator+=(const Count& o) {
  if (!big_ && !o.big_) {
    std::uint64_t r;
    if (!__builtin_add_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  BigInt sum = to_big() + o.to_big();
  big_ = std::make_unique<BigInt>(std::move(sum));
  small_ = 0;
  normalize();
  return *this;
}

Count& Count::operator-=(const Count& o) {
  if (!big_ && !o.big_) {
    if (o.small_ > small_) throw Error("count underflow");
    small_ -= o.small_;
    return *this;
  }
  BigInt diff = to_big() - o.to_big();
  if (diff < 0) throw Error("count underflow");
  big_ = std::make_unique<BigInt>(std::move(diff));
  small_ = 0;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Count& a, const Count& b) {
  if (a.big_ || b.big_) {
    BigInt x = a.to_big();
    BigInt y = b.to_big();
    if (x < y) return std::strong_ordering::less;
    if (x > y) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  return a.small_ <=> b.small_;
}

std::string Count::str() const { return big_ ? big_->str() : std::to_string(small_); }

}  // namespace apasp
