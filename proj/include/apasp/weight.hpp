// Copyright (c) apasp contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace apasp {

using Vid = std::uint32_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Strictly positive edge weight stored as a scaled integer. The scale (the
// number of units per 1.0) is fixed per run; arithmetic is exact.
class Weight {
 public:
  constexpr Weight() = default;
  constexpr explicit Weight(std::int64_t raw) : raw_(raw) {}

  constexpr std::int64_t raw() const { return raw_; }

  constexpr auto operator<=>(const Weight&) const = default;
  constexpr Weight operator+(Weight o) const { return Weight(raw_ + o.raw_); }
  constexpr Weight operator-(Weight o) const { return Weight(raw_ - o.raw_); }
  constexpr Weight& operator+=(Weight o) {
    raw_ += o.raw_;
    return *this;
  }

 private:
  std::int64_t raw_ = 0;
};

// A distance is a Weight or infinity. Infinity compares greater than every
// finite value.
class Distance {
 public:
  constexpr Distance() = default;  // infinite
  constexpr Distance(Weight w) : w_(w) {}  // NOLINT(google-explicit-constructor)

  static constexpr Distance infinite() { return Distance(); }

  constexpr bool finite() const { return w_.has_value(); }
  constexpr Weight value() const {
    if (!w_) throw Error("infinite distance has no value");
    return *w_;
  }

  constexpr bool operator==(const Distance&) const = default;
  constexpr std::strong_ordering operator<=>(const Distance& o) const {
    if (!w_ || !o.w_) return static_cast<int>(!w_) <=> static_cast<int>(!o.w_);
    return *w_ <=> *o.w_;
  }

 private:
  std::optional<Weight> w_;
};

// Converts between decimal text and scaled weights.
class WeightScale {
 public:
  explicit WeightScale(std::int64_t denominator = 1000);

  std::int64_t denominator() const { return den_; }

  // Parses a non-negative decimal ("3", "2.5", "0.125"). Throws Error if the
  // value is not exactly representable at this scale or is out of range.
  std::int64_t parse_raw(std::string_view text) const;
  // Parses an edge weight; rejects zero.
  Weight parse(std::string_view text) const;

  std::string format(Weight w) const;
  std::string format(const Distance& d) const;

 private:
  std::int64_t den_;
};

}  // namespace apasp
