// Copyright (c) apasp contributors.
// SPDX-License-Identifier: Apache-2.0

#include "apasp/weight.hpp"

#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

namespace apasp {

namespace {

// Weights are summed along paths; keep single weights far from overflow.
constexpr std::int64_t kMaxRaw = std::int64_t{1} << 40;

}  // namespace

WeightScale::WeightScale(std::int64_t denominator) : den_(denominator) {
  if (den_ <= 0 || den_ > 1'000'000'000) throw Error("weight scale must be in [1, 1e9]");
}

std::int64_t WeightScale::parse_raw(std::string_view text) const {
  if (text.empty()) throw Error("empty weight");
  std::int64_t whole = 0;
  std::int64_t num = 0;
  std::int64_t den = 1;
  bool seen_dot = false;
  bool any_digit = false;
  for (char c : text) {
    if (c == '.') {
      if (seen_dot) throw Error("malformed weight '" + std::string(text) + "'");
      seen_dot = true;
      continue;
    }
    if (c < '0' || c > '9') throw Error("malformed weight '" + std::string(text) + "'");
    any_digit = true;
    int d = c - '0';
    if (!seen_dot) {
      if (whole > kMaxRaw) throw Error("weight out of range '" + std::string(text) + "'");
      whole = whole * 10 + d;
    } else {
      if (den > std::numeric_limits<std::int64_t>::max() / 100) {
        if (d != 0) throw Error("weight '" + std::string(text) + "' not representable at scale");
        continue;
      }
      num = num * 10 + d;
      den *= 10;
    }
  }
  if (!any_digit) throw Error("malformed weight '" + std::string(text) + "'");
  if (whole > kMaxRaw / den_) throw Error("weight out of range '" + std::string(text) + "'");
  // fractional part num/den must be a multiple of 1/den_
  boost::multiprecision::cpp_int scaled = boost::multiprecision::cpp_int(num) * den_;
  if (scaled % den != 0) {
    throw Error("weight '" + std::string(text) + "' not representable at scale 1/" +
                std::to_string(den_));
  }
  std::int64_t raw = whole * den_ + static_cast<std::int64_t>(scaled / den);
  if (raw > kMaxRaw) throw Error("weight out of range '" + std::string(text) + "'");
  return raw;
}

Weight WeightScale::parse(std::string_view text) const {
  std::int64_t raw = parse_raw(text);
  if (raw <= 0) throw Error("edge weight must be positive: '" + std::string(text) + "'");
  return Weight(raw);
}

std::string WeightScale::format(Weight w) const {
  std::int64_t raw = w.raw();
  std::string out;
  if (raw < 0) {
    out = "-";
    raw = -raw;
  }
  out += std::to_string(raw / den_);
  std::int64_t frac = raw % den_;
  if (frac != 0) {
    std::string digits;
    std::int64_t d = den_;
    // emit enough digits for an exact decimal when den_ is a power of ten,
    // otherwise fall back to a fraction
    std::int64_t p = 1;
    while (p < den_) p *= 10;
    if (p == den_) {
      while (d > 1) {
        d /= 10;
        digits += static_cast<char>('0' + (frac / d) % 10);
      }
      while (!digits.empty() && digits.back() == '0') digits.pop_back();
      out += "." + digits;
    } else {
      out = (w.raw() < 0 ? "-" : "") + std::to_string(raw) + "/" + std::to_string(den_);
    }
  }
  return out;
}

std::string WeightScale::format(const Distance& d) const {
  return d.finite() ? format(d.value()) : std::string("inf");
}

}  // namespace apasp
