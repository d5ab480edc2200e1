// Copyright (c) apasp contributors.
// SPDX-License-Identifier: Apache-2.0

// Text formats. Every file starts with a versioned header line; '#' starts a
// comment line.
//
// Graph:                      Trace:
//   apasp-graph 1               apasp-trace 1
//   n <count>                   step <t> reweight <v> [out <u> <w>]... [in <u> <w>]...
//   e <u> <v> <w>               step <t> insert <v> [out <u> <w>]... [in <u> <w>]...
//   d <v>   (vertex absent)     step <t> delete <v>
//
// In a reweight, a weight of "-" removes the edge. `out u w` is the edge
// v->u and `in u w` is u->v.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "apasp/graph.hpp"
#include "apasp/weight.hpp"

namespace apasp {

inline constexpr int kFormatVersion = 1;

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct TraceStep {
  std::uint64_t step = 0;
  VertexUpdate up;

  bool operator==(const TraceStep&) const = default;
};

// `version` is the required header version, or 0 to accept any supported one.
DynGraph parse_graph(std::istream& in, const WeightScale& scale, int version = 0);
void write_graph(std::ostream& out, const DynGraph& g, const WeightScale& scale);

// Steps must be numbered 1, 2, 3, ... in order.
std::vector<TraceStep> parse_trace(std::istream& in, const WeightScale& scale, int version = 0);
void write_trace(std::ostream& out, const std::vector<TraceStep>& trace, const WeightScale& scale);
std::string format_step(const TraceStep& s, const WeightScale& scale);

DynGraph load_graph(const std::string& path, const WeightScale& scale, int version = 0);
std::vector<TraceStep> load_trace(const std::string& path, const WeightScale& scale,
                                  int version = 0);

}  // namespace apasp
