// Copyright (c) apasp contributors.
// SPDX-License-Identifier: Apache-2.0

#include "apasp/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace apasp {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

std::uint64_t parse_uint(const std::string& s, std::size_t line, const char* what) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) {
    throw ParseError(line, std::string("bad ") + what + " '" + s + "'");
  }
  return v;
}

Vid parse_vid(const std::string& s, std::size_t line) {
  std::uint64_t v = parse_uint(s, line, "vertex id");
  if (v >= (1u << 16)) throw ParseError(line, "vertex id out of range '" + s + "'");
  return static_cast<Vid>(v);
}

Weight parse_weight(const std::string& s, const WeightScale& scale, std::size_t line) {
  try {
    return scale.parse(s);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(line, e.what());
  }
}

// Reads the optional header; returns true if `line` was the header.
bool header(const std::vector<std::string>& tok, const char* magic, int version,
            std::size_t line) {
  if (tok.empty() || tok[0] != magic) return false;
  if (tok.size() != 2) throw ParseError(line, std::string("malformed ") + magic + " header");
  int v = static_cast<int>(parse_uint(tok[1], line, "format version"));
  if (v != kFormatVersion) {
    throw ParseError(line, "unsupported format version " + std::to_string(v));
  }
  if (version != 0 && v != version) {
    throw ParseError(line, "format version " + std::to_string(v) + " does not match requested " +
                               std::to_string(version));
  }
  return true;
}

template <typename Fn>
void for_lines(std::istream& in, Fn fn) {
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    auto tok = split(line);
    if (tok.empty()) continue;
    fn(tok, no);
  }
}

}  // namespace

DynGraph parse_graph(std::istream& in, const WeightScale& scale, int version) {
  if (version != 0 && version != kFormatVersion) {
    throw ParseError(0, "unsupported format version " + std::to_string(version));
  }
  DynGraph g;
  bool have_n = false;
  bool first = true;
  for_lines(in, [&](const std::vector<std::string>& tok, std::size_t no) {
    if (first) {
      first = false;
      if (header(tok, "apasp-graph", version, no)) return;
    }
    if (tok[0] == "n") {
      if (have_n) throw ParseError(no, "duplicate 'n' line");
      if (tok.size() != 2) throw ParseError(no, "expected 'n <count>'");
      std::uint64_t n = parse_uint(tok[1], no, "vertex count");
      if (n >= (1u << 16)) throw ParseError(no, "vertex count must be below 65536");
      g = DynGraph(n);
      have_n = true;
      return;
    }
    if (!have_n) throw ParseError(no, "expected 'n <count>' before other records");
    try {
      if (tok[0] == "e") {
        if (tok.size() != 4) throw ParseError(no, "expected 'e <u> <v> <w>'");
        g.add_edge(parse_vid(tok[1], no), parse_vid(tok[2], no), parse_weight(tok[3], scale, no));
      } else if (tok[0] == "d") {
        if (tok.size() != 2) throw ParseError(no, "expected 'd <v>'");
        Vid v = parse_vid(tok[1], no);
        if (v >= g.capacity()) throw ParseError(no, "vertex out of range");
        if (!g.out(v).empty() || !g.in(v).empty()) {
          throw ParseError(no, "absent vertex " + tok[1] + " has edges");
        }
        g.set_alive(v, false);
      } else {
        throw ParseError(no, "unknown record '" + tok[0] + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(no, e.what());
    }
  });
  if (!have_n) throw ParseError(0, "missing 'n <count>' line");
  // edges to absent vertices are rejected by add_edge once the vertex is dead;
  // catch the other order too
  return g;
}

void write_graph(std::ostream& out, const DynGraph& g, const WeightScale& scale) {
  out << "apasp-graph " << kFormatVersion << '\n';
  out << "n " << g.capacity() << '\n';
  for (Vid v = 0; v < g.capacity(); ++v) {
    if (!g.alive(v)) out << "d " << v << '\n';
  }
  for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << ' ' << scale.format(e.w) << '\n';
}

std::vector<TraceStep> parse_trace(std::istream& in, const WeightScale& scale, int version) {
  if (version != 0 && version != kFormatVersion) {
    throw ParseError(0, "unsupported format version " + std::to_string(version));
  }
  std::vector<TraceStep> trace;
  bool first = true;
  for_lines(in, [&](const std::vector<std::string>& tok, std::size_t no) {
    if (first) {
      first = false;
      if (header(tok, "apasp-trace", version, no)) return;
    }
    if (tok[0] != "step" || tok.size() < 4) throw ParseError(no, "expected 'step <t> <kind> <v> ...'");
    TraceStep s;
    s.step = parse_uint(tok[1], no, "step");
    if (s.step != trace.size() + 1) {
      throw ParseError(no, "step " + tok[1] + " out of order; expected " +
                               std::to_string(trace.size() + 1));
    }
    if (tok[2] == "reweight") {
      s.up.kind = UpdateKind::kReweight;
    } else if (tok[2] == "insert") {
      s.up.kind = UpdateKind::kInsert;
    } else if (tok[2] == "delete") {
      s.up.kind = UpdateKind::kDelete;
    } else {
      throw ParseError(no, "unknown update kind '" + tok[2] + "'");
    }
    s.up.v = parse_vid(tok[3], no);
    if (s.up.kind == UpdateKind::kDelete) {
      if (tok.size() != 4) throw ParseError(no, "delete takes no edges");
    } else {
      if ((tok.size() - 4) % 3 != 0) throw ParseError(no, "edge entries are 'out|in <u> <w>'");
      for (std::size_t i = 4; i < tok.size(); i += 3) {
        EdgeChange c;
        c.u = parse_vid(tok[i + 1], no);
        if (tok[i + 2] == "-") {
          if (s.up.kind == UpdateKind::kInsert) throw ParseError(no, "insert cannot remove edges");
        } else {
          c.w = parse_weight(tok[i + 2], scale, no);
        }
        if (tok[i] == "out") {
          s.up.out.push_back(c);
        } else if (tok[i] == "in") {
          s.up.in.push_back(c);
        } else {
          throw ParseError(no, "expected 'out' or 'in', got '" + tok[i] + "'");
        }
      }
    }
    trace.push_back(std::move(s));
  });
  return trace;
}

std::string format_step(const TraceStep& s, const WeightScale& scale) {
  std::ostringstream out;
  out << "step " << s.step << ' ' << to_string(s.up.kind) << ' ' << s.up.v;
  if (s.up.kind != UpdateKind::kDelete) {
    for (const auto& c : s.up.out) out << " out " << c.u << ' ' << (c.w ? scale.format(*c.w) : "-");
    for (const auto& c : s.up.in) out << " in " << c.u << ' ' << (c.w ? scale.format(*c.w) : "-");
  }
  return out.str();
}

void write_trace(std::ostream& out, const std::vector<TraceStep>& trace, const WeightScale& scale) {
  out << "apasp-trace " << kFormatVersion << '\n';
  for (const auto& s : trace) out << format_step(s, scale) << '\n';
}

DynGraph load_graph(const std::string& path, const WeightScale& scale, int version) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open graph file '" + path + "'");
  return parse_graph(in, scale, version);
}

std::vector<TraceStep> load_trace(const std::string& path, const WeightScale& scale,
                                  int version) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open trace file '" + path + "'");
  return parse_trace(in, scale, version);
}

}  // namespace apasp
