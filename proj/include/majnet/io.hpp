// Copyright 2026 The majnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/// \file
/// \brief Line-oriented text formats: networks, circuits, traces, witnesses,
/// and machines.  Parsers report 1-based line numbers; serializers emit a
/// canonical form that round-trips to the identical string.

#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "majnet/circuit.hpp"
#include "majnet/common.hpp"
#include "majnet/config.hpp"
#include "majnet/net.hpp"
#include "majnet/turing.hpp"
#include "majnet/witness.hpp"

namespace majnet {

namespace detail {

/// One significant input line: number, keyword, and remaining tokens.
struct text_line {
  int number = 0;
  std::string keyword;
  std::vector<std::string> args;
  std::string rest;  //!< everything after the keyword, untokenized
};

/// Splits text into significant lines, dropping blanks and # comments.
inline std::vector<text_line> significant_lines(const std::string& text) {
  std::vector<text_line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::string line = raw;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    text_line tl;
    tl.number = number;
    if (!(ls >> tl.keyword)) continue;
    auto after = line.find(tl.keyword) + tl.keyword.size();
    auto first = line.find_first_not_of(" \t", after);
    tl.rest = first == std::string::npos ? std::string() : line.substr(first);
    // strip trailing whitespace from rest
    while (!tl.rest.empty() && (tl.rest.back() == ' ' || tl.rest.back() == '\t' ||
                                tl.rest.back() == '\r'))
      tl.rest.pop_back();
    std::string tok;
    while (ls >> tok) tl.args.push_back(tok);
    out.push_back(std::move(tl));
  }
  return out;
}

inline std::int64_t parse_int(const text_line& l, const std::string& tok, const char* what) {
  std::size_t used = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(tok, &used);
  } catch (const std::exception&) {
    throw parse_error(l.number, std::string(what) + ": not an integer: " + tok);
  }
  if (used != tok.size())
    throw parse_error(l.number, std::string(what) + ": not an integer: " + tok);
  return value;
}

inline std::int64_t arg_int(const text_line& l, std::size_t idx, const char* what) {
  if (idx >= l.args.size())
    throw parse_error(l.number, std::string("missing ") + what);
  return parse_int(l, l.args[idx], what);
}

inline void expect_args(const text_line& l, std::size_t count) {
  if (l.args.size() != count)
    throw parse_error(l.number, "expected " + std::to_string(count) + " arguments after '" +
                                    l.keyword + "', got " + std::to_string(l.args.size()));
}

}  // namespace detail

/// A parsed network file: the network plus its declared start and target.
struct network_file {
  network net;
  config x0{0};
  std::int32_t target = -1;
};

/// \brief Parses the `nodes/rule/edge/block/init/clock/target` format.
///
/// The `nodes` line must come first; everything else may appear in any
/// order.  Defaults: rule majority, every vertex in block 1, all-zero
/// start, no clocks, no target.  Duplicate edges (in either orientation)
/// and repeated declarations are line-numbered errors.
inline network_file parse_network(const std::string& text) {
  auto lines = detail::significant_lines(text);
  if (lines.empty()) throw parse_error(1, "empty network file");
  if (lines.front().keyword != "nodes")
    throw parse_error(lines.front().number, "network files must start with 'nodes <n>'");

  std::int32_t n = -1;
  rule rl = rule::majority();
  bool rule_seen = false;
  std::vector<std::pair<std::int32_t, std::int32_t>> edges;
  std::set<std::pair<std::int32_t, std::int32_t>> edge_set;
  std::map<std::int32_t, std::int32_t> block_lines;  // vertex -> label
  std::map<std::int32_t, bool> init_lines;
  std::map<std::int32_t, clock_word> clock_lines;
  std::int32_t target = -1;

  for (const auto& l : lines) {
    if (l.keyword == "nodes") {
      if (n >= 0) throw parse_error(l.number, "duplicate 'nodes' line");
      detail::expect_args(l, 1);
      std::int64_t v = detail::arg_int(l, 0, "vertex count");
      if (v < 0 || v > 100'000'000) throw parse_error(l.number, "vertex count out of range");
      n = static_cast<std::int32_t>(v);
    } else if (l.keyword == "rule") {
      if (rule_seen) throw parse_error(l.number, "duplicate 'rule' line");
      rule_seen = true;
      if (l.args.size() == 1 && l.args[0] == "majority") {
        rl = rule::majority();
      } else if (l.args.size() == 2 && l.args[0] == "portion") {
        auto slash = l.args[1].find('/');
        if (slash == std::string::npos)
          throw parse_error(l.number, "portion rule needs the form a/b");
        std::int64_t a = detail::parse_int(l, l.args[1].substr(0, slash), "portion numerator");
        std::int64_t b = detail::parse_int(l, l.args[1].substr(slash + 1), "portion denominator");
        try {
          rl = rule::portion(a, b);
        } catch (const validation_error& e) {
          throw parse_error(l.number, e.what());
        }
      } else {
        throw parse_error(l.number, "rule must be 'majority' or 'portion a/b'");
      }
    } else if (l.keyword == "edge") {
      detail::expect_args(l, 2);
      std::int64_t u = detail::arg_int(l, 0, "edge endpoint");
      std::int64_t v = detail::arg_int(l, 1, "edge endpoint");
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw parse_error(l.number, "edge endpoint out of range");
      if (u == v) throw parse_error(l.number, "self-loops are not allowed");
      auto lo = static_cast<std::int32_t>(std::min(u, v));
      auto hi = static_cast<std::int32_t>(std::max(u, v));
      if (!edge_set.insert({lo, hi}).second) throw parse_error(l.number, "duplicate edge");
      edges.emplace_back(static_cast<std::int32_t>(u), static_cast<std::int32_t>(v));
    } else if (l.keyword == "block") {
      detail::expect_args(l, 2);
      std::int64_t v = detail::arg_int(l, 0, "vertex");
      std::int64_t k = detail::arg_int(l, 1, "block label");
      if (v < 0 || v >= n) throw parse_error(l.number, "vertex out of range");
      if (k < 1) throw parse_error(l.number, "block labels are positive");
      if (!block_lines.emplace(static_cast<std::int32_t>(v), static_cast<std::int32_t>(k)).second)
        throw parse_error(l.number, "vertex already assigned a block");
    } else if (l.keyword == "init") {
      detail::expect_args(l, 2);
      std::int64_t v = detail::arg_int(l, 0, "vertex");
      std::int64_t bit = detail::arg_int(l, 1, "initial value");
      if (v < 0 || v >= n) throw parse_error(l.number, "vertex out of range");
      if (bit != 0 && bit != 1) throw parse_error(l.number, "initial values are 0 or 1");
      if (!init_lines.emplace(static_cast<std::int32_t>(v), bit == 1).second)
        throw parse_error(l.number, "vertex already initialized");
    } else if (l.keyword == "clock") {
      detail::expect_args(l, 2);
      std::int64_t v = detail::arg_int(l, 0, "vertex");
      if (v < 0 || v >= n) throw parse_error(l.number, "vertex out of range");
      clock_word w;
      try {
        w = clock_word::parse(l.args[1]);
      } catch (const validation_error& e) {
        throw parse_error(l.number, e.what());
      }
      if (!clock_lines.emplace(static_cast<std::int32_t>(v), w).second)
        throw parse_error(l.number, "vertex already clocked");
    } else if (l.keyword == "target") {
      detail::expect_args(l, 1);
      if (target >= 0) throw parse_error(l.number, "duplicate 'target' line");
      std::int64_t v = detail::arg_int(l, 0, "target vertex");
      if (v < 0 || v >= n) throw parse_error(l.number, "target out of range");
      target = static_cast<std::int32_t>(v);
    } else {
      throw parse_error(l.number, "unknown keyword '" + l.keyword + "'");
    }
  }

  network_file out;
  out.net.g = graph::from_edges(n, edges);
  std::vector<std::int32_t> labels(n, 1);
  for (auto [v, k] : block_lines) labels[v] = k;
  out.net.scheme = n == 0 ? update_scheme() : normalize_scheme(labels);
  out.net.r = rl;
  if (!clock_lines.empty()) {
    out.net.clocks.assign(n, clock_word{});
    for (auto [v, w] : clock_lines) out.net.clocks[v] = w;
  }
  out.net.validate();
  out.x0 = config(n);
  for (auto [v, bit] : init_lines) out.x0.set(v, bit);
  out.target = target;
  return out;
}

/// \brief Canonical serialization: sorted edges, a block line for every
/// vertex, init lines only for active vertices, clock lines only for
/// non-free words.  parse(serialize(f)) reproduces f exactly.
inline std::string serialize_network(const network_file& f) {
  const std::int32_t n = f.net.n();
  std::ostringstream out;
  out << "nodes " << n << "\n";
  if (f.net.r.kind == rule_kind::majority)
    out << "rule majority\n";
  else
    out << "rule portion " << f.net.r.num << "/" << f.net.r.den << "\n";
  auto edges = f.net.g.edges();
  for (auto& e : edges)
    if (e.first > e.second) std::swap(e.first, e.second);
  std::sort(edges.begin(), edges.end());
  for (auto [u, v] : edges) out << "edge " << u << " " << v << "\n";
  for (std::int32_t v = 0; v < n; ++v)
    out << "block " << v << " " << f.net.scheme.block_of(v) + 1 << "\n";
  for (std::int32_t v = 0; v < n; ++v)
    if (f.x0.get(v)) out << "init " << v << " 1\n";
  if (f.net.clocked())
    for (std::int32_t v = 0; v < n; ++v)
      if (!f.net.clocks[v].all_free())
        out << "clock " << v << " " << f.net.clocks[v].to_string() << "\n";
  if (f.target >= 0) out << "target " << f.target << "\n";
  return out.str();
}

/// \brief Parses the `inputs/gate/output` circuit format.
///
/// Gate ids must be sequential from 0 with the first n being INPUT lines;
/// output indices must be sequential from 0 in file order.
inline circuit parse_circuit(const std::string& text) {
  auto lines = detail::significant_lines(text);
  if (lines.empty()) throw parse_error(1, "empty circuit file");
  if (lines.front().keyword != "inputs")
    throw parse_error(lines.front().number, "circuit files must start with 'inputs <n>'");

  circuit c;
  bool inputs_seen = false;
  std::int32_t next_output = 0;
  for (const auto& l : lines) {
    if (l.keyword == "inputs") {
      if (inputs_seen) throw parse_error(l.number, "duplicate 'inputs' line");
      inputs_seen = true;
      detail::expect_args(l, 1);
      std::int64_t v = detail::arg_int(l, 0, "input count");
      if (v < 0 || v > 10'000'000) throw parse_error(l.number, "input count out of range");
      c.num_inputs = static_cast<std::int32_t>(v);
    } else if (l.keyword == "gate") {
      if (l.args.size() < 2) throw parse_error(l.number, "gate lines need an id and a kind");
      std::int64_t id = detail::arg_int(l, 0, "gate id");
      if (id != static_cast<std::int64_t>(c.gates.size()))
        throw parse_error(l.number, "gate ids must be sequential from 0");
      gate g;
      const std::string& kind = l.args[1];
      if (kind == "INPUT")
        g.kind = gate_kind::input;
      else if (kind == "AND")
        g.kind = gate_kind::and_;
      else if (kind == "OR")
        g.kind = gate_kind::or_;
      else if (kind == "NOT")
        g.kind = gate_kind::not_;
      else
        throw parse_error(l.number, "gate kind must be INPUT, AND, OR, or NOT");
      for (std::size_t i = 2; i < l.args.size(); ++i) {
        std::int64_t s = detail::parse_int(l, l.args[i], "gate source");
        if (s < 0 || s >= id) throw parse_error(l.number, "gate sources must precede the gate");
        g.sources.push_back(static_cast<std::int32_t>(s));
      }
      if (g.kind == gate_kind::input && !g.sources.empty())
        throw parse_error(l.number, "INPUT gates take no sources");
      if (g.kind == gate_kind::input && id >= c.num_inputs)
        throw parse_error(l.number, "INPUT gates must be the first n gates");
      if (g.kind != gate_kind::input && id < c.num_inputs)
        throw parse_error(l.number, "the first n gates must be INPUT");
      if (g.kind == gate_kind::not_ && g.sources.size() != 1)
        throw parse_error(l.number, "NOT takes exactly one source");
      if ((g.kind == gate_kind::and_ || g.kind == gate_kind::or_) && g.sources.empty())
        throw parse_error(l.number, "AND/OR need at least one source");
      c.gates.push_back(std::move(g));
    } else if (l.keyword == "output") {
      detail::expect_args(l, 2);
      std::int64_t j = detail::arg_int(l, 0, "output index");
      std::int64_t id = detail::arg_int(l, 1, "output gate");
      if (j != next_output) throw parse_error(l.number, "output indices must be sequential from 0");
      ++next_output;
      if (id < 0 || id >= static_cast<std::int64_t>(c.gates.size()))
        throw parse_error(l.number, "output names an unknown gate");
      c.outputs.push_back(static_cast<std::int32_t>(id));
    } else {
      throw parse_error(l.number, "unknown keyword '" + l.keyword + "'");
    }
  }
  try {
    c.validate();
  } catch (const validation_error& e) {
    throw parse_error(lines.back().number, e.what());
  }
  return c;
}

/// \brief Canonical circuit serialization; parse(serialize(c)) == c.
inline std::string serialize_circuit(const circuit& c) {
  std::ostringstream out;
  out << "inputs " << c.num_inputs << "\n";
  for (std::size_t id = 0; id < c.gates.size(); ++id) {
    const gate& g = c.gates[id];
    out << "gate " << id << " ";
    switch (g.kind) {
      case gate_kind::input: out << "INPUT"; break;
      case gate_kind::and_: out << "AND"; break;
      case gate_kind::or_: out << "OR"; break;
      case gate_kind::not_: out << "NOT"; break;
    }
    for (std::int32_t s : g.sources) out << " " << s;
    out << "\n";
  }
  for (std::size_t j = 0; j < c.outputs.size(); ++j)
    out << "output " << j << " " << c.outputs[j] << "\n";
  return out.str();
}

/// A trace: configurations by step, with an optional closing cycle line.
struct trace_file {
  std::vector<config> states;  //!< x(0), x(1), ...
  bool has_cycle = false;
  std::int64_t transient = 0;
  std::int64_t period = 1;
};

/// \brief `t=<k> <bitstring>` lines plus the closing cycle line.
inline std::string serialize_trace(const trace_file& tr) {
  std::ostringstream out;
  for (std::size_t t = 0; t < tr.states.size(); ++t)
    out << "t=" << t << " " << tr.states[t].to_string() << "\n";
  if (tr.has_cycle)
    out << "cycle transient=" << tr.transient << " period=" << tr.period << "\n";
  return out.str();
}

/// \brief Parses a trace produced by serialize_trace.
inline trace_file parse_trace(const std::string& text) {
  trace_file tr;
  auto lines = detail::significant_lines(text);
  std::int64_t expect_t = 0;
  for (const auto& l : lines) {
    if (l.keyword == "cycle") {
      if (l.args.size() != 2 || l.args[0].rfind("transient=", 0) != 0 ||
          l.args[1].rfind("period=", 0) != 0)
        throw parse_error(l.number, "cycle lines read 'cycle transient=<k> period=<p>'");
      tr.has_cycle = true;
      tr.transient = detail::parse_int(l, l.args[0].substr(10), "transient");
      tr.period = detail::parse_int(l, l.args[1].substr(7), "period");
    } else if (l.keyword.rfind("t=", 0) == 0) {
      std::int64_t t = detail::parse_int(l, l.keyword.substr(2), "step index");
      if (t != expect_t) throw parse_error(l.number, "trace steps must be sequential from 0");
      ++expect_t;
      detail::expect_args(l, 1);
      try {
        tr.states.push_back(config::from_string(l.args[0]));
      } catch (const validation_error& e) {
        throw parse_error(l.number, e.what());
      }
    } else {
      throw parse_error(l.number, "unknown keyword '" + l.keyword + "'");
    }
  }
  return tr;
}

/// \brief Serializes a witness as a line-oriented table.
inline std::string serialize_witness(const witness& w) {
  std::ostringstream out;
  out << "witness " << witness_kind_name(w.kind) << "\n";
  out << "P=" << w.steps_per_iteration << " r=" << w.phase << "\n";
  if (w.target >= 0) out << "target " << w.target << "\n";
  if (w.source_target >= 0) out << "source-target " << w.source_target << "\n";
  for (auto [c, v] : w.input_vertex) out << "input " << c << " " << v << "\n";
  for (auto [c, v] : w.input_alias) out << "alias " << c << " " << v << "\n";
  for (auto [c, v] : w.output_vertex) out << "output " << c << " " << v << "\n";
  for (auto [s, d] : w.vertex_map) out << "map " << s << " " << d << "\n";
  for (std::size_t d = 0; d < w.phi.size(); ++d) out << "phi " << d << " " << w.phi[d] << "\n";
  if (!w.base.empty()) {
    out << "base ";
    for (std::uint8_t b : w.base) out << (b ? '1' : '0');
    out << "\n";
  }
  if (!w.source_input.empty()) {
    out << "source-input ";
    for (std::uint8_t b : w.source_input) out << (b ? '1' : '0');
    out << "\n";
  }
  for (const auto& note : w.notes) out << "note " << note << "\n";
  return out.str();
}

/// \brief Parses a witness table; the inverse of serialize_witness.
inline witness parse_witness(const std::string& text) {
  auto lines = detail::significant_lines(text);
  if (lines.empty()) throw parse_error(1, "empty witness file");
  if (lines.front().keyword != "witness")
    throw parse_error(lines.front().number, "witness files must start with 'witness <kind>'");

  witness w;
  bool kind_seen = false, pr_seen = false;
  auto parse_bits = [](const detail::text_line& l, const std::string& s) {
    std::vector<std::uint8_t> bits;
    for (char ch : s) {
      if (ch != '0' && ch != '1') throw parse_error(l.number, "bitstrings use only 0 and 1");
      bits.push_back(ch == '1' ? 1 : 0);
    }
    return bits;
  };
  for (const auto& l : lines) {
    if (l.keyword == "witness") {
      if (kind_seen) throw parse_error(l.number, "duplicate 'witness' line");
      kind_seen = true;
      detail::expect_args(l, 1);
      try {
        w.kind = parse_witness_kind(l.args[0]);
      } catch (const validation_error& e) {
        throw parse_error(l.number, e.what());
      }
    } else if (l.keyword.rfind("P=", 0) == 0) {
      if (pr_seen) throw parse_error(l.number, "duplicate timing line");
      pr_seen = true;
      w.steps_per_iteration = detail::parse_int(l, l.keyword.substr(2), "steps per iteration");
      if (l.args.size() != 1 || l.args[0].rfind("r=", 0) != 0)
        throw parse_error(l.number, "timing lines read 'P=<p> r=<r>'");
      w.phase = detail::parse_int(l, l.args[0].substr(2), "phase");
    } else if (l.keyword == "target") {
      detail::expect_args(l, 1);
      w.target = static_cast<std::int32_t>(detail::arg_int(l, 0, "target"));
    } else if (l.keyword == "source-target") {
      detail::expect_args(l, 1);
      w.source_target = static_cast<std::int32_t>(detail::arg_int(l, 0, "source target"));
    } else if (l.keyword == "input" || l.keyword == "alias" || l.keyword == "output" ||
               l.keyword == "map") {
      detail::expect_args(l, 2);
      auto a = static_cast<std::int32_t>(detail::arg_int(l, 0, "map source"));
      auto b = static_cast<std::int32_t>(detail::arg_int(l, 1, "map destination"));
      if (l.keyword == "input")
        w.input_vertex.emplace_back(a, b);
      else if (l.keyword == "alias")
        w.input_alias.emplace_back(a, b);
      else if (l.keyword == "output")
        w.output_vertex.emplace_back(a, b);
      else
        w.vertex_map.emplace_back(a, b);
    } else if (l.keyword == "phi") {
      detail::expect_args(l, 2);
      auto d = static_cast<std::int64_t>(detail::arg_int(l, 0, "phi vertex"));
      auto s = static_cast<std::int32_t>(detail::arg_int(l, 1, "phi source"));
      if (d != static_cast<std::int64_t>(w.phi.size()))
        throw parse_error(l.number, "phi lines must be sequential from 0");
      w.phi.push_back(s);
    } else if (l.keyword == "base") {
      detail::expect_args(l, 1);
      if (!w.base.empty()) throw parse_error(l.number, "duplicate 'base' line");
      w.base = parse_bits(l, l.args[0]);
    } else if (l.keyword == "source-input") {
      detail::expect_args(l, 1);
      if (!w.source_input.empty()) throw parse_error(l.number, "duplicate 'source-input' line");
      w.source_input = parse_bits(l, l.args[0]);
    } else if (l.keyword == "note") {
      w.notes.push_back(l.rest);
    } else {
      throw parse_error(l.number, "unknown keyword '" + l.keyword + "'");
    }
  }
  if (!pr_seen) throw parse_error(lines.back().number, "missing 'P=<p> r=<r>' line");
  return w;
}

/// \brief Parses the machine format: states/symbols/input-symbols/blank/
/// initial/final counts and registers, then one `delta` line per
/// (state, symbol) pair with `L`, `R`, or `S` moves.
inline turing_machine parse_tm(const std::string& text) {
  auto lines = detail::significant_lines(text);
  if (lines.empty()) throw parse_error(1, "empty machine file");
  if (lines.front().keyword != "states")
    throw parse_error(lines.front().number, "machine files must start with 'states <n>'");

  turing_machine m;
  m.num_states = -1;
  bool have_symbols = false, have_input = false, have_blank = false;
  bool have_initial = false, have_final = false;
  struct delta_rec {
    int line;
    std::int32_t q, g, q2, g2, move;
  };
  std::vector<delta_rec> deltas;
  for (const auto& l : lines) {
    if (l.keyword == "states") {
      if (m.num_states >= 0) throw parse_error(l.number, "duplicate 'states' line");
      detail::expect_args(l, 1);
      m.num_states = static_cast<std::int32_t>(detail::arg_int(l, 0, "state count"));
    } else if (l.keyword == "symbols") {
      if (have_symbols) throw parse_error(l.number, "duplicate 'symbols' line");
      have_symbols = true;
      detail::expect_args(l, 1);
      m.num_symbols = static_cast<std::int32_t>(detail::arg_int(l, 0, "symbol count"));
    } else if (l.keyword == "input-symbols") {
      if (have_input) throw parse_error(l.number, "duplicate 'input-symbols' line");
      have_input = true;
      detail::expect_args(l, 1);
      m.num_input_symbols = static_cast<std::int32_t>(detail::arg_int(l, 0, "input symbol count"));
    } else if (l.keyword == "blank") {
      if (have_blank) throw parse_error(l.number, "duplicate 'blank' line");
      have_blank = true;
      detail::expect_args(l, 1);
      m.blank = static_cast<std::int32_t>(detail::arg_int(l, 0, "blank symbol"));
    } else if (l.keyword == "initial") {
      if (have_initial) throw parse_error(l.number, "duplicate 'initial' line");
      have_initial = true;
      detail::expect_args(l, 1);
      m.initial = static_cast<std::int32_t>(detail::arg_int(l, 0, "initial state"));
    } else if (l.keyword == "final") {
      if (have_final) throw parse_error(l.number, "duplicate 'final' line");
      have_final = true;
      detail::expect_args(l, 1);
      m.final_state = static_cast<std::int32_t>(detail::arg_int(l, 0, "final state"));
    } else if (l.keyword == "delta") {
      detail::expect_args(l, 5);
      delta_rec d;
      d.line = l.number;
      d.q = static_cast<std::int32_t>(detail::arg_int(l, 0, "state"));
      d.g = static_cast<std::int32_t>(detail::arg_int(l, 1, "symbol"));
      d.q2 = static_cast<std::int32_t>(detail::arg_int(l, 2, "next state"));
      d.g2 = static_cast<std::int32_t>(detail::arg_int(l, 3, "written symbol"));
      if (l.args[4] == "L")
        d.move = -1;
      else if (l.args[4] == "R")
        d.move = 1;
      else if (l.args[4] == "S")
        d.move = 0;
      else
        throw parse_error(l.number, "moves are L, R, or S");
      deltas.push_back(d);
    } else {
      throw parse_error(l.number, "unknown keyword '" + l.keyword + "'");
    }
  }
  if (m.num_states < 0 || !have_symbols || !have_input || !have_blank || !have_initial ||
      !have_final)
    throw parse_error(lines.back().number,
                      "machine files need states, symbols, input-symbols, blank, initial, final");
  m.delta.assign(static_cast<std::size_t>(m.num_states) * m.num_symbols, {});
  std::vector<bool> seen(m.delta.size(), false);
  for (const auto& d : deltas) {
    if (d.q < 0 || d.q >= m.num_states || d.g < 0 || d.g >= m.num_symbols)
      throw parse_error(d.line, "delta indices out of range");
    std::size_t idx = static_cast<std::size_t>(d.q) * m.num_symbols + d.g;
    if (seen[idx]) throw parse_error(d.line, "duplicate delta entry");
    seen[idx] = true;
    m.delta[idx] = {d.q2, d.g2, static_cast<std::int8_t>(d.move)};
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i])
      throw parse_error(lines.back().number, "delta table incomplete (machines are total)");
  try {
    m.validate();
  } catch (const validation_error& e) {
    throw parse_error(lines.back().number, e.what());
  }
  return m;
}

/// \brief Canonical machine serialization; parse(serialize(m)) == m.
inline std::string serialize_tm(const turing_machine& m) {
  std::ostringstream out;
  out << "states " << m.num_states << "\n";
  out << "symbols " << m.num_symbols << "\n";
  out << "input-symbols " << m.num_input_symbols << "\n";
  out << "blank " << m.blank << "\n";
  out << "initial " << m.initial << "\n";
  out << "final " << m.final_state << "\n";
  for (std::int32_t q = 0; q < m.num_states; ++q)
    for (std::int32_t g = 0; g < m.num_symbols; ++g) {
      const auto& a = m.at(q, g);
      out << "delta " << q << " " << g << " " << a.state << " " << a.write << " "
          << (a.move < 0 ? "L" : a.move > 0 ? "R" : "S") << "\n";
    }
  return out.str();
}

/// The three source-file families the CLI can sniff from a first keyword.
enum class file_kind { network, circuit, machine };

/// \brief Guesses a file's family from its first significant keyword:
/// `nodes` (network), `inputs` (circuit), or `states` (machine).
inline file_kind sniff_file(const std::string& text) {
  auto lines = detail::significant_lines(text);
  if (lines.empty()) throw parse_error(1, "empty file");
  const std::string& k = lines.front().keyword;
  if (k == "nodes") return file_kind::network;
  if (k == "inputs") return file_kind::circuit;
  if (k == "states") return file_kind::machine;
  throw parse_error(lines.front().number,
                    "cannot identify the file: expected nodes, inputs, or states first");
}

}  // namespace majnet
