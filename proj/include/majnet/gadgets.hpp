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
/// \brief Reduction compilers: every construction that turns one kind of
/// object into a majority network (or a harder prediction instance) lives
/// here, together with the witness that makes the construction checkable.
///
/// The compilers:
///   - compile_circuit_to_majority: monotone circuit -> majority network
///     whose single global step evaluates the circuit (threshold gadgets
///     with preset auxiliary vertices).
///   - build_clock: the 12-vertex period-3 scheduler.
///   - amplify: (2k+1)-fold redundancy making a network tolerate up to k
///     adversarial external neighbors per vertex.
///   - compile_circuit_to_clocked: iterable circuit -> clocked cylinder
///     that re-feeds its own output every three steps.
///   - compile_clocked_to_majority: replaces clock words by attached
///     amplified scheduler copies, yielding a plain majority network.
///   - compile_bseq_instance: the full pipeline from an arbitrary iterable
///     circuit to a one-vertex prediction instance.
///   - attach_eventual_gadget / build_full_instance / to_portion: the
///     prediction-problem reductions (eventual, all-active, threshold-p).

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "majnet/circuit.hpp"
#include "majnet/common.hpp"
#include "majnet/config.hpp"
#include "majnet/dynamics.hpp"
#include "majnet/net.hpp"
#include "majnet/transforms.hpp"
#include "majnet/witness.hpp"

namespace majnet {

/// A compiled network together with its witness.  `initial(x)` builds the
/// start configuration for source input x (presets plus overlaid inputs).
struct compiled_net {
  network net;
  witness w;

  config initial(const config& x) const { return w.initial(x, net.n()); }

  /// The preset configuration with all source inputs at zero.
  config base() const {
    std::int32_t width = 0;
    for (auto [c, v] : w.input_vertex) width = std::max(width, c + 1);
    for (auto [c, v] : w.input_alias) width = std::max(width, c + 1);
    return w.initial(config(width), net.n());
  }
};

namespace detail {

/// Per-gate bookkeeping for threshold gadget construction.
struct gadget_plan {
  std::int32_t vertex = -1;        // compiled vertex carrying the gate value
  std::int32_t first_aux = -1;     // first of `aux_count` consecutive aux ids
  std::int32_t aux_count = 0;
  bool aux_value = false;          // preset state of the auxiliaries
};

/// Number and preset value of auxiliary vertices for a gate with fan-in n
/// and fan-out m.  A conjunction needs |n-m-1| helpers preset to 0 when
/// n-m-1 >= 0 and to 1 otherwise; a disjunction needs n+m-1 helpers preset
/// to 1.  With consumers holding 0 at update time, the resulting strict
/// majority fires exactly when all n (respectively at least one) of the
/// sources are active.
inline std::pair<std::int32_t, bool> aux_spec(gate_kind kind, std::int32_t n, std::int32_t m) {
  if (kind == gate_kind::and_) {
    std::int32_t k = n - m - 1;
    if (k >= 0) return {k, false};
    return {-k, true};
  }
  if (kind == gate_kind::or_) return {n + m - 1, true};
  throw validation_error("threshold gadgets exist only for AND and OR gates");
}

/// Wires one gate gadget: the gate vertex is adjacent to every auxiliary,
/// and the first auxiliary is adjacent to every other one.
inline void wire_aux_star(std::vector<std::pair<std::int32_t, std::int32_t>>& edges,
                          std::int32_t gate_vertex, std::int32_t first_aux,
                          std::int32_t aux_count) {
  for (std::int32_t j = 0; j < aux_count; ++j) edges.emplace_back(gate_vertex, first_aux + j);
  for (std::int32_t j = 1; j < aux_count; ++j) edges.emplace_back(first_aux, first_aux + j);
}

}  // namespace detail

/// \brief Compiles a monotone circuit into a majority network that evaluates
/// it in one global step.
///
/// Layout: compiled vertices 0..G-1 coincide with circuit gate ids (inputs
/// first).  Inputs whose fan-out differs from one get a buffer vertex so
/// that every input feeds exactly one reader; buffers behave as one-input
/// disjunctions.  Each output slot j gets a reader vertex w_j of degree 1
/// attached to the producing gate.  The sequential scheme updates buffers,
/// then gates in topological order (each gate followed by its auxiliaries),
/// then the output readers, and the inputs last.  After one global step the
/// output readers hold C(x).
///
/// Hard invariant: compiled max degree <= 2d-1 where d is the max combined
/// fan-in+fan-out of the buffered circuit.
inline compiled_net compile_circuit_to_majority(const circuit& c) {
  c.validate();
  if (!c.is_monotone())
    throw validation_error("threshold gadget compilation requires a monotone circuit");
  const std::int32_t n_in = c.num_inputs;
  const std::int32_t n_gates = static_cast<std::int32_t>(c.gates.size());
  const std::int32_t n_out = static_cast<std::int32_t>(c.outputs.size());

  // Consumers per gate: reading gates plus output slots.
  std::vector<std::vector<std::int32_t>> gate_readers(n_gates);   // gates reading g
  std::vector<std::vector<std::int32_t>> output_slots(n_gates);   // output slots naming g
  for (std::int32_t g = 0; g < n_gates; ++g)
    for (std::int32_t s : c.gates[g].sources) gate_readers[s].push_back(g);
  for (std::int32_t j = 0; j < n_out; ++j) output_slots[c.outputs[j]].push_back(j);

  std::vector<std::pair<std::int32_t, std::int32_t>> edges;
  std::vector<std::int32_t> buffer_of(n_in, -1);  // input -> buffer vertex (or -1)
  std::int32_t next = n_gates;

  witness w;
  w.kind = witness_kind::circuit_gates;
  w.steps_per_iteration = 1;
  w.phase = 0;

  std::vector<std::int32_t> ones;  // vertices preset to 1

  // Buffer pass: every input must have exactly one reader.  An input with
  // several readers (or none) gets a buffer that becomes the single reader;
  // the original readers are rewired to the buffer.
  struct buffer_rec {
    std::int32_t vertex, input, consumers, first_aux, aux_count;
  };
  std::vector<buffer_rec> buffers;
  for (std::int32_t i = 0; i < n_in; ++i) {
    std::int32_t consumers =
        static_cast<std::int32_t>(gate_readers[i].size() + output_slots[i].size());
    if (consumers == 1) continue;
    buffer_rec b;
    b.vertex = next++;
    b.input = i;
    b.consumers = consumers;
    // The buffer copies its input: a disjunction with fan-in 1 and fan-out
    // `consumers`, so it carries 1+consumers-1 = consumers active presets.
    auto [cnt, val] = detail::aux_spec(gate_kind::or_, 1, consumers);
    (void)val;
    b.first_aux = next;
    b.aux_count = cnt;
    next += cnt;
    buffer_of[i] = b.vertex;
    edges.emplace_back(i, b.vertex);
    detail::wire_aux_star(edges, b.vertex, b.first_aux, cnt);
    for (std::int32_t j = 0; j < cnt; ++j) ones.push_back(b.first_aux + j);
    buffers.push_back(b);
  }

  auto reader_side = [&](std::int32_t src) -> std::int32_t {
    // Where a consumer should attach when reading `src`.
    if (src < n_in && buffer_of[src] >= 0) return buffer_of[src];
    return src;
  };

  // Gate gadgets.
  std::vector<detail::gadget_plan> plan(n_gates);
  std::int32_t max_circuit_degree = 2;  // tracks the buffered circuit's degree
  for (std::int32_t i = 0; i < n_in; ++i) {
    std::int32_t out = buffer_of[i] >= 0 ? 1
                                         : static_cast<std::int32_t>(gate_readers[i].size() +
                                                                     output_slots[i].size());
    max_circuit_degree = std::max(max_circuit_degree, out);
  }
  for (const auto& b : buffers)
    max_circuit_degree = std::max(max_circuit_degree, 1 + b.consumers);
  for (std::int32_t g = n_in; g < n_gates; ++g) {
    const gate& gt = c.gates[g];
    std::int32_t fan_in = static_cast<std::int32_t>(gt.sources.size());
    std::int32_t fan_out =
        static_cast<std::int32_t>(gate_readers[g].size() + output_slots[g].size());
    max_circuit_degree = std::max(max_circuit_degree, fan_in + fan_out);
    auto [cnt, val] = detail::aux_spec(gt.kind, fan_in, fan_out);
    detail::gadget_plan& p = plan[g];
    p.vertex = g;
    p.first_aux = next;
    p.aux_count = cnt;
    p.aux_value = val;
    next += cnt;
    for (std::int32_t s : gt.sources) edges.emplace_back(reader_side(s), g);
    detail::wire_aux_star(edges, g, p.first_aux, cnt);
    if (val)
      for (std::int32_t j = 0; j < cnt; ++j) ones.push_back(p.first_aux + j);
  }

  // Output readers.
  std::vector<std::int32_t> out_vertex(n_out);
  for (std::int32_t j = 0; j < n_out; ++j) {
    out_vertex[j] = next++;
    edges.emplace_back(reader_side(c.outputs[j]), out_vertex[j]);
    w.output_vertex.emplace_back(j, out_vertex[j]);
  }

  const std::int32_t total = next;

  // Sequential scheme: buffers (each with its auxiliaries), gates in
  // topological (id) order likewise, output readers, inputs last.
  std::vector<std::vector<std::int32_t>> blocks;
  for (const auto& b : buffers) {
    blocks.push_back({b.vertex});
    for (std::int32_t j = 0; j < b.aux_count; ++j) blocks.push_back({b.first_aux + j});
  }
  for (std::int32_t g = n_in; g < n_gates; ++g) {
    blocks.push_back({plan[g].vertex});
    for (std::int32_t j = 0; j < plan[g].aux_count; ++j)
      blocks.push_back({plan[g].first_aux + j});
  }
  for (std::int32_t j = 0; j < n_out; ++j) blocks.push_back({out_vertex[j]});
  for (std::int32_t i = 0; i < n_in; ++i) blocks.push_back({i});

  compiled_net out;
  out.net.g = graph::from_edges(total, edges);
  out.net.scheme = update_scheme::from_block_lists(total, blocks);
  out.net.r = rule::majority();
  out.net.validate();

  w.base.assign(total, 0);
  for (std::int32_t v : ones) w.base[v] = 1;
  for (std::int32_t i = 0; i < n_in; ++i) w.input_vertex.emplace_back(i, i);
  for (std::int32_t g = 0; g < n_gates; ++g) w.vertex_map.emplace_back(g, g);

  // Degree invariant relative to the buffered circuit.
  std::int32_t bound = 2 * max_circuit_degree - 1;
  if (out.net.g.max_degree() > bound)
    throw validation_error("internal error: compiled degree exceeds 2d-1");
  w.notes.push_back("gates=" + std::to_string(n_gates - n_in) +
                    " buffers=" + std::to_string(buffers.size()) +
                    " vertices=" + std::to_string(total) +
                    " source-degree=" + std::to_string(max_circuit_degree) +
                    " compiled-degree=" + std::to_string(out.net.g.max_degree()));
  out.w = std::move(w);
  out.w.validate(total);
  return out;
}

/// The clock gadget: label vertices addressed by schedule word.
struct clock_net {
  network net;
  witness w;
  config x0{12};
  /// label index s0*4+s1*2+s2 -> vertex id; -1 never occurs (all 8 labels exist).
  std::array<std::int32_t, 8> label_vertex{};

  /// Vertex showing value word[t mod 3] at time t.
  std::int32_t vertex_for(bool s0, bool s1, bool s2) const {
    return label_vertex[(s0 ? 4 : 0) + (s1 ? 2 : 0) + (s2 ? 1 : 0)];
  }
};

/// \brief Builds the 12-vertex period-3 scheduler.
///
/// Eight vertices form a circular ladder (two 4-cycles joined by rungs) and
/// two constant pairs supply the all-active and all-inactive schedules.
/// Labeled vertex v_s satisfies x(t)_{v_s} = s_{t mod 3} for all t >= 0:
/// period exactly 3, no transient, max degree 3.  Blocks: {0,1}, {2,3},
/// {4,5}, then the tail and the constant pairs together.
inline clock_net build_clock() {
  clock_net out;
  std::vector<std::pair<std::int32_t, std::int32_t>> edges = {
      {0, 2}, {2, 4}, {4, 6},   // bottom path
      {1, 3}, {3, 5}, {5, 7},   // top path
      {0, 1}, {2, 3}, {4, 5}, {6, 7},  // rungs
      {0, 6}, {1, 7},           // wrap-around
      {8, 9}, {10, 11},         // constant pairs
  };
  out.net.g = graph::from_edges(12, edges);
  out.net.scheme = update_scheme::from_block_lists(
      12, {{0, 1}, {2, 3}, {4, 5}, {6, 7, 8, 9, 10, 11}});
  out.net.r = rule::majority();
  out.net.validate();

  // Initial configuration (time 0).
  const std::array<bool, 12> init = {0, 1, 0, 1, 1, 0, 0, 1, 1, 1, 0, 0};
  for (std::int32_t v = 0; v < 12; ++v) out.x0.set(v, init[v]);

  // Schedule labels: vertex -> word s with x(t)_v = s_{t mod 3}.
  auto idx = [](int s0, int s1, int s2) { return s0 * 4 + s1 * 2 + s2; };
  out.label_vertex[idx(0, 0, 1)] = 0;
  out.label_vertex[idx(1, 1, 0)] = 1;
  out.label_vertex[idx(0, 1, 0)] = 2;
  out.label_vertex[idx(1, 0, 1)] = 3;
  out.label_vertex[idx(1, 0, 0)] = 4;
  out.label_vertex[idx(0, 1, 1)] = 5;
  out.label_vertex[idx(1, 1, 1)] = 9;
  out.label_vertex[idx(0, 0, 0)] = 11;

  out.w.kind = witness_kind::clock_schedule;
  out.w.steps_per_iteration = 3;
  out.w.phase = 0;
  for (int s = 0; s < 8; ++s) out.w.vertex_map.emplace_back(s, out.label_vertex[s]);
  out.w.base.assign(12, 0);
  for (std::int32_t v = 0; v < 12; ++v) out.w.base[v] = init[v] ? 1 : 0;
  out.w.validate(12);
  return out;
}

/// Result of amplification: the redundant network plus the projection.
struct amplified_net {
  network net;
  witness w;   // carries phi: compiled vertex -> source vertex
  std::int32_t copies = 1;  // 2k+1

  /// Copy i of source vertex v.
  std::int32_t copy(std::int32_t v, std::int32_t i) const { return v * copies + i; }
  /// Lifts a source configuration: every copy starts at the source value.
  config lift(const config& x) const {
    config y(x.size() * copies);
    for (std::int32_t v = 0; v < x.size(); ++v)
      for (std::int32_t i = 0; i < copies; ++i) y.set(copy(v, i), x.get(v));
    return y;
  }
};

/// \brief (2k+1)-fold amplification.
///
/// Every vertex becomes 2k+1 copies; copies of adjacent vertices are fully
/// interconnected, copies of the same vertex are not adjacent, and blocks
/// are inherited.  Requires every source degree to be odd: the amplified
/// majority then equals the source majority even if up to k external
/// neighbors per copy are attached with arbitrary states.
inline amplified_net amplify(const network& src, std::int32_t k) {
  src.validate();
  if (k < 0) throw validation_error("amplification factor must be >= 0");
  if (src.clocked()) throw validation_error("amplification applies to plain majority networks");
  for (std::int32_t v = 0; v < src.n(); ++v)
    if (src.g.degree(v) % 2 == 0)
      throw validation_error("amplification requires odd degrees; vertex " + std::to_string(v) +
                             " has degree " + std::to_string(src.g.degree(v)));
  const std::int32_t copies = 2 * k + 1;
  const std::int32_t n = src.n();

  amplified_net out;
  out.copies = copies;
  std::vector<std::pair<std::int32_t, std::int32_t>> edges;
  for (auto [u, v] : src.g.edges())
    for (std::int32_t i = 0; i < copies; ++i)
      for (std::int32_t j = 0; j < copies; ++j)
        edges.emplace_back(u * copies + i, v * copies + j);
  out.net.g = graph::from_edges(n * copies, edges);

  std::vector<std::vector<std::int32_t>> blocks(src.scheme.num_blocks());
  for (std::int32_t v = 0; v < n; ++v)
    for (std::int32_t i = 0; i < copies; ++i)
      blocks[src.scheme.block_of(v)].push_back(v * copies + i);
  out.net.scheme = update_scheme::from_block_lists(n * copies, blocks);
  out.net.r = src.r;
  out.net.validate();

  out.w.kind = witness_kind::amplification;
  out.w.steps_per_iteration = 1;
  out.w.phase = 0;
  out.w.phi.resize(n * copies);
  for (std::int32_t v = 0; v < n; ++v)
    for (std::int32_t i = 0; i < copies; ++i) out.w.phi[v * copies + i] = v;
  for (std::int32_t v = 0; v < n; ++v) out.w.input_vertex.emplace_back(v, v * copies);
  out.w.notes.push_back("copies=" + std::to_string(copies));
  out.w.validate(n * copies);
  return out;
}

}  // namespace majnet

#include "majnet/gadgets_cylinder.hpp"
#include "majnet/gadgets_problems.hpp"
