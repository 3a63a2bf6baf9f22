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
/// \brief The clocked cylinder and the clock-attachment compiler: iterable
/// circuits become clocked networks that recompute themselves every three
/// steps, and clocked networks become plain majority networks.
///
/// Included via gadgets.hpp; do not include directly.

#pragma once

#include "majnet/gadgets.hpp"

namespace majnet {

/// \brief Compiles an iterable monotone circuit into a clocked cylinder
/// that applies the circuit once every three steps.
///
/// Geometry per input column i: a top vertex Ltop_i, a bottom vertex L1_i,
/// and a middle vertex L2_i.  The circuit (as threshold gadgets, buffered
/// so every input has exactly one reader) hangs between the top row and the
/// L2 row: gates read the top row, and the gate producing output j is
/// adjacent to L2_j.  The wrap edge Ltop_i - L1_i closes the cycle.  Each
/// row vertex has an always-active degree-1 companion, making its majority
/// over {signal, forced 0, companion} copy the signal exactly.
///
/// Clock words: rows Ltop and L1 use (0,0,U); row L2 uses (0,U,0); gates,
/// buffers and inactive-preset auxiliaries use (U,0,0); active-preset
/// auxiliaries and companions use (1,1,1).  One three-step cycle, with the
/// sequential order L1, L2, buffers, gates (topological), Ltop, companions:
///   step 0 mod 3: top row still holds x while the gates chain-evaluate
///                 C(x) in one pass; every row is forced empty.
///   step 1 mod 3: L2_j captures output gate j before the circuit is
///                 emptied.
///   step 2 mod 3: L1_i copies L2_i, then Ltop_i copies the fresh L1_i
///                 through the wrap edge.
/// After three steps the configuration equals the start with x replaced by
/// C(x): the witness has P = 3, r = 0, and coordinate i lives at vertex i.
inline compiled_net compile_circuit_to_clocked(const circuit& c) {
  c.validate();
  if (!c.is_monotone())
    throw validation_error("the cylinder requires a monotone circuit");
  const std::int32_t n = c.num_inputs;
  if (static_cast<std::int32_t>(c.outputs.size()) != n)
    throw validation_error("the cylinder requires an iterable circuit (outputs = inputs)");
  const std::int32_t n_gates = static_cast<std::int32_t>(c.gates.size());
  {
    std::vector<std::int32_t> sorted(c.outputs);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw validation_error("the cylinder requires outputs to name distinct gates");
    if (!sorted.empty() && sorted.front() < n)
      throw validation_error("the cylinder requires outputs to name non-input gates");
  }

  // Consumers: reading gates; plus the L2 capture edge for output gates.
  std::vector<std::vector<std::int32_t>> gate_readers(n_gates);
  for (std::int32_t g = n; g < n_gates; ++g)
    for (std::int32_t s : c.gates[g].sources) gate_readers[s].push_back(g);
  std::vector<std::int32_t> output_slot(n_gates, -1);
  for (std::int32_t j = 0; j < n; ++j) output_slot[c.outputs[j]] = j;

  const std::int32_t ltop0 = 0, l1_0 = n, l2_0 = 2 * n;
  std::int32_t next = 3 * n;
  std::vector<std::pair<std::int32_t, std::int32_t>> edges;
  std::vector<std::int32_t> ones;

  // Rows: wrap and column edges.
  for (std::int32_t i = 0; i < n; ++i) {
    edges.emplace_back(ltop0 + i, l1_0 + i);
    edges.emplace_back(l1_0 + i, l2_0 + i);
  }

  // Buffers for inputs whose reader count differs from one.
  struct buffer_rec {
    std::int32_t vertex, input, consumers, first_aux, aux_count;
  };
  std::vector<buffer_rec> buffers;
  std::vector<std::int32_t> buffer_of(n, -1);
  for (std::int32_t i = 0; i < n; ++i) {
    std::int32_t consumers = static_cast<std::int32_t>(gate_readers[i].size());
    if (consumers == 1) continue;
    buffer_rec b;
    b.vertex = next++;
    b.input = i;
    b.consumers = consumers;
    auto [cnt, val] = detail::aux_spec(gate_kind::or_, 1, consumers);
    (void)val;
    b.first_aux = next;
    b.aux_count = cnt;
    next += cnt;
    buffer_of[i] = b.vertex;
    edges.emplace_back(ltop0 + i, b.vertex);
    detail::wire_aux_star(edges, b.vertex, b.first_aux, cnt);
    for (std::int32_t j = 0; j < cnt; ++j) ones.push_back(b.first_aux + j);
    buffers.push_back(b);
  }

  // Gate vertices, in circuit id order.
  std::vector<detail::gadget_plan> plan(n_gates);
  std::int32_t max_circuit_degree = 2;
  for (std::int32_t i = 0; i < n; ++i)
    max_circuit_degree = std::max(
        max_circuit_degree,
        buffer_of[i] >= 0 ? 1 : static_cast<std::int32_t>(gate_readers[i].size()));
  for (const auto& b : buffers) max_circuit_degree = std::max(max_circuit_degree, 1 + b.consumers);

  auto reader_side = [&](std::int32_t src) -> std::int32_t {
    if (src < n) return buffer_of[src] >= 0 ? buffer_of[src] : ltop0 + src;
    return plan[src].vertex;
  };

  for (std::int32_t g = n; g < n_gates; ++g) {
    const gate& gt = c.gates[g];
    std::int32_t fan_in = static_cast<std::int32_t>(gt.sources.size());
    std::int32_t fan_out = static_cast<std::int32_t>(gate_readers[g].size()) +
                           (output_slot[g] >= 0 ? 1 : 0);
    max_circuit_degree = std::max(max_circuit_degree, fan_in + fan_out);
    auto [cnt, val] = detail::aux_spec(gt.kind, fan_in, fan_out);
    detail::gadget_plan& p = plan[g];
    p.vertex = next++;
    p.first_aux = next;
    p.aux_count = cnt;
    p.aux_value = val;
    next += cnt;
    for (std::int32_t s : gt.sources) edges.emplace_back(reader_side(s), p.vertex);
    detail::wire_aux_star(edges, p.vertex, p.first_aux, cnt);
    if (val)
      for (std::int32_t j = 0; j < cnt; ++j) ones.push_back(p.first_aux + j);
    if (output_slot[g] >= 0) edges.emplace_back(p.vertex, l2_0 + output_slot[g]);
  }

  // Companions for the three transport rows.
  std::vector<std::int32_t> companions;
  companions.reserve(3 * n);
  for (std::int32_t row = 0; row < 3; ++row)
    for (std::int32_t i = 0; i < n; ++i) {
      std::int32_t comp = next++;
      edges.emplace_back(row * n + i, comp);
      companions.push_back(comp);
      ones.push_back(comp);
    }

  const std::int32_t total = next;

  // Sequential scheme: L1, L2, buffers, gates (each followed by its
  // auxiliaries), Ltop, companions.
  std::vector<std::vector<std::int32_t>> blocks;
  for (std::int32_t i = 0; i < n; ++i) blocks.push_back({l1_0 + i});
  for (std::int32_t i = 0; i < n; ++i) blocks.push_back({l2_0 + i});
  for (const auto& b : buffers) {
    blocks.push_back({b.vertex});
    for (std::int32_t j = 0; j < b.aux_count; ++j) blocks.push_back({b.first_aux + j});
  }
  for (std::int32_t g = n; g < n_gates; ++g) {
    blocks.push_back({plan[g].vertex});
    for (std::int32_t j = 0; j < plan[g].aux_count; ++j)
      blocks.push_back({plan[g].first_aux + j});
  }
  for (std::int32_t i = 0; i < n; ++i) blocks.push_back({ltop0 + i});
  for (std::int32_t comp : companions) blocks.push_back({comp});

  compiled_net out;
  out.net.g = graph::from_edges(total, edges);
  out.net.scheme = update_scheme::from_block_lists(total, blocks);
  out.net.r = rule::majority();

  // Clock words.
  out.net.clocks.assign(total, cw("UUU"));
  for (std::int32_t i = 0; i < n; ++i) {
    out.net.clocks[ltop0 + i] = cw("00U");
    out.net.clocks[l1_0 + i] = cw("00U");
    out.net.clocks[l2_0 + i] = cw("0U0");
  }
  for (const auto& b : buffers) {
    out.net.clocks[b.vertex] = cw("U00");
    for (std::int32_t j = 0; j < b.aux_count; ++j)
      out.net.clocks[b.first_aux + j] = cw("111");  // buffer helpers are active presets
  }
  for (std::int32_t g = n; g < n_gates; ++g) {
    out.net.clocks[plan[g].vertex] = cw("U00");
    for (std::int32_t j = 0; j < plan[g].aux_count; ++j)
      out.net.clocks[plan[g].first_aux + j] = plan[g].aux_value ? cw("111") : cw("U00");
  }
  for (std::int32_t comp : companions) out.net.clocks[comp] = cw("111");
  out.net.validate();

  witness w;
  w.kind = witness_kind::circuit_clocked;
  w.steps_per_iteration = 3;
  w.phase = 0;
  for (std::int32_t i = 0; i < n; ++i) {
    w.input_vertex.emplace_back(i, ltop0 + i);
    w.input_alias.emplace_back(i, l1_0 + i);
    w.output_vertex.emplace_back(i, ltop0 + i);
  }
  w.base.assign(total, 0);
  for (std::int32_t v : ones) w.base[v] = 1;

  std::int32_t bound = std::max<std::int32_t>(3, 2 * max_circuit_degree - 1);
  if (out.net.g.max_degree() > bound)
    throw validation_error("internal error: cylinder degree exceeds 2d-1");
  w.notes.push_back("columns=" + std::to_string(n) +
                    " gates=" + std::to_string(n_gates - n) +
                    " buffers=" + std::to_string(buffers.size()) +
                    " vertices=" + std::to_string(total) +
                    " source-degree=" + std::to_string(max_circuit_degree) +
                    " compiled-degree=" + std::to_string(out.net.g.max_degree()));
  out.w = std::move(w);
  out.w.validate(total);
  return out;
}

/// \brief Replaces every clock word by an attached amplified scheduler,
/// producing a plain majority network.
///
/// For each vertex v with a non-free clock word: attach a ceil(d_v/2)-fold
/// amplified clock instance, and join v to d_v+1 copies of the scheduler
/// vertex showing c-down(v) (every U replaced by 0) and d_v+1 copies of the
/// one showing c-up(v) (U replaced by 1), once if the words coincide.  At a
/// free phase the attachments split d_v+1 active / d_v+1 inactive, which
/// preserves v's strict majority exactly; at a forced phase both sets agree
/// and outvote the original neighborhood.  Clock blocks are appended after
/// the (sequential) base scheme, one clock at a time.
///
/// The witness maps original vertices identically, keeps P and r, stores
/// the scheduler presets in `base`, and records measured degree and block
/// sizes in its notes.
inline compiled_net compile_clocked_to_majority(const network& clocked) {
  clocked.validate();
  if (!clocked.clocked())
    throw validation_error("clock attachment requires a clocked network");
  if (clocked.r.kind != rule_kind::majority)
    throw validation_error("clock attachment requires the majority rule");
  if (!clocked.scheme.is_sequential())
    throw validation_error("clock attachment requires a sequential base scheme");
  const std::int32_t n = clocked.n();
  const clock_net clock = build_clock();
  const std::int32_t clock_n = clock.net.n();
  const auto clock_edges = clock.net.g.edges();

  std::vector<std::pair<std::int32_t, std::int32_t>> edges;
  for (auto e : clocked.g.edges()) edges.push_back(e);

  std::vector<std::vector<std::int32_t>> blocks;
  blocks.resize(clocked.scheme.num_blocks());
  for (std::int32_t v = 0; v < n; ++v) blocks[clocked.scheme.block_of(v)].push_back(v);

  std::vector<std::uint8_t> base;  // filled after total size is known
  struct clock_rec {
    std::int32_t offset, copies;
  };
  std::vector<clock_rec> instances;
  std::int32_t next = n;
  std::int32_t attached = 0;

  for (std::int32_t v = 0; v < n; ++v) {
    const clock_word& word = clocked.clocks[v];
    if (word.all_free()) continue;
    ++attached;
    const std::int32_t dv = clocked.g.degree(v);
    const std::int32_t k = std::max<std::int32_t>(1, (dv + 1) / 2);
    const std::int32_t copies = 2 * k + 1;
    const std::int32_t offset = next;
    next += clock_n * copies;
    instances.push_back({offset, copies});

    // Amplified clock edges.
    for (auto [a, b] : clock_edges)
      for (std::int32_t i = 0; i < copies; ++i)
        for (std::int32_t j = 0; j < copies; ++j)
          edges.emplace_back(offset + a * copies + i, offset + b * copies + j);

    // Attachment: d_v+1 copies of the down- and up-rounded schedules.
    bool down[3], up[3];
    for (int t = 0; t < 3; ++t) {
      down[t] = word.s[t] == clock_sym::one;
      up[t] = word.s[t] != clock_sym::zero;
    }
    std::int32_t vdown = clock.vertex_for(down[0], down[1], down[2]);
    std::int32_t vup = clock.vertex_for(up[0], up[1], up[2]);
    for (std::int32_t i = 0; i <= dv; ++i)
      edges.emplace_back(v, offset + vdown * copies + i);
    if (vup != vdown)
      for (std::int32_t i = 0; i <= dv; ++i)
        edges.emplace_back(v, offset + vup * copies + i);

    // Four appended blocks, copies inheriting their source block.
    for (std::int32_t b = 0; b < clock.net.scheme.num_blocks(); ++b) {
      std::vector<std::int32_t> blk;
      for (std::int32_t u : clock.net.scheme.members(b))
        for (std::int32_t i = 0; i < copies; ++i) blk.push_back(offset + u * copies + i);
      blocks.push_back(std::move(blk));
    }
  }

  const std::int32_t total = next;
  base.assign(total, 0);
  for (const auto& inst : instances)
    for (std::int32_t u = 0; u < clock_n; ++u)
      if (clock.x0.get(u))
        for (std::int32_t i = 0; i < inst.copies; ++i)
          base[inst.offset + u * inst.copies + i] = 1;

  compiled_net out;
  out.net.g = graph::from_edges(total, edges);
  out.net.scheme = update_scheme::from_block_lists(total, blocks);
  out.net.r = rule::majority();
  out.net.validate();

  witness w;
  w.kind = witness_kind::clocked_majority;
  w.steps_per_iteration = 1;
  w.phase = 0;
  for (std::int32_t v = 0; v < n; ++v) {
    w.vertex_map.emplace_back(v, v);
    w.input_vertex.emplace_back(v, v);
  }
  w.base = std::move(base);

  std::size_t max_block = 0;
  for (std::int32_t b = 0; b < out.net.scheme.num_blocks(); ++b)
    max_block = std::max(max_block, out.net.scheme.members(b).size());
  w.notes.push_back("clocks=" + std::to_string(attached) +
                    " vertices=" + std::to_string(total) +
                    " compiled-degree=" + std::to_string(out.net.g.max_degree()) +
                    " max-block=" + std::to_string(max_block));
  w.notes.push_back(
      "original vertices keep degree <= 3d+2; scheduler copies reach "
      "3*(2*ceil(d/2)+1)+1, and pair blocks have 2*(2*ceil(d/2)+1) members");
  out.w = std::move(w);
  out.w.validate(total);
  return out;
}

/// A complete one-vertex prediction instance produced by the pipeline.
struct bseq_instance {
  network net;
  config x0{0};
  std::int32_t target = -1;
  witness w;                    // composed: P = 3*D, r = 0
  std::int64_t dilation = 1;    // compiled steps per source circuit iteration
  circuit flat;                 // the depth-1 stage, kept for diagnostics
};

/// \brief Full pipeline: arbitrary iterable circuit -> majority prediction
/// instance whose one-vertex answer equals reachability in the circuit.
///
/// Stages: monotonize (dual rails) -> bound_degree -> synchronize ->
/// flatten_depth1 -> compile_circuit_to_clocked -> compile_clocked_to_majority.
/// Source coordinate j is observed at compiled vertex j at steps t == 0
/// (mod 3D); the target coordinate must start inactive.
inline bseq_instance compile_bseq_instance(const circuit& c, const config& x, std::int32_t i) {
  c.validate();
  const std::int32_t n = c.num_inputs;
  if (static_cast<std::int32_t>(c.outputs.size()) != n)
    throw validation_error("the pipeline requires an iterable circuit");
  if (static_cast<std::int32_t>(x.size()) != n)
    throw validation_error("input length must match the circuit");
  if (i < 0 || i >= n) throw validation_error("target coordinate out of range");
  if (x.get(i))
    throw validation_error("the target coordinate must start inactive");

  // Dual-rail monotonization: coordinate j keeps index j; rail j+n carries
  // its complement.
  mono_result mono = monotonize(c, true);
  config x_mono(2 * n);
  for (std::int32_t j = 0; j < n; ++j) {
    x_mono.set(j, x.get(j));
    x_mono.set(n + j, !x.get(j));
  }

  circuit bounded = bound_degree(mono.c);
  sync_result sync = synchronize(bounded);
  config x_sync(sync.c.num_inputs);
  for (std::int32_t j = 0; j < 2 * n; ++j) x_sync.set(j, x_mono.get(j));

  flat_result flat = flatten_depth1(sync);
  config x_flat = flat_embed(flat, x_sync);

  compiled_net cyl = compile_circuit_to_clocked(flat.c);
  config x_cyl = cyl.initial(x_flat);

  compiled_net fin = compile_clocked_to_majority(cyl.net);

  bseq_instance inst;
  inst.net = fin.net;
  inst.x0 = fin.w.initial(x_cyl, fin.net.n());
  inst.target = i;  // top-row vertex i keeps its id through both stages
  inst.dilation = 3 * static_cast<std::int64_t>(flat.depth);
  inst.flat = flat.c;

  witness w;
  w.kind = witness_kind::bseq_pipeline;
  w.steps_per_iteration = inst.dilation;
  w.phase = 0;
  for (std::int32_t j = 0; j < n; ++j) w.input_vertex.emplace_back(j, j);
  for (std::int32_t j = 0; j < n; ++j) w.output_vertex.emplace_back(j, j);
  w.target = i;
  w.source_target = i;
  w.source_input.assign(n, 0);
  for (std::int32_t j = 0; j < n; ++j) w.source_input[j] = x.get(j) ? 1 : 0;
  w.base.assign(inst.net.n(), 0);
  for (std::int32_t v = 0; v < inst.net.n(); ++v) w.base[v] = inst.x0.get(v) ? 1 : 0;
  w.notes.push_back("stage-widths: rails=" + std::to_string(2 * n) +
                    " sync-width=" + std::to_string(sync.width) +
                    " depth=" + std::to_string(flat.depth) +
                    " flat-inputs=" + std::to_string(flat.c.num_inputs));
  for (const auto& note : cyl.w.notes) w.notes.push_back("cylinder: " + note);
  for (const auto& note : fin.w.notes) w.notes.push_back("majority: " + note);
  inst.w = std::move(w);
  inst.w.validate(inst.net.n());
  return inst;
}

}  // namespace majnet
