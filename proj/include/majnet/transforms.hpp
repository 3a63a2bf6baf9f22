/* majnet: majority automata networks under block-sequential update schedules
 * Copyright (c) 2026 The majnet authors
 * SPDX-License-Identifier: Apache-2.0
 */

/*!
  \file transforms.hpp
  \brief Circuit rewrites: dual-rail monotonization, fan-in/fan-out bounding,
         synchronization into equal-width layers, and depth-1 flattening.
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "majnet/circuit.hpp"
#include "majnet/common.hpp"

namespace majnet {

/*!
  \brief For each original gate, the pair of gates carrying its value and
         its complement in the monotone circuit.
*/
struct rail_map {
  std::vector<std::int32_t> pos;
  std::vector<std::int32_t> neg;
};

struct mono_result {
  circuit c;
  rail_map rails;
};

/*!
  \brief Dual-rail monotonization.

  Inputs double: coordinate i carries x_i, coordinate n+i carries its
  complement.  De Morgan turns AND into an (AND, OR) rail pair and OR into
  (OR, AND); a NOT gate just swaps the rails of its source and adds nothing.
  With `dual_outputs` the output list is the positive rails of the original
  outputs followed by their negative rails, so an iterable circuit stays
  iterable over states of the shape (y, complement of y).
*/
inline mono_result monotonize(const circuit& src, bool dual_outputs = true) {
  src.validate();
  const std::int32_t n = src.num_inputs;
  mono_result out;
  out.rails.pos.assign(src.gates.size(), -1);
  out.rails.neg.assign(src.gates.size(), -1);

  circuit& c = out.c;
  c.num_inputs = 2 * n;
  c.gates.assign(2 * n, gate{gate_kind::input, {}});
  for (std::int32_t i = 0; i < n; ++i) {
    out.rails.pos[i] = i;
    out.rails.neg[i] = n + i;
  }

  auto dedupe = [](std::vector<std::int32_t> v) {
    // NOT chains can alias rails; AND/OR are idempotent, so drop repeats.
    std::vector<std::int32_t> uniq;
    for (std::int32_t x : v)
      if (std::find(uniq.begin(), uniq.end(), x) == uniq.end()) uniq.push_back(x);
    return uniq;
  };

  for (std::int32_t id = n; id < src.num_gates(); ++id) {
    const gate& g = src.gates[id];
    if (g.kind == gate_kind::not_) {
      out.rails.pos[id] = out.rails.neg[g.sources[0]];
      out.rails.neg[id] = out.rails.pos[g.sources[0]];
      continue;
    }
    std::vector<std::int32_t> ps, ns;
    for (std::int32_t s : g.sources) {
      ps.push_back(out.rails.pos[s]);
      ns.push_back(out.rails.neg[s]);
    }
    gate_kind same = g.kind;
    gate_kind flipped = g.kind == gate_kind::and_ ? gate_kind::or_ : gate_kind::and_;
    c.gates.push_back({same, dedupe(ps)});
    out.rails.pos[id] = c.num_gates() - 1;
    c.gates.push_back({flipped, dedupe(ns)});
    out.rails.neg[id] = c.num_gates() - 1;
  }

  for (std::int32_t o : src.outputs) c.outputs.push_back(out.rails.pos[o]);
  if (dual_outputs)
    for (std::int32_t o : src.outputs) c.outputs.push_back(out.rails.neg[o]);
  c.validate();
  return out;
}

/*!
  \brief Bound fan-in and fan-out to 2 on a monotone circuit.

  Wide gates become balanced trees of 2-input gates of the same kind (split
  left to right, deterministically).  Gates and inputs read by more than two
  consumers grow a balanced copy tree of 1-input OR buffers.  A circuit
  already within bounds is returned unchanged.
*/
inline circuit bound_degree(const circuit& src) {
  src.validate();
  if (!src.is_monotone()) throw validation_error("degree bounding expects a monotone circuit");

  {
    bool within = true;
    std::vector<std::int32_t> fo = src.fanout();
    for (std::int32_t i = 0; i < src.num_gates() && within; ++i)
      if (fo[i] > 2 || src.gates[i].sources.size() > 2) within = false;
    if (within) return src;
  }

  // First pass: shrink fan-in with balanced same-kind trees.
  circuit mid;
  mid.num_inputs = src.num_inputs;
  std::vector<std::int32_t> mapped(src.gates.size(), -1);

  // Builds a balanced tree over sources [lo, hi) and returns its root id.
  auto tree = [&mid](auto&& self, gate_kind kind, const std::vector<std::int32_t>& srcs,
                     std::size_t lo, std::size_t hi) -> std::int32_t {
    if (hi - lo == 1) return srcs[lo];
    if (hi - lo == 2) {
      mid.gates.push_back({kind, {srcs[lo], srcs[lo + 1]}});
      return mid.num_gates() - 1;
    }
    std::size_t half = lo + (hi - lo + 1) / 2;
    std::int32_t left = self(self, kind, srcs, lo, half);
    std::int32_t right = self(self, kind, srcs, half, hi);
    mid.gates.push_back({kind, {left, right}});
    return mid.num_gates() - 1;
  };

  for (std::int32_t id = 0; id < src.num_gates(); ++id) {
    const gate& g = src.gates[id];
    if (g.kind == gate_kind::input) {
      mid.gates.push_back({gate_kind::input, {}});
      mapped[id] = id;
      continue;
    }
    std::vector<std::int32_t> srcs;
    for (std::int32_t s : g.sources) srcs.push_back(mapped[s]);
    if (srcs.size() <= 2) {
      mid.gates.push_back({g.kind, std::move(srcs)});
      mapped[id] = mid.num_gates() - 1;
    } else {
      mapped[id] = tree(tree, g.kind, srcs, 0, srcs.size());
    }
  }
  for (std::int32_t o : src.outputs) mid.outputs.push_back(mapped[o]);
  mid.validate();

  // Second pass: shrink fan-out with balanced copy trees of OR buffers.
  std::vector<std::int32_t> consumers(mid.gates.size(), 0);
  for (const gate& g : mid.gates)
    for (std::int32_t s : g.sources) ++consumers[s];
  for (std::int32_t o : mid.outputs) ++consumers[o];

  circuit out;
  out.num_inputs = mid.num_inputs;
  // taps[g] lists the copies serving g's consumers, in consumption order.
  std::vector<std::vector<std::int32_t>> taps(mid.gates.size());
  std::vector<std::size_t> next_tap(mid.gates.size(), 0);

  auto copy_tree = [&out](auto&& self, std::int32_t root, std::int32_t count,
                          std::vector<std::int32_t>& acc) -> void {
    if (count <= 2) {
      for (std::int32_t i = 0; i < count; ++i) acc.push_back(root);
      return;
    }
    std::int32_t left = (count + 1) / 2;
    out.gates.push_back({gate_kind::or_, {root}});
    std::int32_t bl = out.num_gates() - 1;
    out.gates.push_back({gate_kind::or_, {root}});
    std::int32_t br = out.num_gates() - 1;
    self(self, bl, left, acc);
    self(self, br, count - left, acc);
  };

  // Inputs first (they must stay a prefix), then their copy trees, then the
  // logic gates each followed by its own tree.
  for (std::int32_t id = 0; id < mid.num_inputs; ++id)
    out.gates.push_back({gate_kind::input, {}});
  for (std::int32_t id = 0; id < mid.num_inputs; ++id)
    copy_tree(copy_tree, id, std::max<std::int32_t>(consumers[id], 1), taps[id]);
  for (std::int32_t id = mid.num_inputs; id < mid.num_gates(); ++id) {
    const gate& g = mid.gates[id];
    std::vector<std::int32_t> srcs;
    for (std::int32_t s : g.sources) srcs.push_back(taps[s][next_tap[s]++]);
    out.gates.push_back({g.kind, std::move(srcs)});
    copy_tree(copy_tree, out.num_gates() - 1, std::max<std::int32_t>(consumers[id], 1), taps[id]);
  }
  for (std::int32_t o : mid.outputs) out.outputs.push_back(taps[o][next_tap[o]++]);
  out.validate();
  return out;
}

/*!
  \brief A circuit reshaped into equal-width layers, every wire spanning
         exactly one layer.
*/
struct sync_result {
  circuit c;
  std::int32_t depth = 1;              //!< number of layers below the inputs
  std::int32_t width = 0;              //!< gates per layer
  std::int32_t real_width = 0;         //!< original coordinate count; pads follow
  std::vector<std::int32_t> layer_of;  //!< layer index of every gate of c
};

/*!
  \brief Reshape an iterable monotone circuit into equal-width layers.

  Wires spanning several levels get buffer chains; every output coordinate
  ends in its own node on the last layer; layers are padded to a common
  width with always-0 columns (fresh 0 inputs continued by OR-buffer chains
  whose outputs reproduce the 0, keeping the circuit iterable).  Pad
  columns branch with bounded fan-out, so degree bounds survive.
*/
inline sync_result synchronize(const circuit& src) {
  src.validate();
  if (!src.is_monotone()) throw validation_error("synchronization expects a monotone circuit");
  if (src.num_outputs() != src.num_inputs)
    throw validation_error("synchronization expects an iterable circuit");
  const std::int32_t n = src.num_inputs;
  if (n == 0) throw validation_error("cannot synchronize an empty circuit");

  std::vector<std::int32_t> level = src.levels();
  std::int32_t deepest = 0;
  for (std::int32_t id = 0; id < src.num_gates(); ++id) deepest = std::max(deepest, level[id]);
  std::int32_t depth = std::max(1, deepest);

  std::vector<std::int32_t> named(src.gates.size(), 0);
  for (std::int32_t o : src.outputs) ++named[o];

  // A gate on the last level must be the unique node of one output
  // coordinate; anything else there forces an extra layer.
  bool bump = false;
  for (std::int32_t id = n; id < src.num_gates(); ++id)
    if (level[id] == depth && named[id] != 1) bump = true;
  if (bump) ++depth;

  const std::int32_t D = depth;
  auto reusable = [&](std::int32_t j) {
    std::int32_t s = src.outputs[j];
    return s >= n && level[s] == D && named[s] == 1;
  };

  // Real node count per layer: original gates, wire buffers, output chains.
  std::vector<std::int64_t> w(D + 1, 0);
  w[0] = n;
  for (std::int32_t id = n; id < src.num_gates(); ++id) {
    ++w[level[id]];
    for (std::int32_t s : src.gates[id].sources)
      for (std::int32_t L = level[s] + 1; L < level[id]; ++L) ++w[L];
  }
  for (std::int32_t j = 0; j < n; ++j)
    if (!reusable(j))
      for (std::int32_t L = level[src.outputs[j]] + 1; L <= D; ++L) ++w[L];

  std::int64_t W = 0;
  for (std::int32_t L = 0; L <= D; ++L) W = std::max(W, w[L]);
  // Pad columns shrink by at most half per layer upward, so a pad never
  // feeds more than two pads below it.
  for (std::int32_t L = 1; L <= D; ++L) W = std::max(W, 2 * w[L - 1] - w[L]);

  sync_result res;
  res.depth = D;
  res.width = static_cast<std::int32_t>(W);
  res.real_width = n;
  circuit& c = res.c;

  const std::int32_t p0 = static_cast<std::int32_t>(W - n);
  c.num_inputs = static_cast<std::int32_t>(W);
  c.gates.assign(c.num_inputs, gate{gate_kind::input, {}});
  res.layer_of.assign(c.num_inputs, 0);

  auto emit = [&](gate_kind kind, std::vector<std::int32_t> srcs, std::int32_t layer) {
    c.gates.push_back({kind, std::move(srcs)});
    res.layer_of.push_back(layer);
    return c.num_gates() - 1;
  };

  // carrier[id]: for an original gate or input, the id of the node holding
  // its value at the layer reached so far while chains grow.
  std::vector<std::int32_t> node_of(src.gates.size(), -1);
  for (std::int32_t i = 0; i < n; ++i) node_of[i] = i;

  // Gates of one layer, then wire buffers, then output chains, then pads.
  struct chain_state {
    std::int32_t current; // node holding the value at the previous layer
  };
  // Wire chains keyed by (consumer gate, source slot); output chains by j.
  std::vector<std::vector<chain_state>> wire_chain(src.gates.size());
  for (std::int32_t id = n; id < src.num_gates(); ++id)
    wire_chain[id].assign(src.gates[id].sources.size(), chain_state{-1});
  std::vector<chain_state> out_chain(n, chain_state{-1});
  std::vector<std::int32_t> prev_pads, coord_of_output(n, -1);

  for (std::int32_t i = 0; i < p0; ++i) prev_pads.push_back(n + i);

  for (std::int32_t L = 1; L <= D; ++L) {
    // Original gates whose level is L, in id order.
    for (std::int32_t id = n; id < src.num_gates(); ++id) {
      if (level[id] != L) continue;
      std::vector<std::int32_t> srcs;
      for (std::size_t slot = 0; slot < src.gates[id].sources.size(); ++slot) {
        std::int32_t s = src.gates[id].sources[slot];
        srcs.push_back(level[s] == L - 1 ? node_of[s] : wire_chain[id][slot].current);
      }
      node_of[id] = emit(src.gates[id].kind, std::move(srcs), L);
    }
    // Buffers continuing wires that must cross layer L.
    for (std::int32_t id = n; id < src.num_gates(); ++id) {
      if (level[id] <= L) continue;
      for (std::size_t slot = 0; slot < src.gates[id].sources.size(); ++slot) {
        std::int32_t s = src.gates[id].sources[slot];
        if (level[s] >= L || level[id] <= L) continue;
        std::int32_t from = level[s] == L - 1 ? node_of[s] : wire_chain[id][slot].current;
        wire_chain[id][slot].current = emit(gate_kind::or_, {from}, L);
      }
    }
    // Output chains for coordinates not served by a reused last-level gate.
    for (std::int32_t j = 0; j < n; ++j) {
      if (reusable(j)) continue;
      std::int32_t s = src.outputs[j];
      if (level[s] >= L) continue;
      std::int32_t from = level[s] == L - 1 ? node_of[s] : out_chain[j].current;
      out_chain[j].current = emit(gate_kind::or_, {from}, L);
    }
    // Pad column continuations.
    std::int32_t pads_here = static_cast<std::int32_t>(W - w[L]);
    std::vector<std::int32_t> pads;
    for (std::int32_t j = 0; j < pads_here; ++j)
      pads.push_back(emit(gate_kind::or_, {prev_pads[j / 2]}, L));
    prev_pads = std::move(pads);
  }

  for (std::int32_t j = 0; j < n; ++j)
    c.outputs.push_back(reusable(j) ? node_of[src.outputs[j]] : out_chain[j].current);
  for (std::int32_t p : prev_pads) c.outputs.push_back(p);
  c.validate();
  return res;
}

/*! \brief A depth-1 circuit together with its time dilation factor. */
struct flat_result {
  circuit c;          //!< every logic gate reads inputs only
  std::int32_t depth = 1; //!< dilation: one source step per `depth` steps here
  std::int32_t width = 0; //!< source layer width
};

/*!
  \brief Collapse a synchronized circuit to depth 1.

  The flat circuit's state stacks all layers: coordinate L*width+k holds
  layer L's node k.  One application advances every layer's value into the
  next, the last layer wrapping to the first, so iterating `depth` times
  from (x, 0, ..., 0) runs the source circuit once on x and returns the
  other layers to 0.
*/
inline flat_result flatten_depth1(const sync_result& s) {
  const circuit& c = s.c;
  c.validate();
  const std::int32_t D = s.depth, W = s.width;
  if (static_cast<std::int32_t>(s.layer_of.size()) != c.num_gates())
    throw validation_error("layer table does not match the circuit");
  if (c.num_inputs != W || c.num_outputs() != W)
    throw validation_error("flattening expects equal-width input and output layers");

  std::vector<std::int64_t> layer_width(D + 1, 0);
  for (std::int32_t id = 0; id < c.num_gates(); ++id) {
    std::int32_t L = s.layer_of[id];
    if (L < 0 || L > D) throw validation_error("gate layer out of range");
    if ((L == 0) != (c.gates[id].kind == gate_kind::input))
      throw validation_error("layer 0 must hold exactly the inputs");
    ++layer_width[L];
    for (std::int32_t src : c.gates[id].sources)
      if (s.layer_of[src] != L - 1)
        throw validation_error("every wire must span exactly one layer");
  }
  for (std::int32_t L = 0; L <= D; ++L)
    if (layer_width[L] != W) throw validation_error("layers must all have the same width");

  // Position of each node inside its layer: layer 0 by input id, the last
  // layer by output coordinate, interior layers by id order.
  std::vector<std::int32_t> pos(c.gates.size(), -1);
  for (std::int32_t i = 0; i < W; ++i) pos[i] = i;
  std::vector<std::int32_t> seen_out(c.gates.size(), 0);
  for (std::int32_t j = 0; j < W; ++j) {
    std::int32_t o = c.outputs[j];
    if (s.layer_of[o] != D) throw validation_error("outputs must sit on the last layer");
    if (seen_out[o]++) throw validation_error("output nodes must be distinct");
    pos[o] = j;
  }
  for (std::int32_t L = 1; L < D; ++L) {
    std::int32_t k = 0;
    for (std::int32_t id = 0; id < c.num_gates(); ++id)
      if (s.layer_of[id] == L) pos[id] = k++;
  }

  flat_result flat;
  flat.depth = D;
  flat.width = W;
  circuit& f = flat.c;
  f.num_inputs = D * W;
  f.gates.assign(f.num_inputs, gate{gate_kind::input, {}});
  f.outputs.assign(f.num_inputs, -1);

  for (std::int32_t id = W; id < c.num_gates(); ++id) {
    std::int32_t L = s.layer_of[id];
    std::vector<std::int32_t> srcs;
    for (std::int32_t src : c.gates[id].sources) srcs.push_back((L - 1) * W + pos[src]);
    f.gates.push_back({c.gates[id].kind, std::move(srcs)});
    f.outputs[(L % D) * W + pos[id]] = f.num_gates() - 1;
  }
  f.validate();
  return flat;
}

/*! \brief Embed a source configuration into the flat circuit's state. */
inline config flat_embed(const flat_result& flat, const config& x) {
  if (static_cast<std::int32_t>(x.size()) != flat.width)
    throw validation_error("embedding width mismatch");
  config s(flat.depth * flat.width);
  for (std::int32_t k = 0; k < flat.width; ++k) s.set(k, x.get(k));
  return s;
}

} // namespace majnet
