/* majnet: majority automata networks under block-sequential update schedules
 * Copyright (c) 2026 The majnet authors
 * SPDX-License-Identifier: Apache-2.0
 */

/*!
  \file circuit.hpp
  \brief Boolean circuits: representation, evaluation, iteration, and the
         brute-force reachability oracle used to check compiled networks.
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "majnet/common.hpp"
#include "majnet/config.hpp"

namespace majnet {

enum class gate_kind : std::uint8_t { input, and_, or_, not_ };

inline const char* gate_kind_name(gate_kind k) {
  switch (k) {
    case gate_kind::input: return "INPUT";
    case gate_kind::and_: return "AND";
    case gate_kind::or_: return "OR";
    case gate_kind::not_: return "NOT";
  }
  return "?";
}

/*! \brief One gate: a kind and the ids of the gates feeding it. */
struct gate {
  gate_kind kind = gate_kind::input;
  std::vector<std::int32_t> sources;

  bool operator==(const gate& o) const = default;
};

/*!
  \brief A Boolean circuit C : {0,1}^n -> {0,1}^m.

  Gates are stored in topological order: every source id is smaller than
  the gate that reads it.  The first `num_inputs` gates are the inputs, in
  coordinate order.  `outputs[j]` names the gate driving output j; a gate
  may drive several outputs.
*/
struct circuit {
  std::int32_t num_inputs = 0;
  std::vector<gate> gates;
  std::vector<std::int32_t> outputs;

  std::int32_t num_gates() const { return static_cast<std::int32_t>(gates.size()); }
  std::int32_t num_outputs() const { return static_cast<std::int32_t>(outputs.size()); }

  bool operator==(const circuit& o) const = default;

  /*! \brief Structural checks; throws validation_error on the first failure. */
  void validate() const {
    if (num_inputs < 0) throw validation_error("negative input count");
    if (num_gates() < num_inputs) throw validation_error("fewer gates than declared inputs");
    for (std::int32_t i = 0; i < num_inputs; ++i)
      if (gates[i].kind != gate_kind::input)
        throw validation_error("the first gates must be the inputs, in order");
    for (std::int32_t i = num_inputs; i < num_gates(); ++i)
      if (gates[i].kind == gate_kind::input)
        throw validation_error("input gates must precede all logic gates");
    for (std::int32_t i = 0; i < num_gates(); ++i) {
      const gate& g = gates[i];
      if (g.kind == gate_kind::input) {
        if (!g.sources.empty()) throw validation_error("input gates take no sources");
        continue;
      }
      if (g.sources.empty()) throw validation_error("logic gates need at least one source");
      if (g.kind == gate_kind::not_ && g.sources.size() != 1)
        throw validation_error("NOT gates take exactly one source");
      for (std::int32_t s : g.sources)
        if (s < 0 || s >= i)
          throw validation_error("gate sources must be earlier gates");
      std::unordered_set<std::int32_t> uniq(g.sources.begin(), g.sources.end());
      if (uniq.size() != g.sources.size())
        throw validation_error("a gate may not read the same source twice");
    }
    for (std::int32_t o : outputs)
      if (o < 0 || o >= num_gates()) throw validation_error("output names an unknown gate");
  }

  /*! \brief Values of every gate on one input vector. */
  std::vector<bool> eval_gates(const config& x) const {
    if (x.size() != static_cast<std::size_t>(num_inputs)) throw validation_error("input width mismatch");
    std::vector<bool> val(gates.size());
    for (std::int32_t i = 0; i < num_gates(); ++i) {
      const gate& g = gates[i];
      switch (g.kind) {
        case gate_kind::input: val[i] = x.get(i); break;
        case gate_kind::not_: val[i] = !val[g.sources[0]]; break;
        case gate_kind::and_: {
          bool v = true;
          for (std::int32_t s : g.sources) v = v && val[s];
          val[i] = v;
          break;
        }
        case gate_kind::or_: {
          bool v = false;
          for (std::int32_t s : g.sources) v = v || val[s];
          val[i] = v;
          break;
        }
      }
    }
    return val;
  }

  /*! \brief C(x): the output vector on one input. */
  config evaluate(const config& x) const {
    std::vector<bool> val = eval_gates(x);
    config y(num_outputs());
    for (std::int32_t j = 0; j < num_outputs(); ++j) y.set(j, val[outputs[j]]);
    return y;
  }

  /*! \brief C^t(x); requires as many outputs as inputs. */
  config iterate(const config& x, std::int64_t t) const {
    if (num_outputs() != num_inputs)
      throw validation_error("iteration needs matching input and output widths");
    config y = x;
    for (std::int64_t i = 0; i < t; ++i) y = evaluate(y);
    return y;
  }

  /*! \brief Fan-out of each gate: gate source slots plus output slots reading it. */
  std::vector<std::int32_t> fanout() const {
    std::vector<std::int32_t> out(gates.size(), 0);
    for (const gate& g : gates)
      for (std::int32_t s : g.sources) ++out[s];
    for (std::int32_t o : outputs) ++out[o];
    return out;
  }

  /*! \brief Max over gates of fan-in plus fan-out (inputs count fan-out only). */
  std::int32_t max_degree() const {
    std::vector<std::int32_t> fo = fanout();
    std::int32_t d = 0;
    for (std::int32_t i = 0; i < num_gates(); ++i) {
      std::int32_t fi = gates[i].kind == gate_kind::input
                            ? 0
                            : static_cast<std::int32_t>(gates[i].sources.size());
      d = std::max(d, fi + fo[i]);
    }
    return d;
  }

  /*! \brief Longest-path level of each gate; inputs sit at level 0. */
  std::vector<std::int32_t> levels() const {
    std::vector<std::int32_t> lv(gates.size(), 0);
    for (std::int32_t i = 0; i < num_gates(); ++i)
      for (std::int32_t s : gates[i].sources)
        lv[i] = std::max(lv[i], lv[s] + 1);
    return lv;
  }

  /*! \brief Depth: the largest gate level. */
  std::int32_t depth() const {
    std::vector<std::int32_t> lv = levels();
    return lv.empty() ? 0 : *std::max_element(lv.begin(), lv.end());
  }

  bool is_monotone() const {
    for (const gate& g : gates)
      if (g.kind == gate_kind::not_) return false;
    return true;
  }
};

/*!
  \brief Does iterating C from x ever activate coordinate `target`?

  Brute force: walk C, C^2(x), ... until a configuration repeats.  The
  orbit of an n-bit map repeats within 2^n + 1 steps, so this is exact.
  Meant for the small instances the test oracles run on.
*/
inline bool reach_oracle(const circuit& c, const config& x0, std::int32_t target) {
  if (c.num_inputs != c.num_outputs())
    throw validation_error("reachability needs matching input and output widths");
  if (target < 0 || target >= c.num_inputs)
    throw validation_error("target coordinate out of range");
  std::unordered_set<config, config_hash> seen;
  config x = x0;
  for (;;) {
    if (x.get(target)) return true;
    if (!seen.insert(x).second) return false;
    x = c.evaluate(x);
  }
}

/*! \brief Does iterating C from x ever reach the all-ones configuration? */
inline bool reach_all_ones_oracle(const circuit& c, const config& x0) {
  if (c.num_inputs != c.num_outputs())
    throw validation_error("reachability needs matching input and output widths");
  std::unordered_set<config, config_hash> seen;
  config x = x0;
  for (;;) {
    if (x.all_ones()) return true;
    if (!seen.insert(x).second) return false;
    x = c.evaluate(x);
  }
}

} // namespace majnet
