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
/// \brief Machine-checkable records of what a compiler built and how to
/// read the compiled network back.
///
/// Every compiler in gadgets.hpp returns a witness next to its network.
/// The witness names the vertices that carry source coordinates, the time
/// dilation (one source iteration = `steps_per_iteration` compiled steps,
/// observed at steps congruent to `phase`), and the preset values every
/// non-source vertex must start from.  A witness plus a source input is
/// enough to reconstruct the compiled initial configuration and to check
/// the compiled trajectory against the source object step by step.

#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "majnet/common.hpp"
#include "majnet/config.hpp"

namespace majnet {

/// What kind of construction produced a compiled object.
enum class witness_kind {
  circuit_gates,    ///< monotone circuit -> majority network, one step per evaluation
  clock_schedule,   ///< the 12-vertex periodic scheduler
  amplification,    ///< (2k+1)-fold redundant copy with projection phi
  circuit_clocked,  ///< iterable circuit -> clocked cylinder, three steps per iteration
  clocked_majority, ///< clocked network -> plain majority network with attached clocks
  bseq_pipeline,    ///< full circuit-to-prediction-instance pipeline
  eventual,         ///< latch gadget turning one-step prediction into eventual prediction
  full_prediction,  ///< clique cascade turning one-step prediction into all-active prediction
  portion,          ///< threshold shift from majority to portion-p
  tm_circuit,       ///< bounded-tape machine -> step circuit
};

/// Readable name used in serialized witnesses and reports.
inline const char* witness_kind_name(witness_kind k) {
  switch (k) {
    case witness_kind::circuit_gates: return "circuit-gates";
    case witness_kind::clock_schedule: return "clock-schedule";
    case witness_kind::amplification: return "amplification";
    case witness_kind::circuit_clocked: return "circuit-clocked";
    case witness_kind::clocked_majority: return "clocked-majority";
    case witness_kind::bseq_pipeline: return "bseq-pipeline";
    case witness_kind::eventual: return "eventual";
    case witness_kind::full_prediction: return "full-prediction";
    case witness_kind::portion: return "portion";
    case witness_kind::tm_circuit: return "tm-circuit";
  }
  return "unknown";
}

inline witness_kind parse_witness_kind(const std::string& name) {
  for (int k = 0; k <= static_cast<int>(witness_kind::tm_circuit); ++k) {
    auto kk = static_cast<witness_kind>(k);
    if (name == witness_kind_name(kk)) return kk;
  }
  throw validation_error("unknown witness kind: " + name);
}

/// \brief Record tying a compiled network back to its source object.
///
/// Vertex maps are stored as (source index, compiled vertex) pairs so that
/// partial maps serialize without sentinel conventions.  All maps must be
/// injective on the compiled side.
struct witness {
  witness_kind kind = witness_kind::circuit_gates;

  /// Compiled steps per source iteration (P >= 1).
  std::int64_t steps_per_iteration = 1;
  /// Observation phase r, 0 <= r < P: compare at compiled steps t == r (mod P).
  std::int64_t phase = 0;

  /// Source coordinate i -> compiled vertex that must start at x_i.
  std::vector<std::pair<std::int32_t, std::int32_t>> input_vertex;
  /// Additional (coordinate, vertex) pairs initialized from the same source
  /// input (used when a coordinate is mirrored onto several vertices).
  std::vector<std::pair<std::int32_t, std::int32_t>> input_alias;
  /// Source coordinate j -> compiled vertex where the result is observed.
  std::vector<std::pair<std::int32_t, std::int32_t>> output_vertex;
  /// Source vertex -> compiled vertex (identity-style embeddings).
  std::vector<std::pair<std::int32_t, std::int32_t>> vertex_map;
  /// Compiled vertex -> source vertex projection (amplification only);
  /// many-to-one, indexed by compiled vertex id.
  std::vector<std::int32_t> phi;

  /// Target vertex when the compiled object is a prediction instance.
  std::int32_t target = -1;

  /// Target vertex of the source instance, when the construction re-targets
  /// (latch and cascade attachments); -1 otherwise.
  std::int32_t source_target = -1;

  /// Preset values of the compiled network: the configuration every run
  /// starts from before source inputs are overlaid.  Empty when the
  /// construction has no presets (for example amplification).
  std::vector<std::uint8_t> base;

  /// The concrete source input baked into a single-instance construction
  /// (bseq pipeline); empty for input-generic compilers.
  std::vector<std::uint8_t> source_input;

  /// Free-form deviation and measurement notes.
  std::vector<std::string> notes;

  /// \brief Builds the compiled initial configuration for source input x.
  ///
  /// Starts from `base` (zero-filled when absent, sized `compiled_n`) and
  /// writes x through `input_vertex` and `input_alias`.
  config initial(const config& x, std::int32_t compiled_n) const {
    config y(compiled_n);
    if (!base.empty()) {
      if (static_cast<std::int32_t>(base.size()) != compiled_n)
        throw validation_error("witness base size does not match network size");
      for (std::int32_t v = 0; v < compiled_n; ++v) y.set(v, base[v] != 0);
    }
    auto apply = [&](const std::vector<std::pair<std::int32_t, std::int32_t>>& m) {
      for (auto [c, v] : m) {
        if (c < 0 || static_cast<std::size_t>(c) >= x.size()) throw validation_error("witness map coordinate out of range");
        if (v < 0 || v >= compiled_n) throw validation_error("witness map vertex out of range");
        y.set(v, x.get(c));
      }
    };
    apply(input_vertex);
    apply(input_alias);
    return y;
  }

  /// Checks structural invariants: P/r ranges and injectivity of each map's
  /// compiled side.  Throws validation_error on failure.
  void validate(std::int32_t compiled_n) const {
    if (steps_per_iteration < 1) throw validation_error("witness: steps per iteration must be >= 1");
    if (phase < 0 || phase >= steps_per_iteration)
      throw validation_error("witness: phase must satisfy 0 <= r < P");
    auto check_injective = [&](const std::vector<std::pair<std::int32_t, std::int32_t>>& m,
                               const char* name) {
      std::vector<std::int32_t> seen;
      seen.reserve(m.size());
      for (auto [c, v] : m) {
        (void)c;
        if (v < 0 || v >= compiled_n)
          throw validation_error(std::string("witness ") + name + ": vertex out of range");
        seen.push_back(v);
      }
      std::sort(seen.begin(), seen.end());
      if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw validation_error(std::string("witness ") + name + ": map is not injective");
    };
    check_injective(input_vertex, "input map");
    check_injective(output_vertex, "output map");
    check_injective(vertex_map, "vertex map");
    if (!phi.empty() && static_cast<std::int32_t>(phi.size()) != compiled_n)
      throw validation_error("witness phi: size must equal compiled vertex count");
    if (target != -1 && (target < 0 || target >= compiled_n))
      throw validation_error("witness target out of range");
    if (!base.empty() && static_cast<std::int32_t>(base.size()) != compiled_n)
      throw validation_error("witness base: size must equal compiled vertex count");
  }

  /// Looks up a map entry; throws if the coordinate is absent.
  static std::int32_t mapped(const std::vector<std::pair<std::int32_t, std::int32_t>>& m,
                             std::int32_t coordinate) {
    for (auto [c, v] : m)
      if (c == coordinate) return v;
    throw validation_error("witness: coordinate not present in map");
  }
};

/// \brief Composes two witnesses applied in sequence: `second` compiles the
/// output of the construction recorded by `first`.
///
/// Coordinate maps compose through `second`'s vertex placement of `first`'s
/// vertices; time dilations multiply.  `second.vertex_map` must cover every
/// vertex `first` maps to (identity embeddings do).
inline witness compose(const witness& first, const witness& second, witness_kind kind) {
  witness w;
  w.kind = kind;
  w.steps_per_iteration = first.steps_per_iteration * second.steps_per_iteration;
  w.phase = first.phase * second.steps_per_iteration + second.phase;
  auto relocate = [&](std::int32_t v) -> std::int32_t {
    if (second.vertex_map.empty()) return v;  // identity placement
    return witness::mapped(second.vertex_map, v);
  };
  for (auto [c, v] : first.input_vertex) w.input_vertex.emplace_back(c, relocate(v));
  for (auto [c, v] : first.input_alias) w.input_alias.emplace_back(c, relocate(v));
  for (auto [c, v] : first.output_vertex) w.output_vertex.emplace_back(c, relocate(v));
  if (first.target >= 0) w.target = relocate(first.target);
  w.notes = first.notes;
  w.notes.insert(w.notes.end(), second.notes.begin(), second.notes.end());
  return w;
}

}  // namespace majnet
