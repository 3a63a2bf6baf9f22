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
/// \brief Decision solvers for the four prediction problems, plus the
/// witness verification harness that replays compiled constructions against
/// their sources.

#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "majnet/circuit.hpp"
#include "majnet/common.hpp"
#include "majnet/config.hpp"
#include "majnet/dynamics.hpp"
#include "majnet/net.hpp"
#include "majnet/turing.hpp"
#include "majnet/witness.hpp"

namespace majnet {

/// Which question a prediction instance asks.
enum class predict_mode { once, eventual, full, conditional };

/// A decision-problem instance: a network, a start, and a question.
///
/// For `conditional`, `x0` carries the fixed part y on the observed
/// vertices; the vertices in `free_vertices` are unconstrained and their
/// bits in `x0` are ignored.
struct prediction_instance {
  network net;
  config x0{0};
  std::int32_t target = -1;
  predict_mode mode = predict_mode::once;
  std::vector<std::int32_t> free_vertices;  // conditional only: V minus W
};

/// A verdict with enough evidence to re-check it independently: the
/// witnessing time for YES, or the limit cycle proving NO.
struct verdict {
  bool yes = false;
  std::int64_t time = -1;       //!< YES: first step satisfying the question
  std::int64_t transient = -1;  //!< NO: steps before the limit cycle
  std::int64_t period = -1;     //!< NO: limit-cycle length
  std::vector<config> cycle;    //!< NO: the limit cycle, from x(transient)
  std::int64_t steps = 0;       //!< global steps simulated in total
  bool has_completion = false;  //!< conditional YES: completion below is set
  config completion{0};         //!< conditional YES: the witnessing start
};

namespace detail {

/// Orbit walk shared by the solvers: prefix of distinct states plus the
/// point where the orbit closes.
inline orbit_summary solver_orbit(const network& net, const config& x0, const budget& bud) {
  return find_orbit(net, x0, bud);
}

}  // namespace detail

/// \brief Does the target ever activate (at some step t >= 1)?
///
/// The target must start inactive.  Unclocked networks with sequential or
/// synchronous schemes take the structural fast path: sequential orbits end
/// in fixed points, synchronous orbits in cycles of period at most two, so
/// plain stepping with a one- or two-state window suffices.  Other schemes
/// walk the orbit with a visited map until a state (and phase, for clocked
/// networks) repeats.
inline verdict predict_once(const prediction_instance& inst, budget bud = {}) {
  const network& net = inst.net;
  net.validate();
  const std::int32_t v = inst.target;
  if (v < 0 || v >= net.n()) throw validation_error("target vertex out of range");
  if (static_cast<std::int32_t>(inst.x0.size()) != net.n())
    throw validation_error("initial configuration size mismatch");
  if (inst.x0.get(v)) throw validation_error("the target must start inactive");

  verdict out;
  if (!net.clocked() && net.scheme.is_sequential()) {
    // Sequential orbits settle in a fixed point.
    const std::int64_t cap =
        8 * static_cast<std::int64_t>(net.n()) * std::max(net.n(), 1) + 64;
    config cur = inst.x0;
    for (std::int64_t t = 1; t <= cap; ++t) {
      config nxt = global_step(net, cur, t - 1);
      ++out.steps;
      if (nxt.get(v)) {
        out.yes = true;
        out.time = t;
        return out;
      }
      if (nxt == cur) {
        out.transient = t - 1;
        out.period = 1;
        out.cycle = {nxt};
        return out;
      }
      cur = std::move(nxt);
    }
    throw budget_exceeded("sequential orbit exceeded the structural bound");
  }
  if (!net.clocked() && net.scheme.is_synchronous()) {
    // Synchronous orbits settle in a cycle of period one or two.
    const std::int64_t cap =
        8 * static_cast<std::int64_t>(net.n()) * std::max(net.n(), 1) + 64;
    config prev2(0), prev = inst.x0;
    bool have2 = false;
    for (std::int64_t t = 1; t <= cap; ++t) {
      config nxt = global_step(net, prev, t - 1);
      ++out.steps;
      if (nxt.get(v)) {
        out.yes = true;
        out.time = t;
        return out;
      }
      if (nxt == prev) {  // test period one before period two
        out.transient = t - 1;
        out.period = 1;
        out.cycle = {nxt};
        return out;
      }
      if (have2 && nxt == prev2) {
        out.transient = t - 2;
        out.period = 2;
        out.cycle = {prev2, prev};
        return out;
      }
      prev2 = std::move(prev);
      prev = std::move(nxt);
      have2 = true;
    }
    throw budget_exceeded("synchronous orbit exceeded the structural bound");
  }

  orbit_summary orb = detail::solver_orbit(net, inst.x0, bud);
  out.steps = orb.transient + orb.period;
  for (std::size_t t = 1; t < orb.prefix.size(); ++t)
    if (orb.prefix[t].get(v)) {
      out.yes = true;
      out.time = static_cast<std::int64_t>(t);
      return out;
    }
  out.transient = orb.transient;
  out.period = orb.period;
  out.cycle.assign(orb.prefix.begin() + static_cast<std::ptrdiff_t>(orb.transient),
                   orb.prefix.end());
  return out;
}

/// \brief Is the target permanently active from some step on?
///
/// YES exactly when the target is active in every configuration of the
/// limit cycle; the verdict's time is the earliest step from which the
/// target never drops.  The target must start inactive.
inline verdict predict_eventual(const prediction_instance& inst, budget bud = {}) {
  const network& net = inst.net;
  net.validate();
  const std::int32_t v = inst.target;
  if (v < 0 || v >= net.n()) throw validation_error("target vertex out of range");
  if (static_cast<std::int32_t>(inst.x0.size()) != net.n())
    throw validation_error("initial configuration size mismatch");
  if (inst.x0.get(v)) throw validation_error("the target must start inactive");

  orbit_summary orb = detail::solver_orbit(net, inst.x0, bud);
  verdict out;
  out.steps = orb.transient + orb.period;
  out.transient = orb.transient;
  out.period = orb.period;
  out.cycle.assign(orb.prefix.begin() + static_cast<std::ptrdiff_t>(orb.transient),
                   orb.prefix.end());
  bool always = true;
  for (const config& c : out.cycle) always &= c.get(v);
  if (!always) return out;

  out.yes = true;
  std::int64_t t0 = orb.transient;
  while (t0 > 0 && orb.prefix[static_cast<std::size_t>(t0 - 1)].get(v)) --t0;
  out.time = t0;  // x(t)_v = 1 for all t >= t0; t0 >= 1 since x(0)_v = 0
  return out;
}

/// \brief Does the trajectory reach the all-active configuration?
///
/// Counts t = 0: an all-active start is YES immediately.  NO evidence is
/// the limit cycle, none of whose configurations is all-active.
inline verdict predict_full(const prediction_instance& inst, budget bud = {}) {
  const network& net = inst.net;
  net.validate();
  if (static_cast<std::int32_t>(inst.x0.size()) != net.n())
    throw validation_error("initial configuration size mismatch");

  orbit_summary orb = detail::solver_orbit(net, inst.x0, bud);
  verdict out;
  out.steps = orb.transient + orb.period;
  for (std::size_t t = 0; t < orb.prefix.size(); ++t)
    if (orb.prefix[t].all_ones()) {
      out.yes = true;
      out.time = static_cast<std::int64_t>(t);
      return out;
    }
  out.transient = orb.transient;
  out.period = orb.period;
  out.cycle.assign(orb.prefix.begin() + static_cast<std::ptrdiff_t>(orb.transient),
                   orb.prefix.end());
  return out;
}

/// \brief Can the free vertices be completed so the target ever activates?
///
/// Enumerates all completions of the free vertices in lexicographic order
/// (ascending vertex id, first listed vertex as the most significant bit)
/// and answers YES on the first completion whose once-question is YES, so
/// ties break toward the smallest enumeration index.  The target must be
/// observed (not free) and fixed inactive.  With no free vertices this is
/// exactly the once-question.
inline verdict predict_conditional(const prediction_instance& inst, budget bud = {},
                                   std::int32_t enumeration_bound = 20) {
  const network& net = inst.net;
  net.validate();
  const std::int32_t v = inst.target;
  if (v < 0 || v >= net.n()) throw validation_error("target vertex out of range");
  if (static_cast<std::int32_t>(inst.x0.size()) != net.n())
    throw validation_error("initial configuration size mismatch");

  std::vector<std::int32_t> free_sorted(inst.free_vertices);
  std::sort(free_sorted.begin(), free_sorted.end());
  if (std::adjacent_find(free_sorted.begin(), free_sorted.end()) != free_sorted.end())
    throw validation_error("free vertex listed twice");
  for (std::int32_t u : free_sorted)
    if (u < 0 || u >= net.n()) throw validation_error("free vertex out of range");
  if (std::binary_search(free_sorted.begin(), free_sorted.end(), v))
    throw validation_error("the target must be an observed vertex");
  if (inst.x0.get(v)) throw validation_error("the target must start inactive");
  const std::int32_t m = static_cast<std::int32_t>(free_sorted.size());
  if (m > enumeration_bound)
    throw budget_exceeded("too many free vertices to enumerate");

  prediction_instance once;
  once.net = net;
  once.target = v;
  once.mode = predict_mode::once;

  verdict out;
  verdict last;
  for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << m); ++idx) {
    config x = inst.x0;
    for (std::int32_t j = 0; j < m; ++j)
      x.set(free_sorted[j], (idx >> (m - 1 - j)) & 1u);
    once.x0 = x;
    verdict inner = predict_once(once, bud);
    out.steps += inner.steps;
    if (inner.yes) {
      out.yes = true;
      out.time = inner.time;
      out.has_completion = true;
      out.completion = x;
      return out;
    }
    last = std::move(inner);
  }
  out.transient = last.transient;
  out.period = last.period;
  out.cycle = std::move(last.cycle);
  return out;
}

/// Result of replaying a compiled construction against its source.
struct verify_report {
  bool ok = true;
  std::int64_t samples_run = 0;
  std::int64_t divergence_sample = -1;  //!< sample index of the first mismatch
  std::int64_t divergence_time = -1;    //!< compiled step of the first mismatch
  std::int32_t divergence_vertex = -1;  //!< compiled vertex that disagreed
  std::int32_t max_degree = 0;          //!< measured on the compiled network
  std::int64_t max_block = 0;           //!< largest update block measured
  std::string message;
};

namespace detail {

inline void measure(verify_report& rep, const network& compiled) {
  rep.max_degree = compiled.g.max_degree();
  for (std::int32_t b = 0; b < compiled.scheme.num_blocks(); ++b)
    rep.max_block = std::max<std::int64_t>(
        rep.max_block, static_cast<std::int64_t>(compiled.scheme.members(b).size()));
}

inline void diverge(verify_report& rep, std::int64_t sample, std::int64_t t, std::int32_t vertex,
                    const std::string& what) {
  if (!rep.ok) return;  // keep the first divergence
  rep.ok = false;
  rep.divergence_sample = sample;
  rep.divergence_time = t;
  rep.divergence_vertex = vertex;
  rep.message = what;
}

inline config random_config(rng& r, std::int32_t n) {
  config x(n);
  for (std::int32_t v = 0; v < n; ++v) x.set(v, r.flip());
  return x;
}

}  // namespace detail

/// \brief Replays a compiled network against its source network.
///
/// Dispatches on the witness kind: trajectory equality under the vertex map
/// (amplification, clock attachment, portion), schedule replay (clock), or
/// verdict equality (latch, cascade).  Random starts come from `seed`;
/// `steps` bounds each side-by-side run.
inline verify_report verify_witness(const network& source, const network& compiled,
                                    const witness& w, std::int64_t samples, std::int64_t steps,
                                    std::uint64_t seed) {
  w.validate(compiled.n());
  verify_report rep;
  detail::measure(rep, compiled);
  rng r(seed);

  switch (w.kind) {
    case witness_kind::clock_schedule: {
      // The compiled network IS the clock here; the vertex map sends each
      // schedule word s (index 4*s0+2*s1+s2) to its display vertex.
      config x = w.initial(config(0), compiled.n());
      rep.samples_run = 1;
      for (std::int64_t t = 0; t <= steps; ++t) {
        for (auto [s, vtx] : w.vertex_map) {
          bool want = ((s >> (2 - t % 3)) & 1) != 0;
          if (x.get(vtx) != want) {
            detail::diverge(rep, 0, t, vtx, "schedule bit mismatch");
            return rep;
          }
        }
        x = global_step(compiled, x, t);
      }
      break;
    }
    case witness_kind::amplification: {
      if (w.phi.empty()) throw validation_error("amplification witness needs phi");
      for (std::int64_t s = 0; s < samples; ++s) {
        config xs = detail::random_config(r, source.n());
        config xa(compiled.n());
        for (std::int32_t u = 0; u < compiled.n(); ++u) xa.set(u, xs.get(w.phi[u]));
        rep.samples_run = s + 1;
        for (std::int64_t t = 0; t < steps; ++t) {
          xs = global_step(source, xs, t);
          xa = global_step(compiled, xa, t);
          for (std::int32_t u = 0; u < compiled.n(); ++u)
            if (xa.get(u) != xs.get(w.phi[u])) {
              detail::diverge(rep, s, t + 1, u, "copy left its source vertex");
              return rep;
            }
        }
      }
      break;
    }
    case witness_kind::clocked_majority: {
      // Source is the clocked network; originals must track it exactly.
      for (std::int64_t s = 0; s < samples; ++s) {
        config xs = detail::random_config(r, source.n());
        config xm = w.initial(xs, compiled.n());
        rep.samples_run = s + 1;
        for (std::int64_t t = 0; t < steps; ++t) {
          xs = global_step(source, xs, t);
          xm = global_step(compiled, xm, t);
          for (auto [sv, cv] : w.vertex_map)
            if (xm.get(cv) != xs.get(sv)) {
              detail::diverge(rep, s, t + 1, cv, "original diverged from clocked source");
              return rep;
            }
        }
      }
      break;
    }
    case witness_kind::eventual: {
      if (w.source_target < 0 || w.target < 0)
        throw validation_error("latch witness needs source and compiled targets");
      for (std::int64_t s = 0; s < samples; ++s) {
        config xs = detail::random_config(r, source.n());
        xs.set(w.source_target, false);
        rep.samples_run = s + 1;
        prediction_instance src_inst{source, xs, w.source_target, predict_mode::once, {}};
        prediction_instance cmp_inst{compiled, w.initial(xs, compiled.n()), w.target,
                                     predict_mode::eventual, {}};
        verdict a = predict_once(src_inst);
        verdict b = predict_eventual(cmp_inst);
        if (a.yes != b.yes) {
          detail::diverge(rep, s, -1, w.target, "latch verdict disagrees with source");
          return rep;
        }
      }
      break;
    }
    case witness_kind::full_prediction: {
      if (w.source_target < 0)
        throw validation_error("cascade witness needs the source target");
      for (std::int64_t s = 0; s < samples; ++s) {
        config xs = detail::random_config(r, source.n());
        xs.set(w.source_target, false);
        rep.samples_run = s + 1;
        prediction_instance src_inst{source, xs, w.source_target, predict_mode::once, {}};
        prediction_instance cmp_inst{compiled, w.initial(xs, compiled.n()), -1,
                                     predict_mode::full, {}};
        verdict a = predict_once(src_inst);
        verdict b = predict_full(cmp_inst);
        if (a.yes != b.yes) {
          detail::diverge(rep, s, -1, w.source_target, "cascade verdict disagrees with source");
          return rep;
        }
      }
      break;
    }
    case witness_kind::portion: {
      for (std::int64_t s = 0; s < samples; ++s) {
        config xs = detail::random_config(r, source.n());
        config xp = w.initial(xs, compiled.n());
        config pads = xp;
        rep.samples_run = s + 1;
        for (std::int64_t t = 0; t < steps; ++t) {
          xs = global_step(source, xs, t);
          xp = global_step(compiled, xp, t);
          for (auto [sv, cv] : w.vertex_map)
            if (xp.get(cv) != xs.get(sv)) {
              detail::diverge(rep, s, t + 1, cv, "original diverged under the portion rule");
              return rep;
            }
          for (std::int32_t u = source.n(); u < compiled.n(); ++u)
            if (xp.get(u) != pads.get(u)) {
              detail::diverge(rep, s, t + 1, u, "pad clique changed state");
              return rep;
            }
        }
      }
      break;
    }
    default:
      throw validation_error("witness kind does not verify against a network source");
  }
  if (rep.ok && rep.message.empty()) rep.message = "ok";
  return rep;
}

/// \brief Replays a compiled network against its source circuit.
///
/// circuit-gates: one compiled step must equal one circuit evaluation.
/// circuit-clocked: the observed row must show the u-th iterate at step 3u.
/// bseq-pipeline: the baked input's trajectory must show iterates at
/// multiples of P, and the compiled once-verdict must equal circuit
/// reachability of the target coordinate.
inline verify_report verify_witness(const circuit& source, const network& compiled,
                                    const witness& w, std::int64_t samples, std::int64_t steps,
                                    std::uint64_t seed) {
  w.validate(compiled.n());
  verify_report rep;
  detail::measure(rep, compiled);
  rng r(seed);

  switch (w.kind) {
    case witness_kind::circuit_gates: {
      for (std::int64_t s = 0; s < samples; ++s) {
        config x = detail::random_config(r, source.num_inputs);
        config want = source.evaluate(x);
        config got = global_step(compiled, w.initial(x, compiled.n()), 0);
        rep.samples_run = s + 1;
        for (std::size_t j = 0; j < source.outputs.size(); ++j) {
          std::int32_t cv = witness::mapped(w.output_vertex, static_cast<std::int32_t>(j));
          if (got.get(cv) != want.get(j)) {
            detail::diverge(rep, s, 1, cv, "gate output mismatch after one step");
            return rep;
          }
        }
      }
      break;
    }
    case witness_kind::circuit_clocked: {
      const std::int64_t P = w.steps_per_iteration;
      for (std::int64_t s = 0; s < samples; ++s) {
        config x = detail::random_config(r, source.num_inputs);
        config state = w.initial(x, compiled.n());
        rep.samples_run = s + 1;
        for (std::int64_t t = 0; t <= steps; ++t) {
          if (t % P == 0) {
            config want = source.iterate(x, t / P);
            for (std::int32_t i = 0; i < source.num_inputs; ++i) {
              std::int32_t cv = witness::mapped(w.output_vertex, i);
              if (state.get(cv) != want.get(i)) {
                detail::diverge(rep, s, t, cv, "cylinder row left the circuit iterate");
                return rep;
              }
            }
          }
          state = global_step(compiled, state, t);
        }
      }
      break;
    }
    case witness_kind::bseq_pipeline: {
      if (w.source_input.empty())
        throw validation_error("pipeline witness carries no source input");
      config x(static_cast<std::int32_t>(w.source_input.size()));
      for (std::size_t j = 0; j < w.source_input.size(); ++j) x.set(j, w.source_input[j] != 0);
      const std::int64_t P = w.steps_per_iteration;
      config state = w.initial(x, compiled.n());
      rep.samples_run = 1;
      for (std::int64_t t = 0; t <= steps; ++t) {
        if (t % P == 0) {
          config want = source.iterate(x, t / P);
          for (std::size_t j = 0; j < w.output_vertex.size(); ++j) {
            std::int32_t coord = w.output_vertex[j].first;
            std::int32_t cv = w.output_vertex[j].second;
            if (state.get(cv) != want.get(coord)) {
              detail::diverge(rep, 0, t, cv, "pipeline coordinate left the circuit iterate");
              return rep;
            }
          }
        }
        state = global_step(compiled, state, t);
      }
      // Answer equality: the compiled once-question equals reachability.
      prediction_instance inst{compiled, w.initial(x, compiled.n()), w.target,
                               predict_mode::once, {}};
      bool want = reach_oracle(source, x, w.source_target);
      bool got = predict_once(inst).yes;
      if (want != got)
        detail::diverge(rep, 0, -1, w.target, "pipeline verdict disagrees with reachability");
      break;
    }
    default:
      throw validation_error("witness kind does not verify against a circuit source");
  }
  if (rep.ok && rep.message.empty()) rep.message = "ok";
  return rep;
}

/// \brief Replays a compiled step circuit against its source machine.
///
/// Deterministic: runs the machine and the circuit side by side from the
/// encoded start for `steps` steps (or until the tape window would be
/// left), comparing encoded configurations after every step.
inline verify_report verify_witness(const turing_machine& source, const tm_circuit& compiled,
                                    std::int64_t steps) {
  verify_report rep;
  rep.samples_run = 1;
  tm_state ms = compiled.decode(compiled.x0);
  config cs = compiled.x0;
  for (std::int64_t t = 1; t <= steps; ++t) {
    tm_step(source, ms);
    cs = compiled.c.evaluate(cs);
    config want = compiled.encode(source, ms);
    if (!(cs == want)) {
      for (std::int32_t b = 0; b < static_cast<std::int32_t>(cs.size()); ++b)
        if (cs.get(b) != want.get(b)) {
          detail::diverge(rep, 0, t, b, "circuit configuration left the machine run");
          return rep;
        }
    }
  }
  rep.message = "ok";
  return rep;
}

}  // namespace majnet
