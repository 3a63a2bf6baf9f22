/* majnet: majority automata networks under block-sequential update schedules
 * Copyright (c) 2026 The majnet authors
 * SPDX-License-Identifier: Apache-2.0
 */

/*!
  \file dynamics.hpp
  \brief Stepping networks forward, tracing orbits, and locating limit cycles.
*/

#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "majnet/common.hpp"
#include "majnet/config.hpp"
#include "majnet/net.hpp"

namespace majnet {

/*!
  \brief Next state of one vertex, reading the given configuration.

  \param phase  time index modulo 3, selecting the clock symbol; ignored for
                unclocked vertices.
*/
inline bool local_rule(const network& net, const config& x, std::int32_t v, std::int64_t phase) {
  if (net.clocked()) {
    clock_sym c = net.clocks[v].s[phase % 3];
    if (c == clock_sym::zero) return false;
    if (c == clock_sym::one) return true;
  }
  std::int64_t active = 0;
  for (std::int32_t w : net.g.neighbors(v)) active += x.get(w);
  return net.r.fires(active, net.g.degree(v));
}

/*!
  \brief Advance a configuration by one global step.

  Blocks fire in schedule order.  All vertices of a block read the same
  configuration, and their writes land together before the next block runs,
  so later blocks observe fresh values.  The whole step uses one phase: the
  step computing x(t+1) from x(t) uses symbol position t mod 3.
*/
inline config global_step(const network& net, config x, std::int64_t phase = 0) {
  std::vector<std::pair<std::int32_t, bool>> pending;
  for (std::int32_t b = 0; b < net.scheme.num_blocks(); ++b) {
    pending.clear();
    for (std::int32_t v : net.scheme.members(b))
      pending.emplace_back(v, local_rule(net, x, v, phase));
    for (auto [v, bit] : pending) x.set(v, bit);
  }
  return x;
}

/*! \brief The orbit x(t0), x(t0+1), ..., x(t0+steps); `steps+1` entries. */
inline std::vector<config> trajectory(const network& net, const config& x0, std::int64_t steps,
                                      std::int64_t t0 = 0) {
  std::vector<config> out;
  out.reserve(static_cast<std::size_t>(steps) + 1);
  out.push_back(x0);
  for (std::int64_t t = 0; t < steps; ++t)
    out.push_back(global_step(net, out.back(), t0 + t));
  return out;
}

/*! \brief Cap on how many configurations cycle detection may store. */
struct budget {
  std::int64_t max_states = std::int64_t{1} << 22;
};

/*!
  \brief Where an orbit settles: entry time and length of its limit cycle.

  `cycle` holds the configurations of one full period, starting at
  x(transient).
*/
struct cycle_report {
  std::int64_t transient = 0;
  std::int64_t period = 1;
  std::vector<config> cycle;

  /*! \brief State at any time t >= 0, folding t into the cycle if past it. */
  const config& at(std::int64_t t, const std::vector<config>& prefix) const {
    if (t < transient) return prefix[static_cast<std::size_t>(t)];
    return cycle[static_cast<std::size_t>((t - transient) % period)];
  }
};

/*!
  \brief Run until the orbit revisits a state; report transient and period.

  For clocked networks a state repeats only when both the configuration and
  the phase match, so the visited key includes t mod 3 there.  Throws
  budget_exceeded when the bound on stored configurations is hit.
*/
inline cycle_report find_limit_cycle(const network& net, const config& x0, budget bud = {}) {
  const bool phased = net.clocked();
  struct key {
    config c;
    std::int64_t ph;
    bool operator==(const key& o) const { return ph == o.ph && c == o.c; }
  };
  struct key_hash {
    std::size_t operator()(const key& k) const {
      return k.c.hash() * 31 + static_cast<std::size_t>(k.ph);
    }
  };

  std::unordered_map<key, std::int64_t, key_hash> seen;
  std::vector<config> orbit{x0};
  std::int64_t t = 0;
  seen.emplace(key{x0, 0}, 0);
  for (;;) {
    if (static_cast<std::int64_t>(orbit.size()) > bud.max_states)
      throw budget_exceeded("cycle search exceeded the stored-state budget");
    config next = global_step(net, orbit.back(), t);
    ++t;
    key k{next, phased ? t % 3 : 0};
    auto it = seen.find(k);
    if (it != seen.end()) {
      cycle_report rep;
      rep.transient = it->second;
      rep.period = t - it->second;
      rep.cycle.assign(orbit.begin() + static_cast<std::ptrdiff_t>(rep.transient), orbit.end());
      return rep;
    }
    seen.emplace(std::move(k), t);
    orbit.push_back(std::move(next));
  }
}

/*!
  \brief Transient plus full orbit prefix, for callers that need both the
         approach and the cycle.
*/
struct orbit_summary {
  std::vector<config> prefix; //!< x(0) .. x(transient + period - 1)
  std::int64_t transient = 0;
  std::int64_t period = 1;
};

/*!
  \brief Worst-case transient over every configuration, by exhaustion.

  Walks all 2^n starting configurations, so callers must keep n small; the
  guard rejects networks above `max_exhaustive_n`.
*/
inline std::int64_t transient_length_network(const network& net, std::int32_t max_exhaustive_n = 20,
                                             budget bud = {}) {
  if (net.n() > max_exhaustive_n)
    throw budget_exceeded("network too large for exhaustive transient search");
  std::int64_t worst = 0;
  const std::uint64_t total = std::uint64_t{1} << net.n();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    config x(net.n());
    for (std::int32_t v = 0; v < net.n(); ++v) x.set(v, (bits >> v) & 1u);
    worst = std::max(worst, find_limit_cycle(net, x, bud).transient);
  }
  return worst;
}

/*! \brief Like find_limit_cycle but also hands back the approach path. */
inline orbit_summary find_orbit(const network& net, const config& x0, budget bud = {}) {
  const bool phased = net.clocked();
  struct key {
    config c;
    std::int64_t ph;
    bool operator==(const key& o) const { return ph == o.ph && c == o.c; }
  };
  struct key_hash {
    std::size_t operator()(const key& k) const {
      return k.c.hash() * 31 + static_cast<std::size_t>(k.ph);
    }
  };

  std::unordered_map<key, std::int64_t, key_hash> seen;
  orbit_summary out;
  out.prefix.push_back(x0);
  std::int64_t t = 0;
  seen.emplace(key{x0, 0}, 0);
  for (;;) {
    if (static_cast<std::int64_t>(out.prefix.size()) > bud.max_states)
      throw budget_exceeded("cycle search exceeded the stored-state budget");
    config next = global_step(net, out.prefix.back(), t);
    ++t;
    key k{next, phased ? t % 3 : 0};
    auto it = seen.find(k);
    if (it != seen.end()) {
      out.transient = it->second;
      out.period = t - it->second;
      return out;
    }
    seen.emplace(std::move(k), t);
    out.prefix.push_back(std::move(next));
  }
}

} // namespace majnet
