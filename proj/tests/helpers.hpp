/* majnet: majority automata networks under block-sequential update schedules
 * Copyright (c) 2026 The majnet authors
 * SPDX-License-Identifier: Apache-2.0
 */

// Random instance generators shared by the gadget, solver, and acceptance
// tests.  Everything is driven by the library's own deterministic rng so
// failures reproduce from the seed alone.

#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "majnet/circuit.hpp"
#include "majnet/common.hpp"
#include "majnet/gadgets.hpp"
#include "majnet/net.hpp"

namespace majnet_test {

using namespace majnet;

inline config input_bits(std::uint64_t bits, std::int32_t n) {
  config x(n);
  for (std::int32_t i = 0; i < n; ++i) x.set(i, (bits >> i) & 1u);
  return x;
}

/// Random monotone circuit with fan-in 2..3; iterable versions get n
/// distinct non-input output gates so they can be applied repeatedly.
inline circuit random_monotone_circuit(rng& r, std::int32_t n, std::int32_t n_gates,
                                       bool iterable) {
  circuit c;
  c.num_inputs = n;
  c.gates.assign(n, gate{gate_kind::input, {}});
  for (std::int32_t g = 0; g < n_gates; ++g) {
    gate gt;
    gt.kind = r.flip() ? gate_kind::and_ : gate_kind::or_;
    std::int32_t pool = static_cast<std::int32_t>(c.gates.size());
    std::int32_t hi = std::min<std::int32_t>(3, pool);
    std::int32_t lo = std::min<std::int32_t>(2, hi);
    std::int32_t arity = static_cast<std::int32_t>(r.range(lo, hi));
    std::vector<std::int32_t> srcs;
    while (static_cast<std::int32_t>(srcs.size()) < arity) {
      std::int32_t s = static_cast<std::int32_t>(r.below(pool));
      bool dup = false;
      for (std::int32_t q : srcs) dup |= q == s;
      if (!dup) srcs.push_back(s);
    }
    gt.sources = srcs;
    c.gates.push_back(gt);
  }
  if (iterable) {
    // Top up until there are at least n non-input gates, then draw n
    // distinct outputs from them.
    while (static_cast<std::int32_t>(c.gates.size()) - n < n) {
      gate gt;
      gt.kind = gate_kind::or_;
      gt.sources = {static_cast<std::int32_t>(r.below(c.gates.size())),
                    static_cast<std::int32_t>(c.gates.size()) - 1};
      if (gt.sources[0] == gt.sources[1])
        gt.sources[0] = (gt.sources[0] + 1) % (static_cast<std::int32_t>(c.gates.size()) - 1);
      c.gates.push_back(gt);
    }
    std::vector<std::int32_t> cand;
    for (std::int32_t g = n; g < static_cast<std::int32_t>(c.gates.size()); ++g)
      cand.push_back(g);
    for (std::int32_t j = 0; j < n; ++j) {
      std::int32_t left = static_cast<std::int32_t>(cand.size()) - j;
      std::int32_t pick = static_cast<std::int32_t>(r.below(left));
      std::swap(cand[pick], cand[left - 1]);
      c.outputs.push_back(cand[left - 1]);
    }
  } else {
    c.outputs.push_back(static_cast<std::int32_t>(c.gates.size()) - 1);
  }
  c.validate();
  return c;
}

/// Random iterable circuit of depth 1: n gates reading only inputs, one
/// output per gate.
inline circuit random_depth1_circuit(rng& r, std::int32_t n) {
  circuit c;
  c.num_inputs = n;
  c.gates.assign(n, gate{gate_kind::input, {}});
  for (std::int32_t g = 0; g < n; ++g) {
    gate gt;
    gt.kind = r.flip() ? gate_kind::and_ : gate_kind::or_;
    std::int32_t hi = std::min<std::int32_t>(3, n);
    std::int32_t lo = std::min<std::int32_t>(2, hi);
    std::int32_t arity = static_cast<std::int32_t>(r.range(lo, hi));
    std::vector<std::int32_t> srcs;
    while (static_cast<std::int32_t>(srcs.size()) < arity) {
      std::int32_t s = static_cast<std::int32_t>(r.below(n));
      bool dup = false;
      for (std::int32_t q : srcs) dup |= q == s;
      if (!dup) srcs.push_back(s);
    }
    gt.sources = srcs;
    c.gates.push_back(gt);
    c.outputs.push_back(n + g);
  }
  c.validate();
  return c;
}

/// Circuit DAG degree after the single-consumer-input preprocessing the
/// gate compiler applies: an input with fan-out other than one counts
/// through its inserted buffer gate (fan-in 1), and the result is floored
/// at two like the compiler's own bookkeeping.
inline std::int32_t effective_circuit_degree(const circuit& c) {
  std::vector<std::int32_t> fan_out(c.gates.size(), 0);
  for (const auto& g : c.gates)
    for (std::int32_t s : g.sources) ++fan_out[s];
  for (std::int32_t o : c.outputs) ++fan_out[o];
  std::int32_t m = 2;
  for (std::size_t g = 0; g < c.gates.size(); ++g) {
    if (c.gates[g].kind == gate_kind::input)
      m = std::max(m, fan_out[g] == 1 ? 1 : 1 + fan_out[g]);
    else
      m = std::max(m, static_cast<std::int32_t>(c.gates[g].sources.size()) + fan_out[g]);
  }
  return m;
}

/// Total degree (fan-in plus fan-out, outputs counted) of the circuit DAG.
inline std::int32_t circuit_max_degree(const circuit& c) {
  std::vector<std::int32_t> deg(c.gates.size(), 0);
  for (std::size_t g = 0; g < c.gates.size(); ++g) {
    deg[g] += static_cast<std::int32_t>(c.gates[g].sources.size());
    for (std::int32_t s : c.gates[g].sources) deg[s] += 1;
  }
  for (std::int32_t o : c.outputs) deg[o] += 1;
  std::int32_t m = 0;
  for (std::int32_t d : deg) m = std::max(m, d);
  return m;
}

/// Draws circuits until one has DAG degree at most `max_deg`.
inline circuit random_bounded_circuit(rng& r, std::int32_t n, std::int32_t n_gates,
                                      std::int32_t max_deg, bool iterable) {
  for (;;) {
    circuit c = random_monotone_circuit(r, n, n_gates, iterable);
    if (circuit_max_degree(c) <= max_deg) return c;
  }
}

/// Random connected majority network under the requested scheme:
/// 0 sequential, 1 synchronous, 2 random block partition.
inline network random_connected_net(rng& r, std::int32_t n, std::int32_t scheme_kind) {
  std::vector<std::pair<std::int32_t, std::int32_t>> edges;
  for (std::int32_t v = 1; v < n; ++v)
    edges.emplace_back(static_cast<std::int32_t>(r.below(v)), v);
  for (std::int32_t v = 0; v < n; ++v)
    for (std::int32_t u = v + 1; u < n; ++u)
      if (r.chance(1, 4)) {
        bool have = false;
        for (auto [a, b] : edges) have |= (a == v && b == u) || (a == u && b == v);
        if (!have) edges.emplace_back(v, u);
      }
  network net;
  net.g = graph::from_edges(n, edges);
  if (scheme_kind == 0) {
    net.scheme = update_scheme::sequential(n);
  } else if (scheme_kind == 1) {
    net.scheme = update_scheme::synchronous(n);
  } else {
    std::int32_t blocks = static_cast<std::int32_t>(r.range(1, n));
    std::vector<std::int32_t> of(n);
    for (std::int32_t v = 0; v < n; ++v)
      of[v] = static_cast<std::int32_t>(r.below(blocks));
    net.scheme = normalize_scheme([&] {
      std::vector<std::int32_t> labels(n);
      for (std::int32_t v = 0; v < n; ++v) labels[v] = of[v] + 1;
      return labels;
    }());
  }
  net.r = rule::majority();
  net.validate();
  return net;
}

/// Random connected network in which every vertex has odd degree (the
/// precondition of amplification).  Built from a random tree followed by a
/// perfect matching on the even-degree vertices, retried until it closes.
/// All-odd degree sums force an even vertex count, so odd n is bumped.
inline network random_odd_net(rng& r, std::int32_t n, std::int32_t scheme_kind) {
  if (n % 2 != 0) ++n;
  for (;;) {
    std::vector<std::pair<std::int32_t, std::int32_t>> edges;
    std::vector<std::vector<bool>> have(n, std::vector<bool>(n, false));
    auto add = [&](std::int32_t a, std::int32_t b) {
      edges.emplace_back(a, b);
      have[a][b] = have[b][a] = true;
    };
    std::vector<std::int32_t> deg(n, 0);
    for (std::int32_t v = 1; v < n; ++v) {
      std::int32_t u = static_cast<std::int32_t>(r.below(v));
      add(u, v);
      ++deg[u];
      ++deg[v];
    }
    std::vector<std::int32_t> even;
    for (std::int32_t v = 0; v < n; ++v)
      if (deg[v] % 2 == 0) even.push_back(v);
    // Pair the even-degree vertices; a tree always leaves an even count of
    // them, but the random pairing can demand an edge that already exists.
    bool ok = true;
    while (even.size() >= 2 && ok) {
      std::int32_t pick = 1 + static_cast<std::int32_t>(r.below(even.size() - 1));
      std::int32_t a = even[0];
      std::int32_t b = even[pick];
      if (have[a][b]) {
        ok = false;
        break;
      }
      add(a, b);
      even.erase(even.begin() + pick);
      even.erase(even.begin());
    }
    if (!ok) continue;
    network net;
    net.g = graph::from_edges(n, edges);
    net.scheme = scheme_kind == 0 ? update_scheme::sequential(n) : update_scheme::synchronous(n);
    net.r = rule::majority();
    net.validate();
    return net;
  }
}

/// Attaches up to k hostile external neighbors to every amplified vertex.
/// The pool holds k vertices clock-forced to 0 and k forced to 1; each
/// amplified vertex receives a random subset of at most k of them, and the
/// pool updates as one final block.
inline network with_stuck_externals(const amplified_net& amp, std::int32_t k, rng& r) {
  const std::int32_t n = amp.net.n();
  const std::int32_t pool = 2 * k;  // k stuck-at-0, k stuck-at-1
  std::vector<std::pair<std::int32_t, std::int32_t>> edges = amp.net.g.edges();
  for (std::int32_t v = 0; v < n; ++v) {
    std::int32_t count = static_cast<std::int32_t>(r.below(k + 1));
    std::vector<std::int32_t> picks;
    while (static_cast<std::int32_t>(picks.size()) < count) {
      std::int32_t e = static_cast<std::int32_t>(r.below(pool));
      bool dup = false;
      for (std::int32_t q : picks) dup |= q == e;
      if (!dup) picks.push_back(e);
    }
    for (std::int32_t e : picks) edges.emplace_back(v, n + e);
  }
  network out;
  out.g = graph::from_edges(n + pool, edges);
  std::vector<std::vector<std::int32_t>> lists;
  for (std::int32_t b = 0; b < amp.net.scheme.num_blocks(); ++b)
    lists.push_back(amp.net.scheme.members(b));
  std::vector<std::int32_t> last;
  for (std::int32_t e = 0; e < pool; ++e) last.push_back(n + e);
  lists.push_back(last);
  out.scheme = update_scheme::from_block_lists(n + pool, lists);
  out.r = amp.net.r;
  out.clocks.assign(n + pool, clock_word{});
  for (std::int32_t e = 0; e < pool; ++e) {
    clock_sym s = e < k ? clock_sym::zero : clock_sym::one;
    out.clocks[n + e] = clock_word{{s, s, s}};
  }
  out.validate();
  return out;
}

} // namespace majnet_test
