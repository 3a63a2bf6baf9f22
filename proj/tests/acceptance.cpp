/* majnet: majority automata networks under block-sequential update schedules
 * Copyright (c) 2026 The majnet authors
 * SPDX-License-Identifier: Apache-2.0
 */

// Release gate: eleven end-to-end properties, one pass/fail line each.
// Every criterion runs at full advertised scale, so this binary is heavier
// than the unit suites but still finishes in well under five minutes.

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <numeric>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "majnet/dynamics.hpp"
#include "majnet/gadgets.hpp"
#include "majnet/gadgets_cylinder.hpp"
#include "majnet/gadgets_problems.hpp"
#include "majnet/solvers.hpp"
#include "majnet/transforms.hpp"
#include "majnet/turing.hpp"

using namespace majnet;
using namespace majnet_test;

namespace {

// One line per criterion, printed whether the assertions held or not.
class criterion_lines : public Catch::EventListenerBase {
public:
  using Catch::EventListenerBase::EventListenerBase;
  void testCaseEnded(const Catch::TestCaseStats& stats) override {
    std::printf("%s: %s\n", stats.testInfo->name.c_str(),
                stats.totals.assertions.allOk() ? "pass" : "FAIL");
    std::fflush(stdout);
  }
};

const std::string kStar[3] = {"100000000", "011111111", "111111111"};

// The nine-vertex star, center 0, from the center-active configuration.
network star_net(const update_scheme& s) {
  network net;
  std::vector<std::pair<std::int32_t, std::int32_t>> edges;
  for (std::int32_t leaf = 1; leaf <= 8; ++leaf) edges.push_back({0, leaf});
  net.g = graph::from_edges(9, edges);
  net.scheme = s;
  net.r = rule::majority();
  net.validate();
  return net;
}

config star_start() {
  config x(9);
  x.set(0, true);
  return x;
}

// Random iterable circuit over AND/OR/NOT, used where monotonicity is the
// transform's job rather than a precondition.
circuit random_general_circuit(rng& r, std::int32_t n, std::int32_t max_gates) {
  circuit c;
  c.num_inputs = n;
  c.gates.assign(n, gate{gate_kind::input, {}});
  std::int32_t extra = static_cast<std::int32_t>(r.range(1, max_gates));
  for (std::int32_t i = 0; i < extra; ++i) {
    gate g;
    std::uint64_t pick = r.below(3);
    g.kind = pick == 0 ? gate_kind::and_ : (pick == 1 ? gate_kind::or_ : gate_kind::not_);
    std::int32_t arity = g.kind == gate_kind::not_ ? 1 : static_cast<std::int32_t>(r.range(1, 3));
    std::vector<std::int32_t> pool(c.gates.size());
    std::iota(pool.begin(), pool.end(), 0);
    for (std::int32_t k = 0; k < arity && !pool.empty(); ++k) {
      std::size_t idx = r.below(pool.size());
      g.sources.push_back(pool[idx]);
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    c.gates.push_back(std::move(g));
  }
  for (std::int32_t j = 0; j < n; ++j)
    c.outputs.push_back(static_cast<std::int32_t>(r.below(c.gates.size())));
  c.validate();
  return c;
}

// Complemented duplicate of x, appended: (x, not x).
config dual_input(const config& x) {
  config y(2 * x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    y.set(i, x.get(i));
    y.set(x.size() + i, !x.get(i));
  }
  return y;
}

config widen(const config& x, std::int32_t width) {
  config y(width);
  for (std::int32_t i = 0; i < x.size(); ++i) y.set(i, x.get(i));
  return y;
}

} // namespace

CATCH_REGISTER_LISTENER(criterion_lines)

TEST_CASE("criterion 1 (star traces under three schedules)") {
  // Synchronous: the two-phase flip, forever.
  {
    network net = star_net(update_scheme::synchronous(9));
    std::vector<config> tr = trajectory(net, star_start(), 6);
    for (std::size_t t = 0; t < tr.size(); ++t)
      REQUIRE(tr[t].to_string() == kStar[t % 2]);
    cycle_report rep = find_limit_cycle(net, star_start());
    REQUIRE(rep.transient == 0);
    REQUIRE(rep.period == 2);
  }
  // Leaves one by one, center last: everything lights and stays.
  {
    std::vector<std::vector<std::int32_t>> blocks;
    for (std::int32_t leaf = 1; leaf <= 8; ++leaf) blocks.push_back({leaf});
    blocks.push_back({0});
    network net = star_net(update_scheme::from_block_lists(9, blocks));
    std::vector<config> tr = trajectory(net, star_start(), 4);
    REQUIRE(tr[0].to_string() == kStar[0]);
    for (std::size_t t = 1; t < tr.size(); ++t) REQUIRE(tr[t].to_string() == kStar[2]);
    cycle_report rep = find_limit_cycle(net, star_start());
    REQUIRE(rep.transient == 1);
    REQUIRE(rep.period == 1);
  }
  // Center first, then all leaves: everything dies.
  {
    network net =
        star_net(update_scheme::from_block_lists(9, {{0}, {1, 2, 3, 4, 5, 6, 7, 8}}));
    std::vector<config> tr = trajectory(net, star_start(), 4);
    REQUIRE(tr[0].to_string() == kStar[0]);
    for (std::size_t t = 1; t < tr.size(); ++t) REQUIRE(tr[t].to_string() == "000000000");
    cycle_report rep = find_limit_cycle(net, star_start());
    REQUIRE(rep.transient == 1);
    REQUIRE(rep.period == 1);
  }
}

TEST_CASE("criterion 2 (clock schedules all eight words)") {
  clock_net ck = build_clock();
  REQUIRE(ck.net.g.max_degree() <= 3);
  config x = ck.x0;
  for (std::int64_t t = 0; t <= 100; ++t) {
    for (int s = 0; s < 8; ++s) {
      bool b[3] = {((s >> 2) & 1) != 0, ((s >> 1) & 1) != 0, (s & 1) != 0};
      REQUIRE(x.get(ck.vertex_for(b[0], b[1], b[2])) == b[t % 3]);
    }
    x = global_step(ck.net, x, t);
  }
  cycle_report rep = find_limit_cycle(ck.net, ck.x0);
  REQUIRE(rep.transient == 0);
  REQUIRE(rep.period == 3);
}

TEST_CASE("criterion 3 (gate compile equals the circuit everywhere)") {
  rng r(0xac3);
  std::int64_t failures = 0;
  int kept = 0;
  while (kept < 100) {
    std::int32_t n = static_cast<std::int32_t>(r.range(1, 6));
    circuit c = random_monotone_circuit(r, n, static_cast<std::int32_t>(r.range(1, 20)), false);
    std::int32_t d = effective_circuit_degree(c);
    if (d > 4) continue; // the degree regime under test
    ++kept;
    compiled_net cm = compile_circuit_to_majority(c);
    if (cm.net.g.max_degree() > 2 * d - 1) ++failures;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      config xin = input_bits(bits, n);
      config s = global_step(cm.net, cm.initial(xin), 0);
      config want = c.evaluate(xin);
      for (std::size_t j = 0; j < c.outputs.size(); ++j)
        if (s.get(witness::mapped(cm.w.output_vertex, static_cast<std::int32_t>(j))) !=
            want.get(static_cast<std::int32_t>(j)))
          ++failures;
    }
  }
  REQUIRE(kept == 100);
  REQUIRE(failures == 0);
}

TEST_CASE("criterion 4 (rewrite chain is faithful and leak-free)") {
  rng r(0xac4);
  std::int64_t failures = 0;
  for (int trial = 0; trial < 50; ++trial) {
    std::int32_t n = static_cast<std::int32_t>(r.range(2, 6));
    circuit c = random_general_circuit(r, n, 8);
    mono_result mono = monotonize(c);
    circuit bounded = bound_degree(mono.c);
    sync_result s = synchronize(bounded);
    flat_result f = flatten_depth1(s);
    const std::int32_t D = f.depth, W = f.width;

    // Single-application equivalence across the whole chain, all inputs.
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      config x = input_bits(bits, n);
      config dual = dual_input(x);
      config want = dual_input(c.evaluate(x));
      if (!(mono.c.evaluate(dual) == want)) ++failures;
      if (!(bounded.evaluate(dual) == want)) ++failures;
      config wide = s.c.evaluate(widen(dual, W));
      for (std::int32_t j = 0; j < 2 * n; ++j)
        if (wide.get(j) != want.get(j)) ++failures;
      for (std::int32_t j = 2 * n; j < W; ++j)
        if (wide.get(j)) ++failures;
    }

    // Iterated flattening identity with silent intermediate phases.
    for (int probe = 0; probe < 8; ++probe) {
      config x = input_bits(r.next(), n);
      config state = flat_embed(f, widen(dual_input(x), W));
      for (std::int64_t t = 1; t <= 6; ++t) {
        for (std::int32_t phase = 0; phase < D; ++phase) {
          state = f.c.evaluate(state);
          if (phase + 1 < D)
            for (std::int32_t k = 0; k < W; ++k)
              if (state.get(k)) ++failures; // off-phase leakage
        }
        config want = dual_input(c.iterate(x, t));
        for (std::int32_t j = 0; j < 2 * n; ++j)
          if (state.get(j) != want.get(j)) ++failures;
        for (std::int32_t j = 2 * n; j < W; ++j)
          if (state.get(j)) ++failures;
      }
    }
  }
  REQUIRE(failures == 0);
}

TEST_CASE("criterion 5 (amplification rides out stuck externals)") {
  rng r(0xac5);
  std::int64_t failures = 0;
  for (int trial = 0; trial < 50; ++trial) {
    std::int32_t n = static_cast<std::int32_t>(r.range(3, 9));
    network src = random_odd_net(r, n, trial % 2);
    std::int32_t k = static_cast<std::int32_t>(r.range(1, 3));
    amplified_net amp = amplify(src, k);
    network attacked = with_stuck_externals(amp, k, r);
    for (int cfg = 0; cfg < 50; ++cfg) {
      config xs(src.n());
      for (std::int32_t v = 0; v < src.n(); ++v) xs.set(v, r.flip());
      config big(attacked.n());
      config lifted = amp.lift(xs);
      for (std::int32_t v = 0; v < amp.net.n(); ++v) big.set(v, lifted.get(v));
      for (std::int32_t e = 0; e < 2 * k; ++e) big.set(amp.net.n() + e, e >= k);
      config ref = xs;
      for (std::int64_t t = 0; t < 20; ++t) {
        big = global_step(attacked, big, t);
        ref = global_step(src, ref, t);
        for (std::int32_t v = 0; v < src.n(); ++v)
          for (std::int32_t i = 0; i < amp.copies; ++i)
            if (big.get(amp.copy(v, i)) != ref.get(v)) ++failures;
      }
    }
  }
  REQUIRE(failures == 0);
}

TEST_CASE("criterion 6 (clocked cylinder replays circuit iterates)") {
  rng r(0xac6);
  std::int64_t failures = 0;
  int kept = 0;
  while (kept < 50) {
    std::int32_t n = static_cast<std::int32_t>(r.range(2, 6));
    circuit c = random_depth1_circuit(r, n);
    if (effective_circuit_degree(c) > 4) continue;
    ++kept;
    compiled_net cyl = compile_circuit_to_clocked(c);
    if (cyl.net.g.max_degree() > 7) ++failures;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      config x = input_bits(bits, n);
      config s = cyl.initial(x);
      for (std::int64_t u = 0; u <= 8; ++u) {
        config want = c.iterate(x, u);
        for (std::int32_t i = 0; i < n; ++i)
          if (s.get(witness::mapped(cyl.w.input_vertex, i)) != want.get(i)) ++failures;
        for (std::int64_t p = 0; p < 3; ++p) s = global_step(cyl.net, s, 3 * u + p);
      }
    }
  }
  REQUIRE(kept == 50);
  REQUIRE(failures == 0);
}

TEST_CASE("criterion 7 (pipeline prediction equals circuit reachability)") {
  rng r(0xac7);
  std::int64_t mismatches = 0;
  std::int32_t max_deg = 0, max_block = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::int32_t n = static_cast<std::int32_t>(r.range(2, 5));
    circuit c = random_general_circuit(r, n, 8);
    config x(n);
    for (std::int32_t i = 0; i < n; ++i) x.set(i, r.flip());
    std::int32_t tgt = static_cast<std::int32_t>(r.below(n));
    x.set(tgt, false);
    bseq_instance inst = compile_bseq_instance(c, x, tgt);

    prediction_instance pi;
    pi.net = inst.net;
    pi.x0 = inst.x0;
    pi.target = inst.target;
    if (predict_once(pi).yes != reach_oracle(c, x, tgt)) ++mismatches;

    max_deg = std::max(max_deg, inst.net.g.max_degree());
    for (std::int32_t b = 0; b < inst.net.scheme.num_blocks(); ++b)
      max_block = std::max(
          max_block, static_cast<std::int32_t>(inst.net.scheme.members(b).size()));
  }
  std::printf("  measured: max-degree=%d max-block=%d over 100 instances\n", max_deg, max_block);
  REQUIRE(mismatches == 0);
  REQUIRE(max_deg <= 23);
}

TEST_CASE("criterion 8 (attractor structure at scale)") {
  rng r(0xac8);
  std::int64_t violations = 0;
  std::int64_t worst_transient = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::int32_t n = static_cast<std::int32_t>(r.range(2, 12));
    bool synchronous = trial % 2 == 1;
    network net = random_connected_net(r, n, synchronous ? 1 : 0);
    for (int cfg = 0; cfg < 10; ++cfg) {
      config x(n);
      for (std::int32_t v = 0; v < n; ++v) x.set(v, r.flip());
      cycle_report rep = find_limit_cycle(net, x);
      if (synchronous && rep.period != 1 && rep.period != 2) ++violations;
      if (!synchronous && rep.period != 1) ++violations;
      if (rep.transient > 4 * static_cast<std::int64_t>(n) * n) ++violations;
      worst_transient = std::max(worst_transient, rep.transient);
    }
  }
  std::printf("  measured: worst transient %lld over 200 networks (bound 4n^2)\n",
              static_cast<long long>(worst_transient));
  REQUIRE(violations == 0);
}

TEST_CASE("criterion 9 (threshold shift leaves originals untouched)") {
  rng r(0xac9);
  std::int64_t failures = 0;
  const std::pair<std::int64_t, std::int64_t> targets[] = {{1, 3}, {2, 5}, {3, 4}};
  for (auto [a, b] : targets) {
    for (int trial = 0; trial < 30; ++trial) {
      std::int32_t n = static_cast<std::int32_t>(r.range(2, 7));
      network src = random_connected_net(r, n, trial % 3);
      compiled_net pc = to_portion(src, rule::portion(a, b));
      for (int cfg = 0; cfg < 2; ++cfg) {
        config xs(n);
        for (std::int32_t u = 0; u < n; ++u) xs.set(u, r.flip());
        config big = pc.initial(xs);
        config pads = big;
        config ref = xs;
        for (std::int64_t t = 0; t < 20; ++t) {
          big = global_step(pc.net, big, t);
          ref = global_step(src, ref, t);
          for (std::int32_t u = 0; u < n; ++u)
            if (big.get(u) != ref.get(u)) ++failures;
          for (std::int32_t u = n; u < pc.net.n(); ++u)
            if (big.get(u) != pads.get(u)) ++failures;
        }
      }
    }
  }
  REQUIRE(failures == 0);
}

TEST_CASE("criterion 10 (problem reductions answer alike)") {
  rng r(0xaca);
  std::int64_t failures = 0;
  for (int trial = 0; trial < 30; ++trial) {
    std::int32_t n = static_cast<std::int32_t>(r.range(2, 8));
    network src = random_connected_net(r, n, trial % 3);
    std::int32_t v = static_cast<std::int32_t>(r.below(n));
    config xs(n);
    for (std::int32_t u = 0; u < n; ++u) xs.set(u, r.flip());
    xs.set(v, false);

    prediction_instance base;
    base.net = src;
    base.x0 = xs;
    base.target = v;
    verdict once = predict_once(base);

    // (a) Permanent activation of the latch mirrors first activation.
    eventual_net ev = attach_eventual_gadget(src, v);
    prediction_instance ei;
    ei.net = ev.net;
    ei.x0 = ev.initial(xs);
    ei.target = ev.u;
    verdict evv = predict_eventual(ei);
    if (evv.yes != once.yes) ++failures;
    if (evv.yes && evv.time != once.time) ++failures;

    // (b) Saturation of the cascade mirrors first activation.
    compiled_net fc = build_full_instance(src, v);
    prediction_instance fi;
    fi.net = fc.net;
    fi.x0 = fc.initial(xs);
    fi.target = fc.w.target;
    if (predict_full(fi).yes != once.yes) ++failures;

    // (c) With every vertex observed, the conditional question is the
    // once question, field for field.
    verdict cond = predict_conditional(base);
    if (cond.yes != once.yes || cond.time != once.time || cond.transient != once.transient ||
        cond.period != once.period)
      ++failures;
  }
  REQUIRE(failures == 0);
}

TEST_CASE("criterion 11 (machine-step circuits track their machines)") {
  rng r(0xacb);
  std::int64_t failures = 0;
  for (int trial = 0; trial < 20; ++trial) {
    turing_machine m;
    m.num_states = static_cast<std::int32_t>(r.range(2, 4));
    m.num_symbols = static_cast<std::int32_t>(r.range(2, 3));
    m.num_input_symbols = 1;
    m.blank = static_cast<std::int32_t>(r.range(1, m.num_symbols - 1));
    m.initial = 0;
    m.final_state = static_cast<std::int32_t>(r.range(1, m.num_states - 1));
    m.delta.assign(static_cast<std::size_t>(m.num_states) * m.num_symbols, {});
    for (std::int32_t q = 0; q < m.num_states; ++q)
      for (std::int32_t g = 0; g < m.num_symbols; ++g) {
        turing_machine::action a;
        a.state = static_cast<std::int32_t>(r.below(m.num_states));
        a.write = static_cast<std::int32_t>(r.below(m.num_symbols));
        a.move = static_cast<std::int8_t>(static_cast<std::int64_t>(r.below(3)) - 1);
        m.at(q, g) = a;
      }
    m.validate();

    std::vector<std::int32_t> word(r.range(1, 3), 0);
    std::int32_t space = static_cast<std::int32_t>(r.range(1, 2));
    tm_circuit tc = tm_to_circuit(m, word, space);

    // Per-step agreement between the circuit and the direct simulator.
    if (!verify_witness(m, tc, 25).ok) ++failures;

    // Halt-flag reachability: the bounded run either halts or revisits a
    // configuration; the circuit's sticky flag must agree either way.
    tm_state st = tm_start(m, word, tc.cells);
    std::vector<tm_state> seen{st};
    bool halts = st.halted;
    std::int64_t steps = 0;
    while (!halts) {
      tm_step(m, st);
      ++steps;
      if (st.halted) {
        halts = true;
        break;
      }
      bool repeat = false;
      for (const tm_state& old : seen) repeat |= old == st;
      if (repeat) break;
      seen.push_back(st);
    }
    config cs = tc.x0;
    for (std::int64_t t = 0; t < steps; ++t) cs = tc.c.evaluate(cs);
    if (cs.get(tc.halt_coordinate) != halts) ++failures;
  }
  REQUIRE(failures == 0);
}
