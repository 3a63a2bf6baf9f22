/* majnet: majority automata networks under block-sequential update schedules
 * Copyright (c) 2026 The majnet authors
 * SPDX-License-Identifier: Apache-2.0
 */

/*!
  \file turing.hpp
  \brief Deterministic Turing machines on bounded tape, a direct simulator,
         and the one-step-per-application circuit encoding.
*/

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "majnet/circuit.hpp"
#include "majnet/common.hpp"
#include "majnet/config.hpp"

namespace majnet {

/*!
  \brief A deterministic Turing machine with a total transition table.

  States and tape symbols are dense ids.  Input symbols are the ids below
  `num_input_symbols`; the blank lies outside that range.  The transition
  for (q, g) sits at index q * num_symbols + g.
*/
struct turing_machine {
  struct action {
    std::int32_t state = 0;
    std::int32_t write = 0;
    std::int8_t move = 0; //!< -1 left, 0 stay, +1 right
  };

  std::int32_t num_states = 1;
  std::int32_t num_symbols = 2;
  std::int32_t num_input_symbols = 1;
  std::int32_t blank = 1;
  std::int32_t initial = 0;
  std::int32_t final_state = 0;
  std::vector<action> delta;

  void validate() const {
    if (num_states < 1 || num_symbols < 2)
      throw validation_error("a machine needs at least one state and two symbols");
    if (num_input_symbols < 1 || num_input_symbols >= num_symbols)
      throw validation_error("input symbols must be a proper subset of the tape alphabet");
    if (blank < num_input_symbols || blank >= num_symbols)
      throw validation_error("the blank must be a non-input tape symbol");
    if (initial < 0 || initial >= num_states || final_state < 0 || final_state >= num_states)
      throw validation_error("initial or final state out of range");
    if (static_cast<std::int64_t>(delta.size()) !=
        static_cast<std::int64_t>(num_states) * num_symbols)
      throw validation_error("the transition table must cover every state/symbol pair");
    for (const action& a : delta) {
      if (a.state < 0 || a.state >= num_states) throw validation_error("transition target state out of range");
      if (a.write < 0 || a.write >= num_symbols) throw validation_error("written symbol out of range");
      if (a.move < -1 || a.move > 1) throw validation_error("moves are -1, 0, or +1");
    }
  }

  const action& at(std::int32_t q, std::int32_t g) const {
    return delta[static_cast<std::size_t>(q) * num_symbols + g];
  }
  action& at(std::int32_t q, std::int32_t g) {
    return delta[static_cast<std::size_t>(q) * num_symbols + g];
  }
};

/*!
  \brief Machine configuration on a bounded tape.

  `halted` is sticky: it records whether the final state has been visited;
  the machine keeps stepping per its total transition table afterwards.
*/
struct tm_state {
  std::vector<std::int32_t> tape;
  std::int32_t head = 0;
  std::int32_t state = 0;
  bool halted = false;

  bool operator==(const tm_state& o) const = default;
};

/*! \brief Initial configuration: w on the left, blanks after, head at 0. */
inline tm_state tm_start(const turing_machine& m, const std::vector<std::int32_t>& word,
                         std::int32_t cells) {
  m.validate();
  if (word.empty()) throw validation_error("the input word must be non-empty");
  if (static_cast<std::int32_t>(word.size()) > cells)
    throw validation_error("tape shorter than the input word");
  for (std::int32_t s : word)
    if (s < 0 || s >= m.num_input_symbols)
      throw validation_error("word symbol outside the input alphabet");
  tm_state st;
  st.tape.assign(cells, m.blank);
  for (std::size_t i = 0; i < word.size(); ++i) st.tape[i] = word[i];
  st.state = m.initial;
  st.halted = m.initial == m.final_state;
  return st;
}

/*! \brief One machine step; head moves off either edge are clamped. */
inline void tm_step(const turing_machine& m, tm_state& st) {
  const turing_machine::action& a = m.at(st.state, st.tape[st.head]);
  st.tape[st.head] = a.write;
  st.state = a.state;
  std::int32_t next = st.head + a.move;
  if (next >= 0 && next < static_cast<std::int32_t>(st.tape.size())) st.head = next;
  st.halted = st.halted || st.state == m.final_state;
}

/*!
  \brief A circuit whose single application is one machine step, plus the
         layout needed to read configurations in and out.

  Coordinates: cells first (`cell_bits` per cell, least significant bit
  first), then the one-hot head, then the binary state register, then the
  sticky halt flag.
*/
struct tm_circuit {
  circuit c;
  config x0{0};
  std::int32_t cells = 0;
  std::int32_t cell_bits = 1;
  std::int32_t state_bits = 1;
  std::int32_t halt_coordinate = 0;

  std::int32_t cell_coord(std::int32_t i, std::int32_t b) const { return i * cell_bits + b; }
  std::int32_t head_coord(std::int32_t i) const { return cells * cell_bits + i; }
  std::int32_t state_coord(std::int32_t b) const { return cells * cell_bits + cells + b; }

  /*! \brief Pack a machine configuration into circuit coordinates. */
  config encode(const turing_machine& m, const tm_state& st) const {
    (void)m;
    config x(c.num_inputs);
    for (std::int32_t i = 0; i < cells; ++i)
      for (std::int32_t b = 0; b < cell_bits; ++b)
        x.set(cell_coord(i, b), (st.tape[i] >> b) & 1);
    x.set(head_coord(st.head), true);
    for (std::int32_t b = 0; b < state_bits; ++b)
      x.set(state_coord(b), (st.state >> b) & 1);
    x.set(halt_coordinate, st.halted);
    return x;
  }

  /*! \brief Read a machine configuration back; head must be one-hot. */
  tm_state decode(const config& x) const {
    tm_state st;
    st.tape.assign(cells, 0);
    for (std::int32_t i = 0; i < cells; ++i)
      for (std::int32_t b = 0; b < cell_bits; ++b)
        if (x.get(cell_coord(i, b))) st.tape[i] |= 1 << b;
    st.head = -1;
    for (std::int32_t i = 0; i < cells; ++i)
      if (x.get(head_coord(i))) {
        if (st.head != -1) throw validation_error("head register is not one-hot");
        st.head = i;
      }
    if (st.head == -1) throw validation_error("head register is empty");
    st.state = 0;
    for (std::int32_t b = 0; b < state_bits; ++b)
      if (x.get(state_coord(b))) st.state |= 1 << b;
    st.halted = x.get(halt_coordinate);
    return st;
  }
};

namespace detail {
inline std::int32_t bits_for(std::int32_t count) {
  std::int32_t b = 1;
  while ((std::int64_t{1} << b) < count) ++b;
  return b;
}
} // namespace detail

/*!
  \brief Compile one step of M on a K|w|-cell tape into a circuit.

  The head is kept one-hot (wider but shallower than binary encoding); the
  halt flag becomes 1 as soon as the machine reaches its final state and
  stays 1.  The circuit uses NOT gates freely; reductions monotonize it
  downstream.
*/
inline tm_circuit tm_to_circuit(const turing_machine& m, const std::vector<std::int32_t>& word,
                                std::int32_t space_factor, std::int64_t max_gates = 2'000'000) {
  m.validate();
  if (space_factor < 1) throw validation_error("the space factor must be at least 1");
  const std::int32_t L =
      std::max<std::int32_t>(1, space_factor * static_cast<std::int32_t>(word.size()));

  tm_circuit out;
  out.cells = L;
  out.cell_bits = detail::bits_for(m.num_symbols);
  out.state_bits = detail::bits_for(m.num_states);
  const std::int32_t width = L * out.cell_bits + L + out.state_bits + 1;
  out.halt_coordinate = width - 1;

  // Rough upper bound on the gate count before building anything.
  std::int64_t projected = static_cast<std::int64_t>(width) +
                           static_cast<std::int64_t>(L + 2) * m.num_states * m.num_symbols *
                               (out.cell_bits + out.state_bits + 4);
  if (projected > max_gates)
    throw budget_exceeded("machine encoding exceeds the circuit-size budget");

  circuit& c = out.c;
  c.num_inputs = width;
  c.gates.assign(width, gate{gate_kind::input, {}});

  auto add = [&](gate_kind k, std::vector<std::int32_t> srcs) {
    c.gates.push_back({k, std::move(srcs)});
    return c.num_gates() - 1;
  };
  std::int32_t const0 = -1;
  auto zero = [&]() {
    if (const0 == -1) {
      std::int32_t inv = add(gate_kind::not_, {0});
      const0 = add(gate_kind::and_, {0, inv});
    }
    return const0;
  };
  auto or_all = [&](std::vector<std::int32_t> terms) {
    if (terms.empty()) return zero();
    if (terms.size() == 1) return terms[0];
    return add(gate_kind::or_, std::move(terms));
  };

  // Literal helpers over the current configuration.
  std::vector<std::int32_t> not_of(width, -1);
  auto lit = [&](std::int32_t coord, bool positive) {
    if (positive) return coord;
    if (not_of[coord] == -1) not_of[coord] = add(gate_kind::not_, {coord});
    return not_of[coord];
  };

  // [state = q] for every q, shared across cells.
  std::vector<std::int32_t> state_is(m.num_states);
  for (std::int32_t q = 0; q < m.num_states; ++q) {
    std::vector<std::int32_t> conj;
    for (std::int32_t b = 0; b < out.state_bits; ++b)
      conj.push_back(lit(out.state_coord(b), (q >> b) & 1));
    state_is[q] = conj.size() == 1 ? conj[0] : add(gate_kind::and_, std::move(conj));
  }

  // Per cell: symbol tests and transition triggers.
  // trigger[i][q][g] = head here AND state q AND symbol g.
  std::vector<std::vector<std::int32_t>> trig(L);
  for (std::int32_t i = 0; i < L; ++i) {
    std::vector<std::int32_t> sym_is(m.num_symbols);
    for (std::int32_t g = 0; g < m.num_symbols; ++g) {
      std::vector<std::int32_t> conj;
      for (std::int32_t b = 0; b < out.cell_bits; ++b)
        conj.push_back(lit(out.cell_coord(i, b), (g >> b) & 1));
      sym_is[g] = conj.size() == 1 ? conj[0] : add(gate_kind::and_, std::move(conj));
    }
    trig[i].resize(static_cast<std::size_t>(m.num_states) * m.num_symbols);
    for (std::int32_t q = 0; q < m.num_states; ++q)
      for (std::int32_t g = 0; g < m.num_symbols; ++g)
        trig[i][static_cast<std::size_t>(q) * m.num_symbols + g] =
            add(gate_kind::and_, {out.head_coord(i), state_is[q], sym_is[g]});
  }

  c.outputs.assign(width, -1);

  // Next cell contents: unchanged unless the head is here, else the write.
  for (std::int32_t i = 0; i < L; ++i) {
    std::int32_t away = lit(out.head_coord(i), false);
    for (std::int32_t b = 0; b < out.cell_bits; ++b) {
      std::vector<std::int32_t> terms{
          add(gate_kind::and_, {away, out.cell_coord(i, b)})};
      for (std::int32_t q = 0; q < m.num_states; ++q)
        for (std::int32_t g = 0; g < m.num_symbols; ++g)
          if ((m.at(q, g).write >> b) & 1)
            terms.push_back(trig[i][static_cast<std::size_t>(q) * m.num_symbols + g]);
      c.outputs[out.cell_coord(i, b)] = or_all(std::move(terms));
    }
  }

  // Next head position: every trigger sends the head to a clamped target.
  {
    std::vector<std::vector<std::int32_t>> arrives(L);
    for (std::int32_t i = 0; i < L; ++i)
      for (std::int32_t q = 0; q < m.num_states; ++q)
        for (std::int32_t g = 0; g < m.num_symbols; ++g) {
          std::int32_t to = i + m.at(q, g).move;
          if (to < 0 || to >= L) to = i; // clamp at the tape edges
          arrives[to].push_back(trig[i][static_cast<std::size_t>(q) * m.num_symbols + g]);
        }
    for (std::int32_t j = 0; j < L; ++j)
      c.outputs[out.head_coord(j)] = or_all(std::move(arrives[j]));
  }

  // Next state register.
  std::vector<std::int32_t> next_state_bit(out.state_bits);
  for (std::int32_t b = 0; b < out.state_bits; ++b) {
    std::vector<std::int32_t> terms;
    for (std::int32_t i = 0; i < L; ++i)
      for (std::int32_t q = 0; q < m.num_states; ++q)
        for (std::int32_t g = 0; g < m.num_symbols; ++g)
          if ((m.at(q, g).state >> b) & 1)
            terms.push_back(trig[i][static_cast<std::size_t>(q) * m.num_symbols + g]);
    next_state_bit[b] = or_all(std::move(terms));
    c.outputs[out.state_coord(b)] = next_state_bit[b];
  }

  // Sticky halt: once the final state is entered the flag never clears.
  {
    std::vector<std::int32_t> conj;
    for (std::int32_t b = 0; b < out.state_bits; ++b) {
      std::int32_t bit = next_state_bit[b];
      conj.push_back((m.final_state >> b) & 1 ? bit : add(gate_kind::not_, {bit}));
    }
    std::int32_t entering =
        conj.size() == 1 ? conj[0] : add(gate_kind::and_, std::move(conj));
    c.outputs[out.halt_coordinate] = add(gate_kind::or_, {out.halt_coordinate, entering});
  }

  if (c.num_gates() > max_gates)
    throw budget_exceeded("machine encoding exceeds the circuit-size budget");
  c.validate();
  out.x0 = out.encode(m, tm_start(m, word, L));
  return out;
}

} // namespace majnet
