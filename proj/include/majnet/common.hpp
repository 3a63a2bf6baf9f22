/* majnet: majority automata networks under block-sequential update schedules
 * Copyright (c) 2026 The majnet authors
 * SPDX-License-Identifier: Apache-2.0
 */

/*!
  \file common.hpp
  \brief Error types and the deterministic random generator used by tools and tests.
*/

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace majnet {

/*! \brief Base class for every error raised by the library. */
class error : public std::runtime_error {
public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/*! \brief A file or in-memory object failed validation. */
class validation_error : public error {
public:
  explicit validation_error(const std::string& what) : error(what) {}
};

/*! \brief A parse failure, carrying the 1-based line number it occurred on. */
class parse_error : public error {
public:
  parse_error(int line, const std::string& what)
      : error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

/*! \brief An exploration exceeded its configured budget. */
class budget_exceeded : public error {
public:
  explicit budget_exceeded(const std::string& what) : error(what) {}
};

/*!
  \brief Deterministic 64-bit generator (splitmix64).

  The standard distributions are implementation-defined, so every bounded draw
  is derived here from the raw stream.  Identical seeds give identical values
  on every platform, which keeps randomized tests reproducible.
*/
class rng {
public:
  explicit rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /*! \brief Uniform value in [0, bound), bound >= 1. */
  std::uint64_t below(std::uint64_t bound) {
    // Rejection sampling keeps the draw unbiased without platform dependence.
    std::uint64_t mask = bound - 1;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    for (;;) {
      std::uint64_t v = next() & mask;
      if (v < bound) return v;
    }
  }

  /*! \brief Uniform value in [lo, hi], inclusive. */
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool flip() { return (next() & 1) != 0; }

  /*! \brief True with probability num/den. */
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

private:
  std::uint64_t state_;
};

} // namespace majnet
