/* majnet: majority automata networks under block-sequential update schedules
 * Copyright (c) 2026 The majnet authors
 * SPDX-License-Identifier: Apache-2.0
 */

/*!
  \file config.hpp
  \brief Bit-packed network configurations (one Boolean state per vertex).
*/

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "majnet/common.hpp"

namespace majnet {

/*!
  \brief A configuration assigns a Boolean state to every vertex.

  States are packed 64 per word.  Equality and hashing work on the packed
  words, so configurations can key the visited maps used for cycle detection.
*/
class config {
public:
  config() = default;

  explicit config(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }

  bool get(std::size_t v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }

  void set(std::size_t v, bool b) {
    std::uint64_t mask = std::uint64_t{1} << (v & 63);
    if (b)
      words_[v >> 6] |= mask;
    else
      words_[v >> 6] &= ~mask;
  }

  std::size_t count_ones() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

  bool all_ones() const { return count_ones() == n_; }

  bool operator==(const config& o) const { return n_ == o.n_ && words_ == o.words_; }
  bool operator!=(const config& o) const { return !(*this == o); }

  /*! \brief Vertex states in id order, e.g. "01101". */
  std::string to_string() const {
    std::string s(n_, '0');
    for (std::size_t v = 0; v < n_; ++v)
      if (get(v)) s[v] = '1';
    return s;
  }

  /*! \brief Parse a string of '0'/'1' characters. */
  static config from_string(const std::string& s) {
    config c(s.size());
    for (std::size_t v = 0; v < s.size(); ++v) {
      if (s[v] == '1')
        c.set(v, true);
      else if (s[v] != '0')
        throw validation_error("configuration string may contain only '0' and '1'");
    }
    return c;
  }

  std::uint64_t hash() const {
    // FNV-1a over the packed words.
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::uint64_t w : words_) {
      h ^= w;
      h *= 0x100000001b3ULL;
    }
    h ^= n_;
    h *= 0x100000001b3ULL;
    return h;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct config_hash {
  std::size_t operator()(const config& c) const { return static_cast<std::size_t>(c.hash()); }
};

} // namespace majnet
