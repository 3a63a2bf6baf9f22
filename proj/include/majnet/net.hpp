/* majnet: majority automata networks under block-sequential update schedules
 * Copyright (c) 2026 The majnet authors
 * SPDX-License-Identifier: Apache-2.0
 */

/*!
  \file net.hpp
  \brief Undirected graphs, block-sequential update schedules, local rules,
         and the network type tying them together.
*/

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "majnet/common.hpp"
#include "majnet/config.hpp"

namespace majnet {

/*!
  \brief Simple undirected graph in compressed adjacency form.

  Vertices are dense 0-based ids.  Self-loops and duplicate edges are
  rejected; adjacency lists are kept sorted.
*/
class graph {
public:
  graph() = default;

  /*! \brief Build from an edge list.  Throws validation_error on self-loops,
      duplicate edges, or out-of-range endpoints. */
  static graph from_edges(std::int32_t n, std::vector<std::pair<std::int32_t, std::int32_t>> edges) {
    if (n < 0) throw validation_error("vertex count must be non-negative");
    for (auto& [u, v] : edges) {
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw validation_error("edge endpoint out of range");
      if (u == v) throw validation_error("self-loops are not allowed");
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
      throw validation_error("duplicate edge");

    graph g;
    g.n_ = n;
    std::vector<std::int32_t> deg(n, 0);
    for (auto [u, v] : edges) {
      ++deg[u];
      ++deg[v];
    }
    g.offsets_.assign(n + 1, 0);
    for (std::int32_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
    g.adjacency_.resize(g.offsets_[n]);
    std::vector<std::int32_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [u, v] : edges) {
      g.adjacency_[fill[u]++] = v;
      g.adjacency_[fill[v]++] = u;
    }
    for (std::int32_t v = 0; v < n; ++v)
      std::sort(g.adjacency_.begin() + g.offsets_[v], g.adjacency_.begin() + g.offsets_[v + 1]);
    return g;
  }

  std::int32_t n() const { return n_; }

  std::int64_t edge_count() const { return static_cast<std::int64_t>(adjacency_.size()) / 2; }

  std::span<const std::int32_t> neighbors(std::int32_t v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }

  std::int32_t degree(std::int32_t v) const { return offsets_[v + 1] - offsets_[v]; }

  std::int32_t max_degree() const {
    std::int32_t d = 0;
    for (std::int32_t v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
  }

  bool has_edge(std::int32_t u, std::int32_t v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  std::vector<std::pair<std::int32_t, std::int32_t>> edges() const {
    std::vector<std::pair<std::int32_t, std::int32_t>> out;
    out.reserve(adjacency_.size() / 2);
    for (std::int32_t u = 0; u < n_; ++u)
      for (std::int32_t v : neighbors(u))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  bool is_connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(n_, 0);
    std::vector<std::int32_t> stack{0};
    seen[0] = 1;
    std::int32_t reached = 1;
    while (!stack.empty()) {
      std::int32_t u = stack.back();
      stack.pop_back();
      for (std::int32_t w : neighbors(u))
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
    }
    return reached == n_;
  }

private:
  std::int32_t n_ = 0;
  std::vector<std::int32_t> offsets_{0};
  std::vector<std::int32_t> adjacency_;
};

/*!
  \brief A block-sequential update schedule.

  Every vertex belongs to exactly one block; blocks fire in index order
  within a global step, and vertices inside a block read the state left by
  the blocks before them.  Block ids are dense and 0-based internally
  (files use arbitrary positive labels, compacted on load).
*/
class update_scheme {
public:
  update_scheme() = default;

  /*! \brief Build from dense block ids (0..B-1), one per vertex. */
  static update_scheme from_blocks(std::vector<std::int32_t> block_of) {
    update_scheme s;
    s.block_of_ = std::move(block_of);
    std::int32_t b = 0;
    for (std::int32_t x : s.block_of_) {
      if (x < 0) throw validation_error("negative block id");
      b = std::max(b, x + 1);
    }
    s.num_blocks_ = b;
    s.rebuild();
    for (const auto& blk : s.members_)
      if (blk.empty()) throw validation_error("block ids must be dense");
    return s;
  }

  /*! \brief Build from explicit member lists, fired in list order. */
  static update_scheme from_block_lists(std::int32_t n,
                                        const std::vector<std::vector<std::int32_t>>& lists) {
    std::vector<std::int32_t> dense(n, -1);
    for (std::int32_t b = 0; b < static_cast<std::int32_t>(lists.size()); ++b)
      for (std::int32_t v : lists[b]) {
        if (v < 0 || v >= n) throw validation_error("block member out of range");
        if (dense[v] != -1) throw validation_error("vertex listed in two blocks");
        dense[v] = b;
      }
    for (std::int32_t x : dense)
      if (x < 0) throw validation_error("vertex missing from every block");
    return from_blocks(std::move(dense));
  }

  /*! \brief Everything in one block. */
  static update_scheme synchronous(std::int32_t n) {
    return from_blocks(std::vector<std::int32_t>(n, 0));
  }

  /*! \brief One vertex per block, in id order. */
  static update_scheme sequential(std::int32_t n) {
    std::vector<std::int32_t> b(n);
    std::iota(b.begin(), b.end(), 0);
    return n == 0 ? update_scheme() : from_blocks(std::move(b));
  }

  std::int32_t n() const { return static_cast<std::int32_t>(block_of_.size()); }
  std::int32_t num_blocks() const { return num_blocks_; }
  std::int32_t block_of(std::int32_t v) const { return block_of_[v]; }
  const std::vector<std::int32_t>& blocks() const { return block_of_; }
  const std::vector<std::int32_t>& members(std::int32_t b) const { return members_[b]; }

  bool is_synchronous() const { return num_blocks_ <= 1; }
  bool is_sequential() const { return num_blocks_ == n(); }

private:
  void rebuild() {
    members_.assign(num_blocks_, {});
    for (std::int32_t v = 0; v < n(); ++v) members_[block_of_[v]].push_back(v);
  }

  std::vector<std::int32_t> block_of_;
  std::vector<std::vector<std::int32_t>> members_;
  std::int32_t num_blocks_ = 0;
};

/*!
  \brief Compact arbitrary positive block labels to dense 0-based ids,
         preserving their relative order.
*/
inline update_scheme normalize_scheme(const std::vector<std::int32_t>& raw) {
  std::vector<std::int32_t> labels(raw);
  for (std::int32_t x : labels)
    if (x <= 0) throw validation_error("block labels must be positive");
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  std::vector<std::int32_t> dense(raw.size());
  for (std::size_t v = 0; v < raw.size(); ++v)
    dense[v] = static_cast<std::int32_t>(
        std::lower_bound(labels.begin(), labels.end(), raw[v]) - labels.begin());
  return update_scheme::from_blocks(std::move(dense));
}

/*! \brief Threshold variants: strict majority, or a strict portion a/b. */
enum class rule_kind { majority, portion };

/*!
  \brief Local activation rule.

  A vertex activates when its active neighbor count strictly exceeds
  p * degree, with p = 1/2 for majority.  Ties (and isolated vertices)
  resolve to inactive.  The comparison is exact integer arithmetic.
*/
struct rule {
  rule_kind kind = rule_kind::majority;
  std::int64_t num = 1; //!< threshold numerator
  std::int64_t den = 2; //!< threshold denominator

  static rule majority() { return {}; }

  static rule portion(std::int64_t a, std::int64_t b) {
    if (b <= 0 || a <= 0 || a >= b)
      throw validation_error("portion threshold must satisfy 0 < a/b < 1");
    std::int64_t g = std::gcd(a, b);
    return {rule_kind::portion, a / g, b / g};
  }

  /*! \brief Does an active-neighbor count fire against a degree? */
  bool fires(std::int64_t active, std::int64_t degree) const {
    return den * active > num * degree;
  }

  bool operator==(const rule& o) const = default;
};

/*! \brief One symbol of a clock word: free (majority applies), or forced. */
enum class clock_sym : std::uint8_t { free_, zero, one };

/*!
  \brief A per-vertex word of three clock symbols.

  On the step leaving time t, a vertex whose symbol at position t mod 3 is
  forced assumes that state; a free symbol leaves the threshold rule in
  charge.
*/
struct clock_word {
  std::array<clock_sym, 3> s{clock_sym::free_, clock_sym::free_, clock_sym::free_};

  bool all_free() const {
    return s[0] == clock_sym::free_ && s[1] == clock_sym::free_ && s[2] == clock_sym::free_;
  }

  std::string to_string() const {
    std::string out;
    for (clock_sym c : s)
      out += c == clock_sym::free_ ? 'U' : (c == clock_sym::one ? '1' : '0');
    return out;
  }

  static clock_word parse(const std::string& text) {
    if (text.size() != 3) throw validation_error("clock word must have exactly 3 symbols");
    clock_word w;
    for (int i = 0; i < 3; ++i) {
      switch (text[i]) {
        case 'U': w.s[i] = clock_sym::free_; break;
        case '0': w.s[i] = clock_sym::zero; break;
        case '1': w.s[i] = clock_sym::one; break;
        default: throw validation_error("clock symbols are U, 0, or 1");
      }
    }
    return w;
  }

  bool operator==(const clock_word& o) const = default;
};

/*! \brief Convenience builder from a 3-character literal like "0U1". */
inline clock_word cw(const char* text) { return clock_word::parse(text); }

/*!
  \brief A majority (or portion) automata network: graph, schedule, rule,
         and optional per-vertex clock words.
*/
struct network {
  graph g;
  update_scheme scheme;
  rule r = rule::majority();
  std::vector<clock_word> clocks; //!< empty when no vertex is clocked

  std::int32_t n() const { return g.n(); }
  bool clocked() const { return !clocks.empty(); }

  /*! \brief Consistency checks shared by file loading and the compilers. */
  void validate() const {
    if (scheme.n() != g.n())
      throw validation_error("schedule does not cover every vertex exactly once");
    if (!clocks.empty()) {
      if (static_cast<std::int32_t>(clocks.size()) != g.n())
        throw validation_error("clock word list must cover every vertex");
      if (r.kind != rule_kind::majority)
        throw validation_error("clock words require the majority rule");
    }
  }
};

} // namespace majnet
