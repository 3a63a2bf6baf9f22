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
/// \brief Reductions between prediction variants: the eventual-activation
/// latch, the all-active cascade, and the portion-rule threshold shifter.
///
/// Included via gadgets.hpp; do not include directly.

#pragma once

#include "majnet/gadgets.hpp"

namespace majnet {

/// A network extended with the six-vertex latch; `u` is the vertex whose
/// eventual activation mirrors the target's first activation.
struct eventual_net {
  network net;
  witness w;
  std::int32_t u = -1;
  config initial(const config& x) const { return w.initial(x, net.n()); }
};

/// \brief Attaches a latch to the target so that one-time activation
/// becomes permanent activation.
///
/// Six new vertices: b, c, d, e start active and sustain each other
/// regardless of the rest (b sees {e, c} of 3, c sees {e, b, d} of 4,
/// d sees {e, c} of 2, e sees {b, c, d} of 5).  The latch pair f, g starts
/// inactive; each has degree 3 with neighborhood {target, e, partner}, so
/// with e always active it fires as soon as the target or its partner is
/// active, and then the pair holds itself forever.  The target gains two
/// permanently active neighbors and four degree, which preserves its
/// strict-majority threshold exactly until the latch fires.  The new
/// vertices form one block appended after the base scheme, so they read
/// the target's fresh value each step.  Eventual activation of u (= f)
/// is therefore equivalent to the target ever activating.
inline eventual_net attach_eventual_gadget(const network& src, std::int32_t v) {
  src.validate();
  if (src.clocked()) throw validation_error("latch attachment requires an unclocked network");
  if (src.r.kind != rule_kind::majority)
    throw validation_error("latch attachment requires the majority rule");
  if (v < 0 || v >= src.n()) throw validation_error("target vertex out of range");

  const std::int32_t n = src.n();
  const std::int32_t b = n, c = n + 1, d = n + 2, e = n + 3, f = n + 4, g = n + 5;

  std::vector<std::pair<std::int32_t, std::int32_t>> edges;
  for (auto ed : src.g.edges()) edges.push_back(ed);
  edges.emplace_back(v, b);
  edges.emplace_back(v, c);
  edges.emplace_back(v, f);
  edges.emplace_back(v, g);
  edges.emplace_back(e, f);
  edges.emplace_back(e, g);
  edges.emplace_back(e, b);
  edges.emplace_back(e, c);
  edges.emplace_back(e, d);
  edges.emplace_back(c, b);
  edges.emplace_back(c, d);
  edges.emplace_back(g, f);

  std::vector<std::vector<std::int32_t>> blocks(src.scheme.num_blocks());
  for (std::int32_t u = 0; u < n; ++u) blocks[src.scheme.block_of(u)].push_back(u);
  blocks.push_back({b, c, d, e, f, g});

  eventual_net out;
  out.net.g = graph::from_edges(n + 6, edges);
  out.net.scheme = update_scheme::from_block_lists(n + 6, blocks);
  out.net.r = rule::majority();
  out.net.validate();
  out.u = f;

  witness w;
  w.kind = witness_kind::eventual;
  w.steps_per_iteration = 1;
  w.phase = 0;
  w.target = f;
  w.source_target = v;
  for (std::int32_t u = 0; u < n; ++u) {
    w.vertex_map.emplace_back(u, u);
    w.input_vertex.emplace_back(u, u);
  }
  w.base.assign(n + 6, 0);
  w.base[b] = w.base[c] = w.base[d] = w.base[e] = 1;
  w.notes.push_back("latch=" + std::to_string(f) + " (partner " + std::to_string(g) +
                    "); sustained core " + std::to_string(b) + ".." + std::to_string(e));
  out.w = std::move(w);
  out.w.validate(n + 6);
  return out;
}

/// \brief Builds an instance whose all-active reachability equals the
/// target's one-time activation in the source network.
///
/// Let d be the smallest odd number that is at least 3 and at least the
/// maximum degree.  Arrange the vertices in a ring with the target first.
/// Each ring position i gets an inactive clique K0_i of size d and an
/// active clique K1_i of size 3d-1.  Wiring per position: every K0_i
/// vertex is adjacent to vertex i, to all of K0_{i+1}, and to 2d vertices
/// of K1_i (all 3d-1 of them at the target's position); the first d
/// vertices of K1_i are adjacent to vertex i.  The active cliques can
/// never die (3d-2 internal supporters against at most d+1 others), the
/// inactive ones cannot fire while their predecessors are inactive, and
/// each original vertex gains d active plus d inactive neighbors, which
/// cancels in the strict-majority count.  The clique after the target
/// fires exactly when the target does, the activation cascades around the
/// ring, the extra actives then force every original vertex, and all-ones
/// is a fixed point.  So the extended network reaches the all-active
/// configuration (at some positive time) iff the target ever fires.  New
/// vertices form one appended block.
inline compiled_net build_full_instance(const network& src, std::int32_t v) {
  src.validate();
  if (src.clocked()) throw validation_error("the cascade requires an unclocked network");
  if (src.r.kind != rule_kind::majority)
    throw validation_error("the cascade requires the majority rule");
  if (v < 0 || v >= src.n()) throw validation_error("target vertex out of range");

  const std::int32_t n = src.n();
  std::int32_t d = std::max<std::int32_t>(3, src.g.max_degree());
  if (d % 2 == 0) ++d;

  std::vector<std::int32_t> ring;
  ring.push_back(v);
  for (std::int32_t u = 0; u < n; ++u)
    if (u != v) ring.push_back(u);
  // The ring wiring needs at least three positions; pad with phantom
  // positions carrying no original vertex.  A phantom relay clique has
  // degree 5d-1, still inert at 2d supporters (4d > 5d-1 fails for d >= 3)
  // and still fired by its predecessor's d extras (6d > 5d-1).
  const std::int32_t k = std::max<std::int32_t>(n, 3);
  const std::int32_t per = 4 * d - 1;  // d inactive + 3d-1 active

  auto k0 = [&](std::int32_t i, std::int32_t j) { return n + i * per + j; };
  auto k1 = [&](std::int32_t i, std::int32_t j) { return n + i * per + d + j; };

  std::vector<std::pair<std::int32_t, std::int32_t>> edges;
  for (auto ed : src.g.edges()) edges.push_back(ed);
  for (std::int32_t i = 0; i < k; ++i) {
    const std::int32_t nxt = (i + 1) % k;
    for (std::int32_t a = 0; a < d; ++a)
      for (std::int32_t b = a + 1; b < d; ++b) edges.emplace_back(k0(i, a), k0(i, b));
    for (std::int32_t a = 0; a < 3 * d - 1; ++a)
      for (std::int32_t b = a + 1; b < 3 * d - 1; ++b) edges.emplace_back(k1(i, a), k1(i, b));
    const std::int32_t feed = (i == 0) ? 3 * d - 1 : 2 * d;
    for (std::int32_t a = 0; a < d; ++a) {
      for (std::int32_t b = 0; b < d; ++b) edges.emplace_back(k0(i, a), k0(nxt, b));
      for (std::int32_t b = 0; b < feed; ++b) edges.emplace_back(k0(i, a), k1(i, b));
    }
    if (i < n) {
      const std::int32_t vi = ring[i];
      for (std::int32_t a = 0; a < d; ++a) edges.emplace_back(k0(i, a), vi);
      for (std::int32_t a = 0; a < d; ++a) edges.emplace_back(k1(i, a), vi);
    }
  }

  const std::int32_t total = n + k * per;
  std::vector<std::vector<std::int32_t>> blocks(src.scheme.num_blocks());
  for (std::int32_t u = 0; u < n; ++u) blocks[src.scheme.block_of(u)].push_back(u);
  std::vector<std::int32_t> extra;
  for (std::int32_t u = n; u < total; ++u) extra.push_back(u);
  blocks.push_back(std::move(extra));

  compiled_net out;
  out.net.g = graph::from_edges(total, edges);
  out.net.scheme = update_scheme::from_block_lists(total, blocks);
  out.net.r = rule::majority();
  out.net.validate();

  witness w;
  w.kind = witness_kind::full_prediction;
  w.steps_per_iteration = 1;
  w.phase = 0;
  w.source_target = v;
  for (std::int32_t u = 0; u < n; ++u) {
    w.vertex_map.emplace_back(u, u);
    w.input_vertex.emplace_back(u, u);
  }
  w.base.assign(total, 0);
  for (std::int32_t i = 0; i < k; ++i)
    for (std::int32_t a = 0; a < 3 * d - 1; ++a) w.base[k1(i, a)] = 1;
  w.notes.push_back("d=" + std::to_string(d) + " ring=" + std::to_string(k) +
                    " vertices=" + std::to_string(total));
  out.w = std::move(w);
  out.w.validate(total);

  // The construction promises the all-active configuration is a fixed point.
  config ones(total);
  for (std::int32_t u = 0; u < total; ++u) ones.set(u, true);
  if (!(global_step(out.net, ones) == ones))
    throw validation_error("internal error: all-active is not a fixed point");
  return out;
}

/// \brief Re-targets a majority network to an arbitrary activation portion
/// p = a/b (p != 1/2) without changing its trajectories on the original
/// vertices.
///
/// For p below one half each vertex w of degree dg gets n(w) permanently
/// inactive neighbors, n(w) being the least count with
/// floor(p * (dg + n(w))) = floor(dg / 2); the portion threshold over the
/// padded neighborhood then equals the old strict majority.  For p above
/// one half the pads are permanently active and n(w) satisfies
/// floor(p * (dg + n(w))) - n(w) = floor(dg / 2).  Pads for w are drawn
/// from a private clique sized max(n(w), ceil(1/p) + 1) (inactive case;
/// ceil(1/(1-p)) + 1 in the active case) so the clique sustains its state
/// under the portion rule no matter what w does.  Cliques form one block
/// appended after the base scheme.
inline compiled_net to_portion(const network& src, const rule& p) {
  src.validate();
  if (src.clocked()) throw validation_error("portion conversion requires an unclocked network");
  if (src.r.kind != rule_kind::majority)
    throw validation_error("portion conversion requires a majority source");
  if (p.kind != rule_kind::portion)
    throw validation_error("portion conversion needs a portion rule");
  if (2 * p.num == p.den)
    throw validation_error("portion one half is the majority rule itself");

  const std::int32_t n = src.n();
  const std::int64_t a = p.num, b = p.den;
  const bool low = 2 * a < b;  // p < 1/2
  auto floor_p = [&](std::int64_t m) { return (a * m) / b; };

  std::vector<std::pair<std::int32_t, std::int32_t>> edges;
  for (auto ed : src.g.edges()) edges.push_back(ed);

  std::int32_t next = n;
  std::vector<std::int32_t> clique_first(n, -1), clique_size(n, 0);
  std::vector<std::int32_t> pad_count(n, 0);
  std::int32_t max_pads = 0;
  for (std::int32_t w = 0; w < n; ++w) {
    const std::int64_t dg = src.g.degree(w);
    std::int64_t t = 0;
    if (low) {
      while (floor_p(dg + t) != dg / 2) ++t;
    } else {
      while (floor_p(dg + t) - t != dg / 2) ++t;
    }
    const std::int64_t inv = low ? (b + a - 1) / a : (b + (b - a) - 1) / (b - a);
    const std::int32_t size = static_cast<std::int32_t>(std::max(t, inv + 1));
    clique_first[w] = next;
    clique_size[w] = size;
    pad_count[w] = static_cast<std::int32_t>(t);
    max_pads = std::max(max_pads, pad_count[w]);
    for (std::int32_t i = 0; i < size; ++i)
      for (std::int32_t j = i + 1; j < size; ++j)
        edges.emplace_back(next + i, next + j);
    for (std::int32_t i = 0; i < static_cast<std::int32_t>(t); ++i)
      edges.emplace_back(w, next + i);
    next += size;
  }

  const std::int32_t total = next;
  std::vector<std::vector<std::int32_t>> blocks(src.scheme.num_blocks());
  for (std::int32_t u = 0; u < n; ++u) blocks[src.scheme.block_of(u)].push_back(u);
  std::vector<std::int32_t> pads;
  for (std::int32_t u = n; u < total; ++u) pads.push_back(u);
  if (!pads.empty()) blocks.push_back(std::move(pads));

  compiled_net out;
  out.net.g = graph::from_edges(total, edges);
  out.net.scheme = update_scheme::from_block_lists(total, blocks);
  out.net.r = p;
  out.net.validate();

  witness w;
  w.kind = witness_kind::portion;
  w.steps_per_iteration = 1;
  w.phase = 0;
  for (std::int32_t u = 0; u < n; ++u) {
    w.vertex_map.emplace_back(u, u);
    w.input_vertex.emplace_back(u, u);
  }
  w.base.assign(total, 0);
  if (!low)
    for (std::int32_t u = n; u < total; ++u) w.base[u] = 1;
  w.notes.push_back("portion=" + std::to_string(p.num) + "/" + std::to_string(p.den) +
                    " pads<=" + std::to_string(max_pads) +
                    " vertices=" + std::to_string(total));
  out.w = std::move(w);
  out.w.validate(total);
  return out;
}

}  // namespace majnet
