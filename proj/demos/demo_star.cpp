/* majnet: majority automata networks under block-sequential update schedules
 * Copyright (c) 2026 The majnet authors
 * SPDX-License-Identifier: Apache-2.0
 */

/*!
  \file
  \brief One graph, three fates: how the update schedule alone decides
         where a majority network ends up.

  A nine-vertex star starts with only its center active.  Updating
  everyone at once flips the whole star forever; updating the leaves one
  by one before the center freezes it all-active; updating the center
  first freezes it all-inactive.  Same graph, same rule, same start.
*/

#include <cstdio>
#include <vector>

#include "majnet/dynamics.hpp"
#include "majnet/net.hpp"

using namespace majnet;

namespace {

network star(const update_scheme& s) {
  network net;
  std::vector<std::pair<std::int32_t, std::int32_t>> edges;
  for (std::int32_t leaf = 1; leaf <= 8; ++leaf) edges.push_back({0, leaf});
  net.g = graph::from_edges(9, edges);
  net.scheme = s;
  net.r = rule::majority();
  net.validate();
  return net;
}

void show(const char* title, const network& net) {
  config x(9);
  x.set(0, true); // only the center is active
  std::printf("%s\n", title);
  for (std::int64_t t = 0; t <= 4; ++t) {
    std::printf("  t=%lld  %s\n", static_cast<long long>(t), x.to_string().c_str());
    x = global_step(net, x, t);
  }
  cycle_report rep = find_limit_cycle(net, [] {
    config x0(9);
    x0.set(0, true);
    return x0;
  }());
  std::printf("  settles after %lld step(s) into a period-%lld cycle\n\n",
              static_cast<long long>(rep.transient), static_cast<long long>(rep.period));
}

} // namespace

int main() {
  std::printf("center-active star, vertex 0 in the middle, leaves 1..8\n\n");

  show("everyone at once (synchronous):", star(update_scheme::synchronous(9)));

  std::vector<std::vector<std::int32_t>> leaves_first;
  for (std::int32_t leaf = 1; leaf <= 8; ++leaf) leaves_first.push_back({leaf});
  leaves_first.push_back({0});
  show("leaves one by one, center last:",
       star(update_scheme::from_block_lists(9, leaves_first)));

  show("center first, then all leaves:",
       star(update_scheme::from_block_lists(9, {{0}, {1, 2, 3, 4, 5, 6, 7, 8}})));

  std::printf("the schedule, not the graph, picked each outcome\n");
  return 0;
}
