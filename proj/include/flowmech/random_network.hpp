// Copyright 2026 The flowmech Authors
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

#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include "flowmech/complementarity.hpp"
#include "flowmech/network.hpp"

namespace flowmech {

/// Random layered DAG for fuzzing. Interior nodes sit in a fixed
/// topological order; each gets one edge in from an earlier node and one
/// edge out to a later node, which puts every node (and so every edge) on a
/// source-sink path. Remaining budget goes to extra forward edges, which may
/// be parallel or join s to t directly. Deterministic per seed.
inline FlowNetwork random_network(std::uint64_t seed, std::size_t max_nodes,
                                  std::size_t max_edges, const CapLattice& lattice = {}) {
  if (max_nodes < 2 || max_edges < 1) {
    throw std::invalid_argument("random_network needs at least 2 nodes and 1 edge");
  }
  std::mt19937_64 rng(seed);
  const std::size_t max_interior = std::min(max_nodes - 2, max_edges / 2);
  const std::size_t interior = draw_below(rng, max_interior + 1);

  FlowNetwork net;
  net.add_node("s");
  for (std::size_t k = 1; k <= interior; ++k) net.add_node("n" + std::to_string(k));
  net.add_node("t");
  const NodeIndex sink = interior + 1;
  net.set_source(0);
  net.set_sink(sink);

  std::size_t next_id = 1;
  auto add = [&](NodeIndex u, NodeIndex w) {
    net.add_edge("e" + std::to_string(next_id++), u, w, draw_capacity(rng, lattice));
  };
  for (NodeIndex v = 1; v <= interior; ++v) {
    add(draw_below(rng, v), v);
    add(v, v + 1 + draw_below(rng, sink - v));
  }
  if (interior == 0) add(0, sink);

  const std::size_t extra = draw_below(rng, max_edges - net.edge_count() + 1);
  for (std::size_t k = 0; k < extra; ++k) {
    NodeIndex u = draw_below(rng, sink);
    NodeIndex w = u + 1 + draw_below(rng, sink - u);
    add(u, w);
  }
  return net;
}

}  // namespace flowmech
