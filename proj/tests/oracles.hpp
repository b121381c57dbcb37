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

// Reference computations used only by the tests. They go through the
// definitions directly and share no code with the library's algorithms.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "flowmech/network.hpp"
#include "flowmech/network_io.hpp"
#include "flowmech/rational.hpp"

namespace flowmech::testing {

inline Rational Q(const char* text) { return *parse_rational(text); }

inline Reports R(std::initializer_list<const char*> items) {
  Reports out;
  for (const char* t : items) out.push_back(Q(t));
  return out;
}

/// Minimum over node sets X (s in X, t not in X) of the reported capacity
/// leaving X, counting only edges in `coalition`. Equals the max flow.
inline Rational min_cut_value(const FlowNetwork& net, const Reports& caps,
                              std::uint64_t coalition = ~std::uint64_t{0}) {
  const NodeIndex s = net.source(), t = net.sink();
  std::vector<NodeIndex> free;
  for (NodeIndex v = 0; v < net.node_count(); ++v) {
    if (v != s && v != t) free.push_back(v);
  }
  std::optional<Rational> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
    std::vector<bool> in_x(net.node_count(), false);
    in_x[s] = true;
    for (std::size_t k = 0; k < free.size(); ++k) {
      if ((mask >> k) & 1U) in_x[free[k]] = true;
    }
    Rational cap = 0;
    for (EdgeIndex e = 0; e < net.edge_count(); ++e) {
      const Edge& ed = net.edge(e);
      if (((coalition >> e) & 1U) && in_x[ed.tail] && !in_x[ed.head]) cap += caps[e];
    }
    if (!best || cap < *best) best = cap;
  }
  return *best;
}

/// Whether removing `removed` from the edges in `present` leaves no path
/// from s to t.
inline bool separates(const FlowNetwork& net, std::uint64_t present, std::uint64_t removed) {
  std::vector<bool> seen(net.node_count(), false);
  std::vector<NodeIndex> todo{net.source()};
  seen[net.source()] = true;
  while (!todo.empty()) {
    NodeIndex v = todo.back();
    todo.pop_back();
    for (EdgeIndex e = 0; e < net.edge_count(); ++e) {
      if (!((present >> e) & 1U) || ((removed >> e) & 1U)) continue;
      if (net.edge(e).tail == v && !seen[net.edge(e).head]) {
        seen[net.edge(e).head] = true;
        todo.push_back(net.edge(e).head);
      }
    }
  }
  return !seen[net.sink()];
}

/// Inclusion-minimal cuts among the edges in `present`, as sorted index
/// lists in lexicographic order.
inline std::vector<std::vector<EdgeIndex>> minimal_cuts(const FlowNetwork& net,
                                                        std::uint64_t present) {
  std::vector<std::uint64_t> cuts;
  for (std::uint64_t sub = present;; sub = (sub - 1) & present) {
    if (separates(net, present, sub)) {
      bool minimal = true;
      for (EdgeIndex e = 0; e < net.edge_count() && minimal; ++e) {
        if (((sub >> e) & 1U) && separates(net, present, sub & ~(std::uint64_t{1} << e))) {
          minimal = false;
        }
      }
      if (minimal) cuts.push_back(sub);
    }
    if (sub == 0) break;
  }
  std::vector<std::vector<EdgeIndex>> out;
  for (auto m : cuts) {
    std::vector<EdgeIndex> c;
    for (EdgeIndex e = 0; e < net.edge_count(); ++e) {
      if ((m >> e) & 1U) c.push_back(e);
    }
    out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Shapley value by averaging marginal contributions over all n! orders,
/// with v computed by min_cut_value.
inline Reports shapley_by_orders(const FlowNetwork& net, const Reports& caps) {
  const std::size_t n = net.edge_count();
  std::vector<EdgeIndex> order(n);
  std::iota(order.begin(), order.end(), 0);
  Reports total(n, Rational(0));
  long count = 0;
  do {
    std::uint64_t mask = 0;
    Rational prev = 0;
    for (EdgeIndex e : order) {
      mask |= std::uint64_t{1} << e;
      Rational now = min_cut_value(net, caps, mask);
      total[e] += now - prev;
      prev = now;
    }
    ++count;
  } while (std::next_permutation(order.begin(), order.end()));
  for (auto& x : total) x /= count;
  return total;
}

/// Minimal-cut mechanism straight from its definition, over the test-side
/// cut oracle.
inline Reports mc_by_definition(const FlowNetwork& net, const Reports& caps) {
  Reports pay(net.edge_count(), Rational(0));
  std::uint64_t present = 0;
  for (EdgeIndex e = 0; e < net.edge_count(); ++e) {
    if (net.edge(e).tail == net.source() && net.edge(e).head == net.sink()) {
      pay[e] = caps[e];
    } else if (caps[e] > 0) {
      present |= std::uint64_t{1} << e;
    }
  }
  auto cuts = minimal_cuts(net, present);
  if (cuts.empty() || cuts.front().empty()) return pay;
  Rational flow = min_cut_value(net, caps, present);
  for (const auto& cut : cuts) {
    Rational cap = 0;
    for (EdgeIndex e : cut) cap += caps[e];
    for (EdgeIndex e : cut) pay[e] += flow / static_cast<long>(cuts.size()) * caps[e] / cap;
  }
  return pay;
}

}  // namespace flowmech::testing
