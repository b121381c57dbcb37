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

#include <bit>
#include <cstdint>
#include <deque>
#include <limits>
#include <stdexcept>
#include <vector>

#include "flowmech/network.hpp"
#include "flowmech/rational.hpp"

namespace flowmech {

/// A set of players, as a bit mask over canonical edge positions.
struct Coalition {
  std::uint64_t mask = 0;

  static Coalition all(std::size_t n) {
    return {n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
  }
  static Coalition single(EdgeIndex e) { return {std::uint64_t{1} << e}; }

  bool contains(EdgeIndex e) const { return (mask >> e) & 1U; }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(mask)); }
  bool empty() const { return mask == 0; }
  Coalition with(EdgeIndex e) const { return {mask | (std::uint64_t{1} << e)}; }
  Coalition without(EdgeIndex e) const { return {mask & ~(std::uint64_t{1} << e)}; }

  std::vector<EdgeIndex> members() const {
    std::vector<EdgeIndex> out;
    for (std::uint64_t m = mask; m != 0; m &= m - 1) {
      out.push_back(static_cast<EdgeIndex>(std::countr_zero(m)));
    }
    return out;
  }

  friend bool operator==(Coalition, Coalition) = default;
  friend auto operator<=>(Coalition, Coalition) = default;
};

struct FlowResult {
  Rational value;
  std::vector<Rational> edge_flows;
  std::vector<bool> source_side;  // residual reachability from s
};

/// Exact maximum flow under the given per-edge capacities (reports). A zero
/// capacity removes the edge. Shortest augmenting paths, found by BFS that
/// scans arcs in canonical edge order, so the witness flow is reproducible.
inline FlowResult max_flow(const FlowNetwork& net, const Reports& caps) {
  require_reports(net, caps);
  const NodeIndex s = net.source();
  const NodeIndex t = net.sink();
  const std::size_t m = net.edge_count();

  // Arc 2e is edge e forward, arc 2e+1 its reverse.
  std::vector<std::vector<std::size_t>> adj(net.node_count());
  for (EdgeIndex e = 0; e < m; ++e) {
    adj[net.edge(e).tail].push_back(2 * e);
    adj[net.edge(e).head].push_back(2 * e + 1);
  }

  FlowResult result;
  result.value = 0;
  result.edge_flows.assign(m, Rational(0));
  auto residual = [&](std::size_t arc) -> Rational {
    EdgeIndex e = arc / 2;
    return arc % 2 == 0 ? caps[e] - result.edge_flows[e] : result.edge_flows[e];
  };
  auto arc_head = [&](std::size_t arc) {
    const auto& ed = net.edge(arc / 2);
    return arc % 2 == 0 ? ed.head : ed.tail;
  };
  auto arc_tail = [&](std::size_t arc) {
    const auto& ed = net.edge(arc / 2);
    return arc % 2 == 0 ? ed.tail : ed.head;
  };

  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> parent(net.node_count());
  std::vector<bool> seen(net.node_count());
  for (;;) {
    std::fill(parent.begin(), parent.end(), kNone);
    std::fill(seen.begin(), seen.end(), false);
    seen[s] = true;
    std::deque<NodeIndex> queue{s};
    while (!queue.empty() && !seen[t]) {
      NodeIndex v = queue.front();
      queue.pop_front();
      for (std::size_t arc : adj[v]) {
        NodeIndex w = arc_head(arc);
        if (seen[w] || residual(arc) <= 0) continue;
        seen[w] = true;
        parent[w] = arc;
        queue.push_back(w);
      }
    }
    if (!seen[t]) {
      result.source_side = seen;
      break;
    }
    Rational bottleneck = -1;
    for (NodeIndex v = t; v != s; v = arc_tail(parent[v])) {
      Rational r = residual(parent[v]);
      if (bottleneck < 0 || r < bottleneck) bottleneck = r;
    }
    for (NodeIndex v = t; v != s; v = arc_tail(parent[v])) {
      std::size_t arc = parent[v];
      if (arc % 2 == 0) {
        result.edge_flows[arc / 2] += bottleneck;
      } else {
        result.edge_flows[arc / 2] -= bottleneck;
      }
    }
    result.value += bottleneck;
  }
  return result;
}

inline Rational max_flow_value(const FlowNetwork& net, const Reports& caps) {
  return max_flow(net, caps).value;
}

/// Reports with every edge outside `coalition` zeroed.
inline Reports restrict_to(const Reports& reports, Coalition coalition) {
  Reports out(reports.size(), Rational(0));
  for (EdgeIndex e = 0; e < reports.size(); ++e) {
    if (coalition.contains(e)) out[e] = reports[e];
  }
  return out;
}

/// v(S): the max-flow value using only the edges of S at their reports.
inline Rational coalition_value(const FlowNetwork& net, const Reports& reports,
                                Coalition coalition) {
  if (net.edge_count() > 64) throw std::invalid_argument("coalition masks hold 64 edges");
  if (coalition.empty()) return 0;
  return max_flow_value(net, restrict_to(reports, coalition));
}

/// F_ij(x, y): max flow with edge i at x, edge j at y, the rest from `rest`.
inline Rational two_parameter_flow(const FlowNetwork& net, EdgeIndex i, EdgeIndex j,
                                   const Rational& x, const Rational& y,
                                   const Reports& rest) {
  if (i == j) throw std::invalid_argument("two_parameter_flow needs distinct edges");
  if (x < 0 || y < 0) throw std::invalid_argument("capacities must be non-negative");
  Reports caps = rest;
  caps.at(i) = x;
  caps.at(j) = y;
  return max_flow_value(net, caps);
}

/// Sum of reports plus one: exceeds every cut, used in place of +infinity.
inline Rational capacity_bound(const Reports& reports) { return sum(reports) + 1; }

}  // namespace flowmech
