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
#include <bit>
#include <cstdint>
#include <deque>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "flowmech/limits.hpp"
#include "flowmech/maxflow.hpp"
#include "flowmech/network.hpp"

namespace flowmech {

/// Which edges take part in cut enumeration. RemainingGraph drops s-t edges
/// (the second step of the minimal-cut mechanism); both scopes drop edges
/// whose report is zero.
enum class CutScope { RemainingGraph, WholeGraph };

using EdgeSet = std::vector<EdgeIndex>;  // sorted canonical positions

struct MinimalCutFamily {
  std::vector<EdgeSet> cuts;       // lexicographic order
  Rational remaining_flow_value;   // max flow over the participating edges
  std::vector<Rational> cut_capacity;

  friend bool operator==(const MinimalCutFamily&, const MinimalCutFamily&) = default;
};

namespace detail {

inline std::uint64_t participating_edges(const FlowNetwork& net, const Reports& reports,
                                         CutScope scope, std::uint64_t forced = 0) {
  require_reports(net, reports);
  if (net.edge_count() > 64) throw SizeLimitError("cut enumeration holds at most 64 edges");
  std::uint64_t mask = 0;
  for (EdgeIndex e = 0; e < net.edge_count(); ++e) {
    bool on = reports[e] > 0 || ((forced >> e) & 1U);
    if (scope == CutScope::RemainingGraph && net.is_source_sink_edge(e)) on = false;
    if (on) mask |= std::uint64_t{1} << e;
  }
  return mask;
}

inline EdgeSet to_edge_set(std::uint64_t mask) { return Coalition{mask}.members(); }

/// True when removing `removed` from `present` leaves no s-t path.
inline bool disconnects(const FlowNetwork& net, std::uint64_t present, std::uint64_t removed) {
  std::uint64_t live = present & ~removed;
  std::vector<bool> seen(net.node_count(), false);
  std::deque<NodeIndex> queue{net.source()};
  seen[net.source()] = true;
  while (!queue.empty()) {
    NodeIndex v = queue.front();
    queue.pop_front();
    if (v == net.sink()) return false;
    for (EdgeIndex e = 0; e < net.edge_count(); ++e) {
      if (!((live >> e) & 1U)) continue;
      const auto& ed = net.edge(e);
      if (ed.tail == v && !seen[ed.head]) {
        seen[ed.head] = true;
        queue.push_back(ed.head);
      }
    }
  }
  return true;
}

/// Keeps the inclusion-minimal members; an empty member means the edge set
/// never connected s to t, in which case there are no cuts to report.
inline std::vector<std::uint64_t> inclusion_minimal(std::set<std::uint64_t> candidates) {
  if (candidates.count(0)) return {};
  std::vector<std::uint64_t> all(candidates.begin(), candidates.end());
  std::vector<std::uint64_t> minimal;
  for (std::uint64_t a : all) {
    bool has_proper_subset = std::any_of(all.begin(), all.end(), [a](std::uint64_t b) {
      return b != a && (b & a) == b;
    });
    if (!has_proper_subset) minimal.push_back(a);
  }
  return minimal;
}

/// Minimal cuts over the edges in `present`, by enumerating source-side node
/// sets X and collecting the out-boundaries. Every minimal cut M equals the
/// boundary of the set reachable from s once M is removed, so filtering the
/// boundaries to inclusion-minimal members yields exactly the minimal cuts.
inline std::vector<std::uint64_t> minimal_cut_masks(const FlowNetwork& net,
                                                    std::uint64_t present) {
  const NodeIndex s = net.source();
  const NodeIndex t = net.sink();
  std::vector<NodeIndex> interior;
  for (NodeIndex v = 0; v < net.node_count(); ++v) {
    if (v != s && v != t) interior.push_back(v);
  }
  require_at_most(interior.size() + 2, limits().subset_nodes, "minimal cut enumeration (nodes)");

  std::set<std::uint64_t> boundaries;
  std::vector<bool> in_x(net.node_count(), false);
  const std::uint64_t subsets = std::uint64_t{1} << interior.size();
  for (std::uint64_t sub = 0; sub < subsets; ++sub) {
    std::fill(in_x.begin(), in_x.end(), false);
    in_x[s] = true;
    for (std::size_t k = 0; k < interior.size(); ++k) {
      if ((sub >> k) & 1U) in_x[interior[k]] = true;
    }
    std::uint64_t boundary = 0;
    for (std::uint64_t m = present; m != 0; m &= m - 1) {
      auto e = static_cast<EdgeIndex>(std::countr_zero(m));
      const auto& ed = net.edge(e);
      if (in_x[ed.tail] && !in_x[ed.head]) boundary |= std::uint64_t{1} << e;
    }
    boundaries.insert(boundary);
  }
  return inclusion_minimal(std::move(boundaries));
}

inline Rational flow_over(const FlowNetwork& net, const Reports& reports,
                          std::uint64_t present) {
  return max_flow_value(net, restrict_to(reports, Coalition{present}));
}

inline MinimalCutFamily make_family(const FlowNetwork& net, const Reports& reports,
                                    std::vector<std::uint64_t> masks, std::uint64_t present) {
  MinimalCutFamily family;
  for (std::uint64_t m : masks) family.cuts.push_back(to_edge_set(m));
  std::sort(family.cuts.begin(), family.cuts.end());
  for (const auto& cut : family.cuts) {
    Rational cap = 0;
    for (EdgeIndex e : cut) cap += reports[e];
    family.cut_capacity.push_back(cap);
  }
  family.remaining_flow_value = family.cuts.empty() ? Rational(0)
                                                    : flow_over(net, reports, present);
  return family;
}

}  // namespace detail

/// The family of inclusion-minimal s-t cuts, with F-hat and the cut
/// capacities. By default this is the family used by the minimal-cut
/// mechanism: s-t edges and zero reports are removed first.
inline MinimalCutFamily enumerate_minimal_cuts(const FlowNetwork& net, const Reports& reports,
                                               CutScope scope = CutScope::RemainingGraph) {
  std::uint64_t present = detail::participating_edges(net, reports, scope);
  return detail::make_family(net, reports, detail::minimal_cut_masks(net, present), present);
}

/// Test oracle: every subset of participating edges is tested for being a
/// cut, and the inclusion-minimal cuts are kept. Scope defaults to the whole
/// graph; pass RemainingGraph to compare against enumerate_minimal_cuts.
inline MinimalCutFamily minimal_cuts_bruteforce(const FlowNetwork& net, const Reports& reports,
                                                CutScope scope = CutScope::WholeGraph) {
  std::uint64_t present = detail::participating_edges(net, reports, scope);
  EdgeSet pool = detail::to_edge_set(present);
  require_at_most(pool.size(), limits().subset_edges, "brute-force cut enumeration");

  if (detail::disconnects(net, present, 0)) return detail::make_family(net, reports, {}, present);

  std::vector<std::uint64_t> minimal;
  const std::uint64_t subsets = std::uint64_t{1} << pool.size();
  for (std::uint64_t sub = 1; sub < subsets; ++sub) {
    std::uint64_t removed = 0;
    for (std::size_t k = 0; k < pool.size(); ++k) {
      if ((sub >> k) & 1U) removed |= std::uint64_t{1} << pool[k];
    }
    if (!detail::disconnects(net, present, removed)) continue;
    bool is_minimal = true;
    for (std::uint64_t m = removed; m != 0 && is_minimal; m &= m - 1) {
      std::uint64_t one = m & (~m + 1);
      if (detail::disconnects(net, present, removed & ~one)) is_minimal = false;
    }
    if (is_minimal) minimal.push_back(removed);
  }
  return detail::make_family(net, reports, std::move(minimal), present);
}

/// The minimum cut nearest to the source: the boundary of the set reachable
/// from s in the residual graph of a maximum flow. Zero-report edges are
/// treated as absent.
inline EdgeSet min_cut_nearest_source(const FlowNetwork& net, const Reports& reports) {
  FlowResult flow = max_flow(net, reports);
  EdgeSet cut;
  for (EdgeIndex e = 0; e < net.edge_count(); ++e) {
    const auto& ed = net.edge(e);
    if (reports[e] > 0 && flow.source_side[ed.tail] && !flow.source_side[ed.head]) {
      cut.push_back(e);
    }
  }
  return cut;
}

/// x*(e) = F_e(+inf) - F_e(0), or unbounded when raising e never stops
/// raising the flow (only possible for an s-t edge).
struct CriticalValue {
  std::optional<Rational> value;  // nullopt = unbounded

  bool unbounded() const { return !value.has_value(); }
  bool admits(const Rational& capacity) const { return unbounded() || capacity <= *value; }
  std::string str() const { return unbounded() ? "unbounded" : to_string(*value); }

  friend bool operator==(const CriticalValue&, const CriticalValue&) = default;
};

inline CriticalValue critical_value(const FlowNetwork& net, const Reports& reports, EdgeIndex e) {
  require_reports(net, reports);
  Reports caps = reports;
  const Rational bound = capacity_bound(reports);
  caps.at(e) = bound;
  Rational at_bound = max_flow_value(net, caps);
  caps[e] = bound + 1;
  if (max_flow_value(net, caps) != at_bound) return {};
  caps[e] = 0;
  return {at_bound - max_flow_value(net, caps)};
}

inline bool is_essential(const FlowNetwork& net, const Reports& reports, EdgeIndex e) {
  return critical_value(net, reports, e).admits(reports.at(e));
}

enum class PairStructure { Independent, Inclusive, Neither };

inline const char* to_string(PairStructure p) {
  switch (p) {
    case PairStructure::Independent: return "independent";
    case PairStructure::Inclusive: return "inclusive";
    case PairStructure::Neither: return "neither";
  }
  return "?";
}

/// Classifies the ordered pair (e1, e2) against the minimal cuts of the
/// graph without s-t edges. The inclusive test's minimum-cut condition is
/// evaluated at the current reports. Both edges take part in the cut family
/// even when their own report is zero.
inline PairStructure classify_pair_structure(const FlowNetwork& net, const Reports& reports,
                                             EdgeIndex e1, EdgeIndex e2) {
  if (e1 == e2) throw std::invalid_argument("pair structure needs two distinct edges");
  if (net.is_source_sink_edge(e1) || net.is_source_sink_edge(e2)) {
    throw std::invalid_argument("pair structure is undefined for s-t edges");
  }
  const std::uint64_t b1 = std::uint64_t{1} << e1;
  const std::uint64_t b2 = std::uint64_t{1} << e2;
  std::uint64_t present =
      detail::participating_edges(net, reports, CutScope::RemainingGraph, b1 | b2);
  auto cuts = detail::minimal_cut_masks(net, present);

  bool shared = std::any_of(cuts.begin(), cuts.end(),
                            [&](std::uint64_t m) { return (m & b1) && (m & b2); });
  if (!shared) return PairStructure::Independent;

  const Rational flow_without_e1 = detail::flow_over(net, reports, present & ~b1);
  for (std::uint64_t m : cuts) {
    if (!(m & b2)) continue;
    if (!(m & b1)) return PairStructure::Neither;
    Rational rest = 0;
    for (EdgeIndex e : detail::to_edge_set(m & ~b1)) rest += reports[e];
    if (rest != flow_without_e1) return PairStructure::Neither;
  }
  return PairStructure::Inclusive;
}

}  // namespace flowmech
