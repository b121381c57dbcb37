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

// The minimal-cut (MC) mechanism.
//
//   (i)  every s-t edge is paid its report;
//   (ii) the other edges share F-hat, the max flow of the graph without s-t
//        edges: each of the |M| minimal cuts of that graph receives
//        F-hat/|M|, split inside the cut in proportion to reports.
//
// Zero reports are removed before step (ii), so every cut capacity is
// positive. When the remaining graph connects nothing, step (ii) pays 0.

#pragma once

#include "flowmech/cuts.hpp"
#include "flowmech/network.hpp"
#include "flowmech/shapley.hpp"

namespace flowmech {

namespace detail {

inline void share_over_cuts(const MinimalCutFamily& family, const Reports& reports,
                            Reports& payoffs) {
  if (family.cuts.empty()) return;
  const Rational per_cut = family.remaining_flow_value / static_cast<long>(family.cuts.size());
  for (std::size_t k = 0; k < family.cuts.size(); ++k) {
    const Rational share = per_cut / family.cut_capacity[k];
    for (EdgeIndex e : family.cuts[k]) payoffs[e] += share * reports[e];
  }
}

}  // namespace detail

inline Allocation mc_allocate(const FlowNetwork& net, const Reports& reports) {
  require_reports(net, reports);
  Reports payoffs(net.edge_count(), Rational(0));
  for (EdgeIndex e = 0; e < net.edge_count(); ++e) {
    if (net.is_source_sink_edge(e)) payoffs[e] = reports[e];
  }
  detail::share_over_cuts(enumerate_minimal_cuts(net, reports, CutScope::RemainingGraph),
                          reports, payoffs);
  return make_allocation("mc", std::move(payoffs));
}

/// Diagnostic variant that skips step (i) and treats s-t edges as ordinary
/// cut members. Not individually rational; kept to exhibit why step (i) is
/// needed.
inline Allocation mc_no_step_one(const FlowNetwork& net, const Reports& reports) {
  require_reports(net, reports);
  Reports payoffs(net.edge_count(), Rational(0));
  detail::share_over_cuts(enumerate_minimal_cuts(net, reports, CutScope::WholeGraph), reports,
                          payoffs);
  return make_allocation("mc-no-step-one", std::move(payoffs));
}

}  // namespace flowmech
