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

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "flowmech/cuts.hpp"
#include "flowmech/exact_lp.hpp"
#include "flowmech/limits.hpp"
#include "flowmech/shapley.hpp"

namespace flowmech {

struct CoreViolation {
  Coalition coalition;
  Rational value;      // v(S)
  Rational allocated;  // x(S)
};

struct CoreVerdict {
  std::optional<CoreViolation> violation;

  bool in_core() const { return !violation.has_value(); }
};

/// Checks x(S) >= v(S) for every coalition and x(N) = v(N). Coalitions are
/// scanned in increasing mask order, so the first violation is the
/// lexicographically smallest.
inline CoreVerdict core_check(const CharacteristicCache& cache, const Reports& x) {
  if (x.size() != cache.players()) throw std::invalid_argument("allocation size mismatch");
  const std::uint64_t grand = cache.grand().mask;
  for (std::uint64_t mask = 1; mask <= grand; ++mask) {
    Coalition s{mask};
    Rational allocated = 0;
    for (EdgeIndex i : s.members()) allocated += x[i];
    const Rational& v = cache.value(s);
    bool bad = mask == grand ? allocated != v : allocated < v;
    if (bad) return {CoreViolation{s, v, allocated}};
  }
  return {};
}

inline CoreVerdict core_check(const FlowNetwork& net, const Reports& reports, const Reports& x) {
  return core_check(CharacteristicCache::build(net, reports), x);
}

namespace detail {

/// Coalition constraints that are not implied by others: v(S) > 0 and
/// v(S) > v(S \ {k}) for every member k. With x >= 0 (implied by the
/// singleton constraints) the dropped ones follow from these.
inline std::vector<Coalition> binding_coalitions(const CharacteristicCache& cache) {
  std::vector<Coalition> out;
  const std::uint64_t grand = cache.grand().mask;
  for (std::uint64_t mask = 1; mask < grand; ++mask) {
    Coalition s{mask};
    const Rational& v = cache.value(s);
    if (v <= 0) continue;
    bool essential = true;
    for (EdgeIndex k : s.members()) {
      if (cache.value(s.without(k)) == v) {
        essential = false;
        break;
      }
    }
    if (essential) out.push_back(s);
  }
  return out;
}

/// min c.x over the core, via the dual  max b.y  s.t.  A^T y <= c, y >= 0.
inline Rational minimize_over_core(const CharacteristicCache& cache,
                                   const std::vector<Coalition>& rows,
                                   const std::vector<Rational>& c) {
  const std::size_t n = cache.players();
  const Rational& vn = cache.value(cache.grand());
  std::vector<Rational> b;
  std::vector<std::vector<Rational>> a(n);
  for (const auto& s : rows) {
    b.push_back(cache.value(s));
    for (std::size_t k = 0; k < n; ++k) a[k].push_back(s.contains(k) ? 1 : 0);
  }
  b.push_back(vn);  // x(N) >= v(N)
  b.push_back(-vn); // -x(N) >= -v(N)
  for (std::size_t k = 0; k < n; ++k) {
    a[k].push_back(1);
    a[k].push_back(-1);
  }
  LpResult lp = maximize_from_origin(a, b, c);
  if (lp.status != LpStatus::Optimal) throw std::logic_error("core is empty");
  return lp.objective;
}

}  // namespace detail

/// Smallest and largest payoff edge `e` can receive in the core.
inline std::pair<Rational, Rational> core_bounds(const CharacteristicCache& cache, EdgeIndex e) {
  const std::size_t n = cache.players();
  require_at_most(n, limits().core_bound_edges, "core bounds");
  if (e >= n) throw std::out_of_range("edge index out of range");
  auto rows = detail::binding_coalitions(cache);
  std::vector<Rational> unit(n, Rational(0)), others(n, Rational(1));
  unit[e] = 1;
  others[e] = 0;
  Rational low = detail::minimize_over_core(cache, rows, unit);
  // max x_e = v(N) - min sum_{j != e} x_j on the efficiency hyperplane.
  Rational high = cache.value(cache.grand()) - detail::minimize_over_core(cache, rows, others);
  return {low, high};
}

inline std::pair<Rational, Rational> core_bounds(const FlowNetwork& net, const Reports& reports,
                                                 EdgeIndex e) {
  require_at_most(net.edge_count(), limits().core_bound_edges, "core bounds");
  return core_bounds(CharacteristicCache::build(net, reports), e);
}

struct CoreBounds {
  std::vector<std::pair<Rational, Rational>> per_edge;
  bool feasible = true;  // max-flow games always have a non-empty core
};

inline CoreBounds core_bounds_all(const FlowNetwork& net, const Reports& reports) {
  require_at_most(net.edge_count(), limits().core_bound_edges, "core bounds");
  auto cache = CharacteristicCache::build(net, reports);
  CoreBounds out;
  for (EdgeIndex e = 0; e < net.edge_count(); ++e) out.per_edge.push_back(core_bounds(cache, e));
  return out;
}

/// Pays each edge of the minimum cut nearest the source its report, and
/// every other edge nothing. Always a core allocation.
inline Allocation core_select_nearest_cut(const FlowNetwork& net, const Reports& reports) {
  require_reports(net, reports);
  Reports payoffs(net.edge_count(), Rational(0));
  for (EdgeIndex e : min_cut_nearest_source(net, reports)) payoffs[e] = reports[e];
  return make_allocation("core-nearest-cut", std::move(payoffs));
}

}  // namespace flowmech
