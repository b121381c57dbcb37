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
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "flowmech/limits.hpp"
#include "flowmech/maxflow.hpp"
#include "flowmech/network.hpp"

namespace flowmech {

/// Payoffs of one mechanism at one report vector.
struct Allocation {
  std::string mechanism;
  Reports payoffs;
  Rational total;

  friend bool operator==(const Allocation&, const Allocation&) = default;
};

inline Allocation make_allocation(std::string mechanism, Reports payoffs) {
  Rational total = sum(payoffs);
  return {std::move(mechanism), std::move(payoffs), std::move(total)};
}

/// The characteristic function v(S) for every coalition, filled once by
/// `build` and read-only afterwards, so one instance can be shared by
/// concurrent readers.
class CharacteristicCache {
 public:
  static CharacteristicCache build(const FlowNetwork& net, const Reports& reports) {
    require_reports(net, reports);
    require_at_most(net.edge_count(), limits().subset_edges, "characteristic function table");
    CharacteristicCache cache;
    cache.players_ = net.edge_count();
    const std::uint64_t size = std::uint64_t{1} << cache.players_;
    cache.values_.resize(size);
    cache.values_[0] = 0;
    for (std::uint64_t mask = 1; mask < size; ++mask) {
      cache.values_[mask] = coalition_value(net, reports, Coalition{mask});
    }
    return cache;
  }

  const Rational& value(Coalition s) const { return values_.at(s.mask); }
  std::size_t players() const { return players_; }
  std::size_t size() const { return values_.size(); }
  Coalition grand() const { return Coalition::all(players_); }

 private:
  std::size_t players_ = 0;
  std::vector<Rational> values_;
};

namespace detail {

/// (|S|-1)! (n-|S|)! / n! for |S| = 1..n, exact.
inline std::vector<Rational> shapley_weights(std::size_t n) {
  std::vector<mpz_class> fact(n + 1);
  fact[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) fact[k] = fact[k - 1] * static_cast<unsigned long>(k);
  std::vector<Rational> w(n + 1, Rational(0));
  for (std::size_t s = 1; s <= n; ++s) {
    w[s] = Rational(fact[s - 1] * fact[n - s], fact[n]);
    w[s].canonicalize();
  }
  return w;
}

}  // namespace detail

inline Allocation shapley(const CharacteristicCache& cache) {
  const std::size_t n = cache.players();
  const auto weights = detail::shapley_weights(n);
  Reports phi(n, Rational(0));
  const std::uint64_t size = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < size; ++mask) {
    Coalition s{mask};
    const Rational& w = weights[s.size()];
    for (EdgeIndex i : s.members()) {
      Rational marginal = cache.value(s) - cache.value(s.without(i));
      if (marginal != 0) phi[i] += w * marginal;
    }
  }
  return make_allocation("shapley", std::move(phi));
}

/// Exact Shapley value by the subset-weight formula.
inline Allocation shapley(const FlowNetwork& net, const Reports& reports) {
  return shapley(CharacteristicCache::build(net, reports));
}

/// Shapley payoff of one player; evaluates only coalitions that matter to it.
inline Rational shapley_value_of(const FlowNetwork& net, const Reports& reports, EdgeIndex i) {
  require_reports(net, reports);
  const std::size_t n = net.edge_count();
  require_at_most(n, limits().subset_edges, "Shapley value");
  if (reports.at(i) == 0) return 0;
  const auto weights = detail::shapley_weights(n);
  Rational phi = 0;
  const std::uint64_t size = std::uint64_t{1} << n;
  const std::uint64_t bit = std::uint64_t{1} << i;
  for (std::uint64_t mask = 0; mask < size; ++mask) {
    if (mask & bit) continue;
    Coalition without{mask};
    Rational marginal = coalition_value(net, reports, without.with(i)) -
                        coalition_value(net, reports, without);
    if (marginal != 0) phi += weights[without.size() + 1] * marginal;
  }
  return phi;
}

/// Independent oracle: the average marginal contribution over all n!
/// arrival orders.
inline Allocation shapley_permutation_oracle(const FlowNetwork& net, const Reports& reports) {
  require_reports(net, reports);
  const std::size_t n = net.edge_count();
  require_at_most(n, limits().permutation_edges, "permutation Shapley oracle");
  std::vector<std::optional<Rational>> memo(std::size_t{1} << n);
  auto v = [&](std::uint64_t mask) -> const Rational& {
    auto& slot = memo[mask];
    if (!slot) slot = coalition_value(net, reports, Coalition{mask});
    return *slot;
  };

  std::vector<EdgeIndex> order(n);
  std::iota(order.begin(), order.end(), EdgeIndex{0});
  Reports totals(n, Rational(0));
  mpz_class orders = 0;
  do {
    std::uint64_t mask = 0;
    for (EdgeIndex i : order) {
      std::uint64_t next = mask | (std::uint64_t{1} << i);
      totals[i] += v(next) - v(mask);
      mask = next;
    }
    ++orders;
  } while (std::next_permutation(order.begin(), order.end()));

  for (auto& t : totals) t /= Rational(orders);
  return make_allocation("shapley", std::move(totals));
}

}  // namespace flowmech
