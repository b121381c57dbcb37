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
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "flowmech/maxflow.hpp"
#include "flowmech/network.hpp"

namespace flowmech {

enum class Relation { Complementary, Substitutable, Degenerate, Mixed };

inline const char* to_string(Relation r) {
  switch (r) {
    case Relation::Complementary: return "complementary";
    case Relation::Substitutable: return "substitutable";
    case Relation::Degenerate: return "degenerate";
    case Relation::Mixed: return "mixed";
  }
  return "?";
}

/// Capacities k/denominator for k = 1..max_numerator.
struct CapLattice {
  long denominator = 4;
  long max_numerator = 8;
};

/// Portable uniform draw in [0, bound); std distributions differ between
/// standard libraries, the raw mt19937_64 stream does not.
inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

inline Rational draw_capacity(std::mt19937_64& rng, const CapLattice& lattice) {
  auto k = static_cast<long>(draw_below(rng, static_cast<std::uint64_t>(lattice.max_numerator))) + 1;
  return make_rational(k, lattice.denominator);
}

struct QuotientProbe {
  Rational x, y, a, b, q;
};

enum class ClaimStatus { NotTested, Supported, Refuted };

struct ComplementarityVerdict {
  Relation relation = Relation::Degenerate;
  std::vector<QuotientProbe> probes;
  ClaimStatus constant_claim = ClaimStatus::NotTested;
  std::optional<Reports> witness;       // configuration that broke the claim
  std::vector<Relation> sample_relations;
};

/// Q_ij(x, y, a, b): the discrete mixed second difference of F_ij, divided
/// by ab.
inline Rational difference_quotient(const FlowNetwork& net, EdgeIndex i, EdgeIndex j,
                                    const Rational& x, const Rational& y, const Rational& a,
                                    const Rational& b, const Reports& rest) {
  if (a <= 0 || b <= 0) throw std::invalid_argument("steps a and b must be positive");
  Rational num = two_parameter_flow(net, i, j, x + a, y + b, rest) -
                 two_parameter_flow(net, i, j, x + a, y, rest) -
                 two_parameter_flow(net, i, j, x, y + b, rest) +
                 two_parameter_flow(net, i, j, x, y, rest);
  return num / (a * b);
}

/// Signs Q over the grid {0, c_i/2, c_j/2, c_i, c_j, c_i + c_j}^2 with steps
/// {d/2, 1}, d the smallest positive report, at the other capacities in
/// `reports`.
inline ComplementarityVerdict classify_complementarity(const FlowNetwork& net, EdgeIndex i,
                                                       EdgeIndex j, const Reports& reports) {
  if (i == j) throw std::invalid_argument("complementarity needs two distinct edges");
  require_reports(net, reports);
  const Rational& ci = reports.at(i);
  const Rational& cj = reports.at(j);
  std::vector<Rational> values{0, ci / 2, cj / 2, ci, cj, ci + cj};
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  std::optional<Rational> smallest;
  for (const auto& r : reports) {
    if (r > 0 && (!smallest || r < *smallest)) smallest = r;
  }
  std::vector<Rational> steps{1};
  if (smallest) steps.push_back(*smallest / 2);
  std::sort(steps.begin(), steps.end());
  steps.erase(std::unique(steps.begin(), steps.end()), steps.end());

  ComplementarityVerdict verdict;
  bool positive = false, negative = false;
  for (const auto& x : values) {
    for (const auto& y : values) {
      for (const auto& a : steps) {
        for (const auto& b : steps) {
          Rational q = difference_quotient(net, i, j, x, y, a, b, reports);
          positive = positive || q > 0;
          negative = negative || q < 0;
          verdict.probes.push_back({x, y, a, b, q});
        }
      }
    }
  }
  if (positive && negative) {
    verdict.relation = Relation::Mixed;
  } else if (positive) {
    verdict.relation = Relation::Complementary;
  } else if (negative) {
    verdict.relation = Relation::Substitutable;
  } else {
    verdict.relation = Relation::Degenerate;
  }
  return verdict;
}

/// Deterministic sample of full capacity configurations for a probe run.
inline std::vector<Reports> sample_configurations(const FlowNetwork& net, std::size_t count,
                                                  std::uint64_t seed,
                                                  const CapLattice& lattice = {}) {
  std::mt19937_64 rng(seed);
  std::vector<Reports> out;
  for (std::size_t k = 0; k < count; ++k) {
    Reports caps;
    for (std::size_t e = 0; e < net.edge_count(); ++e) caps.push_back(draw_capacity(rng, lattice));
    out.push_back(std::move(caps));
  }
  return out;
}

/// Tests whether the relation of (i, j) is constant across sampled
/// configurations of all capacities. Degenerate samples agree with either
/// sign; a Mixed sample or two opposite signs refute the claim.
inline ComplementarityVerdict probe_constant_relation(const FlowNetwork& net, EdgeIndex i,
                                                      EdgeIndex j, std::size_t sample_count,
                                                      std::uint64_t seed,
                                                      const CapLattice& lattice = {}) {
  if (sample_count < 1) throw std::invalid_argument("sample_count must be at least 1");
  ComplementarityVerdict verdict;
  std::optional<Relation> agreed;
  for (auto& config : sample_configurations(net, sample_count, seed, lattice)) {
    Relation r = classify_complementarity(net, i, j, config).relation;
    verdict.sample_relations.push_back(r);
    if (verdict.constant_claim == ClaimStatus::Refuted || r == Relation::Degenerate) continue;
    if (r == Relation::Mixed || (agreed && *agreed != r)) {
      verdict.constant_claim = ClaimStatus::Refuted;
      verdict.witness = config;
      continue;
    }
    agreed = r;
  }
  if (verdict.constant_claim != ClaimStatus::Refuted) {
    verdict.constant_claim = ClaimStatus::Supported;
    verdict.relation = agreed.value_or(Relation::Degenerate);
  } else {
    verdict.relation = Relation::Mixed;
  }
  return verdict;
}

/// Local shapes with a known constant relation.
enum class StructuralPattern {
  SeriesChain,     // C-I: i feeds j through a node with no other edges
  SourceAndSink,   // C-II: i leaves the source, j enters the sink
  Parallel,        // S-I: same tail and head
  CommonTail,      // S-II
  CommonHead,      // S-III
  None,
};

inline const char* to_string(StructuralPattern p) {
  switch (p) {
    case StructuralPattern::SeriesChain: return "C-I series chain";
    case StructuralPattern::SourceAndSink: return "C-II source/sink pair";
    case StructuralPattern::Parallel: return "S-I parallel";
    case StructuralPattern::CommonTail: return "S-II common tail";
    case StructuralPattern::CommonHead: return "S-III common head";
    case StructuralPattern::None: return "none";
  }
  return "?";
}

inline StructuralPattern structural_pattern(const FlowNetwork& net, EdgeIndex i, EdgeIndex j) {
  const auto& a = net.edge(i);
  const auto& b = net.edge(j);
  if (a.tail == b.tail && a.head == b.head) return StructuralPattern::Parallel;

  std::vector<std::size_t> in(net.node_count(), 0), out(net.node_count(), 0);
  for (const auto& e : net.edges()) {
    ++out[e.tail];
    ++in[e.head];
  }
  auto chained = [&](const Edge& first, const Edge& second) {
    return first.head == second.tail && in[first.head] == 1 && out[first.head] == 1;
  };
  if (chained(a, b) || chained(b, a)) return StructuralPattern::SeriesChain;
  if (a.tail == b.tail) return StructuralPattern::CommonTail;
  if (a.head == b.head) return StructuralPattern::CommonHead;
  auto source_sink = [&](const Edge& first, const Edge& second) {
    return first.tail == net.source() && second.head == net.sink() && first.head != second.tail;
  };
  if (source_sink(a, b) || source_sink(b, a)) return StructuralPattern::SourceAndSink;
  return StructuralPattern::None;
}

inline std::optional<Relation> expected_relation(StructuralPattern p) {
  switch (p) {
    case StructuralPattern::SeriesChain:
    case StructuralPattern::SourceAndSink:
      return Relation::Complementary;
    case StructuralPattern::Parallel:
    case StructuralPattern::CommonTail:
    case StructuralPattern::CommonHead:
      return Relation::Substitutable;
    case StructuralPattern::None:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace flowmech
