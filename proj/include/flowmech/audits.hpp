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

// Mechanical checks of mechanism properties. Every check searches a finite
// grid; a Pass means no witness was found on that grid, not a proof.

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "flowmech/complementarity.hpp"
#include "flowmech/cuts.hpp"
#include "flowmech/mechanism.hpp"
#include "flowmech/network_io.hpp"

namespace flowmech {

enum class Property { DSIC, SIR, SP, MP, CM, Theorem2, Prop2 };
enum class Verdict { Pass, Violation, NotTested };

inline const char* to_string(Property p) {
  switch (p) {
    case Property::DSIC: return "DSIC";
    case Property::SIR: return "SIR";
    case Property::SP: return "SP";
    case Property::MP: return "MP";
    case Property::CM: return "CM";
    case Property::Theorem2: return "cross-effect";
    case Property::Prop2: return "shapley-monotonicity";
  }
  return "?";
}

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Violation: return "VIOLATION";
    case Verdict::NotTested: return "NOT-TESTED";
  }
  return "?";
}

struct DeviationWitness {
  EdgeIndex player = 0;
  Rational truth;
  Rational truthful_payoff;
  Rational best_report;
  Rational best_payoff;
  Rational gain;
  Reports others_reports;
};

struct SirWitness {
  EdgeIndex player = 0;
  Rational payoff;
  Rational standalone;
  std::string reason;
};

struct SplitWitness {
  EdgeIndex edge = 0;
  Rational cap_a, cap_b;
  Rational original_payoff;
  Rational payoff_a, payoff_b;
  Rational gain;
};

struct MergeWitness {
  EdgeIndex edge_a = 0, edge_b = 0;
  Rational payoff_a, payoff_b;
  Rational merged_payoff;
  Rational gain;
};

struct CmWitness {
  EdgeIndex raised = 0;
  Rational from, to;
  Rational flow_before, flow_after;
  EdgeIndex affected = 0;
  Rational payoff_before, payoff_after;
};

struct SweepWitness {
  std::size_t index = 0;  // grid position where the expectation broke
  Rational report;
  Rational payoff;
  std::string expectation;
};

struct MonotonicityWitness {
  Reports configuration;
  Rational report_lo, report_hi;
  Rational payoff_lo, payoff_hi;
};

struct PatternWitness {
  std::string pattern;
  std::string expected;
  std::string sampled;
};

using Witness = std::variant<DeviationWitness, SirWitness, SplitWitness, MergeWitness, CmWitness,
                             SweepWitness, MonotonicityWitness, PatternWitness>;

struct SweepTrace {
  EdgeIndex swept = 0;
  EdgeIndex observed = 0;
  std::optional<PairStructure> structure;
  CriticalValue critical;
  std::vector<Rational> grid;
  std::vector<Rational> observed_payoffs;
  std::vector<Rational> flow_values;
  std::string expected_case;
};

struct AuditReport {
  Property property = Property::DSIC;
  std::string mechanism;
  Verdict verdict = Verdict::Pass;
  std::vector<Witness> witnesses;
  std::optional<SweepTrace> trace;
  std::vector<std::pair<std::string, std::string>> facts;
  std::string network_text;  // reproducibility: the audited instance
  Reports reports;

  void violate(Witness w) {
    verdict = Verdict::Violation;
    witnesses.push_back(std::move(w));
  }
};

namespace detail {

inline AuditReport start_report(Property p, std::string mechanism, const FlowNetwork& net,
                                const Reports& reports) {
  AuditReport r;
  r.property = p;
  r.mechanism = std::move(mechanism);
  r.network_text = render_network(net);
  r.reports = reports;
  return r;
}

inline void sort_unique(std::vector<Rational>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

/// Whether edge e has a positive marginal contribution to some coalition,
/// i.e. lies on an s-t path made of positive-report edges.
inline bool contributes(const FlowNetwork& net, const Reports& reports, EdgeIndex e) {
  if (reports[e] <= 0) return false;
  std::uint64_t live = 0;
  for (EdgeIndex k = 0; k < net.edge_count(); ++k) {
    if (reports[k] > 0) live |= std::uint64_t{1} << k;
  }
  auto forward = [&](NodeIndex from, bool out) {
    std::vector<bool> seen(net.node_count(), false);
    std::vector<NodeIndex> stack{from};
    seen[from] = true;
    while (!stack.empty()) {
      NodeIndex v = stack.back();
      stack.pop_back();
      for (EdgeIndex k = 0; k < net.edge_count(); ++k) {
        if (!((live >> k) & 1U)) continue;
        const auto& ed = net.edge(k);
        NodeIndex a = out ? ed.tail : ed.head;
        NodeIndex b = out ? ed.head : ed.tail;
        if (a == v && !seen[b]) {
          seen[b] = true;
          stack.push_back(b);
        }
      }
    }
    return seen;
  };
  auto from_s = forward(net.source(), true);
  auto to_t = forward(net.sink(), false);
  return from_s[net.edge(e).tail] && to_t[net.edge(e).head];
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Incentive compatibility

/// Best misreport for `player` with true capacity `truth` while the others
/// report `others_reports`. The grid is `grid_size` even steps over
/// (0, truth] plus the truth itself, the player's critical value and every
/// other report clipped to (0, truth].
inline DeviationWitness best_deviation(const FlowNetwork& net, Mechanism mech, EdgeIndex player,
                                       const Rational& truth, const Reports& others_reports,
                                       std::size_t grid_size) {
  if (grid_size < 2) throw std::invalid_argument("grid_size must be at least 2");
  if (truth <= 0) throw std::invalid_argument("true capacity must be positive");
  Reports reports = others_reports;
  reports.at(player) = truth;
  require_reports(net, reports);

  std::vector<Rational> grid;
  for (std::size_t k = 1; k <= grid_size; ++k) {
    grid.push_back(truth * make_rational(static_cast<long>(k), static_cast<long>(grid_size)));
  }
  grid.push_back(truth);
  if (auto cv = critical_value(net, reports, player); !cv.unbounded()) {
    if (*cv.value > 0 && *cv.value <= truth) grid.push_back(*cv.value);
  }
  for (EdgeIndex e = 0; e < reports.size(); ++e) {
    if (e != player && reports[e] > 0) grid.push_back(std::min(reports[e], truth));
  }
  detail::sort_unique(grid);

  DeviationWitness w;
  w.player = player;
  w.truth = truth;
  w.others_reports = others_reports;
  w.truthful_payoff = payoff_of(mech, net, reports, player);
  w.best_report = truth;
  w.best_payoff = w.truthful_payoff;
  for (const auto& r : grid) {
    if (r == truth) continue;
    reports[player] = r;
    Rational p = payoff_of(mech, net, reports, player);
    if (p > w.best_payoff || (p == w.best_payoff && w.best_report != truth && r < w.best_report)) {
      w.best_payoff = p;
      w.best_report = r;
    }
  }
  w.gain = w.best_payoff - w.truthful_payoff;
  return w;
}

/// Unilateral deviation search for every player. Truth is the network's
/// capacities; the others report `reports`.
inline AuditReport check_dsic(const FlowNetwork& net, Mechanism mech, const Reports& reports,
                              std::size_t grid_size = 8) {
  auto report = detail::start_report(Property::DSIC, to_string(mech), net, reports);
  for (EdgeIndex i = 0; i < net.edge_count(); ++i) {
    auto w = best_deviation(net, mech, i, net.edge(i).capacity, reports, grid_size);
    if (w.gain > 0) report.violate(std::move(w));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Strong individual rationality

inline AuditReport check_sir(const FlowNetwork& net, Mechanism mech, const Reports& reports) {
  auto report = detail::start_report(Property::SIR, to_string(mech), net, reports);
  Allocation alloc = allocate(mech, net, reports);
  for (EdgeIndex i = 0; i < net.edge_count(); ++i) {
    Rational standalone = coalition_value(net, reports, Coalition::single(i));
    const Rational& pay = alloc.payoffs[i];
    if (pay < standalone) {
      report.violate(SirWitness{i, pay, standalone, "payoff below stand-alone value"});
    } else if (pay <= 0 && detail::contributes(net, reports, i)) {
      report.violate(SirWitness{i, pay, standalone,
                                "non-positive payoff for an edge on an s-t path"});
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Split and merge

struct Transformed {
  FlowNetwork network;
  Reports reports;
  std::vector<EdgeIndex> new_edges;  // positions of the replacement edge(s)
};

namespace detail {

inline std::string fresh_id(const FlowNetwork& net, std::string id) {
  while (net.find_edge(id)) id += "'";
  return id;
}

inline FlowNetwork copy_nodes(const FlowNetwork& net) {
  FlowNetwork out;
  for (const auto& n : net.nodes()) out.add_node(n);
  if (net.has_source()) out.set_source(net.source());
  if (net.has_sink()) out.set_sink(net.sink());
  return out;
}

}  // namespace detail

/// Replaces edge e by two parallel edges with reports cap_a and cap_b. The
/// true capacity is split in the same proportion as the report.
inline Transformed split_edge(const FlowNetwork& net, const Reports& reports, EdgeIndex e,
                              const Rational& cap_a, const Rational& cap_b) {
  require_reports(net, reports);
  if (cap_a < 0 || cap_b < 0) throw std::invalid_argument("split parts must be non-negative");
  if (cap_a + cap_b != reports.at(e)) {
    throw std::invalid_argument("split parts must sum to the report of the edge");
  }
  const Edge& old = net.edge(e);
  Rational truth_a = reports[e] > 0 ? Rational(old.capacity * cap_a / reports[e])
                                    : Rational(old.capacity / 2);
  Rational truth_b = old.capacity - truth_a;

  Transformed out{detail::copy_nodes(net), {}, {}};
  std::string id_a = detail::fresh_id(net, old.id + ".1");
  std::string id_b = detail::fresh_id(net, old.id + ".2");
  for (EdgeIndex k = 0; k < net.edge_count(); ++k) {
    const Edge& ed = net.edge(k);
    if (k == e) {
      out.new_edges.push_back(out.network.add_edge(id_a, ed.tail, ed.head, truth_a));
      out.reports.push_back(cap_a);
      out.new_edges.push_back(out.network.add_edge(id_b, ed.tail, ed.head, truth_b));
      out.reports.push_back(cap_b);
    } else {
      out.network.add_edge(ed.id, ed.tail, ed.head, ed.capacity);
      out.reports.push_back(reports[k]);
    }
  }
  return out;
}

/// Replaces two parallel edges by one carrying the summed capacity and
/// report, at the position of the earlier edge.
inline Transformed merge_parallel(const FlowNetwork& net, const Reports& reports, EdgeIndex a,
                                  EdgeIndex b) {
  require_reports(net, reports);
  if (a == b) throw std::invalid_argument("cannot merge an edge with itself");
  const Edge& ea = net.edge(a);
  const Edge& eb = net.edge(b);
  if (ea.tail != eb.tail || ea.head != eb.head) {
    throw std::invalid_argument("edges '" + ea.id + "' and '" + eb.id + "' are not parallel");
  }
  const EdgeIndex first = std::min(a, b);
  const EdgeIndex second = std::max(a, b);
  Transformed out{detail::copy_nodes(net), {}, {}};
  std::string id = detail::fresh_id(net, net.edge(first).id + "+" + net.edge(second).id);
  for (EdgeIndex k = 0; k < net.edge_count(); ++k) {
    const Edge& ed = net.edge(k);
    if (k == second) continue;
    if (k == first) {
      out.new_edges.push_back(
          out.network.add_edge(id, ed.tail, ed.head, ea.capacity + eb.capacity));
      out.reports.push_back(reports[a] + reports[b]);
    } else {
      out.network.add_edge(ed.id, ed.tail, ed.head, ed.capacity);
      out.reports.push_back(reports[k]);
    }
  }
  return out;
}

/// Split fractions tried by check_sp: the half/half split first, then
/// 1/2 +- k/8.
inline std::vector<Rational> default_split_fractions() {
  return {make_rational(1, 2), make_rational(3, 8), make_rational(5, 8), make_rational(1, 4),
          make_rational(3, 4), make_rational(1, 8), make_rational(7, 8)};
}

/// Split-proofness of edge e: the two halves together must not earn more
/// than the original edge. Witnesses are listed in grid order.
inline AuditReport check_sp(const FlowNetwork& net, Mechanism mech, const Reports& reports,
                            EdgeIndex e, std::vector<Rational> fractions = {}) {
  if (fractions.empty()) fractions = default_split_fractions();
  auto report = detail::start_report(Property::SP, to_string(mech), net, reports);
  report.facts.emplace_back("edge", net.edge(e).id);
  const Rational before = allocate(mech, net, reports).payoffs.at(e);
  for (const auto& f : fractions) {
    Rational cap_a = reports[e] * f;
    Rational cap_b = reports[e] - cap_a;
    auto split = split_edge(net, reports, e, cap_a, cap_b);
    auto after = allocate(mech, split.network, split.reports);
    Rational pa = after.payoffs[split.new_edges[0]];
    Rational pb = after.payoffs[split.new_edges[1]];
    if (pa + pb > before) {
      report.violate(SplitWitness{e, cap_a, cap_b, before, pa, pb, pa + pb - before});
    }
  }
  return report;
}

/// Merge-proofness of a parallel pair.
inline AuditReport check_mp(const FlowNetwork& net, Mechanism mech, const Reports& reports,
                            EdgeIndex a, EdgeIndex b) {
  auto report = detail::start_report(Property::MP, to_string(mech), net, reports);
  report.facts.emplace_back("edges", net.edge(a).id + "," + net.edge(b).id);
  auto before = allocate(mech, net, reports);
  auto merged = merge_parallel(net, reports, a, b);
  Rational after = allocate(mech, merged.network, merged.reports).payoffs[merged.new_edges[0]];
  Rational separate = before.payoffs[a] + before.payoffs[b];
  if (after > separate) {
    report.violate(MergeWitness{a, b, before.payoffs[a], before.payoffs[b], after, after - separate});
  }
  return report;
}

// ---------------------------------------------------------------------------
// Cross monotonicity

/// Default increases for check_cm: r + k*span/4 for k = 1..8, with
/// span = max(r, 1).
inline std::vector<Rational> default_increase_grid(const Rational& report) {
  Rational span = report > 1 ? report : Rational(1);
  std::vector<Rational> grid;
  for (long k = 1; k <= 8; ++k) grid.push_back(report + span * make_rational(k, 4));
  return grid;
}

/// Which increases check_cm judges. Literal judges every increase that
/// strictly raises the max flow. WithinCriticalValue additionally skips
/// increases past the edge's critical value at the starting reports.
enum class CmScope { Literal, WithinCriticalValue };

/// Raises edge i's report from its current value to each grid point. Points
/// where the max flow does not strictly rise are recorded in the trace but
/// not judged; elsewhere no other edge's payoff may fall.
inline AuditReport check_cm(const FlowNetwork& net, Mechanism mech, const Reports& reports,
                            EdgeIndex i, std::vector<Rational> increases = {},
                            CmScope scope = CmScope::Literal) {
  if (increases.empty()) increases = default_increase_grid(reports.at(i));
  auto report = detail::start_report(Property::CM, to_string(mech), net, reports);
  report.facts.emplace_back("edge", net.edge(i).id);
  std::optional<Rational> ceiling;
  if (scope == CmScope::WithinCriticalValue) {
    ceiling = critical_value(net, reports, i).value;
    report.facts.emplace_back("scope", "increases up to the critical value");
  }
  const Rational flow_before = max_flow_value(net, reports);
  const Allocation base = allocate(mech, net, reports);

  SweepTrace trace;
  trace.swept = i;
  trace.observed = i;
  trace.expected_case = "others weakly gain whenever the max flow strictly rises";
  std::size_t judged = 0;
  for (const auto& g : increases) {
    if (g <= reports[i]) throw std::invalid_argument("increase grid must exceed the current report");
    Reports raised = reports;
    raised[i] = g;
    Rational flow_after = max_flow_value(net, raised);
    Allocation alloc = allocate(mech, net, raised);
    trace.grid.push_back(g);
    trace.flow_values.push_back(flow_after);
    trace.observed_payoffs.push_back(alloc.payoffs[i]);
    if (flow_after <= flow_before || (ceiling && g > *ceiling)) continue;
    ++judged;
    for (EdgeIndex j = 0; j < net.edge_count(); ++j) {
      if (j != i && alloc.payoffs[j] < base.payoffs[j]) {
        report.violate(CmWitness{i, reports[i], g, flow_before, flow_after, j, base.payoffs[j],
                                 alloc.payoffs[j]});
      }
    }
  }
  report.facts.emplace_back("judged_points", std::to_string(judged));
  report.trace = std::move(trace);
  return report;
}

// ---------------------------------------------------------------------------
// Cross-effect sweeps for the minimal-cut mechanism

/// Sweeps e1's report over points_per_interval points of (0, x*] and of
/// (x*, x* + span], span = max(x*, 1), and checks MC payoff of e2 against
/// the case predicted by the pair structure:
///   independent: strictly increasing, then constant
///   inclusive:   constant, then strictly decreasing
///   neither:     strictly increasing, then strictly decreasing
/// With an s-t edge involved, MC payoff of e2 must not move at all.
inline AuditReport theorem2_sweep(const FlowNetwork& net, const Reports& reports, EdgeIndex e1,
                                  EdgeIndex e2, std::size_t points_per_interval = 8) {
  if (e1 == e2) throw std::invalid_argument("sweep needs two distinct edges");
  if (points_per_interval < 1) throw std::invalid_argument("points_per_interval must be >= 1");
  auto report = detail::start_report(Property::Theorem2, "mc", net, reports);
  report.facts.emplace_back("swept", net.edge(e1).id);
  report.facts.emplace_back("observed", net.edge(e2).id);
  const long p = static_cast<long>(points_per_interval);

  SweepTrace trace;
  trace.swept = e1;
  trace.observed = e2;
  auto evaluate = [&](const Rational& r) {
    Reports swept = reports;
    swept[e1] = r;
    trace.grid.push_back(r);
    trace.flow_values.push_back(max_flow_value(net, swept));
    trace.observed_payoffs.push_back(mc_allocate(net, swept).payoffs[e2]);
  };

  if (net.is_source_sink_edge(e1) || net.is_source_sink_edge(e2)) {
    trace.expected_case = "s-t edge involved: unchanged";
    trace.critical = critical_value(net, reports, e1);
    const Rational bound = capacity_bound(reports);
    for (long k = 1; k <= 2 * p; ++k) evaluate(bound * make_rational(k, 2 * p));
    for (std::size_t k = 1; k < trace.grid.size(); ++k) {
      if (trace.observed_payoffs[k] != trace.observed_payoffs[0]) {
        report.violate(SweepWitness{k, trace.grid[k], trace.observed_payoffs[k], "unchanged"});
      }
    }
    report.facts.emplace_back("case", trace.expected_case);
    report.trace = std::move(trace);
    return report;
  }

  const PairStructure structure = classify_pair_structure(net, reports, e1, e2);
  trace.structure = structure;
  trace.critical = critical_value(net, reports, e1);
  const Rational x_star = *trace.critical.value;
  const Rational span = x_star > 1 ? x_star : Rational(1);

  if (x_star > 0) {
    for (long k = 1; k <= p; ++k) evaluate(x_star * make_rational(k, p));
  }
  const std::size_t first_len = trace.grid.size();
  for (long k = 1; k <= p; ++k) evaluate(x_star + span * make_rational(k, p));

  enum class Trend { Up, Flat, Down };
  Trend below = Trend::Up, above = Trend::Flat;
  switch (structure) {
    case PairStructure::Independent:
      below = Trend::Up; above = Trend::Flat;
      trace.expected_case = "independent: increasing on (0,x*], constant after";
      break;
    case PairStructure::Inclusive:
      below = Trend::Flat; above = Trend::Down;
      trace.expected_case = "inclusive: constant on (0,x*], decreasing after";
      break;
    case PairStructure::Neither:
      below = Trend::Up; above = Trend::Down;
      trace.expected_case = "neither: increasing on (0,x*], decreasing after";
      break;
  }
  auto holds = [](Trend t, const Rational& prev, const Rational& next) {
    switch (t) {
      case Trend::Up: return next > prev;
      case Trend::Flat: return next == prev;
      case Trend::Down: return next < prev;
    }
    return false;
  };
  auto name = [](Trend t) {
    return t == Trend::Up ? "strictly increasing" : t == Trend::Flat ? "constant" : "strictly decreasing";
  };
  const auto& pay = trace.observed_payoffs;
  for (std::size_t k = 1; k < first_len; ++k) {
    if (!holds(below, pay[k - 1], pay[k])) {
      report.violate(SweepWitness{k, trace.grid[k], pay[k], std::string(name(below)) + " on (0,x*]"});
    }
  }
  // The second interval is compared from x* itself when x* was sampled.
  const std::size_t start = first_len > 0 ? first_len : first_len + 1;
  for (std::size_t k = start; k < trace.grid.size(); ++k) {
    if (!holds(above, pay[k - 1], pay[k])) {
      report.violate(SweepWitness{k, trace.grid[k], pay[k], std::string(name(above)) + " after x*"});
    }
  }
  report.facts.emplace_back("structure", to_string(structure));
  report.facts.emplace_back("critical_value", trace.critical.str());
  report.facts.emplace_back("case", trace.expected_case);
  report.facts.emplace_back("note", "inclusive minimum-cut condition evaluated at current reports");
  report.trace = std::move(trace);
  return report;
}

// ---------------------------------------------------------------------------
// Shapley monotonicity for constantly related pairs

/// Classifies (i, j) by sampling, then for each sampled configuration sweeps
/// i's capacity over {0} and the lattice and requires the Shapley payoff of
/// j to move in the direction of the relation. A structural pattern label
/// that disagrees with the sampled relation is itself a violation.
inline AuditReport prop2_probe(const FlowNetwork& net, EdgeIndex i, EdgeIndex j,
                               std::size_t sample_count, std::uint64_t seed,
                               const CapLattice& lattice = {}) {
  const auto configs = sample_configurations(net, sample_count, seed, lattice);
  auto report = detail::start_report(Property::Prop2, "shapley", net,
                                     configs.empty() ? net.capacities() : configs.front());
  report.facts.emplace_back("pair", net.edge(i).id + "," + net.edge(j).id);

  auto verdict = probe_constant_relation(net, i, j, sample_count, seed, lattice);
  StructuralPattern pattern = structural_pattern(net, i, j);
  report.facts.emplace_back("pattern", to_string(pattern));
  report.facts.emplace_back("sampled_relation", to_string(verdict.relation));
  report.facts.emplace_back("constant_claim", verdict.constant_claim == ClaimStatus::Supported
                                                  ? "supported"
                                                  : "refuted");
  // All-zero quotients satisfy both weak sign conditions, so a Degenerate
  // sample run does not contradict a pattern label.
  if (auto expected = expected_relation(pattern)) {
    if (verdict.constant_claim != ClaimStatus::Supported ||
        (verdict.relation != *expected && verdict.relation != Relation::Degenerate)) {
      report.violate(PatternWitness{to_string(pattern), to_string(*expected),
                                    to_string(verdict.relation)});
    }
  }

  if (verdict.constant_claim != ClaimStatus::Supported ||
      (verdict.relation != Relation::Complementary && verdict.relation != Relation::Substitutable)) {
    if (report.verdict == Verdict::Pass) report.verdict = Verdict::NotTested;
    return report;
  }
  const bool increasing = verdict.relation == Relation::Complementary;
  report.facts.emplace_back("direction", increasing ? "non-decreasing" : "non-increasing");

  std::vector<Rational> grid{0};
  for (long k = 1; k <= lattice.max_numerator; ++k) grid.push_back(make_rational(k, lattice.denominator));
  for (const auto& config : configs) {
    Reports caps = config;
    std::optional<Rational> prev;
    Rational prev_report;
    for (const auto& g : grid) {
      caps[i] = g;
      Rational pay = shapley_value_of(net, caps, j);
      if (prev && (increasing ? pay < *prev : pay > *prev)) {
        report.violate(MonotonicityWitness{config, prev_report, g, *prev, pay});
      }
      prev = pay;
      prev_report = g;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Whole-instance audit

struct AuditOptions {
  std::size_t deviation_grid = 8;
  CmScope cm_scope = CmScope::Literal;
  std::vector<Property> properties{Property::DSIC, Property::SIR, Property::SP, Property::MP,
                                   Property::CM};
};

/// Runs the selected property checks for every edge (SP, CM) and every
/// parallel pair (MP). Returns one report per property, witnesses merged.
inline std::vector<AuditReport> audit_instance(const FlowNetwork& net, Mechanism mech,
                                               const Reports& reports,
                                               const AuditOptions& options = {}) {
  std::vector<AuditReport> out;
  auto merge_into = [](AuditReport& acc, const AuditReport& part) {
    for (const auto& w : part.witnesses) acc.violate(w);
  };
  for (Property p : options.properties) {
    AuditReport acc = detail::start_report(p, to_string(mech), net, reports);
    switch (p) {
      case Property::DSIC:
        acc = check_dsic(net, mech, reports, options.deviation_grid);
        break;
      case Property::SIR:
        acc = check_sir(net, mech, reports);
        break;
      case Property::SP:
        for (EdgeIndex e = 0; e < net.edge_count(); ++e) merge_into(acc, check_sp(net, mech, reports, e));
        break;
      case Property::MP:
        for (EdgeIndex a = 0; a < net.edge_count(); ++a) {
          for (EdgeIndex b = a + 1; b < net.edge_count(); ++b) {
            const auto& ea = net.edge(a);
            const auto& eb = net.edge(b);
            if (ea.tail == eb.tail && ea.head == eb.head) {
              merge_into(acc, check_mp(net, mech, reports, a, b));
            }
          }
        }
        break;
      case Property::CM:
        for (EdgeIndex e = 0; e < net.edge_count(); ++e) {
          merge_into(acc, check_cm(net, mech, reports, e, {}, options.cm_scope));
        }
        break;
      case Property::Theorem2:
      case Property::Prop2:
        throw std::invalid_argument("pair audits are run through theorem2_sweep / prop2_probe");
    }
    out.push_back(std::move(acc));
  }
  return out;
}

}  // namespace flowmech
