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

#include <gtest/gtest.h>

#include "flowmech/audits.hpp"
#include "flowmech/fixtures.hpp"
#include "flowmech/random_network.hpp"
#include "flowmech/validate.hpp"
#include "oracles.hpp"

namespace flowmech {
namespace {

using testing::Q;
using testing::R;

template <typename W>
const W& first_witness(const AuditReport& r) {
  return std::get<W>(r.witnesses.at(0));
}

TEST(BestDeviation, CoreSelectionRewardsUnderReporting) {
  auto net = load_fixture("fig1");
  auto w = best_deviation(net, Mechanism::CoreNearestCut, 0, 2, net.capacities(), 8);
  EXPECT_EQ(w.truthful_payoff, 0);
  EXPECT_EQ(w.best_report, 1);
  EXPECT_EQ(w.best_payoff, 1);
  EXPECT_EQ(w.gain, 1);
}

TEST(BestDeviation, TruthfulForMcAndShapley) {
  auto fig1 = load_fixture("fig1");
  EXPECT_EQ(best_deviation(fig1, Mechanism::MinimalCut, 0, 2, fig1.capacities(), 8).gain, 0);
  auto fig2 = load_fixture("fig2a");
  for (EdgeIndex e = 0; e < fig2.edge_count(); ++e) {
    auto w = best_deviation(fig2, Mechanism::Shapley, e, fig2.edge(e).capacity,
                            fig2.capacities(), 8);
    EXPECT_EQ(w.gain, 0) << e;
    EXPECT_EQ(w.best_report, w.truth) << e;
  }
}

TEST(BestDeviation, Preconditions) {
  auto net = load_fixture("fig1");
  EXPECT_THROW(best_deviation(net, Mechanism::MinimalCut, 0, 2, net.capacities(), 1),
               std::invalid_argument);
  EXPECT_THROW(best_deviation(net, Mechanism::MinimalCut, 0, 0, net.capacities(), 4),
               std::invalid_argument);
}

TEST(CheckSir, Fig1) {
  auto net = load_fixture("fig1");
  auto core = check_sir(net, Mechanism::CoreNearestCut, net.capacities());
  ASSERT_EQ(core.verdict, Verdict::Violation);
  EXPECT_EQ(first_witness<SirWitness>(core).player, 0u);
  EXPECT_EQ(first_witness<SirWitness>(core).payoff, 0);
  EXPECT_EQ(check_sir(net, Mechanism::MinimalCut, net.capacities()).verdict, Verdict::Pass);
  EXPECT_EQ(check_sir(net, Mechanism::Shapley, net.capacities()).verdict, Verdict::Pass);
}

TEST(CheckSir, StepOneIsNeededForIndividualRationality) {
  auto net = load_fixture("fig5");
  auto r = check_sir(net, Mechanism::MinimalCutNoStepOne, net.capacities());
  ASSERT_EQ(r.verdict, Verdict::Violation);
  EXPECT_EQ(first_witness<SirWitness>(r).player, 2u);
  EXPECT_EQ(first_witness<SirWitness>(r).standalone, 1);
  EXPECT_EQ(check_sir(net, Mechanism::MinimalCut, net.capacities()).verdict, Verdict::Pass);
}

TEST(SplitEdge, Fig2aBecomesFig2b) {
  auto a = load_fixture("fig2a");
  auto split = split_edge(a, a.capacities(), 0, 1, 1);
  EXPECT_EQ(split.network, load_fixture("fig2b"));
  EXPECT_EQ(split.reports, load_fixture("fig2b").capacities());
  EXPECT_EQ(split.new_edges, (std::vector<EdgeIndex>{0, 1}));
}

TEST(SplitEdge, PreservesFlowAndCutTotals) {
  auto net = load_fixture("fig1");
  auto caps = net.capacities();
  auto trivial = split_edge(net, caps, 0, 2, 0);
  EXPECT_EQ(max_flow_value(trivial.network, trivial.reports), max_flow_value(net, caps));
  auto halves = split_edge(net, caps, 0, Q("1/2"), Q("3/2"));
  auto before = enumerate_minimal_cuts(net, caps);
  auto after = enumerate_minimal_cuts(halves.network, halves.reports);
  auto sorted = [](std::vector<Rational> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  EXPECT_EQ(sorted(before.cut_capacity), sorted(after.cut_capacity));
  EXPECT_EQ(before.remaining_flow_value, after.remaining_flow_value);
}

TEST(SplitEdge, TruthFollowsReportProportion) {
  auto net = load_fixture("fig1");
  auto split = split_edge(net, R({"1", "1", "1", "1"}), 0, Q("1/4"), Q("3/4"));
  EXPECT_EQ(split.network.edge(0).capacity, Q("1/2"));
  EXPECT_EQ(split.network.edge(1).capacity, Q("3/2"));
  EXPECT_THROW(split_edge(net, net.capacities(), 0, 1, 2), std::invalid_argument);
}

TEST(MergeParallel, Fig3aBecomesFig3b) {
  auto a = load_fixture("fig3a");
  auto merged = merge_parallel(a, a.capacities(), 0, 1);
  EXPECT_EQ(merged.network, load_fixture("fig3b"));
  EXPECT_EQ(merged.new_edges, (std::vector<EdgeIndex>{0}));
}

TEST(MergeParallel, InvertsSplit) {
  auto net = load_fixture("fig1");
  auto caps = net.capacities();
  auto merged = merge_parallel(net, caps, 2, 3);
  EXPECT_EQ(max_flow_value(merged.network, merged.reports), 2);
  auto back = split_edge(merged.network, merged.reports, merged.new_edges[0], 1, 1);
  EXPECT_EQ(max_flow_value(back.network, back.reports), max_flow_value(net, caps));
  EXPECT_EQ(enumerate_minimal_cuts(back.network, back.reports).cut_capacity,
            enumerate_minimal_cuts(net, caps).cut_capacity);
  EXPECT_THROW(merge_parallel(net, caps, 0, 2), std::invalid_argument);
  EXPECT_THROW(merge_parallel(net, caps, 1, 1), std::invalid_argument);
}

TEST(CheckSp, ShapleyRewardsSplitting) {
  auto net = load_fixture("fig2a");
  auto r = check_sp(net, Mechanism::Shapley, net.capacities(), 0);
  ASSERT_EQ(r.verdict, Verdict::Violation);
  const auto& w = first_witness<SplitWitness>(r);
  EXPECT_EQ(w.cap_a, 1);
  EXPECT_EQ(w.cap_b, 1);
  EXPECT_EQ(w.original_payoff, make_rational(1, 30));
  EXPECT_EQ(w.payoff_a + w.payoff_b, make_rational(2, 42));
  EXPECT_EQ(w.gain, make_rational(2, 42) - make_rational(1, 30));
}

TEST(CheckSp, McPasses) {
  auto net = load_fixture("fig2a");
  for (EdgeIndex e = 0; e < net.edge_count(); ++e) {
    EXPECT_EQ(check_sp(net, Mechanism::MinimalCut, net.capacities(), e).verdict, Verdict::Pass);
  }
  auto single = parse_network("edge e s t 3\n");
  EXPECT_EQ(check_sp(single, Mechanism::MinimalCut, single.capacities(), 0).verdict,
            Verdict::Pass);
}

TEST(CheckMp, ShapleyRewardsMerging) {
  auto net = load_fixture("fig3a");
  auto r = check_mp(net, Mechanism::Shapley, net.capacities(), 0, 1);
  ASSERT_EQ(r.verdict, Verdict::Violation);
  EXPECT_EQ(first_witness<MergeWitness>(r).merged_payoff, make_rational(1, 2));
  EXPECT_EQ(first_witness<MergeWitness>(r).gain, make_rational(1, 6));
  EXPECT_EQ(check_mp(net, Mechanism::MinimalCut, net.capacities(), 0, 1).verdict, Verdict::Pass);
  auto st = parse_network("edge a s t 1\nedge b s t 2\n");
  EXPECT_EQ(check_mp(st, Mechanism::MinimalCut, st.capacities(), 0, 1).verdict, Verdict::Pass);
}

TEST(CheckCm, ShapleyFig4) {
  auto net = load_fixture("fig4");
  auto r = check_cm(net, Mechanism::Shapley, net.capacities(), 0, {Q("3/5")});
  ASSERT_EQ(r.verdict, Verdict::Violation);
  const auto& w = first_witness<CmWitness>(r);
  EXPECT_EQ(w.flow_before, 1);
  EXPECT_EQ(w.flow_after, make_rational(11, 10));
  EXPECT_EQ(w.affected, 1u);
  EXPECT_EQ(w.payoff_before, make_rational(1, 3));
  EXPECT_EQ(w.payoff_after, make_rational(19, 60));
}

TEST(CheckCm, McFig4SmallStep) {
  auto net = load_fixture("fig4");
  EXPECT_EQ(check_cm(net, Mechanism::MinimalCut, net.capacities(), 0, {Q("3/5")}).verdict,
            Verdict::Pass);
}

TEST(CheckCm, UnchangedFlowIsNotJudged) {
  auto net = load_fixture("fig5");
  // e2 is inessential: raising it never raises the flow.
  auto r = check_cm(net, Mechanism::Shapley, net.capacities(), 1);
  EXPECT_EQ(r.verdict, Verdict::Pass);
  ASSERT_TRUE(r.trace);
  EXPECT_EQ(r.trace->grid.size(), 8u);
  bool judged_zero = false;
  for (const auto& [k, v] : r.facts) judged_zero = judged_zero || (k == "judged_points" && v == "0");
  EXPECT_TRUE(judged_zero);
  EXPECT_THROW(check_cm(net, Mechanism::Shapley, net.capacities(), 1, {Q("1")}),
               std::invalid_argument);
}

TEST(CheckCm, McPastCriticalValue) {
  // Inclusive pair (e1, e2): raising e1 past x* = 3/2 lifts the flow from 3/2
  // to 2 while e2's share shrinks from 1/4 to 1/7.
  auto net = load_fixture("fig1");
  Reports reports = R({"1", "1/2", "1", "1"});
  auto literal = check_cm(net, Mechanism::MinimalCut, reports, 0, {Q("3")});
  ASSERT_EQ(literal.verdict, Verdict::Violation);
  const auto& w = first_witness<CmWitness>(literal);
  EXPECT_EQ(w.affected, 1u);
  EXPECT_EQ(w.payoff_before, make_rational(1, 4));
  EXPECT_EQ(w.payoff_after, make_rational(1, 7));
  auto within = check_cm(net, Mechanism::MinimalCut, reports, 0, {Q("5/4"), Q("3/2"), Q("3")},
                         CmScope::WithinCriticalValue);
  EXPECT_EQ(within.verdict, Verdict::Pass);
}

TEST(Theorem2Sweep, DiamondIndependentPair) {
  auto net = load_fixture("fig1");
  auto r = theorem2_sweep(net, R({"1", "1/2", "1", "1"}), 0, 2, 8);
  EXPECT_EQ(r.verdict, Verdict::Pass);
  ASSERT_TRUE(r.trace);
  EXPECT_EQ(r.trace->structure, PairStructure::Independent);
  EXPECT_EQ(*r.trace->critical.value, make_rational(3, 2));
  EXPECT_EQ(r.trace->grid.size(), 16u);
  EXPECT_EQ(r.trace->grid[7], make_rational(3, 2));
  const auto& pay = r.trace->observed_payoffs;
  for (std::size_t k = 1; k < 8; ++k) EXPECT_GT(pay[k], pay[k - 1]);
  for (std::size_t k = 8; k < 16; ++k) EXPECT_EQ(pay[k], pay[7]);
}

TEST(Theorem2Sweep, DiamondInclusivePair) {
  auto net = load_fixture("fig1");
  auto r = theorem2_sweep(net, R({"1", "1/2", "1", "1"}), 0, 1, 8);
  EXPECT_EQ(r.verdict, Verdict::Pass);
  EXPECT_EQ(r.trace->structure, PairStructure::Inclusive);
  const auto& pay = r.trace->observed_payoffs;
  for (std::size_t k = 1; k < 8; ++k) EXPECT_EQ(pay[k], pay[0]);
  for (std::size_t k = 8; k < 16; ++k) EXPECT_LT(pay[k], pay[k - 1]);
}

TEST(Theorem2Sweep, NeitherPair) {
  auto net = load_fixture("neither");
  auto r = theorem2_sweep(net, net.capacities(), 0, 3, 8);
  EXPECT_EQ(r.verdict, Verdict::Pass);
  EXPECT_EQ(r.trace->structure, PairStructure::Neither);
  EXPECT_EQ(*r.trace->critical.value, 1);
  const auto& pay = r.trace->observed_payoffs;
  for (std::size_t k = 1; k < 8; ++k) EXPECT_GT(pay[k], pay[k - 1]);
  for (std::size_t k = 8; k < 16; ++k) EXPECT_LT(pay[k], pay[k - 1]);
}

TEST(Theorem2Sweep, SourceSinkEdgeLeavesPayoffUnchanged) {
  auto net = load_fixture("fig5");
  auto r = theorem2_sweep(net, net.capacities(), 2, 0, 8);
  EXPECT_EQ(r.verdict, Verdict::Pass);
  EXPECT_FALSE(r.trace->structure.has_value());
  for (const auto& p : r.trace->observed_payoffs) EXPECT_EQ(p, r.trace->observed_payoffs[0]);
}

TEST(Theorem2Sweep, DetectsWrongExpectation) {
  // Sweeping a report vector where e2 is present but the prediction is
  // checked against a deliberately mismatched trend cannot happen through
  // the public API, so check that a genuine inclusive sweep is not
  // accepted as independent: its first interval is flat.
  auto net = load_fixture("fig1");
  auto inclusive = theorem2_sweep(net, R({"1", "1/2", "1", "1"}), 0, 1, 4);
  auto pay = inclusive.trace->observed_payoffs;
  EXPECT_EQ(pay[0], pay[1]);
}

TEST(Prop2Probe, SeriesChainNonDecreasing) {
  auto net = load_fixture("series");
  auto r = prop2_probe(net, 0, 1, 20, 3);
  EXPECT_EQ(r.verdict, Verdict::Pass);
}

TEST(Prop2Probe, ParallelNonIncreasing) {
  auto net = load_fixture("fig3a");
  auto r = prop2_probe(net, 0, 1, 20, 3);
  EXPECT_EQ(r.verdict, Verdict::Pass);
  bool direction = false;
  for (const auto& [k, v] : r.facts) direction = direction || (k == "direction" && v == "non-increasing");
  EXPECT_TRUE(direction);
}

TEST(Prop2Probe, Fig4CommonTailPair) {
  auto net = load_fixture("fig4");
  auto r = prop2_probe(net, 0, 1, 20, 4);
  EXPECT_EQ(r.verdict, Verdict::Pass);
  bool sub = false;
  for (const auto& [k, v] : r.facts) sub = sub || (k == "sampled_relation" && v == "substitutable");
  EXPECT_TRUE(sub);
}

TEST(Prop2Probe, DegenerateRelationIsNotTested) {
  auto net = load_fixture("neither");
  EXPECT_EQ(prop2_probe(net, 0, 2, 10, 1).verdict, Verdict::NotTested);
}

TEST(RandomNetwork, ValidAndDeterministic) {
  EXPECT_TRUE(validate(random_network(1, 6, 8)).ok);
  EXPECT_EQ(random_network(42, 6, 8), random_network(42, 6, 8));
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    auto net = random_network(seed, 6, 8);
    ASSERT_TRUE(validate(net).ok) << seed;
    ASSERT_LE(net.edge_count(), 8u);
    ASSERT_LE(net.node_count(), 6u);
  }
  EXPECT_THROW(random_network(1, 1, 8), std::invalid_argument);
}

TEST(AuditInstance, OneReportPerProperty) {
  auto net = load_fixture("fig1");
  auto reports = audit_instance(net, Mechanism::MinimalCut, net.capacities());
  ASSERT_EQ(reports.size(), 5u);
  EXPECT_EQ(reports[0].property, Property::DSIC);
  EXPECT_EQ(reports[4].property, Property::CM);
  for (const auto& r : reports) {
    EXPECT_EQ(r.network_text, render_network(net));
    EXPECT_EQ(r.mechanism, "mc");
  }
}

}  // namespace
}  // namespace flowmech
