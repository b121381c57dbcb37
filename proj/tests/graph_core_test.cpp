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

#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "flowmech/fixtures.hpp"
#include "flowmech/limits.hpp"
#include "flowmech/maxflow.hpp"
#include "flowmech/network_io.hpp"
#include "flowmech/validate.hpp"
#include "oracles.hpp"

namespace flowmech {
namespace {

using testing::Q;
using testing::R;

TEST(Rational, ParsesIntegersFractionsAndDecimals) {
  EXPECT_EQ(*parse_rational("3"), 3);
  EXPECT_EQ(*parse_rational("3/2"), make_rational(3, 2));
  EXPECT_EQ(*parse_rational("6/4"), make_rational(3, 2));
  EXPECT_EQ(*parse_rational("0.5"), make_rational(1, 2));
  EXPECT_EQ(*parse_rational("-0.125"), make_rational(-1, 8));
  EXPECT_EQ(*parse_rational(".25"), make_rational(1, 4));
  EXPECT_FALSE(parse_rational("1/0"));
  EXPECT_FALSE(parse_rational("abc"));
  EXPECT_FALSE(parse_rational("1/2/3"));
  EXPECT_FALSE(parse_rational(""));
  EXPECT_FALSE(parse_rational("1e3"));
}

TEST(Rational, RendersCanonically) {
  EXPECT_EQ(to_string(make_rational(4, 2)), "2");
  EXPECT_EQ(to_string(make_rational(2, 4)), "1/2");
  EXPECT_EQ(to_string(make_rational(-3, 9)), "-1/3");
  EXPECT_EQ(to_string(Rational(0)), "0");
}

TEST(ParseNetwork, ArrowForm) {
  FlowNetwork net = parse_network("s -e1:3/2-> t\n");
  ASSERT_EQ(net.edge_count(), 1u);
  EXPECT_EQ(net.edge(0).id, "e1");
  EXPECT_EQ(net.edge(0).capacity, make_rational(3, 2));
  EXPECT_EQ(net.nodes()[net.source()], "s");
  EXPECT_EQ(net.nodes()[net.sink()], "t");
}

TEST(ParseNetwork, Fig1File) {
  FlowNetwork net = load_fixture("fig1");
  EXPECT_EQ(net.node_count(), 3u);
  EXPECT_EQ(net.edge_count(), 4u);
  EXPECT_EQ(net.capacities(), R({"2", "1", "1", "1"}));
}

TEST(ParseNetwork, CommentsAndBlankLinesIgnored) {
  FlowNetwork net = parse_network("# header\n\nedge a s A 1  # trailing\nedge b A t 2\n");
  EXPECT_EQ(net.edge_count(), 2u);
  EXPECT_EQ(net.edge(1).capacity, 2);
}

TEST(ParseNetwork, DecimalCapacityIsExact) {
  FlowNetwork net = parse_network("edge e1 s t 0.5\n");
  EXPECT_EQ(net.edge(0).capacity, make_rational(1, 2));
}

TEST(ParseNetwork, ZeroCapacityRejected) {
  try {
    parse_network("edge e1 s t 0\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.field(), "capacity");
    EXPECT_NE(std::string(e.what()).find("non-positive capacity"), std::string::npos);
  }
}

TEST(ParseNetwork, ErrorsCarryLocation) {
  auto message = [](const char* text) {
    try {
      parse_network(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_NE(message("edge e1 s t 1\nedge e2 s t x/2\n").find("line 2"), std::string::npos);
  EXPECT_NE(message("edge e1 s t 1/2\nedge e2 s t x/2\n").find("malformed rational capacity"),
            std::string::npos);
  EXPECT_NE(message("edge e1 s t 1\nedge e1 s t 1\n").find("duplicate edge id"), std::string::npos);
  EXPECT_NE(message("node s\nnode t\nedge e1 s X 1\n").find("unknown node reference"),
            std::string::npos);
  EXPECT_NE(message("edge e1 s\n").find("line 1"), std::string::npos);
  EXPECT_NE(message("frobnicate\n").find("line 1"), std::string::npos);
}

TEST(ParseNetwork, JsonDocument) {
  FlowNetwork net = parse_network(R"({
    "nodes": ["s", "A", "t"],
    "edges": [{"id": "e1", "from": "s", "to": "A", "cap": "3/2"},
              {"id": "e2", "from": "A", "to": "t", "cap": 1}],
    "source": "s", "sink": "t"})");
  EXPECT_EQ(net.edge_count(), 2u);
  EXPECT_EQ(net.edge(0).capacity, make_rational(3, 2));
  EXPECT_EQ(net.nodes()[net.sink()], "t");
}

TEST(ParseNetwork, JsonInfersTerminals) {
  FlowNetwork net = parse_network(
      R"({"edges": [{"id": "a", "from": "x", "to": "y", "cap": "1"}]})");
  EXPECT_EQ(net.nodes()[net.source()], "x");
  EXPECT_EQ(net.nodes()[net.sink()], "y");
}

TEST(ParseNetwork, JsonErrors) {
  EXPECT_THROW(parse_network(R"({"edges": [{"id": "a", "from": "s", "to": "t", "cap": "0"}]})"),
               ParseError);
  EXPECT_THROW(parse_network(R"({"edges": [{"id": "a", "from": "s", "cap": "1"}]})"), ParseError);
  EXPECT_THROW(parse_network(R"({"edges": [)"), ParseError);
}

TEST(Fixtures, RoundTripThroughRender) {
  for (const auto& f : kFixtures) {
    FlowNetwork net = parse_network(f.text);
    EXPECT_EQ(render_network(net), f.text) << f.name;
    EXPECT_EQ(parse_network(render_network(net)), net) << f.name;
  }
}

TEST(Fixtures, FilesMatchEmbeddedText) {
  for (const auto& f : kFixtures) {
    std::ifstream in(std::string(FLOWMECH_FIXTURE_DIR) + "/" + std::string(f.name) + ".net");
    ASSERT_TRUE(in) << f.name;
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(ss.str(), f.text) << f.name;
  }
}

TEST(Fixtures, AllValidate) {
  for (const auto& f : kFixtures) EXPECT_TRUE(validate(load_fixture(f.name)).ok) << f.name;
}

TEST(Validate, Fig1IsValid) {
  auto report = validate(load_fixture("fig1"));
  EXPECT_TRUE(report.ok);
  EXPECT_TRUE(report.diagnostics.empty());
}

TEST(Validate, SelfLoopIsACycle) {
  auto report = validate(parse_network("edge e1 s A 1\nedge e2 A A 1\nedge e3 A t 1\n"));
  EXPECT_FALSE(report.ok);
  ASSERT_TRUE(report.has("cycle"));
  bool found = false;
  for (const auto& d : report.diagnostics) {
    found = found || d.message.find("cycle detected") != std::string::npos;
  }
  EXPECT_TRUE(found);
}

TEST(Validate, DanglingEdgeIsOffPath) {
  auto net = parse_network(
      "source s\nsink t\nedge e1 s A 2\nedge e2 s A 1\nedge e3 A t 1\nedge e4 A t 1\n"
      "edge e5 A B 1\n");
  auto report = validate(net);
  EXPECT_FALSE(report.ok);
  EXPECT_TRUE(report.has("off-path"));
  bool names_edge = false;
  for (const auto& d : report.diagnostics) {
    if (d.code == "off-path") {
      names_edge = names_edge || d.entity == "e5";
      EXPECT_EQ(d.message, "edge off all s-t paths");
    }
  }
  EXPECT_TRUE(names_edge);
}

TEST(Validate, ReportsEveryFailure) {
  auto net = parse_network("source s\nsink t\nedge e1 s t 1\nedge e2 A A 1\nedge e3 s B 1\n");
  auto report = validate(net);
  EXPECT_TRUE(report.has("cycle"));
  EXPECT_TRUE(report.has("multiple-sinks"));
  EXPECT_TRUE(report.has("off-path"));
}

TEST(Validate, EmptyNetwork) { EXPECT_TRUE(validate(FlowNetwork{}).has("empty")); }

TEST(Prune, DropsOffPathEdges) {
  auto net = parse_network(
      "source s\nsink t\nedge e1 s A 1\nedge e2 A t 1\nedge e3 A B 1\n");
  auto pruned = prune(net);
  EXPECT_TRUE(pruned.report.ok);
  EXPECT_EQ(pruned.network.edge_count(), 2u);
  EXPECT_TRUE(pruned.report.has("pruned"));
  EXPECT_FALSE(pruned.network.find_node("B"));
}

TEST(MaxFlow, Fig1UnitCapacities) {
  auto net = load_fixture("fig1");
  EXPECT_EQ(max_flow_value(net, R({"1", "1", "1", "1"})), 2);
}

TEST(MaxFlow, SingleEdge) {
  auto net = parse_network("s -e:7/3-> t\n");
  EXPECT_EQ(max_flow_value(net, net.capacities()), make_rational(7, 3));
}

TEST(MaxFlow, Fig4BeforeAndAfter) {
  auto net = load_fixture("fig4");
  EXPECT_EQ(max_flow_value(net, R({"1/2", "1/2", "1", "1"})), 1);
  EXPECT_EQ(max_flow_value(net, R({"3/5", "1/2", "1", "1"})), make_rational(11, 10));
}

TEST(MaxFlow, ZeroReportRemovesEdge) {
  auto net = load_fixture("fig5");
  EXPECT_EQ(max_flow_value(net, R({"1", "2", "0"})), 1);
  EXPECT_EQ(max_flow_value(net, R({"0", "2", "1"})), 1);
}

TEST(MaxFlow, WitnessIsFeasible) {
  auto net = load_fixture("series");
  auto caps = net.capacities();
  FlowResult r = max_flow(net, caps);
  std::vector<Rational> balance(net.node_count(), Rational(0));
  for (EdgeIndex e = 0; e < net.edge_count(); ++e) {
    EXPECT_GE(r.edge_flows[e], 0);
    EXPECT_LE(r.edge_flows[e], caps[e]);
    balance[net.edge(e).tail] -= r.edge_flows[e];
    balance[net.edge(e).head] += r.edge_flows[e];
  }
  for (NodeIndex v = 0; v < net.node_count(); ++v) {
    if (v != net.source() && v != net.sink()) EXPECT_EQ(balance[v], 0);
  }
  EXPECT_EQ(-balance[net.source()], r.value);
  EXPECT_TRUE(r.source_side[net.source()]);
  EXPECT_FALSE(r.source_side[net.sink()]);
  EXPECT_EQ(r.value, testing::min_cut_value(net, caps));
}

TEST(CoalitionValue, Examples) {
  auto fig1 = load_fixture("fig1");
  auto caps = fig1.capacities();
  EXPECT_EQ(coalition_value(fig1, caps, Coalition{0b1101}), 2);  // {e1,e3,e4}
  EXPECT_EQ(coalition_value(fig1, caps, Coalition{0b1100}), 0);  // {e3,e4}
  EXPECT_EQ(coalition_value(fig1, caps, Coalition{}), 0);
  EXPECT_EQ(coalition_value(fig1, caps, Coalition{0b0110}), 1);  // {e2,e3}
  auto fig5 = load_fixture("fig5");
  EXPECT_EQ(coalition_value(fig5, fig5.capacities(), Coalition::single(2)), 1);
}

TEST(TwoParameterFlow, Examples) {
  auto series = parse_network("edge i s A 1\nedge j A t 1\n");
  auto parallel = parse_network("edge i s t 1\nedge j s t 1\n");
  Reports rest{0, 0};
  for (const auto& [x, y] : {std::pair{Q("1/3"), Q("2")}, {Q("5/2"), Q("1")}, {Q("0"), Q("4")}}) {
    EXPECT_EQ(two_parameter_flow(series, 0, 1, x, y, rest), std::min(x, y));
    EXPECT_EQ(two_parameter_flow(parallel, 0, 1, x, y, rest), x + y);
  }
  auto fig4 = load_fixture("fig4");
  EXPECT_EQ(two_parameter_flow(fig4, 0, 1, Q("1/2"), Q("1/2"), R({"0", "0", "1", "1"})), 1);
}

TEST(Limits, GuardMentionsOverride) {
  try {
    require_at_most(30, 20, "table");
    FAIL();
  } catch (const SizeLimitError& e) {
    EXPECT_NE(std::string(e.what()).find("FLOWMECH_MAX_EDGES"), std::string::npos);
  }
  EXPECT_NO_THROW(require_at_most(20, 20, "table"));
}

TEST(RequireReports, RejectsNegativeAndWrongSize) {
  auto net = load_fixture("fig5");
  EXPECT_THROW(max_flow(net, R({"1", "1"})), std::invalid_argument);
  EXPECT_THROW(max_flow(net, R({"1", "-1", "1"})), std::invalid_argument);
}

}  // namespace
}  // namespace flowmech
