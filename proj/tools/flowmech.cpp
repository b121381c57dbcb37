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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "flowmech/cli.hpp"

int main(int argc, char** argv) {
  namespace cli = flowmech::cli;
  cli::CommandRequest req;
  std::string format = "table";

  CLI::App app{"Exact mechanisms and property audits for max-flow games"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json"}));
  app.add_option("--report", req.report_overrides, "Reported capacity override, edge=p/q");
  app.add_option("--mechanism", req.mechanism, "shapley | mc | mc-no-step-one | core-nearest-cut");
  app.add_option("--seed", req.seed, "Seed for sampled commands");
  app.add_option("--edge", req.edge, "Edge id");
  app.add_option("--pair", req.pair, "Ordered edge pair, e1,e2");
  app.add_option("--alloc", req.allocation, "Allocation entry for core-check, edge=p/q");
  app.add_option("--grid", req.grid, "Deviation grid size");
  app.add_option("--points", req.points, "Sweep points per interval");
  app.add_option("--samples", req.samples, "Sampled configurations");
  app.add_flag("--prune", req.prune, "Drop edges off every s-t path before running");
  app.add_flag("--oracle", req.oracle, "Use brute-force reference algorithms");

  auto add_network_command = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("network", req.input, "Network file (line format or JSON)")->required();
    return sub;
  };
  add_network_command("validate", "Check structural assumptions");
  add_network_command("maxflow", "Max-flow value, edge flows and nearest minimum cut");
  add_network_command("cuts", "Minimal cuts of the graph without s-t edges");
  add_network_command("shapley", "Shapley value allocation");
  add_network_command("mc", "Minimal-cut mechanism allocation");
  add_network_command("core-check", "Test an allocation (--alloc) for core membership");
  add_network_command("core-bounds", "Per-edge payoff range over the core");
  add_network_command("core-select", "Core allocation from the cut nearest the source");
  add_network_command("classify-pair", "Structure and complementarity of --pair");
  add_network_command("deviate", "Best unilateral misreport of --edge");
  add_network_command("sweep-theorem2", "Cross-effect sweep of --pair under mc");
  auto* audit = app.add_subcommand("audit", "Property audit: dsic|sir|sp|mp|cm|cross-effect|"
                                            "shapley-monotonicity|all");
  audit->add_option("property", req.target, "Property to audit")->required();
  audit->add_option("network", req.input, "Network file")->required();
  auto* fixtures = app.add_subcommand("fixtures", "List bundled graphs or print one");
  fixtures->add_option("name", req.target, "Fixture name");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  req.subcommand = app.get_subcommands().front()->get_name();
  req.format = format == "json" ? cli::Format::Json : cli::Format::Table;

  cli::RunDocument doc = cli::run(req);
  std::string text = cli::format_report(doc, req.format);
  (doc.exit_code == 1 && req.format == cli::Format::Table ? std::cerr : std::cout) << text;
  return doc.exit_code;
}
