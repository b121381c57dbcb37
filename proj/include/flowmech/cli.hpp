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

// Command dispatch behind the flowmech tool. Argument parsing lives in
// tools/flowmech.cpp; everything here works on a parsed CommandRequest so
// it can be driven from tests.

#pragma once

#include <chrono>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "flowmech/audits.hpp"
#include "flowmech/fixtures.hpp"
#include "flowmech/validate.hpp"

namespace flowmech::cli {

inline constexpr const char* kToolVersion = "0.1.0";

enum class Format { Table, Json };

struct CommandRequest {
  std::string subcommand;
  std::string target;  // audit property, or fixture name
  std::string input;   // network file path
  std::vector<std::string> report_overrides;  // "edge=p/q"
  std::vector<std::string> allocation;        // core-check payoffs, "edge=p/q"
  std::optional<std::string> mechanism;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> edge;
  std::optional<std::string> pair;  // "e1,e2"
  std::size_t grid = 8;
  std::size_t points = 8;
  std::size_t samples = 50;
  Format format = Format::Table;
  bool prune = false;
  bool oracle = false;
};

struct RunDocument {
  nlohmann::ordered_json body;
  int exit_code = 0;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names{
      "validate", "maxflow", "cuts",          "shapley",     "mc",      "core-check", "core-bounds",
      "core-select", "classify-pair", "deviate", "audit", "sweep-theorem2", "fixtures"};
  return names;
}

namespace detail {

inline std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

inline std::string utc_timestamp() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::pair<std::string, Rational> parse_assignment(const std::string& text,
                                                         const char* flag) {
  auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw UsageError(std::string(flag) + " expects edge=value, got '" + text + "'");
  }
  auto value = parse_rational(std::string_view(text).substr(eq + 1));
  if (!value) throw UsageError(std::string(flag) + ": malformed rational in '" + text + "'");
  return {text.substr(0, eq), *value};
}

inline EdgeIndex lookup_edge(const FlowNetwork& net, const std::string& id, const char* flag) {
  auto e = net.find_edge(id);
  if (!e) throw UsageError(std::string(flag) + ": unknown edge '" + id + "'");
  return *e;
}

inline Reports apply_reports(const FlowNetwork& net, const std::vector<std::string>& overrides) {
  Reports reports = net.capacities();
  for (const auto& text : overrides) {
    auto [id, value] = parse_assignment(text, "--report");
    EdgeIndex e = lookup_edge(net, id, "--report");
    if (value < 0 || value > net.edge(e).capacity) {
      throw UsageError("--report " + id + "=" + to_string(value) + " must lie in [0, " +
                       to_string(net.edge(e).capacity) + "]");
    }
    reports[e] = value;
  }
  return reports;
}

inline std::pair<EdgeIndex, EdgeIndex> parse_pair(const FlowNetwork& net,
                                                  const std::optional<std::string>& pair) {
  if (!pair) throw UsageError("--pair e1,e2 is required");
  auto comma = pair->find(',');
  if (comma == std::string::npos) throw UsageError("--pair expects two edge ids, e.g. e1,e2");
  return {lookup_edge(net, pair->substr(0, comma), "--pair"),
          lookup_edge(net, pair->substr(comma + 1), "--pair")};
}

inline EdgeIndex require_edge(const FlowNetwork& net, const std::optional<std::string>& edge) {
  if (!edge) throw UsageError("--edge <id> is required");
  return lookup_edge(net, *edge, "--edge");
}

inline Mechanism pick_mechanism(const std::optional<std::string>& name, Mechanism fallback) {
  if (!name) return fallback;
  auto m = parse_mechanism(*name);
  if (!m) throw UsageError("unknown mechanism '" + *name + "'");
  return *m;
}

using nlohmann::ordered_json;

inline ordered_json rational_list(const FlowNetwork& net, const Reports& values) {
  ordered_json out = ordered_json::object();
  for (EdgeIndex e = 0; e < values.size(); ++e) out[net.edge(e).id] = to_string(values[e]);
  return out;
}

inline ordered_json id_list(const FlowNetwork& net, const EdgeSet& edges) {
  ordered_json out = ordered_json::array();
  for (EdgeIndex e : edges) out.push_back(net.edge(e).id);
  return out;
}

inline ordered_json allocation_json(const FlowNetwork& net, const Reports& reports,
                                    const Allocation& a) {
  ordered_json rows = ordered_json::array();
  for (EdgeIndex e = 0; e < net.edge_count(); ++e) {
    rows.push_back({{"edge", net.edge(e).id},
                    {"report", to_string(reports[e])},
                    {"payoff", to_string(a.payoffs[e])}});
  }
  return {{"kind", "allocation"}, {"mechanism", a.mechanism}, {"rows", rows},
          {"total", to_string(a.total)}};
}

inline ordered_json witness_json(const FlowNetwork& net, const Witness& w) {
  auto id = [&](EdgeIndex e) { return e < net.edge_count() ? net.edge(e).id : std::to_string(e); };
  return std::visit(
      [&](const auto& x) -> ordered_json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, DeviationWitness>) {
          return {{"type", "deviation"},      {"player", id(x.player)},
                  {"truth", to_string(x.truth)}, {"truthful_payoff", to_string(x.truthful_payoff)},
                  {"best_report", to_string(x.best_report)},
                  {"best_payoff", to_string(x.best_payoff)},
                  {"gain", to_string(x.gain)},
                  {"others_reports", rational_list(net, x.others_reports)}};
        } else if constexpr (std::is_same_v<T, SirWitness>) {
          return {{"type", "sir"}, {"player", id(x.player)}, {"payoff", to_string(x.payoff)},
                  {"standalone", to_string(x.standalone)}, {"reason", x.reason}};
        } else if constexpr (std::is_same_v<T, SplitWitness>) {
          return {{"type", "split"},
                  {"edge", id(x.edge)},
                  {"cap_a", to_string(x.cap_a)},
                  {"cap_b", to_string(x.cap_b)},
                  {"original_payoff", to_string(x.original_payoff)},
                  {"payoff_a", to_string(x.payoff_a)},
                  {"payoff_b", to_string(x.payoff_b)},
                  {"gain", to_string(x.gain)}};
        } else if constexpr (std::is_same_v<T, MergeWitness>) {
          return {{"type", "merge"},
                  {"edge_a", id(x.edge_a)},
                  {"edge_b", id(x.edge_b)},
                  {"payoff_a", to_string(x.payoff_a)},
                  {"payoff_b", to_string(x.payoff_b)},
                  {"merged_payoff", to_string(x.merged_payoff)},
                  {"gain", to_string(x.gain)}};
        } else if constexpr (std::is_same_v<T, CmWitness>) {
          return {{"type", "cross-monotonicity"},
                  {"raised", id(x.raised)},
                  {"from", to_string(x.from)},
                  {"to", to_string(x.to)},
                  {"flow_before", to_string(x.flow_before)},
                  {"flow_after", to_string(x.flow_after)},
                  {"affected", id(x.affected)},
                  {"payoff_before", to_string(x.payoff_before)},
                  {"payoff_after", to_string(x.payoff_after)}};
        } else if constexpr (std::is_same_v<T, SweepWitness>) {
          return {{"type", "sweep"}, {"index", x.index}, {"report", to_string(x.report)},
                  {"payoff", to_string(x.payoff)}, {"expected", x.expectation}};
        } else if constexpr (std::is_same_v<T, MonotonicityWitness>) {
          return {{"type", "monotonicity"},
                  {"configuration", rational_list(net, x.configuration)},
                  {"report_lo", to_string(x.report_lo)},
                  {"report_hi", to_string(x.report_hi)},
                  {"payoff_lo", to_string(x.payoff_lo)},
                  {"payoff_hi", to_string(x.payoff_hi)}};
        } else {
          return {{"type", "pattern"}, {"pattern", x.pattern}, {"expected", x.expected},
                  {"sampled", x.sampled}};
        }
      },
      w);
}

inline ordered_json trace_json(const FlowNetwork& net, const SweepTrace& t) {
  ordered_json points = ordered_json::array();
  for (std::size_t k = 0; k < t.grid.size(); ++k) {
    points.push_back({{"report", to_string(t.grid[k])},
                      {"payoff", to_string(t.observed_payoffs[k])},
                      {"max_flow", to_string(t.flow_values[k])}});
  }
  ordered_json out = {{"swept", net.edge(t.swept).id},
                      {"observed", net.edge(t.observed).id},
                      {"critical_value", t.critical.str()},
                      {"expected", t.expected_case},
                      {"points", points}};
  if (t.structure) out["structure"] = to_string(*t.structure);
  return out;
}

inline ordered_json audit_json(const FlowNetwork& net, const AuditReport& r) {
  ordered_json facts = ordered_json::object();
  for (const auto& [k, v] : r.facts) facts[k] = v;
  ordered_json witnesses = ordered_json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(witness_json(net, w));
  ordered_json out = {{"kind", "audit"},
                      {"property", to_string(r.property)},
                      {"mechanism", r.mechanism},
                      {"verdict", to_string(r.verdict)},
                      {"facts", facts},
                      {"witnesses", witnesses},
                      {"network", r.network_text},
                      {"reports", rational_list(net, r.reports)}};
  if (r.trace) out["trace"] = trace_json(net, *r.trace);
  return out;
}

struct Loaded {
  FlowNetwork net;
  Reports reports;
  ordered_json diagnostics = ordered_json::array();
};

inline ordered_json diagnostics_json(const ValidationReport& report) {
  ordered_json out = ordered_json::array();
  for (const auto& d : report.diagnostics) {
    out.push_back({{"severity", d.severity == Severity::Error ? "error" : "warning"},
                   {"code", d.code},
                   {"message", d.message},
                   {"entity", d.entity}});
  }
  return out;
}

inline Property property_from(const std::string& name) {
  static const std::vector<std::pair<std::string, Property>> names{
      {"dsic", Property::DSIC},          {"sir", Property::SIR},
      {"sp", Property::SP},              {"mp", Property::MP},
      {"cm", Property::CM},              {"cross-effect", Property::Theorem2},
      {"theorem2", Property::Theorem2},  {"shapley-monotonicity", Property::Prop2},
      {"prop2", Property::Prop2}};
  for (const auto& [n, p] : names) {
    if (n == name) return p;
  }
  throw UsageError("unknown audit property '" + name +
                   "' (expected dsic, sir, sp, mp, cm, cross-effect, shapley-monotonicity or all)");
}

inline std::vector<AuditReport> run_audit(const CommandRequest& req, const Loaded& in) {
  const FlowNetwork& net = in.net;
  if (req.target.empty()) throw UsageError("audit needs a property: dsic|sir|sp|mp|cm|all|...");
  if (req.grid < 2) throw UsageError("--grid must be at least 2");
  const Mechanism mech = pick_mechanism(req.mechanism, Mechanism::MinimalCut);
  if (req.target == "all") {
    AuditOptions options;
    options.deviation_grid = req.grid;
    return audit_instance(net, mech, in.reports, options);
  }
  const Property p = property_from(req.target);
  switch (p) {
    case Property::SP:
      if (req.edge) return {check_sp(net, mech, in.reports, require_edge(net, req.edge))};
      break;
    case Property::CM:
      if (req.edge) return {check_cm(net, mech, in.reports, require_edge(net, req.edge))};
      break;
    case Property::MP:
      if (req.pair) {
        auto [a, b] = parse_pair(net, req.pair);
        return {check_mp(net, mech, in.reports, a, b)};
      }
      break;
    case Property::Theorem2: {
      auto [a, b] = parse_pair(net, req.pair);
      return {theorem2_sweep(net, in.reports, a, b, req.points)};
    }
    case Property::Prop2: {
      if (!req.seed) throw UsageError("--seed is required for sampled audits");
      auto [a, b] = parse_pair(net, req.pair);
      return {prop2_probe(net, a, b, req.samples, *req.seed)};
    }
    case Property::DSIC:
    case Property::SIR:
      break;
  }
  AuditOptions options;
  options.deviation_grid = req.grid;
  options.properties = {p};
  return audit_instance(net, mech, in.reports, options);
}

}  // namespace detail

/// Executes one command. Never throws: usage and input errors become an
/// "error" document with exit code 1.
inline RunDocument run(const CommandRequest& req) {
  using detail::ordered_json;
  RunDocument doc;
  ordered_json command = {{"subcommand", req.subcommand}};
  if (!req.target.empty()) command["target"] = req.target;
  if (!req.input.empty()) command["input"] = req.input;
  if (!req.report_overrides.empty()) command["reports"] = req.report_overrides;
  if (!req.allocation.empty()) command["allocation"] = req.allocation;
  if (req.mechanism) command["mechanism"] = *req.mechanism;
  if (req.seed) command["seed"] = *req.seed;
  if (req.edge) command["edge"] = *req.edge;
  if (req.pair) command["pair"] = *req.pair;
  command["grid"] = req.grid;
  command["points"] = req.points;
  command["samples"] = req.samples;
  command["prune"] = req.prune;
  command["oracle"] = req.oracle;

  doc.body = {{"tool", "flowmech"},
              {"version", kToolVersion},
              {"timestamp", detail::utc_timestamp()},
              {"command", command}};

  auto fail = [&](const std::string& message, int code) {
    doc.body["status"] = "error";
    doc.body["error"] = message;
    doc.exit_code = code;
    return doc;
  };

  try {
    if (req.subcommand == "fixtures") {
      doc.body["input_digest"] = nullptr;
      ordered_json results = ordered_json::array();
      if (req.target.empty()) {
        for (const auto& f : kFixtures) {
          results.push_back({{"name", f.name}, {"description", f.description}});
        }
      } else {
        const auto& f = find_fixture(req.target);
        results.push_back({{"name", f.name}, {"description", f.description}, {"text", f.text}});
      }
      doc.body["results"] = {{"kind", "fixtures"}, {"fixtures", results}};
      doc.body["status"] = "ok";
      return doc;
    }
    if (std::find(subcommands().begin(), subcommands().end(), req.subcommand) ==
        subcommands().end()) {
      throw UsageError("unknown subcommand '" + req.subcommand + "'");
    }
    if (req.input.empty()) throw UsageError(req.subcommand + " needs a network file");

    const std::string text = detail::read_file(req.input);
    doc.body["input_digest"] = "fnv1a64:" + detail::fnv1a_hex(text);
    detail::Loaded in{parse_network(text), {}};

    ValidationReport checked = validate(in.net);
    if (req.subcommand == "validate") {
      doc.body["results"] = {{"kind", "validation"},
                             {"ok", checked.ok},
                             {"diagnostics", detail::diagnostics_json(checked)}};
      if (!checked.ok && req.prune) {
        PruneResult pruned = prune(in.net);
        doc.body["results"]["pruned"] = {{"ok", pruned.report.ok},
                                         {"network", render_network(pruned.network)},
                                         {"diagnostics", detail::diagnostics_json(pruned.report)}};
        checked = pruned.report;
      }
      doc.body["status"] = checked.ok ? "ok" : "invalid";
      doc.exit_code = checked.ok ? 0 : 1;
      return doc;
    }
    if (!checked.ok) {
      if (!req.prune) {
        doc.body["diagnostics"] = detail::diagnostics_json(checked);
        return fail("network failed validation (use --prune to drop off-path edges)", 1);
      }
      PruneResult pruned = prune(in.net);
      doc.body["diagnostics"] = detail::diagnostics_json(pruned.report);
      if (!pruned.report.ok) return fail("network failed validation after pruning", 1);
      in.net = std::move(pruned.network);
    }
    in.reports = detail::apply_reports(in.net, req.report_overrides);
    const FlowNetwork& net = in.net;
    const Reports& reports = in.reports;
    doc.body["reports"] = detail::rational_list(net, reports);

    ordered_json results;
    const std::string& sub = req.subcommand;
    if (sub == "maxflow") {
      FlowResult flow = max_flow(net, reports);
      ordered_json side = ordered_json::array();
      for (NodeIndex v = 0; v < net.node_count(); ++v) {
        if (flow.source_side[v]) side.push_back(net.nodes()[v]);
      }
      results = {{"kind", "maxflow"},
                 {"value", to_string(flow.value)},
                 {"edge_flows", detail::rational_list(net, flow.edge_flows)},
                 {"source_side", side},
                 {"min_cut_nearest_source", detail::id_list(net, min_cut_nearest_source(net, reports))}};
    } else if (sub == "cuts") {
      MinimalCutFamily family = req.oracle
                                    ? minimal_cuts_bruteforce(net, reports, CutScope::RemainingGraph)
                                    : enumerate_minimal_cuts(net, reports);
      ordered_json cuts = ordered_json::array();
      for (std::size_t k = 0; k < family.cuts.size(); ++k) {
        cuts.push_back({{"edges", detail::id_list(net, family.cuts[k])},
                        {"capacity", to_string(family.cut_capacity[k])}});
      }
      results = {{"kind", "cuts"},
                 {"method", req.oracle ? "edge-subset brute force" : "node-subset enumeration"},
                 {"remaining_flow_value", to_string(family.remaining_flow_value)},
                 {"cuts", cuts}};
    } else if (sub == "shapley") {
      Allocation a = req.oracle ? shapley_permutation_oracle(net, reports) : shapley(net, reports);
      results = detail::allocation_json(net, reports, a);
    } else if (sub == "mc") {
      Mechanism m = detail::pick_mechanism(req.mechanism, Mechanism::MinimalCut);
      if (m != Mechanism::MinimalCut && m != Mechanism::MinimalCutNoStepOne) {
        throw UsageError("mc accepts --mechanism mc or mc-no-step-one");
      }
      results = detail::allocation_json(net, reports, allocate(m, net, reports));
    } else if (sub == "core-select") {
      results = detail::allocation_json(net, reports, core_select_nearest_cut(net, reports));
    } else if (sub == "core-check") {
      Reports x(net.edge_count(), Rational(0));
      for (const auto& text : req.allocation) {
        auto [id, value] = detail::parse_assignment(text, "--alloc");
        x[detail::lookup_edge(net, id, "--alloc")] = value;
      }
      CoreVerdict v = core_check(net, reports, x);
      results = {{"kind", "core-check"},
                 {"allocation", detail::rational_list(net, x)},
                 {"in_core", v.in_core()}};
      if (v.violation) {
        results["violation"] = {{"coalition", detail::id_list(net, v.violation->coalition.members())},
                                {"value", to_string(v.violation->value)},
                                {"allocated", to_string(v.violation->allocated)}};
      }
    } else if (sub == "core-bounds") {
      ordered_json rows = ordered_json::array();
      auto cache = CharacteristicCache::build(net, reports);
      for (EdgeIndex e = 0; e < net.edge_count(); ++e) {
        if (req.edge && net.edge(e).id != *req.edge) continue;
        auto [lo, hi] = core_bounds(cache, e);
        rows.push_back({{"edge", net.edge(e).id}, {"min", to_string(lo)}, {"max", to_string(hi)}});
      }
      if (req.edge && rows.empty()) detail::require_edge(net, req.edge);
      results = {{"kind", "core-bounds"}, {"rows", rows}};
    } else if (sub == "classify-pair") {
      auto [a, b] = detail::parse_pair(net, req.pair);
      results = {{"kind", "pair"},
                 {"pair", {net.edge(a).id, net.edge(b).id}},
                 {"critical_value", critical_value(net, reports, a).str()},
                 {"pattern", to_string(structural_pattern(net, a, b))},
                 {"relation", to_string(classify_complementarity(net, a, b, reports).relation)}};
      if (net.is_source_sink_edge(a) || net.is_source_sink_edge(b)) {
        results["structure"] = "undefined (s-t edge)";
      } else {
        results["structure"] = to_string(classify_pair_structure(net, reports, a, b));
      }
    } else if (sub == "deviate") {
      EdgeIndex player = detail::require_edge(net, req.edge);
      Mechanism m = detail::pick_mechanism(req.mechanism, Mechanism::MinimalCut);
      if (req.grid < 2) throw UsageError("--grid must be at least 2");
      auto w = best_deviation(net, m, player, net.edge(player).capacity, reports, req.grid);
      results = {{"kind", "deviation"},
                 {"mechanism", to_string(m)},
                 {"witness", detail::witness_json(net, w)}};
    } else if (sub == "audit") {
      ordered_json audits = ordered_json::array();
      bool violated = false;
      for (const auto& r : detail::run_audit(req, in)) {
        violated = violated || r.verdict == Verdict::Violation;
        audits.push_back(detail::audit_json(net, r));
      }
      results = {{"kind", "audits"}, {"audits", audits}};
      doc.exit_code = violated ? 2 : 0;
    } else if (sub == "sweep-theorem2") {
      auto [a, b] = detail::parse_pair(net, req.pair);
      if (req.points < 1) throw UsageError("--points must be at least 1");
      auto r = theorem2_sweep(net, reports, a, b, req.points);
      results = {{"kind", "audits"}, {"audits", {detail::audit_json(net, r)}}};
      doc.exit_code = r.verdict == Verdict::Violation ? 2 : 0;
    }
    doc.body["results"] = results;
    doc.body["status"] = doc.exit_code == 2 ? "violation" : "ok";
    return doc;
  } catch (const UsageError& e) {
    return fail(e.what(), 1);
  } catch (const ParseError& e) {
    return fail(e.what(), 1);
  } catch (const SizeLimitError& e) {
    return fail(e.what(), 1);
  } catch (const std::invalid_argument& e) {
    return fail(e.what(), 1);
  } catch (const std::out_of_range& e) {
    return fail(e.what(), 1);
  }
}

namespace detail {

inline std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

/// Aligned text table; first row is the header.
inline std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += c + 1 == row.size() ? row[c] : pad(row[c], width[c]) + "  ";
    }
    out += line + "\n";
  }
  return out;
}

inline std::string str(const ordered_json& j) {
  return j.is_string() ? j.get<std::string>() : j.dump();
}

inline std::string render_witness(const ordered_json& w) {
  std::string out = "  witness";
  for (const auto& [k, v] : w.items()) {
    if (k == "others_reports" || k == "configuration") {
      std::string list;
      for (const auto& [e, q] : v.items()) list += (list.empty() ? "" : ",") + e + "=" + str(q);
      out += " " + k + "={" + list + "}";
    } else {
      out += " " + k + "=" + str(v);
    }
  }
  return out + "\n";
}

inline std::string render_audit(const ordered_json& a) {
  std::string out = str(a["property"]) + " [" + str(a["mechanism"]) + "]: " + str(a["verdict"]);
  for (const auto& [k, v] : a["facts"].items()) out += "  " + k + "=" + str(v);
  out += "\n";
  for (const auto& w : a["witnesses"]) out += render_witness(w);
  if (a.contains("trace")) {
    const auto& t = a["trace"];
    std::vector<std::vector<std::string>> rows{
        {"report(" + str(t["swept"]) + ")", "payoff(" + str(t["observed"]) + ")", "max-flow"}};
    for (const auto& p : t["points"]) rows.push_back({str(p["report"]), str(p["payoff"]), str(p["max_flow"])});
    out += table(rows);
  }
  return out;
}

}  // namespace detail

/// Renders a document. Json mode is the document verbatim.
inline std::string format_report(const RunDocument& doc, Format mode) {
  if (mode == Format::Json) return doc.body.dump(2) + "\n";
  using detail::str;
  const auto& b = doc.body;
  std::string out;
  if (b.contains("diagnostics")) {
    for (const auto& d : b["diagnostics"]) {
      out += str(d["severity"]) + " [" + str(d["code"]) + "] " + str(d["message"]) + "\n";
    }
  }
  if (b.value("status", "") == "error") return out + "error: " + str(b["error"]) + "\n";
  const auto& r = b["results"];
  const std::string kind = r.value("kind", "");
  if (kind == "allocation") {
    std::vector<std::vector<std::string>> rows{{"edge", "report", "payoff"}};
    for (const auto& row : r["rows"]) rows.push_back({str(row["edge"]), str(row["report"]), str(row["payoff"])});
    out += "mechanism: " + str(r["mechanism"]) + "\n" + detail::table(rows);
    out += "total: " + str(r["total"]) + "\n";
  } else if (kind == "audits") {
    for (const auto& a : r["audits"]) out += detail::render_audit(a);
  } else if (kind == "validation") {
    out += std::string(r["ok"].get<bool>() ? "valid" : "invalid") + "\n";
    for (const auto& d : r["diagnostics"]) {
      out += "  " + str(d["severity"]) + " [" + str(d["code"]) + "] " + str(d["message"]) + "\n";
    }
    if (r.contains("pruned")) {
      out += "after pruning: " + std::string(r["pruned"]["ok"].get<bool>() ? "valid" : "invalid") +
             "\n" + str(r["pruned"]["network"]);
    }
  } else if (kind == "maxflow") {
    out += "max-flow value: " + str(r["value"]) + "\n";
    std::vector<std::vector<std::string>> rows{{"edge", "flow"}};
    for (const auto& [e, f] : r["edge_flows"].items()) rows.push_back({e, str(f)});
    out += detail::table(rows);
    std::string cut;
    for (const auto& e : r["min_cut_nearest_source"]) cut += (cut.empty() ? "" : ",") + str(e);
    out += "minimum cut nearest the source: {" + cut + "}\n";
  } else if (kind == "cuts") {
    out += "remaining max-flow value: " + str(r["remaining_flow_value"]) + "\n";
    std::vector<std::vector<std::string>> rows{{"cut", "capacity"}};
    for (const auto& c : r["cuts"]) {
      std::string set;
      for (const auto& e : c["edges"]) set += (set.empty() ? "" : ",") + str(e);
      rows.push_back({"{" + set + "}", str(c["capacity"])});
    }
    out += detail::table(rows);
  } else if (kind == "core-check") {
    if (r["in_core"].get<bool>()) {
      out += "in core\n";
    } else {
      const auto& v = r["violation"];
      std::string set;
      for (const auto& e : v["coalition"]) set += (set.empty() ? "" : ",") + str(e);
      out += "not in core: coalition {" + set + "} has value " + str(v["value"]) +
             " but is allocated " + str(v["allocated"]) + "\n";
    }
  } else if (kind == "core-bounds") {
    std::vector<std::vector<std::string>> rows{{"edge", "min", "max"}};
    for (const auto& row : r["rows"]) rows.push_back({str(row["edge"]), str(row["min"]), str(row["max"])});
    out += detail::table(rows);
  } else if (kind == "pair") {
    for (const auto& key : {"structure", "critical_value", "pattern", "relation"}) {
      out += std::string(key) + ": " + str(r[key]) + "\n";
    }
  } else if (kind == "deviation") {
    out += "mechanism: " + str(r["mechanism"]) + "\n" + detail::render_witness(r["witness"]);
  } else if (kind == "fixtures") {
    for (const auto& f : r["fixtures"]) {
      if (f.contains("text")) {
        out += str(f["text"]);
      } else {
        out += detail::pad(str(f["name"]), 10) + str(f["description"]) + "\n";
      }
    }
  }
  return out;
}

}  // namespace flowmech::cli
