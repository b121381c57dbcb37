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
#include <deque>
#include <string>
#include <vector>

#include "flowmech/network.hpp"

namespace flowmech {

enum class Severity { Error, Warning };

struct Diagnostic {
  Severity severity = Severity::Error;
  std::string code;     // stable machine-readable tag
  std::string message;  // human-readable; starts with the canonical phrase
  std::string entity;   // offending node or edge id, may be empty
};

struct ValidationReport {
  bool ok = true;
  std::vector<Diagnostic> diagnostics;

  void add(Severity sev, std::string code, std::string message, std::string entity) {
    if (sev == Severity::Error) ok = false;
    diagnostics.push_back({sev, std::move(code), std::move(message), std::move(entity)});
  }

  bool has(const std::string& code) const {
    return std::any_of(diagnostics.begin(), diagnostics.end(),
                       [&](const Diagnostic& d) { return d.code == code; });
  }
};

namespace detail {

/// Nodes reachable from `start` along edges in the given direction.
inline std::vector<bool> reach(const FlowNetwork& net, NodeIndex start, bool forward) {
  std::vector<std::vector<NodeIndex>> adj(net.node_count());
  for (const auto& e : net.edges()) {
    if (forward) {
      adj[e.tail].push_back(e.head);
    } else {
      adj[e.head].push_back(e.tail);
    }
  }
  std::vector<bool> seen(net.node_count(), false);
  std::deque<NodeIndex> queue{start};
  seen[start] = true;
  while (!queue.empty()) {
    NodeIndex v = queue.front();
    queue.pop_front();
    for (NodeIndex w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  return seen;
}

/// Kahn's algorithm; returns the nodes left over when a cycle blocks it.
inline std::vector<NodeIndex> nodes_on_cycles(const FlowNetwork& net) {
  std::vector<std::size_t> indeg(net.node_count(), 0);
  for (const auto& e : net.edges()) ++indeg[e.head];
  std::deque<NodeIndex> ready;
  for (NodeIndex v = 0; v < net.node_count(); ++v) {
    if (indeg[v] == 0) ready.push_back(v);
  }
  std::vector<std::vector<NodeIndex>> out(net.node_count());
  for (const auto& e : net.edges()) out[e.tail].push_back(e.head);
  std::vector<bool> done(net.node_count(), false);
  while (!ready.empty()) {
    NodeIndex v = ready.front();
    ready.pop_front();
    done[v] = true;
    for (NodeIndex w : out[v]) {
      if (--indeg[w] == 0) ready.push_back(w);
    }
  }
  std::vector<NodeIndex> stuck;
  for (NodeIndex v = 0; v < net.node_count(); ++v) {
    if (!done[v]) stuck.push_back(v);
  }
  return stuck;
}

}  // namespace detail

/// Checks every structural assumption of the max-flow game and reports all
/// failures: acyclicity, a unique source and sink, positive capacities and
/// that each edge lies on some source-sink path.
inline ValidationReport validate(const FlowNetwork& net) {
  ValidationReport report;
  const auto& names = net.nodes();

  if (net.edge_count() == 0) {
    report.add(Severity::Error, "empty", "network has no edges", "");
  }
  for (const auto& e : net.edges()) {
    if (e.capacity <= 0) {
      report.add(Severity::Error, "non-positive-capacity",
                 "non-positive capacity " + to_string(e.capacity), e.id);
    }
  }

  auto stuck = detail::nodes_on_cycles(net);
  if (!stuck.empty()) {
    report.add(Severity::Error, "cycle", "cycle detected through node " + names[stuck[0]],
               names[stuck[0]]);
  }

  std::vector<std::size_t> in(net.node_count(), 0), out(net.node_count(), 0);
  for (const auto& e : net.edges()) {
    ++out[e.tail];
    ++in[e.head];
  }
  std::vector<NodeIndex> sources, sinks;
  for (NodeIndex v = 0; v < net.node_count(); ++v) {
    if (in[v] == 0 && out[v] == 0) {
      report.add(Severity::Error, "isolated-node", "isolated node " + names[v], names[v]);
      continue;
    }
    if (in[v] == 0) sources.push_back(v);
    if (out[v] == 0) sinks.push_back(v);
  }
  if (!net.has_source()) {
    report.add(Severity::Error, "source", "no unique source could be determined", "");
  } else if (in[net.source()] != 0) {
    report.add(Severity::Error, "source",
               "declared source " + names[net.source()] + " has incoming edges",
               names[net.source()]);
  }
  if (!net.has_sink()) {
    report.add(Severity::Error, "sink", "no unique sink could be determined", "");
  } else if (out[net.sink()] != 0) {
    report.add(Severity::Error, "sink",
               "declared sink " + names[net.sink()] + " has outgoing edges",
               names[net.sink()]);
  }
  if (net.has_source() && net.has_sink() && net.source() == net.sink()) {
    report.add(Severity::Error, "source", "source and sink coincide", names[net.source()]);
  }
  for (NodeIndex v : sources) {
    if (!net.has_source() || v != net.source()) {
      report.add(Severity::Error, "multiple-sources",
                 "multiple sources: " + names[v] + " has no incoming edges", names[v]);
    }
  }
  for (NodeIndex v : sinks) {
    if (!net.has_sink() || v != net.sink()) {
      report.add(Severity::Error, "multiple-sinks",
                 "multiple sinks: " + names[v] + " has no outgoing edges", names[v]);
    }
  }

  if (net.has_source() && net.has_sink()) {
    auto from_s = detail::reach(net, net.source(), true);
    auto to_t = detail::reach(net, net.sink(), false);
    for (const auto& e : net.edges()) {
      if (!from_s[e.tail] || !to_t[e.head]) {
        report.add(Severity::Error, "off-path", "edge off all s-t paths", e.id);
      }
    }
  }
  return report;
}

struct PruneResult {
  FlowNetwork network;
  ValidationReport report;
};

/// Drops every edge that lies on no source-sink path, and nodes left without
/// edges, then validates what remains. Each dropped edge is recorded as a
/// warning. Requires known terminals.
inline PruneResult prune(const FlowNetwork& net) {
  PruneResult result;
  if (!net.has_source() || !net.has_sink()) {
    result.network = net;
    result.report = validate(net);
    return result;
  }
  auto from_s = detail::reach(net, net.source(), true);
  auto to_t = detail::reach(net, net.sink(), false);
  std::vector<bool> keep_edge(net.edge_count(), false);
  std::vector<bool> keep_node(net.node_count(), false);
  keep_node[net.source()] = keep_node[net.sink()] = true;
  for (EdgeIndex i = 0; i < net.edge_count(); ++i) {
    const auto& e = net.edge(i);
    if (from_s[e.tail] && to_t[e.head]) {
      keep_edge[i] = true;
      keep_node[e.tail] = keep_node[e.head] = true;
    }
  }
  FlowNetwork out;
  for (NodeIndex v = 0; v < net.node_count(); ++v) {
    if (keep_node[v]) out.add_node(net.nodes()[v]);
  }
  ValidationReport warnings;
  for (EdgeIndex i = 0; i < net.edge_count(); ++i) {
    const auto& e = net.edge(i);
    if (keep_edge[i]) {
      out.add_edge(e.id, net.nodes()[e.tail], net.nodes()[e.head], e.capacity);
    } else {
      warnings.add(Severity::Warning, "pruned", "pruned edge off all s-t paths", e.id);
    }
  }
  out.set_source(*out.find_node(net.nodes()[net.source()]));
  out.set_sink(*out.find_node(net.nodes()[net.sink()]));
  result.report = validate(out);
  result.report.diagnostics.insert(result.report.diagnostics.begin(),
                                   warnings.diagnostics.begin(),
                                   warnings.diagnostics.end());
  result.network = std::move(out);
  return result;
}

}  // namespace flowmech
