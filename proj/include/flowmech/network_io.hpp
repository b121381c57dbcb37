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

// Reading and writing network files.
//
// Line format (one directive per line, `#` starts a comment):
//
//   node <id>                            optional node declaration
//   source <id> / sink <id>              optional terminal declarations
//   edge <edge-id> <tail> <head> <cap>   edge with capacity p, p/q or 0.25
//   <tail> -<edge-id>:<cap>-> <head>     same edge, arrow notation
//
// When any `node` line is present, every edge endpoint must be declared.
// Otherwise nodes are created in order of first appearance.
//
// Structured format (JSON object):
//
//   {"nodes": ["s", "A", "t"],
//    "edges": [{"id": "e1", "from": "s", "to": "A", "cap": "3/2"}],
//    "source": "s", "sink": "t"}
//
// `nodes`, `source` and `sink` are optional. Undeclared terminals are
// inferred by degree; among several candidates a node named `s` (`t`) wins.

#pragma once

#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "flowmech/network.hpp"
#include "flowmech/rational.hpp"

namespace flowmech {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::string field, const std::string& message)
      : std::runtime_error(format(line, field, message)),
        line_(line),
        field_(std::move(field)) {}

  std::size_t line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  static std::string format(std::size_t line, const std::string& field,
                            const std::string& message) {
    std::string out = "line " + std::to_string(line);
    if (!field.empty()) out += ", field '" + field + "'";
    return out + ": " + message;
  }

  std::size_t line_;
  std::string field_;
};

namespace detail {

inline Rational parse_capacity(std::string_view text, std::size_t line) {
  auto q = parse_rational(text);
  if (!q) {
    throw ParseError(line, "capacity",
                     "malformed rational capacity '" + std::string(text) + "'");
  }
  if (*q <= 0) {
    throw ParseError(line, "capacity",
                     "non-positive capacity '" + std::string(text) + "'");
  }
  return *q;
}

inline void infer_terminals(FlowNetwork& net) {
  std::vector<std::size_t> in(net.node_count(), 0), out(net.node_count(), 0);
  for (const auto& e : net.edges()) {
    ++out[e.tail];
    ++in[e.head];
  }
  auto pick = [&](bool source) -> std::optional<NodeIndex> {
    std::vector<NodeIndex> candidates;
    for (NodeIndex v = 0; v < net.node_count(); ++v) {
      bool ok = source ? (in[v] == 0 && out[v] > 0) : (out[v] == 0 && in[v] > 0);
      if (ok) candidates.push_back(v);
    }
    if (candidates.size() == 1) return candidates.front();
    for (NodeIndex v : candidates) {
      if (net.nodes()[v] == (source ? "s" : "t")) return v;
    }
    return std::nullopt;
  };
  if (!net.has_source()) {
    if (auto s = pick(true)) net.set_source(*s);
  }
  if (!net.has_sink()) {
    if (auto t = pick(false)) net.set_sink(*t);
  }
}

struct PendingEdge {
  std::size_t line;
  std::string id;
  std::string tail;
  std::string head;
  Rational capacity;
};

inline FlowNetwork assemble(const std::vector<std::string>& declared_nodes,
                            const std::vector<PendingEdge>& edges,
                            const std::optional<std::pair<std::size_t, std::string>>& source,
                            const std::optional<std::pair<std::size_t, std::string>>& sink) {
  FlowNetwork net;
  const bool strict = !declared_nodes.empty();
  std::set<std::string> seen_nodes;
  for (const auto& n : declared_nodes) {
    if (!seen_nodes.insert(n).second) {
      throw ParseError(0, "node", "duplicate node '" + n + "'");
    }
    net.add_node(n);
  }
  std::set<std::string> seen_edges;
  for (const auto& pe : edges) {
    if (!seen_edges.insert(pe.id).second) {
      throw ParseError(pe.line, "edge-id", "duplicate edge id '" + pe.id + "'");
    }
    for (const auto* endpoint : {&pe.tail, &pe.head}) {
      if (strict && !net.find_node(*endpoint)) {
        throw ParseError(pe.line, endpoint == &pe.tail ? "tail" : "head",
                         "unknown node reference '" + *endpoint + "'");
      }
    }
    net.add_edge(pe.id, pe.tail, pe.head, pe.capacity);
  }
  auto resolve = [&](const auto& decl, const char* field) -> NodeIndex {
    auto v = net.find_node(decl->second);
    if (!v) {
      throw ParseError(decl->first, field,
                       "unknown node reference '" + decl->second + "'");
    }
    return *v;
  };
  if (source) net.set_source(resolve(source, "source"));
  if (sink) net.set_sink(resolve(sink, "sink"));
  infer_terminals(net);
  return net;
}

inline FlowNetwork parse_line_format(std::string_view text) {
  std::vector<std::string> declared_nodes;
  std::vector<PendingEdge> edges;
  std::optional<std::pair<std::size_t, std::string>> source, sink;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    const std::string& kw = tok[0];
    if (kw == "node") {
      if (tok.size() != 2) throw ParseError(line_no, "node", "expected 'node <id>'");
      declared_nodes.push_back(tok[1]);
    } else if (kw == "source" || kw == "sink") {
      if (tok.size() != 2) {
        throw ParseError(line_no, kw, "expected '" + kw + " <id>'");
      }
      (kw == "source" ? source : sink) = std::make_pair(line_no, tok[1]);
    } else if (kw == "edge") {
      if (tok.size() != 5) {
        throw ParseError(line_no, "edge",
                         "expected 'edge <edge-id> <tail> <head> <capacity>'");
      }
      edges.push_back({line_no, tok[1], tok[2], tok[3],
                       parse_capacity(tok[4], line_no)});
    } else if (tok.size() == 3 && tok[1].size() > 4 && tok[1].front() == '-' &&
               tok[1].ends_with("->")) {
      std::string_view label(tok[1]);
      label.remove_prefix(1);
      label.remove_suffix(2);
      auto colon = label.find(':');
      if (colon == std::string_view::npos || colon == 0) {
        throw ParseError(line_no, "edge", "expected '<tail> -<id>:<cap>-> <head>'");
      }
      edges.push_back({line_no, std::string(label.substr(0, colon)), tok[0], tok[2],
                       parse_capacity(label.substr(colon + 1), line_no)});
    } else {
      throw ParseError(line_no, kw, "unrecognised directive '" + kw + "'");
    }
  }
  return assemble(declared_nodes, edges, source, sink);
}

inline FlowNetwork parse_structured_format(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw ParseError(0, "", std::string("malformed document: ") + err.what());
  }
  if (!doc.is_object()) throw ParseError(0, "", "document must be an object");

  std::vector<std::string> declared_nodes;
  if (doc.contains("nodes")) {
    if (!doc["nodes"].is_array()) throw ParseError(0, "nodes", "must be an array");
    for (const auto& n : doc["nodes"]) {
      if (!n.is_string()) throw ParseError(0, "nodes", "node ids must be strings");
      declared_nodes.push_back(n.get<std::string>());
    }
  }
  if (!doc.contains("edges") || !doc["edges"].is_array()) {
    throw ParseError(0, "edges", "missing edge array");
  }
  std::vector<PendingEdge> edges;
  std::size_t index = 0;
  for (const auto& e : doc["edges"]) {
    ++index;  // edges are located by 1-based array position
    for (const char* key : {"id", "from", "to", "cap"}) {
      if (!e.is_object() || !e.contains(key)) {
        throw ParseError(index, key, "edge entry missing field");
      }
    }
    for (const char* key : {"id", "from", "to"}) {
      if (!e[key].is_string()) throw ParseError(index, key, "must be a string");
    }
    std::string cap_text;
    if (e["cap"].is_string()) {
      cap_text = e["cap"].get<std::string>();
    } else if (e["cap"].is_number()) {
      cap_text = e["cap"].dump();
    } else {
      throw ParseError(index, "cap", "capacity must be a string or number");
    }
    edges.push_back({index, e["id"].get<std::string>(), e["from"].get<std::string>(),
                     e["to"].get<std::string>(), parse_capacity(cap_text, index)});
  }
  std::optional<std::pair<std::size_t, std::string>> source, sink;
  for (const char* key : {"source", "sink"}) {
    if (!doc.contains(key) || doc[key].is_null()) continue;
    if (!doc[key].is_string()) throw ParseError(0, key, "must be a string");
    (std::string_view(key) == "source" ? source : sink) =
        std::make_pair(std::size_t{0}, doc[key].get<std::string>());
  }
  return assemble(declared_nodes, edges, source, sink);
}

}  // namespace detail

/// Parses either encoding. Performs no semantic validation beyond what the
/// grammar needs: duplicate ids, unknown nodes and non-positive or malformed
/// capacities are reported as ParseError.
inline FlowNetwork parse_network(std::string_view text) {
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == '{') return detail::parse_structured_format(text);
    break;
  }
  return detail::parse_line_format(text);
}

/// Line-format rendering; parse_network(render_network(net)) == net.
inline std::string render_network(const FlowNetwork& net) {
  std::string out;
  for (const auto& n : net.nodes()) out += "node " + n + "\n";
  if (net.has_source()) out += "source " + net.nodes()[net.source()] + "\n";
  if (net.has_sink()) out += "sink " + net.nodes()[net.sink()] + "\n";
  for (const auto& e : net.edges()) {
    out += "edge " + e.id + " " + net.nodes()[e.tail] + " " + net.nodes()[e.head] +
           " " + to_string(e.capacity) + "\n";
  }
  return out;
}

}  // namespace flowmech
