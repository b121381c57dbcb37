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

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "flowmech/rational.hpp"

namespace flowmech {

using NodeIndex = std::size_t;
using EdgeIndex = std::size_t;

struct Edge {
  std::string id;
  NodeIndex tail = 0;
  NodeIndex head = 0;
  Rational capacity;  // true capacity c(e)

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A single-source single-sink directed network whose edges are the players
/// of the max-flow game. Edge order is canonical: it fixes coalition bit
/// positions, report vectors and every deterministic tie-break.
class FlowNetwork {
 public:
  NodeIndex add_node(const std::string& name) {
    if (auto it = node_index_.find(name); it != node_index_.end()) {
      return it->second;
    }
    nodes_.push_back(name);
    node_index_.emplace(name, nodes_.size() - 1);
    return nodes_.size() - 1;
  }

  EdgeIndex add_edge(const std::string& id, NodeIndex tail, NodeIndex head,
                     Rational capacity) {
    if (edge_index_.count(id)) {
      throw std::invalid_argument("duplicate edge id '" + id + "'");
    }
    if (tail >= nodes_.size() || head >= nodes_.size()) {
      throw std::out_of_range("edge '" + id + "' references unknown node");
    }
    edges_.push_back(Edge{id, tail, head, std::move(capacity)});
    edge_index_.emplace(id, edges_.size() - 1);
    return edges_.size() - 1;
  }

  EdgeIndex add_edge(const std::string& id, const std::string& tail,
                     const std::string& head, Rational capacity) {
    NodeIndex t = add_node(tail);
    NodeIndex h = add_node(head);
    return add_edge(id, t, h, std::move(capacity));
  }

  void set_source(NodeIndex v) { source_ = v; }
  void set_sink(NodeIndex v) { sink_ = v; }

  const std::vector<std::string>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeIndex e) const { return edges_.at(e); }
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_source() const { return source_.has_value(); }
  bool has_sink() const { return sink_.has_value(); }
  const std::optional<NodeIndex>& declared_source() const { return source_; }
  const std::optional<NodeIndex>& declared_sink() const { return sink_; }

  NodeIndex source() const {
    if (!source_) throw std::logic_error("network has no source");
    return *source_;
  }
  NodeIndex sink() const {
    if (!sink_) throw std::logic_error("network has no sink");
    return *sink_;
  }

  std::optional<NodeIndex> find_node(const std::string& name) const {
    auto it = node_index_.find(name);
    if (it == node_index_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<EdgeIndex> find_edge(const std::string& id) const {
    auto it = edge_index_.find(id);
    if (it == edge_index_.end()) return std::nullopt;
    return it->second;
  }

  EdgeIndex edge_index(const std::string& id) const {
    auto e = find_edge(id);
    if (!e) throw std::invalid_argument("unknown edge id '" + id + "'");
    return *e;
  }

  /// True capacities in canonical order.
  Reports capacities() const {
    Reports caps;
    caps.reserve(edges_.size());
    for (const auto& e : edges_) caps.push_back(e.capacity);
    return caps;
  }

  bool is_source_sink_edge(EdgeIndex e) const {
    const auto& ed = edges_.at(e);
    return source_ && sink_ && ed.tail == *source_ && ed.head == *sink_;
  }

  friend bool operator==(const FlowNetwork& a, const FlowNetwork& b) {
    return a.nodes_ == b.nodes_ && a.edges_ == b.edges_ &&
           a.source_ == b.source_ && a.sink_ == b.sink_;
  }

 private:
  std::vector<std::string> nodes_;
  std::vector<Edge> edges_;
  std::optional<NodeIndex> source_;
  std::optional<NodeIndex> sink_;
  std::map<std::string, NodeIndex> node_index_;
  std::map<std::string, EdgeIndex> edge_index_;
};

/// Checks that `reports` has one entry per edge, each non-negative.
inline void require_reports(const FlowNetwork& net, const Reports& reports) {
  if (reports.size() != net.edge_count()) {
    throw std::invalid_argument("report vector has " +
                                std::to_string(reports.size()) +
                                " entries, network has " +
                                std::to_string(net.edge_count()) + " edges");
  }
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (reports[i] < 0) {
      throw std::invalid_argument("negative report for edge '" +
                                  net.edge(i).id + "'");
    }
  }
}

}  // namespace flowmech
