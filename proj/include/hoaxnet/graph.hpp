// Copyright 2026 The hoaxnet Authors
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
#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "hoaxnet/rng.hpp"

namespace hoaxnet {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

/// Group label: 0 is the minority, 1 the majority.
enum class Group : std::uint8_t { kMinority = 0, kMajority = 1 };

/// Symmetric 2x2 edge probability matrix; h01 is shared by both
/// off-diagonal entries.
struct BlockMatrix {
  double h00 = 0.0;
  double h01 = 0.0;
  double h11 = 0.0;

  double at(Group a, Group b) const noexcept;
  /// Throws std::invalid_argument if any entry lies outside [0, 1].
  void validate() const;
};

/// Share of nodes in the minority group.
class MinorityFraction {
 public:
  /// Throws std::invalid_argument unless 0 <= value <= 1.
  explicit MinorityFraction(double value);

  double value() const noexcept { return value_; }
  /// round(value * n), halves rounded away from zero.
  std::size_t minority_count(std::size_t n) const noexcept;

 private:
  double value_;
};

struct GroupCounts {
  std::size_t minority = 0;
  std::size_t majority = 0;

  std::size_t of(Group g) const noexcept {
    return g == Group::kMinority ? minority : majority;
  }
  friend bool operator==(const GroupCounts&, const GroupCounts&) = default;
};

/// Immutable undirected simple graph with per-node group labels, stored as
/// compressed sparse rows. Neighbor lists are sorted ascending.
class Graph {
 public:
  /// Builds a graph from an undirected edge list. Throws
  /// std::invalid_argument on n == 0, out-of-range endpoints, self-loops,
  /// duplicate edges, or a label vector whose size differs from n.
  Graph(std::size_t n, std::span<const Edge> edges, std::vector<Group> labels);
  /// Same, with every node labeled majority.
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t node_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return adjacency_.size() / 2; }
  std::size_t degree(std::size_t i) const { return offsets_[i + 1] - offsets_[i]; }

  std::span<const NodeId> neighbors(std::size_t i) const {
    return {adjacency_.data() + offsets_[i], adjacency_.data() + offsets_[i + 1]};
  }
  Group label(std::size_t i) const { return labels_[i]; }
  std::span<const Group> labels() const noexcept { return labels_; }

  /// Edges as (i, j) with i < j, in lexicographic order.
  std::vector<Edge> edges() const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> adjacency_;
  std::vector<Group> labels_;
};

/// Erdos-Renyi G(n, p); all nodes labeled majority.
Graph generate_er(std::size_t n, double p, Rng& rng);

/// Two-block stochastic block model. The first round(f0 * n) nodes form the
/// minority; pair (i, j) links with probability H[label_i][label_j].
Graph generate_sbm(std::size_t n, MinorityFraction f0, const BlockMatrix& h,
                   Rng& rng);

GroupCounts group_counts(const Graph& g);

/// Edge-list export: a `# labels:` header with one group digit per node,
/// then one `i j` line per edge.
void write_edge_list(const Graph& g, std::ostream& out);

}  // namespace hoaxnet
