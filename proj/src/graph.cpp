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

#include "hoaxnet/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace hoaxnet {
namespace {

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(name) + " must lie in [0, 1], got " +
                                std::to_string(p));
  }
}

// Visits each index in [0, total) independently with probability p, in
// increasing order, by drawing geometric gaps between successes.
template <typename Visit>
void sample_indices(std::uint64_t total, double p, Rng& rng, Visit visit) {
  if (total == 0 || p <= 0.0) return;
  if (p >= 1.0) {
    for (std::uint64_t k = 0; k < total; ++k) visit(k);
    return;
  }
  const double log_q = std::log1p(-p);
  std::uint64_t next = 0;
  while (true) {
    const double u = 1.0 - uniform01(rng);  // (0, 1]
    const double gap = std::floor(std::log(u) / log_q);
    if (gap >= static_cast<double>(total - next)) return;
    next += static_cast<std::uint64_t>(gap);
    visit(next);
    if (++next >= total) return;
  }
}

// Pairs i < j within nodes [first, first + m), ordered by j then i.
void sample_within(NodeId first, std::size_t m, double p, Rng& rng,
                   std::vector<Edge>& edges) {
  const std::uint64_t total =
      m < 2 ? 0 : static_cast<std::uint64_t>(m) * (m - 1) / 2;
  std::uint64_t row = 1;   // j - first
  std::uint64_t base = 0;  // row * (row - 1) / 2
  sample_indices(total, p, rng, [&](std::uint64_t k) {
    while (k >= base + row) {
      base += row;
      ++row;
    }
    edges.emplace_back(first + static_cast<NodeId>(k - base),
                       first + static_cast<NodeId>(row));
  });
}

// Pairs (i, j) with i in [0, m) and j in [m, m + m2).
void sample_across(std::size_t m, std::size_t m2, double p, Rng& rng,
                   std::vector<Edge>& edges) {
  const std::uint64_t total = static_cast<std::uint64_t>(m) * m2;
  sample_indices(total, p, rng, [&](std::uint64_t k) {
    edges.emplace_back(static_cast<NodeId>(k / m2),
                       static_cast<NodeId>(m + k % m2));
  });
}

}  // namespace

double BlockMatrix::at(Group a, Group b) const noexcept {
  if (a != b) return h01;
  return a == Group::kMinority ? h00 : h11;
}

void BlockMatrix::validate() const {
  check_probability(h00, "h00");
  check_probability(h01, "h01");
  check_probability(h11, "h11");
}

MinorityFraction::MinorityFraction(double value) : value_(value) {
  check_probability(value, "f0");
}

std::size_t MinorityFraction::minority_count(std::size_t n) const noexcept {
  return static_cast<std::size_t>(std::llround(value_ * static_cast<double>(n)));
}

Graph::Graph(std::size_t n, std::span<const Edge> edges, std::vector<Group> labels)
    : labels_(std::move(labels)) {
  if (n == 0) throw std::invalid_argument("graph needs at least one node");
  if (n > std::numeric_limits<NodeId>::max()) {
    throw std::invalid_argument("graph too large for 32-bit node ids");
  }
  if (labels_.size() != n) {
    throw std::invalid_argument("label count " + std::to_string(labels_.size()) +
                                " does not match node count " + std::to_string(n));
  }
  for (Group g : labels_) {
    if (g != Group::kMinority && g != Group::kMajority) {
      throw std::invalid_argument("group label must be 0 or 1");
    }
  }

  offsets_.assign(n + 1, 0);
  for (const auto& [a, b] : edges) {
    if (a >= n || b >= n) {
      throw std::invalid_argument("edge (" + std::to_string(a) + ", " +
                                  std::to_string(b) + ") out of range");
    }
    if (a == b) {
      throw std::invalid_argument("self-loop at node " + std::to_string(a));
    }
    ++offsets_[a + 1];
    ++offsets_[b + 1];
  }
  for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];

  adjacency_.resize(offsets_[n]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [a, b] : edges) {
    adjacency_[cursor[a]++] = b;
    adjacency_[cursor[b]++] = a;
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto first = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[i]);
    auto last = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[i + 1]);
    std::sort(first, last);
    if (auto dup = std::adjacent_find(first, last); dup != last) {
      throw std::invalid_argument("duplicate edge (" + std::to_string(i) + ", " +
                                  std::to_string(*dup) + ")");
    }
  }
}

Graph::Graph(std::size_t n, std::span<const Edge> edges)
    : Graph(n, edges, std::vector<Group>(n, Group::kMajority)) {}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (std::size_t i = 0; i < node_count(); ++i) {
    for (NodeId j : neighbors(i)) {
      if (j > i) out.emplace_back(static_cast<NodeId>(i), j);
    }
  }
  return out;
}

Graph generate_er(std::size_t n, double p, Rng& rng) {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  check_probability(p, "p");
  std::vector<Edge> edges;
  sample_within(0, n, p, rng, edges);
  return Graph(n, edges);
}

Graph generate_sbm(std::size_t n, MinorityFraction f0, const BlockMatrix& h,
                   Rng& rng) {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  h.validate();
  const std::size_t m = f0.minority_count(n);
  std::vector<Group> labels(n, Group::kMajority);
  std::fill_n(labels.begin(), m, Group::kMinority);

  std::vector<Edge> edges;
  sample_within(0, m, h.h00, rng, edges);
  sample_across(m, n - m, h.h01, rng, edges);
  sample_within(static_cast<NodeId>(m), n - m, h.h11, rng, edges);
  return Graph(n, edges, std::move(labels));
}

GroupCounts group_counts(const Graph& g) {
  GroupCounts counts;
  for (Group label : g.labels()) {
    (label == Group::kMinority ? counts.minority : counts.majority) += 1;
  }
  return counts;
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << "# labels:";
  for (Group label : g.labels()) out << ' ' << static_cast<int>(label);
  out << '\n';
  for (const auto& [a, b] : g.edges()) out << a << ' ' << b << '\n';
}

}  // namespace hoaxnet
