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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hoaxnet/graph.hpp"

using namespace hoaxnet;

namespace {

void check_invariants(const Graph& g) {
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    std::set<NodeId> seen;
    for (NodeId j : g.neighbors(i)) {
      REQUIRE(j != i);
      REQUIRE(seen.insert(j).second);
      const auto back = g.neighbors(j);
      REQUIRE(std::find(back.begin(), back.end(), static_cast<NodeId>(i)) != back.end());
    }
    const auto label = static_cast<int>(g.label(i));
    REQUIRE((label == 0 || label == 1));
  }
  REQUIRE(g.labels().size() == g.node_count());
}

struct BlockEdges {
  double e00 = 0, e01 = 0, e11 = 0;
};

BlockEdges count_blocks(const Graph& g) {
  BlockEdges c;
  for (const auto& [a, b] : g.edges()) {
    const auto la = g.label(a), lb = g.label(b);
    if (la != lb) c.e01 += 1;
    else if (la == Group::kMinority) c.e00 += 1;
    else c.e11 += 1;
  }
  return c;
}

// Binomial(pairs, p) mean of `samples` draws must sit within 4 standard errors.
void check_binomial_mean(double observed_mean, double pairs, double p, int samples) {
  const double expected = pairs * p;
  const double sigma = std::sqrt(pairs * p * (1 - p));
  CHECK(std::abs(observed_mean - expected) <= 4 * sigma / std::sqrt(samples));
}

}  // namespace

TEST_CASE("ER extremes") {
  Rng rng(7);
  const Graph empty = generate_er(5, 0.0, rng);
  CHECK(empty.edge_count() == 0);
  const Graph full = generate_er(5, 1.0, rng);
  CHECK(full.edge_count() == 10);
  check_invariants(full);
  for (std::size_t i = 0; i < 5; ++i) CHECK(full.degree(i) == 4);
  CHECK(group_counts(full) == GroupCounts{0, 5});
  CHECK(generate_er(1, 0.5, rng).edge_count() == 0);
}

TEST_CASE("ER rejects bad arguments") {
  Rng rng(1);
  CHECK_THROWS_AS(generate_er(0, 0.5, rng), std::invalid_argument);
  CHECK_THROWS_AS(generate_er(5, -0.1, rng), std::invalid_argument);
  CHECK_THROWS_AS(generate_er(5, 1.5, rng), std::invalid_argument);
  CHECK_THROWS_AS(generate_er(5, std::nan(""), rng), std::invalid_argument);
}

TEST_CASE("ER edge count matches binomial statistics") {
  constexpr int kGraphs = 200;
  const double pairs = 1000.0 * 999.0 / 2.0;
  double sum = 0;
  for (int s = 0; s < kGraphs; ++s) {
    Rng rng(derive_seed(11, s));
    const Graph g = generate_er(1000, 0.006, rng);
    if (s < 3) check_invariants(g);
    sum += static_cast<double>(g.edge_count());
  }
  const double mean = sum / kGraphs;
  const double sigma = std::sqrt(pairs * 0.006 * 0.994);
  CHECK(sigma == doctest::Approx(54.6).epsilon(0.001));
  CHECK(std::abs(mean - 2997.0) <= 4 * sigma);
  check_binomial_mean(mean, pairs, 0.006, kGraphs);
}

TEST_CASE("gap sampler gives each pair independent Bernoulli(p) membership") {
  // Brute-force oracle: every one of the 15 pairs of a 6-node graph should
  // appear with frequency p, and two disjoint pairs jointly with p^2.
  constexpr int kGraphs = 40000;
  constexpr double p = 0.3;
  std::map<Edge, int> freq;
  int joint = 0;
  Rng rng(99);
  for (int s = 0; s < kGraphs; ++s) {
    const Graph g = generate_er(6, p, rng);
    bool has01 = false, has23 = false;
    for (const auto& e : g.edges()) {
      ++freq[e];
      has01 |= e == Edge{0, 1};
      has23 |= e == Edge{2, 3};
    }
    joint += has01 && has23;
  }
  CHECK(freq.size() == 15);
  const double se = std::sqrt(p * (1 - p) / kGraphs);
  for (const auto& [edge, count] : freq) {
    CHECK(std::abs(count / double(kGraphs) - p) <= 4 * se);
  }
  const double se_joint = std::sqrt(p * p * (1 - p * p) / kGraphs);
  CHECK(std::abs(joint / double(kGraphs) - p * p) <= 4 * se_joint);
}

TEST_CASE("SBM with zero matrix has no edges") {
  Rng rng(3);
  const Graph g = generate_sbm(10, MinorityFraction(0.2), {0, 0, 0}, rng);
  CHECK(g.edge_count() == 0);
  CHECK(group_counts(g) == GroupCounts{2, 8});
  CHECK(g.label(0) == Group::kMinority);
  CHECK(g.label(1) == Group::kMinority);
  CHECK(g.label(2) == Group::kMajority);
}

TEST_CASE("SBM full matrix is complete") {
  Rng rng(3);
  const Graph g = generate_sbm(9, MinorityFraction(0.3), {1, 1, 1}, rng);
  CHECK(g.edge_count() == 36);
  check_invariants(g);
}

TEST_CASE("group counts use round half away from zero") {
  Rng rng(5);
  CHECK(group_counts(generate_er(100, 0.01, rng)) == GroupCounts{0, 100});
  CHECK(group_counts(generate_sbm(1000, MinorityFraction(0.2), {0.01, 0.002, 0.007}, rng)) ==
        GroupCounts{200, 800});
  CHECK(group_counts(generate_sbm(10, MinorityFraction(0.25), {0, 0, 0}, rng)) ==
        GroupCounts{3, 7});
  CHECK(MinorityFraction(0.15).minority_count(10) == 2);  // 1.4999999999999998
  CHECK(MinorityFraction(0.0).minority_count(10) == 0);
  CHECK(MinorityFraction(1.0).minority_count(10) == 10);
}

TEST_CASE("SBM rejects invalid fraction or matrix") {
  Rng rng(1);
  CHECK_THROWS_AS(MinorityFraction(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(MinorityFraction(1.1), std::invalid_argument);
  CHECK_THROWS_AS(generate_sbm(10, MinorityFraction(0.2), {1.2, 0, 0}, rng),
                  std::invalid_argument);
  CHECK_THROWS_AS(generate_sbm(10, MinorityFraction(0.2), {0, -0.5, 0}, rng),
                  std::invalid_argument);
  CHECK_THROWS_AS(generate_sbm(0, MinorityFraction(0.2), {0, 0, 0}, rng),
                  std::invalid_argument);
}

TEST_CASE("SBM block edge counts match binomial statistics") {
  constexpr int kGraphs = 200;
  const BlockMatrix h{0.04, 0.002, 0.007};
  BlockEdges sum;
  for (int s = 0; s < kGraphs; ++s) {
    Rng rng(derive_seed(21, s));
    const Graph g = generate_sbm(1000, MinorityFraction(0.2), h, rng);
    if (s < 3) check_invariants(g);
    const auto c = count_blocks(g);
    sum.e00 += c.e00;
    sum.e01 += c.e01;
    sum.e11 += c.e11;
  }
  const double cross = sum.e01 / kGraphs;
  CHECK(std::abs(cross - 320.0) <= 4 * std::sqrt(160000 * 0.002 * 0.998));
  check_binomial_mean(sum.e00 / kGraphs, 200.0 * 199 / 2, h.h00, kGraphs);
  check_binomial_mean(cross, 200.0 * 800, h.h01, kGraphs);
  check_binomial_mean(sum.e11 / kGraphs, 800.0 * 799 / 2, h.h11, kGraphs);
}

TEST_CASE("uniform block matrix behaves like ER") {
  constexpr int kGraphs = 200;
  const double p = 0.006;
  double sbm = 0, er = 0;
  for (int s = 0; s < kGraphs; ++s) {
    Rng a(derive_seed(31, s)), b(derive_seed(32, s));
    sbm += static_cast<double>(generate_sbm(1000, MinorityFraction(0.5), {p, p, p}, a).edge_count());
    er += static_cast<double>(generate_er(1000, p, b).edge_count());
  }
  const double pairs = 1000.0 * 999 / 2;
  check_binomial_mean(sbm / kGraphs, pairs, p, kGraphs);
  const double se = std::sqrt(pairs * p * (1 - p) / kGraphs);
  CHECK(std::abs(sbm / kGraphs - er / kGraphs) <= 4 * std::sqrt(2.0) * se);
}

TEST_CASE("same seed gives identical edge sets") {
  Rng a(1234), b(1234), c(1235);
  const auto ea = generate_sbm(300, MinorityFraction(0.3), {0.05, 0.01, 0.02}, a).edges();
  const auto eb = generate_sbm(300, MinorityFraction(0.3), {0.05, 0.01, 0.02}, b).edges();
  const auto ec = generate_sbm(300, MinorityFraction(0.3), {0.05, 0.01, 0.02}, c).edges();
  CHECK(ea == eb);
  CHECK(ea != ec);
}

TEST_CASE("graph construction validates edges") {
  const std::vector<Edge> loop{{1, 1}};
  const std::vector<Edge> dup{{0, 1}, {1, 0}};
  const std::vector<Edge> far{{0, 5}};
  CHECK_THROWS_AS(Graph(3, loop), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, dup), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, far), std::invalid_argument);
  CHECK_THROWS_AS(Graph(0, std::vector<Edge>{}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, std::vector<Edge>{}, {Group::kMajority}), std::invalid_argument);

  const std::vector<Edge> star{{0, 3}, {0, 1}, {2, 0}};
  const Graph g(4, star);
  check_invariants(g);
  CHECK(g.degree(0) == 3);
  CHECK(std::vector<NodeId>(g.neighbors(0).begin(), g.neighbors(0).end()) ==
        std::vector<NodeId>{1, 2, 3});
}

TEST_CASE("edge list export") {
  const std::vector<Edge> edges{{2, 0}, {1, 2}};
  const Graph g(3, edges, {Group::kMinority, Group::kMajority, Group::kMajority});
  std::ostringstream out;
  write_edge_list(g, out);
  CHECK(out.str() == "# labels: 0 1 1\n0 2\n1 2\n");
}
