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
#include <numeric>
#include <stdexcept>

#include "hoaxnet/dynamics.hpp"

using namespace hoaxnet;

namespace {

constexpr auto S = AgentState::kSusceptible;
constexpr auto B = AgentState::kBeliever;
constexpr auto F = AgentState::kFactChecker;

ModelParams params(double beta, double alpha, double p_verify = 0.05, double p_forget = 0.1) {
  return {beta, alpha, p_verify, p_forget};
}

Graph star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (NodeId i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Graph(leaves + 1, edges);
}

StateVector random_states(std::size_t n, Rng& rng) {
  StateVector s(n);
  for (auto& x : s) x = static_cast<AgentState>(uniform_below(rng, 3));
  return s;
}

}  // namespace

TEST_CASE("state characters round trip") {
  CHECK(to_char(S) == 'S');
  CHECK(to_char(B) == 'B');
  CHECK(to_char(F) == 'F');
  for (auto s : {S, B, F}) CHECK(state_from_char(to_char(s)) == s);
  CHECK_THROWS_AS(state_from_char('X'), std::invalid_argument);
}

TEST_CASE("parameter validation names the field") {
  CHECK(params(0.5, 0.3).violations().empty());
  CHECK_THROWS_WITH_AS(params(0.5, 1.5).validate(), doctest::Contains("alpha"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(params(0.5, -1.0).validate(), doctest::Contains("(-1, 1)"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(params(1.2, 0.3).validate(), doctest::Contains("beta"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(params(0.5, 0.3, 0.6, 0.6).validate(),
                       doctest::Contains("p_verify + p_forget"), std::invalid_argument);
  CHECK(params(std::nan(""), 0.3, -1, 2).violations().size() >= 3);
}

TEST_CASE("tally_neighbors") {
  const Graph g = star(4);
  const StateVector states{S, B, B, B, F};
  CHECK(tally_neighbors(g, states, 0) == NeighborTally{3, 1});
  CHECK(tally_neighbors(g, states, 1) == NeighborTally{0, 0});

  const Graph isolated(1, std::vector<Edge>{});
  CHECK(tally_neighbors(isolated, StateVector{S}, 0) == NeighborTally{0, 0});

  const Graph five = star(5);
  CHECK(tally_neighbors(five, StateVector(6, S), 0) == NeighborTally{0, 0});

  CHECK_THROWS_AS(tally_neighbors(g, states, 5), std::out_of_range);
  CHECK_THROWS_AS(tally_neighbors(g, StateVector(3, S), 0), std::invalid_argument);
}

TEST_CASE("belief and fact-check probabilities") {
  const auto p = params(0.5, 0.3);
  CHECK(belief_prob(p, {0, 7}) == 0.0);
  CHECK(belief_prob(p, {4, 0}) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(belief_prob(p, {2, 1}) == doctest::Approx(0.5 * 2.6 / 3.3).epsilon(1e-12));
  CHECK(belief_prob(p, {2, 1}) == doctest::Approx(0.393939393939).epsilon(1e-10));
  CHECK(belief_prob(params(0.5, 0.0), {3, 3}) == doctest::Approx(0.25));
  CHECK(factcheck_prob(p, {5, 0}) == 0.0);
  CHECK(factcheck_prob(p, {0, 2}) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(factcheck_prob(p, {2, 1}) == doctest::Approx(0.5 * 0.7 / 3.3).epsilon(1e-12));
  CHECK(belief_prob(p, {0, 0}) == 0.0);
  CHECK(factcheck_prob(p, {0, 0}) == 0.0);
}

TEST_CASE("probability properties over random inputs") {
  Rng rng(2024);
  for (int trial = 0; trial < 2000; ++trial) {
    const double beta = uniform01(rng);
    const double alpha = -0.999 + 1.998 * uniform01(rng);
    const auto p = params(beta, alpha);
    const auto mirrored = params(beta, -alpha);
    const auto a = static_cast<std::uint32_t>(uniform_below(rng, 20));
    const auto b = static_cast<std::uint32_t>(uniform_below(rng, 20));
    if (a + b > 0) {
      CHECK(std::abs(belief_prob(p, {a, b}) + factcheck_prob(p, {a, b}) - beta) <= 1e-12);
    }
    CHECK(std::abs(belief_prob(p, {a, b}) - factcheck_prob(mirrored, {b, a})) <= 1e-12);
    CHECK(belief_prob(p, {a + 1, b}) >= belief_prob(p, {a, b}) - 1e-15);
    CHECK(belief_prob(p, {a, b + 1}) <= belief_prob(p, {a, b}) + 1e-15);
    if (a > 0 && b > 0 && alpha < 0.99) {
      CHECK(belief_prob(params(beta, alpha + 0.005), {a, b}) >= belief_prob(p, {a, b}) - 1e-15);
    }
  }
}

TEST_CASE("step examples") {
  Rng rng(5);
  const Graph g = star(6);
  const auto p = params(0.7, 0.3);
  CHECK(step(g, StateVector(7, S), p, rng) == StateVector(7, S));

  const auto no_verify = params(0.5, 0.3, 0.0, 0.1);
  StateVector s{B, S, B, S, S, B, S};
  for (int t = 0; t < 50; ++t) {
    s = step(g, s, no_verify, rng);
    CHECK(std::count(s.begin(), s.end(), F) == 0);
  }

  const Graph edge(2, std::vector<Edge>{{0, 1}});
  for (int t = 0; t < 100; ++t) {
    CHECK(step(edge, StateVector{B, S}, params(1.0, 0.0, 0.0, 0.0), rng) == StateVector{B, B});
  }
}

TEST_CASE("step partitions a single draw per node") {
  // Node 0 is S with one B neighbor and one F neighbor: f = 0.5*1.3/2, g = 0.5*0.7/2.
  const Graph g(3, std::vector<Edge>{{0, 1}, {0, 2}});
  const auto p = params(0.5, 0.3);
  const double f = belief_prob(p, {1, 1});
  const double gg = factcheck_prob(p, {1, 1});
  CHECK(f == doctest::Approx(0.5 * 1.3 / 2.0));
  CHECK(gg == doctest::Approx(0.5 * 0.7 / 2.0));
  const StateVector in{S, B, F};
  auto next_of_0 = [&](double u) {
    const std::vector<double> draws{u, 0.99, 0.99};
    return step(g, in, p, draws)[0];
  };
  CHECK(next_of_0(0.0) == B);
  CHECK(next_of_0(std::nextafter(f, 0.0)) == B);
  CHECK(next_of_0(f) == F);
  CHECK(next_of_0(std::nextafter(f + gg, 0.0)) == F);
  CHECK(next_of_0(f + gg) == S);

  // Believer exits: [0, p_verify) -> F, [p_verify, p_verify + p_forget) -> S, else B.
  const double exit = p.p_verify + p.p_forget;
  auto next_of_1 = [&](double u) {
    const std::vector<double> draws{0.99, u, 0.99};
    return step(g, in, p, draws)[1];
  };
  CHECK(next_of_1(0.049) == F);
  CHECK(next_of_1(0.05) == S);
  CHECK(next_of_1(std::nextafter(exit, 0.0)) == S);
  CHECK(next_of_1(exit) == B);

  auto next_of_2 = [&](double u) {
    const std::vector<double> draws{0.99, 0.99, u};
    return step(g, in, p, draws)[2];
  };
  CHECK(next_of_2(0.099) == S);
  CHECK(next_of_2(0.1) == F);
}

TEST_CASE("step legality and purity") {
  Rng graph_rng(8);
  const Graph g = generate_er(200, 0.03, graph_rng);
  Rng rng(9);
  StateVector s = random_states(200, rng);
  const auto p = params(0.6, 0.2, 0.2, 0.3);
  for (int t = 0; t < 100; ++t) {
    const StateVector copy = s;
    const StateVector next = step(g, s, p, rng);
    CHECK(s == copy);
    REQUIRE(next.size() == s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      CHECK_FALSE((s[i] == F && next[i] == B));
      if (s[i] == S && next[i] != S) {
        const auto tally = tally_neighbors(g, s, i);
        CHECK(tally.believers + tally.factcheckers > 0);
        if (next[i] == B) CHECK(tally.believers > 0);
        if (next[i] == F) CHECK(tally.factcheckers > 0);
      }
    }
    s = next;
  }
}

TEST_CASE("beta zero keeps susceptibles susceptible") {
  Rng graph_rng(10);
  const Graph g = generate_er(300, 0.05, graph_rng);
  Rng rng(11);
  StateVector s = random_states(300, rng);
  for (int t = 0; t < 30; ++t) {
    const StateVector next = step(g, s, params(0.0, 0.3), rng);
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == S) CHECK(next[i] == S);
    }
    s = next;
  }
}

TEST_CASE("step rejects mismatched inputs") {
  const Graph g = star(3);
  Rng rng(1);
  CHECK_THROWS_AS(step(g, StateVector(3, S), params(0.5, 0.3), rng), std::invalid_argument);
  const std::vector<double> short_draws(2, 0.5);
  CHECK_THROWS_AS(step(g, StateVector(4, S), params(0.5, 0.3), short_draws),
                  std::invalid_argument);
}

TEST_CASE("step is permutation equivariant") {
  Rng rng(12);
  const Graph g = generate_er(60, 0.1, rng);
  std::vector<NodeId> perm(60);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = perm.size(); i > 1; --i) {
    std::swap(perm[i - 1], perm[uniform_below(rng, i)]);
  }
  std::vector<Edge> relabeled;
  for (const auto& [a, b] : g.edges()) relabeled.push_back({perm[a], perm[b]});
  const Graph h(60, relabeled);

  const auto p = params(0.5, 0.3);
  for (int trial = 0; trial < 20; ++trial) {
    const StateVector s = random_states(60, rng);
    std::vector<double> draws(60);
    rng.fill_uniform(draws);
    StateVector s_perm(60);
    std::vector<double> draws_perm(60);
    for (std::size_t i = 0; i < 60; ++i) {
      s_perm[perm[i]] = s[i];
      draws_perm[perm[i]] = draws[i];
    }
    const StateVector a = step(g, s, p, draws);
    const StateVector b = step(h, s_perm, p, draws_perm);
    for (std::size_t i = 0; i < 60; ++i) CHECK(b[perm[i]] == a[i]);
  }
}

TEST_CASE("step with a stream equals step with its draws") {
  Rng rng(13);
  const Graph g = generate_er(100, 0.05, rng);
  const StateVector s = random_states(100, rng);
  Rng a(77), b(77);
  std::vector<double> draws(100);
  for (auto& d : draws) d = uniform01(b);
  CHECK(step(g, s, params(0.5, 0.3), a) == step(g, s, params(0.5, 0.3), draws));
}
