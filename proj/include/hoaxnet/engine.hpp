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

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hoaxnet/dynamics.hpp"
#include "hoaxnet/graph.hpp"
#include "hoaxnet/kernels.hpp"
#include "hoaxnet/rng.hpp"

namespace hoaxnet {

enum class SeedingScope { kWholeNetwork, kMinorityOnly, kMajorityOnly };

/// How the t = 0 configuration is drawn. Seeded counts are
/// round(fraction * scope size), sampled without replacement from the scope.
struct InitialCondition {
  double believer_fraction = 0.01;
  SeedingScope scope = SeedingScope::kWholeNetwork;
  double factchecker_fraction = 0.0;

  std::vector<std::string> violations() const;
  friend bool operator==(const InitialCondition&, const InitialCondition&) = default;
};

/// S/B/F counts at one recorded step, globally and per group.
struct StepCounts {
  using Row = std::array<std::uint32_t, kStateCount>;
  Row global{};
  std::array<Row, 2> by_group{};  // indexed by Group

  std::uint32_t of(AgentState s) const { return global[static_cast<std::size_t>(s)]; }
  std::uint32_t of(Group g, AgentState s) const {
    return by_group[static_cast<std::size_t>(g)][static_cast<std::size_t>(s)];
  }
  friend bool operator==(const StepCounts&, const StepCounts&) = default;
};

StepCounts count_states(const Graph& g, std::span<const AgentState> states);

struct Trajectory {
  GroupCounts group_sizes;
  std::vector<StepCounts> records;  // steps + 1 entries, t = 0 first

  std::size_t steps() const { return records.size() - 1; }
  double believer_fraction(std::size_t t) const;
  /// Share of the group's own nodes; NaN when the group is empty.
  double believer_fraction(std::size_t t, Group g) const;

  friend bool operator==(const Trajectory&, const Trajectory&) = default;
};

/// Throws std::invalid_argument if `ic` is invalid or its scope is empty
/// while a positive fraction is requested.
StateVector seed_initial(const Graph& g, const InitialCondition& ic, Rng& rng);

/// Stateful stepper used by the trajectory runner. Keeps neighbor tallies and
/// state counts current, so a step only revisits the neighborhoods of nodes
/// that changed. Draws random numbers exactly as step() does, so both produce
/// the same sequence of configurations from the same stream.
class Simulation {
 public:
  Simulation(const Graph& g, const ModelParams& params, StateVector initial,
             Isa isa = selected_isa());

  void advance(Rng& rng);

  std::span<const AgentState> states() const noexcept { return states_; }
  const StepCounts& counts() const noexcept { return counts_; }

 private:
  const Graph* graph_;
  Isa isa_;
  kernels::TransitionCoefficients coefficients_;
  StateVector states_;
  StateVector next_;
  std::vector<std::uint32_t> believers_;
  std::vector<std::uint32_t> factcheckers_;
  std::vector<double> uniforms_;
  std::vector<std::uint32_t> changed_;
  StepCounts counts_;
};

/// Seeds with `ic`, then applies `steps` synchronous updates, all from one
/// stream seeded with `seed`.
Trajectory run_trajectory(const Graph& g, const ModelParams& params,
                          const InitialCondition& ic, std::size_t steps,
                          std::uint64_t seed);

enum class NetworkFamily { kEr, kSbm };

struct NetworkSpec {
  NetworkFamily family = NetworkFamily::kEr;
  std::size_t n = 1000;
  double p = 0.0;    // ER only
  double f0 = 0.0;   // SBM only
  BlockMatrix h{};   // SBM only

  static NetworkSpec er(std::size_t n, double p);
  static NetworkSpec sbm(std::size_t n, double f0, const BlockMatrix& h);

  std::vector<std::string> violations() const;
  Graph generate(Rng& rng) const;
};

struct EnsembleOptions {
  std::size_t steps = 1000;
  std::size_t iterations = 1;
  std::uint64_t master_seed = 0;
  /// Final metric is the mean believer fraction over the last `window`
  /// recorded steps.
  std::size_t window = 1;
  /// Quenched ensemble: one graph shared by all iterations.
  bool fixed_graph = false;
  std::size_t workers = 1;

  std::vector<std::string> violations() const;
};

/// Final believer fractions of one iteration; group values are NaN for an
/// empty group.
struct IterationMetrics {
  double global = 0.0;
  double minority = 0.0;
  double majority = 0.0;

  friend bool operator==(const IterationMetrics&, const IterationMetrics&) = default;
};

/// Mean and sample standard deviation (0 for a single value).
struct Summary {
  double mean = 0.0;
  double std = 0.0;
};

struct EnsembleStats {
  std::vector<IterationMetrics> per_iteration;
  Summary global;
  Summary minority;
  Summary majority;

  std::size_t iterations() const { return per_iteration.size(); }
};

/// Iteration k of an ensemble: the graph comes from derive_seed(child, 0),
/// dynamics from derive_seed(child, 1), with child = derive_seed(master, k).
/// In quenched mode `shared_graph` is used instead of a fresh one.
Trajectory run_iteration(const NetworkSpec& net, const ModelParams& params,
                         const InitialCondition& ic, const EnsembleOptions& opts,
                         std::size_t k, const Graph* shared_graph);

/// The graph reused by every iteration of a quenched ensemble.
Graph quenched_graph(const NetworkSpec& net, std::uint64_t master_seed);

IterationMetrics final_metrics(const Trajectory& traj, std::size_t window);

/// Aggregates in index order, so the result does not depend on how the
/// iterations were scheduled.
EnsembleStats summarize(std::vector<IterationMetrics> per_iteration);

/// Runs `opts.iterations` independent iterations on `opts.workers` threads.
EnsembleStats ensemble(const NetworkSpec& net, const ModelParams& params,
                       const InitialCondition& ic, const EnsembleOptions& opts);

/// Exact law of the full configuration after a number of synchronous steps.
/// Configurations are encoded base 3, node 0 least significant.
class StateDistribution {
 public:
  explicit StateDistribution(std::size_t node_count);

  std::size_t node_count() const noexcept { return node_count_; }
  std::size_t configuration_count() const noexcept { return probabilities_.size(); }

  double probability(std::span<const AgentState> config) const;
  double probability(std::size_t code) const { return probabilities_[code]; }
  /// P(node in S), P(node in B), P(node in F).
  std::array<double, kStateCount> marginal(std::size_t node) const;
  double total() const;
  std::size_t support_size() const;

  std::size_t encode(std::span<const AgentState> config) const;
  StateVector decode(std::size_t code) const;

 private:
  friend StateDistribution exact_state_distribution(const Graph&,
                                                    std::span<const AgentState>,
                                                    const ModelParams&, std::size_t);
  std::size_t node_count_;
  std::vector<double> probabilities_;
};

inline constexpr std::size_t kExactMaxNodes = 8;
inline constexpr std::size_t kExactMaxSteps = 6;

/// Forward propagation over all 3^n configurations. Throws
/// std::invalid_argument beyond kExactMaxNodes nodes or kExactMaxSteps steps.
StateDistribution exact_state_distribution(const Graph& g,
                                           std::span<const AgentState> initial,
                                           const ModelParams& params,
                                           std::size_t steps);

}  // namespace hoaxnet
