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

#include "hoaxnet/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "hoaxnet/parallel.hpp"

namespace hoaxnet {
namespace {

constexpr std::uint64_t kQuenchedGraphStream = std::numeric_limits<std::uint64_t>::max();

std::size_t index(AgentState s) { return static_cast<std::size_t>(s); }
std::size_t index(Group g) { return static_cast<std::size_t>(g); }

bool is_fraction(double x) { return x >= 0.0 && x <= 1.0; }

[[noreturn]] void throw_violations(const char* what, const std::vector<std::string>& errors) {
  std::ostringstream msg;
  msg << what << ':';
  for (const auto& e : errors) msg << "\n  " << e;
  throw std::invalid_argument(msg.str());
}

bool in_scope(Group label, SeedingScope scope) {
  switch (scope) {
    case SeedingScope::kWholeNetwork: return true;
    case SeedingScope::kMinorityOnly: return label == Group::kMinority;
    case SeedingScope::kMajorityOnly: return label == Group::kMajority;
  }
  return false;
}

}  // namespace

std::vector<std::string> InitialCondition::violations() const {
  std::vector<std::string> out;
  if (!is_fraction(believer_fraction)) out.push_back("believer_fraction: must lie in [0, 1]");
  if (!is_fraction(factchecker_fraction)) {
    out.push_back("factchecker_fraction: must lie in [0, 1]");
  }
  if (is_fraction(believer_fraction) && is_fraction(factchecker_fraction) &&
      believer_fraction + factchecker_fraction > 1.0) {
    out.push_back("believer_fraction: believer_fraction + factchecker_fraction must not exceed 1");
  }
  return out;
}

StepCounts count_states(const Graph& g, std::span<const AgentState> states) {
  if (states.size() != g.node_count()) {
    throw std::invalid_argument("state vector does not match graph size");
  }
  StepCounts c;
  for (std::size_t i = 0; i < states.size(); ++i) {
    ++c.global[index(states[i])];
    ++c.by_group[index(g.label(i))][index(states[i])];
  }
  return c;
}

double Trajectory::believer_fraction(std::size_t t) const {
  const auto n = group_sizes.minority + group_sizes.majority;
  return static_cast<double>(records.at(t).of(AgentState::kBeliever)) /
         static_cast<double>(n);
}

double Trajectory::believer_fraction(std::size_t t, Group g) const {
  const auto size = group_sizes.of(g);
  if (size == 0) return std::numeric_limits<double>::quiet_NaN();
  return static_cast<double>(records.at(t).of(g, AgentState::kBeliever)) /
         static_cast<double>(size);
}

StateVector seed_initial(const Graph& g, const InitialCondition& ic, Rng& rng) {
  if (auto errors = ic.violations(); !errors.empty()) {
    throw_violations("invalid initial condition", errors);
  }
  std::vector<NodeId> scope;
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    if (in_scope(g.label(i), ic.scope)) scope.push_back(static_cast<NodeId>(i));
  }
  const double size = static_cast<double>(scope.size());
  const auto believers = static_cast<std::size_t>(std::llround(ic.believer_fraction * size));
  auto factcheckers = static_cast<std::size_t>(std::llround(ic.factchecker_fraction * size));
  if (scope.empty() && (ic.believer_fraction > 0.0 || ic.factchecker_fraction > 0.0)) {
    throw std::invalid_argument("seeding scope contains no nodes");
  }
  // Two halves rounded up can overshoot the scope by one.
  factcheckers = std::min(factcheckers, scope.size() - believers);

  StateVector states(g.node_count(), AgentState::kSusceptible);
  const std::size_t chosen = believers + factcheckers;
  for (std::size_t i = 0; i < chosen; ++i) {
    const std::size_t j = i + uniform_below(rng, scope.size() - i);
    std::swap(scope[i], scope[j]);
    states[scope[i]] = i < believers ? AgentState::kBeliever : AgentState::kFactChecker;
  }
  return states;
}

Simulation::Simulation(const Graph& g, const ModelParams& params, StateVector initial,
                       Isa isa)
    : graph_(&g),
      isa_(isa),
      coefficients_(kernels::TransitionCoefficients::from(params)),
      states_(std::move(initial)),
      next_(states_.size()),
      believers_(states_.size()),
      factcheckers_(states_.size()),
      uniforms_(states_.size()),
      changed_(states_.size()) {
  params.validate();
  counts_ = count_states(g, states_);
  for (std::size_t i = 0; i < states_.size(); ++i) {
    const NeighborTally t = tally_neighbors(g, states_, i);
    believers_[i] = t.believers;
    factcheckers_[i] = t.factcheckers;
  }
}

void Simulation::advance(Rng& rng) {
  rng.fill_uniform(isa_, uniforms_);
  kernels::transition(isa_, coefficients_,
                      {states_, believers_, factcheckers_, uniforms_, next_});

  const std::size_t changes = kernels::changed_nodes(isa_, states_, next_, changed_);
  for (std::size_t c = 0; c < changes; ++c) {
    const std::size_t i = changed_[c];
    const AgentState from = states_[i];
    const AgentState to = next_[i];
    const std::size_t group = index(graph_->label(i));
    --counts_.global[index(from)];
    ++counts_.global[index(to)];
    --counts_.by_group[group][index(from)];
    ++counts_.by_group[group][index(to)];
    const auto believer_delta = static_cast<std::uint32_t>(
        (to == AgentState::kBeliever) - (from == AgentState::kBeliever));
    const auto factchecker_delta = static_cast<std::uint32_t>(
        (to == AgentState::kFactChecker) - (from == AgentState::kFactChecker));
    // Unsigned wraparound makes adding the delta a decrement when it is -1.
    for (NodeId j : graph_->neighbors(i)) {
      believers_[j] += believer_delta;
      factcheckers_[j] += factchecker_delta;
    }
  }
  states_.swap(next_);
}

Trajectory run_trajectory(const Graph& g, const ModelParams& params,
                          const InitialCondition& ic, std::size_t steps,
                          std::uint64_t seed) {
  Rng rng(seed);
  Simulation sim(g, params, seed_initial(g, ic, rng));
  Trajectory traj{group_counts(g), {}};
  traj.records.reserve(steps + 1);
  traj.records.push_back(sim.counts());
  for (std::size_t t = 0; t < steps; ++t) {
    sim.advance(rng);
    traj.records.push_back(sim.counts());
  }
  return traj;
}

NetworkSpec NetworkSpec::er(std::size_t n, double p) {
  return {NetworkFamily::kEr, n, p, 0.0, {}};
}

NetworkSpec NetworkSpec::sbm(std::size_t n, double f0, const BlockMatrix& h) {
  return {NetworkFamily::kSbm, n, 0.0, f0, h};
}

std::vector<std::string> NetworkSpec::violations() const {
  std::vector<std::string> out;
  if (n == 0) out.push_back("n: must be at least 1");
  if (family == NetworkFamily::kEr) {
    if (!is_fraction(p)) out.push_back("p: must lie in [0, 1]");
  } else {
    if (!is_fraction(f0)) out.push_back("f0: must lie in [0, 1]");
    if (!is_fraction(h.h00)) out.push_back("h00: must lie in [0, 1]");
    if (!is_fraction(h.h01)) out.push_back("h01: must lie in [0, 1]");
    if (!is_fraction(h.h11)) out.push_back("h11: must lie in [0, 1]");
  }
  return out;
}

Graph NetworkSpec::generate(Rng& rng) const {
  if (family == NetworkFamily::kEr) return generate_er(n, p, rng);
  return generate_sbm(n, MinorityFraction(f0), h, rng);
}

std::vector<std::string> EnsembleOptions::violations() const {
  std::vector<std::string> out;
  if (iterations == 0) out.push_back("iterations: must be at least 1");
  if (window == 0 || window > steps + 1) {
    out.push_back("window: must lie in [1, steps + 1]");
  }
  return out;
}

Graph quenched_graph(const NetworkSpec& net, std::uint64_t master_seed) {
  Rng rng(derive_seed(master_seed, kQuenchedGraphStream));
  return net.generate(rng);
}

Trajectory run_iteration(const NetworkSpec& net, const ModelParams& params,
                         const InitialCondition& ic, const EnsembleOptions& opts,
                         std::size_t k, const Graph* shared_graph) {
  const std::uint64_t child = derive_seed(opts.master_seed, k);
  const std::uint64_t dynamics_seed = derive_seed(child, 1);
  if (shared_graph != nullptr) {
    return run_trajectory(*shared_graph, params, ic, opts.steps, dynamics_seed);
  }
  Rng graph_rng(derive_seed(child, 0));
  const Graph g = net.generate(graph_rng);
  return run_trajectory(g, params, ic, opts.steps, dynamics_seed);
}

IterationMetrics final_metrics(const Trajectory& traj, std::size_t window) {
  const std::size_t last = traj.steps();
  const std::size_t first = last + 1 - window;
  IterationMetrics m;
  for (std::size_t t = first; t <= last; ++t) {
    m.global += traj.believer_fraction(t);
    m.minority += traj.believer_fraction(t, Group::kMinority);
    m.majority += traj.believer_fraction(t, Group::kMajority);
  }
  const auto w = static_cast<double>(window);
  return {m.global / w, m.minority / w, m.majority / w};
}

EnsembleStats summarize(std::vector<IterationMetrics> per_iteration) {
  if (per_iteration.empty()) throw std::invalid_argument("no iterations to summarize");
  const auto k = static_cast<double>(per_iteration.size());
  auto stat = [&](double IterationMetrics::*field) {
    double sum = 0.0;
    for (const auto& m : per_iteration) sum += m.*field;
    const double mean = sum / k;
    if (per_iteration.size() == 1) return Summary{mean, std::isnan(mean) ? mean : 0.0};
    double sq = 0.0;
    for (const auto& m : per_iteration) sq += (m.*field - mean) * (m.*field - mean);
    return Summary{mean, std::sqrt(sq / (k - 1.0))};
  };
  EnsembleStats stats;
  stats.global = stat(&IterationMetrics::global);
  stats.minority = stat(&IterationMetrics::minority);
  stats.majority = stat(&IterationMetrics::majority);
  stats.per_iteration = std::move(per_iteration);
  return stats;
}

EnsembleStats ensemble(const NetworkSpec& net, const ModelParams& params,
                       const InitialCondition& ic, const EnsembleOptions& opts) {
  std::vector<std::string> errors = net.violations();
  for (auto&& e : opts.violations()) errors.push_back(std::move(e));
  for (auto&& e : ic.violations()) errors.push_back(std::move(e));
  for (auto&& e : params.violations()) errors.push_back(std::move(e));
  if (!errors.empty()) throw_violations("invalid ensemble request", errors);

  std::optional<Graph> shared;
  if (opts.fixed_graph) shared.emplace(quenched_graph(net, opts.master_seed));

  std::vector<IterationMetrics> results(opts.iterations);
  parallel_for(opts.iterations, opts.workers, [&](std::size_t k) {
    const Trajectory traj =
        run_iteration(net, params, ic, opts, k, shared ? &*shared : nullptr);
    results[k] = final_metrics(traj, opts.window);
  });
  return summarize(std::move(results));
}

StateDistribution::StateDistribution(std::size_t node_count) : node_count_(node_count) {
  std::size_t size = 1;
  for (std::size_t i = 0; i < node_count; ++i) size *= kStateCount;
  probabilities_.assign(size, 0.0);
}

std::size_t StateDistribution::encode(std::span<const AgentState> config) const {
  if (config.size() != node_count_) {
    throw std::invalid_argument("configuration size does not match");
  }
  std::size_t code = 0;
  for (std::size_t i = config.size(); i-- > 0;) code = code * kStateCount + index(config[i]);
  return code;
}

StateVector StateDistribution::decode(std::size_t code) const {
  StateVector config(node_count_);
  for (auto& s : config) {
    s = static_cast<AgentState>(code % kStateCount);
    code /= kStateCount;
  }
  return config;
}

double StateDistribution::probability(std::span<const AgentState> config) const {
  return probabilities_[encode(config)];
}

std::array<double, kStateCount> StateDistribution::marginal(std::size_t node) const {
  if (node >= node_count_) throw std::out_of_range("node index out of range");
  std::array<double, kStateCount> out{};
  std::size_t stride = 1;
  for (std::size_t i = 0; i < node; ++i) stride *= kStateCount;
  for (std::size_t code = 0; code < probabilities_.size(); ++code) {
    out[(code / stride) % kStateCount] += probabilities_[code];
  }
  return out;
}

double StateDistribution::total() const {
  return std::accumulate(probabilities_.begin(), probabilities_.end(), 0.0);
}

std::size_t StateDistribution::support_size() const {
  return static_cast<std::size_t>(
      std::count_if(probabilities_.begin(), probabilities_.end(),
                    [](double p) { return p > 0.0; }));
}

StateDistribution exact_state_distribution(const Graph& g,
                                           std::span<const AgentState> initial,
                                           const ModelParams& params,
                                           std::size_t steps) {
  const std::size_t n = g.node_count();
  if (n > kExactMaxNodes) {
    throw std::invalid_argument("exact enumeration supports at most " +
                                std::to_string(kExactMaxNodes) + " nodes");
  }
  if (steps > kExactMaxSteps) {
    throw std::invalid_argument("exact enumeration supports at most " +
                                std::to_string(kExactMaxSteps) + " steps");
  }
  params.validate();

  StateDistribution dist(n);
  dist.probabilities_[dist.encode(initial)] = 1.0;

  struct Outcome {
    std::size_t digit;
    double probability;
  };
  std::vector<std::size_t> weights(n, 1);
  for (std::size_t i = 1; i < n; ++i) weights[i] = weights[i - 1] * kStateCount;

  for (std::size_t t = 0; t < steps; ++t) {
    std::vector<double> next(dist.probabilities_.size(), 0.0);
    for (std::size_t code = 0; code < dist.probabilities_.size(); ++code) {
      const double mass = dist.probabilities_[code];
      if (mass == 0.0) continue;
      const StateVector config = dist.decode(code);

      // Independent per-node transition laws given this configuration.
      std::vector<std::vector<Outcome>> outcomes(n);
      for (std::size_t i = 0; i < n; ++i) {
        std::array<double, kStateCount> law{};
        switch (config[i]) {
          case AgentState::kSusceptible: {
            const NeighborTally tally = tally_neighbors(g, config, i);
            const double f = belief_prob(params, tally);
            const double h = factcheck_prob(params, tally);
            law = {1.0 - f - h, f, h};
            break;
          }
          case AgentState::kBeliever:
            law = {params.p_forget, 1.0 - params.p_verify - params.p_forget, params.p_verify};
            break;
          case AgentState::kFactChecker:
            law = {params.p_forget, 0.0, 1.0 - params.p_forget};
            break;
        }
        for (std::size_t s = 0; s < kStateCount; ++s) {
          if (law[s] > 0.0) outcomes[i].push_back({s, law[s]});
        }
      }

      // Mixed-radix walk over the product of per-node outcomes.
      std::vector<std::size_t> pick(n, 0);
      while (true) {
        double p = mass;
        std::size_t target = 0;
        for (std::size_t i = 0; i < n; ++i) {
          p *= outcomes[i][pick[i]].probability;
          target += outcomes[i][pick[i]].digit * weights[i];
        }
        next[target] += p;
        std::size_t i = 0;
        while (i < n && ++pick[i] == outcomes[i].size()) pick[i++] = 0;
        if (i == n) break;
      }
    }
    dist.probabilities_ = std::move(next);
  }
  return dist;
}

}  // namespace hoaxnet
