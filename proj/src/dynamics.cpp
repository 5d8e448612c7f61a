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

#include "hoaxnet/dynamics.hpp"

#include <sstream>
#include <stdexcept>

#include "hoaxnet/kernels.hpp"

namespace hoaxnet {
namespace {

bool is_probability(double p) { return p >= 0.0 && p <= 1.0; }

}  // namespace

char to_char(AgentState s) noexcept {
  switch (s) {
    case AgentState::kSusceptible: return 'S';
    case AgentState::kBeliever: return 'B';
    case AgentState::kFactChecker: return 'F';
  }
  return '?';
}

AgentState state_from_char(char c) {
  switch (c) {
    case 'S': return AgentState::kSusceptible;
    case 'B': return AgentState::kBeliever;
    case 'F': return AgentState::kFactChecker;
    default: throw std::invalid_argument(std::string("unknown agent state '") + c + "'");
  }
}

std::vector<std::string> ModelParams::violations() const {
  std::vector<std::string> out;
  if (!is_probability(beta)) out.push_back("beta: must lie in [0, 1]");
  if (!(alpha > -1.0 && alpha < 1.0)) {
    out.push_back("alpha: must lie in the open interval (-1, 1)");
  }
  if (!is_probability(p_verify)) out.push_back("p_verify: must lie in [0, 1]");
  if (!is_probability(p_forget)) out.push_back("p_forget: must lie in [0, 1]");
  if (is_probability(p_verify) && is_probability(p_forget) && p_verify + p_forget > 1.0) {
    out.push_back("p_verify: p_verify + p_forget must not exceed 1");
  }
  return out;
}

void ModelParams::validate() const {
  const auto errors = violations();
  if (errors.empty()) return;
  std::ostringstream msg;
  msg << "invalid model parameters:";
  for (const auto& e : errors) msg << "\n  " << e;
  throw std::invalid_argument(msg.str());
}

NeighborTally tally_neighbors(const Graph& g, std::span<const AgentState> states,
                              std::size_t i) {
  if (states.size() != g.node_count()) {
    throw std::invalid_argument("state vector does not match graph size");
  }
  if (i >= g.node_count()) {
    throw std::out_of_range("node index " + std::to_string(i) + " out of range");
  }
  NeighborTally t;
  for (NodeId j : g.neighbors(i)) {
    t.believers += states[j] == AgentState::kBeliever;
    t.factcheckers += states[j] == AgentState::kFactChecker;
  }
  return t;
}

double belief_prob(const ModelParams& params, NeighborTally tally) noexcept {
  if (tally.believers == 0) return 0.0;
  const double wb = static_cast<double>(tally.believers) * (1.0 + params.alpha);
  const double wf = static_cast<double>(tally.factcheckers) * (1.0 - params.alpha);
  return params.beta * wb / (wb + wf);
}

double factcheck_prob(const ModelParams& params, NeighborTally tally) noexcept {
  if (tally.factcheckers == 0) return 0.0;
  const double wb = static_cast<double>(tally.believers) * (1.0 + params.alpha);
  const double wf = static_cast<double>(tally.factcheckers) * (1.0 - params.alpha);
  return params.beta * wf / (wb + wf);
}

StateVector step(const Graph& g, std::span<const AgentState> states,
                 const ModelParams& params, Rng& rng) {
  const std::size_t n = g.node_count();
  if (states.size() != n) {
    throw std::invalid_argument("state vector has " + std::to_string(states.size()) +
                                " entries, graph has " + std::to_string(n) + " nodes");
  }
  std::vector<double> uniforms(n);
  rng.fill_uniform(uniforms);
  return step(g, states, params, uniforms);
}

StateVector step(const Graph& g, std::span<const AgentState> states,
                 const ModelParams& params, std::span<const double> uniforms) {
  const std::size_t n = g.node_count();
  if (states.size() != n || uniforms.size() != n) {
    throw std::invalid_argument("step needs one state and one draw per node (" +
                                std::to_string(n) + " nodes)");
  }
  std::vector<std::uint32_t> believers(n), factcheckers(n);
  for (std::size_t i = 0; i < n; ++i) {
    const NeighborTally t = tally_neighbors(g, states, i);
    believers[i] = t.believers;
    factcheckers[i] = t.factcheckers;
  }

  StateVector next(n);
  kernels::transition(kernels::TransitionCoefficients::from(params),
                      {states, believers, factcheckers, uniforms, next});
  return next;
}

}  // namespace hoaxnet
