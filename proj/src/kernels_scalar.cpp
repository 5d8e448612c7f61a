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

#include "hoaxnet/kernels.hpp"

namespace hoaxnet::kernels {

TransitionCoefficients TransitionCoefficients::from(const ModelParams& params) noexcept {
  return {
      .beta = params.beta,
      .believer_weight = 1.0 + params.alpha,
      .factchecker_weight = 1.0 - params.alpha,
      .p_verify = params.p_verify,
      .p_believer_exit = params.p_verify + params.p_forget,
      .p_forget = params.p_forget,
  };
}

void transition_scalar(const TransitionCoefficients& c, const TransitionBatch& b) {
  const std::size_t n = b.states.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double u = b.uniforms[i];
    AgentState next = b.states[i];
    switch (b.states[i]) {
      case AgentState::kSusceptible: {
        const std::uint32_t nb = b.believers[i];
        const std::uint32_t nf = b.factcheckers[i];
        if (nb + nf == 0) break;
        const double wb = static_cast<double>(nb) * c.believer_weight;
        const double wf = static_cast<double>(nf) * c.factchecker_weight;
        const double total = wb + wf;
        const double f = c.beta * wb / total;
        const double g = c.beta * wf / total;
        if (u < f) {
          next = AgentState::kBeliever;
        } else if (u < f + g) {
          next = AgentState::kFactChecker;
        }
        break;
      }
      case AgentState::kBeliever:
        if (u < c.p_verify) {
          next = AgentState::kFactChecker;
        } else if (u < c.p_believer_exit) {
          next = AgentState::kSusceptible;
        }
        break;
      case AgentState::kFactChecker:
        if (u < c.p_forget) next = AgentState::kSusceptible;
        break;
    }
    b.next[i] = next;
  }
}

std::size_t changed_nodes_scalar(std::span<const AgentState> before,
                                 std::span<const AgentState> after,
                                 std::span<std::uint32_t> out) noexcept {
  std::size_t count = 0;
  for (std::size_t i = 0; i < before.size(); ++i) {
    if (before[i] != after[i]) out[count++] = static_cast<std::uint32_t>(i);
  }
  return count;
}

}  // namespace hoaxnet::kernels
