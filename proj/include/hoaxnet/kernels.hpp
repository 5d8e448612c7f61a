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

#include <cstdint>
#include <span>

#include "hoaxnet/dynamics.hpp"
#include "hoaxnet/isa.hpp"

// Per-node transition pass of the synchronous update. Given each node's
// current state, its believer/fact-checker neighbor counts and one uniform
// draw, write the node's next state.
//
// Every variant must produce output identical to transition_scalar for all
// inputs; the SIMD variants evaluate the same IEEE operations in the same
// order, lane by lane.

namespace hoaxnet::kernels {

/// Model parameters in the form the kernels consume.
struct TransitionCoefficients {
  double beta;
  double believer_weight;     // 1 + alpha
  double factchecker_weight;  // 1 - alpha
  double p_verify;
  double p_believer_exit;     // p_verify + p_forget
  double p_forget;

  static TransitionCoefficients from(const ModelParams& params) noexcept;
};

/// Input/output arrays, all of equal length.
struct TransitionBatch {
  std::span<const AgentState> states;
  std::span<const std::uint32_t> believers;
  std::span<const std::uint32_t> factcheckers;
  std::span<const double> uniforms;
  std::span<AgentState> next;
};

/// Reference implementation.
void transition_scalar(const TransitionCoefficients& c, const TransitionBatch& b);

/// Requires avx2_available().
void transition_avx2(const TransitionCoefficients& c, const TransitionBatch& b);

/// Runs the variant picked by selected_isa(). Throws std::invalid_argument on length mismatch.
void transition(const TransitionCoefficients& c, const TransitionBatch& b);
/// Runs a specific variant (used by equivalence tests and benchmarks).
void transition(Isa isa, const TransitionCoefficients& c, const TransitionBatch& b);

/// Writes the indices i with before[i] != after[i], ascending, into `out`
/// (which must hold before.size() entries) and returns how many were written.
std::size_t changed_nodes_scalar(std::span<const AgentState> before,
                                 std::span<const AgentState> after,
                                 std::span<std::uint32_t> out) noexcept;
std::size_t changed_nodes_avx2(std::span<const AgentState> before,
                               std::span<const AgentState> after,
                               std::span<std::uint32_t> out) noexcept;
std::size_t changed_nodes(std::span<const AgentState> before,
                          std::span<const AgentState> after, std::span<std::uint32_t> out);
std::size_t changed_nodes(Isa isa, std::span<const AgentState> before,
                          std::span<const AgentState> after, std::span<std::uint32_t> out);

}  // namespace hoaxnet::kernels
