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
#include <string>
#include <vector>

#include "hoaxnet/graph.hpp"
#include "hoaxnet/rng.hpp"

namespace hoaxnet {

enum class AgentState : std::uint8_t {
  kSusceptible = 0,
  kBeliever = 1,
  kFactChecker = 2,
};

inline constexpr int kStateCount = 3;

/// "S", "B" or "F".
char to_char(AgentState s) noexcept;
/// Inverse of to_char; throws std::invalid_argument on any other character.
AgentState state_from_char(char c);

/// SBFC rates: spreading rate beta, gullibility alpha, and the believer's
/// verify/forget probabilities (p_forget also applies to fact-checkers).
struct ModelParams {
  double beta = 0.5;
  double alpha = 0.3;
  double p_verify = 0.05;
  double p_forget = 0.1;

  /// One message per violated constraint, each prefixed by the field name.
  std::vector<std::string> violations() const;
  /// Throws std::invalid_argument listing every violation.
  void validate() const;

  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

struct NeighborTally {
  std::uint32_t believers = 0;
  std::uint32_t factcheckers = 0;

  friend bool operator==(const NeighborTally&, const NeighborTally&) = default;
};

using StateVector = std::vector<AgentState>;

NeighborTally tally_neighbors(const Graph& g, std::span<const AgentState> states,
                              std::size_t i);

/// f = beta * nB(1+alpha) / (nB(1+alpha) + nF(1-alpha)); zero without
/// believer neighbors.
double belief_prob(const ModelParams& params, NeighborTally tally) noexcept;

/// g = beta * nF(1-alpha) / (nB(1+alpha) + nF(1-alpha)); zero without
/// fact-checker neighbors.
double factcheck_prob(const ModelParams& params, NeighborTally tally) noexcept;

/// One synchronous update. Draws exactly one uniform per node, in node order,
/// then applies the transition kernel to tallies taken from `states`.
StateVector step(const Graph& g, std::span<const AgentState> states,
                 const ModelParams& params, Rng& rng);

/// Same update with caller-supplied draws, uniforms[i] belonging to node i.
StateVector step(const Graph& g, std::span<const AgentState> states,
                 const ModelParams& params, std::span<const double> uniforms);

}  // namespace hoaxnet
