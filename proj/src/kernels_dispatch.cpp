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

#include <stdexcept>

#include "hoaxnet/kernels.hpp"

namespace hoaxnet::kernels {
namespace {

void check_lengths(const TransitionBatch& b) {
  const std::size_t n = b.states.size();
  if (b.believers.size() != n || b.factcheckers.size() != n ||
      b.uniforms.size() != n || b.next.size() != n) {
    throw std::invalid_argument("transition batch arrays differ in length");
  }
}

}  // namespace

void transition(Isa isa, const TransitionCoefficients& c, const TransitionBatch& b) {
  check_lengths(b);
  switch (isa) {
    case Isa::kScalar:
      transition_scalar(c, b);
      return;
    case Isa::kAvx2:
      if (!avx2_available()) throw std::invalid_argument("AVX2 not available");
      transition_avx2(c, b);
      return;
  }
}

void transition(const TransitionCoefficients& c, const TransitionBatch& b) {
  transition(selected_isa(), c, b);
}

std::size_t changed_nodes(Isa isa, std::span<const AgentState> before,
                          std::span<const AgentState> after, std::span<std::uint32_t> out) {
  if (after.size() != before.size() || out.size() < before.size()) {
    throw std::invalid_argument("changed_nodes: array sizes do not match");
  }
  if (isa == Isa::kAvx2 && avx2_available()) return changed_nodes_avx2(before, after, out);
  return changed_nodes_scalar(before, after, out);
}

std::size_t changed_nodes(std::span<const AgentState> before,
                          std::span<const AgentState> after, std::span<std::uint32_t> out) {
  return changed_nodes(selected_isa(), before, after, out);
}

}  // namespace hoaxnet::kernels
