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

#include "hoaxnet/rng.hpp"

namespace hoaxnet {
namespace {

constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
  return (x << k) | (x >> (64 - k));
}

// One xoshiro256+ step on every lane; raw outputs in lane order.
inline void step_lanes(std::span<std::uint64_t, 16> s, std::uint64_t* out) noexcept {
  for (std::size_t l = 0; l < Rng::kLanes; ++l) {
    std::uint64_t& s0 = s[l];
    std::uint64_t& s1 = s[4 + l];
    std::uint64_t& s2 = s[8 + l];
    std::uint64_t& s3 = s[12 + l];
    out[l] = s0 + s3;
    const std::uint64_t t = s1 << 17;
    s2 ^= s0;
    s3 ^= s1;
    s1 ^= s2;
    s0 ^= s3;
    s2 ^= t;
    s3 = rotl(s3, 45);
  }
}

}  // namespace

namespace kernels {

void xoshiro_uniform_scalar(std::span<std::uint64_t, 16> state, double* out,
                            std::size_t groups) noexcept {
  std::uint64_t raw[Rng::kLanes];
  for (std::size_t g = 0; g < groups; ++g) {
    step_lanes(state, raw);
    for (std::size_t l = 0; l < Rng::kLanes; ++l) out[Rng::kLanes * g + l] = to_unit_interval(raw[l]);
  }
}

}  // namespace kernels

Rng::Rng(std::uint64_t seed) {
  for (std::size_t lane = 0; lane < kLanes; ++lane) {
    const std::uint64_t base = derive_seed(seed, lane);
    for (std::size_t k = 0; k < 4; ++k) state_[4 * k + lane] = mix64(base + k);
  }
}

void Rng::refill() {
  step_lanes(state_, buffer_.data());
  buffered_ = 0;
}

void Rng::fill_uniform(std::span<double> out) { fill_uniform(selected_isa(), out); }

void Rng::fill_uniform(Isa isa, std::span<double> out) {
  std::size_t i = 0;
  while (i < out.size() && buffered_ < kLanes) out[i++] = to_unit_interval(buffer_[buffered_++]);

  const std::size_t groups = (out.size() - i) / kLanes;
  if (groups > 0) {
    if (isa == Isa::kAvx2 && avx2_available()) {
      kernels::xoshiro_uniform_avx2(state_, out.data() + i, groups);
    } else {
      kernels::xoshiro_uniform_scalar(state_, out.data() + i, groups);
    }
    i += groups * kLanes;
  }
  while (i < out.size()) out[i++] = uniform01(*this);
}

}  // namespace hoaxnet
