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
#include <limits>
#include <span>

#include "hoaxnet/isa.hpp"

namespace hoaxnet {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Child seed for stream `index` under `parent`:
///   mix64(mix64(parent) ^ mix64(index + 0x632be59bd9b4e019)).
/// Pure integer arithmetic, so seeds agree across platforms and worker counts.
constexpr std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t index) noexcept {
  return mix64(mix64(parent) ^ mix64(index + 0x632be59bd9b4e019ULL));
}

/// Four interleaved xoshiro256+ generators. The output sequence is
/// lane 0, lane 1, lane 2, lane 3, lane 0, ... and is the same whether it is
/// consumed one value at a time or through fill_uniform() with any ISA.
/// Lane l starts from the SplitMix64 sequence seeded with derive_seed(seed, l).
class Rng {
 public:
  using result_type = std::uint64_t;
  static constexpr std::size_t kLanes = 4;

  explicit Rng(std::uint64_t seed);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    if (buffered_ == kLanes) refill();
    return buffer_[buffered_++];
  }

  /// Next out.size() values of the sequence as uniforms in [0, 1).
  void fill_uniform(std::span<double> out);
  void fill_uniform(Isa isa, std::span<double> out);

 private:
  void refill();

  // state_[4 * k + lane] holds word k of that lane.
  alignas(32) std::array<std::uint64_t, 4 * kLanes> state_{};
  std::array<std::uint64_t, kLanes> buffer_{};
  std::size_t buffered_ = kLanes;
};

/// Uniform double in [0, 1) with 52 random mantissa bits:
/// bits (x >> 12) | 0x3ff0000000000000 reinterpreted as a double in [1, 2),
/// minus one. Exact, and cheap to vectorize.
inline double to_unit_interval(std::uint64_t x) noexcept {
  const std::uint64_t bits = (x >> 12) | 0x3ff0000000000000ULL;
  double d;
  static_assert(sizeof d == sizeof bits);
  __builtin_memcpy(&d, &bits, sizeof d);
  return d - 1.0;
}

inline double uniform01(Rng& rng) { return to_unit_interval(rng()); }

/// Uniform integer in [0, bound) by multiply-shift. bound must be > 0.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(rng()) * bound) >> 64);
}

namespace kernels {

/// Advances all four lanes `groups` times, writing 4 * groups uniforms in
/// sequence order.
void xoshiro_uniform_scalar(std::span<std::uint64_t, 16> state, double* out,
                            std::size_t groups) noexcept;
void xoshiro_uniform_avx2(std::span<std::uint64_t, 16> state, double* out,
                          std::size_t groups) noexcept;

}  // namespace kernels
}  // namespace hoaxnet
