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

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>

namespace hoaxnet::kernels {

__attribute__((target("avx2"))) void xoshiro_uniform_avx2(std::span<std::uint64_t, 16> state,
                                                          double* out,
                                                          std::size_t groups) noexcept {
  auto* words = reinterpret_cast<__m256i*>(state.data());
  __m256i s0 = _mm256_loadu_si256(words + 0);
  __m256i s1 = _mm256_loadu_si256(words + 1);
  __m256i s2 = _mm256_loadu_si256(words + 2);
  __m256i s3 = _mm256_loadu_si256(words + 3);
  const __m256i exponent = _mm256_set1_epi64x(0x3ff0000000000000LL);
  const __m256d one = _mm256_set1_pd(1.0);

  for (std::size_t g = 0; g < groups; ++g) {
    const __m256i result = _mm256_add_epi64(s0, s3);
    const __m256i t = _mm256_slli_epi64(s1, 17);
    s2 = _mm256_xor_si256(s2, s0);
    s3 = _mm256_xor_si256(s3, s1);
    s1 = _mm256_xor_si256(s1, s2);
    s0 = _mm256_xor_si256(s0, s3);
    s2 = _mm256_xor_si256(s2, t);
    s3 = _mm256_or_si256(_mm256_slli_epi64(s3, 45), _mm256_srli_epi64(s3, 19));

    const __m256i bits = _mm256_or_si256(_mm256_srli_epi64(result, 12), exponent);
    _mm256_storeu_pd(out + 4 * g, _mm256_sub_pd(_mm256_castsi256_pd(bits), one));
  }

  _mm256_storeu_si256(words + 0, s0);
  _mm256_storeu_si256(words + 1, s1);
  _mm256_storeu_si256(words + 2, s2);
  _mm256_storeu_si256(words + 3, s3);
}

}  // namespace hoaxnet::kernels

#else

namespace hoaxnet::kernels {

void xoshiro_uniform_avx2(std::span<std::uint64_t, 16> state, double* out,
                          std::size_t groups) noexcept {
  xoshiro_uniform_scalar(state, out, groups);
}

}  // namespace hoaxnet::kernels

#endif
