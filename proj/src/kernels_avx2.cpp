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

#include <cstring>
#include <stdexcept>

#include "hoaxnet/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define HOAXNET_HAVE_AVX2_KERNEL 1
#endif

namespace hoaxnet::kernels {

#ifdef HOAXNET_HAVE_AVX2_KERNEL

// Four nodes per iteration in double lanes. Outcomes are computed as state
// codes (0 = S, 1 = B, 2 = F) for all three branches and blended on the
// current state.
__attribute__((target("avx2"))) void transition_avx2(const TransitionCoefficients& c,
                                                     const TransitionBatch& b) {
  const std::size_t n = b.states.size();
  const auto* states = reinterpret_cast<const std::uint8_t*>(b.states.data());
  auto* next = reinterpret_cast<std::uint8_t*>(b.next.data());

  const __m256d beta = _mm256_set1_pd(c.beta);
  const __m256d believer_weight = _mm256_set1_pd(c.believer_weight);
  const __m256d factchecker_weight = _mm256_set1_pd(c.factchecker_weight);
  const __m256d p_verify = _mm256_set1_pd(c.p_verify);
  const __m256d p_exit = _mm256_set1_pd(c.p_believer_exit);
  const __m256d p_forget = _mm256_set1_pd(c.p_forget);
  const __m256d code_s = _mm256_setzero_pd();
  const __m256d code_b = _mm256_set1_pd(1.0);
  const __m256d code_f = _mm256_set1_pd(2.0);
  const __m128i low_bytes =
      _mm_setr_epi8(0, 4, 8, 12, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1);

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m128i nb =
        _mm_loadu_si128(reinterpret_cast<const __m128i*>(b.believers.data() + i));
    const __m128i nf =
        _mm_loadu_si128(reinterpret_cast<const __m128i*>(b.factcheckers.data() + i));
    const __m256d unexposed = _mm256_castsi256_pd(_mm256_cvtepi32_epi64(
        _mm_cmpeq_epi32(_mm_add_epi32(nb, nf), _mm_setzero_si128())));

    const __m256d wb = _mm256_mul_pd(_mm256_cvtepi32_pd(nb), believer_weight);
    const __m256d wf = _mm256_mul_pd(_mm256_cvtepi32_pd(nf), factchecker_weight);
    const __m256d total = _mm256_add_pd(wb, wf);
    const __m256d f = _mm256_div_pd(_mm256_mul_pd(beta, wb), total);
    const __m256d g = _mm256_div_pd(_mm256_mul_pd(beta, wf), total);
    const __m256d f_plus_g = _mm256_add_pd(f, g);

    const __m256d u = _mm256_loadu_pd(b.uniforms.data() + i);

    __m256d from_s = _mm256_blendv_pd(code_s, code_f, _mm256_cmp_pd(u, f_plus_g, _CMP_LT_OQ));
    from_s = _mm256_blendv_pd(from_s, code_b, _mm256_cmp_pd(u, f, _CMP_LT_OQ));
    from_s = _mm256_blendv_pd(from_s, code_s, unexposed);

    __m256d from_b = _mm256_blendv_pd(code_b, code_s, _mm256_cmp_pd(u, p_exit, _CMP_LT_OQ));
    from_b = _mm256_blendv_pd(from_b, code_f, _mm256_cmp_pd(u, p_verify, _CMP_LT_OQ));

    const __m256d from_f =
        _mm256_blendv_pd(code_f, code_s, _mm256_cmp_pd(u, p_forget, _CMP_LT_OQ));

    std::int32_t packed;
    std::memcpy(&packed, states + i, sizeof(packed));
    const __m256d current = _mm256_cvtepi32_pd(_mm_cvtepu8_epi32(_mm_cvtsi32_si128(packed)));

    __m256d code = _mm256_blendv_pd(from_s, from_b, _mm256_cmp_pd(current, code_b, _CMP_EQ_OQ));
    code = _mm256_blendv_pd(code, from_f, _mm256_cmp_pd(current, code_f, _CMP_EQ_OQ));

    const std::int32_t out =
        _mm_cvtsi128_si32(_mm_shuffle_epi8(_mm256_cvtpd_epi32(code), low_bytes));
    std::memcpy(next + i, &out, sizeof(out));
  }

  if (i < n) {
    transition_scalar(c, {b.states.subspan(i), b.believers.subspan(i),
                          b.factcheckers.subspan(i), b.uniforms.subspan(i),
                          b.next.subspan(i)});
  }
}

// 32 nodes per compare; set bits of the inverted equality mask are changes.
__attribute__((target("avx2"))) std::size_t changed_nodes_avx2(
    std::span<const AgentState> before, std::span<const AgentState> after,
    std::span<std::uint32_t> out) noexcept {
  const std::size_t n = before.size();
  const auto* lhs = reinterpret_cast<const std::uint8_t*>(before.data());
  const auto* rhs = reinterpret_cast<const std::uint8_t*>(after.data());
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(lhs + i));
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rhs + i));
    auto mask = ~static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(a, b)));
    while (mask != 0) {
      out[count++] = static_cast<std::uint32_t>(i + static_cast<std::size_t>(__builtin_ctz(mask)));
      mask &= mask - 1;
    }
  }
  for (; i < n; ++i) {
    if (lhs[i] != rhs[i]) out[count++] = static_cast<std::uint32_t>(i);
  }
  return count;
}

#else

std::size_t changed_nodes_avx2(std::span<const AgentState> before,
                               std::span<const AgentState> after,
                               std::span<std::uint32_t> out) noexcept {
  return changed_nodes_scalar(before, after, out);
}

void transition_avx2(const TransitionCoefficients&, const TransitionBatch&) {
  throw std::logic_error("AVX2 kernel not built for this target");
}

#endif

}  // namespace hoaxnet::kernels
