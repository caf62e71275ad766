// AVX2 variants. Functions carry a target attribute instead of the whole
// file being built with -mavx2, so nothing here leaks into generic code.

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include "snlab/kernels.hpp"

#define SNLAB_AVX2 __attribute__((target("avx2,popcnt")))

namespace snlab::kernels::detail {
namespace {

// Low 64 bits of a 64x64 product per lane.
SNLAB_AVX2 inline __m256i mullo_epi64(__m256i a, __m256i b) {
  __m256i lo = _mm256_mul_epu32(a, b);
  __m256i cross = _mm256_add_epi64(_mm256_mul_epu32(_mm256_srli_epi64(a, 32), b),
                                   _mm256_mul_epu32(a, _mm256_srli_epi64(b, 32)));
  return _mm256_add_epi64(lo, _mm256_slli_epi64(cross, 32));
}

SNLAB_AVX2 inline __m256i srai_epi64(__m256i v, int shift) {
  if (shift == 0) return v;
  __m256i sign = _mm256_cmpgt_epi64(_mm256_setzero_si256(), v);
  __m256i logical = _mm256_srl_epi64(v, _mm_cvtsi32_si128(shift));
  return _mm256_or_si256(logical, _mm256_sll_epi64(sign, _mm_cvtsi32_si128(64 - shift)));
}

SNLAB_AVX2 inline __m256i popcount_epi64(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i nibble = _mm256_set1_epi8(0x0f);
  __m256i lo = _mm256_shuffle_epi8(lut, _mm256_and_si256(v, nibble));
  __m256i hi = _mm256_shuffle_epi8(lut, _mm256_and_si256(_mm256_srli_epi16(v, 4), nibble));
  return _mm256_sad_epu8(_mm256_add_epi8(lo, hi), _mm256_setzero_si256());
}

}  // namespace

// Products of operands below 2^31 are exact in _mm256_mul_epi32; the exact
// quotient is recovered by multiplying with the 2-adic inverse of the odd
// part of the divisor and shifting out its power of two.
SNLAB_AVX2 void eliminate_row_avx2(std::span<std::int64_t> row, std::span<const std::int64_t> pivot_row,
                                   EliminationStep step) {
  const ExactDivisor d = decompose_divisor(step.divisor);
  const __m256i pivot = _mm256_set1_epi64x(step.pivot);
  const __m256i factor = _mm256_set1_epi64x(step.factor);
  const __m256i inverse = _mm256_set1_epi64x(static_cast<std::int64_t>(d.odd_inverse));
  std::size_t j = 0;
  for (; j + 4 <= row.size(); j += 4) {
    __m256i r = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row.data() + j));
    __m256i p = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(pivot_row.data() + j));
    __m256i x = _mm256_sub_epi64(_mm256_mul_epi32(pivot, r), _mm256_mul_epi32(factor, p));
    __m256i q = srai_epi64(mullo_epi64(x, inverse), d.shift);
    if (d.negative) q = _mm256_sub_epi64(_mm256_setzero_si256(), q);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(row.data() + j), q);
  }
  if (j < row.size()) eliminate_row_scalar(row.subspan(j), pivot_row.subspan(j), step);
}

SNLAB_AVX2 std::int64_t signed_parity_sum_avx2(std::span<const std::uint64_t> lo, std::span<const std::uint64_t> hi,
                                               std::span<const std::int64_t> weight, std::uint64_t neg_lo,
                                               std::uint64_t neg_hi) {
  const __m256i nlo = _mm256_set1_epi64x(static_cast<std::int64_t>(neg_lo));
  const __m256i nhi = _mm256_set1_epi64x(static_cast<std::int64_t>(neg_hi));
  const __m256i one = _mm256_set1_epi64x(1);
  __m256i acc = _mm256_setzero_si256();
  std::size_t k = 0;
  for (; k + 4 <= weight.size(); k += 4) {
    __m256i a = _mm256_and_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(lo.data() + k)), nlo);
    __m256i b = _mm256_and_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(hi.data() + k)), nhi);
    __m256i odd = _mm256_and_si256(_mm256_add_epi64(popcount_epi64(a), popcount_epi64(b)), one);
    __m256i mask = _mm256_sub_epi64(_mm256_setzero_si256(), odd);
    __m256i w = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(weight.data() + k));
    acc = _mm256_add_epi64(acc, _mm256_sub_epi64(_mm256_xor_si256(w, mask), mask));
  }
  alignas(32) std::int64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::int64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  return total + signed_parity_sum_scalar(lo.subspan(k), hi.subspan(k), weight.subspan(k), neg_lo, neg_hi);
}

}  // namespace snlab::kernels::detail

#endif
