#if defined(__aarch64__)

#include <arm_neon.h>

#include "snlab/kernels.hpp"

namespace snlab::kernels::detail {
namespace {

inline int64x2_t popcount_s64(uint64x2_t v) {
  return vreinterpretq_s64_u64(vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(vcntq_u8(vreinterpretq_u8_u64(v))))));
}

}  // namespace

// Same exact-division scheme as the AVX2 variant; NEON has no 64-bit lane
// multiply, so products come from widening 32x32 multiplies.
void eliminate_row_neon(std::span<std::int64_t> row, std::span<const std::int64_t> pivot_row, EliminationStep step) {
  const ExactDivisor d = decompose_divisor(step.divisor);
  const int32x2_t pivot = vdup_n_s32(static_cast<std::int32_t>(step.pivot));
  const int32x2_t factor = vdup_n_s32(static_cast<std::int32_t>(step.factor));
  std::size_t j = 0;
  for (; j + 2 <= row.size(); j += 2) {
    int32x2_t r = vmovn_s64(vld1q_s64(row.data() + j));
    int32x2_t p = vmovn_s64(vld1q_s64(pivot_row.data() + j));
    int64x2_t x = vsubq_s64(vmull_s32(pivot, r), vmull_s32(factor, p));
    std::int64_t lanes[2];
    vst1q_s64(lanes, x);
    for (std::int64_t& lane : lanes) {
      std::uint64_t q = static_cast<std::uint64_t>(lane) * d.odd_inverse;
      std::int64_t s = static_cast<std::int64_t>(q) >> d.shift;
      lane = d.negative ? -s : s;
    }
    vst1q_s64(row.data() + j, vld1q_s64(lanes));
  }
  if (j < row.size()) eliminate_row_scalar(row.subspan(j), pivot_row.subspan(j), step);
}

std::int64_t signed_parity_sum_neon(std::span<const std::uint64_t> lo, std::span<const std::uint64_t> hi,
                                    std::span<const std::int64_t> weight, std::uint64_t neg_lo, std::uint64_t neg_hi) {
  const uint64x2_t nlo = vdupq_n_u64(neg_lo);
  const uint64x2_t nhi = vdupq_n_u64(neg_hi);
  int64x2_t acc = vdupq_n_s64(0);
  std::size_t k = 0;
  for (; k + 2 <= weight.size(); k += 2) {
    int64x2_t count = vaddq_s64(popcount_s64(vandq_u64(vld1q_u64(lo.data() + k), nlo)),
                                popcount_s64(vandq_u64(vld1q_u64(hi.data() + k), nhi)));
    int64x2_t mask = vnegq_s64(vandq_s64(count, vdupq_n_s64(1)));
    int64x2_t w = vld1q_s64(weight.data() + k);
    acc = vaddq_s64(acc, vsubq_s64(veorq_s64(w, mask), mask));
  }
  std::int64_t total = vgetq_lane_s64(acc, 0) + vgetq_lane_s64(acc, 1);
  return total + signed_parity_sum_scalar(lo.subspan(k), hi.subspan(k), weight.subspan(k), neg_lo, neg_hi);
}

}  // namespace snlab::kernels::detail

#endif
