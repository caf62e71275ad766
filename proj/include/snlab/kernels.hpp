#pragma once

// Data-parallel integer kernels with a scalar reference implementation and
// SIMD variants chosen at runtime from the host CPU. Every variant must agree
// with the scalar one bit for bit; see tests/test_kernels.cpp.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace snlab::kernels {

enum class Isa { Scalar, Avx2, Neon };

std::string_view name(Isa isa);

// Variants compiled in and supported by the running CPU. Scalar is always first.
std::vector<Isa> available();

// The variant used by default: the widest available, unless the environment
// variable SNLAB_KERNELS names another ("scalar", "avx2", "neon").
Isa active();

// Fraction-free elimination step over one row segment:
//   row[j] = (pivot * row[j] - factor * pivot_row[j]) / divisor
// The division must be exact (guaranteed by Sylvester's identity in Bareiss
// elimination). Results must fit in int64_t.
//
// SIMD variants additionally require every input magnitude to be
// below 2^31; callers establish this from a determinant bound. The scalar
// variant accepts any int64 inputs and throws CapacityError on overflow.
struct EliminationStep {
  std::int64_t pivot;
  std::int64_t factor;
  std::int64_t divisor;
};

void eliminate_row(Isa isa, std::span<std::int64_t> row, std::span<const std::int64_t> pivot_row,
                   EliminationStep step);

// Largest magnitude accepted by the SIMD elimination variants.
inline constexpr std::int64_t kNarrowLimit = (std::int64_t{1} << 31) - 1;

// Signed parity sum over packed 128-bit edge masks:
//   sum_k  (-1)^{popcount(lo[k] & neg_lo) + popcount(hi[k] & neg_hi)} * weight[k]
// All three spans have equal length.
std::int64_t signed_parity_sum(Isa isa, std::span<const std::uint64_t> lo, std::span<const std::uint64_t> hi,
                               std::span<const std::int64_t> weight, std::uint64_t neg_lo, std::uint64_t neg_hi);

namespace detail {
// Per-ISA entry points; only call a variant listed by available().
void eliminate_row_scalar(std::span<std::int64_t>, std::span<const std::int64_t>, EliminationStep);
std::int64_t signed_parity_sum_scalar(std::span<const std::uint64_t>, std::span<const std::uint64_t>,
                                      std::span<const std::int64_t>, std::uint64_t, std::uint64_t);
#if defined(__x86_64__) || defined(__i386__)
void eliminate_row_avx2(std::span<std::int64_t>, std::span<const std::int64_t>, EliminationStep);
std::int64_t signed_parity_sum_avx2(std::span<const std::uint64_t>, std::span<const std::uint64_t>,
                                    std::span<const std::int64_t>, std::uint64_t, std::uint64_t);
#endif
#if defined(__aarch64__)
void eliminate_row_neon(std::span<std::int64_t>, std::span<const std::int64_t>, EliminationStep);
std::int64_t signed_parity_sum_neon(std::span<const std::uint64_t>, std::span<const std::uint64_t>,
                                    std::span<const std::int64_t>, std::uint64_t, std::uint64_t);
#endif

// Inverse of an odd number modulo 2^64.
constexpr std::uint64_t inverse_mod_2_64(std::uint64_t odd) {
  std::uint64_t x = odd;  // correct to 3 bits
  for (int i = 0; i < 5; ++i) x *= 2 - odd * x;
  return x;
}

// divisor = sign * 2^shift * odd, with odd > 0.
struct ExactDivisor {
  std::uint64_t odd_inverse;
  int shift;
  bool negative;
};

constexpr ExactDivisor decompose_divisor(std::int64_t divisor) {
  bool negative = divisor < 0;
  std::uint64_t mag = negative ? 0 - static_cast<std::uint64_t>(divisor) : static_cast<std::uint64_t>(divisor);
  int shift = 0;
  while ((mag & 1) == 0) {
    mag >>= 1;
    ++shift;
  }
  return {inverse_mod_2_64(mag), shift, negative};
}
}  // namespace detail

}  // namespace snlab::kernels
