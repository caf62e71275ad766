#include <cstdlib>
#include <string>

#include "snlab/errors.hpp"
#include "snlab/kernels.hpp"

namespace snlab::kernels {

std::string_view name(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

std::vector<Isa> available() {
  std::vector<Isa> out{Isa::Scalar};
#if defined(__x86_64__) || defined(__i386__)
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt")) out.push_back(Isa::Avx2);
#endif
#if defined(__aarch64__)
  out.push_back(Isa::Neon);
#endif
  return out;
}

namespace {

Isa select() {
  const auto isas = available();
  if (const char* forced = std::getenv("SNLAB_KERNELS")) {
    for (Isa isa : isas) {
      if (name(isa) == forced) return isa;
    }
    throw InputError(std::string("SNLAB_KERNELS=") + forced + " is not available on this CPU");
  }
  return isas.back();
}

}  // namespace

Isa active() {
  static const Isa chosen = select();
  return chosen;
}

void eliminate_row(Isa isa, std::span<std::int64_t> row, std::span<const std::int64_t> pivot_row,
                   EliminationStep step) {
  switch (isa) {
#if defined(__x86_64__) || defined(__i386__)
    case Isa::Avx2: return detail::eliminate_row_avx2(row, pivot_row, step);
#endif
#if defined(__aarch64__)
    case Isa::Neon: return detail::eliminate_row_neon(row, pivot_row, step);
#endif
    default: return detail::eliminate_row_scalar(row, pivot_row, step);
  }
}

std::int64_t signed_parity_sum(Isa isa, std::span<const std::uint64_t> lo, std::span<const std::uint64_t> hi,
                               std::span<const std::int64_t> weight, std::uint64_t neg_lo, std::uint64_t neg_hi) {
  switch (isa) {
#if defined(__x86_64__) || defined(__i386__)
    case Isa::Avx2: return detail::signed_parity_sum_avx2(lo, hi, weight, neg_lo, neg_hi);
#endif
#if defined(__aarch64__)
    case Isa::Neon: return detail::signed_parity_sum_neon(lo, hi, weight, neg_lo, neg_hi);
#endif
    default: return detail::signed_parity_sum_scalar(lo, hi, weight, neg_lo, neg_hi);
  }
}

}  // namespace snlab::kernels
