#include <bit>

#include "snlab/errors.hpp"
#include "snlab/kernels.hpp"

namespace snlab::kernels::detail {

void eliminate_row_scalar(std::span<std::int64_t> row, std::span<const std::int64_t> pivot_row,
                          EliminationStep step) {
  for (std::size_t j = 0; j < row.size(); ++j) {
    __int128 x = static_cast<__int128>(step.pivot) * row[j] - static_cast<__int128>(step.factor) * pivot_row[j];
    __int128 q = x / step.divisor;
    if (q > INT64_MAX || q < INT64_MIN) throw CapacityError("elimination entry overflows int64");
    row[j] = static_cast<std::int64_t>(q);
  }
}

std::int64_t signed_parity_sum_scalar(std::span<const std::uint64_t> lo, std::span<const std::uint64_t> hi,
                                      std::span<const std::int64_t> weight, std::uint64_t neg_lo,
                                      std::uint64_t neg_hi) {
  std::int64_t total = 0;
  for (std::size_t k = 0; k < weight.size(); ++k) {
    int parity = (std::popcount(lo[k] & neg_lo) + std::popcount(hi[k] & neg_hi)) & 1;
    total += parity ? -weight[k] : weight[k];
  }
  return total;
}

}  // namespace snlab::kernels::detail
