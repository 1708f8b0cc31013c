#include <bit>

#include "snr/kernels/subset_sums.hpp"

namespace snr::kernels::scalar {

void subset_sums(std::span<const std::int64_t> values, std::span<std::int64_t> sums) {
  sums[0] = 0;
  std::size_t filled = 1;
  for (std::int64_t v : values) {
    for (std::size_t m = 0; m < filled; ++m) sums[filled + m] = sums[m] + v;
    filled *= 2;
  }
}

void nonnegative_bits(std::span<const std::int64_t> sums, std::span<std::uint64_t> out) {
  for (std::uint64_t& word : out) word = 0;
  for (std::size_t i = 0; i < sums.size(); ++i) {
    if (sums[i] >= 0) out[i / 64] |= std::uint64_t{1} << (i % 64);
  }
}

std::uint64_t count_nonnegative(std::span<const std::int64_t> sums) {
  std::uint64_t count = 0;
  for (std::int64_t s : sums) count += s >= 0 ? 1 : 0;
  return count;
}

}  // namespace snr::kernels::scalar
