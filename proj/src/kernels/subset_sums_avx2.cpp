#include <immintrin.h>

#include <bit>

#include "snr/kernels/subset_sums.hpp"

namespace snr::kernels::avx2 {

void subset_sums(std::span<const std::int64_t> values, std::span<std::int64_t> sums) {
  sums[0] = 0;
  std::size_t filled = 1;
  for (std::int64_t v : values) {
    std::int64_t* dst = sums.data() + filled;
    const std::int64_t* src = sums.data();
    std::size_t m = 0;
    if (filled >= 4) {
      const __m256i add = _mm256_set1_epi64x(v);
      for (; m + 4 <= filled; m += 4) {
        const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + m));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + m), _mm256_add_epi64(x, add));
      }
    }
    for (; m < filled; ++m) dst[m] = src[m] + v;
    filled *= 2;
  }
}

namespace {

// Four sign bits, set where the lane is >= 0.
inline unsigned nonnegative_lanes(const std::int64_t* p) {
  const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
  const __m256i neg = _mm256_cmpgt_epi64(_mm256_setzero_si256(), x);
  return ~static_cast<unsigned>(_mm256_movemask_pd(_mm256_castsi256_pd(neg))) & 0xFU;
}

}  // namespace

void nonnegative_bits(std::span<const std::int64_t> sums, std::span<std::uint64_t> out) {
  for (std::uint64_t& word : out) word = 0;
  const std::size_t n = sums.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    out[i / 64] |= static_cast<std::uint64_t>(nonnegative_lanes(sums.data() + i)) << (i % 64);
  }
  for (; i < n; ++i) {
    if (sums[i] >= 0) out[i / 64] |= std::uint64_t{1} << (i % 64);
  }
}

std::uint64_t count_nonnegative(std::span<const std::int64_t> sums) {
  const std::size_t n = sums.size();
  std::uint64_t count = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) count += static_cast<std::uint64_t>(std::popcount(nonnegative_lanes(sums.data() + i)));
  for (; i < n; ++i) count += sums[i] >= 0 ? 1 : 0;
  return count;
}

}  // namespace snr::kernels::avx2
