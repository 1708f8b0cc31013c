#include <random>
#include <vector>

#include "doctest.h"
#include "snr/kernels/subset_sums.hpp"

using namespace snr::kernels;

namespace {

std::vector<std::int64_t> random_values(std::mt19937_64& rng, int n, std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
  std::vector<std::int64_t> v(static_cast<std::size_t>(n));
  for (auto& x : v) x = dist(rng);
  return v;
}

struct Census {
  std::vector<std::int64_t> sums;
  std::vector<std::uint64_t> bits;
  std::uint64_t count;
};

template <typename Sums, typename Bits, typename Count>
Census run(const std::vector<std::int64_t>& values, Sums sums_fn, Bits bits_fn, Count count_fn) {
  Census c;
  c.sums.assign(std::size_t{1} << values.size(), -7);
  sums_fn(values, c.sums);
  c.bits.assign((c.sums.size() + 63) / 64, ~std::uint64_t{0});
  bits_fn(c.sums, c.bits);
  c.count = count_fn(c.sums);
  return c;
}

}  // namespace

TEST_CASE("scalar kernels against a direct loop") {
  std::mt19937_64 rng(7);
  for (int n = 0; n <= 12; ++n) {
    const auto values = random_values(rng, n, 50);
    const Census c = run(values, scalar::subset_sums, scalar::nonnegative_bits, scalar::count_nonnegative);
    std::uint64_t count = 0;
    for (std::uint64_t mask = 0; mask < c.sums.size(); ++mask) {
      std::int64_t s = 0;
      for (int b = 0; b < n; ++b) {
        if ((mask >> b) & 1U) s += values[static_cast<std::size_t>(b)];
      }
      REQUIRE(c.sums[mask] == s);
      REQUIRE(((c.bits[mask / 64] >> (mask % 64)) & 1U) == (s >= 0 ? 1U : 0U));
      count += s >= 0;
    }
    REQUIRE(c.count == count);
    // Padding bits past the end stay clear.
    if (c.sums.size() % 64 != 0) REQUIRE((c.bits.back() >> (c.sums.size() % 64)) == 0);
  }
}

#if defined(SNR_WITH_AVX2)
TEST_CASE("AVX2 kernels match the scalar reference") {
  if (!backend_available(Backend::Avx2)) {
    MESSAGE("CPU lacks AVX2; equivalence not exercised");
    return;
  }
  std::mt19937_64 rng(11);
  for (int n = 0; n <= 16; ++n) {
    for (std::int64_t bound : {std::int64_t{1}, std::int64_t{1000}, std::int64_t{1} << 40}) {
      const auto values = random_values(rng, n, bound);
      const Census a = run(values, scalar::subset_sums, scalar::nonnegative_bits, scalar::count_nonnegative);
      const Census b = run(values, avx2::subset_sums, avx2::nonnegative_bits, avx2::count_nonnegative);
      REQUIRE(a.sums == b.sums);
      REQUIRE(a.bits == b.bits);
      REQUIRE(a.count == b.count);
    }
  }
  // Zero sums sit exactly on the sign boundary.
  const std::vector<std::int64_t> zeros{0, 0, 0, 0, 0, 0, 0};
  const Census z = run(zeros, avx2::subset_sums, avx2::nonnegative_bits, avx2::count_nonnegative);
  CHECK(z.count == 128);
}
#endif

TEST_CASE("backend selection") {
  CHECK(backend_available(Backend::Scalar));
  set_backend(Backend::Scalar);
  CHECK(active_backend() == Backend::Scalar);
  std::vector<std::int64_t> sums(8);
  subset_sums(std::vector<std::int64_t>{3, -5, 1}, sums);
  CHECK(sums == std::vector<std::int64_t>{0, 3, -5, -2, 1, 4, -4, -1});
  CHECK(count_nonnegative(sums) == 4);
  reset_backend();
  if (backend_available(Backend::Avx2)) {
    CHECK(active_backend() == Backend::Avx2);
  } else {
    CHECK_THROWS(set_backend(Backend::Avx2));
  }
}
