#include "doctest.h"
#include "oracles.hpp"
#include "snr/counting.hpp"
#include "snr/errors.hpp"

using namespace snr;

TEST_CASE("base table") {
  struct Row {
    int n, r, k, value;
  };
  const Row table[] = {{0, 0, 0, 1}, {1, 0, 0, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 1}, {2, 0, 0, 1},
                       {2, 0, 1, 1}, {2, 0, 2, 1}, {2, 0, 3, 1}, {2, 1, 0, 1}, {2, 1, 1, 2}, {2, 1, 2, 1},
                       {2, 2, 0, 1}, {2, 2, 1, 1}, {2, 2, 2, 1}, {2, 2, 3, 1}};
  for (const Row& row : table) {
    CAPTURE(row.n);
    CAPTURE(row.r);
    CAPTURE(row.k);
    CHECK(s_recursive(row.n, row.r, row.k) == row.value);
    CHECK(s_convolution(row.n, row.r, row.k) == row.value);
    CHECK(s_bruteforce(row.n, row.r, row.k) == row.value);
  }
}

TEST_CASE("point values") {
  CHECK(s_recursive(6, 3, 3) == 6);
  CHECK(s_recursive(4, 2, 3) == 4);
  CHECK(s_convolution(4, 2, 0) == 1);
  CHECK(rank_polynomial(3, 2).total() == 8);
  CHECK(rank_polynomial(0, 0).coefficients == std::vector<BigInt>{1});
  const auto p42 = rank_polynomial(4, 2).coefficients;
  CHECK(p42 == std::vector<BigInt>{1, 2, 3, 4, 3, 2, 1});
  CHECK_THROWS_AS(s_recursive(3, 1, 99), DomainError);
  CHECK_THROWS_AS(s_bruteforce(kMaxBruteForceN + 1, 0, 0), ResourceError);
}

TEST_CASE("three routes agree and match the chain-length census") {
  for (int n = 0; n <= 7; ++n) {
    for (int r = 0; r <= n; ++r) {
      const oracle::Lattice L = oracle::build(LatticeParams(n, r));
      std::vector<int> census(static_cast<std::size_t>(LatticeParams(n, r).max_rank()) + 1, 0);
      for (int k : L.rank) ++census[static_cast<std::size_t>(k)];
      for (std::size_t k = 0; k < census.size(); ++k) {
        const int kk = static_cast<int>(k);
        REQUIRE(s_recursive(n, r, kk) == census[k]);
        REQUIRE(s_convolution(n, r, kk) == census[k]);
        REQUIRE(s_bruteforce(n, r, kk) == census[k]);
      }
    }
  }
}

TEST_CASE("rank polynomial properties up to n = 10") {
  for (int n = 0; n <= 10; ++n) {
    for (int r = 0; r <= n; ++r) {
      const RankPolynomial p = rank_polynomial(n, r);
      REQUIRE(p.total() == BigInt(1) << n);
      REQUIRE(p.coefficients.front() == 1);
      REQUIRE(p.coefficients.back() == 1);
      REQUIRE(p.is_palindromic());
      REQUIRE(check_symmetry(n, r));
      REQUIRE(p.coefficients == multiply(rank_polynomial(r, r), rank_polynomial(n - r, n - r)).coefficients);
    }
    for (int k = 0; k <= LatticeParams(n, 0).max_rank(); ++k) REQUIRE(s_recursive(n, 0, k) == s_recursive(n, n, k));
  }
}

TEST_CASE("count table CSV") {
  const auto rows = count_table(3);
  for (const CountRow& row : rows) CHECK(row.agree());
  const std::string csv = count_table_csv(rows);
  CHECK(csv.rfind("n,r,k,s_recursive,s_convolution,s_bruteforce,agree\n", 0) == 0);
  CHECK(csv.find("2,1,1,2,2,2,true\n") != std::string::npos);
  CHECK_THROWS_AS(count_table(-1), DomainError);
}

TEST_CASE("counts beyond 64 bits stay exact") {
  // 2^40 fits easily, but the recursion must not truncate intermediate sums.
  BigInt total = 0;
  for (int k = 0; k <= LatticeParams(40, 20).max_rank(); ++k) total += s_recursive(40, 20, k);
  CHECK(total == BigInt(1) << 40);
  CHECK(rank_polynomial(62, 31).total() == BigInt(1) << 62);
}
