#pragma once

// Rank census s(n,r,k): the number of words of S(n,r) with rank k, computed
// three independent ways.

#include <gmpxx.h>

#include <string>
#include <vector>

namespace snr {

using BigInt = mpz_class;

struct RankPolynomial {
  int n = 0;
  int r = 0;
  std::vector<BigInt> coefficients;  // indexed by rank 0..R(n,r)

  BigInt total() const;
  bool is_palindromic() const;
  friend bool operator==(const RankPolynomial&, const RankPolynomial&) = default;
};

// Two-copy recursion, memoised per (n,r).
BigInt s_recursive(int n, int r, int k);
// Exhaustive census over the enumerated lattice.
inline constexpr int kMaxBruteForceN = 20;
BigInt s_bruteforce(int n, int r, int k);
// Convolution of the chain-product factors S(r,r) and S(n-r,n-r); each factor
// is computed from the subset-sum generating function prod_{j<=m} (1 + t^j).
BigInt s_convolution(int n, int r, int k);

RankPolynomial rank_polynomial(int n, int r);
bool check_symmetry(int n, int r);
RankPolynomial multiply(const RankPolynomial& a, const RankPolynomial& b);

struct CountRow {
  int n = 0;
  int r = 0;
  int k = 0;
  BigInt recursive;
  BigInt convolution;
  BigInt bruteforce;
  bool agree() const { return recursive == convolution && convolution == bruteforce; }
};

std::vector<CountRow> count_table(int n_max);
std::string count_table_csv(const std::vector<CountRow>& rows);

}  // namespace snr
