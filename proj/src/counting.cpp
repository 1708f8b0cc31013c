#include "snr/counting.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "snr/word.hpp"

namespace snr {

BigInt RankPolynomial::total() const {
  BigInt sum = 0;
  for (const BigInt& c : coefficients) sum += c;
  return sum;
}

bool RankPolynomial::is_palindromic() const {
  for (std::size_t i = 0, j = coefficients.size(); i < j; ++i) {
    --j;
    if (i >= j) break;
    if (coefficients[i] != coefficients[j]) return false;
  }
  return true;
}

namespace {

void check_range(int n, int r, int k) {
  const LatticeParams params(n, r);
  if (k < 0 || k > params.max_rank()) {
    throw DomainError("rank k=" + std::to_string(k) + " outside [0, " + std::to_string(params.max_rank()) + "]");
  }
}

const BigInt& coefficient_or_zero(const std::vector<BigInt>& row, int k) {
  static const BigInt zero = 0;
  return (k < 0 || k >= static_cast<int>(row.size())) ? zero : row[static_cast<std::size_t>(k)];
}

class RecursionMemo {
 public:
  std::vector<BigInt> row(int n, int r) {
    std::lock_guard lock(mutex_);
    return row_locked(n, r);
  }

 private:
  const std::vector<BigInt>& row_locked(int n, int r) {
    if (r == n) r = 0;  // s(n,n,k) = s(n,0,k)
    const auto key = std::make_pair(n, r);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    std::vector<BigInt> out;
    if (n == 0) {
      out = {BigInt(1)};
    } else {
      const std::vector<BigInt> prev = row_locked(n - 1, r);
      const int shift = n - r;
      const int prev_max = LatticeParams(n - 1, r).max_rank();
      const int max = LatticeParams(n, r).max_rank();
      out.resize(static_cast<std::size_t>(max + 1));
      for (int k = 0; k <= max; ++k) {
        BigInt v;
        if (k < shift) {
          v = coefficient_or_zero(prev, k);
        } else if (k <= prev_max) {
          v = coefficient_or_zero(prev, k) + coefficient_or_zero(prev, k - shift);
        } else {
          v = coefficient_or_zero(prev, k - shift);
        }
        out[static_cast<std::size_t>(k)] = v;
      }
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

  std::mutex mutex_;
  std::map<std::pair<int, int>, std::vector<BigInt>> memo_;
};

RecursionMemo& recursion_memo() {
  static RecursionMemo memo;
  return memo;
}

// Coefficients of prod_{j=1}^{m} (1 + t^j): subsets of {1..m} by element sum.
std::vector<BigInt> distinct_part_counts(int m) {
  std::vector<BigInt> poly{BigInt(1)};
  for (int j = 1; j <= m; ++j) {
    std::vector<BigInt> next(poly.size() + static_cast<std::size_t>(j));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i] += poly[i];
      next[i + static_cast<std::size_t>(j)] += poly[i];
    }
    poly = std::move(next);
  }
  return poly;
}

}  // namespace

BigInt s_recursive(int n, int r, int k) {
  check_range(n, r, k);
  return recursion_memo().row(n, r)[static_cast<std::size_t>(k)];
}

BigInt s_bruteforce(int n, int r, int k) {
  check_range(n, r, k);
  if (n > kMaxBruteForceN) {
    throw ResourceError("brute-force census limited to n <= " + std::to_string(kMaxBruteForceN), 0);
  }
  const LatticeParams params(n, r);
  BigInt count = 0;
  for (std::uint64_t mask = 0; mask < params.size(); ++mask) {
    if (rank(Word(params, mask)) == k) ++count;
  }
  return count;
}

BigInt s_convolution(int n, int r, int k) {
  check_range(n, r, k);
  const std::vector<BigInt> positive = distinct_part_counts(r);
  const std::vector<BigInt> negative = distinct_part_counts(n - r);
  BigInt sum = 0;
  for (int i = 0; i <= k; ++i) sum += coefficient_or_zero(positive, i) * coefficient_or_zero(negative, k - i);
  return sum;
}

RankPolynomial rank_polynomial(int n, int r) {
  const LatticeParams params(n, r);
  RankPolynomial poly{n, r, recursion_memo().row(n, r)};
  poly.coefficients.resize(static_cast<std::size_t>(params.max_rank() + 1));
  return poly;
}

bool check_symmetry(int n, int r) { return rank_polynomial(n, r).is_palindromic(); }

RankPolynomial multiply(const RankPolynomial& a, const RankPolynomial& b) {
  RankPolynomial out;
  out.n = a.n + b.n;
  out.r = a.r + b.r;
  if (a.coefficients.empty() || b.coefficients.empty()) return out;
  out.coefficients.assign(a.coefficients.size() + b.coefficients.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coefficients.size(); ++i) {
    for (std::size_t j = 0; j < b.coefficients.size(); ++j) out.coefficients[i + j] += a.coefficients[i] * b.coefficients[j];
  }
  return out;
}

std::vector<CountRow> count_table(int n_max) {
  if (n_max < 0) throw DomainError("n-max must be nonnegative");
  if (n_max > kMaxBruteForceN) {
    throw ResourceError("count table limited to n <= " + std::to_string(kMaxBruteForceN), 0);
  }
  std::vector<CountRow> rows;
  for (int n = 0; n <= n_max; ++n) {
    for (int r = 0; r <= n; ++r) {
      const LatticeParams params(n, r);
      // One pass over the lattice for the brute-force column.
      std::vector<BigInt> census(static_cast<std::size_t>(params.max_rank() + 1), BigInt(0));
      for (std::uint64_t mask = 0; mask < params.size(); ++mask) ++census[static_cast<std::size_t>(rank(Word(params, mask)))];
      for (int k = 0; k <= params.max_rank(); ++k) {
        rows.push_back({n, r, k, s_recursive(n, r, k), s_convolution(n, r, k), census[static_cast<std::size_t>(k)]});
      }
    }
  }
  return rows;
}

std::string count_table_csv(const std::vector<CountRow>& rows) {
  std::ostringstream out;
  out << "n,r,k,s_recursive,s_convolution,s_bruteforce,agree\n";
  for (const CountRow& row : rows) {
    out << row.n << ',' << row.r << ',' << row.k << ',' << row.recursive << ',' << row.convolution << ','
        << row.bruteforce << ',' << (row.agree() ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace snr
