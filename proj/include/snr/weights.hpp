#pragma once

// (n,r)-functions: exact rational valuations of the alphabet A(n,r) that are
// monotone along its total order, vanish at zero and are negative on bars.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "snr/boolean_map.hpp"
#include "snr/rational.hpp"
#include "snr/word.hpp"

namespace snr {

// Raw values before checking. tilde[i-1] = f(Tilde(i)), bar[j-1] = f(Bar(j)).
struct CandidateValues {
  LatticeParams params;
  std::vector<Rational> tilde;
  std::vector<Rational> bar;
  Rational zero = 0;
};

class NrFunction {
 public:
  const LatticeParams& params() const noexcept { return params_; }
  const Rational& value(Symbol s) const;
  const Rational& tilde(int i) const { return value(Symbol::tilde(i)); }
  const Rational& bar(int j) const { return value(Symbol::bar(j)); }
  // Values indexed by member bit.
  const std::vector<Rational>& by_bit() const noexcept { return by_bit_; }
  Rational total() const;
  // True iff the total over all nonzero symbols is >= 0.
  bool is_weight() const noexcept { return weight_; }

  friend bool operator==(const NrFunction& a, const NrFunction& b) {
    return a.params_ == b.params_ && a.by_bit_ == b.by_bit_;
  }

 private:
  friend NrFunction validate(const CandidateValues& candidate);
  NrFunction(LatticeParams params, std::vector<Rational> by_bit);

  LatticeParams params_;
  std::vector<Rational> by_bit_;
  bool weight_ = false;
};

// Throws ValidationError naming the first broken inequality.
NrFunction validate(const CandidateValues& candidate);

Rational sigma(const NrFunction& f, const Word& w);
BooleanMap induced_map(const NrFunction& f);
// Words with nonnegative sum, the all-zero word included.
std::uint64_t alpha_count(const NrFunction& f);
// Words with exactly d nonzero symbols and nonnegative sum.
std::uint64_t phi_count(const NrFunction& f, int d);

inline constexpr int kMaxCensusN = 24;

namespace detail {
// Sign pattern by exact rational summation; reference for the kernel path.
std::vector<bool> sign_pattern_exact(const NrFunction& f);
// Kernel path; nullopt when the scaled integers would overflow.
std::optional<std::vector<bool>> sign_pattern_scaled(const NrFunction& f);
}  // namespace detail

// Seeded random (n,r)-functions for property tests. Numerators and
// denominators are drawn from [1, range]; values are then sorted into the
// required chain. With want_weight set the top positive value is raised until
// the total is nonnegative (requires r >= 1).
NrFunction random_function(LatticeParams params, std::mt19937_64& rng, bool want_weight, int range = 9);

}  // namespace snr
