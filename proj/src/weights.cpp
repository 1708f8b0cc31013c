#include "snr/weights.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "snr/kernels/subset_sums.hpp"

namespace snr {

// ---------------------------------------------------------------------------
// BooleanMap

BooleanMap::BooleanMap(LatticeParams params, std::vector<bool> labels) : params_(params), labels_(std::move(labels)) {
  if (params.n > kMaxEnumerateN) throw ResourceError("boolean maps limited to n <= " + std::to_string(kMaxEnumerateN), 0);
  if (labels_.size() != params.size()) throw DomainError("boolean map needs one label per word");
}

BooleanMap BooleanMap::from_p_set(LatticeParams params, const std::vector<Word>& p_set) {
  std::vector<bool> labels(static_cast<std::size_t>(params.size()), false);
  for (const Word& w : p_set) {
    if (w.params() != params) throw DomainError("p_set word from a different lattice");
    labels[static_cast<std::size_t>(w.members())] = true;
  }
  return BooleanMap(params, std::move(labels));
}

BooleanMap BooleanMap::from_labeling(LatticeParams params, const std::vector<std::optional<Label>>& labeling) {
  if (labeling.size() != params.size()) throw DomainError("labeling must cover every word");
  std::vector<bool> labels(labeling.size());
  for (std::size_t i = 0; i < labeling.size(); ++i) {
    if (!labeling[i]) throw DomainError("partial labeling: word " + Word(params, i).to_string() + " has no label");
    labels[i] = *labeling[i] == Label::P;
  }
  return BooleanMap(params, std::move(labels));
}

Label BooleanMap::at(const Word& w) const {
  if (w.params() != params_) throw DomainError("word from a different lattice");
  return labels_[static_cast<std::size_t>(w.members())] ? Label::P : Label::N;
}

std::vector<Word> BooleanMap::p_set() const {
  std::vector<Word> out;
  for (const Word& w : enumerate(params_)) {
    if (is_p(w.members())) out.push_back(w);
  }
  return out;
}

std::uint64_t BooleanMap::p_count() const {
  return static_cast<std::uint64_t>(std::count(labels_.begin(), labels_.end(), true));
}

std::uint64_t BooleanMap::p_count(int d) const {
  if (d < 1 || d > params_.n) throw DomainError("d must lie in [1, n]");
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < labels_.size(); ++mask) {
    if (labels_[static_cast<std::size_t>(mask)] && std::popcount(mask) == d) ++count;
  }
  return count;
}

// ---------------------------------------------------------------------------
// NrFunction

NrFunction::NrFunction(LatticeParams params, std::vector<Rational> by_bit)
    : params_(params), by_bit_(std::move(by_bit)) {
  weight_ = total() >= 0;
}

const Rational& NrFunction::value(Symbol s) const {
  static const Rational zero = 0;
  if (s.is_zero()) return zero;
  return by_bit_[static_cast<std::size_t>(s.bit(params_))];
}

Rational NrFunction::total() const {
  Rational sum = 0;
  for (const Rational& v : by_bit_) sum += v;
  return sum;
}

NrFunction validate(const CandidateValues& c) {
  const LatticeParams& p = c.params;
  if (static_cast<int>(c.tilde.size()) != p.r || static_cast<int>(c.bar.size()) != p.negatives()) {
    throw ValidationError("expected " + std::to_string(p.r) + " positive and " + std::to_string(p.negatives()) +
                          " negative values");
  }
  if (c.zero != 0) throw ValidationError("f(0) must be 0, got " + format_rational(c.zero));
  for (int i = 1; i < p.r; ++i) {
    if (c.tilde[static_cast<std::size_t>(i)] < c.tilde[static_cast<std::size_t>(i - 1)]) {
      throw ValidationError("f(~" + std::to_string(i + 1) + ") >= f(~" + std::to_string(i) + ") fails");
    }
  }
  if (p.r >= 1 && c.tilde[0] < 0) throw ValidationError("f(~1) >= f(0) = 0 fails");
  if (p.negatives() >= 1 && c.bar[0] >= 0) throw ValidationError("0 = f(0) > f(-1) fails");
  for (int j = 1; j < p.negatives(); ++j) {
    if (c.bar[static_cast<std::size_t>(j)] > c.bar[static_cast<std::size_t>(j - 1)]) {
      throw ValidationError("f(-" + std::to_string(j) + ") >= f(-" + std::to_string(j + 1) + ") fails");
    }
  }
  std::vector<Rational> by_bit;
  by_bit.reserve(static_cast<std::size_t>(p.n));
  for (const Rational& v : c.tilde) by_bit.push_back(v);
  for (const Rational& v : c.bar) by_bit.push_back(v);
  return NrFunction(p, std::move(by_bit));
}

Rational sigma(const NrFunction& f, const Word& w) {
  if (w.params() != f.params()) throw DomainError("sigma: word and function belong to different lattices");
  Rational sum = 0;
  for (int b = 0; b < f.params().n; ++b) {
    if ((w.members() >> b) & 1U) sum += f.by_bit()[static_cast<std::size_t>(b)];
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Sign census

namespace detail {

std::vector<bool> sign_pattern_exact(const NrFunction& f) {
  const LatticeParams& p = f.params();
  if (p.n > kMaxCensusN) throw ResourceError("sign census limited to n <= " + std::to_string(kMaxCensusN), 0);
  std::vector<Rational> sums(static_cast<std::size_t>(p.size()));
  sums[0] = 0;
  std::size_t filled = 1;
  for (const Rational& v : f.by_bit()) {
    for (std::size_t m = 0; m < filled; ++m) sums[filled + m] = sums[m] + v;
    filled *= 2;
  }
  std::vector<bool> out(sums.size());
  for (std::size_t i = 0; i < sums.size(); ++i) out[i] = sums[i] >= 0;
  return out;
}

namespace {

// Common-denominator integers, or nullopt if any subset sum could overflow.
std::optional<std::vector<std::int64_t>> scaled_values(const NrFunction& f) {
  mpz_class lcm = 1;
  for (const Rational& v : f.by_bit()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
  mpz_class magnitude = 0;
  std::vector<mpz_class> scaled;
  for (const Rational& v : f.by_bit()) {
    mpz_class s = v.get_num() * (lcm / v.get_den());
    magnitude += abs(s);
    scaled.push_back(std::move(s));
  }
  if (magnitude > mpz_class(std::to_string(std::numeric_limits<std::int64_t>::max()))) return std::nullopt;
  std::vector<std::int64_t> out;
  for (const mpz_class& s : scaled) out.push_back(static_cast<std::int64_t>(s.get_si()));
  return out;
}

}  // namespace

std::optional<std::vector<bool>> sign_pattern_scaled(const NrFunction& f) {
  const LatticeParams& p = f.params();
  if (p.n > kMaxCensusN) throw ResourceError("sign census limited to n <= " + std::to_string(kMaxCensusN), 0);
  auto values = scaled_values(f);
  if (!values) return std::nullopt;
  std::vector<std::int64_t> sums(static_cast<std::size_t>(p.size()));
  kernels::subset_sums(*values, sums);
  std::vector<std::uint64_t> bits((sums.size() + 63) / 64);
  kernels::nonnegative_bits(sums, bits);
  std::vector<bool> out(sums.size());
  for (std::size_t i = 0; i < sums.size(); ++i) out[i] = (bits[i / 64] >> (i % 64)) & 1U;
  return out;
}

}  // namespace detail

namespace {

std::vector<bool> sign_pattern(const NrFunction& f) {
  if (auto fast = detail::sign_pattern_scaled(f)) return std::move(*fast);
  return detail::sign_pattern_exact(f);
}

}  // namespace

BooleanMap induced_map(const NrFunction& f) { return BooleanMap(f.params(), sign_pattern(f)); }

std::uint64_t alpha_count(const NrFunction& f) {
  const LatticeParams& p = f.params();
  if (p.n <= kMaxCensusN) {
    if (auto values = detail::scaled_values(f)) {
      std::vector<std::int64_t> sums(static_cast<std::size_t>(p.size()));
      kernels::subset_sums(*values, sums);
      return kernels::count_nonnegative(sums);
    }
  }
  const std::vector<bool> pattern = detail::sign_pattern_exact(f);
  return static_cast<std::uint64_t>(std::count(pattern.begin(), pattern.end(), true));
}

std::uint64_t phi_count(const NrFunction& f, int d) {
  if (d < 1 || d > f.params().n) throw DomainError("d must lie in [1, n], got d=" + std::to_string(d));
  const std::vector<bool> pattern = sign_pattern(f);
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < pattern.size(); ++mask) {
    if (pattern[static_cast<std::size_t>(mask)] && std::popcount(mask) == d) ++count;
  }
  return count;
}

// ---------------------------------------------------------------------------
// Random pool

NrFunction random_function(LatticeParams params, std::mt19937_64& rng, bool want_weight, int range) {
  if (range < 1) throw DomainError("range must be positive");
  if (want_weight && params.r == 0 && params.n > 0) throw DomainError("no weight function exists for r = 0");
  std::uniform_int_distribution<int> draw(1, range);
  std::uniform_int_distribution<int> coin(0, 3);
  auto draw_value = [&]() { return Rational(draw(rng), draw(rng)); };

  CandidateValues c{params, {}, {}, 0};
  for (int i = 0; i < params.r; ++i) {
    // Occasional exact zeros exercise the nonstrict end of the chain.
    c.tilde.push_back(coin(rng) == 0 ? Rational(0) : draw_value());
  }
  for (int j = 0; j < params.negatives(); ++j) c.bar.push_back(-draw_value());
  for (auto& v : c.tilde) v.canonicalize();
  for (auto& v : c.bar) v.canonicalize();
  std::sort(c.tilde.begin(), c.tilde.end());
  std::sort(c.bar.begin(), c.bar.end(), [](const Rational& a, const Rational& b) { return a > b; });

  if (want_weight && params.r >= 1) {
    Rational sum = 0;
    for (const auto& v : c.tilde) sum += v;
    for (const auto& v : c.bar) sum += v;
    if (sum < 0) c.tilde.back() -= sum;
  }
  return validate(c);
}

}  // namespace snr
