#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "snr/word.hpp"

namespace snr {

enum class Label : std::uint8_t { N, P };

// A two-valued labelling of S(n,r), stored per member mask (true = P).
class BooleanMap {
 public:
  BooleanMap() = default;
  BooleanMap(LatticeParams params, std::vector<bool> labels);

  static BooleanMap from_p_set(LatticeParams params, const std::vector<Word>& p_set);
  // Throws DomainError when some word is left unlabelled.
  static BooleanMap from_labeling(LatticeParams params, const std::vector<std::optional<Label>>& labeling);

  const LatticeParams& params() const noexcept { return params_; }
  const std::vector<bool>& labels() const noexcept { return labels_; }
  Label at(const Word& w) const;
  bool is_p(const Word& w) const { return at(w) == Label::P; }
  bool is_p(std::uint64_t mask) const { return labels_[static_cast<std::size_t>(mask)]; }

  // P-labelled words in canonical enumeration order.
  std::vector<Word> p_set() const;
  std::uint64_t p_count() const;
  // P-labelled words with exactly d nonzero symbols.
  std::uint64_t p_count(int d) const;

  friend bool operator==(const BooleanMap&, const BooleanMap&) = default;

 private:
  LatticeParams params_{};
  std::vector<bool> labels_;
};

}  // namespace snr
