#pragma once

// Elements of the lattice S(n,r).
//
// A word is stored as the set of nonzero alphabet symbols it contains, packed
// into a bit mask: Tilde(i) occupies bit i-1 and Bar(j) occupies bit r+j-1.
// The string form i_1..i_r|j_1..j_{n-r} is derived from the mask, so every
// stored value is canonical.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "snr/errors.hpp"

namespace snr {

inline constexpr int kMaxN = 62;

struct LatticeParams {
  int n = 0;
  int r = 0;

  LatticeParams() = default;
  LatticeParams(int n_, int r_);

  int negatives() const noexcept { return n - r; }
  // R(n,r) = C(r+1,2) + C(n-r+1,2)
  int max_rank() const noexcept;
  std::uint64_t full_mask() const noexcept;
  std::uint64_t size() const noexcept { return std::uint64_t{1} << n; }
  // Digits need separators once a side can hold a two-digit index.
  bool wide_symbols() const noexcept { return r >= 10 || n - r >= 10; }

  friend bool operator==(const LatticeParams&, const LatticeParams&) = default;
  friend auto operator<=>(const LatticeParams&, const LatticeParams&) = default;
};

enum class SymbolKind : std::uint8_t { Bar, Zero, Tilde };

class Symbol {
 public:
  static Symbol tilde(int i) { return Symbol(SymbolKind::Tilde, i); }
  static Symbol bar(int j) { return Symbol(SymbolKind::Bar, j); }
  static Symbol zero() { return Symbol(SymbolKind::Zero, 0); }
  // Ordinal position in the total order: Bar(j) -> -j, Zero -> 0, Tilde(i) -> i.
  static Symbol from_ordinal(int ordinal);

  SymbolKind kind() const noexcept { return kind_; }
  int index() const noexcept { return index_; }
  int ordinal() const noexcept;
  bool is_zero() const noexcept { return kind_ == SymbolKind::Zero; }

  // Bit position inside a word mask; throws for Zero or out-of-alphabet symbols.
  int bit(const LatticeParams& params) const;
  bool in_alphabet(const LatticeParams& params) const noexcept;
  std::string to_string() const;

  friend bool operator==(const Symbol&, const Symbol&) = default;
  friend std::strong_ordering operator<=>(const Symbol& a, const Symbol& b) {
    return a.ordinal() <=> b.ordinal();
  }

 private:
  Symbol(SymbolKind kind, int index) : kind_(kind), index_(index) {}
  SymbolKind kind_;
  int index_;
};

// Symbol of the nonzero alphabet stored at a given mask bit.
Symbol symbol_at_bit(const LatticeParams& params, int bit);

// The string form as ordinals, one per position 1..n.
struct Positions {
  std::array<std::int8_t, kMaxN> ordinal{};
  int size = 0;

  int operator[](int k) const { return ordinal[static_cast<std::size_t>(k)]; }
};

class Word {
 public:
  Word() = default;
  Word(LatticeParams params, std::uint64_t members);

  static Word bottom(LatticeParams params);
  static Word top(LatticeParams params);
  // The word "r..1|1..(n-r)": every nonzero symbol present.
  static Word all_symbols(LatticeParams params);
  static Word empty(LatticeParams params) { return Word(params, 0); }

  const LatticeParams& params() const noexcept { return params_; }
  std::uint64_t members() const noexcept { return members_; }
  bool contains(Symbol s) const;
  std::vector<Symbol> symbols() const;

  Positions positions() const;
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  LatticeParams params_{};
  std::uint64_t members_ = 0;
};

struct DeltaEntry {
  int position = 0;  // 1-based
  Symbol lower = Symbol::zero();
  Symbol upper = Symbol::zero();
};

// Positions where two words differ, with the pair of symbols found there.
using DeltaVector = std::vector<DeltaEntry>;

// Canonicalisation and parsing.
Word word_from_subset(LatticeParams params, const std::vector<Symbol>& subset);
std::vector<Symbol> subset_of_word(const Word& w);
Word parse_word(LatticeParams params, std::string_view text);
// Returns a diagnostic if the positions break the ordering rules or the alphabet.
std::optional<std::string> check_positions(const LatticeParams& params, const Positions& pos);
Word word_from_positions(LatticeParams params, const Positions& pos);

// Order.
bool leq(const Word& a, const Word& b);
Word meet(const Word& a, const Word& b);
Word join(const Word& a, const Word& b);
DeltaVector delta(const Word& a, const Word& b);
bool is_cover(const Word& lower, const Word& upper);
int rank(const Word& w);
int nonzero_count(const Word& w);

// Transported boolean structure.
Word bool_union(const Word& a, const Word& b);
Word bool_intersect(const Word& a, const Word& b);
Word complement(const Word& w);

// Cross-lattice maps.
Word transpose(const Word& w);
Word iso_to_conjugate(const Word& w);
std::pair<Word, Word> cartesian_split(const Word& w);
Word cartesian_merge(const Word& positive, const Word& negative);

// Enumeration in the canonical order: by rank, then left to right as the
// Hasse generator lays each level out.
inline constexpr int kMaxEnumerateN = 24;
std::vector<Word> enumerate(LatticeParams params);
std::vector<Word> enumerate_d_slice(LatticeParams params, int d);

}  // namespace snr

template <>
struct std::hash<snr::Word> {
  std::size_t operator()(const snr::Word& w) const noexcept {
    std::uint64_t h = w.members();
    h ^= (static_cast<std::uint64_t>(w.params().n) << 56) ^ (static_cast<std::uint64_t>(w.params().r) << 48);
    h *= 0x9E3779B97F4A7C15ULL;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};
