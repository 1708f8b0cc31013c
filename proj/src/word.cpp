#include "snr/word.hpp"

#include <bit>
#include <charconv>
#include <sstream>

namespace snr {

namespace {

void require_same(const Word& a, const Word& b, const char* op) {
  if (a.params() != b.params()) {
    throw DomainError(std::string(op) + ": words belong to different lattices");
  }
}

std::uint64_t low_bits(int count) {
  return count <= 0 ? 0 : (count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1);
}

}  // namespace

LatticeParams::LatticeParams(int n_, int r_) : n(n_), r(r_) {
  if (n < 0 || n > kMaxN) {
    throw DomainError("n must lie in [0, " + std::to_string(kMaxN) + "], got " + std::to_string(n));
  }
  if (r < 0 || r > n) {
    throw DomainError("r must lie in [0, n], got r=" + std::to_string(r) + " n=" + std::to_string(n));
  }
}

int LatticeParams::max_rank() const noexcept {
  const int m = n - r;
  return r * (r + 1) / 2 + m * (m + 1) / 2;
}

std::uint64_t LatticeParams::full_mask() const noexcept { return low_bits(n); }

// ---------------------------------------------------------------------------
// Symbol

Symbol Symbol::from_ordinal(int ordinal) {
  if (ordinal > 0) return tilde(ordinal);
  if (ordinal < 0) return bar(-ordinal);
  return zero();
}

int Symbol::ordinal() const noexcept {
  switch (kind_) {
    case SymbolKind::Tilde: return index_;
    case SymbolKind::Bar: return -index_;
    case SymbolKind::Zero: break;
  }
  return 0;
}

bool Symbol::in_alphabet(const LatticeParams& params) const noexcept {
  switch (kind_) {
    case SymbolKind::Tilde: return index_ >= 1 && index_ <= params.r;
    case SymbolKind::Bar: return index_ >= 1 && index_ <= params.negatives();
    case SymbolKind::Zero: return true;
  }
  return false;
}

int Symbol::bit(const LatticeParams& params) const {
  if (kind_ == SymbolKind::Zero) throw DomainError("the zero symbol has no member bit");
  if (!in_alphabet(params)) {
    throw DomainError("symbol " + to_string() + " is outside A(" + std::to_string(params.n) + "," +
                      std::to_string(params.r) + ")");
  }
  return kind_ == SymbolKind::Tilde ? index_ - 1 : params.r + index_ - 1;
}

std::string Symbol::to_string() const {
  switch (kind_) {
    case SymbolKind::Tilde: return "~" + std::to_string(index_);
    case SymbolKind::Bar: return "-" + std::to_string(index_);
    case SymbolKind::Zero: break;
  }
  return "0";
}

Symbol symbol_at_bit(const LatticeParams& params, int bit) {
  if (bit < 0 || bit >= params.n) throw DomainError("bit index outside the alphabet");
  return bit < params.r ? Symbol::tilde(bit + 1) : Symbol::bar(bit - params.r + 1);
}

// ---------------------------------------------------------------------------
// Word

Word::Word(LatticeParams params, std::uint64_t members) : params_(params), members_(members) {
  if ((members & ~params.full_mask()) != 0) {
    throw DomainError("member mask has bits outside the alphabet");
  }
}

Word Word::bottom(LatticeParams params) {
  // 0..0|12..(n-r): every negative symbol, no positive one.
  return Word(params, params.full_mask() & ~low_bits(params.r));
}

Word Word::top(LatticeParams params) { return Word(params, low_bits(params.r)); }

Word Word::all_symbols(LatticeParams params) { return Word(params, params.full_mask()); }

bool Word::contains(Symbol s) const {
  if (s.is_zero()) return false;
  return (members_ >> s.bit(params_)) & 1U;
}

std::vector<Symbol> Word::symbols() const {
  std::vector<Symbol> out;
  for (int b = 0; b < params_.n; ++b) {
    if ((members_ >> b) & 1U) out.push_back(symbol_at_bit(params_, b));
  }
  return out;
}

Positions Word::positions() const {
  Positions pos;
  pos.size = params_.n;
  const int r = params_.r;
  const int m = params_.negatives();
  int k = 0;
  for (int i = r; i >= 1; --i) {
    if ((members_ >> (i - 1)) & 1U) pos.ordinal[k++] = static_cast<std::int8_t>(i);
  }
  while (k < r) pos.ordinal[k++] = 0;

  const int bars = std::popcount(members_ >> r);
  for (int z = 0; z < m - bars; ++z) pos.ordinal[k++] = 0;
  for (int j = 1; j <= m; ++j) {
    if ((members_ >> (r + j - 1)) & 1U) pos.ordinal[k++] = static_cast<std::int8_t>(-j);
  }
  return pos;
}

std::string Word::to_string() const {
  const Positions pos = positions();
  const bool wide = params_.wide_symbols();
  std::string out;
  auto emit = [&](int from, int to) {
    for (int k = from; k < to; ++k) {
      if (wide && k > from) out += ',';
      const int o = pos[k];
      out += std::to_string(o < 0 ? -o : o);
    }
  };
  emit(0, params_.r);
  out += '|';
  emit(params_.r, params_.n);
  return out;
}

// ---------------------------------------------------------------------------
// Canonical forms

Word word_from_subset(LatticeParams params, const std::vector<Symbol>& subset) {
  std::uint64_t mask = 0;
  for (const Symbol& s : subset) {
    if (s.is_zero()) throw DomainError("subsets range over nonzero symbols only");
    mask |= std::uint64_t{1} << s.bit(params);
  }
  return Word(params, mask);
}

std::vector<Symbol> subset_of_word(const Word& w) { return w.symbols(); }

std::optional<std::string> check_positions(const LatticeParams& params, const Positions& pos) {
  if (pos.size != params.n) {
    return "expected " + std::to_string(params.n) + " symbols, got " + std::to_string(pos.size);
  }
  const int r = params.r;
  for (int k = 0; k < params.n; ++k) {
    const int o = pos[k];
    const bool left = k < r;
    if (left && (o < 0 || o > r)) {
      return "position " + std::to_string(k + 1) + ": left of the bar only 0.." + std::to_string(r) + " are allowed";
    }
    if (!left && (o > 0 || -o > params.negatives())) {
      return "position " + std::to_string(k + 1) + ": right of the bar only 0.." +
             std::to_string(params.negatives()) + " are allowed";
    }
  }
  // Symbols must be weakly decreasing along each side, and nonzero symbols
  // may not repeat.
  for (int k = 0; k + 1 < params.n; ++k) {
    if (k + 1 == r) continue;
    const int a = pos[k];
    const int b = pos[k + 1];
    if (a < b) {
      return "ordering rule violated at positions " + std::to_string(k + 1) + "-" + std::to_string(k + 2) +
             ": symbols must weakly decrease";
    }
    if (a == b && a != 0) {
      return "strictness rule violated at positions " + std::to_string(k + 1) + "-" + std::to_string(k + 2) +
             ": nonzero symbol repeated";
    }
  }
  return std::nullopt;
}

Word word_from_positions(LatticeParams params, const Positions& pos) {
  if (auto err = check_positions(params, pos)) throw DomainError(*err);
  std::uint64_t mask = 0;
  for (int k = 0; k < params.n; ++k) {
    const int o = pos[k];
    if (o != 0) mask |= std::uint64_t{1} << Symbol::from_ordinal(o).bit(params);
  }
  return Word(params, mask);
}

namespace {

std::vector<int> parse_side(std::string_view side, bool wide, std::string_view whole) {
  std::vector<int> digits;
  if (side.empty()) return digits;
  auto parse_number = [&](std::string_view token) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
      throw DomainError("malformed word '" + std::string(whole) + "': bad symbol '" + std::string(token) + "'");
    }
    return value;
  };
  if (wide) {
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = side.find(',', start);
      digits.push_back(parse_number(side.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else {
    for (std::size_t i = 0; i < side.size(); ++i) digits.push_back(parse_number(side.substr(i, 1)));
  }
  return digits;
}

}  // namespace

Word parse_word(LatticeParams params, std::string_view text) {
  const std::size_t bar = text.find('|');
  if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos) {
    throw DomainError("malformed word '" + std::string(text) + "': expected exactly one '|'");
  }
  const bool wide = params.wide_symbols();
  const std::vector<int> left = parse_side(text.substr(0, bar), wide, text);
  const std::vector<int> right = parse_side(text.substr(bar + 1), wide, text);
  if (static_cast<int>(left.size()) != params.r || static_cast<int>(right.size()) != params.negatives()) {
    throw DomainError("malformed word '" + std::string(text) + "': expected " + std::to_string(params.r) +
                      " symbols left of the bar and " + std::to_string(params.negatives()) + " right of it");
  }
  Positions pos;
  pos.size = params.n;
  int k = 0;
  for (int d : left) pos.ordinal[k++] = static_cast<std::int8_t>(d);
  for (int d : right) pos.ordinal[k++] = static_cast<std::int8_t>(-d);
  if (auto err = check_positions(params, pos)) {
    throw DomainError("non-canonical word '" + std::string(text) + "': " + *err);
  }
  return word_from_positions(params, pos);
}

// ---------------------------------------------------------------------------
// Order

bool leq(const Word& a, const Word& b) {
  require_same(a, b, "leq");
  const Positions pa = a.positions();
  const Positions pb = b.positions();
  for (int k = 0; k < pa.size; ++k) {
    if (pa[k] > pb[k]) return false;
  }
  return true;
}

namespace {

template <typename Pick>
Word componentwise(const Word& a, const Word& b, Pick pick) {
  const Positions pa = a.positions();
  const Positions pb = b.positions();
  Positions out;
  out.size = pa.size;
  for (int k = 0; k < pa.size; ++k) out.ordinal[k] = static_cast<std::int8_t>(pick(pa[k], pb[k]));
  return word_from_positions(a.params(), out);
}

}  // namespace

Word meet(const Word& a, const Word& b) {
  require_same(a, b, "meet");
  return componentwise(a, b, [](int x, int y) { return x < y ? x : y; });
}

Word join(const Word& a, const Word& b) {
  require_same(a, b, "join");
  return componentwise(a, b, [](int x, int y) { return x > y ? x : y; });
}

DeltaVector delta(const Word& a, const Word& b) {
  require_same(a, b, "delta");
  const Positions pa = a.positions();
  const Positions pb = b.positions();
  DeltaVector out;
  for (int k = 0; k < pa.size; ++k) {
    if (pa[k] != pb[k]) out.push_back({k + 1, Symbol::from_ordinal(pa[k]), Symbol::from_ordinal(pb[k])});
  }
  return out;
}

bool is_cover(const Word& lower, const Word& upper) {
  const DeltaVector d = delta(lower, upper);
  // The alphabet is the integer interval [-(n-r), r] under ordinals, so a
  // symbol cover is a step of exactly one.
  return d.size() == 1 && d.front().upper.ordinal() == d.front().lower.ordinal() + 1;
}

int rank(const Word& w) {
  const Positions pos = w.positions();
  const int r = w.params().r;
  int total = 0;
  for (int k = 0; k < r; ++k) total += pos[k];
  for (int m = 1; m <= w.params().negatives(); ++m) total += m + pos[r + m - 1];
  return total;
}

int nonzero_count(const Word& w) { return std::popcount(w.members()); }

Word bool_union(const Word& a, const Word& b) {
  require_same(a, b, "bool_union");
  return Word(a.params(), a.members() | b.members());
}

Word bool_intersect(const Word& a, const Word& b) {
  require_same(a, b, "bool_intersect");
  return Word(a.params(), a.members() & b.members());
}

Word complement(const Word& w) { return Word(w.params(), ~w.members() & w.params().full_mask()); }

Word transpose(const Word& w) {
  const LatticeParams& p = w.params();
  const int m = p.negatives();
  const LatticeParams target(p.n, m);
  // Tilde(i) <-> Bar(i): the bar block moves to the bottom bits.
  const std::uint64_t bars = (w.members() >> p.r) & low_bits(m);
  const std::uint64_t tildes = w.members() & low_bits(p.r);
  return Word(target, bars | (tildes << m));
}

Word iso_to_conjugate(const Word& w) { return complement(transpose(w)); }

std::pair<Word, Word> cartesian_split(const Word& w) {
  const LatticeParams& p = w.params();
  return {Word(LatticeParams(p.r, p.r), w.members() & low_bits(p.r)),
          Word(LatticeParams(p.negatives(), 0), w.members() >> p.r)};
}

Word cartesian_merge(const Word& positive, const Word& negative) {
  const LatticeParams& pp = positive.params();
  const LatticeParams& np = negative.params();
  if (pp.r != pp.n || np.r != 0) {
    throw DomainError("cartesian_merge expects words of S(r,r) and S(m,0)");
  }
  return Word(LatticeParams(pp.n + np.n, pp.n), positive.members() | (negative.members() << pp.n));
}

}  // namespace snr
