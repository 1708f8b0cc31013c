#include <set>
#include <string>

#include "doctest.h"
#include "oracles.hpp"
#include "snr/errors.hpp"
#include "snr/word.hpp"

using namespace snr;

namespace {

Word w(int n, int r, const char* text) { return parse_word(LatticeParams(n, r), text); }

std::string s(const Word& word) { return word.to_string(); }

}  // namespace

TEST_CASE("subsets map to canonical strings") {
  CHECK(s(word_from_subset(LatticeParams(7, 5), {Symbol::tilde(1), Symbol::bar(1)})) == "10000|01");
  CHECK(s(word_from_subset(LatticeParams(4, 2), {})) == "00|00");
  const LatticeParams p63(6, 3);
  CHECK(s(word_from_subset(p63, {Symbol::tilde(1), Symbol::tilde(2), Symbol::tilde(3), Symbol::bar(1),
                                 Symbol::bar(2), Symbol::bar(3)})) == "321|123");
  CHECK(s(Word::bottom(p63)) == "000|123");
  CHECK(s(Word::top(p63)) == "321|000");
}

TEST_CASE("subset and string forms are mutually inverse") {
  for (int n = 0; n <= 7; ++n) {
    for (int r = 0; r <= n; ++r) {
      const LatticeParams p(n, r);
      for (std::uint64_t mask = 0; mask < p.size(); ++mask) {
        const Word word(p, mask);
        CHECK(word_from_subset(p, subset_of_word(word)) == word);
        CHECK(parse_word(p, word.to_string()) == word);
        CHECK(word_from_positions(p, word.positions()) == word);
      }
    }
  }
}

TEST_CASE("wide alphabets use comma separators and round-trip") {
  const LatticeParams p(12, 10);
  const Word top = Word::top(p);
  CHECK(s(top) == "10,9,8,7,6,5,4,3,2,1|0,0");
  CHECK(parse_word(p, s(top)) == top);
  CHECK(parse_word(p, s(Word::bottom(p))) == Word::bottom(p));
}

TEST_CASE("malformed strings are rejected with a diagnostic") {
  const LatticeParams p(3, 2);
  CHECK_THROWS_AS(parse_word(p, "12|0"), DomainError);  // left side must decrease
  CHECK_THROWS_AS(parse_word(p, "11|0"), DomainError);  // repeated symbol
  CHECK_THROWS_AS(parse_word(p, "21|2"), DomainError);  // outside the alphabet
  CHECK_THROWS_AS(parse_word(p, "210"), DomainError);
  CHECK_THROWS_AS(parse_word(p, "2|10"), DomainError);
  CHECK_THROWS_AS(parse_word(LatticeParams(3, 0), "|210"), DomainError);
  CHECK_THROWS_AS(LatticeParams(3, 4), DomainError);
  CHECK_THROWS_AS(LatticeParams(-1, 0), DomainError);
  try {
    parse_word(p, "12|0");
    FAIL("expected a throw");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("ordering") != std::string::npos);
  }
}

TEST_CASE("order examples") {
  CHECK(leq(w(4, 2, "00|12"), w(4, 2, "21|00")));
  CHECK_FALSE(leq(w(7, 4, "2100|012"), w(7, 4, "4310|023")));
  CHECK(leq(w(3, 2, "10|1"), w(3, 2, "10|0")));
  CHECK_THROWS_AS(leq(w(3, 2, "10|1"), w(3, 1, "1|01")), DomainError);
}

TEST_CASE("meet, join, boolean operations and complement on S(7,4)") {
  const Word w1 = w(7, 4, "4310|023");
  const Word w2 = w(7, 4, "2100|012");
  CHECK(s(meet(w1, w2)) == "2100|023");
  CHECK(s(join(w1, w2)) == "4310|012");
  CHECK(s(complement(w(7, 4, "4310|001"))) == "2000|023");
  CHECK(s(complement(w(7, 4, "2000|012"))) == "4310|003");
  CHECK(s(bool_union(w(7, 4, "4310|001"), w(7, 4, "2000|012"))) == "4321|012");
  CHECK(s(bool_intersect(w(7, 4, "4310|001"), w(7, 4, "2000|012"))) == "0000|001");
  CHECK(s(join(w(7, 4, "4310|001"), w(7, 4, "2000|012"))) == "4310|001");
  for (const Word& x : {w1, w2}) {
    CHECK(meet(x, x) == x);
    CHECK(join(x, x) == x);
  }
}

TEST_CASE("meet and join equal the brute-force glb and lub") {
  for (auto [n, r] : {std::pair{4, 2}, std::pair{4, 0}, std::pair{5, 3}}) {
    const oracle::Lattice L = oracle::build(LatticeParams(n, r));
    for (std::size_t a = 0; a < L.size(); ++a) {
      for (std::size_t b = 0; b < L.size(); ++b) {
        REQUIRE(meet(L.words[a], L.words[b]) == L.words[L.glb(a, b)]);
        REQUIRE(join(L.words[a], L.words[b]) == L.words[L.lub(a, b)]);
      }
    }
  }
}

TEST_CASE("order, cover and rank agree with the reference model") {
  for (int n = 0; n <= 6; ++n) {
    for (int r = 0; r <= n; ++r) {
      const oracle::Lattice L = oracle::build(LatticeParams(n, r));
      for (std::size_t a = 0; a < L.size(); ++a) {
        REQUIRE(rank(L.words[a]) == L.rank[a]);
        for (std::size_t b = 0; b < L.size(); ++b) {
          REQUIRE(leq(L.words[a], L.words[b]) == L.leq(a, b));
          REQUIRE(is_cover(L.words[a], L.words[b]) == L.covers(a, b));
        }
      }
    }
  }
}

TEST_CASE("cover and rank examples") {
  CHECK(is_cover(w(6, 3, "100|123"), w(6, 3, "200|123")));
  CHECK_FALSE(is_cover(w(6, 3, "100|123"), w(6, 3, "100|123")));
  CHECK(rank(w(6, 3, "000|123")) == 0);
  CHECK(rank(w(6, 3, "321|000")) == 12);
  CHECK(LatticeParams(6, 3).max_rank() == 12);
  const oracle::Lattice L = oracle::build(LatticeParams(9, 5));
  const Word x = w(9, 5, "52000|0024");
  CHECK(L.rank[x.members()] == 11);
  CHECK(rank(x) == 11);
}

TEST_CASE("delta lists the differing positions") {
  const DeltaVector dv = delta(w(6, 3, "100|123"), w(6, 3, "200|023"));
  REQUIRE(dv.size() == 2);
  CHECK(dv[0].position == 1);
  CHECK(dv[0].lower == Symbol::tilde(1));
  CHECK(dv[0].upper == Symbol::tilde(2));
  CHECK(dv[1].position == 4);
  CHECK(dv[1].lower == Symbol::bar(1));
  CHECK(dv[1].upper == Symbol::zero());
}

TEST_CASE("complement is an order-reversing involution and ranks are complementary") {
  for (int n = 0; n <= 8; ++n) {
    for (int r = 0; r <= n; ++r) {
      const LatticeParams p(n, r);
      for (std::uint64_t mask = 0; mask < p.size(); ++mask) {
        const Word x(p, mask);
        REQUIRE(complement(complement(x)) == x);
        REQUIRE(rank(x) + rank(complement(x)) == p.max_rank());
      }
    }
  }
  const oracle::Lattice L = oracle::build(LatticeParams(4, 2));
  for (std::size_t a = 0; a < L.size(); ++a) {
    for (std::size_t b = 0; b < L.size(); ++b) {
      REQUIRE(leq(L.words[a], L.words[b]) == leq(complement(L.words[b]), complement(L.words[a])));
    }
  }
}

TEST_CASE("transpose and the conjugate isomorphism") {
  CHECK(s(iso_to_conjugate(w(3, 1, "0|01"))) == "20|1");
  CHECK(s(iso_to_conjugate(w(3, 1, "1|02"))) == "10|0");
  CHECK(s(transpose(w(3, 1, "0|01"))) == "10|0");
  const LatticeParams p(4, 2);
  for (std::uint64_t mask = 0; mask < p.size(); ++mask) {
    const Word x(p, mask);
    CHECK(transpose(transpose(x)) == x);
  }
  for (int n = 0; n <= 6; ++n) {
    for (int r = 0; r <= n; ++r) {
      const oracle::Lattice L = oracle::build(LatticeParams(n, r));
      std::set<std::uint64_t> image;
      for (std::size_t a = 0; a < L.size(); ++a) {
        const Word fa = iso_to_conjugate(L.words[a]);
        REQUIRE(fa.params() == LatticeParams(n, n - r));
        image.insert(fa.members());
        for (std::size_t b = 0; b < L.size(); ++b) {
          REQUIRE(L.leq(a, b) == leq(fa, iso_to_conjugate(L.words[b])));
        }
      }
      REQUIRE(image.size() == L.size());
    }
  }
}

TEST_CASE("cartesian split") {
  const auto [pos, neg] = cartesian_split(w(5, 3, "310|02"));
  CHECK(s(pos) == "310|");
  CHECK(s(neg) == "|02");
  const auto [b1, b2] = cartesian_split(Word::bottom(LatticeParams(5, 3)));
  CHECK(s(b1) == "000|");
  CHECK(s(b2) == "|12");
  CHECK(b1 == Word::bottom(LatticeParams(3, 3)));
  CHECK(b2 == Word::bottom(LatticeParams(2, 0)));
  for (int n = 0; n <= 6; ++n) {
    for (int r = 0; r <= n; ++r) {
      const oracle::Lattice L = oracle::build(LatticeParams(n, r));
      for (std::size_t a = 0; a < L.size(); ++a) {
        const auto [a1, a2] = cartesian_split(L.words[a]);
        REQUIRE(cartesian_merge(a1, a2) == L.words[a]);
        for (std::size_t b = 0; b < L.size(); ++b) {
          const auto [c1, c2] = cartesian_split(L.words[b]);
          REQUIRE(L.leq(a, b) == (leq(a1, c1) && leq(a2, c2)));
        }
      }
    }
  }
}

TEST_CASE("enumeration") {
  const std::set<std::string> s32{"21|0", "21|1", "10|0", "20|0", "10|1", "20|1", "00|1", "00|0"};
  std::set<std::string> got;
  for (const Word& x : enumerate(LatticeParams(3, 2))) got.insert(s(x));
  CHECK(got == s32);
  for (int n = 0; n <= 12; ++n) {
    for (int r = 0; r <= n; ++r) {
      const auto words = enumerate(LatticeParams(n, r));
      REQUIRE(words.size() == (std::size_t{1} << n));
      std::set<std::uint64_t> masks;
      for (const Word& x : words) masks.insert(x.members());
      REQUIRE(masks.size() == words.size());
    }
  }
  const auto slice = enumerate_d_slice(LatticeParams(8, 5), 5);
  CHECK(slice.size() == 56);
  std::size_t filtered = 0;
  for (const Word& x : enumerate(LatticeParams(8, 5))) filtered += subset_of_word(x).size() == 5;
  CHECK(filtered == 56);
  CHECK_THROWS_AS(enumerate_d_slice(LatticeParams(8, 5), 0), DomainError);
  CHECK_THROWS_AS(enumerate_d_slice(LatticeParams(8, 5), 9), DomainError);
}

TEST_CASE("lattice laws hold on S(4,1)") {
  const auto words = enumerate(LatticeParams(4, 1));
  for (const Word& a : words) {
    for (const Word& b : words) {
      REQUIRE(meet(a, join(a, b)) == a);
      REQUIRE(join(a, meet(a, b)) == a);
      REQUIRE(leq(a, b) == (meet(a, b) == a));
      for (const Word& c : words) {
        REQUIRE(meet(a, join(b, c)) == join(meet(a, b), meet(a, c)));
      }
    }
  }
}
