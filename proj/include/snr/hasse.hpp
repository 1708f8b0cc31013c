#pragma once

// Level-by-level construction of the Hasse diagram of S(n,r).
//
// Level 0 holds the minimum. Level k+1 is obtained by concatenating, in the
// current left-to-right order, the words generated by each word of level k
// and keeping only the first occurrence of each word.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "snr/word.hpp"

namespace snr {

enum class GenOrder {
  OutIn,      // positives ascending, then negatives descending
  LeftRight,  // positives ascending, then negatives ascending
};

std::string_view to_string(GenOrder order);
GenOrder parse_gen_order(std::string_view text);

struct GeneratingIndexes {
  std::vector<int> positive;  // 1-based positions in 1..r
  std::vector<int> negative;  // 1-based positions in r+1..n
};

GeneratingIndexes generating_indexes(const Word& w);
// w[k]: the word obtained by bumping position k to the symbol covering it.
Word generated_at(const Word& w, int position);
std::vector<Word> children(const Word& w, GenOrder order = GenOrder::OutIn);

struct HasseDiagram {
  LatticeParams params;
  GenOrder order = GenOrder::OutIn;
  std::vector<std::vector<Word>> levels;
  std::vector<std::pair<Word, Word>> edges;  // (lower, upper), in generation order

  std::size_t node_count() const;
};

HasseDiagram build(LatticeParams params, GenOrder order = GenOrder::OutIn);
// Levels only; skips edge bookkeeping.
std::vector<std::vector<Word>> build_levels(LatticeParams params, GenOrder order = GenOrder::OutIn);

// Two-copy decomposition: S(n,r) as a disjoint union of two sublattices, each
// isomorphic to S(n-1,r) (S(n-1,n-1) when r = n), the upper one translated up
// by `height` ranks.
struct SplitParts {
  std::vector<Word> lower;
  std::vector<Word> upper;
  int height = 0;
};

SplitParts split_parts(LatticeParams params);
bool in_upper_part(const Word& w);
// The isomorphism from either part onto S(n-1, r) (S(n-1,n-1) when r = n).
Word split_projection(const Word& w);

std::string to_dot(const HasseDiagram& diagram);

}  // namespace snr
