#include "snr/hasse.hpp"
#include "snr/word.hpp"

namespace snr {

std::vector<Word> enumerate(LatticeParams params) {
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(params.size()));
  for (auto& level : build_levels(params, GenOrder::OutIn)) {
    for (Word& w : level) out.push_back(w);
  }
  return out;
}

std::vector<Word> enumerate_d_slice(LatticeParams params, int d) {
  if (d < 1 || d > params.n) {
    throw DomainError("d must lie in [1, n], got d=" + std::to_string(d));
  }
  std::vector<Word> out;
  for (const Word& w : enumerate(params)) {
    if (nonzero_count(w) == d) out.push_back(w);
  }
  return out;
}

}  // namespace snr
