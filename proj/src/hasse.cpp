#include "snr/hasse.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace snr {

std::string_view to_string(GenOrder order) {
  return order == GenOrder::OutIn ? "outin" : "leftright";
}

GenOrder parse_gen_order(std::string_view text) {
  if (text == "outin") return GenOrder::OutIn;
  if (text == "leftright") return GenOrder::LeftRight;
  throw DomainError("unknown generation order '" + std::string(text) + "' (expected outin or leftright)");
}

namespace {

bool bump_is_valid(const LatticeParams& params, Positions& pos, int k) {
  ++pos.ordinal[static_cast<std::size_t>(k)];
  const bool ok = !check_positions(params, pos).has_value();
  --pos.ordinal[static_cast<std::size_t>(k)];
  return ok;
}

}  // namespace

GeneratingIndexes generating_indexes(const Word& w) {
  const LatticeParams& params = w.params();
  Positions pos = w.positions();
  GeneratingIndexes out;
  for (int k = 0; k < params.n; ++k) {
    if (!bump_is_valid(params, pos, k)) continue;
    (k < params.r ? out.positive : out.negative).push_back(k + 1);
  }
  return out;
}

Word generated_at(const Word& w, int position) {
  if (position < 1 || position > w.params().n) throw DomainError("position out of range");
  Positions pos = w.positions();
  ++pos.ordinal[static_cast<std::size_t>(position - 1)];
  return word_from_positions(w.params(), pos);
}

std::vector<Word> children(const Word& w, GenOrder order) {
  GeneratingIndexes idx = generating_indexes(w);
  if (order == GenOrder::OutIn) std::reverse(idx.negative.begin(), idx.negative.end());
  std::vector<Word> out;
  out.reserve(idx.positive.size() + idx.negative.size());
  for (int k : idx.positive) out.push_back(generated_at(w, k));
  for (int k : idx.negative) out.push_back(generated_at(w, k));
  return out;
}

std::size_t HasseDiagram::node_count() const {
  std::size_t total = 0;
  for (const auto& level : levels) total += level.size();
  return total;
}

namespace {

template <typename OnEdge>
std::vector<std::vector<Word>> generate(LatticeParams params, GenOrder order, OnEdge on_edge) {
  std::vector<std::vector<Word>> levels;
  levels.push_back({Word::bottom(params)});
  for (int k = 0; k < params.max_rank(); ++k) {
    std::vector<Word> next;
    std::unordered_set<std::uint64_t> seen;
    for (const Word& parent : levels.back()) {
      for (const Word& child : children(parent, order)) {
        on_edge(parent, child);
        if (seen.insert(child.members()).second) next.push_back(child);
      }
    }
    levels.push_back(std::move(next));
  }
  return levels;
}

}  // namespace

HasseDiagram build(LatticeParams params, GenOrder order) {
  if (params.n > kMaxEnumerateN) throw ResourceError("lattice too large to build", 0);
  HasseDiagram diagram;
  diagram.params = params;
  diagram.order = order;
  // A parent never emits the same child twice, so generation edges are
  // already distinct.
  diagram.levels = generate(params, order, [&](const Word& parent, const Word& child) {
    diagram.edges.emplace_back(parent, child);
  });
  return diagram;
}

std::vector<std::vector<Word>> build_levels(LatticeParams params, GenOrder order) {
  if (params.n > kMaxEnumerateN) throw ResourceError("lattice too large to enumerate", 0);
  return generate(params, order, [](const Word&, const Word&) {});
}

// ---------------------------------------------------------------------------
// Two-copy decomposition

namespace {

// For r < n the parts are told apart by Bar(n-r); for r = n by Tilde(n).
std::uint64_t split_bit(const LatticeParams& p) { return std::uint64_t{1} << (p.n - 1); }

}  // namespace

bool in_upper_part(const Word& w) {
  const LatticeParams& p = w.params();
  if (p.n == 0) throw DomainError("S(0,0) has no two-copy decomposition");
  const bool has_bit = (w.members() & split_bit(p)) != 0;
  return p.r < p.n ? !has_bit : has_bit;
}

Word split_projection(const Word& w) {
  const LatticeParams& p = w.params();
  if (p.n == 0) throw DomainError("S(0,0) has no two-copy decomposition");
  const LatticeParams target(p.n - 1, p.r < p.n ? p.r : p.n - 1);
  return Word(target, w.members() & ~split_bit(p));
}

SplitParts split_parts(LatticeParams params) {
  if (params.n == 0) throw DomainError("split_parts needs n >= 1");
  SplitParts parts;
  parts.height = params.r < params.n ? params.n - params.r : params.n;
  for (const Word& w : enumerate(params)) (in_upper_part(w) ? parts.upper : parts.lower).push_back(w);
  return parts;
}

// ---------------------------------------------------------------------------
// DOT

namespace {

std::string quoted(const Word& w) { return "\"" + w.to_string() + "\""; }

}  // namespace

std::string to_dot(const HasseDiagram& diagram) {
  std::ostringstream out;
  out << "digraph \"S(" << diagram.params.n << "," << diagram.params.r << ")\" {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=plaintext];\n";
  for (std::size_t k = 0; k < diagram.levels.size(); ++k) {
    const auto& level = diagram.levels[k];
    out << "  subgraph rank_" << k << " {\n    rank=same;\n";
    for (const Word& w : level) out << "    " << quoted(w) << " [label=" << quoted(w) << "];\n";
    for (std::size_t i = 1; i < level.size(); ++i) {
      out << "    " << quoted(level[i - 1]) << " -> " << quoted(level[i]) << " [style=invis];\n";
    }
    out << "  }\n";
  }
  for (const auto& [lower, upper] : diagram.edges) {
    out << "  " << quoted(lower) << " -> " << quoted(upper) << " [dir=none];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace snr
