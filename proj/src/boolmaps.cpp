#include "snr/boolmaps.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "snr/feasibility.hpp"
#include "snr/hasse.hpp"

namespace snr {

std::string to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::A1: return "a1";
    case Axiom::A2: return "a2";
    case Axiom::A3: return "a3";
    case Axiom::A4: return "a4";
    case Axiom::A5: return "a5";
  }
  return "?";
}

namespace {

struct CoverGraph {
  std::vector<std::vector<std::uint32_t>> up;
  std::vector<std::vector<std::uint32_t>> down;
};

CoverGraph cover_graph(const LatticeParams& params) {
  CoverGraph g;
  const auto size = static_cast<std::size_t>(params.size());
  g.up.resize(size);
  g.down.resize(size);
  for (std::uint64_t mask = 0; mask < size; ++mask) {
    for (const Word& child : children(Word(params, mask))) {
      g.up[mask].push_back(static_cast<std::uint32_t>(child.members()));
      g.down[child.members()].push_back(static_cast<std::uint32_t>(mask));
    }
  }
  return g;
}

std::optional<std::uint64_t> negative_pin(const LatticeParams& p) {
  if (p.negatives() == 0) return std::nullopt;
  return std::uint64_t{1} << p.r;  // {Bar(1)}
}

}  // namespace

AxiomReport check_axioms(const BooleanMap& map) {
  const LatticeParams& p = map.params();
  const CoverGraph g = cover_graph(p);
  AxiomReport report;

  bool monotone = true;
  for (std::uint64_t mask = 0; mask < p.size() && monotone; ++mask) {
    if (!map.is_p(mask)) continue;
    for (std::uint32_t above : g.up[mask]) {
      if (!map.is_p(above)) {
        monotone = false;
        break;
      }
    }
  }
  if (!monotone) {
    // Both axioms say "order preserving"; they fail together.
    report.violated.push_back(Axiom::A1);
    report.violated.push_back(Axiom::A2);
  }

  bool pins = map.is_p(0);
  if (auto pin = negative_pin(p)) pins = pins && !map.is_p(*pin);
  if (!pins) report.violated.push_back(Axiom::A3);

  bool complements = true;
  for (std::uint64_t mask = 0; mask < p.size(); ++mask) {
    if (!map.is_p(mask) && !map.is_p(~mask & p.full_mask())) {
      complements = false;
      break;
    }
  }
  if (!complements) report.violated.push_back(Axiom::A4);
  if (!map.is_p(p.full_mask())) report.violated.push_back(Axiom::A5);

  report.is_bm = monotone && pins;
  report.is_wbm = report.is_bm && complements && map.is_p(p.full_mask());
  return report;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

class MapSearch {
 public:
  MapSearch(LatticeParams params, MapFamily family, std::uint64_t cap,
            const std::function<void(const BooleanMap&)>& visit)
      : params_(params), family_(family), cap_(cap), visit_(visit), graph_(cover_graph(params)) {
    label_.assign(static_cast<std::size_t>(params.size()), kUnset);
    // Top levels first, each level left to right.
    auto levels = build_levels(params, GenOrder::OutIn);
    for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
      for (const Word& w : *it) order_.push_back(static_cast<std::uint32_t>(w.members()));
    }
  }

  std::uint64_t run() {
    bool ok = assign(0, kP);
    if (auto pin = negative_pin(params_)) ok = ok && assign(static_cast<std::uint32_t>(*pin), kN);
    if (family_ == MapFamily::Weighted) ok = ok && assign(static_cast<std::uint32_t>(params_.full_mask()), kP);
    if (ok) search(0);
    return count_;
  }

 private:
  static constexpr std::int8_t kUnset = -1;
  static constexpr std::int8_t kN = 0;
  static constexpr std::int8_t kP = 1;

  // Sets a label and everything it forces; false on conflict. Changes are
  // recorded on the trail either way so the caller can roll back.
  bool assign(std::uint32_t start, std::int8_t value) {
    std::vector<std::pair<std::uint32_t, std::int8_t>> work{{start, value}};
    while (!work.empty()) {
      auto [mask, v] = work.back();
      work.pop_back();
      if (label_[mask] == v) continue;
      if (label_[mask] != kUnset) return false;
      label_[mask] = v;
      trail_.push_back(mask);
      if (v == kP) {
        for (std::uint32_t above : graph_.up[mask]) work.emplace_back(above, kP);
      } else {
        for (std::uint32_t below : graph_.down[mask]) work.emplace_back(below, kN);
        if (family_ == MapFamily::Weighted) {
          work.emplace_back(static_cast<std::uint32_t>(~mask & params_.full_mask()), kP);
        }
      }
    }
    return true;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      label_[trail_.back()] = kUnset;
      trail_.pop_back();
    }
  }

  void search(std::size_t from) {
    while (from < order_.size() && label_[order_[from]] != kUnset) ++from;
    if (from == order_.size()) {
      emit();
      return;
    }
    const std::uint32_t mask = order_[from];
    for (std::int8_t choice : {kN, kP}) {
      const std::size_t mark = trail_.size();
      if (assign(mask, choice)) search(from + 1);
      undo_to(mark);
    }
  }

  void emit() {
    if (count_ >= cap_) {
      throw ResourceError("enumeration cap of " + std::to_string(cap_) + " maps exceeded", count_);
    }
    std::vector<bool> labels(label_.size());
    for (std::size_t i = 0; i < label_.size(); ++i) labels[i] = label_[i] == kP;
    ++count_;
    visit_(BooleanMap(params_, std::move(labels)));
  }

  LatticeParams params_;
  MapFamily family_;
  std::uint64_t cap_;
  const std::function<void(const BooleanMap&)>& visit_;
  CoverGraph graph_;
  std::vector<std::uint32_t> order_;
  std::vector<std::int8_t> label_;
  std::vector<std::uint32_t> trail_;
  std::uint64_t count_ = 0;
};

void check_limits(const LatticeParams& params, const EnumerationLimits& limits) {
  if (params.n > limits.max_n) {
    throw ResourceError("n=" + std::to_string(params.n) + " is out of desk scale (limit n <= " +
                            std::to_string(limits.max_n) + ")",
                        0);
  }
}

}  // namespace

std::uint64_t enumerate_maps(LatticeParams params, MapFamily family, const EnumerationLimits& limits,
                             const std::function<void(const BooleanMap&)>& visit) {
  check_limits(params, limits);
  MapSearch search(params, family, limits.cap, visit);
  return search.run();
}

std::vector<BooleanMap> enumerate_wbm(LatticeParams params, const EnumerationLimits& limits) {
  std::vector<BooleanMap> out;
  enumerate_maps(params, MapFamily::Weighted, limits, [&](const BooleanMap& m) { out.push_back(m); });
  return out;
}

std::vector<BooleanMap> enumerate_bm(LatticeParams params, const EnumerationLimits& limits) {
  std::vector<BooleanMap> out;
  enumerate_maps(params, MapFamily::Boolean, limits, [&](const BooleanMap& m) { out.push_back(m); });
  return out;
}

// ---------------------------------------------------------------------------
// Representability

RepresentabilityResult is_representable(const BooleanMap& map, MapFamily family) {
  const AxiomReport axioms = check_axioms(map);
  // Every induced map is a BM (a WBM for weight functions), so nothing else
  // can be represented.
  if (!(family == MapFamily::Weighted ? axioms.is_wbm : axioms.is_bm)) return {};

  const LatticeParams& p = map.params();
  const auto vars = static_cast<std::size_t>(p.n);
  const CoverGraph g = cover_graph(p);
  std::vector<LinearConstraint> rows;
  auto unit = [&](std::initializer_list<std::pair<int, int>> terms, int rhs) {
    LinearConstraint row{std::vector<Rational>(vars, Rational(0)), Rational(rhs)};
    for (auto [bit, coeff] : terms) row.coeffs[static_cast<std::size_t>(bit)] += coeff;
    rows.push_back(std::move(row));
  };

  // Monotone chain. Every constraint is homogeneous, so the strict ones can
  // be given a margin of 1 without changing feasibility.
  const int r = p.r;
  const int m = p.negatives();
  if (r >= 1) unit({{0, -1}}, 0);                                  // f(~1) >= 0
  for (int i = 1; i < r; ++i) unit({{i - 1, 1}, {i, -1}}, 0);      // f(~i) <= f(~(i+1))
  if (m >= 1) unit({{r, 1}}, -1);                                  // f(-1) < 0
  for (int j = 1; j < m; ++j) unit({{r + j, 1}, {r + j - 1, -1}}, 0);  // f(-(j+1)) <= f(-j)
  if (family == MapFamily::Weighted) {
    LinearConstraint total{std::vector<Rational>(vars, Rational(-1)), Rational(0)};
    rows.push_back(std::move(total));
  }

  // Sums are monotone under any chain-respecting f, so only the minimal
  // P-words and the maximal N-words constrain anything.
  for (std::uint64_t mask = 0; mask < p.size(); ++mask) {
    const bool positive = map.is_p(mask);
    const auto& neighbours = positive ? g.down[mask] : g.up[mask];
    const bool extremal = std::all_of(neighbours.begin(), neighbours.end(),
                                      [&](std::uint32_t other) { return map.is_p(other) != positive; });
    if (!extremal) continue;
    LinearConstraint row{std::vector<Rational>(vars, Rational(0)), Rational(positive ? 0 : -1)};
    for (int b = 0; b < p.n; ++b) {
      if ((mask >> b) & 1U) row.coeffs[static_cast<std::size_t>(b)] = positive ? -1 : 1;
    }
    rows.push_back(std::move(row));
  }

  auto point = solve_feasibility(vars, std::move(rows));
  if (!point) return {};

  CandidateValues candidate{p, {}, {}, 0};
  for (int b = 0; b < r; ++b) candidate.tilde.push_back((*point)[static_cast<std::size_t>(b)]);
  for (int b = r; b < p.n; ++b) candidate.bar.push_back((*point)[static_cast<std::size_t>(b)]);
  NrFunction witness = validate(candidate);
  if ((family == MapFamily::Weighted && !witness.is_weight()) || induced_map(witness) != map) {
    throw std::logic_error("feasibility witness does not reproduce the boolean map");
  }
  return {true, std::move(witness)};
}

// ---------------------------------------------------------------------------
// Extremal numbers

namespace {

std::vector<RepresentabilityResult> check_batch(const std::vector<BooleanMap>& batch, MapFamily family,
                                                unsigned threads) {
  std::vector<RepresentabilityResult> results(batch.size());
  if (threads <= 1 || batch.size() < 2) {
    for (std::size_t i = 0; i < batch.size(); ++i) results[i] = is_representable(batch[i], family);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  const unsigned workers = std::min<unsigned>(threads, static_cast<unsigned>(batch.size()));
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      try {
        for (std::size_t i = next++; i < batch.size(); i = next++) results[i] = is_representable(batch[i], family);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

constexpr std::size_t kBatch = 2048;

// Streams the family through representability checks in batches, folding
// results in enumeration order so output is independent of thread count.
template <typename Fold>
std::uint64_t stream_family(LatticeParams params, MapFamily family, const AnalysisOptions& options, Fold fold) {
  std::vector<BooleanMap> batch;
  auto flush = [&] {
    auto results = check_batch(batch, family, options.threads);
    for (std::size_t i = 0; i < batch.size(); ++i) fold(batch[i], results[i]);
    batch.clear();
  };
  std::uint64_t total = 0;
  try {
    total = enumerate_maps(params, family, options.limits, [&](const BooleanMap& map) {
      batch.push_back(map);
      if (batch.size() == kBatch) flush();
    });
  } catch (const ResourceError&) {
    flush();
    throw;
  }
  flush();
  return total;
}

std::uint64_t measure(const BooleanMap& map, const std::optional<int>& d) {
  return d ? map.p_count(*d) : map.p_count();
}

void require_gamma_params(const LatticeParams& params, const std::optional<int>& d) {
  if (params.r < 1 || params.r >= params.n) {
    throw DomainError("extremal numbers are defined for 1 <= r <= n-1 only");
  }
  if (d && (*d < 1 || *d > params.n)) throw DomainError("d must lie in [1, n]");
}

}  // namespace

GammaReport analyze(LatticeParams params, const AnalysisOptions& options) {
  require_gamma_params(params, options.d);
  GammaReport report;
  report.params = params;
  report.d = options.d;

  auto fold_weighted = [&](const BooleanMap& map, RepresentabilityResult& result) {
    ++report.wb_count;
    const std::uint64_t size = measure(map, options.d);
    if (!report.gamma_tilde || size < report.gamma_tilde->value) {
      report.gamma_tilde = ExtremalValue{size, map, std::nullopt};
    }
    if (result.representable) {
      ++report.rwb_count;
      if (!report.gamma || size < report.gamma->value) {
        report.gamma = ExtremalValue{size, map, std::move(result.witness)};
      }
    } else {
      report.non_representable.push_back(map);
    }
  };
  auto fold_plain = [&](const BooleanMap& map, RepresentabilityResult& result) {
    *report.bm_count += 1;
    if (result.representable) {
      *report.rb_count += 1;
    } else {
      report.non_representable_bm.push_back(map);
    }
  };

  try {
    stream_family(params, MapFamily::Weighted, options, fold_weighted);
    if (options.include_bm) {
      report.bm_count = 0;
      report.rb_count = 0;
      stream_family(params, MapFamily::Boolean, options, fold_plain);
    }
  } catch (const ResourceError& cap) {
    throw IncompleteReport(cap, std::move(report));
  }

  if (report.rwb_count == report.wb_count && report.gamma && report.gamma_tilde &&
      report.gamma->value != report.gamma_tilde->value) {
    throw std::logic_error("every weighted map is representable yet gamma differs from gamma tilde");
  }
  return report;
}

namespace {

ExtremalValue require_value(const std::optional<ExtremalValue>& value, const LatticeParams& params) {
  if (!value) {
    throw DomainError("no qualifying boolean map on S(" + std::to_string(params.n) + "," + std::to_string(params.r) + ")");
  }
  return *value;
}

}  // namespace

ExtremalValue gamma_tilde(LatticeParams params, const EnumerationLimits& limits) {
  return require_value(analyze(params, {limits, std::nullopt, false, 1}).gamma_tilde, params);
}

ExtremalValue gamma(LatticeParams params, const EnumerationLimits& limits) {
  return require_value(analyze(params, {limits, std::nullopt, false, 1}).gamma, params);
}

ExtremalValue gamma_tilde_d(LatticeParams params, int d, const EnumerationLimits& limits) {
  return require_value(analyze(params, {limits, d, false, 1}).gamma_tilde, params);
}

ExtremalValue gamma_d(LatticeParams params, int d, const EnumerationLimits& limits) {
  return require_value(analyze(params, {limits, d, false, 1}).gamma, params);
}

PsiValue psi(int n, int d, const EnumerationLimits& limits) {
  if (n < 2) throw DomainError("psi needs n >= 2");
  std::optional<PsiValue> best;
  for (int r = 1; r < n; ++r) {
    ExtremalValue v = gamma_d(LatticeParams(n, r), d, limits);
    if (!best || v.value < best->value) best = PsiValue{v.value, r, std::move(v)};
  }
  return *best;
}

GammaReport wb_vs_rwb_report(LatticeParams params, const EnumerationLimits& limits, bool include_bm, unsigned threads) {
  return analyze(params, {limits, std::nullopt, include_bm, threads});
}

}  // namespace snr
