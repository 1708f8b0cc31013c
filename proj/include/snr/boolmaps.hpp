#pragma once

// Boolean maps on S(n,r): axiom checks, exhaustive enumeration of the
// (weighted) boolean maps, exact representability by (n,r)-functions and the
// extremal counts built on them.
//
// Axioms, for a labelling A : S(n,r) -> {N, P}:
//   a1  w <= w' and A(w) = P imply A(w') = P
//   a2  w <= w' and A(w') = N imply A(w) = N
//   a3  A(0..0|0..0) = P and A(0..0|0..01) = N
//   a4  A(w) = N implies A(w^c) = P
//   a5  A(r..1|1..(n-r)) = P
// A BM satisfies a1-a3, a WBM a1-a5. When r = n the word 0..0|0..01 does not
// exist and the second half of a3 is vacuous.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "snr/boolean_map.hpp"
#include "snr/weights.hpp"

namespace snr {

enum class Axiom { A1, A2, A3, A4, A5 };
std::string to_string(Axiom axiom);

struct AxiomReport {
  bool is_bm = false;
  bool is_wbm = false;
  std::vector<Axiom> violated;
};

AxiomReport check_axioms(const BooleanMap& map);

enum class MapFamily {
  Boolean,   // a1-a3; represented by (n,r)-functions
  Weighted,  // a1-a5; represented by (n,r)-weight functions
};

struct EnumerationLimits {
  std::uint64_t cap = 10'000'000;
  int max_n = 5;
};

// Visits every map of the family exactly once, in a fixed order. Throws
// ResourceError (carrying the number visited) before visiting map cap+1.
// Returns the number of maps visited.
std::uint64_t enumerate_maps(LatticeParams params, MapFamily family, const EnumerationLimits& limits,
                             const std::function<void(const BooleanMap&)>& visit);
std::vector<BooleanMap> enumerate_wbm(LatticeParams params, const EnumerationLimits& limits = {});
std::vector<BooleanMap> enumerate_bm(LatticeParams params, const EnumerationLimits& limits = {});

struct RepresentabilityResult {
  bool representable = false;
  std::optional<NrFunction> witness;
};

RepresentabilityResult is_representable(const BooleanMap& map, MapFamily family = MapFamily::Weighted);

struct ExtremalValue {
  std::uint64_t value = 0;
  BooleanMap minimizer;
  std::optional<NrFunction> witness;  // set for representable minimizers
};

struct GammaReport {
  LatticeParams params;
  std::optional<int> d;
  std::uint64_t wb_count = 0;
  std::uint64_t rwb_count = 0;
  std::optional<ExtremalValue> gamma_tilde;
  std::optional<ExtremalValue> gamma;
  std::vector<BooleanMap> non_representable;
  // Plain boolean maps, filled only when requested.
  std::optional<std::uint64_t> bm_count;
  std::optional<std::uint64_t> rb_count;
  std::vector<BooleanMap> non_representable_bm;
};

// Thrown when the enumeration cap cuts an analysis short; carries everything
// gathered up to that point.
class IncompleteReport : public ResourceError {
 public:
  IncompleteReport(const ResourceError& cause, GammaReport partial)
      : ResourceError(cause.what(), cause.partial_count()), report_(std::move(partial)) {}
  const GammaReport& report() const noexcept { return report_; }

 private:
  GammaReport report_;
};

struct AnalysisOptions {
  EnumerationLimits limits;
  std::optional<int> d;
  bool include_bm = false;
  unsigned threads = 1;
};

// One pass over WB(n,r): representability of every map, the minimum P-count
// over all maps (gamma tilde) and over representable maps (gamma).
// Requires 1 <= r <= n.
GammaReport analyze(LatticeParams params, const AnalysisOptions& options = {});

ExtremalValue gamma_tilde(LatticeParams params, const EnumerationLimits& limits = {});
ExtremalValue gamma(LatticeParams params, const EnumerationLimits& limits = {});
ExtremalValue gamma_tilde_d(LatticeParams params, int d, const EnumerationLimits& limits = {});
ExtremalValue gamma_d(LatticeParams params, int d, const EnumerationLimits& limits = {});

struct PsiValue {
  std::uint64_t value = 0;
  int r = 0;
  ExtremalValue at_r;
};
// Minimum of gamma_d over 1 <= r <= n.
PsiValue psi(int n, int d, const EnumerationLimits& limits = {});

GammaReport wb_vs_rwb_report(LatticeParams params, const EnumerationLimits& limits = {}, bool include_bm = false,
                             unsigned threads = 1);

}  // namespace snr
