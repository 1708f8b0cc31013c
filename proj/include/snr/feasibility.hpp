#pragma once

// Exact feasibility of a closed rational polyhedron { x : A x <= b } by
// Fourier-Motzkin elimination, with a witness recovered by back-substitution.

#include <cstddef>
#include <optional>
#include <vector>

#include "snr/rational.hpp"

namespace snr {

struct LinearConstraint {
  std::vector<Rational> coeffs;  // one per variable
  Rational rhs;                  // coeffs . x <= rhs
};

struct FeasibilityStats {
  std::size_t peak_rows = 0;
  std::size_t eliminated = 0;
};

// Returns a point satisfying every constraint, or nullopt if none exists.
std::optional<std::vector<Rational>> solve_feasibility(std::size_t variables,
                                                       std::vector<LinearConstraint> constraints,
                                                       FeasibilityStats* stats = nullptr);

}  // namespace snr
