#include "snr/feasibility.hpp"

#include <algorithm>
#include <map>

#include "snr/errors.hpp"

namespace snr {

namespace {

using Row = LinearConstraint;

struct CoeffLess {
  bool operator()(const std::vector<Rational>& a, const std::vector<Rational>& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

// Scales a row so its first nonzero coefficient is +-1. Parallel rows then
// share a key and only the tightest survives.
bool normalize(Row& row) {
  auto first = std::find_if(row.coeffs.begin(), row.coeffs.end(), [](const Rational& c) { return c != 0; });
  if (first == row.coeffs.end()) return false;
  const Rational scale = abs(*first);
  for (Rational& c : row.coeffs) c /= scale;
  row.rhs /= scale;
  return true;
}

// Deduplicates parallel rows; returns false if an all-zero row is violated.
bool compact(std::vector<Row>& rows) {
  std::map<std::vector<Rational>, Rational, CoeffLess> best;
  for (Row& row : rows) {
    if (!normalize(row)) {
      if (row.rhs < 0) return false;
      continue;
    }
    auto [it, inserted] = best.try_emplace(std::move(row.coeffs), row.rhs);
    if (!inserted && row.rhs < it->second) it->second = row.rhs;
  }
  rows.clear();
  for (auto& [coeffs, rhs] : best) rows.push_back({coeffs, rhs});
  return true;
}

}  // namespace

std::optional<std::vector<Rational>> solve_feasibility(std::size_t variables, std::vector<LinearConstraint> constraints,
                                                       FeasibilityStats* stats) {
  for (const Row& row : constraints) {
    if (row.coeffs.size() != variables) throw DomainError("constraint width does not match variable count");
  }
  std::vector<Row> current = std::move(constraints);
  if (!compact(current)) return std::nullopt;

  // Each stage keeps the system as it stood before its variable was removed.
  std::vector<std::pair<std::size_t, std::vector<Row>>> stages;
  std::vector<bool> eliminated(variables, false);
  std::size_t peak = current.size();

  for (std::size_t step = 0; step < variables; ++step) {
    // Cheapest variable: fewest generated rows.
    std::size_t pick = variables;
    std::size_t best_cost = 0;
    for (std::size_t v = 0; v < variables; ++v) {
      if (eliminated[v]) continue;
      std::size_t pos = 0, neg = 0;
      for (const Row& row : current) {
        if (row.coeffs[v] > 0) ++pos;
        else if (row.coeffs[v] < 0) ++neg;
      }
      const std::size_t cost = pos * neg;
      if (pick == variables || cost < best_cost) {
        pick = v;
        best_cost = cost;
      }
    }

    std::vector<Row> next;
    std::vector<const Row*> upper, lower;
    for (const Row& row : current) {
      if (row.coeffs[pick] > 0) upper.push_back(&row);
      else if (row.coeffs[pick] < 0) lower.push_back(&row);
      else next.push_back(row);
    }
    for (const Row* u : upper) {
      for (const Row* l : lower) {
        const Rational su = 1 / u->coeffs[pick];
        const Rational sl = -1 / l->coeffs[pick];
        Row combined{std::vector<Rational>(variables), su * u->rhs + sl * l->rhs};
        for (std::size_t v = 0; v < variables; ++v) combined.coeffs[v] = su * u->coeffs[v] + sl * l->coeffs[v];
        combined.coeffs[pick] = 0;
        next.push_back(std::move(combined));
      }
    }
    stages.emplace_back(pick, std::move(current));
    eliminated[pick] = true;
    if (!compact(next)) return std::nullopt;
    peak = std::max(peak, next.size());
    current = std::move(next);
  }
  // All variables gone: compact() has already checked the residual 0 <= rhs rows.

  std::vector<Rational> x(variables, Rational(0));
  for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
    const std::size_t v = it->first;
    std::optional<Rational> lo, hi;
    for (const Row& row : it->second) {
      const Rational& a = row.coeffs[v];
      if (a == 0) continue;
      Rational rest = row.rhs;
      for (std::size_t u = 0; u < variables; ++u) {
        if (u != v && row.coeffs[u] != 0) rest -= row.coeffs[u] * x[u];
      }
      const Rational bound = rest / a;
      if (a > 0) {
        if (!hi || bound < *hi) hi = bound;
      } else if (!lo || bound > *lo) {
        lo = bound;
      }
    }
    if (lo && hi && *lo > *hi) throw std::logic_error("Fourier-Motzkin back-substitution found an empty interval");
    x[v] = lo ? *lo : (hi ? *hi : Rational(0));
  }

  if (stats != nullptr) {
    stats->peak_rows = peak;
    stats->eliminated = stages.size();
  }
  return x;
}

}  // namespace snr
