#pragma once

#include <optional>
#include <vector>

#include "hqcf/continued_fraction.hpp"
#include "hqcf/polynomial.hpp"
#include "hqcf/series.hpp"

namespace hqcf {

/// P(X) = sum_i coeffs[i] X^i with coefficients in F_p[T].
struct AlgebraicState {
  std::vector<Polynomial> coeffs;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  const PrimeField& field() const { return coeffs.at(0).field(); }
};

/// -X^4/12 - T X^3 + X^2 + 1, whose root in F(p)^+ is the inverse of the root
/// of x^4 + x^2 - T x - 1/12.
AlgebraicState quartic_state(const PrimeField& field);

/// |a_i| < |a_{n-1}| for all i != n-1, and a_n != 0.
bool check_star(const AlgebraicState& state);

struct MkaouarStep {
  Polynomial quotient;
  // Empty when P(q) = 0: the root equals q and the expansion ends.
  std::optional<AlgebraicState> next;
};

/// q = -[a_{n-1}/a_n] and the state of X^n P(q + 1/X).
MkaouarStep mkaouar_step(const AlgebraicState& state);

struct ExpandOptions {
  // Divide the state by the gcd of its coefficients after each step.
  bool reduce_content = true;
};

/// First `count` partial quotients of the root of P in F(p)^+.
CFExpansion expand_root(const AlgebraicState& state, std::size_t count, ExpandOptions options = {});

/// Same expansion for the quartic, through the degree-4 coefficient recurrences
/// written out explicitly.
CFExpansion expand_quartic_recurrence(const PrimeField& field, std::size_t count);

/// The root u of x^4 + x^2 - T x - 1/12 as a series in 1/T, `terms` terms
/// from T^-1 down to T^-terms.
LaurentSeries series_root_quartic(const PrimeField& field, std::size_t terms);

/// Continued fraction of a series, keeping only the partial quotients that the
/// known precision certifies (all of them when the series is exact).
CFExpansion cf_from_series(const LaurentSeries& s);

}  // namespace hqcf
