#pragma once

#include <span>
#include <vector>

#include "hqcf/polynomial.hpp"

namespace hqcf {

/// Finite prefix [a_1, ..., a_n] of a continued fraction in F_p(T) or F(p).
struct CFExpansion {
  PrimeField field;
  std::vector<Polynomial> partial_quotients;
  // The expansion is the whole value (rational input, or an algebraic root that
  // turned out to be rational), not just a prefix.
  bool complete = false;
  // a_1 had degree 0 (the integer part of a rational input was a constant).
  bool constant_leading_quotient = false;

  std::size_t size() const { return partial_quotients.size(); }
  const Polynomial& operator[](std::size_t n) const { return partial_quotients.at(n - 1); }
};

/// x_n, y_n for n = 0..N, with x_0 = 1, x_1 = a_1, y_0 = 0, y_1 = 1.
struct Continuants {
  std::vector<Polynomial> x;
  std::vector<Polynomial> y;
};

Continuants continuants(const PrimeField& field, std::span<const Polynomial> quotients);
Continuants continuants(const CFExpansion& cf);

/// x_n y_{n-1} - x_{n-1} y_n == (-1)^n for every n in 1..N.
bool continuant_determinant_holds(const Continuants& k);

/// Euclidean expansion of num/den; quotients are kept exactly as divmod returns
/// them. Throws not_a_rational_function when den is zero.
CFExpansion rational_to_cf(const Polynomial& num, const Polynomial& den);

/// Numerator and denominator x_n, y_n of [a_1, ..., a_n].
struct RationalFunction {
  Polynomial num;
  Polynomial den;
};
RationalFunction evaluate_cf(const PrimeField& field, std::span<const Polynomial> quotients);

/// [u_1, ..., u_m] = u_1 + 1/[u_2, ..., u_m], folded from the right. Throws
/// scalar_cf_undefined when a proper tail vanishes; a zero overall value is
/// returned as is so the caller can decide whether it needed F_p^*.
FieldElement eval_scalar_cf(std::span<const FieldElement> entries);

/// Coefficients of the fractional linear map (a z + b) / (c z + d).
struct Mobius {
  Polynomial a, b, c, d;
};

/// alpha_{l+1} as a map of alpha: (-y_{l-1} alpha + x_{l-1}) / (y_l alpha - x_l).
Mobius tail_from_convergents(const Continuants& k, std::size_t l);

/// alpha as a map of alpha_{l+1}: (x_l z + x_{l-1}) / (y_l z + y_{l-1}).
Mobius head_from_convergents(const Continuants& k, std::size_t l);

Mobius compose(const Mobius& outer, const Mobius& inner);

}  // namespace hqcf
