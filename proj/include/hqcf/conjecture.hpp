#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "hqcf/continued_fraction.hpp"
#include "hqcf/error.hpp"
#include "hqcf/hyperquadratic.hpp"
#include "hqcf/polynomial.hpp"

namespace hqcf {

/// alpha^n = a alpha^3 + b alpha^2 + c alpha + d, alpha the inverse root of the quartic.
struct PowerBasisElement {
  Polynomial a, b, c, d;
  friend bool operator==(const PowerBasisElement&, const PowerBasisElement&) = default;
};

/// Multiplies by alpha and reduces with alpha^4 = -12 (T alpha^3 - alpha^2 - 1).
PowerBasisElement times_alpha(const PowerBasisElement& x);
/// alpha^n for n >= 4.
PowerBasisElement power_reduce(const PrimeField& field, std::uint64_t n);

struct DerivationTrace {
  std::uint32_t p = 0;
  std::uint32_t l = 0;
  std::uint32_t k = 0;
  PowerBasisElement alpha_p, alpha_p1;  // alpha^p, alpha^(p+1)
  Polynomial U, V;                      // from a_p, a_{p+1} before the gcd
  Polynomial delta;                     // a_p = delta a*_p, a_{p+1} = delta a*_{p+1}
  Polynomial a_star_p, a_star_p1, U_star, V_star, W;
  std::vector<Polynomial> prefix;       // a_1..a_l from the Mkaouar expansion
  Polynomial x_l, y_l, x_lm1, y_lm1;
  // deg(a*_p alpha^p + V*) and deg(a*_p W), and deg(alpha - a*_{p+1}/a*_p).
  std::int64_t degree_denominator = 0, degree_bound = 0, convergent_error = 0;
  // The relation alpha^p = leading alpha_{l+1} + remainder.
  Polynomial leading, remainder;
  FieldElement epsilon1, epsilon2, a;
};

/// Runs the Frobenius-relation derivation for p = 1 mod 3, p >= 7.
DerivationTrace derive_frobenius_relation(const PrimeField& field);

struct NormalizedRelation {
  ExtFieldElement v;  // v^2 = -a
  FieldElement epsilon1, epsilon2;
  std::vector<Polynomial> b_prefix;
  std::vector<FieldElement> lambdas;  // b_i = lambda_i T
};

/// v^((-1)^(n+1)) f(vT), down-cast to F_p.
Polynomial alpha_to_beta(const Polynomial& f, const ExtFieldElement& v, std::size_t n);
/// v^((-1)^n) f(T/v), the inverse of alpha_to_beta.
Polynomial beta_to_alpha(const Polynomial& f, const ExtFieldElement& v, std::size_t n);

NormalizedRelation normalize_to_beta(const DerivationTrace& trace);

struct Verdict {
  std::uint32_t p = 0;
  bool pass = false;
  std::string stage;    // stage reached, or the one that failed
  std::string message;
  std::optional<ErrorCode> error;
  std::optional<FieldElement> epsilon1, epsilon2, a;
  bool a_equals_8_27 = false;
  std::size_t compared_terms = 0;
  std::optional<std::size_t> first_mismatch;  // 1-based
  std::optional<AbsoluteDegree> residual;
  std::uint32_t l = 0, k = 0, k_prime = 0;
};

/// Derivation, normalization, the spec checks and a comparison of n generated
/// partial quotients against the Mkaouar expansion.
Verdict verify_conjecture1(const PrimeField& field, std::size_t n);

/// alpha^(p^2) = e1 P_{k',a} alpha_{l+1} + e2 Q_{k,a}^p for p = 2 mod 3.
/// `l_offset` moves l away from (p+1)^2/3 for control runs.
Verdict verify_conjecture2(const PrimeField& field, std::size_t n, std::int64_t l_offset = 0);

using Rational = boost::rational<std::int64_t>;

/// Closed-form nu_0 for a perfect expansion with all initial indices zero,
/// or for l = k = 1 with a_1 = lambda_1 A_{i,1}. Empty otherwise.
std::optional<Rational> nu0_closed_form(std::uint32_t p, std::uint32_t l, std::uint32_t k,
                                        const std::vector<std::uint32_t>& initial_indices);

struct ExponentReport {
  std::size_t window = 0;
  // max of deg a_{n+1} / (deg a_1 + ... + deg a_n) over 1 <= n <= window
  Rational nu0_empirical;
  std::size_t argmax = 0;
  // the same maximum restricted to window/2 < n <= window
  Rational nu0_tail;
  std::size_t tail_argmax = 0;
  std::optional<Rational> nu0_closed;
  Rational nu() const { return Rational(2) + (nu0_closed ? *nu0_closed : nu0_empirical); }
};

ExponentReport approximation_exponent(const CFExpansion& cf, std::size_t window,
                                      std::optional<Rational> closed = std::nullopt);

}  // namespace hqcf
