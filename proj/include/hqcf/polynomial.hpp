#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "hqcf/field.hpp"

namespace hqcf {

/// |f| = |T|^deg f, kept as the exponent alone. The zero polynomial has
/// degree minus infinity, which compares below every integer.
class AbsoluteDegree {
 public:
  constexpr explicit AbsoluteDegree(std::int64_t exponent) : exponent_(exponent) {}

  static constexpr AbsoluteDegree minus_infinity() {
    return AbsoluteDegree(std::numeric_limits<std::int64_t>::min());
  }

  constexpr bool is_minus_infinity() const { return exponent_ == minus_infinity().exponent_; }
  std::int64_t exponent() const;

  constexpr auto operator<=>(const AbsoluteDegree&) const = default;

  friend AbsoluteDegree operator+(AbsoluteDegree a, AbsoluteDegree b) {
    if (a.is_minus_infinity() || b.is_minus_infinity()) return minus_infinity();
    return AbsoluteDegree(a.exponent_ + b.exponent_);
  }

 private:
  std::int64_t exponent_;
};

std::ostream& operator<<(std::ostream& os, AbsoluteDegree d);

/// Dense polynomial in F_p[T], coefficients ascending by degree with no
/// trailing zeros.
class Polynomial {
 public:
  explicit Polynomial(const PrimeField& field) : field_(field) {}
  Polynomial(const PrimeField& field, const std::vector<std::int64_t>& coeffs);
  Polynomial(const PrimeField& field, std::vector<std::uint32_t> reduced_coeffs);

  static Polynomial constant(const PrimeField& field, FieldElement c);
  static Polynomial monomial(const PrimeField& field, FieldElement c, std::size_t n);
  // The indeterminate T.
  static Polynomial variable(const PrimeField& field);

  const PrimeField& field() const { return field_; }
  std::uint32_t characteristic() const { return field_.characteristic(); }

  bool is_zero() const { return coeffs_.empty(); }
  AbsoluteDegree degree() const;
  // Number of stored coefficients, deg + 1 (0 for the zero polynomial).
  std::size_t size() const { return coeffs_.size(); }
  std::span<const std::uint32_t> raw() const { return coeffs_; }

  FieldElement coeff(std::size_t n) const;
  FieldElement leading() const;
  bool is_constant() const { return coeffs_.size() <= 1; }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(FieldElement c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, FieldElement c) { return a *= c; }
  friend Polynomial operator*(FieldElement c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

  Polynomial pow(std::uint64_t e) const;
  // f^p, computed as f(T^p) since the coefficients are fixed by Frobenius.
  Polynomial frobenius() const;
  Polynomial derivative() const;
  Polynomial monic() const;
  // f * T^n
  Polynomial shifted(std::size_t n) const;
  FieldElement evaluate(FieldElement x) const;

 private:
  void trim();

  PrimeField field_;
  std::vector<std::uint32_t> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& f);
// "9*T^3 + 8*T" style, terms descending, coefficients as residues.
std::string to_text(const Polynomial& f);

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

DivMod divmod(const Polynomial& f, const Polynomial& g);
Polynomial quotient(const Polynomial& f, const Polynomial& g);
Polynomial remainder(const Polynomial& f, const Polynomial& g);

/// Monic gcd; throws gcd_undefined when both inputs vanish.
Polynomial gcd_monic(const Polynomial& f, const Polynomial& g);

/// Primitive with zero constant term; throws when some exponent n has p | n+1.
Polynomial formal_integral(const Polynomial& f);

bool is_odd_polynomial(const Polynomial& f);
bool is_even_polynomial(const Polynomial& f);

// Exposed for the benchmarks and the multiplication property tests.
Polynomial multiply_schoolbook(const Polynomial& a, const Polynomial& b);

/// Polynomial over F_{p^2}; only what the T -> vT substitution needs.
class ExtPolynomial {
 public:
  explicit ExtPolynomial(const Polynomial& base);
  explicit ExtPolynomial(std::vector<ExtFieldElement> coeffs);

  const std::vector<ExtFieldElement>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  ExtPolynomial& operator*=(const ExtFieldElement& c);
  friend ExtPolynomial operator*(ExtPolynomial a, const ExtFieldElement& c) { return a *= c; }
  friend bool operator==(const ExtPolynomial&, const ExtPolynomial&) = default;

  bool in_base_field() const;
  // Down-cast; throws not_in_base_field if any coefficient has a1 != 0.
  Polynomial to_base(const PrimeField& field) const;

 private:
  void trim();

  std::vector<ExtFieldElement> coeffs_;
};

/// f(vT): the coefficient of T^n is multiplied by v^n.
ExtPolynomial scale_variable(const ExtPolynomial& f, const ExtFieldElement& v);
ExtPolynomial scale_variable(const Polynomial& f, const ExtFieldElement& v);

}  // namespace hqcf
