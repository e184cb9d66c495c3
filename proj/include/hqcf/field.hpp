#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>

namespace hqcf {

/// Element of the prime field F_p. Carries its modulus so that values can be
/// passed around without a separate context.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(std::uint32_t value, std::uint32_t modulus)
      : value_(value % modulus), modulus_(modulus) {}

  std::uint32_t value() const noexcept { return value_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return value_ == 0; }

  FieldElement operator-() const;
  FieldElement& operator+=(FieldElement rhs);
  FieldElement& operator-=(FieldElement rhs);
  FieldElement& operator*=(FieldElement rhs);
  FieldElement& operator/=(FieldElement rhs);

  friend FieldElement operator+(FieldElement a, FieldElement b) { return a += b; }
  friend FieldElement operator-(FieldElement a, FieldElement b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, FieldElement b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, FieldElement b) { return a /= b; }
  friend bool operator==(FieldElement a, FieldElement b) = default;

  FieldElement inverse() const;
  // Negative exponents invert first.
  FieldElement pow(std::int64_t e) const;

  // Signed representative in (-p/2, p/2].
  std::int64_t centered() const noexcept;

 private:
  std::uint32_t value_ = 0;
  std::uint32_t modulus_ = 1;
};

std::ostream& operator<<(std::ostream& os, FieldElement x);

/// F_p for an odd prime p. Construction validates the modulus; copies are cheap.
class PrimeField {
 public:
  // Largest supported modulus: coefficient products must fit 32 bits.
  static constexpr std::uint32_t max_modulus = 65521;

  explicit PrimeField(std::int64_t p);

  std::uint32_t characteristic() const noexcept { return p_; }

  FieldElement zero() const { return {0, p_}; }
  FieldElement one() const { return {1, p_}; }
  FieldElement operator()(std::int64_t value) const;

  /// num / den reduced mod p.
  FieldElement embed_rational(std::int64_t num, std::int64_t den) const;

  // Smallest positive quadratic non-residue.
  FieldElement nonresidue() const noexcept { return {nonresidue_, p_}; }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
  std::uint32_t nonresidue_;
};

bool is_prime(std::int64_t n);

/// Euler criterion: 0 for zero, 1 for squares, -1 otherwise.
int legendre(FieldElement x);

/// Square root in F_p by Tonelli-Shanks; requires legendre(x) >= 0. Returns the
/// root with representative in [0, p/2].
FieldElement sqrt_residue(FieldElement x);

/// Element a0 + a1*w of F_{p^2} with w^2 = d, d the smallest non-residue.
class ExtFieldElement {
 public:
  ExtFieldElement() = default;
  explicit ExtFieldElement(FieldElement base);
  ExtFieldElement(FieldElement a0, FieldElement a1);

  FieldElement a0() const noexcept { return a0_; }
  FieldElement a1() const noexcept { return a1_; }
  FieldElement nonresidue() const noexcept { return d_; }
  bool in_base_field() const noexcept { return a1_.is_zero(); }
  bool is_zero() const noexcept { return a0_.is_zero() && a1_.is_zero(); }

  ExtFieldElement operator-() const;
  ExtFieldElement& operator+=(const ExtFieldElement& rhs);
  ExtFieldElement& operator-=(const ExtFieldElement& rhs);
  ExtFieldElement& operator*=(const ExtFieldElement& rhs);

  friend ExtFieldElement operator+(ExtFieldElement a, const ExtFieldElement& b) { return a += b; }
  friend ExtFieldElement operator-(ExtFieldElement a, const ExtFieldElement& b) { return a -= b; }
  friend ExtFieldElement operator*(ExtFieldElement a, const ExtFieldElement& b) { return a *= b; }
  friend bool operator==(const ExtFieldElement&, const ExtFieldElement&) = default;

  ExtFieldElement inverse() const;
  ExtFieldElement pow(std::int64_t e) const;

  // Throws Error(not_in_base_field) when a1 != 0.
  FieldElement to_base() const;

 private:
  FieldElement a0_;
  FieldElement a1_;
  FieldElement d_;
};

std::ostream& operator<<(std::ostream& os, const ExtFieldElement& x);

/// A square root of x in F_p when x is a residue, otherwise w*s with s the
/// canonical root of x/d.
ExtFieldElement sqrt_in_ext(FieldElement x);

}  // namespace hqcf
