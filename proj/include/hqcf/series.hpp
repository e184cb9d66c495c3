#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hqcf/polynomial.hpp"

namespace hqcf {

/// Element of F(p) = F_p((1/T)) known on the exponent range [floor, top].
///
/// Non-exact series are known only down to `floor`: the true value differs by
/// a term of degree < floor. An exact series has no terms below floor. A
/// series whose known coefficients all vanish is "zero to precision" and has
/// no top.
class LaurentSeries {
 public:
  static LaurentSeries zero(const PrimeField& field, std::int64_t floor);
  static LaurentSeries from_polynomial(const Polynomial& f);
  /// c_k T^k for k = top, top-1, ..., top - coeffs.size() + 1.
  static LaurentSeries from_coefficients(const PrimeField& field, std::int64_t top,
                                         std::vector<FieldElement> coeffs, bool exact);
  /// num/den expanded down to exponent floor.
  static LaurentSeries from_rational(const Polynomial& num, const Polynomial& den,
                                     std::int64_t floor);

  const PrimeField& field() const { return field_; }
  bool exact() const { return exact_; }
  std::int64_t floor() const { return floor_; }
  bool is_zero_to_precision() const { return coeffs_.empty(); }
  // Exponent of the leading coefficient; throws on a zero-to-precision series.
  std::int64_t top() const;
  AbsoluteDegree degree() const;
  FieldElement leading() const;
  // Coefficient of T^e; e must be >= floor unless exact.
  FieldElement coeff(std::int64_t e) const;
  // Number of known coefficients counted from the leading one.
  std::size_t precision() const { return coeffs_.size(); }

  LaurentSeries truncated(std::int64_t floor) const;

  LaurentSeries operator-() const;
  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a, FieldElement c);
  friend LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b);

  /// 1/a. For an exact input the expansion stops at `floor`, which is then required.
  LaurentSeries inverse(std::optional<std::int64_t> floor = std::nullopt) const;
  LaurentSeries frobenius() const;
  LaurentSeries pow(std::uint64_t e) const;

  /// Numerator N and exponent e with truncation = N / T^e, e >= 0.
  struct Truncation {
    Polynomial numerator;
    std::size_t denominator_exponent;
  };
  Truncation to_rational() const;

  /// The highest exponent at which the two series differ, or -infinity when
  /// they agree on the common known range.
  friend AbsoluteDegree first_difference(const LaurentSeries& a, const LaurentSeries& b);

 private:
  LaurentSeries(const PrimeField& field, std::int64_t top, std::vector<std::uint32_t> coeffs,
                std::int64_t floor, bool exact);
  void normalize();

  PrimeField field_;
  std::int64_t top_ = 0;
  std::vector<std::uint32_t> coeffs_;  // coeffs_[j] multiplies T^(top_ - j)
  std::int64_t floor_ = 0;
  bool exact_ = false;
};

}  // namespace hqcf
