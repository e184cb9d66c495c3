#include "hqcf/field.hpp"

#include <ostream>
#include <string>

#include "hqcf/error.hpp"

namespace hqcf {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid argument";
    case ErrorCode::not_prime: return "modulus is not an odd prime";
    case ErrorCode::rational_not_embeddable: return "rational not embeddable";
    case ErrorCode::division_by_zero: return "division by zero polynomial";
    case ErrorCode::gcd_undefined: return "gcd undefined";
    case ErrorCode::non_integrable_monomial: return "non-integrable monomial";
    case ErrorCode::degenerate_scaling: return "degenerate scaling";
    case ErrorCode::not_in_base_field: return "coefficient outside F_p";
    case ErrorCode::not_a_rational_function: return "not a rational function";
    case ErrorCode::scalar_cf_undefined: return "scalar CF undefined";
    case ErrorCode::hypothesis_broken: return "hypothesis broken";
    case ErrorCode::excluded_by_hypothesis: return "excluded by hypothesis";
    case ErrorCode::delta_undefined: return "delta undefined";
    case ErrorCode::not_perfect_spec: return "not a perfect-expansion spec";
    case ErrorCode::internal_contradiction: return "internal contradiction";
    case ErrorCode::insufficient_expansion: return "insufficient expansion";
    case ErrorCode::wrong_residue_class: return "wrong residue class";
    case ErrorCode::derivation_inapplicable: return "derivation inapplicable";
    case ErrorCode::pattern_mismatch: return "pattern mismatch";
    case ErrorCode::parse_error: return "parse error";
  }
  return "unknown error";
}

namespace {

void require_same_field(FieldElement a, FieldElement b) {
  if (a.modulus() != b.modulus()) {
    throw Error(ErrorCode::invalid_argument, "mixing elements of different prime fields");
  }
}

FieldElement smallest_nonresidue(std::uint32_t p) {
  FieldElement d{2, p};
  while (legendre(d) != -1) d += FieldElement{1, p};
  return d;
}

std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
  auto r = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

}  // namespace

FieldElement FieldElement::operator-() const {
  return {value_ == 0 ? 0 : modulus_ - value_, modulus_};
}

FieldElement& FieldElement::operator+=(FieldElement rhs) {
  require_same_field(*this, rhs);
  value_ += rhs.value_;
  if (value_ >= modulus_) value_ -= modulus_;
  return *this;
}

FieldElement& FieldElement::operator-=(FieldElement rhs) {
  require_same_field(*this, rhs);
  value_ = value_ >= rhs.value_ ? value_ - rhs.value_ : value_ + modulus_ - rhs.value_;
  return *this;
}

FieldElement& FieldElement::operator*=(FieldElement rhs) {
  require_same_field(*this, rhs);
  value_ = static_cast<std::uint32_t>(std::uint64_t{value_} * rhs.value_ % modulus_);
  return *this;
}

FieldElement& FieldElement::operator/=(FieldElement rhs) { return *this *= rhs.inverse(); }

FieldElement FieldElement::inverse() const {
  if (value_ == 0) throw Error(ErrorCode::invalid_argument, "zero has no inverse");
  // Extended Euclid on (value, p).
  std::int64_t r0 = modulus_, r1 = value_, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  return {reduce(s0, modulus_), modulus_};
}

FieldElement FieldElement::pow(std::int64_t e) const {
  FieldElement base = e < 0 ? inverse() : *this;
  std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
  FieldElement acc{1, modulus_};
  while (n != 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

std::int64_t FieldElement::centered() const noexcept {
  return value_ > modulus_ / 2 ? std::int64_t{value_} - modulus_ : std::int64_t{value_};
}

std::ostream& operator<<(std::ostream& os, FieldElement x) { return os << x.value(); }

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::int64_t p) {
  if (p < 3 || p > max_modulus || !is_prime(p)) {
    throw Error(ErrorCode::not_prime,
                "modulus " + std::to_string(p) + " is not an odd prime below " +
                    std::to_string(max_modulus + 1));
  }
  p_ = static_cast<std::uint32_t>(p);
  nonresidue_ = smallest_nonresidue(p_).value();
}

FieldElement PrimeField::operator()(std::int64_t value) const { return {reduce(value, p_), p_}; }

FieldElement PrimeField::embed_rational(std::int64_t num, std::int64_t den) const {
  FieldElement d = (*this)(den);
  if (d.is_zero()) {
    throw Error(ErrorCode::rational_not_embeddable,
                "rational not embeddable: " + std::to_string(num) + "/" + std::to_string(den) +
                    " mod " + std::to_string(p_));
  }
  return (*this)(num) / d;
}

int legendre(FieldElement x) {
  if (x.is_zero()) return 0;
  return x.pow((x.modulus() - 1) / 2).value() == 1 ? 1 : -1;
}

FieldElement sqrt_residue(FieldElement x) {
  const std::uint32_t p = x.modulus();
  if (x.is_zero()) return x;
  if (legendre(x) != 1) throw Error(ErrorCode::invalid_argument, "sqrt of a non-residue in F_p");

  // p - 1 = q * 2^s with q odd.
  std::uint32_t q = p - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  FieldElement z = smallest_nonresidue(p);

  FieldElement c = z.pow(q);
  FieldElement r = x.pow((q + 1) / 2);
  FieldElement t = x.pow(q);
  int m = s;
  const FieldElement one{1, p};
  while (t != one) {
    int i = 0;
    FieldElement t2 = t;
    while (t2 != one) {
      t2 *= t2;
      ++i;
    }
    FieldElement b = c;
    for (int j = 0; j < m - i - 1; ++j) b *= b;
    r *= b;
    c = b * b;
    t *= c;
    m = i;
  }
  return r.value() <= p / 2 ? r : -r;
}

ExtFieldElement::ExtFieldElement(FieldElement base)
    : ExtFieldElement(base, FieldElement{0, base.modulus()}) {}

ExtFieldElement::ExtFieldElement(FieldElement a0, FieldElement a1)
    : a0_(a0), a1_(a1), d_(smallest_nonresidue(a0.modulus())) {
  if (a0.modulus() != a1.modulus()) {
    throw Error(ErrorCode::invalid_argument, "mixing elements of different prime fields");
  }
}

ExtFieldElement ExtFieldElement::operator-() const {
  ExtFieldElement r = *this;
  r.a0_ = -a0_;
  r.a1_ = -a1_;
  return r;
}

ExtFieldElement& ExtFieldElement::operator+=(const ExtFieldElement& rhs) {
  a0_ += rhs.a0_;
  a1_ += rhs.a1_;
  return *this;
}

ExtFieldElement& ExtFieldElement::operator-=(const ExtFieldElement& rhs) {
  a0_ -= rhs.a0_;
  a1_ -= rhs.a1_;
  return *this;
}

ExtFieldElement& ExtFieldElement::operator*=(const ExtFieldElement& rhs) {
  FieldElement r0 = a0_ * rhs.a0_ + d_ * a1_ * rhs.a1_;
  FieldElement r1 = a0_ * rhs.a1_ + a1_ * rhs.a0_;
  a0_ = r0;
  a1_ = r1;
  return *this;
}

ExtFieldElement ExtFieldElement::inverse() const {
  // (a0 + a1 w)^-1 = (a0 - a1 w) / (a0^2 - d a1^2); the norm is nonzero for x != 0.
  FieldElement norm = a0_ * a0_ - d_ * a1_ * a1_;
  if (norm.is_zero()) throw Error(ErrorCode::invalid_argument, "zero has no inverse");
  FieldElement n = norm.inverse();
  ExtFieldElement r = *this;
  r.a0_ = a0_ * n;
  r.a1_ = -a1_ * n;
  return r;
}

ExtFieldElement ExtFieldElement::pow(std::int64_t e) const {
  ExtFieldElement base = e < 0 ? inverse() : *this;
  std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
  ExtFieldElement acc{FieldElement{1, a0_.modulus()}};
  while (n != 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

FieldElement ExtFieldElement::to_base() const {
  if (!a1_.is_zero()) {
    throw Error(ErrorCode::not_in_base_field, "element of F_p^2 does not lie in F_p");
  }
  return a0_;
}

std::ostream& operator<<(std::ostream& os, const ExtFieldElement& x) {
  if (x.in_base_field()) return os << x.a0();
  return os << x.a0() << "+" << x.a1() << "*w";
}

ExtFieldElement sqrt_in_ext(FieldElement x) {
  if (legendre(x) >= 0) return ExtFieldElement{sqrt_residue(x)};
  PrimeField field(x.modulus());
  FieldElement s = sqrt_residue(x / field.nonresidue());
  return ExtFieldElement{field.zero(), s};
}

}  // namespace hqcf
