#include "hqcf/series.hpp"

#include <algorithm>

#include "hqcf/error.hpp"

namespace hqcf {

namespace {

std::vector<std::uint32_t> multiply_dense(const PrimeField& field, const std::vector<std::uint32_t>& a,
                                          const std::vector<std::uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  // Descending coefficient lists multiply like ascending ones; pad back the
  // zeros the polynomial trimmed.
  Polynomial pa(field, a), pb(field, b);
  auto prod = pa * pb;
  std::vector<std::uint32_t> out(prod.raw().begin(), prod.raw().end());
  out.resize(a.size() + b.size() - 1, 0);
  return out;
}

}  // namespace

LaurentSeries::LaurentSeries(const PrimeField& field, std::int64_t top,
                             std::vector<std::uint32_t> coeffs, std::int64_t floor, bool exact)
    : field_(field), top_(top), coeffs_(std::move(coeffs)), floor_(floor), exact_(exact) {
  normalize();
}

void LaurentSeries::normalize() {
  // Drop anything below floor, then leading zeros.
  if (!coeffs_.empty()) {
    const std::int64_t keep = top_ - floor_ + 1;
    if (keep <= 0) {
      coeffs_.clear();
    } else if (static_cast<std::int64_t>(coeffs_.size()) > keep) {
      coeffs_.resize(static_cast<std::size_t>(keep));
    }
  }
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
  top_ -= static_cast<std::int64_t>(lead);
  if (coeffs_.empty()) {
    top_ = floor_;
    return;
  }
  // Pad so that coeffs_ spans exactly [floor_, top_].
  coeffs_.resize(static_cast<std::size_t>(top_ - floor_ + 1), 0);
}

LaurentSeries LaurentSeries::zero(const PrimeField& field, std::int64_t floor) {
  return LaurentSeries(field, floor, {}, floor, false);
}

LaurentSeries LaurentSeries::from_polynomial(const Polynomial& f) {
  std::vector<std::uint32_t> c(f.raw().rbegin(), f.raw().rend());
  const std::int64_t top = static_cast<std::int64_t>(f.size()) - 1;
  return LaurentSeries(f.field(), top, std::move(c), 0, true);
}

LaurentSeries LaurentSeries::from_coefficients(const PrimeField& field, std::int64_t top,
                                               std::vector<FieldElement> coeffs, bool exact) {
  std::vector<std::uint32_t> c;
  c.reserve(coeffs.size());
  for (auto x : coeffs) c.push_back(x.value());
  const std::int64_t floor = top - static_cast<std::int64_t>(coeffs.size()) + 1;
  return LaurentSeries(field, top, std::move(c), floor, exact);
}

LaurentSeries LaurentSeries::from_rational(const Polynomial& num, const Polynomial& den,
                                           std::int64_t floor) {
  const std::int64_t shift = num.is_zero() ? 0 : num.degree().exponent();
  return (from_polynomial(num) * from_polynomial(den).inverse(floor - shift)).truncated(floor);
}

std::int64_t LaurentSeries::top() const {
  if (coeffs_.empty()) {
    throw Error(ErrorCode::invalid_argument, "series is zero to the known precision");
  }
  return top_;
}

AbsoluteDegree LaurentSeries::degree() const {
  if (coeffs_.empty()) return AbsoluteDegree::minus_infinity();
  return AbsoluteDegree(top_);
}

FieldElement LaurentSeries::leading() const {
  return {coeffs_.empty() ? 0u : coeffs_.front(), field_.characteristic()};
}

FieldElement LaurentSeries::coeff(std::int64_t e) const {
  if (e < floor_) {
    if (exact_) return field_.zero();
    throw Error(ErrorCode::insufficient_expansion, "coefficient below the known precision");
  }
  if (coeffs_.empty() || e > top_) return field_.zero();
  return {coeffs_[static_cast<std::size_t>(top_ - e)], field_.characteristic()};
}

LaurentSeries LaurentSeries::truncated(std::int64_t floor) const {
  if (floor <= floor_) {
    if (!exact_) return *this;
    LaurentSeries r = *this;
    r.exact_ = false;
    r.floor_ = floor;
    r.normalize();
    return r;
  }
  return LaurentSeries(field_, top_, coeffs_, floor, false);
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  const auto p = field_.characteristic();
  for (auto& c : r.coeffs_) c = c == 0 ? 0 : p - c;
  return r;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  std::int64_t floor;
  bool exact = a.exact_ && b.exact_;
  if (exact) {
    floor = std::min(a.floor_, b.floor_);
  } else if (a.exact_) {
    floor = b.floor_;
  } else if (b.exact_) {
    floor = a.floor_;
  } else {
    floor = std::max(a.floor_, b.floor_);
  }
  std::int64_t top = floor;
  if (!a.coeffs_.empty()) top = std::max(top, a.top_);
  if (!b.coeffs_.empty()) top = std::max(top, b.top_);
  if (top < floor) top = floor;
  std::vector<std::uint32_t> c(static_cast<std::size_t>(top - floor + 1), 0);
  const auto p = a.field_.characteristic();
  for (const auto* s : {&a, &b}) {
    for (std::size_t j = 0; j < s->coeffs_.size(); ++j) {
      const std::int64_t e = s->top_ - static_cast<std::int64_t>(j);
      if (e < floor) break;
      auto& slot = c[static_cast<std::size_t>(top - e)];
      slot = (slot + s->coeffs_[j]) % p;
    }
  }
  return LaurentSeries(a.field_, top, std::move(c), floor, exact);
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries operator*(const LaurentSeries& a, FieldElement c) {
  LaurentSeries r = a;
  const std::uint64_t v = c.value();
  const auto p = a.field_.characteristic();
  for (auto& x : r.coeffs_) x = static_cast<std::uint32_t>(x * v % p);
  r.normalize();
  return r;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  const bool exact = a.exact_ && b.exact_;
  // Top exponents used for error propagation; a zero-to-precision factor is
  // bounded by its floor.
  const std::int64_t ta = a.coeffs_.empty() ? a.floor_ : a.top_;
  const std::int64_t tb = b.coeffs_.empty() ? b.floor_ : b.top_;
  std::int64_t floor;
  if (exact) {
    floor = a.floor_ + b.floor_;
  } else {
    floor = std::numeric_limits<std::int64_t>::min();
    if (!a.exact_) floor = std::max(floor, a.floor_ + tb);
    if (!b.exact_) floor = std::max(floor, b.floor_ + ta);
  }
  if (a.coeffs_.empty() || b.coeffs_.empty()) return LaurentSeries::zero(a.field_, floor);
  auto prod = multiply_dense(a.field_, a.coeffs_, b.coeffs_);
  return LaurentSeries(a.field_, a.top_ + b.top_, std::move(prod), floor, exact);
}

LaurentSeries LaurentSeries::inverse(std::optional<std::int64_t> floor) const {
  if (coeffs_.empty()) throw Error(ErrorCode::invalid_argument, "inverse of a series that vanishes");
  std::int64_t out_floor;
  if (exact_) {
    if (!floor) throw Error(ErrorCode::invalid_argument, "inverse of an exact series needs a floor");
    out_floor = *floor;
  } else {
    // Relative precision is preserved.
    out_floor = floor_ - 2 * top_;
    if (floor) out_floor = std::max(out_floor, *floor);
  }
  const std::int64_t out_top = -top_;
  if (out_floor > out_top) return zero(field_, out_floor);
  const std::size_t n = static_cast<std::size_t>(out_top - out_floor + 1);
  const auto p = field_.characteristic();
  const std::uint64_t inv0 = FieldElement{coeffs_[0], p}.inverse().value();
  std::vector<std::uint32_t> b(n, 0);
  b[0] = static_cast<std::uint32_t>(inv0);
  for (std::size_t j = 1; j < n; ++j) {
    std::uint64_t acc = 0;
    const std::size_t lim = std::min(j, coeffs_.size() - 1);
    for (std::size_t i = 1; i <= lim; ++i) {
      acc += std::uint64_t{coeffs_[i]} * b[j - i];
      if ((i & 0xFFFF) == 0) acc %= p;
    }
    acc %= p;
    b[j] = static_cast<std::uint32_t>((p - acc) % p * inv0 % p);
  }
  return LaurentSeries(field_, out_top, std::move(b), out_floor, false);
}

LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) {
  if (b.exact_ && !a.exact_) {
    // Relative precision of the quotient follows a.
    const std::int64_t want = a.floor_ - (b.coeffs_.empty() ? 0 : b.top_);
    const std::int64_t ta = a.coeffs_.empty() ? a.floor_ : a.top_;
    return a * b.inverse(want - ta - 1);
  }
  if (b.exact_ && a.exact_) {
    throw Error(ErrorCode::invalid_argument, "exact quotient needs an explicit floor");
  }
  return a * b.inverse();
}

LaurentSeries LaurentSeries::frobenius() const {
  const std::int64_t p = field_.characteristic();
  const std::int64_t floor = exact_ ? p * floor_ : p * (floor_ - 1) + 1;
  if (coeffs_.empty()) return zero(field_, floor);
  std::vector<std::uint32_t> c((coeffs_.size() - 1) * static_cast<std::size_t>(p) + 1, 0);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) c[j * static_cast<std::size_t>(p)] = coeffs_[j];
  return LaurentSeries(field_, p * top_, std::move(c), floor, exact_);
}

LaurentSeries LaurentSeries::pow(std::uint64_t e) const {
  LaurentSeries acc = from_polynomial(Polynomial::constant(field_, field_.one()));
  LaurentSeries base = *this;
  while (e != 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return acc;
}

LaurentSeries::Truncation LaurentSeries::to_rational() const {
  const std::int64_t shift = std::max<std::int64_t>(0, -floor_);
  if (coeffs_.empty()) return {Polynomial(field_), static_cast<std::size_t>(shift)};
  std::vector<std::uint32_t> asc(static_cast<std::size_t>(top_ + shift + 1), 0);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const std::int64_t e = top_ - static_cast<std::int64_t>(j) + shift;
    if (e < 0) break;
    asc[static_cast<std::size_t>(e)] = coeffs_[j];
  }
  return {Polynomial(field_, std::move(asc)), static_cast<std::size_t>(shift)};
}

AbsoluteDegree first_difference(const LaurentSeries& a, const LaurentSeries& b) {
  LaurentSeries d = a - b;
  return d.degree();
}

}  // namespace hqcf
