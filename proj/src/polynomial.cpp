#include "hqcf/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "hqcf/error.hpp"

namespace hqcf {

namespace {

constexpr std::size_t kKaratsubaThreshold = 64;

using Coeffs = std::vector<std::uint32_t>;

// out[0 .. n+m-1) = a * b, schoolbook. Values are < 2^16 so a product fits in
// 32 bits and a 64-bit accumulator absorbs 2^32 of them before overflowing.
void mul_basecase(const std::uint32_t* a, std::size_t n, const std::uint32_t* b, std::size_t m,
                  std::uint32_t* out, std::uint32_t p) {
  if (n == 0 || m == 0) return;
  std::vector<std::uint64_t> acc(n + m - 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t ai = a[i];
    if (ai == 0) continue;
    for (std::size_t j = 0; j < m; ++j) acc[i + j] += ai * b[j];
  }
  for (std::size_t i = 0; i < acc.size(); ++i) out[i] = static_cast<std::uint32_t>(acc[i] % p);
}

void add_into(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t s = dst[i] + src[i];
    dst[i] = s >= p ? s - p : s;
  }
}

void sub_into(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = dst[i] >= src[i] ? dst[i] - src[i] : dst[i] + p - src[i];
}

// Both operands have length n; out has length 2n - 1.
void karatsuba(const std::uint32_t* a, const std::uint32_t* b, std::size_t n, std::uint32_t* out,
               std::uint32_t p) {
  if (n <= kKaratsubaThreshold) {
    mul_basecase(a, n, b, n, out, p);
    return;
  }
  const std::size_t lo = n / 2;
  const std::size_t hi = n - lo;  // hi >= lo

  std::fill(out, out + 2 * n - 1, 0u);
  Coeffs z0(2 * lo - 1), z2(2 * hi - 1), z1(2 * hi - 1);
  karatsuba(a, b, lo, z0.data(), p);
  karatsuba(a + lo, b + lo, hi, z2.data(), p);

  Coeffs sa(a + lo, a + n), sb(b + lo, b + n);
  add_into(sa.data(), a, lo, p);
  add_into(sb.data(), b, lo, p);
  karatsuba(sa.data(), sb.data(), hi, z1.data(), p);
  sub_into(z1.data(), z0.data(), z0.size(), p);
  sub_into(z1.data(), z2.data(), z2.size(), p);

  add_into(out, z0.data(), z0.size(), p);
  add_into(out + lo, z1.data(), z1.size(), p);
  add_into(out + 2 * lo, z2.data(), z2.size(), p);
}

Coeffs multiply(const Coeffs& a, const Coeffs& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  const Coeffs& lng = a.size() >= b.size() ? a : b;
  const Coeffs& sht = a.size() >= b.size() ? b : a;
  Coeffs out(lng.size() + sht.size() - 1, 0);
  if (sht.size() <= kKaratsubaThreshold) {
    mul_basecase(lng.data(), lng.size(), sht.data(), sht.size(), out.data(), p);
    return out;
  }
  // Cut the longer operand into blocks of the shorter one's length.
  const std::size_t m = sht.size();
  Coeffs block(m), prod(2 * m - 1);
  for (std::size_t start = 0; start < lng.size(); start += m) {
    const std::size_t len = std::min(m, lng.size() - start);
    std::fill(block.begin(), block.end(), 0u);
    std::copy(lng.begin() + start, lng.begin() + start + len, block.begin());
    karatsuba(block.data(), sht.data(), m, prod.data(), p);
    const std::size_t used = std::min(prod.size(), out.size() - start);
    add_into(out.data() + start, prod.data(), used, p);
  }
  return out;
}

}  // namespace

std::int64_t AbsoluteDegree::exponent() const {
  if (is_minus_infinity()) throw Error(ErrorCode::invalid_argument, "degree of zero is -infinity");
  return exponent_;
}

std::ostream& operator<<(std::ostream& os, AbsoluteDegree d) {
  if (d.is_minus_infinity()) return os << "-inf";
  return os << d.exponent();
}

Polynomial::Polynomial(const PrimeField& field, const std::vector<std::int64_t>& coeffs)
    : field_(field) {
  coeffs_.reserve(coeffs.size());
  for (auto c : coeffs) coeffs_.push_back(field(c).value());
  trim();
}

Polynomial::Polynomial(const PrimeField& field, std::vector<std::uint32_t> reduced_coeffs)
    : field_(field), coeffs_(std::move(reduced_coeffs)) {
  for (auto& c : coeffs_) c %= field.characteristic();
  trim();
}

Polynomial Polynomial::constant(const PrimeField& field, FieldElement c) {
  return monomial(field, c, 0);
}

Polynomial Polynomial::monomial(const PrimeField& field, FieldElement c, std::size_t n) {
  Polynomial f(field);
  if (!c.is_zero()) {
    f.coeffs_.assign(n + 1, 0);
    f.coeffs_[n] = c.value();
  }
  return f;
}

Polynomial Polynomial::variable(const PrimeField& field) { return monomial(field, field.one(), 1); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

AbsoluteDegree Polynomial::degree() const {
  if (coeffs_.empty()) return AbsoluteDegree::minus_infinity();
  return AbsoluteDegree(static_cast<std::int64_t>(coeffs_.size()) - 1);
}

FieldElement Polynomial::coeff(std::size_t n) const {
  return {n < coeffs_.size() ? coeffs_[n] : 0u, characteristic()};
}

FieldElement Polynomial::leading() const {
  return {coeffs_.empty() ? 0u : coeffs_.back(), characteristic()};
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  const auto p = characteristic();
  for (auto& c : r.coeffs_) c = c == 0 ? 0 : p - c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  add_into(coeffs_.data(), rhs.coeffs_.data(), rhs.coeffs_.size(), characteristic());
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  sub_into(coeffs_.data(), rhs.coeffs_.data(), rhs.coeffs_.size(), characteristic());
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r(a.field_);
  r.coeffs_ = multiply(a.coeffs_, b.coeffs_, a.characteristic());
  r.trim();
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial& Polynomial::operator*=(FieldElement c) {
  const std::uint64_t v = c.value();
  const auto p = characteristic();
  for (auto& x : coeffs_) x = static_cast<std::uint32_t>(x * v % p);
  trim();
  return *this;
}

Polynomial multiply_schoolbook(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field());
  std::vector<std::uint32_t> out(a.size() + b.size() - 1);
  mul_basecase(a.raw().data(), a.size(), b.raw().data(), b.size(), out.data(), a.characteristic());
  return Polynomial(a.field(), std::move(out));
}

Polynomial Polynomial::pow(std::uint64_t e) const {
  Polynomial acc = constant(field_, field_.one());
  Polynomial base = *this;
  while (e != 0) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return acc;
}

Polynomial Polynomial::frobenius() const {
  if (coeffs_.empty()) return *this;
  const std::size_t p = characteristic();
  Polynomial r(field_);
  r.coeffs_.assign((coeffs_.size() - 1) * p + 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i * p] = coeffs_[i];
  return r;
}

Polynomial Polynomial::derivative() const {
  Polynomial r(field_);
  if (coeffs_.size() <= 1) return r;
  r.coeffs_.resize(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    r.coeffs_[i - 1] = (FieldElement{coeffs_[i], characteristic()} *
                        field_(static_cast<std::int64_t>(i))).value();
  }
  r.trim();
  return r;
}

Polynomial Polynomial::monic() const {
  if (coeffs_.empty()) return *this;
  return *this * leading().inverse();
}

Polynomial Polynomial::shifted(std::size_t n) const {
  if (coeffs_.empty() || n == 0) return *this;
  Polynomial r(field_);
  r.coeffs_.assign(n, 0);
  r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return r;
}

FieldElement Polynomial::evaluate(FieldElement x) const {
  FieldElement acc = field_.zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + FieldElement{*it, characteristic()};
  }
  return acc;
}

std::string to_text(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = f.size(); i-- > 0;) {
    const auto c = f.raw()[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << "*";
    os << "T";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << to_text(f); }

DivMod divmod(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw Error(ErrorCode::division_by_zero, "division by zero polynomial");
  const auto& field = f.field();
  const std::uint64_t p = f.characteristic();
  if (f.size() < g.size()) return {Polynomial(field), f};

  std::vector<std::uint32_t> rem(f.raw().begin(), f.raw().end());
  std::vector<std::uint32_t> quo(f.size() - g.size() + 1, 0);
  const auto gr = g.raw();
  const std::uint64_t inv_lc = g.leading().inverse().value();
  const std::size_t m = g.size();
  for (std::size_t d = quo.size(); d-- > 0;) {
    const std::uint64_t top = rem[d + m - 1];
    if (top == 0) continue;
    const std::uint64_t c = top * inv_lc % p;
    quo[d] = static_cast<std::uint32_t>(c);
    const std::uint64_t neg_c = p - c;
    for (std::size_t j = 0; j < m; ++j) {
      rem[d + j] = static_cast<std::uint32_t>((rem[d + j] + neg_c * gr[j]) % p);
    }
  }
  rem.resize(m - 1);
  return {Polynomial(field, std::move(quo)), Polynomial(field, std::move(rem))};
}

Polynomial quotient(const Polynomial& f, const Polynomial& g) { return divmod(f, g).quotient; }
Polynomial remainder(const Polynomial& f, const Polynomial& g) { return divmod(f, g).remainder; }

Polynomial gcd_monic(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() && g.is_zero()) throw Error(ErrorCode::gcd_undefined, "gcd undefined");
  Polynomial a = f, b = g;
  while (!b.is_zero()) {
    Polynomial r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial formal_integral(const Polynomial& f) {
  const auto& field = f.field();
  std::vector<std::uint32_t> out(f.size() + 1, 0);
  for (std::size_t n = 0; n < f.size(); ++n) {
    if (f.raw()[n] == 0) continue;
    FieldElement np1 = field(static_cast<std::int64_t>(n + 1));
    if (np1.is_zero()) {
      throw Error(ErrorCode::non_integrable_monomial,
                  "non-integrable monomial T^" + std::to_string(n));
    }
    out[n + 1] = (f.coeff(n) / np1).value();
  }
  return Polynomial(field, std::move(out));
}

bool is_odd_polynomial(const Polynomial& f) {
  for (std::size_t i = 0; i < f.size(); i += 2) {
    if (f.raw()[i] != 0) return false;
  }
  return true;
}

bool is_even_polynomial(const Polynomial& f) {
  for (std::size_t i = 1; i < f.size(); i += 2) {
    if (f.raw()[i] != 0) return false;
  }
  return true;
}

ExtPolynomial::ExtPolynomial(const Polynomial& base) {
  coeffs_.reserve(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) coeffs_.emplace_back(base.coeff(i));
}

ExtPolynomial::ExtPolynomial(std::vector<ExtFieldElement> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

void ExtPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

ExtPolynomial& ExtPolynomial::operator*=(const ExtFieldElement& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

bool ExtPolynomial::in_base_field() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const ExtFieldElement& c) { return c.in_base_field(); });
}

Polynomial ExtPolynomial::to_base(const PrimeField& field) const {
  std::vector<std::uint32_t> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    if (c.a0().modulus() != field.characteristic()) {
      throw Error(ErrorCode::invalid_argument, "mixing elements of different prime fields");
    }
    out.push_back(c.to_base().value());
  }
  return Polynomial(field, std::move(out));
}

ExtPolynomial scale_variable(const ExtPolynomial& f, const ExtFieldElement& v) {
  if (v.is_zero()) throw Error(ErrorCode::degenerate_scaling, "degenerate scaling");
  std::vector<ExtFieldElement> out;
  out.reserve(f.coeffs().size());
  if (f.is_zero()) return ExtPolynomial(std::move(out));
  ExtFieldElement power{FieldElement{1, v.a0().modulus()}};
  for (const auto& c : f.coeffs()) {
    out.push_back(c * power);
    power *= v;
  }
  return ExtPolynomial(std::move(out));
}

ExtPolynomial scale_variable(const Polynomial& f, const ExtFieldElement& v) {
  return scale_variable(ExtPolynomial(f), v);
}

}  // namespace hqcf
