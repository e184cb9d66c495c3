#pragma once

// Reference implementations written independently of the library code paths.

#include <cstdint>
#include <vector>

namespace oracle {

using Coeffs = std::vector<std::int64_t>;  // ascending, residues mod p

inline std::int64_t mod(std::int64_t x, std::int64_t p) { return ((x % p) + p) % p; }

inline void trim(Coeffs& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline Coeffs mul(const Coeffs& a, const Coeffs& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = mod(out[i + j] + a[i] * b[j], p);
  }
  trim(out);
  return out;
}

inline Coeffs add(Coeffs a, const Coeffs& b, std::int64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = mod(a[i] + b[i], p);
  trim(a);
  return a;
}

inline Coeffs scale(Coeffs a, std::int64_t c, std::int64_t p) {
  for (auto& x : a) x = mod(x * c, p);
  trim(a);
  return a;
}

// Every x with x*x = a, by exhaustion.
inline std::vector<std::int64_t> all_roots(std::int64_t a, std::int64_t p) {
  std::vector<std::int64_t> out;
  for (std::int64_t x = 0; x < p; ++x) {
    if (mod(x * x - a, p) == 0) out.push_back(x);
  }
  return out;
}

inline std::int64_t inverse(std::int64_t a, std::int64_t p) {
  for (std::int64_t x = 1; x < p; ++x) {
    if (mod(a * x, p) == 1) return x;
  }
  return 0;
}

// alpha^n reduced modulo the monic m(X) = X^4 + 12 T X^3 - 12 X^2 - 12 by
// schoolbook long division of X^n in (F_p[T])[X]. Returns [d, c, b, a], the
// coefficients of 1, alpha, alpha^2, alpha^3.
inline std::vector<Coeffs> alpha_power(std::int64_t p, std::uint64_t n) {
  std::vector<Coeffs> x(n + 1);
  x[n] = {1};
  const std::vector<Coeffs> m = {{mod(-12, p)}, {}, {mod(-12, p)}, {0, mod(12, p)}, {1}};
  for (std::uint64_t top = n; top >= 4; --top) {
    const Coeffs lead = x[top];
    if (lead.empty()) continue;
    for (std::size_t j = 0; j <= 4; ++j) {
      x[top - 4 + j] = add(x[top - 4 + j], scale(mul(lead, m[j], p), -1, p), p);
    }
  }
  x.resize(4);
  return x;
}

// Continued fraction of num/den by Euclid on raw coefficient vectors.
inline std::vector<Coeffs> euclid_cf(Coeffs num, Coeffs den, std::int64_t p) {
  std::vector<Coeffs> out;
  while (!den.empty()) {
    Coeffs q(num.size() >= den.size() ? num.size() - den.size() + 1 : 1, 0);
    Coeffs r = num;
    const std::int64_t inv = inverse(den.back(), p);
    while (r.size() >= den.size() && !r.empty()) {
      const std::size_t shift = r.size() - den.size();
      const std::int64_t c = mod(r.back() * inv, p);
      q[shift] = c;
      for (std::size_t j = 0; j < den.size(); ++j) r[shift + j] = mod(r[shift + j] - c * den[j], p);
      trim(r);
    }
    trim(q);
    out.push_back(q);
    num = den;
    den = r;
  }
  return out;
}

}  // namespace oracle
