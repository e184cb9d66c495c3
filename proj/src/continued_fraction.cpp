#include "hqcf/continued_fraction.hpp"

#include "hqcf/error.hpp"

namespace hqcf {

Continuants continuants(const PrimeField& field, std::span<const Polynomial> quotients) {
  Continuants k;
  k.x.reserve(quotients.size() + 1);
  k.y.reserve(quotients.size() + 1);
  k.x.push_back(Polynomial::constant(field, field.one()));
  k.y.push_back(Polynomial(field));
  if (quotients.empty()) return k;
  k.x.push_back(quotients[0]);
  k.y.push_back(Polynomial::constant(field, field.one()));
  for (std::size_t n = 1; n < quotients.size(); ++n) {
    const auto& a = quotients[n];
    k.x.push_back(a * k.x[n] + k.x[n - 1]);
    k.y.push_back(a * k.y[n] + k.y[n - 1]);
  }
  return k;
}

Continuants continuants(const CFExpansion& cf) { return continuants(cf.field, cf.partial_quotients); }

bool continuant_determinant_holds(const Continuants& k) {
  if (k.x.empty()) return true;
  const auto& field = k.x[0].field();
  for (std::size_t n = 1; n < k.x.size(); ++n) {
    Polynomial det = k.x[n] * k.y[n - 1] - k.x[n - 1] * k.y[n];
    FieldElement sign = n % 2 == 0 ? field.one() : -field.one();
    if (det != Polynomial::constant(field, sign)) return false;
  }
  return true;
}

CFExpansion rational_to_cf(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw Error(ErrorCode::not_a_rational_function, "not a rational function");
  CFExpansion cf{num.field(), {}, true, false};
  Polynomial a = num, b = den;
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    cf.partial_quotients.push_back(std::move(q));
    a = std::move(b);
    b = std::move(r);
  }
  cf.constant_leading_quotient = cf.partial_quotients.front().is_constant();
  return cf;
}

RationalFunction evaluate_cf(const PrimeField& field, std::span<const Polynomial> quotients) {
  if (quotients.empty()) throw Error(ErrorCode::invalid_argument, "empty continued fraction");
  // Fold from the right so only two running polynomials are kept.
  Polynomial num = quotients.back();
  Polynomial den = Polynomial::constant(field, field.one());
  for (std::size_t i = quotients.size() - 1; i-- > 0;) {
    Polynomial next = quotients[i] * num + den;
    den = std::move(num);
    num = std::move(next);
  }
  return {std::move(num), std::move(den)};
}

FieldElement eval_scalar_cf(std::span<const FieldElement> entries) {
  if (entries.empty()) throw Error(ErrorCode::invalid_argument, "empty scalar continued fraction");
  FieldElement acc = entries.back();
  for (std::size_t i = entries.size() - 1; i-- > 0;) {
    if (acc.is_zero()) {
      throw Error(ErrorCode::scalar_cf_undefined,
                  "scalar CF undefined: tail starting at entry " + std::to_string(i + 2) +
                      " vanishes");
    }
    acc = entries[i] + acc.inverse();
  }
  return acc;
}

Mobius tail_from_convergents(const Continuants& k, std::size_t l) {
  if (l == 0 || l >= k.x.size()) {
    throw Error(ErrorCode::insufficient_expansion, "continuants through index l not available");
  }
  return {-k.y[l - 1], k.x[l - 1], k.y[l], -k.x[l]};
}

Mobius head_from_convergents(const Continuants& k, std::size_t l) {
  if (l == 0 || l >= k.x.size()) {
    throw Error(ErrorCode::insufficient_expansion, "continuants through index l not available");
  }
  return {k.x[l], k.x[l - 1], k.y[l], k.y[l - 1]};
}

Mobius compose(const Mobius& f, const Mobius& g) {
  return {f.a * g.a + f.b * g.c, f.a * g.b + f.b * g.d, f.c * g.a + f.d * g.c,
          f.c * g.b + f.d * g.d};
}

}  // namespace hqcf
