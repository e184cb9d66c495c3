#include "hqcf/mkaouar.hpp"

#include "hqcf/error.hpp"

namespace hqcf {

AlgebraicState quartic_state(const PrimeField& field) {
  if (field.characteristic() < 5) {
    throw Error(ErrorCode::invalid_argument, "the quartic needs p >= 5");
  }
  AlgebraicState s;
  s.coeffs = {
      Polynomial::constant(field, field.one()),
      Polynomial(field),
      Polynomial::constant(field, field.one()),
      -Polynomial::variable(field),
      Polynomial::constant(field, field.embed_rational(-1, 12)),
  };
  return s;
}

bool check_star(const AlgebraicState& state) {
  const std::size_t n = state.degree();
  if (n == 0 || state.coeffs[n].is_zero()) return false;
  const AbsoluteDegree dominant = state.coeffs[n - 1].degree();
  for (std::size_t i = 0; i <= n; ++i) {
    if (i == n - 1) continue;
    if (!(state.coeffs[i].degree() < dominant)) return false;
  }
  return true;
}

MkaouarStep mkaouar_step(const AlgebraicState& state) {
  if (!check_star(state)) {
    throw Error(ErrorCode::hypothesis_broken, "hypothesis broken: X^(n-1) coefficient is not strictly dominant in degree");
  }
  const std::size_t n = state.degree();
  Polynomial q = -quotient(state.coeffs[n - 1], state.coeffs[n]);

  // Taylor shift by repeated synthetic division: afterwards c[j] is the
  // coefficient of X^j in P(X + q), i.e. P^(j)(q)/j!.
  std::vector<Polynomial> c = state.coeffs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = n; j-- > i;) c[j] += q * c[j + 1];
  }
  if (c[0].is_zero()) return {std::move(q), std::nullopt};

  AlgebraicState next;
  next.coeffs.assign(c.rbegin(), c.rend());
  if (!check_star(next)) {
    throw Error(ErrorCode::hypothesis_broken, "hypothesis broken: X^(n-1) coefficient lost dominance after a step");
  }
  return {std::move(q), std::move(next)};
}

namespace {

void reduce_content(AlgebraicState& state) {
  // Start from the smallest coefficient and stop as soon as the gcd is 1.
  std::size_t smallest = 0;
  for (std::size_t i = 0; i < state.coeffs.size(); ++i) {
    if (state.coeffs[i].is_zero()) continue;
    if (state.coeffs[smallest].is_zero() || state.coeffs[i].size() < state.coeffs[smallest].size()) {
      smallest = i;
    }
  }
  Polynomial g = state.coeffs[smallest].monic();
  for (std::size_t i = 0; i < state.coeffs.size() && !g.is_constant(); ++i) {
    if (i == smallest || state.coeffs[i].is_zero()) continue;
    g = gcd_monic(g, state.coeffs[i]);
  }
  if (g.is_constant()) return;
  for (auto& c : state.coeffs) c = quotient(c, g);
}

}  // namespace

CFExpansion expand_root(const AlgebraicState& state, std::size_t count, ExpandOptions options) {
  if (!check_star(state)) {
    throw Error(ErrorCode::hypothesis_broken, "hypothesis broken: X^(n-1) coefficient is not strictly dominant in degree");
  }
  CFExpansion cf{state.field(), {}, false, false};
  cf.partial_quotients.reserve(count);
  AlgebraicState current = state;
  for (std::size_t i = 0; i < count; ++i) {
    auto step = mkaouar_step(current);
    cf.partial_quotients.push_back(std::move(step.quotient));
    if (!step.next) {
      cf.complete = true;
      break;
    }
    current = std::move(*step.next);
    if (options.reduce_content) reduce_content(current);
  }
  return cf;
}

CFExpansion expand_quartic_recurrence(const PrimeField& field, std::size_t count) {
  // a..e are the coefficients of X^4..X^0; each step maps P to X^4 P(q + 1/X).
  const AlgebraicState start = quartic_state(field);
  Polynomial a = start.coeffs[4], b = start.coeffs[3], c = start.coeffs[2], d = start.coeffs[1],
             e = start.coeffs[0];
  const FieldElement two = field(2), three = field(3), four = field(4), six = field(6);
  CFExpansion cf{field, {}, false, false};
  for (std::size_t i = 0; i < count; ++i) {
    Polynomial q = -quotient(b, a);
    cf.partial_quotients.push_back(q);
    const Polynomial q2 = q * q;
    const Polynomial q3 = q2 * q;
    Polynomial na = a * q2 * q2 + b * q3 + c * q2 + d * q + e;
    if (na.is_zero()) {
      cf.complete = true;
      break;
    }
    Polynomial nb = four * (a * q3) + three * (b * q2) + two * (c * q) + d;
    Polynomial nc = six * (a * q2) + three * (b * q) + c;
    Polynomial nd = four * (a * q) + b;
    e = std::move(a);
    a = std::move(na);
    b = std::move(nb);
    c = std::move(nc);
    d = std::move(nd);
  }
  return cf;
}

LaurentSeries series_root_quartic(const PrimeField& field, std::size_t terms) {
  if (field.characteristic() < 5) {
    throw Error(ErrorCode::invalid_argument, "the quartic needs p >= 5");
  }
  if (terms == 0) throw Error(ErrorCode::invalid_argument, "at least one term is needed");
  // With s = 1/T the equation reads u = s (u^4 + u^2 - 1/12). Index j below is
  // the power of s, so u[j] only depends on earlier coefficients.
  const std::uint64_t p = field.characteristic();
  std::vector<std::uint64_t> u(terms + 1, 0), u2(terms + 1, 0), u4(terms + 1, 0);
  u[1] = field.embed_rational(-1, 12).value();
  for (std::size_t j = 2; j <= terms; ++j) {
    // (u^2)_{j-1} needs u up to j-2; (u^4)_{j-1} = (u2^2)_{j-1} needs u2 up to j-3.
    std::uint64_t acc = 0;
    for (std::size_t a = 1; a + 1 <= j - 1; ++a) acc = (acc + u[a] * u[j - 1 - a]) % p;
    u2[j - 1] = acc;
    acc = 0;
    for (std::size_t a = 2; a + 2 <= j - 1; ++a) acc = (acc + u2[a] * u2[j - 1 - a]) % p;
    u4[j - 1] = acc;
    u[j] = (u4[j - 1] + u2[j - 1]) % p;
  }
  std::vector<FieldElement> c;
  c.reserve(terms);
  for (std::size_t j = 1; j <= terms; ++j) c.emplace_back(static_cast<std::uint32_t>(u[j]), field.characteristic());
  return LaurentSeries::from_coefficients(field, -1, std::move(c), false);
}

CFExpansion cf_from_series(const LaurentSeries& s) {
  if (s.is_zero_to_precision()) throw Error(ErrorCode::invalid_argument, "zero series has no continued fraction");
  auto [num, shift] = s.to_rational();
  auto den = Polynomial::monomial(s.field(), s.field().one(), shift);
  CFExpansion full = rational_to_cf(num, den);
  if (s.exact()) return full;

  // The error has degree <= floor - 1. With a_1..a_n certified, a_{n+1} is
  // certified when 2 deg y_{n+1} < 1 - floor (y from the truncated expansion).
  const std::int64_t budget = 1 - s.floor();
  CFExpansion certified{s.field(), {}, false, full.constant_leading_quotient};
  std::int64_t deg_y = 0;  // deg y_1
  for (std::size_t n = 0; n < full.size(); ++n) {
    if (n >= 1) deg_y += full.partial_quotients[n].degree().exponent();
    if (2 * deg_y >= budget) break;
    certified.partial_quotients.push_back(full.partial_quotients[n]);
  }
  return certified;
}

}  // namespace hqcf
