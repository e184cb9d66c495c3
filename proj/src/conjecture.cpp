#include "hqcf/conjecture.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "hqcf/mkaouar.hpp"
#include "hqcf/series.hpp"

namespace hqcf {

namespace {

std::int64_t degree_of(const LaurentSeries& s) {
  if (s.is_zero_to_precision()) {
    throw Error(ErrorCode::insufficient_expansion, "series vanished to working precision");
  }
  return s.top();
}

// Solves c1 x + c2 y = t coefficientwise for (x, y) in F_p^2. Empty when inconsistent.
std::optional<std::pair<FieldElement, FieldElement>> solve_pair(
    const PrimeField& field, const std::vector<std::array<Polynomial, 3>>& equations) {
  std::vector<std::array<FieldElement, 3>> rows;
  for (const auto& eq : equations) {
    std::size_t size = std::max({eq[0].size(), eq[1].size(), eq[2].size()});
    for (std::size_t j = 0; j < size; ++j) rows.push_back({eq[0].coeff(j), eq[1].coeff(j), eq[2].coeff(j)});
  }
  std::size_t rank = 0;
  std::array<std::size_t, 2> pivot_col{};
  for (std::size_t col = 0; col < 2 && rank < rows.size(); ++col) {
    auto it = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end(),
                           [col](const auto& r) { return !r[col].is_zero(); });
    if (it == rows.end()) continue;
    std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(rank), it);
    const FieldElement inv = rows[rank][col].inverse();
    for (auto& x : rows[rank]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      const FieldElement f = rows[r][col];
      for (std::size_t c = 0; c < 3; ++c) rows[r][c] -= f * rows[rank][c];
    }
    pivot_col[rank++] = col;
  }
  for (std::size_t r = rank; r < rows.size(); ++r) {
    if (!rows[r][2].is_zero()) return std::nullopt;
  }
  std::array<FieldElement, 2> sol{field.zero(), field.zero()};
  for (std::size_t r = 0; r < rank; ++r) sol[pivot_col[r]] = rows[r][2];
  return std::make_pair(sol[0], sol[1]);
}

}  // namespace

PowerBasisElement times_alpha(const PowerBasisElement& x) {
  const PrimeField& field = x.a.field();
  const FieldElement twelve = field(12);
  const Polynomial t = Polynomial::variable(field);
  return {x.b - twelve * (t * x.a), x.c + twelve * x.a, x.d, twelve * x.a};
}

PowerBasisElement power_reduce(const PrimeField& field, std::uint64_t n) {
  if (n < 4) throw Error(ErrorCode::invalid_argument, "power_reduce needs n >= 4");
  PowerBasisElement x{Polynomial(field, std::vector<std::int64_t>{0, -12}),
                      Polynomial(field, std::vector<std::int64_t>{12}), Polynomial(field),
                      Polynomial(field, std::vector<std::int64_t>{12})};
  for (std::uint64_t m = 4; m < n; ++m) x = times_alpha(x);
  return x;
}

DerivationTrace derive_frobenius_relation(const PrimeField& field) {
  const std::uint32_t p = field.characteristic();
  if (p % 3 != 1) throw Error(ErrorCode::wrong_residue_class, "wrong residue class: need p = 1 mod 3");

  DerivationTrace tr{.p = p,
                     .l = (p - 1) / 2,
                     .k = (p - 1) / 3,
                     .alpha_p = power_reduce(field, p),
                     .alpha_p1 = power_reduce(field, p + 1),
                     .U = Polynomial(field),
                     .V = Polynomial(field),
                     .delta = Polynomial(field),
                     .a_star_p = Polynomial(field),
                     .a_star_p1 = Polynomial(field),
                     .U_star = Polynomial(field),
                     .V_star = Polynomial(field),
                     .W = Polynomial(field),
                     .prefix = {},
                     .x_l = Polynomial(field),
                     .y_l = Polynomial(field),
                     .x_lm1 = Polynomial(field),
                     .y_lm1 = Polynomial(field),
                     .leading = Polynomial(field),
                     .remainder = Polynomial(field),
                     .epsilon1 = {},
                     .epsilon2 = {},
                     .a = {}};
  const auto& [ap, bp, cp, dp] = tr.alpha_p;
  const auto& [aq, bq, cq, dq] = tr.alpha_p1;

  if (!(ap * bq - aq * bp).is_zero()) {
    throw Error(ErrorCode::derivation_inapplicable,
                "derivation inapplicable: a_p b_{p+1} - a_{p+1} b_p != 0");
  }
  tr.U = ap * dq - aq * dp;
  tr.V = aq * cp - ap * cq;

  const CFExpansion cf = expand_root(quartic_state(field), tr.l);
  if (cf.size() < tr.l) throw Error(ErrorCode::insufficient_expansion, "expansion ended before l");
  tr.prefix = cf.partial_quotients;
  const Continuants ks = continuants(cf);
  tr.x_l = ks.x[tr.l];
  tr.y_l = ks.y[tr.l];
  tr.x_lm1 = ks.x[tr.l - 1];
  tr.y_lm1 = ks.y[tr.l - 1];

  tr.delta = gcd_monic(ap, aq);
  tr.a_star_p = quotient(ap, tr.delta);
  tr.a_star_p1 = quotient(aq, tr.delta);
  const FieldElement scale = tr.x_l.leading() / tr.a_star_p1.leading();
  tr.a_star_p *= scale;
  tr.a_star_p1 *= scale;
  tr.delta *= scale.inverse();
  if (tr.a_star_p1 != tr.x_l || tr.a_star_p != tr.y_l) {
    throw Error(ErrorCode::derivation_inapplicable,
                "derivation inapplicable: a*_{p+1}/a*_p is not the convergent x_l/y_l");
  }
  tr.U_star = tr.a_star_p * dq - tr.a_star_p1 * dp;
  tr.V_star = tr.a_star_p1 * cp - tr.a_star_p * cq;
  tr.W = tr.a_star_p1 * tr.V_star - tr.a_star_p * tr.U_star;

  const auto alpha = series_root_quartic(field, 4 * std::size_t{p} + 16).inverse();
  const auto alpha_p = alpha.frobenius();
  tr.degree_denominator =
      degree_of(LaurentSeries::from_polynomial(tr.a_star_p) * alpha_p +
                LaurentSeries::from_polynomial(tr.V_star));
  tr.degree_bound = (tr.a_star_p * tr.W).degree().exponent();
  tr.convergent_error = degree_of(LaurentSeries::from_polynomial(tr.a_star_p) * alpha -
                                  LaurentSeries::from_polynomial(tr.a_star_p1)) -
                        tr.a_star_p.degree().exponent();
  if (tr.degree_denominator <= tr.degree_bound) {
    throw Error(ErrorCode::derivation_inapplicable,
                "derivation inapplicable: |a*_p alpha^p + V*| <= |a*_p W|");
  }
  if (tr.convergent_error >= -2 * tr.a_star_p.degree().exponent()) {
    throw Error(ErrorCode::derivation_inapplicable,
                "derivation inapplicable: a*_{p+1}/a*_p is not a convergent of alpha");
  }

  const FieldElement sign = tr.l % 2 == 0 ? field.one() : -field.one();
  tr.leading = sign * tr.W;
  tr.remainder = sign * (tr.x_lm1 * tr.V_star - tr.y_lm1 * tr.U_star);

  if (tr.leading.is_zero()) throw Error(ErrorCode::pattern_mismatch, "pattern mismatch: W = 0");
  tr.epsilon1 = tr.leading.leading();
  const Polynomial monic = tr.leading.monic();
  const std::int64_t deg = monic.degree().exponent();
  if (deg % 2 != 0 || deg == 0) {
    throw Error(ErrorCode::pattern_mismatch,
                "pattern mismatch: W has degree " + std::to_string(deg) + ", not 2k");
  }
  const auto k = static_cast<std::uint32_t>(deg / 2);
  if (k != tr.k) {
    throw Error(ErrorCode::pattern_mismatch, "pattern mismatch: W has k = " + std::to_string(k) +
                                                 ", expected " + std::to_string(tr.k));
  }
  tr.a = monic.coeff(2 * k - 2) / field(k);
  if (tr.a.is_zero() || monic != p_power(field, tr.a, k)) {
    throw Error(ErrorCode::pattern_mismatch, "pattern mismatch: W is not e (T^2 + a)^k");
  }
  const auto pq = pq_family(field, k, tr.a);
  tr.epsilon2 = tr.remainder.is_zero() ? field.zero() : tr.remainder.leading() / pq.Q.leading();
  if (tr.epsilon2.is_zero() || tr.remainder != tr.epsilon2 * pq.Q) {
    throw Error(ErrorCode::pattern_mismatch, "pattern mismatch: remainder is not e Q_{k,a}");
  }
  return tr;
}

Polynomial alpha_to_beta(const Polynomial& f, const ExtFieldElement& v, std::size_t n) {
  const ExtFieldElement factor = n % 2 == 1 ? v : v.inverse();
  return (scale_variable(f, v) * factor).to_base(f.field());
}

Polynomial beta_to_alpha(const Polynomial& f, const ExtFieldElement& v, std::size_t n) {
  const ExtFieldElement factor = n % 2 == 0 ? v : v.inverse();
  return (scale_variable(f, v.inverse()) * factor).to_base(f.field());
}

NormalizedRelation normalize_to_beta(const DerivationTrace& trace) {
  const PrimeField& field = trace.leading.field();
  const std::int64_t p = trace.p;
  const FieldElement minus_a = -trace.a;
  NormalizedRelation out;
  out.v = sqrt_in_ext(minus_a);
  const std::int64_t sign_l = trace.l % 2 == 0 ? 1 : -1;
  out.epsilon1 = minus_a.pow(trace.k + (p - sign_l) / 2) * trace.epsilon1;
  out.epsilon2 = minus_a.pow(trace.k + (p - 1) / 2) * trace.epsilon2;
  const Polynomial t = Polynomial::variable(field);
  for (std::size_t i = 1; i <= trace.prefix.size(); ++i) {
    Polynomial b = alpha_to_beta(trace.prefix[i - 1], out.v, i);
    const FieldElement lambda = b.coeff(1);
    if (b != lambda * t) {
      throw Error(ErrorCode::pattern_mismatch,
                  "pattern mismatch: b_" + std::to_string(i) + " = " + to_text(b) + " is not lambda T");
    }
    out.lambdas.push_back(lambda);
    out.b_prefix.push_back(std::move(b));
  }
  return out;
}

Verdict verify_conjecture1(const PrimeField& field, std::size_t n) {
  const std::uint32_t p = field.characteristic();
  if (p % 3 != 1) throw Error(ErrorCode::wrong_residue_class, "wrong residue class: need p = 1 mod 3");
  if (n == 0) throw Error(ErrorCode::invalid_argument, "need at least one partial quotient");

  Verdict verdict;
  verdict.p = p;
  verdict.l = (p - 1) / 2;
  verdict.k = (p - 1) / 3;
  try {
    verdict.stage = "derivation";
    const DerivationTrace trace = derive_frobenius_relation(field);
    verdict.epsilon1 = trace.epsilon1;
    verdict.epsilon2 = trace.epsilon2;
    verdict.a = trace.a;
    verdict.a_equals_8_27 = trace.a == field.embed_rational(8, 27);

    verdict.stage = "normalization";
    const NormalizedRelation beta = normalize_to_beta(trace);

    verdict.stage = "spec";
    const auto spec = PerfectExpansionSpec::create(field, trace.k, beta.epsilon1, beta.epsilon2, beta.lambdas);

    verdict.stage = "generation";
    const PerfectExpansion generated = theorem1_generate(spec, n);

    verdict.stage = "comparison";
    const CFExpansion mkaouar = expand_root(quartic_state(field), n);
    const std::size_t common = std::min(mkaouar.size(), n);
    for (std::size_t i = 1; i <= common; ++i) {
      const Polynomial a = beta_to_alpha(generated.cf[i], beta.v, i);
      if (a != mkaouar[i] || !is_odd_polynomial(a)) {
        verdict.first_mismatch = i;
        verdict.compared_terms = i;
        verdict.message = "partial quotient " + std::to_string(i) + " differs: generated " +
                          to_text(a) + ", expansion " + to_text(mkaouar[i]);
        return verdict;
      }
    }
    verdict.compared_terms = common;

    verdict.stage = "relation";
    const auto pq = pq_family(field, trace.k, trace.a);
    const TypeRelation relation{trace.l, trace.epsilon1, trace.epsilon2, pq.P, pq.Q};
    try {
      verdict.residual = relation_residual(mkaouar, relation, 100);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::insufficient_expansion) throw;
    }
    if (verdict.residual && !verdict.residual->is_minus_infinity()) {
      std::ostringstream os;
      os << "relation residual has degree " << *verdict.residual;
      verdict.message = os.str();
      return verdict;
    }
    verdict.stage = "done";
    verdict.pass = true;
  } catch (const Error& e) {
    verdict.error = e.code();
    verdict.message = verdict.stage + ": " + e.what();
  }
  return verdict;
}

Verdict verify_conjecture2(const PrimeField& field, std::size_t n, std::int64_t l_offset) {
  const std::uint32_t p = field.characteristic();
  if (p % 3 != 2) throw Error(ErrorCode::wrong_residue_class, "wrong residue class: need p = 2 mod 3");

  Verdict verdict;
  verdict.p = p;
  const std::int64_t l = std::int64_t{p + 1} * (p + 1) / 3 + l_offset;
  if (l < 1) throw Error(ErrorCode::invalid_argument, "l must be positive");
  verdict.l = static_cast<std::uint32_t>(l);
  verdict.k_prime = (p * p - 1) / 3;
  verdict.k = (p + 1) / 3;
  if (n < static_cast<std::size_t>(l) + 1) {
    throw Error(ErrorCode::insufficient_expansion,
                "insufficient expansion: need at least l + 1 = " + std::to_string(l + 1) + " partial quotients");
  }
  verdict.stage = "expansion";
  const CFExpansion cf = expand_root(quartic_state(field), n);
  if (cf.size() < static_cast<std::size_t>(l) + 1) {
    throw Error(ErrorCode::insufficient_expansion, "insufficient expansion: the expansion terminated");
  }
  const Continuants ks = continuants(cf);
  const Polynomial& xl = ks.x[l];
  const Polynomial& yl = ks.y[l];
  const Polynomial& xm = ks.x[l - 1];
  const Polynomial& ym = ks.y[l - 1];

  // (y_l alpha - x_l) alpha^(p^2) is linear in alpha iff (C_2) can hold.
  verdict.stage = "power basis";
  const std::uint64_t q = std::uint64_t{p} * p;
  const PowerBasisElement top = power_reduce(field, q);
  const PowerBasisElement next = times_alpha(top);
  const Polynomial l3 = yl * next.a - xl * top.a;
  const Polynomial l2 = yl * next.b - xl * top.b;
  const Polynomial l1 = yl * next.c - xl * top.c;
  const Polynomial l0 = yl * next.d - xl * top.d;
  verdict.compared_terms = static_cast<std::size_t>(l) + 1;
  if (!l3.is_zero() || !l2.is_zero()) {
    verdict.message = "no solution: the alpha^3 and alpha^2 parts do not vanish";
    return verdict;
  }

  verdict.stage = "solve";
  const FieldElement preferred = field.embed_rational(8, 27);
  std::vector<FieldElement> candidates{preferred};
  for (std::uint32_t a = 1; a < p; ++a) {
    if (field(a) != preferred) candidates.push_back(field(a));
  }
  for (const FieldElement a : candidates) {
    const Polynomial P = p_power(field, a, verdict.k_prime);
    const Polynomial Qp = formal_integral(p_power(field, a, verdict.k - 1)).frobenius();
    // l1 = e1 (-P y_{l-1}) + e2 (Q^p y_l), l0 = e1 (P x_{l-1}) + e2 (-Q^p x_l)
    const auto sol = solve_pair(field, {{-(P * ym), Qp * yl, l1}, {P * xm, -(Qp * xl), l0}});
    if (sol && !sol->first.is_zero() && !sol->second.is_zero()) {
      verdict.pass = true;
      verdict.stage = "done";
      verdict.epsilon1 = sol->first;
      verdict.epsilon2 = sol->second;
      verdict.a = a;
      verdict.a_equals_8_27 = a == preferred;
      return verdict;
    }
  }
  verdict.message = "no solution for any a in F_p^*";
  return verdict;
}

std::optional<Rational> nu0_closed_form(std::uint32_t p, std::uint32_t l, std::uint32_t k,
                                        const std::vector<std::uint32_t>& initial_indices) {
  const bool all_zero = std::all_of(initial_indices.begin(), initial_indices.end(),
                                    [](std::uint32_t i) { return i == 0; });
  if (all_zero) return Rational(std::int64_t{p} - 2 * std::int64_t{k} - 1, l);
  if (l != 1 || k != 1) return std::nullopt;
  std::int64_t pi = 1;
  for (std::uint32_t j = 0; j < initial_indices[0]; ++j) {
    if (__builtin_mul_overflow(pi, std::int64_t{p}, &pi)) {
      throw Error(ErrorCode::invalid_argument, "closed form overflows 64 bits");
    }
  }
  std::int64_t num = 0;
  const std::int64_t base = pi * (std::int64_t{p} - 3);
  if (__builtin_mul_overflow(base, std::int64_t{p} - 1, &num)) {
    throw Error(ErrorCode::invalid_argument, "closed form overflows 64 bits");
  }
  return Rational(num, base + 2);
}

ExponentReport approximation_exponent(const CFExpansion& cf, std::size_t window,
                                      std::optional<Rational> closed) {
  if (window == 0) throw Error(ErrorCode::invalid_argument, "window must be positive");
  if (cf.size() < window + 1) {
    throw Error(ErrorCode::insufficient_expansion,
                "insufficient expansion: need window + 1 = " + std::to_string(window + 1) +
                    " partial quotients");
  }
  ExponentReport report;
  report.window = window;
  report.nu0_closed = closed;
  std::int64_t sum = 0;
  for (std::size_t n = 1; n <= window; ++n) {
    sum += cf[n].degree().exponent();
    const Rational r(cf[n + 1].degree().exponent(), sum);
    if (n == 1 || r > report.nu0_empirical) {
      report.nu0_empirical = r;
      report.argmax = n;
    }
    if (2 * n > window && (report.tail_argmax == 0 || r > report.nu0_tail)) {
      report.nu0_tail = r;
      report.tail_argmax = n;
    }
  }
  return report;
}

}  // namespace hqcf
