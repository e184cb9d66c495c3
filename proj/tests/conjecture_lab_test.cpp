#include <gtest/gtest.h>

#include "hqcf/conjecture.hpp"
#include "hqcf/error.hpp"
#include "hqcf/mkaouar.hpp"
#include "hqcf/series.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace hqcf;
using hqcf::testing::poly;

namespace {

oracle::Coeffs raw(const Polynomial& f) { return {f.raw().begin(), f.raw().end()}; }

}  // namespace

TEST(PowerReduce, SmallPowers) {
  PrimeField f(13);
  const auto a4 = power_reduce(f, 4);
  EXPECT_EQ(a4, (PowerBasisElement{poly(f, {0, -12}), poly(f, {12}), Polynomial(f), poly(f, {12})}));
  const auto a5 = power_reduce(f, 5);
  EXPECT_EQ(a5, (PowerBasisElement{poly(f, {12, 0, 144}), poly(f, {0, -144}), poly(f, {12}), poly(f, {0, -144})}));
  EXPECT_THROW(power_reduce(f, 3), Error);
}

TEST(PowerReduce, MatchesLongDivisionOracle) {
  for (std::int64_t p : {5, 7, 13}) {
    PrimeField f(p);
    for (std::uint64_t n = 4; n <= 60; ++n) {
      const auto x = power_reduce(f, n);
      const auto o = oracle::alpha_power(p, n);
      EXPECT_EQ(raw(x.d), o[0]);
      EXPECT_EQ(raw(x.c), o[1]);
      EXPECT_EQ(raw(x.b), o[2]);
      EXPECT_EQ(raw(x.a), o[3]);
      EXPECT_EQ(power_reduce(f, n + 1), times_alpha(x));
    }
  }
}

TEST(PowerReduce, AgreesWithSeriesRoot) {
  PrimeField f(11);
  const auto alpha = series_root_quartic(f, 120).inverse();
  for (std::uint64_t n : {4u, 9u, 23u}) {
    const auto x = power_reduce(f, n);
    auto s = [](const Polynomial& c) { return LaurentSeries::from_polynomial(c); };
    const auto combo = s(x.a) * alpha.pow(3) + s(x.b) * alpha.pow(2) + s(x.c) * alpha + s(x.d);
    EXPECT_TRUE(first_difference(combo, alpha.pow(n)).is_minus_infinity()) << n;
  }
}

TEST(Derivation, FrobeniusRelationAtSeven) {
  PrimeField f(7);
  const auto tr = derive_frobenius_relation(f);
  EXPECT_EQ(tr.l, 3u);
  EXPECT_EQ(tr.k, 2u);
  EXPECT_TRUE((tr.alpha_p.a * tr.alpha_p1.b - tr.alpha_p1.a * tr.alpha_p.b).is_zero());
  EXPECT_EQ(tr.leading, f(3) * poly(f, {-1, 0, 1}).pow(2));
  EXPECT_EQ(tr.remainder, f(5) * poly(f, {0, 6, 0, 5}));
  EXPECT_EQ(tr.epsilon1, f(3));
  EXPECT_EQ(tr.epsilon2, f(5));
  EXPECT_EQ(tr.a, f(6));
  EXPECT_EQ(tr.a_star_p1, tr.x_l);
  EXPECT_EQ(tr.a_star_p, tr.y_l);
  EXPECT_EQ(tr.a_star_p * tr.delta, tr.alpha_p.a);
  EXPECT_GT(tr.degree_denominator, tr.degree_bound);
  EXPECT_LT(tr.convergent_error, -2 * tr.a_star_p.degree().exponent());
}

TEST(Derivation, FrobeniusRelationAtThirteen) {
  PrimeField f(13);
  const auto tr = derive_frobenius_relation(f);
  EXPECT_EQ(tr.leading, poly(f, {8, 0, 1}).pow(4));
  EXPECT_EQ(tr.remainder, f(4) * poly(f, {0, 5, 0, 12, 0, 10, 0, 2}));
  EXPECT_EQ(tr.epsilon1, f(1));
  EXPECT_EQ(tr.epsilon2, f(4));
  EXPECT_EQ(tr.a, f(8));
}

TEST(Derivation, SweepPrimesGiveEightTwentySevenths) {
  for (std::int64_t p : {19, 31}) {
    PrimeField f(p);
    const auto tr = derive_frobenius_relation(f);
    EXPECT_EQ(tr.a, f.embed_rational(8, 27)) << p;
  }
}

TEST(Derivation, WrongResidueClass) {
  try {
    derive_frobenius_relation(PrimeField(11));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::wrong_residue_class);
  }
}

TEST(Normalization, BetaRelationAtThirteen) {
  PrimeField f(13);
  const auto beta = normalize_to_beta(derive_frobenius_relation(f));
  EXPECT_EQ(beta.v * beta.v, ExtFieldElement(f(5)));
  EXPECT_FALSE(beta.v.in_base_field());
  EXPECT_EQ(beta.epsilon1, f(12));
  EXPECT_EQ(beta.epsilon2, f(9));
  std::vector<Polynomial> expected;
  for (auto c : {5, 12, 9, 11, 1, 5}) expected.push_back(poly(f, {0, c}));
  EXPECT_EQ(beta.b_prefix, expected);
}

TEST(Normalization, SevenIsUnchanged) {
  PrimeField f(7);
  const auto tr = derive_frobenius_relation(f);
  const auto beta = normalize_to_beta(tr);
  EXPECT_EQ(beta.v, ExtFieldElement(f(1)));
  EXPECT_EQ(beta.epsilon1, tr.epsilon1);
  EXPECT_EQ(beta.epsilon2, tr.epsilon2);
  EXPECT_EQ(beta.b_prefix, tr.prefix);
}

TEST(Normalization, RoundTrip) {
  for (std::int64_t p : {7, 13, 19}) {
    PrimeField f(p);
    const auto tr = derive_frobenius_relation(f);
    const auto beta = normalize_to_beta(tr);
    for (std::size_t i = 1; i <= tr.prefix.size(); ++i) {
      EXPECT_EQ(beta_to_alpha(beta.b_prefix[i - 1], beta.v, i), tr.prefix[i - 1]);
    }
  }
}

TEST(Conjecture1, SevenAndThirteen) {
  for (std::int64_t p : {7, 13}) {
    const auto v = verify_conjecture1(PrimeField(p), 200);
    EXPECT_TRUE(v.pass) << v.message;
    EXPECT_TRUE(v.a_equals_8_27);
    EXPECT_EQ(v.compared_terms, 200u);
    ASSERT_TRUE(v.residual);
    EXPECT_TRUE(v.residual->is_minus_infinity());
  }
  const auto v7 = verify_conjecture1(PrimeField(7), 20);
  EXPECT_EQ(v7.epsilon1->value(), 3u);
  EXPECT_EQ(v7.epsilon2->value(), 5u);
  EXPECT_EQ(v7.a->value(), 6u);
}

TEST(Conjecture2, FindsTriplesAndRejectsControl) {
  for (std::int64_t p : {5, 11}) {
    PrimeField f(p);
    const auto v = verify_conjecture2(f, 200);
    ASSERT_TRUE(v.pass) << v.message;
    EXPECT_EQ(v.l, (p + 1) * (p + 1) / 3);
    EXPECT_EQ(v.k_prime, (p * p - 1) / 3);
    EXPECT_EQ(v.k, (p + 1) / 3);
    EXPECT_TRUE(v.a_equals_8_27);

    // Independent check of alpha^(p^2) = e1 P alpha_{l+1} + e2 Q^p with series
    // built from convergents.
    const CFExpansion cf = expand_root(quartic_state(f), v.l + 80);
    const std::span<const Polynomial> all(cf.partial_quotients);
    const auto whole = evaluate_cf(f, all);
    const auto tail = evaluate_cf(f, all.subspan(v.l));
    const std::int64_t precision = 40;
    const auto alpha = LaurentSeries::from_rational(whole.num, whole.den, -precision);
    const auto lhs = alpha.frobenius().frobenius().truncated(-precision);
    const Polynomial P = p_power(f, *v.a, v.k_prime);
    const Polynomial Qp = formal_integral(p_power(f, *v.a, v.k - 1)).frobenius();
    const auto rhs = (LaurentSeries::from_polynomial(P) *
                          LaurentSeries::from_rational(tail.num, tail.den, -precision - 2 * v.k_prime - 1) *
                          *v.epsilon1 +
                      LaurentSeries::from_polynomial(Qp) * *v.epsilon2)
                         .truncated(-precision);
    EXPECT_TRUE(first_difference(lhs, rhs).is_minus_infinity()) << p;

    const std::int64_t l = (p + 1) * (p + 1) / 3;
    EXPECT_FALSE(verify_conjecture2(f, 200, 1).pass);
    EXPECT_EQ(verify_conjecture2(f, 200, 1).l, l + 1);
  }
  const auto v5 = verify_conjecture2(PrimeField(5), 20);
  EXPECT_EQ(v5.epsilon1->value(), 4u);
  EXPECT_EQ(v5.epsilon2->value(), 3u);
  EXPECT_EQ(v5.a->value(), 4u);
}

TEST(Conjecture2, Preconditions) {
  try {
    verify_conjecture2(PrimeField(11), 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::insufficient_expansion);
  }
  EXPECT_THROW(verify_conjecture2(PrimeField(7), 100), Error);
}

TEST(Exponent, ClosedForms) {
  EXPECT_EQ(*nu0_closed_form(7, 3, 2, {}), Rational(2, 3));
  EXPECT_EQ(*nu0_closed_form(13, 6, 4, {0, 0, 0, 0, 0, 0}), Rational(2, 3));
  EXPECT_EQ(*nu0_closed_form(7, 1, 1, {1}), Rational(28, 5));
  EXPECT_EQ(*nu0_closed_form(11, 1, 1, {0}), Rational(8));
  EXPECT_FALSE(nu0_closed_form(7, 3, 2, {1, 0, 0}));
}

TEST(Exponent, QuarticAtSevenAndThirteen) {
  for (std::int64_t p : {7, 13}) {
    PrimeField f(p);
    const auto cf = expand_root(quartic_state(f), 301);
    const auto r = approximation_exponent(cf, 300, nu0_closed_form(p, (p - 1) / 2, (p - 1) / 3, {}));
    EXPECT_EQ(r.nu(), Rational(8, 3));
  }
}

TEST(Exponent, BoundedQuotients) {
  PrimeField f(5);
  CFExpansion cf{f, std::vector<Polynomial>(401, poly(f, {0, 1})), false, false};
  const auto r = approximation_exponent(cf, 400);
  EXPECT_EQ(r.nu0_empirical, Rational(1));
  EXPECT_EQ(r.argmax, 1u);
  EXPECT_EQ(r.nu0_tail, Rational(1, 201));
  EXPECT_FALSE(r.nu0_closed);
}

TEST(Exponent, Errors) {
  PrimeField f(5);
  CFExpansion cf{f, std::vector<Polynomial>(10, poly(f, {0, 1})), false, false};
  EXPECT_THROW(approximation_exponent(cf, 0), Error);
  EXPECT_THROW(approximation_exponent(cf, 10), Error);
}
