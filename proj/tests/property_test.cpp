#include <gtest/gtest.h>

#include "hqcf/continued_fraction.hpp"
#include "hqcf/error.hpp"
#include "hqcf/hyperquadratic.hpp"
#include "hqcf/mkaouar.hpp"
#include "support.hpp"

using namespace hqcf;
using hqcf::testing::random_nonzero_poly;
using hqcf::testing::random_poly;
using hqcf::testing::uniform;

namespace {

PrimeField random_small_field() {
  static const std::int64_t primes[] = {5, 7, 13};
  return PrimeField(primes[uniform(0, 2)]);
}

}  // namespace

TEST(Property, DivmodRoundTrip) {
  for (int trial = 0; trial < 1000; ++trial) {
    const PrimeField f = random_small_field();
    const Polynomial a = random_poly(f, 50);
    const Polynomial b = random_nonzero_poly(f, 50);
    const auto [q, r] = divmod(a, b);
    ASSERT_EQ(q * b + r, a);
    ASSERT_LT(r.degree(), b.degree());
  }
}

TEST(Property, GcdOfMultiples) {
  for (int trial = 0; trial < 1000; ++trial) {
    const PrimeField f = random_small_field();
    const Polynomial a = random_nonzero_poly(f, 15);
    const Polynomial b = random_nonzero_poly(f, 15);
    const Polynomial h = random_nonzero_poly(f, 8).monic();
    ASSERT_EQ(gcd_monic(a * h, b * h), gcd_monic(a, b) * h);
    const Polynomial g = gcd_monic(a, b);
    ASSERT_TRUE(remainder(a, g).is_zero());
    ASSERT_TRUE(remainder(b, g).is_zero());
  }
}

TEST(Property, IntegralThenDerivative) {
  for (int trial = 0; trial < 1000; ++trial) {
    const PrimeField f = random_small_field();
    const std::int64_t p = f.characteristic();
    const Polynomial g = random_poly(f, p - 2);  // every exponent n has n + 1 < p
    ASSERT_EQ(formal_integral(g).derivative(), g);
    ASSERT_TRUE(formal_integral(g).coeff(0).is_zero());
  }
}

TEST(Property, ContinuantDeterminantAndDegrees) {
  for (int trial = 0; trial < 1000; ++trial) {
    const PrimeField f = random_small_field();
    const std::size_t n = uniform(1, 25);
    std::vector<Polynomial> a;
    for (std::size_t i = 0; i < n; ++i) {
      Polynomial q = random_poly(f, 4);
      while (q.degree() < AbsoluteDegree(1)) q = random_poly(f, 4);
      a.push_back(q);
    }
    const auto k = continuants(f, a);
    ASSERT_TRUE(continuant_determinant_holds(k));
    std::int64_t dx = 0, dy = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      dx += a[i - 1].degree().exponent();
      if (i >= 2) dy += a[i - 1].degree().exponent();
      ASSERT_EQ(k.x[i].degree().exponent(), dx);
      ASSERT_EQ(k.y[i].degree().exponent(), dy);
    }
    // Euclid on the convergent gives the quotients back.
    ASSERT_EQ(rational_to_cf(k.x[n], k.y[n]).partial_quotients, a);
  }
}

TEST(Property, RationalToCfReconstructs) {
  for (int trial = 0; trial < 1000; ++trial) {
    const PrimeField f = random_small_field();
    const Polynomial num = random_nonzero_poly(f, 20);
    const Polynomial den = random_nonzero_poly(f, 20);
    const CFExpansion cf = rational_to_cf(num, den);
    const auto value = evaluate_cf(f, cf.partial_quotients);
    ASSERT_EQ(value.num * den, value.den * num);
    const Polynomial g = gcd_monic(num, den);
    ASSERT_EQ(value.num.degree(), quotient(num, g).degree());
  }
}

TEST(Property, FermatIdentity) {
  for (int trial = 0; trial < 1000; ++trial) {
    const std::int64_t p = std::vector<std::int64_t>{3, 5, 7, 11, 13, 101, 65521}[uniform(0, 6)];
    const PrimeField f(p);
    const FieldElement x = f(uniform(0, p - 1));
    ASSERT_EQ(x.pow(p), x);
    if (!x.is_zero()) {
      ASSERT_EQ(x.pow(p - 1), f.one());
      ASSERT_EQ(x * x.inverse(), f.one());
    }
  }
}

TEST(Property, SqrtInExtSquares) {
  for (int trial = 0; trial < 1000; ++trial) {
    const std::int64_t p = std::vector<std::int64_t>{5, 7, 11, 13, 9973, 65521}[uniform(0, 5)];
    const PrimeField f(p);
    const FieldElement x = f(uniform(0, p - 1));
    const ExtFieldElement v = sqrt_in_ext(x);
    ASSERT_EQ(v * v, ExtFieldElement(x));
  }
}

TEST(Property, QuarticQuotientsOdd) {
  // 1000 partial quotients spread across primes.
  std::size_t checked = 0;
  for (std::int64_t p : {5, 7, 11, 13, 17}) {
    for (const auto& a : expand_root(quartic_state(PrimeField(p)), 200).partial_quotients) {
      ASSERT_TRUE(is_odd_polynomial(a));
      ++checked;
    }
  }
  EXPECT_GE(checked, 1000u);
}

TEST(Property, ScalarCfFoldsFromTheRight) {
  for (int trial = 0; trial < 1000; ++trial) {
    const PrimeField f = random_small_field();
    std::vector<FieldElement> u;
    for (int i = uniform(1, 6); i > 0; --i) u.push_back(f(uniform(1, f.characteristic() - 1)));
    std::optional<FieldElement> tail;
    bool undefined = false;
    for (std::size_t j = u.size(); j-- > 0;) {
      if (tail) {
        if (tail->is_zero()) {
          undefined = true;
          break;
        }
        tail = u[j] + tail->inverse();
      } else {
        tail = u[j];
      }
    }
    if (undefined) {
      ASSERT_THROW(eval_scalar_cf(u), Error);
    } else {
      ASSERT_EQ(eval_scalar_cf(u), *tail);
    }
  }
}
