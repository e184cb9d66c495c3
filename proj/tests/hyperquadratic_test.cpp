#include <gtest/gtest.h>

#include "hqcf/error.hpp"
#include "hqcf/hyperquadratic.hpp"
#include "hqcf/mkaouar.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace hqcf;
using hqcf::testing::poly;

namespace {

std::vector<FieldElement> elems(const PrimeField& f, std::vector<std::int64_t> xs) {
  std::vector<FieldElement> out;
  for (auto x : xs) out.push_back(f(x));
  return out;
}

PerfectExpansionSpec spec13() {
  PrimeField f(13);
  return PerfectExpansionSpec::create(f, 4, f(12), f(9), elems(f, {5, 12, 9, 11, 1, 5}));
}

PerfectExpansionSpec spec7() {
  PrimeField f(7);
  return PerfectExpansionSpec::create(f, 2, f(3), f(5), elems(f, {2, 6, 6}));
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::internal_contradiction;
}

}  // namespace

TEST(PQFamily, ShapeInvariants) {
  for (std::int64_t p : {5, 7, 13}) {
    PrimeField f(p);
    for (std::uint32_t k = 1; 2 * k < p; ++k) {
      for (std::int64_t a = 1; a < p; ++a) {
        const auto pq = pq_family(f, k, f(a));
        EXPECT_EQ(pq.P.degree(), AbsoluteDegree(2 * k));
        EXPECT_EQ(pq.Q.degree(), AbsoluteDegree(2 * k - 1));
        EXPECT_TRUE(is_even_polynomial(pq.P));
        EXPECT_TRUE(is_odd_polynomial(pq.Q));
        EXPECT_EQ(pq.Q.derivative(), p_power(f, f(a), k - 1));
      }
    }
  }
  EXPECT_EQ(code_of([] { pq_family(PrimeField(7), 4, PrimeField(7)(1)); }), ErrorCode::invalid_argument);
}

TEST(PQConstants, Examples) {
  PrimeField f5(5), f7(7), f13(13);
  const auto c5 = pq_constants(f5, 1);
  EXPECT_EQ(c5.v, elems(f5, {1, -1}));
  EXPECT_EQ(c5.theta, f5(2));
  EXPECT_EQ(pq_constants(f7, 2).theta, f7(3));
  EXPECT_EQ(pq_constants(f13, 4).theta, f13(2));
  EXPECT_EQ(pq_constants(f13, 4).v.front(), f13(7));
}

TEST(PQConstants, VSequenceIsTheEuclidExpansion) {
  for (std::int64_t p : {5, 7, 11, 13, 17, 19, 23}) {
    PrimeField f(p);
    for (std::uint32_t k = 1; 2 * k < p; ++k) {
      const auto pq = pq_normalized(f, k);
      const auto cf = oracle::euclid_cf(oracle::Coeffs(pq.P.raw().begin(), pq.P.raw().end()),
                                        oracle::Coeffs(pq.Q.raw().begin(), pq.Q.raw().end()), p);
      const auto c = pq_constants(f, k);
      ASSERT_EQ(cf.size(), 2 * k);
      for (std::uint32_t i = 0; i < 2 * k; ++i) {
        EXPECT_EQ(cf[i], (oracle::Coeffs{0, c.v[i].value()})) << p << " " << k << " " << i;
      }
      // theta_k by the defining product with plain integer inverses.
      std::int64_t theta = k % 2 == 0 ? 1 : p - 1;
      for (std::int64_t j = 1; j <= k; ++j) {
        theta = oracle::mod(theta * oracle::mod(1 - oracle::inverse(2 * j % p, p), p), p);
      }
      EXPECT_EQ(c.theta.value(), theta);
    }
  }
}

TEST(ASequence, Examples) {
  PrimeField f5(5);
  const auto a = a_sequence(f5, 1, 1);
  EXPECT_EQ(a[1], poly(f5, {0, 1, 0, 1}));
  for (std::int64_t p : {5, 7, 13}) {
    PrimeField f(p);
    for (const auto& ai : a_sequence(f, (p - 1) / 2, 3)) EXPECT_EQ(ai, Polynomial::variable(f));
  }
  PrimeField f13(13);
  const auto a13 = a_sequence(f13, 4, 2);
  EXPECT_EQ(a13[1].degree(), AbsoluteDegree(5));
  EXPECT_EQ(a13[2].degree(), AbsoluteDegree(57));
  EXPECT_EQ(a_degree(13, 4, 2), 57u);
}

TEST(ASequence, OddAndDegreeRecurrence) {
  for (std::int64_t p : {5, 7, 11, 13}) {
    PrimeField f(p);
    for (std::uint32_t k = 1; 2 * k < p; ++k) {
      const auto a = a_sequence(f, k, 3);
      for (std::uint32_t i = 0; i < a.size(); ++i) {
        EXPECT_TRUE(is_odd_polynomial(a[i]));
        EXPECT_EQ(a[i].degree().exponent(), static_cast<std::int64_t>(a_degree(p, k, i)));
        if (i) {
          EXPECT_EQ(a[i].degree().exponent(), p * a[i - 1].degree().exponent() - 2 * k);
        }
      }
    }
  }
}

TEST(IndexSequence, CorollaryOnePrefix) {
  const IndexSequence s(1, 1, {0});
  EXPECT_EQ(s.generate(10), (std::vector<std::uint32_t>{0, 1, 0, 0, 2, 0, 0, 1, 0, 0}));
  EXPECT_EQ(s.f(1), 2u);
  for (std::uint64_t n = 1; n <= 3000; ++n) EXPECT_EQ(s.at(n), s.generate(3000)[n - 1]);
}

TEST(IndexSequence, GeneralShape) {
  const IndexSequence s(3, 2, {1, 0, 2});
  const auto i = s.generate(500);
  EXPECT_EQ(s.f(1), 4u);
  for (std::uint64_t n = 1; s.f(n) <= 500; ++n) EXPECT_EQ(i[s.f(n) - 1], i[n - 1] + 1);
  for (std::uint64_t n = 1; n <= 500; ++n) EXPECT_EQ(s.at(n), i[n - 1]);
}

TEST(Corollary2Index, Examples) {
  EXPECT_EQ(corollary2_index(7, 4), 1u);
  EXPECT_EQ(corollary2_index(7, 19), 2u);
  EXPECT_EQ(corollary2_index(7, 2), 0u);
  EXPECT_EQ(valuation(5, 75), 2u);
  EXPECT_EQ(code_of([] { corollary2_index(11, 3); }), ErrorCode::wrong_residue_class);
}

TEST(Corollary2Index, AgreesWithRecurrence) {
  for (std::uint32_t p : {7u, 13u, 19u, 31u}) {
    const IndexSequence s((p - 1) / 2, (p - 1) / 3);
    const auto i = s.generate(10000);
    for (std::uint64_t n = 1; n <= 10000; ++n) ASSERT_EQ(corollary2_index(p, n), i[n - 1]) << p << " " << n;
  }
}

TEST(Prop1, Examples) {
  const auto r13 = prop1_verify(PrimeField(13), 4);
  EXPECT_TRUE(r13.pass());
  EXPECT_EQ(r13.theta.value(), 2u);
  EXPECT_EQ(r13.checks.size(), 5u);
  EXPECT_TRUE(prop1_verify(PrimeField(7), 2).pass());
  EXPECT_EQ(prop1_verify(PrimeField(7), 2).theta.value(), 3u);
  EXPECT_TRUE(prop1_verify(PrimeField(5), 1).pass());
}

TEST(Prop2, Examples) {
  const auto r = prop2_verify(PrimeField(7), 1, 1);
  ASSERT_TRUE(r.defined);
  EXPECT_TRUE(r.pass());
  ASSERT_EQ(r.predicted.size(), 4u);
  PrimeField f(7);
  const auto a1 = a_sequence(f, 1, 1)[1];
  EXPECT_EQ(r.predicted[0], a1);
  EXPECT_EQ(r.predicted[3], -a1);
  EXPECT_TRUE(prop2_verify(PrimeField(13), 4, 4).pass());
  EXPECT_EQ(prop2_verify(PrimeField(13), 4, 4).predicted.size(), 8u + 7u * 8u);
}

TEST(PerfectSpec, KnownSpecsValidate) {
  const auto s = spec13();
  EXPECT_EQ(s.l(), 6u);
  const PrimeField f(13);
  EXPECT_EQ(s.initial_deltas().back(), f(8) * f(12) / f(9));
  EXPECT_NO_THROW(spec7());
}

TEST(PerfectSpec, TypedFailures) {
  PrimeField f(13);
  EXPECT_EQ(code_of([&] { PerfectExpansionSpec::create(f, 4, f(11), f(9), elems(f, {5, 12, 9, 11, 1, 5})); }),
            ErrorCode::not_perfect_spec);
  // delta_1 = lambda_1 + e2 / (2k theta) vanishes for lambda_1 = -e2 / (2k theta).
  const FieldElement theta = pq_constants(f, 1).theta;
  const FieldElement lambda = -f(3) / (f(2) * theta);
  EXPECT_EQ(code_of([&] { PerfectExpansionSpec::create(f, 1, f(1), f(3), {lambda}); }), ErrorCode::delta_undefined);
}

TEST(Theorem1, KnownSpecsReproducePrefixes) {
  const auto g = theorem1_generate(spec13(), 6);
  PrimeField f(13);
  std::vector<Polynomial> expected;
  for (auto c : {5, 12, 9, 11, 1, 5}) expected.push_back(poly(f, {0, c}));
  EXPECT_EQ(g.cf.partial_quotients, expected);
}

TEST(Theorem1, GeneratedDataInvariants) {
  for (const auto& spec : {spec7(), spec13()}) {
    const auto g = theorem1_generate(spec, 300);
    const std::uint32_t p = spec.field().characteristic();
    for (std::size_t n = 1; n <= 300; ++n) {
      EXPECT_FALSE(g.lambdas[n - 1].is_zero());
      EXPECT_FALSE(g.deltas[n - 1].is_zero());
      EXPECT_EQ(g.cf[n].degree().exponent(), static_cast<std::int64_t>(a_degree(p, spec.k(), g.indices[n - 1])));
    }
  }
}

TEST(Theorem1, MaximalKGivesLinearQuotients) {
  PrimeField f(7);
  std::optional<PerfectExpansionSpec> spec;
  for (std::int64_t e1 = 1; e1 < 7 && !spec; ++e1) {
    for (std::int64_t l1 = 1; l1 < 7 && !spec; ++l1) {
      try {
        spec = PerfectExpansionSpec::create(f, 3, f(e1), f(1), {f(l1)});
      } catch (const Error&) {
      }
    }
  }
  ASSERT_TRUE(spec);
  for (const auto& a : theorem1_generate(*spec, 100).cf.partial_quotients) {
    EXPECT_EQ(a.degree(), AbsoluteDegree(1));
  }
}

TEST(Corollary1, MatchesTheorem1) {
  PrimeField f(7);
  for (std::int64_t e1 = 1; e1 < 7; ++e1) {
    for (std::int64_t e2 = 1; e2 < 7; ++e2) {
      if ((f(e2) * f(e2) + f(2) * f(e1)).is_zero()) continue;
      for (std::uint32_t i1 : {0u, 1u}) {
        const auto g = corollary1_generate(f, i1, f(e1), f(e2), 120);
        const auto seq = corollary1_sequences(f, i1, f(e1), f(e2), 120);
        EXPECT_EQ(seq.lambdas, g.lambdas);
        for (std::size_t n = 0; n < 120; ++n) EXPECT_EQ(seq.deltas[n], -g.deltas[n]);
        EXPECT_EQ(g.indices, IndexSequence(1, 1, {i1}).generate(120));
      }
    }
  }
}

TEST(Corollary1, DeltaOneAndExclusion) {
  PrimeField f(7);
  EXPECT_EQ(corollary1_sequences(f, 0, f(3), f(5), 1).deltas[0], f(3));
  EXPECT_EQ(code_of([&] { corollary1_generate(f, 0, f(3), f(1), 5); }), ErrorCode::excluded_by_hypothesis);
}

TEST(RelationResidual, GeneratedExpansionSatisfiesItsRelation) {
  const auto spec = spec13();
  const auto g = theorem1_generate(spec, 100);
  EXPECT_TRUE(relation_residual(g.cf, relation_of(spec), 80).is_minus_infinity());

  auto perturbed = relation_of(spec);
  perturbed.epsilon2 += spec.field().one();
  EXPECT_FALSE(relation_residual(g.cf, perturbed, 80).is_minus_infinity());

  CFExpansion short_cf = g.cf;
  short_cf.partial_quotients.erase(short_cf.partial_quotients.begin() + spec.l(), short_cf.partial_quotients.end());
  EXPECT_EQ(code_of([&] { relation_residual(short_cf, relation_of(spec), 80); }),
            ErrorCode::insufficient_expansion);
}

TEST(RelationResidual, Corollary1Expansions) {
  PrimeField f(11);
  const auto g = corollary1_generate(f, 1, f(2), f(3), 60);
  const TypeRelation rel{1, f(2), f(3), pq_normalized(f, 1).P, pq_normalized(f, 1).Q};
  EXPECT_TRUE(relation_residual(g.cf, rel, 200).is_minus_infinity());
}
