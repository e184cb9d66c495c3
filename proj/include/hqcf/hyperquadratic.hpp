#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hqcf/continued_fraction.hpp"
#include "hqcf/polynomial.hpp"

namespace hqcf {

/// (T^2 + a)^m for any m >= 0.
Polynomial p_power(const PrimeField& field, FieldElement a, std::uint64_t m);

/// P_{k,a} = (T^2 + a)^k and Q_{k,a} = integral_0^T (x^2 + a)^(k-1) dx, 1 <= k < p/2.
struct PQFamily {
  std::uint32_t k;
  FieldElement a;
  Polynomial P;
  Polynomial Q;
};

PQFamily pq_family(const PrimeField& field, std::uint32_t k, FieldElement a);
/// The normalized pair P_k = (T^2 - 1)^k, Q_k.
PQFamily pq_normalized(const PrimeField& field, std::uint32_t k);

/// theta_k and v_{1,k}..v_{2k,k} (stored zero-based: v[i-1] = v_{i,k}).
struct PQConstants {
  FieldElement theta;
  std::vector<FieldElement> v;
};

PQConstants pq_constants(const PrimeField& field, std::uint32_t k);

/// A_{0,k} = T, A_{i+1,k} = polynomial part of A_{i,k}^p / P_k, for i = 0..i_max.
std::vector<Polynomial> a_sequence(const PrimeField& field, std::uint32_t k, std::uint32_t i_max);

/// deg A_{i,k} = (p^i (p - 1 - 2k) + 2k) / (p - 1).
std::uint64_t a_degree(std::uint32_t p, std::uint32_t k, std::uint32_t i);

/// i(n) for a perfect expansion of type (p, l, k): i(1..l) given,
/// i(f(n)) = i(n) + 1 with f(n) = (2k + 1) n + l - 2k, and 0 elsewhere.
class IndexSequence {
 public:
  IndexSequence(std::uint32_t l, std::uint32_t k, std::vector<std::uint32_t> initial = {});

  std::uint32_t l() const { return l_; }
  std::uint32_t k() const { return k_; }
  const std::vector<std::uint32_t>& initial() const { return initial_; }

  std::uint64_t f(std::uint64_t n) const { return (2 * std::uint64_t{k_} + 1) * n + l_ - 2 * k_; }
  // i(1), ..., i(count), zero-based.
  std::vector<std::uint32_t> generate(std::size_t count) const;
  std::uint32_t at(std::uint64_t n) const;

 private:
  std::uint32_t l_;
  std::uint32_t k_;
  std::vector<std::uint32_t> initial_;
};

struct IdentityCheck {
  std::string name;
  bool holds = false;
  std::string witness;  // first offending object when it fails
};

struct Prop1Report {
  std::uint32_t p = 0, k = 0;
  FieldElement theta;
  std::vector<FieldElement> v;
  std::vector<IdentityCheck> checks;
  bool pass() const;
};

/// CF of P_k/Q_k, its reversal with -4k^2 theta_k^2, and
/// A_{i,k}^p = A_{i+1,k} P_k - 2k theta_k^(i+1) Q_k for i = 0..2.
Prop1Report prop1_verify(const PrimeField& field, std::uint32_t k);

struct Prop2Report {
  std::uint32_t p = 0, k = 0, i = 0;
  bool defined = true;           // every delta_j exists and is nonzero
  std::string undefined_reason;  // set when !defined
  std::vector<Polynomial> predicted;
  std::vector<IdentityCheck> checks;
  bool pass() const;
};

/// Predicted expansion of P_{kp-i}/Q_k^p against Euclid, plus the reversal identity.
Prop2Report prop2_verify(const PrimeField& field, std::uint32_t k, std::uint32_t i);

/// Type (p, l, k) data satisfying the perfectness conditions; create() checks
/// them and throws delta_undefined or not_perfect_spec.
class PerfectExpansionSpec {
 public:
  static PerfectExpansionSpec create(const PrimeField& field, std::uint32_t k, FieldElement epsilon1,
                                     FieldElement epsilon2, std::vector<FieldElement> lambdas,
                                     std::vector<std::uint32_t> initial_indices = {});

  const PrimeField& field() const { return field_; }
  std::uint32_t l() const { return static_cast<std::uint32_t>(lambdas_.size()); }
  std::uint32_t k() const { return indices_.k(); }
  FieldElement epsilon1() const { return epsilon1_; }
  FieldElement epsilon2() const { return epsilon2_; }
  const std::vector<FieldElement>& lambdas() const { return lambdas_; }
  const IndexSequence& indices() const { return indices_; }
  // delta_1..delta_l from the scalar continued fractions.
  const std::vector<FieldElement>& initial_deltas() const { return deltas_; }

 private:
  PerfectExpansionSpec(const PrimeField& field, IndexSequence indices, FieldElement e1,
                       FieldElement e2, std::vector<FieldElement> lambdas,
                       std::vector<FieldElement> deltas);

  PrimeField field_;
  IndexSequence indices_;
  FieldElement epsilon1_, epsilon2_;
  std::vector<FieldElement> lambdas_;
  std::vector<FieldElement> deltas_;
};

/// delta_n for 1 <= n <= l as the scalar CF
/// [theta^i(n) lambda_n, ..., theta^i(1) lambda_1, 2k theta / epsilon2].
FieldElement initial_delta(const PrimeField& field, std::uint32_t k, FieldElement epsilon2,
                           const std::vector<FieldElement>& lambdas,
                           const std::vector<std::uint32_t>& indices, std::size_t n);

struct PerfectExpansion {
  CFExpansion cf;
  std::vector<FieldElement> lambdas;  // lambda_1..lambda_N
  std::vector<FieldElement> deltas;   // delta_1..delta_N
  std::vector<std::uint32_t> indices; // i(1)..i(N)
  std::uint32_t k = 0;
};

/// a_n = lambda_n A_{i(n),k} for n = 1..count.
PerfectExpansion theorem1_generate(const PerfectExpansionSpec& spec, std::size_t count);

/// The type (p, 1, 1) special case with lambda_1 = (e2^2 + 2 e1)(-2)^i1 / e2.
PerfectExpansion corollary1_generate(const PrimeField& field, std::uint32_t i1, FieldElement epsilon1,
                                     FieldElement epsilon2, std::size_t count);
/// Corollary 1's own recurrences for (lambda_n, delta_n), n = 1..count.
struct LambdaDelta {
  std::vector<FieldElement> lambdas;
  std::vector<FieldElement> deltas;
};
LambdaDelta corollary1_sequences(const PrimeField& field, std::uint32_t i1, FieldElement epsilon1,
                                 FieldElement epsilon2, std::size_t count);

/// Largest e with m^e | n.
std::uint32_t valuation(std::uint64_t m, std::uint64_t n);

/// i(n) = v_{(2p+1)/3}((p-1)(4n-1)/6) for p = 1 mod 3.
std::uint32_t corollary2_index(std::uint32_t p, std::uint64_t n);

/// alpha^p = epsilon1 P alpha_{l+1} + epsilon2 Q.
struct TypeRelation {
  std::uint32_t l = 0;
  FieldElement epsilon1, epsilon2;
  Polynomial P;
  Polynomial Q;
};

TypeRelation relation_of(const PerfectExpansionSpec& spec);

/// Evaluates both sides as series built from convergents of `cf` down to
/// T^-precision and returns the highest exponent where they differ
/// (-infinity when they agree). Throws insufficient_expansion when the
/// expansion is too short to reach that precision.
AbsoluteDegree relation_residual(const CFExpansion& cf, const TypeRelation& relation,
                                 std::int64_t precision);

}  // namespace hqcf
