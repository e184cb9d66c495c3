#include "hqcf/hyperquadratic.hpp"

#include <algorithm>
#include <sstream>

#include "hqcf/error.hpp"
#include "hqcf/series.hpp"

namespace hqcf {

namespace {

void require_k(const PrimeField& field, std::uint32_t k) {
  if (k < 1 || 2 * std::uint64_t{k} >= field.characteristic()) {
    throw Error(ErrorCode::invalid_argument,
                "k must satisfy 1 <= k < p/2, got k = " + std::to_string(k));
  }
}

// epsilon^((-1)^n)
FieldElement alternate(FieldElement epsilon, std::uint64_t n) {
  return n % 2 == 0 ? epsilon : epsilon.inverse();
}

std::string describe(const Polynomial& f) { return to_text(f); }

}  // namespace

Polynomial p_power(const PrimeField& field, FieldElement a, std::uint64_t m) {
  Polynomial base(field, std::vector<std::uint32_t>{a.value(), 0, 1});
  return base.pow(m);
}

PQFamily pq_family(const PrimeField& field, std::uint32_t k, FieldElement a) {
  require_k(field, k);
  if (a.is_zero()) throw Error(ErrorCode::invalid_argument, "a must be nonzero");
  return {k, a, p_power(field, a, k), formal_integral(p_power(field, a, k - 1))};
}

PQFamily pq_normalized(const PrimeField& field, std::uint32_t k) {
  return pq_family(field, k, -field.one());
}

PQConstants pq_constants(const PrimeField& field, std::uint32_t k) {
  require_k(field, k);
  const std::int64_t kk = k;
  PQConstants c;
  c.v.reserve(2 * k);
  c.v.push_back(field(2 * kk - 1));
  for (std::int64_t i = 1; i <= 2 * kk - 1; ++i) {
    FieldElement num = field(2 * kk - 2 * i - 1) * field(2 * kk - 2 * i + 1);
    FieldElement den = field(i * (2 * kk - i));
    c.v.push_back(num / den / c.v.back());
  }
  c.theta = k % 2 == 0 ? field.one() : -field.one();
  for (std::int64_t j = 1; j <= kk; ++j) c.theta *= field.one() - field(2 * j).inverse();
  return c;
}

std::vector<Polynomial> a_sequence(const PrimeField& field, std::uint32_t k, std::uint32_t i_max) {
  require_k(field, k);
  const Polynomial pk = pq_normalized(field, k).P;
  std::vector<Polynomial> a{Polynomial::variable(field)};
  for (std::uint32_t i = 0; i < i_max; ++i) a.push_back(quotient(a.back().frobenius(), pk));
  return a;
}

std::uint64_t a_degree(std::uint32_t p, std::uint32_t k, std::uint32_t i) {
  unsigned __int128 pi = 1;
  for (std::uint32_t j = 0; j < i; ++j) {
    pi *= p;
    if (pi >> 64) throw Error(ErrorCode::invalid_argument, "degree overflows 64 bits");
  }
  const unsigned __int128 num = pi * (p - 1 - 2 * k) + 2 * k;
  return static_cast<std::uint64_t>(num / (p - 1));
}

IndexSequence::IndexSequence(std::uint32_t l, std::uint32_t k, std::vector<std::uint32_t> initial)
    : l_(l), k_(k), initial_(std::move(initial)) {
  if (l < 1 || k < 1) throw Error(ErrorCode::invalid_argument, "l and k must be positive");
  if (initial_.size() > l) throw Error(ErrorCode::invalid_argument, "more initial indices than l");
  initial_.resize(l, 0);
}

std::vector<std::uint32_t> IndexSequence::generate(std::size_t count) const {
  std::vector<std::uint32_t> out(count, 0);
  std::copy_n(initial_.begin(), std::min<std::size_t>(count, l_), out.begin());
  for (std::uint64_t n = 1;; ++n) {
    const std::uint64_t fn = f(n);
    if (fn > count) break;
    out[fn - 1] = out[n - 1] + 1;
  }
  return out;
}

std::uint32_t IndexSequence::at(std::uint64_t n) const {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "indices start at 1");
  if (n <= l_) return initial_[n - 1];
  const std::uint64_t shifted = n + 2 * std::uint64_t{k_} - l_;
  const std::uint64_t step = 2 * std::uint64_t{k_} + 1;
  if (shifted % step != 0) return 0;
  return at(shifted / step) + 1;
}

bool Prop1Report::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.holds; });
}

bool Prop2Report::pass() const {
  return defined &&
         std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.holds; });
}

Prop1Report prop1_verify(const PrimeField& field, std::uint32_t k) {
  const auto pq = pq_normalized(field, k);
  const auto constants = pq_constants(field, k);
  const Polynomial t = Polynomial::variable(field);

  Prop1Report report;
  report.p = field.characteristic();
  report.k = k;
  report.theta = constants.theta;
  report.v = constants.v;

  std::vector<Polynomial> predicted;
  for (auto v : constants.v) predicted.push_back(v * t);

  {
    const CFExpansion cf = rational_to_cf(pq.P, pq.Q);
    IdentityCheck c{"P_k/Q_k = [v_1 T, ..., v_2k T]", cf.partial_quotients == predicted, {}};
    if (!c.holds) {
      for (std::size_t j = 0; j < std::max(cf.size(), predicted.size()); ++j) {
        if (j >= cf.size() || j >= predicted.size() || cf.partial_quotients[j] != predicted[j]) {
          c.witness = "first mismatch at entry " + std::to_string(j + 1);
          break;
        }
      }
    }
    report.checks.push_back(std::move(c));
  }
  {
    std::vector<Polynomial> reversed(predicted.rbegin(), predicted.rend());
    const auto value = evaluate_cf(field, reversed);
    const FieldElement scale = -field(4) * field(k) * field(k) * constants.theta * constants.theta;
    const Polynomial lhs = pq.P * value.den;
    const Polynomial rhs = scale * (pq.Q * value.num);
    report.checks.push_back({"P_k/Q_k = -4k^2 theta^2 [v_2k T, ..., v_1 T]", lhs == rhs,
                             lhs == rhs ? "" : "cross products differ"});
  }
  const auto a = a_sequence(field, k, 3);
  for (std::uint32_t i = 0; i <= 2; ++i) {
    const Polynomial lhs = a[i].frobenius();
    const Polynomial rhs =
        a[i + 1] * pq.P - (field(2 * std::int64_t{k}) * constants.theta.pow(i + 1)) * pq.Q;
    IdentityCheck c{"A_" + std::to_string(i) + "^p = A_" + std::to_string(i + 1) +
                        " P_k - 2k theta^" + std::to_string(i + 1) + " Q_k",
                    lhs == rhs, {}};
    if (!c.holds) c.witness = "difference " + describe(lhs - rhs);
    report.checks.push_back(std::move(c));
  }
  return report;
}

Prop2Report prop2_verify(const PrimeField& field, std::uint32_t k, std::uint32_t i) {
  require_k(field, k);
  require_k(field, i);
  const std::uint32_t p = field.characteristic();
  const auto ck = pq_constants(field, k);
  const auto ci = pq_constants(field, i);
  const Polynomial a1 = a_sequence(field, i, 1)[1];
  const Polynomial t = Polynomial::variable(field);

  Prop2Report report;
  report.p = p;
  report.k = k;
  report.i = i;

  // Rows j = 1..2k-1: separator v_{j,k} A_{1,i}, then 2i entries alternating
  // -delta_j^-1 v_{m,i} T (m odd) and -delta_j v_{m,i} T (m even). A final
  // separator v_{2k,k} A_{1,i} closes the expansion.
  for (std::uint32_t j = 1; j <= 2 * k; ++j) {
    report.predicted.push_back(ck.v[j - 1] * a1);
    if (j == 2 * k) break;
    std::vector<FieldElement> entries(ck.v.rend() - j, ck.v.rend());
    FieldElement delta = field.zero();
    try {
      delta = field(2 * std::int64_t{i}) * ci.theta * eval_scalar_cf(entries);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::scalar_cf_undefined) throw;
    }
    if (delta.is_zero()) {
      report.defined = false;
      report.undefined_reason = "delta_" + std::to_string(j) + " undefined or zero";
      return report;
    }
    for (std::uint32_t m = 1; m <= 2 * i; ++m) {
      const FieldElement d = m % 2 == 1 ? delta.inverse() : delta;
      report.predicted.push_back((-d * ci.v[m - 1]) * t);
    }
  }

  const Polynomial num = p_power(field, -field.one(), std::uint64_t{k} * p - i);
  const Polynomial den = pq_normalized(field, k).Q.frobenius();

  const CFExpansion cf = rational_to_cf(num, den);
  {
    IdentityCheck c{"P_{kp-i}/Q_k^p matches the predicted expansion",
                    cf.partial_quotients == report.predicted, {}};
    if (!c.holds) {
      std::ostringstream os;
      os << "Euclid gives " << cf.size() << " entries, prediction " << report.predicted.size();
      c.witness = os.str();
    }
    report.checks.push_back(std::move(c));
  }
  {
    std::vector<Polynomial> reversed(report.predicted.rbegin(), report.predicted.rend());
    const auto value = evaluate_cf(field, reversed);
    const FieldElement scale = -field(4) * field(k) * field(k) * ck.theta * ck.theta;
    const bool holds = num * value.den == scale * (den * value.num);
    report.checks.push_back(
        {"P_{kp-i}/Q_k^p = -4k^2 theta_k^2 [b_n, ..., b_1]", holds, holds ? "" : "cross products differ"});
  }
  return report;
}

FieldElement initial_delta(const PrimeField& field, std::uint32_t k, FieldElement epsilon2,
                           const std::vector<FieldElement>& lambdas,
                           const std::vector<std::uint32_t>& indices, std::size_t n) {
  const FieldElement theta = pq_constants(field, k).theta;
  std::vector<FieldElement> entries;
  entries.reserve(n + 1);
  for (std::size_t j = n; j >= 1; --j) entries.push_back(theta.pow(indices[j - 1]) * lambdas[j - 1]);
  entries.push_back(field(2 * std::int64_t{k}) * theta / epsilon2);
  return eval_scalar_cf(entries);
}

PerfectExpansionSpec::PerfectExpansionSpec(const PrimeField& field, IndexSequence indices,
                                           FieldElement e1, FieldElement e2,
                                           std::vector<FieldElement> lambdas,
                                           std::vector<FieldElement> deltas)
    : field_(field),
      indices_(std::move(indices)),
      epsilon1_(e1),
      epsilon2_(e2),
      lambdas_(std::move(lambdas)),
      deltas_(std::move(deltas)) {}

PerfectExpansionSpec PerfectExpansionSpec::create(const PrimeField& field, std::uint32_t k,
                                                  FieldElement epsilon1, FieldElement epsilon2,
                                                  std::vector<FieldElement> lambdas,
                                                  std::vector<std::uint32_t> initial_indices) {
  require_k(field, k);
  if (lambdas.empty()) throw Error(ErrorCode::invalid_argument, "l must be at least 1");
  if (epsilon1.is_zero() || epsilon2.is_zero()) {
    throw Error(ErrorCode::invalid_argument, "epsilon1 and epsilon2 must be nonzero");
  }
  for (auto lambda : lambdas) {
    if (lambda.is_zero()) throw Error(ErrorCode::invalid_argument, "lambdas must be nonzero");
  }
  const auto l = static_cast<std::uint32_t>(lambdas.size());
  IndexSequence indices(l, k, std::move(initial_indices));

  std::vector<FieldElement> deltas;
  for (std::size_t n = 1; n <= l; ++n) {
    FieldElement d = field.zero();
    try {
      d = initial_delta(field, k, epsilon2, lambdas, indices.initial(), n);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::scalar_cf_undefined) throw;
    }
    if (d.is_zero()) {
      throw Error(ErrorCode::delta_undefined, "delta undefined at n = " + std::to_string(n));
    }
    deltas.push_back(d);
  }
  const FieldElement target = field(2 * std::int64_t{k}) * epsilon1 / epsilon2;
  if (deltas.back() != target) {
    std::ostringstream os;
    os << "not a perfect-expansion spec: delta_l = " << deltas.back() << " but 2k e1/e2 = " << target;
    throw Error(ErrorCode::not_perfect_spec, os.str());
  }
  return PerfectExpansionSpec(field, std::move(indices), epsilon1, epsilon2, std::move(lambdas),
                              std::move(deltas));
}

PerfectExpansion theorem1_generate(const PerfectExpansionSpec& spec, std::size_t count) {
  const auto& field = spec.field();
  const std::uint32_t k = spec.k();
  const auto constants = pq_constants(field, k);
  const FieldElement two_k = field(2 * std::int64_t{k});
  const FieldElement e1 = spec.epsilon1();

  PerfectExpansion out{CFExpansion{field, {}, false, false}, {}, {}, {}, k};
  out.indices = spec.indices().generate(count);
  // Work with 1-based vectors; index 0 is unused.
  std::vector<FieldElement> lambda{field.zero()}, delta{field.zero()};
  for (std::size_t n = 0; n < spec.l(); ++n) {
    lambda.push_back(spec.lambdas()[n]);
    delta.push_back(spec.initial_deltas()[n]);
  }
  for (std::uint64_t n = 1; lambda.size() <= count; ++n) {
    const std::uint64_t fn = spec.indices().f(n);
    if (fn != lambda.size()) {
      throw Error(ErrorCode::internal_contradiction, "index bookkeeping out of step");
    }
    lambda.push_back(alternate(e1, n) * lambda[n]);
    delta.push_back(alternate(e1, n) * delta[n] * constants.theta);
    const FieldElement base = two_k * constants.theta * delta[n];
    for (std::uint32_t i = 1; i <= 2 * k; ++i) {
      const FieldElement b = i % 2 == 0 ? base : base.inverse();
      const FieldElement v = constants.v[i - 1];
      lambda.push_back(-v * alternate(e1, n + i) * b);
      delta.push_back(alternate(e1, n + i) * field(i) * v / field(2 * std::int64_t{k} - 2 * i + 1) * b);
    }
  }
  lambda.resize(count + 1, field.zero());
  delta.resize(count + 1, field.zero());
  for (std::size_t n = 1; n <= count; ++n) {
    if (delta[n].is_zero() || lambda[n].is_zero()) {
      throw Error(ErrorCode::internal_contradiction,
                  "generated zero lambda/delta at n = " + std::to_string(n));
    }
  }

  std::uint32_t max_index = 0;
  for (auto i : out.indices) max_index = std::max(max_index, i);
  const auto a = a_sequence(field, k, max_index);

  out.cf.partial_quotients.reserve(count);
  for (std::size_t n = 1; n <= count; ++n) {
    out.cf.partial_quotients.push_back(lambda[n] * a[out.indices[n - 1]]);
  }
  out.lambdas.assign(lambda.begin() + 1, lambda.end());
  out.deltas.assign(delta.begin() + 1, delta.end());
  return out;
}

LambdaDelta corollary1_sequences(const PrimeField& field, std::uint32_t i1, FieldElement epsilon1,
                                 FieldElement epsilon2, std::size_t count) {
  const FieldElement two = field(2);
  const FieldElement head = epsilon2 * epsilon2 + two * epsilon1;
  if (head.is_zero()) {
    throw Error(ErrorCode::excluded_by_hypothesis, "excluded by hypothesis: e2^2 + 2 e1 = 0");
  }
  std::vector<FieldElement> lambda(count + 3, field.zero()), delta(count + 3, field.zero());
  lambda[1] = head * (-two).pow(i1) / epsilon2;
  delta[1] = -two * epsilon1 / epsilon2;
  for (std::size_t n = 1; 3 * n - 1 <= count; ++n) {
    lambda[3 * n - 1] = alternate(epsilon1, n) * lambda[n];
    delta[3 * n - 1] = -alternate(epsilon1, n) * delta[n] / two;
    lambda[3 * n] = -alternate(epsilon1, n + 1) * delta[n].inverse();
    delta[3 * n] = -alternate(epsilon1, n + 1) * delta[n].inverse();
    lambda[3 * n + 1] = -lambda[3 * n].inverse();
    delta[3 * n + 1] = two * delta[3 * n].inverse();
  }
  LambdaDelta out;
  out.lambdas.assign(lambda.begin() + 1, lambda.begin() + 1 + static_cast<std::ptrdiff_t>(count));
  out.deltas.assign(delta.begin() + 1, delta.begin() + 1 + static_cast<std::ptrdiff_t>(count));
  return out;
}

PerfectExpansion corollary1_generate(const PrimeField& field, std::uint32_t i1, FieldElement epsilon1,
                                     FieldElement epsilon2, std::size_t count) {
  const FieldElement head = epsilon2 * epsilon2 + field(2) * epsilon1;
  if (head.is_zero()) {
    throw Error(ErrorCode::excluded_by_hypothesis, "excluded by hypothesis: e2^2 + 2 e1 = 0");
  }
  const FieldElement lambda1 = head * (-field(2)).pow(i1) / epsilon2;
  auto spec = PerfectExpansionSpec::create(field, 1, epsilon1, epsilon2, {lambda1}, {i1});
  return theorem1_generate(spec, count);
}

std::uint32_t valuation(std::uint64_t m, std::uint64_t n) {
  if (m < 2 || n == 0) throw Error(ErrorCode::invalid_argument, "valuation needs m >= 2 and n >= 1");
  std::uint32_t e = 0;
  while (n % m == 0) {
    n /= m;
    ++e;
  }
  return e;
}

std::uint32_t corollary2_index(std::uint32_t p, std::uint64_t n) {
  if (p % 3 != 1) throw Error(ErrorCode::wrong_residue_class, "wrong residue class: need p = 1 mod 3");
  if (n == 0) throw Error(ErrorCode::invalid_argument, "indices start at 1");
  return valuation((2 * std::uint64_t{p} + 1) / 3, (std::uint64_t{p} - 1) * (4 * n - 1) / 6);
}

TypeRelation relation_of(const PerfectExpansionSpec& spec) {
  const auto pq = pq_normalized(spec.field(), spec.k());
  return {spec.l(), spec.epsilon1(), spec.epsilon2(), pq.P, pq.Q};
}

AbsoluteDegree relation_residual(const CFExpansion& cf, const TypeRelation& relation,
                                 std::int64_t precision) {
  const auto& field = cf.field;
  const std::int64_t p = field.characteristic();
  const std::size_t l = relation.l;
  if (cf.size() <= l) {
    throw Error(ErrorCode::insufficient_expansion,
                "insufficient expansion: need more than l = " + std::to_string(l) + " partial quotients");
  }
  const std::span<const Polynomial> all(cf.partial_quotients);
  const auto whole = evaluate_cf(field, all);
  const auto tail = evaluate_cf(field, all.subspan(l));

  // |alpha - x_N/y_N| <= |T|^-(2 deg y_N + 1), and the same for the tail with
  // its own denominator; exact when the expansion is complete.
  const std::int64_t deg_y = whole.den.degree().exponent();
  const std::int64_t deg_y_tail = tail.den.degree().exponent();
  const std::int64_t deg_p = relation.P.degree().exponent();
  if (!cf.complete) {
    const bool lhs_ok = p * (2 * deg_y + 1) > precision;
    const bool rhs_ok = 2 * deg_y_tail + 1 - deg_p > precision;
    if (!lhs_ok || !rhs_ok) {
      throw Error(ErrorCode::insufficient_expansion,
                  "insufficient expansion for precision T^-" + std::to_string(precision));
    }
  }
  const std::int64_t floor = -precision;
  const std::int64_t alpha_floor = -(precision / p) - 2;
  const auto alpha = LaurentSeries::from_rational(whole.num, whole.den, alpha_floor);
  const auto lhs = alpha.frobenius().truncated(floor);

  const auto alpha_tail = LaurentSeries::from_rational(tail.num, tail.den, floor - deg_p - 1);
  const auto rhs = (LaurentSeries::from_polynomial(relation.P) * alpha_tail * relation.epsilon1 +
                    LaurentSeries::from_polynomial(relation.Q) * relation.epsilon2)
                       .truncated(floor);
  return first_difference(lhs, rhs);
}

}  // namespace hqcf
