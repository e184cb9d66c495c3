#include "hqcf/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "hqcf/conjecture.hpp"
#include "hqcf/error.hpp"
#include "hqcf/hyperquadratic.hpp"
#include "hqcf/mkaouar.hpp"
#include "hqcf/serialization.hpp"

namespace hqcf {

unsigned worker_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("HQCF_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(v));
  }
  return n;
}

namespace {

// Runs job(0..count-1) on a small pool; results are collected by index.
template <class R>
std::vector<R> parallel_map(std::size_t count, const std::function<R(std::size_t)>& job) {
  std::vector<std::optional<R>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < count;) {
      try {
        slots[i] = job(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    const unsigned n = std::min<std::size_t>(worker_count(), count);
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
  }
  std::vector<R> out;
  for (std::size_t i = 0; i < count; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

struct Multiple {
  FieldElement lambda;
  std::uint32_t i;
};

// q = lambda A_{i,k} for some i, with the A sequence extended as needed.
std::optional<Multiple> as_multiple(const Polynomial& q, std::vector<Polynomial>& a, std::uint32_t k) {
  if (q.is_zero()) return std::nullopt;
  const std::int64_t deg = q.degree().exponent();
  while (a.back().degree().exponent() < deg) {
    a.push_back(quotient(a.back().frobenius(), pq_normalized(q.field(), k).P));
  }
  for (std::uint32_t i = 0; i < a.size(); ++i) {
    if (a[i].degree().exponent() != deg) continue;
    const FieldElement lambda = q.leading() / a[i].leading();
    if (q == lambda * a[i]) return Multiple{lambda, i};
  }
  return std::nullopt;
}

void print_quotients(std::ostream& out, const CFExpansion& cf, std::optional<std::uint32_t> k) {
  std::vector<Polynomial> a;
  if (k) a.push_back(Polynomial::variable(cf.field));
  for (std::size_t n = 1; n <= cf.size(); ++n) {
    out << "a_" << n << " = " << to_text(cf[n]);
    if (k) {
      if (auto m = as_multiple(cf[n], a, *k)) out << " = " << m->lambda << "*A[" << m->i << "," << *k << "]";
    }
    out << '\n';
  }
  if (cf.complete) out << "(expansion complete)\n";
}

std::string join(const std::vector<FieldElement>& xs) {
  std::ostringstream os;
  for (std::size_t j = 0; j < xs.size(); ++j) os << (j ? ", " : "") << xs[j];
  return os.str();
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::invalid_argument, what);
}

AlgebraicState input_state(const RunConfig& c, const PrimeField& field) {
  require(c.quartic != c.poly.has_value(), "give exactly one of --quartic and --poly");
  return c.quartic ? quartic_state(field) : parse_polynomial(field, *c.poly);
}

PerfectExpansionSpec spec_from(const RunConfig& c, const PrimeField& field) {
  require(c.k && c.e1 && c.e2 && !c.lambdas.empty(), "generate needs --k, --e1, --e2 and --lambdas");
  require(!c.l || *c.l == c.lambdas.size(), "--l must equal the number of lambdas");
  std::vector<FieldElement> lambdas;
  for (auto x : c.lambdas) lambdas.push_back(field(x));
  return PerfectExpansionSpec::create(field, *c.k, field(*c.e1), field(*c.e2), std::move(lambdas), c.indices);
}

int run_expand(const RunConfig& c, const PrimeField& field, std::ostream& out) {
  const CFExpansion cf = expand_root(input_state(c, field), c.n);
  if (c.json) {
    Json j = to_json(cf);
    j["complete"] = cf.complete;
    out << j.dump() << '\n';
  } else {
    print_quotients(out, cf, c.k);
  }
  return exit_pass;
}

int run_generate(const RunConfig& c, const PrimeField& field, std::ostream& out) {
  const auto spec = spec_from(c, field);
  const PerfectExpansion gen = theorem1_generate(spec, c.n);
  if (c.json) {
    Json j = to_json(gen.cf);
    j["k"] = gen.k;
    j["indices"] = gen.indices;
    Json lambdas = Json::array();
    for (auto x : gen.lambdas) lambdas.push_back(x.value());
    j["lambdas"] = lambdas;
    out << j.dump() << '\n';
    return exit_pass;
  }
  for (std::size_t n = 1; n <= gen.cf.size(); ++n) {
    out << "a_" << n << " = " << to_text(gen.cf[n]) << " = " << gen.lambdas[n - 1] << "*A["
        << gen.indices[n - 1] << "," << gen.k << "]\n";
  }
  return exit_pass;
}

int run_prop1(const RunConfig& c, const PrimeField& field, std::ostream& out) {
  std::vector<std::uint32_t> ks;
  if (c.k) {
    ks.push_back(*c.k);
  } else {
    for (std::uint32_t k = 1; 2 * k < field.characteristic(); ++k) ks.push_back(k);
  }
  const auto reports = parallel_map<Prop1Report>(
      ks.size(), [&](std::size_t j) { return prop1_verify(field, ks[j]); });
  bool pass = true;
  Json all = Json::array();
  for (const auto& r : reports) {
    pass = pass && r.pass();
    if (c.json) {
      Json checks = Json::array();
      for (const auto& ch : r.checks) checks.push_back({{"name", ch.name}, {"holds", ch.holds}});
      Json v = Json::array();
      for (auto x : r.v) v.push_back(x.value());
      all.push_back({{"p", r.p}, {"k", r.k}, {"pass", r.pass()}, {"theta", r.theta.value()}, {"v", v},
                     {"checks", checks}});
      continue;
    }
    out << "p = " << r.p << ", k = " << r.k << ": " << (r.pass() ? "pass" : "FAIL") << '\n';
    out << "  theta_" << r.k << " = " << r.theta << '\n';
    out << "  v = " << join(r.v) << '\n';
    for (const auto& ch : r.checks) {
      out << "  [" << (ch.holds ? "ok" : "fail") << "] " << ch.name;
      if (!ch.witness.empty()) out << " (" << ch.witness << ")";
      out << '\n';
    }
  }
  if (c.json) out << (all.size() == 1 ? all[0] : all).dump() << '\n';
  return pass ? exit_pass : exit_fail;
}

int run_prop2(const RunConfig& c, const PrimeField& field, std::ostream& out) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> cases;
  const std::uint32_t p = field.characteristic();
  for (std::uint32_t k = 1; 2 * k < p; ++k) {
    for (std::uint32_t i = 1; 2 * i < p; ++i) {
      if ((!c.k || *c.k == k) && (!c.i || *c.i == i)) cases.emplace_back(k, i);
    }
  }
  require(!cases.empty(), "no (k, i) with 1 <= k, i < p/2 matches");
  const auto reports = parallel_map<Prop2Report>(
      cases.size(), [&](std::size_t j) { return prop2_verify(field, cases[j].first, cases[j].second); });
  bool pass = true;
  Json all = Json::array();
  for (const auto& r : reports) {
    if (r.defined) pass = pass && r.pass();
    const std::string status = !r.defined ? "undefined" : r.pass() ? "pass" : "FAIL";
    if (c.json) {
      all.push_back({{"p", r.p}, {"k", r.k}, {"i", r.i}, {"status", status},
                     {"entries", r.predicted.size()}});
      continue;
    }
    out << "p = " << r.p << ", k = " << r.k << ", i = " << r.i << ": " << status;
    if (!r.defined) {
      out << " (" << r.undefined_reason << ")\n";
      continue;
    }
    out << ", " << r.predicted.size() << " partial quotients\n";
    for (const auto& ch : r.checks) {
      out << "  [" << (ch.holds ? "ok" : "fail") << "] " << ch.name;
      if (!ch.witness.empty()) out << " (" << ch.witness << ")";
      out << '\n';
    }
  }
  if (c.json) out << (all.size() == 1 ? all[0] : all).dump() << '\n';
  return pass ? exit_pass : exit_fail;
}

void print_verdict(std::ostream& out, const Verdict& v, const std::string& name, bool json) {
  if (json) {
    out << to_json(v).dump() << '\n';
    return;
  }
  out << name << ", p = " << v.p << ": " << (v.pass ? "pass" : "FAIL") << '\n';
  if (v.k_prime) {
    out << "(l, k', k) = (" << v.l << ", " << v.k_prime << ", " << v.k << ")\n";
  } else {
    out << "(l, k) = (" << v.l << ", " << v.k << ")\n";
  }
  if (v.epsilon1 && v.epsilon2 && v.a) {
    out << "epsilon1 = " << *v.epsilon1 << ", epsilon2 = " << *v.epsilon2 << ", a = " << *v.a
        << (v.a_equals_8_27 ? " (= 8/27)" : " (!= 8/27)") << '\n';
  }
  out << "compared terms: " << v.compared_terms << '\n';
  if (v.residual) out << "relation residual degree: " << *v.residual << '\n';
  if (!v.message.empty()) out << v.stage << ": " << v.message << '\n';
}

int run_conj1(const RunConfig& c, const PrimeField& field, std::ostream& out) {
  const Verdict v = verify_conjecture1(field, c.n);
  print_verdict(out, v, "conjecture 1", c.json);
  return v.pass ? exit_pass : exit_fail;
}

int run_conj2(const RunConfig& c, const PrimeField& field, std::ostream& out) {
  const std::int64_t p = field.characteristic();
  const std::int64_t offset = c.l ? std::int64_t{*c.l} - (p + 1) * (p + 1) / 3 : 0;
  const Verdict v = verify_conjecture2(field, c.n, offset);
  print_verdict(out, v, "conjecture 2", c.json);
  return v.pass ? exit_pass : exit_fail;
}

std::string rational_text(const Rational& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << '/' << r.denominator();
  return os.str();
}

int run_exponent(const RunConfig& c, const PrimeField& field, std::ostream& out) {
  require(c.n >= 1, "--n must be positive");
  CFExpansion cf{field, {}, false, false};
  std::optional<Rational> closed;
  std::string source;
  if (c.quartic || c.poly) {
    cf = expand_root(input_state(c, field), c.n + 1);
    if (c.quartic && field.characteristic() % 3 == 1) {
      const Verdict v = verify_conjecture1(field, c.n + 1);
      if (v.pass) {
        closed = nu0_closed_form(field.characteristic(), v.l, v.k, {});
        source = "perfect expansion of type (" + std::to_string(v.p) + ", " + std::to_string(v.l) +
                 ", " + std::to_string(v.k) + ")";
      }
    }
  } else {
    const auto spec = spec_from(c, field);
    cf = theorem1_generate(spec, c.n + 1).cf;
    closed = nu0_closed_form(field.characteristic(), spec.l(), spec.k(), spec.indices().initial());
    source = "generated perfect expansion";
  }
  const ExponentReport r = approximation_exponent(cf, c.n, closed);
  if (c.json) {
    Json j{{"p", field.characteristic()},
           {"window", r.window},
           {"nu0_empirical", rational_text(r.nu0_empirical)},
           {"argmax", r.argmax},
           {"nu0_tail", rational_text(r.nu0_tail)},
           {"tail_argmax", r.tail_argmax},
           {"nu0_closed", r.nu0_closed ? Json(rational_text(*r.nu0_closed)) : Json(nullptr)},
           {"nu", rational_text(r.nu())}};
    out << j.dump() << '\n';
    return exit_pass;
  }
  out << "window: " << r.window << " partial quotients\n";
  out << "nu0 window max: " << rational_text(r.nu0_empirical) << " at n = " << r.argmax << '\n';
  out << "nu0 tail max: " << rational_text(r.nu0_tail) << " at n = " << r.tail_argmax << '\n';
  if (r.nu0_closed) {
    out << "nu0 closed form: " << rational_text(*r.nu0_closed) << " (" << source << ")\n";
    out << "nu = " << rational_text(r.nu()) << '\n';
  } else {
    out << "nu (window) = " << rational_text(r.nu()) << '\n';
  }
  return exit_pass;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const PrimeField field(config.p);
    require(config.n >= 1, "--n must be positive");
    switch (config.command) {
      case Command::expand: return run_expand(config, field, out);
      case Command::generate: return run_generate(config, field, out);
      case Command::verify_prop1: return run_prop1(config, field, out);
      case Command::verify_prop2: return run_prop2(config, field, out);
      case Command::verify_conj1: return run_conj1(config, field, out);
      case Command::verify_conj2: return run_conj2(config, field, out);
      case Command::exponent: return run_exponent(config, field, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return exit_usage;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Continued fractions of hyperquadratic power series over F_p"};
  app.require_subcommand(1);
  RunConfig c;
  std::string target;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--p", c.p, "prime characteristic")->required();
    sub->add_option("--n", c.n, "number of partial quotients")->capture_default_str();
    sub->add_flag("--json", c.json, "JSON output");
  };
  auto spec_options = [&](CLI::App* sub) {
    sub->add_option("--k", c.k);
    sub->add_option("--l", c.l);
    sub->add_option("--e1", c.e1);
    sub->add_option("--e2", c.e2);
    sub->add_option("--lambdas", c.lambdas)->delimiter(',');
    sub->add_option("--indices", c.indices, "i(1),...,i(l)")->delimiter(',');
  };

  auto* expand = app.add_subcommand("expand", "expand the root of a polynomial with dominant X^(n-1) coefficient");
  common(expand);
  expand->add_flag("--quartic", c.quartic, "use -X^4/12 - T X^3 + X^2 + 1");
  expand->add_option("--poly", c.poly, "polynomial in X and T");
  expand->add_option("--k", c.k, "annotate multiples of A[i,k]");

  auto* generate = app.add_subcommand("generate", "perfect expansion from its initial data");
  common(generate);
  spec_options(generate);

  auto* verify = app.add_subcommand("verify", "check an identity or a conjecture");
  common(verify);
  verify->add_option("target", target, "prop1, prop2, conj1 or conj2")
      ->required()
      ->check(CLI::IsMember({"prop1", "prop2", "conj1", "conj2"}));
  verify->add_option("--k", c.k);
  verify->add_option("--i", c.i);
  verify->add_option("--l", c.l);

  auto* exponent = app.add_subcommand("exponent", "rational approximation exponent");
  common(exponent);
  exponent->add_flag("--quartic", c.quartic);
  exponent->add_option("--poly", c.poly);
  spec_options(exponent);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_pass : exit_usage;
  }

  if (expand->parsed()) {
    c.command = Command::expand;
  } else if (generate->parsed()) {
    c.command = Command::generate;
  } else if (exponent->parsed()) {
    c.command = Command::exponent;
  } else if (target == "prop1") {
    c.command = Command::verify_prop1;
  } else if (target == "prop2") {
    c.command = Command::verify_prop2;
  } else if (target == "conj1") {
    c.command = Command::verify_conj1;
  } else {
    c.command = Command::verify_conj2;
  }
  return run(c, out, err);
}

}  // namespace hqcf
