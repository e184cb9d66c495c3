#include "hqcf/serialization.hpp"

#include <cctype>
#include <string>

#include "hqcf/error.hpp"

namespace hqcf {

Json to_json(const Polynomial& f) {
  return {{"p", f.characteristic()}, {"ext", false},
          {"coeffs", std::vector<std::uint32_t>(f.raw().begin(), f.raw().end())}};
}

Json to_json(const ExtPolynomial& f) {
  Json coeffs = Json::array();
  std::uint32_t p = 0, d = 0;
  for (const auto& c : f.coeffs()) {
    coeffs.push_back({c.a0().value(), c.a1().value()});
    p = c.a0().modulus();
    d = c.nonresidue().value();
  }
  return {{"p", p}, {"ext", true}, {"d", d}, {"coeffs", coeffs}};
}

Json to_json(const CFExpansion& cf) {
  Json pq = Json::array();
  for (const auto& a : cf.partial_quotients) {
    pq.push_back(std::vector<std::uint32_t>(a.raw().begin(), a.raw().end()));
  }
  return {{"p", cf.field.characteristic()}, {"pq", pq}};
}

Json to_json(const Verdict& v) {
  auto value = [](const std::optional<FieldElement>& x) -> Json {
    return x ? Json(x->value()) : Json(nullptr);
  };
  Json j{{"p", v.p},
         {"pass", v.pass},
         {"epsilon1", value(v.epsilon1)},
         {"epsilon2", value(v.epsilon2)},
         {"a", value(v.a)},
         {"a_equals_8_27", v.a_equals_8_27},
         {"compared_terms", v.compared_terms}};
  if (!v.pass) {
    j["stage"] = v.stage;
    j["message"] = v.message;
  }
  return j;
}

namespace {

std::uint32_t modulus_of(const Json& j) {
  if (!j.is_object() || !j.contains("p") || !j["p"].is_number_integer()) {
    throw Error(ErrorCode::parse_error, "parse error: missing integer field \"p\"");
  }
  return j["p"].get<std::uint32_t>();
}

std::vector<std::int64_t> coefficient_list(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::parse_error, "parse error: coefficients must be an array");
  std::vector<std::int64_t> out;
  for (const auto& c : j) {
    if (!c.is_number_integer()) throw Error(ErrorCode::parse_error, "parse error: non-integer coefficient");
    out.push_back(c.get<std::int64_t>());
  }
  return out;
}

}  // namespace

Polynomial polynomial_from_json(const Json& j) {
  const PrimeField field(modulus_of(j));
  if (j.value("ext", false)) {
    throw Error(ErrorCode::parse_error, "parse error: expected a polynomial over F_p");
  }
  if (!j.contains("coeffs")) throw Error(ErrorCode::parse_error, "parse error: missing \"coeffs\"");
  return Polynomial(field, coefficient_list(j["coeffs"]));
}

CFExpansion cf_from_json(const Json& j) {
  const PrimeField field(modulus_of(j));
  if (!j.contains("pq") || !j["pq"].is_array()) {
    throw Error(ErrorCode::parse_error, "parse error: missing array \"pq\"");
  }
  CFExpansion cf{field, {}, false, false};
  for (const auto& a : j["pq"]) cf.partial_quotients.emplace_back(field, coefficient_list(a));
  return cf;
}

namespace {

// Coefficients in X, each in F_p[T].
using Bivariate = std::vector<Polynomial>;

void trim(Bivariate& f) {
  while (f.size() > 1 && f.back().is_zero()) f.pop_back();
}

Bivariate add(Bivariate a, const Bivariate& b) {
  if (a.size() < b.size()) a.resize(b.size(), Polynomial(b[0].field()));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  trim(a);
  return a;
}

Bivariate negate(Bivariate a) {
  for (auto& c : a) c = -c;
  return a;
}

Bivariate multiply(const Bivariate& a, const Bivariate& b) {
  Bivariate out(a.size() + b.size() - 1, Polynomial(a[0].field()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

class Parser {
 public:
  Parser(const PrimeField& field, std::string_view text) : field_(field), text_(text) {}

  Bivariate parse() {
    Bivariate f = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::parse_error,
                "parse error at position " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::int64_t integer() {
    skip_space();
    const std::size_t start = pos_;
    std::int64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (value > (std::int64_t{1} << 40)) fail("integer too large");
      value = value * 10 + (text_[pos_++] - '0');
    }
    if (pos_ == start) fail("expected an integer");
    return value;
  }

  Bivariate constant(FieldElement c) const { return {Polynomial::constant(field_, c)}; }

  Bivariate expression() {
    Bivariate f = accept('-') ? negate(term()) : term();
    for (;;) {
      if (accept('+')) {
        f = add(std::move(f), term());
      } else if (accept('-')) {
        f = add(std::move(f), negate(term()));
      } else {
        return f;
      }
    }
  }

  Bivariate term() {
    Bivariate f = power();
    for (;;) {
      if (accept('*')) {
        f = multiply(f, power());
      } else if (accept('/')) {
        const Bivariate d = power();
        if (d.size() != 1 || !d[0].is_constant()) fail("division by a non-constant");
        if (d[0].is_zero()) {
          throw Error(ErrorCode::rational_not_embeddable,
                      "rational not embeddable: denominator divisible by p");
        }
        for (auto& c : f) c *= d[0].coeff(0).inverse();
      } else {
        return f;
      }
    }
  }

  Bivariate power() {
    Bivariate base = atom();
    if (!accept('^')) return base;
    const std::int64_t e = integer();
    if (e > 100000) fail("exponent too large");
    Bivariate out = constant(field_.one());
    for (std::int64_t i = 0; i < e; ++i) out = multiply(out, base);
    return out;
  }

  Bivariate atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Bivariate f = expression();
      if (!accept(')')) fail("expected ')'");
      return f;
    }
    if (c == 'T') {
      ++pos_;
      return {Polynomial::variable(field_)};
    }
    if (c == 'X') {
      ++pos_;
      return {Polynomial(field_), Polynomial::constant(field_, field_.one())};
    }
    if (c == '-') {
      ++pos_;
      return negate(atom());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return constant(field_(integer()));
    fail(std::string("unexpected '") + c + "'");
  }

  const PrimeField& field_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

AlgebraicState parse_polynomial(const PrimeField& field, std::string_view text) {
  return {Parser(field, text).parse()};
}

}  // namespace hqcf
