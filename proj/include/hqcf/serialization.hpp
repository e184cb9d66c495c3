#pragma once

#include <string_view>

#include <json.hpp>

#include "hqcf/conjecture.hpp"
#include "hqcf/continued_fraction.hpp"
#include "hqcf/mkaouar.hpp"
#include "hqcf/polynomial.hpp"

namespace hqcf {

using Json = nlohmann::json;

/// {"p": 13, "ext": false, "coeffs": [c_0, c_1, ...]}
Json to_json(const Polynomial& f);
/// {"p": 13, "ext": true, "d": 2, "coeffs": [[a0, a1], ...]}
Json to_json(const ExtPolynomial& f);
/// {"p": 13, "pq": [[...], [...], ...]}
Json to_json(const CFExpansion& cf);
Json to_json(const Verdict& v);

// Throw Error(parse_error) on malformed input.
Polynomial polynomial_from_json(const Json& j);
CFExpansion cf_from_json(const Json& j);

/// Polynomial in X over F_p[T] from text such as "X^4 + X^2 - T*X - 1/12".
/// Division is allowed by nonzero constants only.
AlgebraicState parse_polynomial(const PrimeField& field, std::string_view text);

}  // namespace hqcf
