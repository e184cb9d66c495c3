#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hqcf/polynomial.hpp"

namespace hqcf::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20261017);
  return gen;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

inline Polynomial random_poly(const PrimeField& field, std::int64_t max_degree) {
  const std::int64_t deg = uniform(-1, max_degree);
  std::vector<std::int64_t> c;
  for (std::int64_t i = 0; i <= deg; ++i) c.push_back(uniform(0, field.characteristic() - 1));
  return Polynomial(field, c);
}

inline Polynomial random_nonzero_poly(const PrimeField& field, std::int64_t max_degree) {
  for (;;) {
    Polynomial f = random_poly(field, max_degree);
    if (!f.is_zero()) return f;
  }
}

inline Polynomial poly(const PrimeField& field, std::vector<std::int64_t> c) { return Polynomial(field, c); }

}  // namespace hqcf::testing
