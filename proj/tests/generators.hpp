#pragma once

// Seeded random generators shared by the property tests.

#include <cstdint>
#include <random>

#include "patho/rational.hpp"
#include "patho/surd.hpp"

namespace patho::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

/// num in [-max_num, max_num], den in [1, max_den].
inline Rational random_rational(Rng& rng, long max_num, long max_den) {
  return Rational(Integer(uniform(rng, -max_num, max_num)), Integer(uniform(rng, 1, max_den)));
}

inline Rational random_unit_fraction(Rng& rng, long max_den) {
  const long den = uniform(rng, 2, max_den);
  return Rational(Integer(uniform(rng, 1, den - 1)), Integer(den));
}

inline QuadraticSurd random_surd(Rng& rng, long max_num = 50, long max_den = 20) {
  return {random_rational(rng, max_num, max_den), random_rational(rng, max_num, max_den)};
}

/// (l, r) with l < r.
inline std::pair<Rational, Rational> random_interval(Rng& rng, long max_num, long max_den) {
  Rational l = random_rational(rng, max_num, max_den);
  Rational r = random_rational(rng, max_num, max_den);
  while (l == r) r = random_rational(rng, max_num, max_den);
  if (r < l) std::swap(l, r);
  return {l, r};
}

}  // namespace patho::testing
