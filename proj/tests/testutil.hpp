#pragma once

#include <cstdint>
#include <random>

#include "ciani/invariants.hpp"

namespace ciani::testutil {

inline std::mt19937_64 rng(uint64_t seed) { return std::mt19937_64(seed); }

inline long rand_long(std::mt19937_64& g, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(g);
}

inline Rational rand_rational(std::mt19937_64& g, long lo, long hi) {
  return Rational(rand_long(g, lo, hi));
}

inline Rational rand_nonzero(std::mt19937_64& g, long lo, long hi) {
  for (;;) {
    Rational r = rand_rational(g, lo, hi);
    if (!r.is_zero()) return r;
  }
}

inline StandardModel random_model(std::mt19937_64& g, long range = 9) {
  return {rand_rational(g, -range, range), rand_rational(g, -range, range),
          rand_rational(g, -range, range), rand_rational(g, -range, range),
          rand_rational(g, -range, range), rand_rational(g, -range, range)};
}

inline StandardModel random_smooth_model(std::mt19937_64& g, long range = 9) {
  for (;;) {
    StandardModel m = random_model(g, range);
    if (is_smooth(m)) return m;
  }
}

inline CianiTuple random_tuple(std::mt19937_64& g, long range = 9) {
  return {rand_rational(g, -range, range), rand_rational(g, -range, range),
          rand_rational(g, -range, range), rand_rational(g, -range, range)};
}

}  // namespace ciani::testutil
