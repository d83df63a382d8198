#pragma once

#include "spectral/ko_signs.hpp"
#include "spectral/matrix.hpp"

#include <random>

namespace testing_support {

using namespace spectral;

inline KOSigns S(int e, int ep, int edp) { return {sign_from_int(e), sign_from_int(ep), sign_from_int(edp)}; }
inline KOClass C(const char* text) { return KOClass::parse(text); }

// Small Gaussian rationals: numerators in [-4, 4], denominators in [1, 3].
class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  Rational rational() {
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    Rational q(num(rng_), den(rng_));
    q.canonicalize();
    return q;
  }
  ExactComplex complex() { return {rational(), rational()}; }
  CMatrix matrix(std::size_t n) {
    CMatrix m(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = complex();
    return m;
  }
  CMatrix hermitian(std::size_t n) {
    const CMatrix m = matrix(n);
    return m + dagger(m);
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace testing_support
