#pragma once

#include <cstdint>
#include <random>

#include "cpstar/poly.hpp"
#include "cpstar/univar.hpp"

namespace cpstar {

/// Seeded generator of test elements. Coefficients come from the pool
/// {0, +-1, +-1/2, +-i}.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi);
  Complex coeff();
  Complex nonzero_coeff();

  /// Polynomial in z, zb of total degree <= max_degree, no symmetry imposed.
  LaurentElem polynomial(const VarSpace& s, int max_degree, int terms = 4);
  /// Polynomial in x of degree <= max_degree.
  UnivarPoly radial_poly(int max_degree);
  LaurentElem radial(const VarSpace& s, int max_degree);
  /// Terms of equal bidegree (a, a), a <= max_degree, over x^m, m <= max_degree.
  LaurentElem invariant(const VarSpace& s, int max_degree, int terms = 3);
  /// Bidegree-(m, m) numerator over x^m, 1 <= m <= max_degree.
  LaurentElem homogeneous(const VarSpace& s, int max_degree, int terms = 3);

 private:
  Monomial random_monomial(const VarSpace& s, int hol, int antihol, int block = 0);

  std::mt19937_64 rng_;
};

}  // namespace cpstar
