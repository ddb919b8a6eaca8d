#pragma once

// Fox free differential calculus and Alexander polynomials of presentations.

#include <cstddef>
#include <vector>

#include "cuspgroup/laurent.hpp"
#include "cuspgroup/words.hpp"

namespace cusp {

// Per-generator exponent of t under the abelian map phi; every generator
// maps to t^weights[g-1].
using Weights = std::vector<long>;

Weights unit_weights(std::size_t generator_count);

// t^(weighted exponent sum of w)
long weighted_exponent(const Word& w, const Weights& weights);

// d w / d g, pushed forward to Z[t, t^-1].
LaurentPolynomial fox_derivative(const Word& w, int g, const Weights& weights);

struct AlexanderMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<LaurentPolynomial> entries;  // row-major

  const LaurentPolynomial& operator()(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
  LaurentPolynomial& operator()(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
};

AlexanderMatrix alexander_matrix(const Presentation& p, const Weights& weights);

// Gcd of all (cols - corank)-minors, normalized to have no t factor and a
// positive leading coefficient; zero when every minor vanishes.
LaurentPolynomial elementary_ideal_gcd(const AlexanderMatrix& m, std::size_t corank);

struct AlexanderResult {
  LaurentPolynomial raw;         // normalized first elementary ideal gcd
  LaurentPolynomial polynomial;  // after removing (t - 1) factors
  std::size_t stripped = 0;      // number of (t - 1) factors removed
};

// All generators are treated as meridians (weight 1).
AlexanderResult alexander_polynomial(const Presentation& p, std::size_t strip_t_minus_1);

// (t^(n-1) - t^(n-2) + ... - t + 1)^3 for odd n >= 3.
LaurentPolynomial cyclotomic_base(int n);
LaurentPolynomial cyclotomic_target(int n);

} // namespace cusp
