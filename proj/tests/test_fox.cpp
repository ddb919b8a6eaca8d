#include <doctest.h>

#include "cuspgroup/errors.hpp"
#include "cuspgroup/families.hpp"
#include "cuspgroup/fox.hpp"

using namespace cusp;
using Poly = LaurentPolynomial;

TEST_CASE("Laurent polynomial basics") {
  const Poly p{1, -1, 1};  // t^2 - t + 1
  CHECK(p.degree() == 2);
  CHECK(p.low() == 0);
  CHECK(p.high() == 2);
  CHECK(p.to_string() == "t^2 - t + 1");
  CHECK(Poly{}.is_zero());
  CHECK(Poly{0, 0}.is_zero());
  CHECK(Poly(-2, {0, 3, 0}) == Poly::monomial(3, -1));
  CHECK((p - p).is_zero());
  CHECK(p * Poly{1, 1} == Poly{1, 0, 0, 1});
  CHECK(p.shifted(-1).low() == -1);
  CHECK(p.evaluate(2) == 3);
  CHECK(Poly::monomial(1, -1).evaluate(-1) == -1);
  CHECK(Poly{4, 6}.content() == 2);
  CHECK(power(Poly{-1, 1}, 3) == Poly{-1, 3, -3, 1});
}

TEST_CASE("division and gcd") {
  const Poly a = Poly{1, -1, 1} * Poly{2, 1};
  CHECK(exact_divide(a, Poly{1, -1, 1}) == Poly{2, 1});
  CHECK(divides(Poly{1, -1, 1}, a));
  CHECK_FALSE(divides(Poly{1, 1}, Poly{1, 0, 1}));
  CHECK_THROWS(exact_divide(Poly{1, 0, 1}, Poly{1, 1}));
  CHECK(remainder_monic(Poly{1, 0, 1}, Poly{1, 1}) == Poly::constant(2));
  CHECK(normalize_unit(Poly(-3, {-1, 2, -1})) == Poly{1, -2, 1});
  CHECK(primitive_part(Poly{6, -4}) == Poly{3, -2});
  CHECK(gcd(Poly{-1, 0, 1}, Poly{1, 2, 1}) == Poly{1, 1});
  CHECK(gcd(Poly{2, 4}, Poly{6}) == Poly::constant(2));
  CHECK(gcd(Poly{}, Poly{-1, -1}) == Poly{1, 1});
  CHECK(gcd(Poly::monomial(5, 3), Poly::monomial(5, -2)) == Poly::constant(5));
}

TEST_CASE("Fox derivatives") {
  const Weights w = unit_weights(2);
  CHECK(fox_derivative(Word{1}, 1, w) == Poly::constant(1));
  CHECK(fox_derivative(Word{-1}, 1, w) == Poly::monomial(-1, -1));
  CHECK(fox_derivative(Word{1, 2, -1, -2}, 1, w) == Poly{1, -1});
  CHECK(fox_derivative(Word{2, 2}, 1, w).is_zero());
  CHECK(weighted_exponent(Word{1, 2, 2, -1}, Weights{3, 1}) == 2);
}

TEST_CASE("Alexander matrices and elementary ideals") {
  const Presentation trefoil({"a", "b"}, {Word{1, 2, 1, -2, -1, -2}});
  const AlexanderMatrix m = alexander_matrix(trefoil, unit_weights(2));
  CHECK(m.rows == 1);
  CHECK(m.cols == 2);
  CHECK(normalize_unit(m(0, 0)) == Poly{1, -1, 1});
  CHECK(elementary_ideal_gcd(m, 1) == Poly{1, -1, 1});

  const AlexanderMatrix sq = alexander_matrix(Presentation({"a"}, {Word{1, 1}}), unit_weights(1));
  CHECK(sq(0, 0) == Poly{1, 1});

  CHECK(alexander_matrix(Presentation({"a", "b"}, {}), unit_weights(2)).rows == 0);

  AlexanderMatrix id{2, 2, {Poly{1}, Poly{}, Poly{}, Poly{1}}};
  CHECK(elementary_ideal_gcd(id, 1) == Poly::constant(1));
  AlexanderMatrix zero{1, 2, {Poly{}, Poly{}}};
  CHECK(elementary_ideal_gcd(zero, 1).is_zero());
  CHECK(elementary_ideal_gcd(zero, 2) == Poly::constant(1));
  CHECK_THROWS_AS(elementary_ideal_gcd(zero, 3), InvalidParameter);
}

TEST_CASE("Alexander polynomials") {
  CHECK(alexander_polynomial(Presentation({"a"}, {}), 2).polynomial == Poly::constant(1));
  const AlexanderResult r3 = alexander_polynomial(presentation_pi1_reduced(3), 2);
  CHECK(r3.polynomial == cyclotomic_target(3));
  CHECK(r3.stripped == 0);
}

TEST_CASE("cyclotomic targets") {
  CHECK(cyclotomic_base(3) == Poly{1, -1, 1});
  CHECK(cyclotomic_target(3) == Poly{1, -3, 6, -7, 6, -3, 1});
  CHECK(cyclotomic_target(3) == Poly{1, -1, 1} * Poly{1, -1, 1} * Poly{1, -1, 1});
  for (int n : {3, 5, 7, 9}) CHECK(cyclotomic_target(n).degree() == 3 * (n - 1));
  // (t^n + 1) / (t + 1) for odd n
  const Poly tn1 = Poly::monomial(1, 5) + Poly::constant(1);
  CHECK(exact_divide(tn1, Poly{1, 1}) == cyclotomic_base(5));
  CHECK_THROWS_AS(cyclotomic_target(4), InvalidParameter);
  CHECK_THROWS_AS(cyclotomic_base(1), InvalidParameter);
}
