#include <doctest.h>

#include <algorithm>
#include <set>

#include "cuspgroup/curves.hpp"
#include "cuspgroup/errors.hpp"

using namespace cusp;

TEST_CASE("prime fields") {
  const PrimeField f(13);
  CHECK(f.reduce(-1) == 12);
  CHECK(f.mul(f.inv(5), 5) == 1);
  CHECK(f.pow(f.primitive_root(), 12) == 1);
  std::set<std::int64_t> powers;
  for (int e = 0; e < 12; ++e) powers.insert(f.pow(f.primitive_root(), static_cast<std::uint64_t>(e)));
  CHECK(powers.size() == 12);
  CHECK(f.pow(f.root_of_unity(4), 2) == 12);
  CHECK_THROWS_AS(f.root_of_unity(5), InvalidParameter);
  CHECK_THROWS_AS(PrimeField(15), InvalidParameter);
  CHECK_THROWS_AS(f.inv(0), InvalidParameter);
}

TEST_CASE("choose_prime") {
  CHECK(choose_prime(3, 100).characteristic() == 103);
  CHECK(choose_prime(2, 2).characteristic() == 5);
  CHECK(choose_prime(5, 2).characteristic() == 11);
  CHECK(choose_prime(3, 2, true).characteristic() == 13);
  CHECK(admissible_primes(3, 10000, 3) == std::vector<std::int64_t>{10009, 10039, 10069});
  CHECK_THROWS_AS(choose_prime(1, 2), InvalidParameter);
}

TEST_CASE("projective points") {
  const PrimeField f(7);
  const ProjectivePoint p = ProjectivePoint::make(f, 0, 3, 6);
  CHECK(p == ProjectivePoint{0, 1, 2});
  CHECK(p.chart() == 1);
  CHECK(p.to_string() == "[0:1:2]");
  CHECK(ProjectivePoint::make(f, 2, 4, 6) == ProjectivePoint::make(f, 1, 2, 3));
  CHECK_THROWS_AS(ProjectivePoint::make(f, 0, 7, 0), InvalidParameter);
}

TEST_CASE("ternary forms") {
  const PrimeField f(101);
  CHECK(TernaryForm::monomial_count(4) == 15);
  for (int d : {0, 1, 3, 6})
    for (std::size_t i = 0; i < TernaryForm::monomial_count(d); ++i) {
      const auto e = TernaryForm::exponents(d, i);
      CHECK(e[0] + e[1] + e[2] == d);
      CHECK(TernaryForm::index(d, e[0], e[1]) == i);
    }
  CHECK(TernaryForm::exponents(2, 0) == std::array<int, 3>{2, 0, 0});
  CHECK(TernaryForm::exponents(2, 1) == std::array<int, 3>{1, 1, 0});
  CHECK(TernaryForm::exponents(2, 5) == std::array<int, 3>{0, 0, 2});

  const TernaryForm f1 = curve_form(1, f);
  CHECK(f1.nonzero_count() == 6);
  CHECK(f1.coefficient(2, 0, 0) == 1);
  CHECK(f1.coefficient(1, 0, 1) == 2);
  CHECK(f1.coefficient(1, 1, 0) == f.reduce(-2));
  CHECK(f1.coefficient(0, 1, 1) == 2);
  CHECK(f1.evaluate(0, 1, -1) == 0);

  const TernaryForm f2 = curve_form(2, f);
  CHECK(f2.coefficient(4, 0, 0) == 1);
  CHECK(f2.coefficient(0, 4, 0) == 1);
  CHECK(f2.coefficient(0, 0, 4) == 1);
  CHECK(f2.coefficient(2, 0, 2) == 2);
  CHECK(f2.coefficient(0, 2, 2) == 2);
  CHECK(f2.coefficient(2, 2, 0) == f.reduce(-2));
  CHECK(f2.nonzero_count() == 6);

  // d/dx of x^2 y = 2xy
  TernaryForm g(3, f);
  g.set(2, 1, 0, 1);
  CHECK(g.derivative(0).coefficient(1, 1, 0) == 2);
  CHECK(g.derivative(2).nonzero_count() == 0);

  const TernaryForm sq = power(linear_form(f, 1, 1, 0), 2);
  CHECK(sq.coefficient(1, 1, 0) == 2);
  CHECK(sq.proportional_to(power(linear_form(f, 3, 3, 0), 2)));
  CHECK_FALSE(sq.proportional_to(power(linear_form(f, 1, 2, 0), 2)));

  const TernaryForm oka = oka_form(3, f);
  CHECK(oka.degree() == 6);
  CHECK(oka.evaluate(1, 1, 1) == 0);
}

TEST_CASE("singular points") {
  for (auto [n, p] : std::vector<std::pair<int, int>>{{2, 5}, {3, 7}, {3, 13}, {4, 17}}) {
    const PrimeField f(p);
    auto pts = singular_points(n, f);
    CHECK(pts.size() == static_cast<std::size_t>(3 * n));
    std::sort(pts.begin(), pts.end());
    CHECK(std::adjacent_find(pts.begin(), pts.end()) == pts.end());
    CHECK(singular_points_by_scan(curve_form(n, f)) == pts);
  }
  for (int n = 3; n <= 9; ++n)
    for (auto p : admissible_primes(n, 2, 3)) {
      const PrimeField f(p);
      const TernaryForm F = curve_form(n, f);
      for (const auto& pt : singular_points(n, f)) {
        CHECK(F.evaluate(pt) == 0);
        CHECK(F.gradient_vanishes(pt));
      }
    }
  CHECK_THROWS_AS(singular_points(3, PrimeField(11)), InvalidParameter);
}

TEST_CASE("tangent cones") {
  for (int n : {3, 5, 7, 9}) {
    const PrimeField f = choose_prime(n, 100);
    for (const auto& pt : singular_points(n, f)) CHECK(tangent_cone_rank(pt, n, f) == 1);
  }
  for (const auto& pt : singular_points(4, PrimeField(17))) CHECK(tangent_cone_rank(pt, 4, PrimeField(17)) == 1);
  const PrimeField f5(5);
  for (const auto& pt : singular_points(2, f5)) CHECK(tangent_cone_rank(pt, 2, f5) == 2);

  const PrimeField f7(7);
  CHECK_THROWS_AS(tangent_cone_rank(ProjectivePoint{1, 1, 1}, 3, f7), NotSingular);
  // tangency point of the conic, smooth
  CHECK_THROWS_AS(tangent_cone_rank(ProjectivePoint{0, 1, 6}, 1, f7), NotSingular);
}

TEST_CASE("superabundance") {
  for (int n : {3, 5, 7, 9}) {
    const SuperabundanceReport r = superabundance(n);
    CHECK(r.primes.size() == 3);
    CHECK(r.s == 3);
    CHECK(static_cast<long>(r.h0) == static_cast<long>(n - 3) * (n - 2) / 2);
    CHECK(r.rank == static_cast<std::size_t>(3 * n - 3));
  }
  const SuperabundanceReport small = superabundance(3, {7, 13, 19});
  CHECK(small.rank == 6);
  CHECK_THROWS_AS(superabundance(4), InvalidParameter);
  CHECK_THROWS_AS(superabundance(3, {11}), InvalidParameter);
  CHECK_THROWS_AS(superabundance(3, {}), InvalidParameter);
}

TEST_CASE("rank mod p") {
  const PrimeField f(7);
  CHECK(rank_mod_p({{1, 2}, {2, 4}}, f) == 1);
  CHECK(rank_mod_p({{1, 2}, {3, 4}}, f) == 2);
  CHECK(rank_mod_p({{7, 14}}, f) == 0);
  CHECK(rank_mod_p({}, f) == 0);
}

TEST_CASE("quasi-adjunction and Milnor ratio") {
  const QuasiAdjunctionData q = quasi_adjunction(5);
  CHECK(q.kappa == mpq_class(3, 10));
  CHECK(q.twist_degree == 4);
  for (int n = 2; n < 30; ++n) CHECK(quasi_adjunction(n).twist_degree == n - 1);
  CHECK(milnor_ratio(3) == mpq_class(1, 2));
  CHECK(milnor_ratio(11) == mpq_class(15, 22));
  CHECK_THROWS_AS(milnor_ratio(1), InvalidParameter);
}

TEST_CASE("F_2 splits into four lines") {
  for (int p : {13, 17}) {
    const PrimeField f(p);
    const SplittingReport r = splitting_check_n2(f);
    CHECK(r.lines.size() == 4);
    CHECK(r.product_matches);
    CHECK(r.intersections.size() == 6);
    CHECK(r.branch_locus_nodes == 6);
    // independent lines x +- (y -+ i z) with i^2 = -1
    const std::int64_t i = f.root_of_unity(4);
    std::set<std::array<std::int64_t, 3>> expected;
    for (int s : {1, -1})
      for (int u : {1, -1}) expected.insert({1, f.reduce(s), f.reduce(-s * u * i)});
    CHECK(std::set<std::array<std::int64_t, 3>>(r.lines.begin(), r.lines.end()) == expected);
    // the six nodes of the arrangement are the constructed singular points
    auto pts = singular_points(2, f);
    std::sort(pts.begin(), pts.end());
    CHECK(r.intersections == pts);
  }
  CHECK_THROWS_AS(splitting_check_n2(PrimeField(7)), InvalidParameter);
}
