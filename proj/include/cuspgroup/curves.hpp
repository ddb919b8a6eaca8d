#pragma once

// Plane curves over prime fields: the degree 2n curve f(x^n, y^n, z^n) = 0,
// its singular points, local indicators and linear systems through them.

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cusp {

class PrimeField {
public:
  explicit PrimeField(std::int64_t p);

  std::int64_t characteristic() const { return p_; }
  std::int64_t primitive_root() const { return g_; }

  std::int64_t reduce(std::int64_t a) const;
  std::int64_t add(std::int64_t a, std::int64_t b) const { return reduce(a + b); }
  std::int64_t sub(std::int64_t a, std::int64_t b) const { return reduce(a - b); }
  std::int64_t mul(std::int64_t a, std::int64_t b) const;
  std::int64_t pow(std::int64_t a, std::uint64_t e) const;
  std::int64_t inv(std::int64_t a) const;
  // A primitive m-th root of unity; m must divide p - 1.
  std::int64_t root_of_unity(std::int64_t m) const;

private:
  std::int64_t p_;
  std::int64_t g_;
};

bool is_prime(std::int64_t p);

// Smallest prime p >= minimum with p = 1 mod 2n, and p = 1 mod 4 when asked.
PrimeField choose_prime(int n, std::int64_t minimum, bool need_mod4 = false);
// The `count` smallest such primes.
std::vector<std::int64_t> admissible_primes(int n, std::int64_t minimum, std::size_t count);

struct ProjectivePoint {
  std::int64_t x = 0, y = 0, z = 0;

  static ProjectivePoint make(const PrimeField& f, std::int64_t x, std::int64_t y, std::int64_t z);
  std::int64_t operator[](int i) const { return i == 0 ? x : i == 1 ? y : z; }
  // Index of the first coordinate equal to 1.
  int chart() const;
  std::string to_string() const;
  auto operator<=>(const ProjectivePoint&) const = default;
};

// Monomials x^a y^b z^c, a + b + c = d, graded-lex with x > y > z:
// a descending, then b descending.
class TernaryForm {
public:
  TernaryForm(int degree, const PrimeField& field);

  int degree() const { return d_; }
  const PrimeField& field() const { return field_; }
  static std::size_t monomial_count(int d) { return static_cast<std::size_t>((d + 1) * (d + 2) / 2); }
  static std::size_t index(int d, int a, int b);
  // Exponents (a, b, c) of monomial i.
  static std::array<int, 3> exponents(int d, std::size_t i);

  std::int64_t coefficient(int a, int b, int c) const;
  void set(int a, int b, int c, std::int64_t v);
  const std::vector<std::int64_t>& coefficients() const { return coeffs_; }
  std::size_t nonzero_count() const;

  std::int64_t evaluate(std::int64_t x, std::int64_t y, std::int64_t z) const;
  std::int64_t evaluate(const ProjectivePoint& p) const { return evaluate(p.x, p.y, p.z); }
  TernaryForm derivative(int var) const;
  // Second partials at a point, 3x3 symmetric.
  std::array<std::array<std::int64_t, 3>, 3> hessian(const ProjectivePoint& p) const;
  bool gradient_vanishes(const ProjectivePoint& p) const;

  friend TernaryForm operator*(const TernaryForm& a, const TernaryForm& b);
  friend TernaryForm operator+(const TernaryForm& a, const TernaryForm& b);
  bool proportional_to(const TernaryForm& other) const;

private:
  int d_;
  PrimeField field_;
  std::vector<std::int64_t> coeffs_;
};

TernaryForm linear_form(const PrimeField& f, std::int64_t a, std::int64_t b, std::int64_t c);
TernaryForm power(const TernaryForm& f, int e);

// x^2n + y^2n + z^2n + 2 x^n z^n - 2 x^n y^n + 2 y^n z^n
TernaryForm curve_form(int n, const PrimeField& field);
// (y^n - z^n)^2 + (x^2 - y^2)^n
TernaryForm oka_form(int n, const PrimeField& field);

// [0:1:w], [1:0:w] with w^n = -1 and [1:w:0] with w^n = 1, each checked.
std::vector<ProjectivePoint> singular_points(int n, const PrimeField& field);
// All points of P^2(F_p) where F and its gradient vanish, sorted.
std::vector<ProjectivePoint> singular_points_by_scan(const TernaryForm& f);

// Rank of the Hessian of the affine equation in the chart of pt.
int tangent_cone_rank(const ProjectivePoint& pt, int n, const PrimeField& field);

struct SuperabundanceReport {
  int n = 0;
  std::vector<std::int64_t> primes;
  std::size_t points = 0;     // 3n
  std::size_t monomials = 0;  // n(n+1)/2
  std::size_t rank = 0;
  std::size_t h0 = 0;         // monomials - rank
  long s = 0;                 // 3n - rank
  long expected_h0 = 0;       // (n-3)(n-2)/2
};

// Degree n-1 curves through the 3n singular points; the rank is computed
// over every prime and must agree.
SuperabundanceReport superabundance(int n, const std::vector<std::int64_t>& primes);
SuperabundanceReport superabundance(int n);  // three admissible primes >= 10^4

std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> rows, const PrimeField& f);

struct QuasiAdjunctionData {
  int n = 0;
  mpq_class kappa;   // (n-2)/2n
  long twist_degree = 0;  // 2n - 3 - 2n kappa
};
QuasiAdjunctionData quasi_adjunction(int n);

// 3n(n-1) / (2n)^2
mpq_class milnor_ratio(long n);

struct SplittingReport {
  std::int64_t prime = 0;
  std::vector<std::array<std::int64_t, 3>> lines;  // normalized coefficient vectors
  bool product_matches = false;
  std::vector<ProjectivePoint> intersections;       // pairwise, distinct
  std::size_t branch_locus_nodes = 0;               // constructed singular points, 3n = 6
};

// F_2 as four lines over F_p, p = 1 mod 4.
SplittingReport splitting_check_n2(const PrimeField& field);

} // namespace cusp
