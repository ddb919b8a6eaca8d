#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace cusp {

// Integer Laurent polynomial sum_k c_k t^(low + k), kept canonical: the
// first and last stored coefficients are nonzero, and zero has no terms.
class LaurentPolynomial {
public:
  LaurentPolynomial() = default;
  LaurentPolynomial(long low, std::vector<mpz_class> coefficients);
  // Coefficients listed from the constant term upwards.
  LaurentPolynomial(std::initializer_list<long> coefficients);

  static LaurentPolynomial constant(const mpz_class& c) { return LaurentPolynomial(0, {c}); }
  static LaurentPolynomial monomial(const mpz_class& c, long exponent) {
    return LaurentPolynomial(exponent, {c});
  }

  bool is_zero() const { return coefficients_.empty(); }
  long low() const { return low_; }
  // Highest exponent; undefined (returns low) for zero.
  long high() const { return low_ + static_cast<long>(coefficients_.size()) - 1; }
  // Span high - low; -1 for zero.
  long degree() const { return is_zero() ? -1 : high() - low_; }
  const std::vector<mpz_class>& coefficients() const { return coefficients_; }
  mpz_class coefficient(long exponent) const;
  const mpz_class& leading() const { return coefficients_.back(); }

  LaurentPolynomial shifted(long by) const;
  mpz_class content() const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const mpz_class& c);

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a) { return a *= -1; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(LaurentPolynomial a, const mpz_class& c) { return a *= c; }
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  // Value at an integer point; t^-k is only defined for t = +-1 when k > 0.
  mpz_class evaluate(long t) const;

  std::string to_string() const;

private:
  void trim();

  long low_ = 0;
  std::vector<mpz_class> coefficients_;
};

LaurentPolynomial power(const LaurentPolynomial& p, unsigned e);

// Division of ordinary polynomials (low >= 0 assumed after shifting by the
// caller) with integer remainder; requires a unit leading coefficient of
// the divisor.
LaurentPolynomial remainder_monic(const LaurentPolynomial& a, const LaurentPolynomial& divisor);

// Exact quotient a / b when b divides a in Z[t, t^-1]; throws otherwise.
LaurentPolynomial exact_divide(const LaurentPolynomial& a, const LaurentPolynomial& b);
bool divides(const LaurentPolynomial& b, const LaurentPolynomial& a);

// Strips the monomial unit: lowest exponent 0, positive leading coefficient.
LaurentPolynomial normalize_unit(const LaurentPolynomial& p);
LaurentPolynomial primitive_part(const LaurentPolynomial& p);
// Gcd in Z[t, t^-1], normalized by normalize_unit.
LaurentPolynomial gcd(const LaurentPolynomial& a, const LaurentPolynomial& b);

} // namespace cusp
