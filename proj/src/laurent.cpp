#include "cuspgroup/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "cuspgroup/errors.hpp"

namespace cusp {

namespace {

using Dense = std::vector<mpz_class>;  // constant term first

void trim_dense(Dense& d) {
  while (!d.empty() && d.back() == 0) d.pop_back();
}

mpz_class dense_content(const Dense& d) {
  mpz_class g = 0;
  for (const auto& c : d) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(Dense& d) {
  mpz_class g = dense_content(d);
  if (g > 1)
    for (auto& c : d) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Pseudo-remainder of a by b (deg b >= 0), integer arithmetic only.
Dense pseudo_remainder(Dense a, const Dense& b) {
  const std::size_t db = b.size() - 1;
  const mpz_class& lb = b.back();
  while (a.size() >= b.size()) {
    mpz_class la = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c *= lb;
    for (std::size_t k = 0; k <= db; ++k) a[shift + k] -= la * b[k];
    trim_dense(a);
    make_primitive(a);  // keeps coefficient growth in check; gcd unaffected
  }
  return a;
}

// Dense form of p with the monomial unit removed (constant term nonzero).
Dense strip_monomial(const LaurentPolynomial& p) { return p.coefficients(); }

} // namespace

LaurentPolynomial::LaurentPolynomial(long low, std::vector<mpz_class> coefficients)
    : low_(low), coefficients_(std::move(coefficients)) {
  trim();
}

LaurentPolynomial::LaurentPolynomial(std::initializer_list<long> coefficients) : low_(0) {
  for (long c : coefficients) coefficients_.emplace_back(c);
  trim();
}

void LaurentPolynomial::trim() {
  trim_dense(coefficients_);
  std::size_t lead = 0;
  while (lead < coefficients_.size() && coefficients_[lead] == 0) ++lead;
  if (lead) {
    coefficients_.erase(coefficients_.begin(), coefficients_.begin() + static_cast<long>(lead));
    low_ += static_cast<long>(lead);
  }
  if (coefficients_.empty()) low_ = 0;
}

mpz_class LaurentPolynomial::coefficient(long exponent) const {
  if (is_zero() || exponent < low_ || exponent > high()) return 0;
  return coefficients_[static_cast<std::size_t>(exponent - low_)];
}

LaurentPolynomial LaurentPolynomial::shifted(long by) const {
  LaurentPolynomial r = *this;
  if (!r.is_zero()) r.low_ += by;
  return r;
}

mpz_class LaurentPolynomial::content() const { return dense_content(coefficients_); }

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const long lo = std::min(low_, o.low_);
  const long hi = std::max(high(), o.high());
  Dense out(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t k = 0; k < coefficients_.size(); ++k) out[static_cast<std::size_t>(low_ - lo) + k] = coefficients_[k];
  for (std::size_t k = 0; k < o.coefficients_.size(); ++k)
    out[static_cast<std::size_t>(o.low_ - lo) + k] += o.coefficients_[k];
  low_ = lo;
  coefficients_ = std::move(out);
  trim();
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) { return *this += -o; }

LaurentPolynomial& LaurentPolynomial::operator*=(const mpz_class& c) {
  if (c == 0) {
    coefficients_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& x : coefficients_) x *= c;
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Dense out(a.coefficients_.size() + b.coefficients_.size() - 1);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    if (a.coefficients_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) out[i + j] += a.coefficients_[i] * b.coefficients_[j];
  }
  return LaurentPolynomial(a.low_ + b.low_, std::move(out));
}

mpz_class LaurentPolynomial::evaluate(long t) const {
  if (is_zero()) return 0;
  if (low_ < 0 && t != 1 && t != -1)
    throw InvalidParameter("evaluate: negative exponents need t = +-1");
  mpz_class acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * t + *it;
  if (low_ > 0) {
    mpz_class tp;
    mpz_ui_pow_ui(tp.get_mpz_t(), static_cast<unsigned long>(std::labs(t)), static_cast<unsigned long>(low_));
    if (t < 0 && (low_ % 2)) tp = -tp;
    acc *= tp;
  } else if (low_ < 0 && t == -1 && (-low_) % 2) {
    acc = -acc;
  }
  return acc;
}

std::string LaurentPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long e = high(); e >= low_; --e) {
    mpz_class c = coefficient(e);
    if (c == 0) continue;
    mpz_class a = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (a != 1 || e == 0) os << a.get_str();
    if (e != 0) {
      os << 't';
      if (e != 1) os << '^' << e;
    }
  }
  return os.str();
}

LaurentPolynomial power(const LaurentPolynomial& p, unsigned e) {
  LaurentPolynomial r = LaurentPolynomial::constant(1);
  for (unsigned k = 0; k < e; ++k) r = r * p;
  return r;
}

LaurentPolynomial remainder_monic(const LaurentPolynomial& a, const LaurentPolynomial& divisor) {
  if (divisor.is_zero() || divisor.low() != 0 || abs(divisor.leading()) != 1)
    throw InvalidParameter("remainder_monic: divisor must be a polynomial with unit leading coefficient");
  if (a.is_zero()) return a;
  if (a.low() < 0) throw InvalidParameter("remainder_monic: dividend has negative exponents");
  Dense r(static_cast<std::size_t>(a.high() + 1));
  for (long e = a.low(); e <= a.high(); ++e) r[static_cast<std::size_t>(e)] = a.coefficient(e);
  const Dense& b = divisor.coefficients();
  const std::size_t db = b.size() - 1;
  const bool negate = divisor.leading() < 0;
  while (r.size() > db) {
    mpz_class q = r.back();
    if (negate) q = -q;
    const std::size_t shift = r.size() - 1 - db;
    if (q != 0)
      for (std::size_t k = 0; k <= db; ++k) r[shift + k] -= q * b[k];
    r.pop_back();
  }
  return LaurentPolynomial(0, std::move(r));
}

LaurentPolynomial exact_divide(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (b.is_zero()) throw InvalidParameter("exact_divide: division by zero");
  if (a.is_zero()) return {};
  Dense r = strip_monomial(a);
  const Dense& d = b.coefficients();
  if (r.size() < d.size()) throw InvalidParameter("exact_divide: not divisible");
  Dense q(r.size() - d.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    const mpz_class& top = r[k + d.size() - 1];
    if (top % d.back() != 0) throw InvalidParameter("exact_divide: not divisible");
    q[k] = top / d.back();
    for (std::size_t j = 0; j < d.size(); ++j) r[k + j] -= q[k] * d[j];
  }
  for (const auto& c : r)
    if (c != 0) throw InvalidParameter("exact_divide: not divisible");
  return LaurentPolynomial(a.low() - b.low(), std::move(q));
}

bool divides(const LaurentPolynomial& b, const LaurentPolynomial& a) {
  try {
    exact_divide(a, b);
    return true;
  } catch (const InvalidParameter&) {
    return false;
  }
}

LaurentPolynomial normalize_unit(const LaurentPolynomial& p) {
  if (p.is_zero()) return p;
  LaurentPolynomial r = p.shifted(-p.low());
  if (r.leading() < 0) r *= -1;
  return r;
}

LaurentPolynomial primitive_part(const LaurentPolynomial& p) {
  if (p.is_zero()) return p;
  Dense d = p.coefficients();
  make_primitive(d);
  return LaurentPolynomial(p.low(), std::move(d));
}

LaurentPolynomial gcd(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero()) return normalize_unit(b);
  if (b.is_zero()) return normalize_unit(a);
  mpz_class c;
  mpz_class ca = a.content(), cb = b.content();
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  Dense x = primitive_part(normalize_unit(a)).coefficients();
  Dense y = primitive_part(normalize_unit(b)).coefficients();
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    if (y.size() == 1) {  // nonzero constant: primitive gcd is 1
      x = Dense{1};
      break;
    }
    Dense r = pseudo_remainder(x, y);
    x = std::move(y);
    y = std::move(r);
    make_primitive(y);
  }
  make_primitive(x);
  return normalize_unit(LaurentPolynomial(0, std::move(x)) * c);
}

} // namespace cusp
