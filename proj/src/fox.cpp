#include "cuspgroup/fox.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <limits>

#include "cuspgroup/errors.hpp"

namespace cusp {

Weights unit_weights(std::size_t generator_count) { return Weights(generator_count, 1); }

long weighted_exponent(const Word& w, const Weights& weights) {
  long e = 0;
  for (Letter x : w) {
    long wt = weights.at(static_cast<std::size_t>(std::abs(x)) - 1);
    e += x > 0 ? wt : -wt;
  }
  return e;
}

LaurentPolynomial fox_derivative(const Word& w, int g, const Weights& weights) {
  // exponents stay within +-(|w| * max weight) of zero
  long span = 1;
  for (Letter x : w) span += std::labs(weights.at(static_cast<std::size_t>(std::abs(x)) - 1));
  std::vector<long> acc(static_cast<std::size_t>(2 * span + 1), 0);
  long e = 0;
  bool any = false;
  for (Letter x : w) {
    const long wt = weights[static_cast<std::size_t>(std::abs(x)) - 1];
    if (x == g) {
      acc[static_cast<std::size_t>(e + span)] += 1;
      any = true;
    }
    if (x > 0) {
      e += wt;
    } else {
      e -= wt;
      if (x == -g) {
        acc[static_cast<std::size_t>(e + span)] -= 1;
        any = true;
      }
    }
  }
  if (!any) return {};
  std::vector<mpz_class> coeffs(acc.begin(), acc.end());
  return LaurentPolynomial(-span, std::move(coeffs));
}

AlexanderMatrix alexander_matrix(const Presentation& p, const Weights& weights) {
  if (weights.size() != p.generator_count()) throw InvalidParameter("alexander_matrix: weight count mismatch");
  AlexanderMatrix m{p.relator_count(), p.generator_count(), {}};
  m.entries.reserve(m.rows * m.cols);
  for (const auto& r : p.relators())
    for (int g = 1; g <= static_cast<int>(m.cols); ++g) m.entries.push_back(fox_derivative(r, g, weights));
  return m;
}

namespace {

using Poly = LaurentPolynomial;

// Lexicographic k-subsets of {0..n-1}; returns false when exhausted.
bool next_subset(std::vector<std::size_t>& s, std::size_t n) {
  const std::size_t k = s.size();
  for (std::size_t i = k; i-- > 0;) {
    if (s[i] < n - k + i) {
      ++s[i];
      for (std::size_t j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> first_subset(std::size_t k) {
  std::vector<std::size_t> s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = i;
  return s;
}

// Cofactor expansion; `reduce` is applied to every product.
Poly laplace_det(const std::vector<const Poly*>& cells, std::size_t k, const std::function<Poly(const Poly&)>& reduce) {
  if (k == 1) return *cells[0];
  Poly det;
  std::vector<const Poly*> minor((k - 1) * (k - 1));
  for (std::size_t c = 0; c < k; ++c) {
    if (cells[c]->is_zero()) continue;
    for (std::size_t r = 1; r < k; ++r) {
      std::size_t mc = 0;
      for (std::size_t cc = 0; cc < k; ++cc) {
        if (cc == c) continue;
        minor[(r - 1) * (k - 1) + mc++] = cells[r * k + cc];
      }
    }
    Poly sub = laplace_det(minor, k - 1, reduce);
    if (sub.is_zero()) continue;
    Poly term = reduce(*cells[c] * sub);
    if (c % 2) det -= term;
    else det += term;
  }
  return reduce(det);
}

// Fraction-free elimination over Z[t]; exact divisions.
Poly bareiss_det(std::vector<Poly> a, std::size_t k) {
  Poly prev = Poly::constant(1);
  bool negate = false;
  for (std::size_t p = 0; p + 1 < k; ++p) {
    if (a[p * k + p].is_zero()) {
      std::size_t s = p + 1;
      while (s < k && a[s * k + p].is_zero()) ++s;
      if (s == k) return {};
      for (std::size_t c = 0; c < k; ++c) std::swap(a[p * k + c], a[s * k + c]);
      negate = !negate;
    }
    for (std::size_t i = p + 1; i < k; ++i)
      for (std::size_t j = p + 1; j < k; ++j)
        a[i * k + j] = exact_divide(a[p * k + p] * a[i * k + j] - a[i * k + p] * a[p * k + j], prev);
    prev = a[p * k + p];
  }
  Poly d = a[k * k - 1];
  return negate ? -d : d;
}

bool unit_leading(const Poly& g) { return !g.is_zero() && g.low() == 0 && abs(g.leading()) == 1; }

} // namespace

LaurentPolynomial elementary_ideal_gcd(const AlexanderMatrix& m, std::size_t corank) {
  if (corank > m.cols || corank == 0) throw InvalidParameter("elementary_ideal_gcd: corank out of range");
  const std::size_t k = m.cols - corank;
  if (k == 0) return Poly::constant(1);  // the empty minor
  if (k > m.rows) return {};

  // Row and column monomial scalings are units: make every entry a polynomial.
  AlexanderMatrix a = m;
  for (std::size_t r = 0; r < a.rows; ++r) {
    long lo = std::numeric_limits<long>::max();
    for (std::size_t c = 0; c < a.cols; ++c)
      if (!a(r, c).is_zero()) lo = std::min(lo, a(r, c).low());
    if (lo == std::numeric_limits<long>::max()) continue;
    for (std::size_t c = 0; c < a.cols; ++c) a(r, c) = a(r, c).shifted(-lo);
  }

  mpz_class content = 0;
  Poly g;  // primitive gcd of the minors seen so far
  AlexanderMatrix reduced;
  Poly reduced_for;
  const auto identity = [](const Poly& p) { return p; };

  auto rows = first_subset(k);
  do {
    auto cols = first_subset(k);
    do {
      const bool fast = content == 1 && unit_leading(g) && g.degree() >= 1 && k <= 6;
      Poly det;
      if (fast) {
        if (!(reduced_for == g)) {
          reduced = a;
          for (auto& e : reduced.entries) e = remainder_monic(e, g);
          reduced_for = g;
        }
        std::vector<const Poly*> cells;
        for (auto r : rows)
          for (auto c : cols) cells.push_back(&reduced(r, c));
        const auto mod_g = [&g](const Poly& p) { return remainder_monic(p, g); };
        det = laplace_det(cells, k, mod_g);
        if (det.is_zero()) continue;
      } else {
        if (k <= 4) {
          std::vector<const Poly*> cells;
          for (auto r : rows)
            for (auto c : cols) cells.push_back(&a(r, c));
          det = laplace_det(cells, k, identity);
        } else {
          std::vector<Poly> cells;
          for (auto r : rows)
            for (auto c : cols) cells.push_back(a(r, c));
          det = bareiss_det(std::move(cells), k);
        }
        if (det.is_zero()) continue;
        mpz_class dc = det.content();
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), dc.get_mpz_t());
      }
      g = gcd(g, primitive_part(det));
      if (content == 1 && g.degree() == 0) return Poly::constant(1);
    } while (next_subset(cols, a.cols));
  } while (next_subset(rows, a.rows));

  if (g.is_zero()) return {};
  return normalize_unit(g * content);
}

AlexanderResult alexander_polynomial(const Presentation& p, std::size_t strip_t_minus_1) {
  AlexanderResult res;
  if (p.generator_count() == 0) {
    res.raw = res.polynomial = Poly::constant(1);
    return res;
  }
  AlexanderMatrix m = alexander_matrix(p, unit_weights(p.generator_count()));
  res.raw = elementary_ideal_gcd(m, 1);
  res.polynomial = res.raw;
  const Poly t_minus_1{-1, 1};
  while (res.stripped < strip_t_minus_1 && !res.polynomial.is_zero() && divides(t_minus_1, res.polynomial)) {
    res.polynomial = normalize_unit(exact_divide(res.polynomial, t_minus_1));
    ++res.stripped;
  }
  return res;
}

LaurentPolynomial cyclotomic_base(int n) {
  if (n < 3 || n % 2 == 0) throw InvalidParameter("cyclotomic target needs odd n >= 3");
  std::vector<mpz_class> c(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) c[static_cast<std::size_t>(k)] = (k % 2) ? -1 : 1;
  return Poly(0, std::move(c));
}

LaurentPolynomial cyclotomic_target(int n) { return power(cyclotomic_base(n), 3); }

} // namespace cusp
