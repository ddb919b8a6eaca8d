#include "cuspgroup/abelian.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <utility>

#include "cuspgroup/errors.hpp"

namespace cusp {

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidParameter("IntegerMatrix: ragged initializer");
    for (long v : r) entries_.emplace_back(v);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src, const mpz_class& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c)
    if ((*this)(src, c) != 0) (*this)(dst, c) += k * (*this)(src, c);
}

void IntegerMatrix::add_col_multiple(std::size_t dst, std::size_t src, const mpz_class& k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r)
    if ((*this)(r, src) != 0) (*this)(r, dst) += k * (*this)(r, src);
}

void IntegerMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

IntegerMatrix IntegerMatrix::stack(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.cols()) throw InvalidParameter("IntegerMatrix::stack: column mismatch");
  IntegerMatrix out(a.rows() + b.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, c) = b(r, c);
  return out;
}

std::string IntegerMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidParameter("IntegerMatrix product: shape mismatch");
  IntegerMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

mpz_class determinant(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidParameter("determinant: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntegerMatrix a = m;
  mpz_class sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

int cmpabs(const mpz_class& a, const mpz_class& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

struct Position {
  std::size_t row, col;
};

std::optional<Position> smallest_nonzero(const IntegerMatrix& a, std::size_t t) {
  std::optional<Position> best;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      if (!best || cmpabs(a(i, j), a(best->row, best->col)) < 0) best = Position{i, j};
    }
  return best;
}

} // namespace

SmithForm smith_normal_form(const IntegerMatrix& m) {
  SmithForm f{m, IntegerMatrix::identity(m.rows()), IntegerMatrix::identity(m.cols())};
  IntegerMatrix& a = f.diagonal;
  IntegerMatrix& u = f.left;
  IntegerMatrix& v = f.right;
  const std::size_t limit = std::min(a.rows(), a.cols());

  auto move_to = [&](std::size_t t, Position p) {
    a.swap_rows(t, p.row);
    u.swap_rows(t, p.row);
    a.swap_cols(t, p.col);
    v.swap_cols(t, p.col);
  };

  for (std::size_t t = 0; t < limit; ++t) {
    auto pivot = smallest_nonzero(a, t);
    if (!pivot) break;
    move_to(t, *pivot);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        mpz_class q = a(i, t) / a(t, t);  // truncating: |remainder| < |pivot|
        a.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        mpz_class q = a(t, j) / a(t, t);
        a.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        // a remainder is now smaller than the pivot; bring the smallest in
        Position best{t, t};
        for (std::size_t i = t + 1; i < a.rows(); ++i)
          if (a(i, t) != 0 && cmpabs(a(i, t), a(best.row, best.col)) < 0) best = {i, t};
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (a(t, j) != 0 && cmpabs(a(t, j), a(best.row, best.col)) < 0) best = {t, j};
        move_to(t, best);
        continue;
      }
      // divisibility: pivot must divide the remaining block
      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < a.rows() && !offender; ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (a(i, j) % a(t, t) != 0) {
            offender = i;
            break;
          }
      if (!offender) break;
      a.add_row_multiple(t, *offender, 1);
      u.add_row_multiple(t, *offender, 1);
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
  }
  return f;
}

std::vector<mpz_class> invariant_factors(const IntegerMatrix& m) {
  SmithForm f = smith_normal_form(m);
  std::vector<mpz_class> d;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) d.push_back(f.diagonal(i, i));
  return d;
}

mpz_class AbelianStructure::order() const {
  if (free_rank) return 0;
  mpz_class o = 1;
  for (const auto& d : torsion) o *= d;
  return o;
}

std::string AbelianStructure::to_string() const {
  std::string out;
  if (free_rank) out = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
  for (const auto& d : torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + d.get_str();
  }
  return out.empty() ? "0" : out;
}

AbelianStructure cokernel(const IntegerMatrix& m) {
  AbelianStructure s;
  std::size_t rank = 0;
  for (const auto& d : invariant_factors(m)) {
    if (d == 0) continue;
    ++rank;
    if (d != 1) s.torsion.push_back(d);
  }
  s.free_rank = m.cols() - rank;
  return s;
}

IntegerMatrix relator_matrix(const Presentation& p) {
  IntegerMatrix m(p.relator_count(), p.generator_count());
  for (std::size_t r = 0; r < p.relator_count(); ++r) {
    auto sums = exponent_sums(p.relators()[r], p.generator_count());
    for (std::size_t c = 0; c < sums.size(); ++c) m(r, c) = sums[c];
  }
  return m;
}

AbelianStructure abelianization(const Presentation& p) { return cokernel(relator_matrix(p)); }

} // namespace cusp
