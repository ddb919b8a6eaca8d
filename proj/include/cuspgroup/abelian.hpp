#pragma once

// Exact integer linear algebra: exponent-sum matrices, Smith normal form,
// abelianizations of finitely presented groups.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "cuspgroup/words.hpp"

namespace cusp {

class IntegerMatrix {
public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  mpz_class& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const mpz_class& k);
  void add_col_multiple(std::size_t dst, std::size_t src, const mpz_class& k);
  void negate_row(std::size_t r);

  // Vertically stacks b below a; column counts must agree.
  static IntegerMatrix stack(const IntegerMatrix& a, const IntegerMatrix& b);

  std::string to_string() const;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<mpz_class> entries_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
// Exact determinant of a square matrix (fraction-free elimination).
mpz_class determinant(const IntegerMatrix& m);

struct SmithForm {
  IntegerMatrix diagonal;  // D = U * M * V
  IntegerMatrix left;      // U, unimodular
  IntegerMatrix right;     // V, unimodular
};

SmithForm smith_normal_form(const IntegerMatrix& m);
// Diagonal entries d_1 | d_2 | ... of the Smith form (length min(rows, cols)).
std::vector<mpz_class> invariant_factors(const IntegerMatrix& m);

struct AbelianStructure {
  std::size_t free_rank = 0;
  std::vector<mpz_class> torsion;  // each >= 2, divisibility chain

  friend bool operator==(const AbelianStructure&, const AbelianStructure&) = default;
  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  // Order of a finite group, 0 when the free rank is positive.
  mpz_class order() const;
  std::string to_string() const;
};

// Cokernel of the row lattice of m inside Z^cols.
AbelianStructure cokernel(const IntegerMatrix& m);

IntegerMatrix relator_matrix(const Presentation& p);
AbelianStructure abelianization(const Presentation& p);

// Free rank of the abelianized commutator subgroup of the reduced
// four-generator group for odd n, via a Reidemeister-Schreier presentation
// of the kernel of the map onto Z/2n.
std::size_t commutator_abelianization_rank(int n);

} // namespace cusp
