#pragma once

#include <cstddef>
#include <vector>

#include "psa/bracket.hpp"
#include "psa/polyring.hpp"
#include "psa/rational.hpp"

namespace psa {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Integer> row(std::size_t r) const;
  IntMatrix transpose() const;
  IntMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
  /// col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void negate_row(std::size_t r);

  bool is_zero() const;
  bool operator==(const IntMatrix&) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// U * A * V == S with U, V unimodular and S diagonal, d_1 | d_2 | ... , d_i >= 0.
struct SmithForm {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;
  std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Row Hermite normal form: echelon rows with positive pivots in ascending
/// column order, entries above each pivot reduced into [0, pivot). Zero rows are dropped.
IntMatrix hermite_normal_form(const IntMatrix& a);

/// Bareiss fraction-free determinant of a square matrix.
Integer determinant(const IntMatrix& a);

/// Multiplies through by the least common denominator of all entries.
IntMatrix clear_denominators(const RationalMatrix& m);

/// Basis of the saturated left kernel {m in Z^rows : m^T A = 0}, as the rows of
/// the returned matrix in Hermite normal form.
IntMatrix kernel_basis(const IntMatrix& a);

/// Whether v lies in the Z-span of the rows of a matrix in Hermite normal form.
bool lattice_contains(const IntMatrix& hnf, std::vector<Integer> v);

/// Monomial generators z_j = x^(g_j) of the Poisson center of the localized
/// stratum algebra, as exponent vectors in Z^n (zero outside the alive set).
struct CenterBasis {
  std::vector<Exponent> generators;

  std::size_t rank() const noexcept { return generators.size(); }
};

/// Restricts pi to the alive rows/columns, takes the saturated left kernel
/// there, and embeds the basis back into Z^n.
CenterBasis center_basis(const RationalMatrix& pi, const std::vector<std::size_t>& alive);

} // namespace psa
