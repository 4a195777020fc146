#include "psa/lattice.hpp"

#include <algorithm>

#include "psa/errors.hpp"

namespace psa {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_)
      throw DomainError("ragged matrix literal");
    for (long v : r)
      data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw DomainError("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<Integer> IntMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  IntMatrix s(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c)
      s(r, c) = (*this)(rows[r], cols[c]);
  return s;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t c = 0; c < cols_; ++c)
    std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t r = 0; r < rows_; ++r)
    std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0)
    return;
  for (std::size_t c = 0; c < cols_; ++c)
    (*this)(dst, c) += k * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0)
    return;
  for (std::size_t r = 0; r < rows_; ++r)
    (*this)(r, dst) += k * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c)
    (*this)(r, c) = -(*this)(r, c);
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return v == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows())
    throw DomainError("matrix product dimension mismatch");
  IntMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0)
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        p(i, j) += a(i, k) * b(k, j);
    }
  return p;
}

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  SmithForm f{IntMatrix::identity(m), a, IntMatrix::identity(n), 0};
  IntMatrix& S = f.S;
  const std::size_t steps = std::min(m, n);
  std::size_t t = 0;
  for (; t < steps; ++t) {
    bool exhausted = false;
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      bool found = false;
      std::size_t pr = t, pc = t;
      Integer best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (S(i, j) != 0 && (!found || abs(S(i, j)) < best)) {
            found = true;
            best = abs(S(i, j));
            pr = i;
            pc = j;
          }
      if (!found) {
        exhausted = true;
        break;
      }
      S.swap_rows(t, pr);
      f.U.swap_rows(t, pr);
      S.swap_cols(t, pc);
      f.V.swap_cols(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (S(i, t) == 0)
          continue;
        Integer q = S(i, t) / S(t, t);
        S.add_row_multiple(i, t, -q);
        f.U.add_row_multiple(i, t, -q);
        clean = clean && S(i, t) == 0;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (S(t, j) == 0)
          continue;
        Integer q = S(t, j) / S(t, t);
        S.add_col_multiple(j, t, -q);
        f.V.add_col_multiple(j, t, -q);
        clean = clean && S(t, j) == 0;
      }
      if (!clean)
        continue;

      // Enforce d_t | every later entry.
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (S(i, j) % S(t, t) != 0) {
            S.add_row_multiple(t, i, 1);
            f.U.add_row_multiple(t, i, 1);
            divisible = false;
            break;
          }
      if (divisible)
        break;
    }
    if (exhausted)
      break;
    if (S(t, t) < 0) {
      S.negate_row(t);
      f.U.negate_row(t);
    }
  }
  f.rank = t;
  return f;
}

IntMatrix hermite_normal_form(const IntMatrix& a) {
  IntMatrix H = a;
  const std::size_t m = H.rows(), n = H.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    while (true) {
      bool found = false;
      std::size_t p = r;
      Integer best;
      for (std::size_t i = r; i < m; ++i)
        if (H(i, c) != 0 && (!found || abs(H(i, c)) < best)) {
          found = true;
          best = abs(H(i, c));
          p = i;
        }
      if (!found)
        break;
      H.swap_rows(r, p);
      bool clean = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (H(i, c) == 0)
          continue;
        Integer q = H(i, c) / H(r, c);
        H.add_row_multiple(i, r, -q);
        clean = clean && H(i, c) == 0;
      }
      if (clean)
        break;
    }
    if (H(r, c) == 0)
      continue;
    if (H(r, c) < 0)
      H.negate_row(r);
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), H(i, c).get_mpz_t(), H(r, c).get_mpz_t());
      H.add_row_multiple(i, r, -q);
    }
    ++r;
  }
  IntMatrix out(r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out(i, j) = H(i, j);
  return out;
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols())
    throw DomainError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0)
    return 1;
  IntMatrix M = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (M(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && M(p, k) == 0)
        ++p;
      if (p == n)
        return 0;
      M.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = M(i, j) * M(k, k) - M(i, k) * M(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        M(i, j) = v;
      }
    prev = M(k, k);
  }
  return sign * M(n - 1, n - 1);
}

IntMatrix clear_denominators(const RationalMatrix& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  Integer lcd = 1;
  for (const auto& row : m) {
    if (row.size() != cols)
      throw DomainError("ragged rational matrix");
    for (const auto& q : row)
      mpz_lcm(lcd.get_mpz_t(), lcd.get_mpz_t(), q.get_den_mpz_t());
  }
  IntMatrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      Rational scaled = m[r][c] * lcd;
      out(r, c) = scaled.get_num();
    }
  return out;
}

IntMatrix kernel_basis(const IntMatrix& a) {
  SmithForm f = smith_normal_form(a);
  const std::size_t m = a.rows();
  IntMatrix k(m - f.rank, m);
  for (std::size_t i = f.rank; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      k(i - f.rank, j) = f.U(i, j);
  return hermite_normal_form(k);
}

bool lattice_contains(const IntMatrix& hnf, std::vector<Integer> v) {
  if (v.size() != hnf.cols())
    throw DomainError("vector length does not match lattice dimension");
  for (std::size_t r = 0; r < hnf.rows(); ++r) {
    std::size_t p = 0;
    while (p < hnf.cols() && hnf(r, p) == 0)
      ++p;
    if (p == hnf.cols())
      continue;
    for (std::size_t c = 0; c < p; ++c)
      if (v[c] != 0)
        return false;
    if (v[p] % hnf(r, p) != 0)
      return false;
    Integer q = v[p] / hnf(r, p);
    for (std::size_t c = p; c < hnf.cols(); ++c)
      v[c] -= q * hnf(r, c);
  }
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

CenterBasis center_basis(const RationalMatrix& pi, const std::vector<std::size_t>& alive) {
  const std::size_t n = pi.size();
  for (std::size_t k = 0; k < alive.size(); ++k) {
    if (alive[k] >= n)
      throw DomainError("alive index " + std::to_string(alive[k]) + " out of range");
    if (k > 0 && alive[k] <= alive[k - 1])
      throw DomainError("alive indices must be strictly increasing");
  }
  IntMatrix cleared = clear_denominators(pi).submatrix(alive, alive);
  IntMatrix kernel = kernel_basis(cleared);
  CenterBasis basis;
  for (std::size_t r = 0; r < kernel.rows(); ++r) {
    Exponent e(n, 0);
    for (std::size_t c = 0; c < alive.size(); ++c)
      e[alive[c]] = to_int64(kernel(r, c));
    basis.generators.push_back(std::move(e));
  }
  return basis;
}

} // namespace psa
