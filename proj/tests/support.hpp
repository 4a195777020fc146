#pragma once

// Test-side random generators and naive oracles. Nothing here calls the
// library's arithmetic: oracles evaluate at rational points term by term.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "psa/bracket.hpp"
#include "psa/lattice.hpp"
#include "psa/polyring.hpp"

namespace psa::test {

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0) {
  std::seed_seq seq{seed, stream, std::uint64_t{0x5eed}};
  return Rng(seq);
}

inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline Rational random_rational(Rng& rng, std::int64_t num_bound = 5, std::int64_t den_bound = 4) {
  Rational q(static_cast<long>(uniform_int(rng, -num_bound, num_bound)),
             static_cast<long>(uniform_int(rng, 1, den_bound)));
  q.canonicalize();
  return q;
}

inline Rational random_nonzero_rational(Rng& rng, std::int64_t num_bound = 5, std::int64_t den_bound = 4) {
  Rational q;
  do {
    q = random_rational(rng, num_bound, den_bound);
  } while (q == 0);
  return q;
}

/// Antisymmetric matrix with rational entries above the diagonal.
inline RationalMatrix random_pi(Rng& rng, std::size_t n, bool nonzero = false) {
  RationalMatrix pi(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      pi[i][j] = nonzero ? random_nonzero_rational(rng, 3, 2) : random_rational(rng, 3, 2);
      pi[j][i] = -pi[i][j];
    }
  return pi;
}

inline IntMatrix random_int_antisymmetric(Rng& rng, std::size_t n, std::int64_t bound) {
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      a(i, j) = static_cast<long>(uniform_int(rng, -bound, bound));
      a(j, i) = -a(i, j);
    }
  return a;
}

inline IntMatrix random_int_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::int64_t bound) {
  IntMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      a(i, j) = static_cast<long>(uniform_int(rng, -bound, bound));
  return a;
}

inline Exponent random_exponent(Rng& rng, const VarContext& ctx, std::int64_t max_exp) {
  Exponent e(ctx.arity());
  for (auto& x : e)
    x = uniform_int(rng, ctx.is_laurent() ? -max_exp : 0, max_exp);
  return e;
}

inline LaurentPoly random_poly(Rng& rng, const ContextPtr& ctx, std::size_t max_terms = 4, std::int64_t max_exp = 2) {
  LaurentPoly f(ctx);
  std::size_t terms = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(max_terms)));
  for (std::size_t t = 0; t < terms; ++t)
    f.add_term(random_exponent(rng, *ctx, max_exp), random_nonzero_rational(rng));
  return f;
}

inline std::vector<Rational> random_point(Rng& rng, std::size_t n) {
  std::vector<Rational> p(n);
  for (auto& x : p)
    x = random_nonzero_rational(rng, 7, 5);
  return p;
}

inline RationalMatrix all_ones_pi(std::size_t n) {
  RationalMatrix pi(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      pi[i][j] = 1;
      pi[j][i] = -1;
    }
  return pi;
}

inline std::vector<std::string> var_names(std::size_t n, const std::string& stem = "x") {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i)
    v.push_back(stem + std::to_string(i + 1));
  return v;
}

// ---------------------------------------------------------------------------
// Naive oracles

inline Rational naive_pow(const Rational& b, std::int64_t e) {
  Rational r = 1;
  for (std::int64_t k = 0; k < (e < 0 ? -e : e); ++k)
    r *= b;
  return e < 0 ? Rational(1 / r) : r;
}

/// f(p), summed term by term.
inline Rational naive_eval(const LaurentPoly& f, const std::vector<Rational>& p) {
  Rational s = 0;
  for (const auto& [e, c] : f.terms()) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      t *= naive_pow(p[i], e[i]);
    s += t;
  }
  return s;
}

/// (d f / d x_i)(p) from the power rule applied to each term.
inline Rational naive_partial_eval(const LaurentPoly& f, std::size_t i, const std::vector<Rational>& p) {
  Rational s = 0;
  for (const auto& [e, c] : f.terms()) {
    if (e[i] == 0)
      continue;
    Rational t = c * static_cast<long>(e[i]);
    for (std::size_t k = 0; k < e.size(); ++k)
      t *= naive_pow(p[k], k == i ? e[k] - 1 : e[k]);
    s += t;
  }
  return s;
}

/// Structure function B_ij(p) = {x_i, x_j}(p).
using StructureAt = std::function<Rational(std::size_t, std::size_t, const std::vector<Rational>&)>;

inline StructureAt log_canonical_structure(const RationalMatrix& pi) {
  return [pi](std::size_t i, std::size_t j, const std::vector<Rational>& p) -> Rational { return pi[i][j] * p[i] * p[j]; };
}

/// {f, g}(p) = sum_ij B_ij(p) f_i(p) g_j(p).
inline Rational naive_bracket_eval(const StructureAt& b, const LaurentPoly& f, const LaurentPoly& g,
                                   const std::vector<Rational>& p) {
  Rational s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    Rational fi = naive_partial_eval(f, i, p);
    if (fi == 0)
      continue;
    for (std::size_t j = 0; j < p.size(); ++j)
      if (i != j)
        s += b(i, j, p) * fi * naive_partial_eval(g, j, p);
  }
  return s;
}

/// m^T A = 0, computed entry by entry.
inline bool naive_left_kernel(const IntMatrix& a, const std::vector<Integer>& m) {
  for (std::size_t c = 0; c < a.cols(); ++c) {
    Integer s = 0;
    for (std::size_t r = 0; r < a.rows(); ++r)
      s += m[r] * a(r, c);
    if (s != 0)
      return false;
  }
  return true;
}

/// Whether m is an integer combination of the (independent) rows of B,
/// by exact Gaussian elimination over the rationals.
inline bool naive_in_row_lattice(const IntMatrix& b, const std::vector<Integer>& m) {
  const std::size_t k = b.rows(), n = b.cols();
  // Solve c * B = m: augmented system B^T c = m with n equations, k unknowns.
  std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j)
      aug[i][j] = Rational(b(j, i));
    aug[i][k] = Rational(m[i]);
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < k && row < n; ++col) {
    std::size_t sel = row;
    while (sel < n && aug[sel][col] == 0)
      ++sel;
    if (sel == n)
      continue;
    std::swap(aug[sel], aug[row]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || aug[r][col] == 0)
        continue;
      Rational f = aug[r][col] / aug[row][col];
      for (std::size_t c = col; c <= k; ++c)
        aug[r][c] -= f * aug[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < n; ++r)
    if (aug[r][k] != 0)
      return false;
  for (std::size_t r = 0; r < row; ++r) {
    Rational c = aug[r][k] / aug[r][pivot_col[r]];
    if (c.get_den() != 1)
      return false;
  }
  return true;
}

/// Calls fn on every vector in [-bound, bound]^n.
inline void for_each_box_point(std::size_t n, std::int64_t bound, const std::function<void(const std::vector<Integer>&)>& fn) {
  std::vector<std::int64_t> v(n, -bound);
  while (true) {
    std::vector<Integer> m(v.begin(), v.end());
    fn(m);
    std::size_t i = 0;
    while (i < n && v[i] == bound)
      v[i++] = -bound;
    if (i == n)
      return;
    ++v[i];
  }
}

} // namespace psa::test
