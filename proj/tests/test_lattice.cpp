#include <gtest/gtest.h>

#include "checks.hpp"
#include "psa/errors.hpp"
#include "psa/lattice.hpp"
#include "support.hpp"

using namespace psa;

TEST(Smith, KnownExample) {
  IntMatrix a{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  SmithForm s = smith_normal_form(a);
  EXPECT_EQ(s.U * a * s.V, s.S);
  EXPECT_EQ(s.rank, 3u);
  EXPECT_EQ(s.S(0, 0), 2);
  EXPECT_EQ(s.S(1, 1), 6);
  EXPECT_EQ(s.S(2, 2), 12);
}

TEST(Smith, ZeroAndEmptyMatrices) {
  SmithForm z = smith_normal_form(IntMatrix(2, 3));
  EXPECT_EQ(z.rank, 0u);
  EXPECT_EQ(z.U, IntMatrix::identity(2));
  EXPECT_EQ(z.V, IntMatrix::identity(3));
}

TEST(Hermite, ReducesAbovePivots) {
  IntMatrix h = hermite_normal_form(IntMatrix{{2, 3}, {4, 5}});
  EXPECT_EQ(h, (IntMatrix{{2, 0}, {0, 1}}));
  EXPECT_EQ(hermite_normal_form(IntMatrix{{2, 3}, {0, 4}}), (IntMatrix{{2, 3}, {0, 4}}));
  EXPECT_EQ(hermite_normal_form(IntMatrix{{0, 0}}).rows(), 0u);
}

TEST(Determinant, Bareiss) {
  EXPECT_EQ(determinant(IntMatrix{{2, 0, 1}, {1, 3, 2}, {1, 1, 1}}), 0);
  EXPECT_EQ(determinant(IntMatrix{{2, 0, 1}, {1, 3, 2}, {1, 1, 2}}), 6);
  EXPECT_EQ(determinant(IntMatrix{{0, 1}, {1, 0}}), -1);
}

TEST(Kernel, AllOnesThreeByThree) {
  // Left kernel of the all-ones antisymmetric 3x3 matrix.
  IntMatrix a{{0, 1, 1}, {-1, 0, 1}, {-1, -1, 0}};
  IntMatrix k = kernel_basis(a);
  ASSERT_EQ(k.rows(), 1u);
  EXPECT_EQ(k.row(0), (std::vector<Integer>{1, -1, 1}));
}

TEST(Kernel, SaturatedNotJustRational) {
  // 2*m1 + 4*m2 = 0 has primitive solution (2, -1); the lattice must not be generated by (4, -2).
  IntMatrix a{{2}, {4}};
  IntMatrix k = kernel_basis(a);
  ASSERT_EQ(k.rows(), 1u);
  EXPECT_TRUE(lattice_contains(k, {2, -1}));
  EXPECT_FALSE(lattice_contains(k, {1, 0}));
}

TEST(Kernel, BoxOracleOnRandomAntisymmetricMatrices) {
  auto r = test::lattice_box_oracle(40, 101);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(Center, AlternatingGeneratorForOddN) {
  for (std::size_t n = 2; n <= 7; ++n) {
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i)
      all[i] = i;
    CenterBasis c = center_basis(test::all_ones_pi(n), all);
    if (n % 2 == 0) {
      EXPECT_EQ(c.rank(), 0u) << n;
    } else {
      ASSERT_EQ(c.rank(), 1u) << n;
      Exponent want(n);
      for (std::size_t i = 0; i < n; ++i)
        want[i] = i % 2 ? -1 : 1;
      EXPECT_EQ(c.generators[0], want);
    }
  }
}

TEST(Center, RestrictedToAliveVariables) {
  auto pi = test::all_ones_pi(3);
  CenterBasis c = center_basis(pi, {0});
  ASSERT_EQ(c.rank(), 1u);
  EXPECT_EQ(c.generators[0], (Exponent{1, 0, 0}));
  EXPECT_EQ(center_basis(pi, {0, 2}).rank(), 0u);
  EXPECT_EQ(center_basis(pi, {}).rank(), 0u);
  EXPECT_THROW(center_basis(pi, {2, 0}), Error);
}

TEST(Center, RationalEntriesAreCleared) {
  RationalMatrix pi = {{0, Rational(1, 2), Rational(1, 3)},
                       {Rational(-1, 2), 0, Rational(1, 6)},
                       {Rational(-1, 3), Rational(-1, 6), 0}};
  CenterBasis c = center_basis(pi, {0, 1, 2});
  ASSERT_EQ(c.rank(), 1u);
  // m^T pi = 0 with m = (1, -2, 3): column 1: -2*(-1/2) + 3*(-1/3) = 0, column 2: 1/2 - 3*(1/6) = 0.
  EXPECT_EQ(c.generators[0], (Exponent{1, -2, 3}));
}

TEST(Smith, DocumentedExamples) {
  SmithForm z = smith_normal_form(IntMatrix(2, 2));
  EXPECT_TRUE(z.S.is_zero());
  EXPECT_EQ(z.U, IntMatrix::identity(2));
  EXPECT_EQ(z.V, IntMatrix::identity(2));
  EXPECT_EQ(smith_normal_form(IntMatrix{{0, 1}, {-1, 0}}).S, IntMatrix::identity(2));
  EXPECT_EQ(smith_normal_form(IntMatrix{{2, 0}, {0, 4}}).S, (IntMatrix{{2, 0}, {0, 4}}));
  EXPECT_EQ(kernel_basis(IntMatrix{{0, 1}, {-1, 0}}).rows(), 0u);
  EXPECT_EQ(kernel_basis(IntMatrix(2, 2)), IntMatrix::identity(2));
}
