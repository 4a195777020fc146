#include <gtest/gtest.h>

#include "psa/errors.hpp"
#include "psa/torus.hpp"

using namespace psa;

namespace {

ContextPtr abcd() { return make_context({"a", "b", "c", "d"}, RingKind::Polynomial); }
TorusAction quantum_torus() { return TorusAction(4, {{1, 1, 0, 0}, {0, 0, 1, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}}); }

} // namespace

TEST(Torus, IdentityWeights) {
  auto ctx = make_context({"x1", "x2", "x3"}, RingKind::Laurent);
  auto t = TorusAction::identity(3);
  auto w = weight_of(t, parse("x1*x2^-1*x3", ctx));
  ASSERT_TRUE(std::holds_alternative<Weight>(w));
  EXPECT_EQ(std::get<Weight>(w), (Weight{1, -1, 1}));
  EXPECT_EQ(t.matrix_rank(), 3u);
}

TEST(Torus, InhomogeneousDecomposition) {
  auto ctx = make_context({"x1", "x2", "x3"}, RingKind::Polynomial);
  auto w = weight_of(TorusAction::identity(3), parse("x1 + x2", ctx));
  ASSERT_TRUE(std::holds_alternative<WeightDecomposition>(w));
  const auto& d = std::get<WeightDecomposition>(w);
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d.at({1, 0, 0}), parse("x1", ctx));
  EXPECT_EQ(d.at({0, 1, 0}), parse("x2", ctx));
  EXPECT_THROW(weight_of(TorusAction::identity(3), LaurentPoly(ctx)), DomainError);
}

TEST(Torus, QuantumDeterminantIsHomogeneous) {
  auto ctx = abcd();
  auto t = quantum_torus();
  EXPECT_EQ(t.weight_of_monomial({1, 0, 0, 1}), (Weight{1, 1, 1, 1}));
  EXPECT_EQ(t.weight_of_monomial({0, 1, 1, 0}), (Weight{1, 1, 1, 1}));
  auto w = weight_of(t, parse("a*d - b*c", ctx));
  ASSERT_TRUE(std::holds_alternative<Weight>(w));
  EXPECT_EQ(t.matrix_rank(), 3u);
}

TEST(Torus, RejectsMalformedWeights) {
  EXPECT_THROW(TorusAction(3, {{1, 0}}), Error);
  EXPECT_THROW(TorusAction(2, {{1, 0}, {0, 1, 0}}), Error);
}

TEST(HStability, DocumentedExamples) {
  auto ctx = make_context({"x1", "x2"}, RingKind::Polynomial);
  auto id = TorusAction::identity(2);
  EXPECT_EQ(is_h_stable(id, IdealSpec::coordinate(ctx, {0, 1})), Verdict::Yes);
  EXPECT_EQ(is_h_stable(id, IdealSpec(ctx, {}, {parse("x1 - 1", ctx)})), Verdict::No);
  auto q = abcd();
  EXPECT_EQ(is_h_stable(quantum_torus(), IdealSpec(q, {}, {parse("a*d - b*c", q)})), Verdict::Yes);
}

TEST(HStability, InhomogeneousGeneratorWithComponentsInIdeal) {
  auto ctx = make_context({"x1", "x2"}, RingKind::Polynomial);
  auto id = TorusAction::identity(2);
  // x1 + x2 together with x1: both components lie in the ideal.
  EXPECT_EQ(is_h_stable(id, IdealSpec(ctx, {{1, 0}}, {parse("x1 + x2", ctx)})), Verdict::Yes);
  // A coarse grading makes x1 - x2 homogeneous.
  TorusAction total(2, {{1, 1}});
  EXPECT_EQ(is_h_stable(total, IdealSpec(ctx, {}, {parse("x1 - x2", ctx)})), Verdict::Yes);
}
