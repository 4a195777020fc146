#include <gtest/gtest.h>

#include "checks.hpp"
#include "psa/errors.hpp"
#include "psa/strata.hpp"
#include "support.hpp"

using namespace psa;

namespace {

ProblemSpec example46(std::size_t n = 3, RingKind kind = RingKind::Polynomial) {
  auto ctx = make_context(test::var_names(n), kind);
  return {ctx, BracketSpec::log_canonical(ctx, test::all_ones_pi(n)), TorusAction::identity(n), std::nullopt};
}

ProblemSpec quantum_matrices() {
  auto ctx = make_context({"a", "b", "c", "d"}, RingKind::Polynomial);
  auto P = [&](const char* s) { return parse(s, ctx); };
  return {ctx,
          BracketSpec::table(ctx, {{0, 1, P("a*b")}, {0, 2, P("a*c")}, {0, 3, P("2*b*c")}, {1, 3, P("b*d")},
                                   {2, 3, P("c*d")}}),
          TorusAction(4, {{1, 1, 0, 0}, {0, 0, 1, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}}), std::nullopt};
}

std::vector<IdealSpec> quantum_catalog(const ContextPtr& ctx) {
  std::vector<IdealSpec> out;
  for (std::vector<std::size_t> x : std::vector<std::vector<std::size_t>>{
           {0, 1, 2, 3}, {0, 1, 3}, {0, 1, 2}, {1, 2, 3}, {0, 2, 3}, {0, 1}, {1, 3}, {1, 2}, {0, 2}, {2, 3}, {1}})
    out.push_back(IdealSpec::coordinate(ctx, x));
  out.emplace_back(ctx, std::vector<Exponent>{}, std::vector<LaurentPoly>{parse("a*d - b*c", ctx)});
  out.push_back(IdealSpec::coordinate(ctx, {2}));
  out.emplace_back(ctx);
  return out;
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1))
    ++n;
  return n;
}

} // namespace

TEST(Strata, CountsAndOrder) {
  auto strata = enumerate_strata(example46());
  ASSERT_EQ(strata.size(), 8u);
  EXPECT_TRUE(strata[0].vanishing.empty());
  EXPECT_EQ(strata[3].vanishing, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(strata[7].vanishing, (std::vector<std::size_t>{0, 1, 2}));
  for (std::size_t n = 1; n <= 5; ++n)
    EXPECT_EQ(enumerate_strata(example46(n, RingKind::Laurent)).size(), 1u);
  auto empty = make_context({}, RingKind::Polynomial);
  auto s0 = enumerate_strata({empty, BracketSpec::zero(empty), TorusAction::identity(0), std::nullopt});
  ASSERT_EQ(s0.size(), 1u);
  EXPECT_TRUE(s0[0].ideal.is_zero());
}

TEST(Strata, RequireLogCanonicalAndFullTorus) {
  EXPECT_THROW(enumerate_strata(quantum_matrices()), UnsupportedError);
  auto p = example46();
  p.torus = TorusAction(3, {{1, 1, 1}});
  EXPECT_THROW(enumerate_strata(p), UnsupportedError);
}

TEST(Strata, EveryStratumIsStable) {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto p = example46(n);
    for (const auto& s : enumerate_strata(p)) {
      EXPECT_EQ(is_h_stable(p.torus, s.ideal), Verdict::Yes);
      EXPECT_EQ(is_poisson_stable(p.bracket, s.ideal).verdict, Verdict::Yes);
    }
  }
}

TEST(Strata, SerialAndParallelAgree) {
  auto rng = test::make_rng(41);
  for (int k = 0; k < 5; ++k) {
    auto ctx = make_context(test::var_names(6), RingKind::Polynomial);
    ProblemSpec p{ctx, BracketSpec::log_canonical(ctx, test::random_pi(rng, 6)), TorusAction::identity(6),
                  std::nullopt};
    auto s = enumerate_strata(p, Exec::Serial);
    auto q = enumerate_strata(p, Exec::Parallel);
    ASSERT_EQ(s.size(), q.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      EXPECT_EQ(s[i].vanishing, q[i].vanishing);
      EXPECT_EQ(s[i].center.generators, q[i].center.generators);
      EXPECT_EQ(s[i].ideal.to_string(), q[i].ideal.to_string());
    }
  }
}

TEST(Primitive, DocumentedTemplates) {
  auto p = example46();
  EXPECT_EQ(primitive_template(p, {1, 2}).to_string(), "<x2, x3, x1 - a1>");
  auto open = primitive_template(p, {});
  EXPECT_EQ(open.to_string(), "<x1*x3 - a1*x2>");
  EXPECT_EQ(open.instantiate({Rational(5, 2)}).to_string(), "<x1*x3 - 5/2*x2>");
  auto single = primitive_template(p, {0});
  EXPECT_EQ(single.parameter_count(), 0u);
  EXPECT_EQ(single.instantiate({}).to_string(), "<x1>");
  EXPECT_THROW(open.instantiate({0}), DomainError);
  EXPECT_THROW(open.instantiate({}), Error);
}

TEST(Primitive, InstantiationsSitAboveTheirStratum) {
  auto rng = test::make_rng(43);
  for (std::size_t n : {3u, 5u}) {
    auto p = example46(n);
    for (const auto& s : enumerate_strata(p)) {
      PrimitiveTemplate t(s);
      if (t.requires_saturation())
        continue;
      std::vector<Rational> alpha;
      for (std::size_t k = 0; k < t.parameter_count(); ++k)
        alpha.push_back(test::random_nonzero_rational(rng));
      IdealSpec prim = t.instantiate(alpha);
      for (const auto& g : s.ideal.generators())
        EXPECT_EQ(membership(prim, g), Verdict::Yes);
      EXPECT_EQ(is_poisson_stable(p.bracket, prim).verdict, Verdict::Yes) << prim.to_string();
      for (auto i : s.alive)
        EXPECT_EQ(membership(prim, LaurentPoly::variable(p.context, i)), Verdict::No) << prim.to_string();
    }
  }
}

TEST(Primitive, SaturationFlagForTwoParameters) {
  auto ctx = make_context(test::var_names(2), RingKind::Polynomial);
  ProblemSpec p{ctx, BracketSpec::zero(ctx), TorusAction::identity(2), std::nullopt};
  auto t = primitive_template(p, {});
  EXPECT_TRUE(t.requires_saturation());
  IdealSpec i = t.instantiate({2, 3});
  EXPECT_TRUE(i.presaturation());
  EXPECT_EQ(membership(i, parse("x1 - 2", ctx)), Verdict::Unsupported);
}

TEST(Primitive, NegativeExponentsAreCleared) {
  auto ctx = make_context(test::var_names(2), RingKind::Polynomial);
  EXPECT_EQ(center_numerator(ctx, {1, -2}, 3), parse("x1 - 3*x2^2", ctx));
  EXPECT_EQ(center_numerator(ctx, {-1, 0}, 3), parse("1 - 3*x1", ctx));
  EXPECT_EQ(*evaluate_monomial({1, -1, 1}, {1, 2, 4}), 2);
  EXPECT_FALSE(evaluate_monomial({1, -1, 1}, {1, 0, 4}));
}

TEST(PCore, DocumentedExamples) {
  auto p = example46();
  EXPECT_EQ(pcore_point(p, {0, 0, 0}).to_string(), "<x1, x2, x3>");
  EXPECT_EQ(pcore_point(p, {2, 0, 0}).to_string(), "<x2, x3, x1 - 2>");
  EXPECT_EQ(pcore_point(p, {1, 2, 4}).to_string(), "<x1*x3 - 2*x2>");
  EXPECT_THROW(pcore_point(p, {1, 2}), Error);
  auto flat = example46(2);
  flat.bracket = BracketSpec::zero(flat.context);
  EXPECT_THROW(pcore_point(flat, {1, 2}), UnsupportedError);
}

TEST(PCore, RandomPoints) {
  auto r = test::pcore_stable_and_vanishing(200, 47);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(Orbit, DocumentedExamples) {
  auto p = example46();
  auto h = orbit_witness(p, {}, {2}, {6});
  ASSERT_EQ(h.size(), 3u);
  EXPECT_EQ(h[0] / h[1] * h[2], Rational(1, 3));
  EXPECT_EQ(orbit_witness(p, {}, {5}, {5}), (std::vector<Rational>{1, 1, 1}));
  EXPECT_EQ(orbit_witness(p, {0}, {}, {}), (std::vector<Rational>{1, 1, 1}));
  EXPECT_THROW(orbit_witness(p, {}, {1, 2}, {1}), Error);
}

TEST(Orbit, WitnessesOnEveryStratum) {
  auto rng = test::make_rng(53);
  auto p = example46(5);
  for (const auto& s : enumerate_strata(p)) {
    PrimitiveTemplate t(s);
    if (t.requires_saturation())
      continue;
    std::vector<Rational> a, b;
    for (std::size_t k = 0; k < t.parameter_count(); ++k) {
      a.push_back(test::random_nonzero_rational(rng));
      b.push_back(test::random_nonzero_rational(rng));
    }
    auto h = orbit_witness(p, s.vanishing, a, b);
    auto from = t.instantiate(a).generators();
    auto to = t.instantiate(b).generators();
    ASSERT_EQ(from.size(), to.size());
    for (std::size_t k = 0; k < from.size(); ++k) {
      LaurentPoly img = apply_torus_element(h, from[k]);
      EXPECT_EQ(img, img.leading_coefficient() / to[k].leading_coefficient() * to[k]);
    }
  }
  auto r = test::orbit_transitivity(50, 59);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(Catalog, QuantumMatricesAllPass) {
  auto p = quantum_matrices();
  auto reports = verify_hpoisson_catalog(p, quantum_catalog(p.context));
  ASSERT_EQ(reports.size(), 14u);
  for (const auto& r : reports) {
    EXPECT_TRUE(r.passed()) << r.ideal.to_string();
    EXPECT_EQ(r.primality, Primality::Prime) << r.ideal.to_string();
  }
  EXPECT_TRUE(verify_hpoisson_catalog(p, {}).empty());
}

TEST(Catalog, ReportsFailures) {
  auto ctx = make_context(test::var_names(2), RingKind::Polynomial);
  ProblemSpec p{ctx, BracketSpec::log_canonical(ctx, test::all_ones_pi(2)), TorusAction::identity(2), std::nullopt};
  auto reports = verify_hpoisson_catalog(p, {IdealSpec(ctx, {}, {parse("x1 - 1", ctx)})});
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_EQ(reports[0].poisson.verdict, Verdict::No);
  EXPECT_FALSE(reports[0].passed());
  EXPECT_FALSE(reports[0].unsupported());
}

TEST(Poset, DocumentedExamples) {
  auto x = make_context({"x1"}, RingKind::Polynomial);
  std::string two = emit_poset_dot({IdealSpec(x), IdealSpec::coordinate(x, {0})});
  EXPECT_EQ(two, "digraph poset {\n  node [shape=box];\n  n0 [label=\"<0>\"];\n  n1 [label=\"<x1>\"];\n"
                 "  n0 -> n1;\n}\n");

  auto q = quantum_matrices();
  std::string dot = emit_poset_dot(quantum_catalog(q.context));
  EXPECT_EQ(count(dot, "[label="), 14u);
  EXPECT_NE(dot.find("n11 -> n5;"), std::string::npos); // <a*d - b*c> below <a, b>

  std::vector<IdealSpec> boolean;
  for (const auto& s : enumerate_strata(example46()))
    boolean.push_back(s.ideal);
  EXPECT_EQ(count(emit_poset_dot(boolean), " -> "), 12u);
}

TEST(Poset, UnsupportedPairsAreDashed) {
  auto ctx = make_context(test::var_names(2), RingKind::Polynomial);
  IdealSpec two(ctx, {}, {parse("x1 - 1", ctx), parse("x2 - 1", ctx)});
  std::string dot = emit_poset_dot({IdealSpec(ctx, {}, {parse("x1 - x2", ctx)}), two});
  EXPECT_NE(dot.find("style=dashed"), std::string::npos);
}

TEST(Properties, CenterGeneratorsAreCentral) {
  auto r = test::center_annihilation(200, 61);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}
