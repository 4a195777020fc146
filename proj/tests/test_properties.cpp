#include <gtest/gtest.h>

#include "checks.hpp"

using namespace psa::test;

// Smaller seeded runs of the acceptance property suites, on different seeds.
namespace {
constexpr std::size_t kCases = 300;
constexpr std::uint64_t kSeed = 2024;
} // namespace

TEST(Properties, Antisymmetry) {
  auto r = bracket_antisymmetry(kCases, kSeed);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(Properties, Leibniz) {
  auto r = bracket_leibniz(kCases, kSeed);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(Properties, Bilinearity) {
  auto r = bracket_bilinearity(kCases, kSeed);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(Properties, ClosedFormMatchesDerivationFormula) {
  auto r = closed_form_matches_leibniz(kCases, kSeed);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(Properties, BracketMatchesPointwiseOracle) {
  auto r = bracket_matches_pointwise_oracle(kCases, kSeed);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(Properties, HamiltoniansAreHomogeneous) {
  auto r = hamiltonian_homogeneity(kCases, kSeed);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(Properties, CenterAnnihilation) {
  auto r = center_annihilation(kCases, kSeed);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(Properties, PcoreStableAndVanishing) {
  auto r = pcore_stable_and_vanishing(kCases, kSeed);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(Properties, LatticeBoxOracle) {
  auto r = lattice_box_oracle(100, kSeed);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(Properties, OrbitTransitivity) {
  auto r = orbit_transitivity(kCases, kSeed);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}
