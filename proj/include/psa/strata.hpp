#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "psa/bracket.hpp"
#include "psa/exec.hpp"
#include "psa/ideals.hpp"
#include "psa/lattice.hpp"
#include "psa/polyring.hpp"
#include "psa/torus.hpp"

namespace psa {

/// The triple (R, {-,-}, H), plus optional explicit derivations for core tests.
struct ProblemSpec {
  ContextPtr context;
  BracketSpec bracket;
  TorusAction torus;
  std::optional<DerivationSet> derivations;

  /// Throws DomainError unless the bracket is log-canonical and the torus has rank n.
  void require_stratifiable() const;
};

/// A prime Poisson H-ideal J(X) = <x_i : i in X> with the center of its localization.
struct Stratum {
  std::vector<std::size_t> vanishing; // X, ascending
  std::vector<std::size_t> alive;     // complement of X, ascending
  IdealSpec ideal;
  CenterBasis center;
};

/// Builds the stratum for the given vanishing set.
Stratum make_stratum(const ProblemSpec& problem, std::vector<std::size_t> vanishing);

/// All H-strata: every subset X in binary-counting order (bit i <-> x_{i+1}) for
/// polynomial rings, only X = {} for Laurent rings. Strata are computed
/// independently; the parallel and serial paths return identical lists.
std::vector<Stratum> enumerate_strata(const ProblemSpec& problem, Exec exec = Exec::Parallel);

/// Primitive ideals of one stratum, parameterized by one nonzero scalar per center generator.
///
/// Each center generator z = x^g contributes the cleared numerator
/// x^(g+) - a * x^(g-), where g = g+ - g- splits into disjoint positive and negative parts.
class PrimitiveTemplate {
public:
  explicit PrimitiveTemplate(Stratum stratum) : stratum_(std::move(stratum)) {}

  const Stratum& stratum() const noexcept { return stratum_; }
  std::size_t parameter_count() const noexcept { return stratum_.center.rank(); }
  /// With two or more parameters the numerators still need saturation.
  bool requires_saturation() const noexcept { return parameter_count() >= 2; }

  /// Generator text with symbolic parameters a1, a2, ...: "<x2, x3, x1 - a1>".
  std::string to_string() const;

  /// Throws DomainError on wrong arity or a zero parameter.
  IdealSpec instantiate(const std::vector<Rational>& alpha) const;

private:
  Stratum stratum_;
};

PrimitiveTemplate primitive_template(const ProblemSpec& problem, std::vector<std::size_t> vanishing);

/// The numerator x^(g+) - alpha * x^(g-) of z - alpha for z = x^g.
LaurentPoly center_numerator(const ContextPtr& ctx, const Exponent& g, const Rational& alpha);

/// x^g evaluated at a point; nullopt when a negative power meets a zero coordinate.
std::optional<Rational> evaluate_monomial(const Exponent& g, const RationalPoint& p);

/// Poisson core of the maximal ideal of a rational point: the stratum is the
/// exact vanishing set of p and the parameters are z_j(p). The result is checked
/// at runtime to be Poisson-stable and to vanish at p. Throws UnsupportedError
/// when the stratum has two or more center generators.
IdealSpec pcore_point(const ProblemSpec& problem, const RationalPoint& p);

/// h in (Q^x)^n with h^(g_j) = alpha_j / beta_j for every center generator g_j of
/// the stratum; acting by x_i -> h_i x_i it carries instantiate(alpha) onto
/// instantiate(beta).
std::vector<Rational> orbit_witness(const ProblemSpec& problem, const std::vector<std::size_t>& vanishing,
                                    const std::vector<Rational>& alpha, const std::vector<Rational>& beta);

/// Substitutes x_i -> h_i x_i.
LaurentPoly apply_torus_element(const std::vector<Rational>& h, const LaurentPoly& f);

struct CatalogEntryReport {
  IdealSpec ideal;
  Verdict h_stable = Verdict::Yes;
  StabilityResult poisson;
  Primality primality = Primality::Unverified;

  bool unsupported() const noexcept {
    return h_stable == Verdict::Unsupported || poisson.verdict == Verdict::Unsupported;
  }
  bool passed() const noexcept {
    return h_stable == Verdict::Yes && poisson.verdict == Verdict::Yes && primality != Primality::NotPrime;
  }
};

std::vector<CatalogEntryReport> verify_hpoisson_catalog(const ProblemSpec& problem,
                                                        const std::vector<IdealSpec>& catalog);

/// Three-valued containment I subset-of J, decided generator by generator.
Verdict ideal_contained(const IdealSpec& i, const IdealSpec& j);

/// Hasse diagram of the inclusion order as a Graphviz digraph. An edge I -> J
/// means I is strictly contained in J with nothing from the catalog in between.
/// Pairs whose containment cannot be decided are drawn dashed and labelled "unknown".
std::string emit_poset_dot(const std::vector<IdealSpec>& catalog);

} // namespace psa
