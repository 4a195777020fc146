#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "psa/bracket.hpp"
#include "psa/exec.hpp"
#include "psa/polyring.hpp"

namespace psa {

/// An ideal given by monomial generators plus polynomial generators.
///
/// Monomial generators are stored as exponent vectors; a single-term polynomial
/// generator in a polynomial ring is moved into the monomial part. In a Laurent
/// ring monomials are units, so monomial generators are rejected.
///
/// `presaturation` marks an ideal whose generators still need saturation by the
/// product of the variables before they describe the intended ideal; membership
/// refuses to answer for such ideals.
class IdealSpec {
public:
  explicit IdealSpec(ContextPtr ctx) : ctx_(std::move(ctx)) {}
  IdealSpec(ContextPtr ctx, std::vector<Exponent> monomial_gens, std::vector<LaurentPoly> poly_gens);

  /// J(X) = <x_i : i in X>.
  static IdealSpec coordinate(ContextPtr ctx, const std::vector<std::size_t>& vars);

  const ContextPtr& context() const noexcept { return ctx_; }
  const std::vector<Exponent>& monomial_generators() const noexcept { return monomials_; }
  const std::vector<LaurentPoly>& polynomial_generators() const noexcept { return polys_; }
  /// Monomial generators (as polynomials) followed by polynomial generators.
  std::vector<LaurentPoly> generators() const;
  bool is_zero() const noexcept { return monomials_.empty() && polys_.empty(); }

  bool presaturation() const noexcept { return presaturation_; }
  void set_presaturation(bool v) noexcept { presaturation_ = v; }
  bool assume_prime() const noexcept { return assume_prime_; }
  void set_assume_prime(bool v) noexcept { assume_prime_ = v; }

  /// "<x1, x2, x1*x3 - 2*x2>", or "<0>" for the zero ideal.
  std::string to_string(const std::string& separator = ", ") const;

private:
  ContextPtr ctx_;
  std::vector<Exponent> monomials_;
  std::vector<LaurentPoly> polys_;
  bool presaturation_ = false;
  bool assume_prime_ = false;
};

/// Deletes every term divisible by one of the monomial generators.
LaurentPoly reduce_by_monomials(const LaurentPoly& f, const std::vector<Exponent>& monomials);

/// Ideal membership for "monomial part + at most one surviving principal generator".
///
/// Reduce f and the polynomial generators modulo the monomial generators. With no
/// surviving generator the answer is whether f reduced to zero; with exactly one
/// survivor g it is whether g divides the reduced f. More survivors, a survivor
/// together with non-variable monomial generators, or a pre-saturation ideal give
/// Verdict::Unsupported.
Verdict membership(const IdealSpec& ideal, const LaurentPoly& f);

/// One violated stability condition: op applied to generator lands outside the ideal.
struct StabilityWitness {
  std::size_t operator_index; // variable index for Hamiltonians, derivation index otherwise
  LaurentPoly generator;
  LaurentPoly image;
};

struct StabilityResult {
  Verdict verdict = Verdict::Yes;
  std::optional<StabilityWitness> witness;
};

/// Poisson ideal test on generators: {x_i, g} in I for all variables x_i and generators g.
StabilityResult is_poisson_stable(const BracketSpec& spec, const IdealSpec& ideal);

/// Derivations delta = sum_i c_i d/dx_i, each given by its coefficient vector.
class DerivationSet {
public:
  DerivationSet() = default;
  explicit DerivationSet(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  /// The variable Hamiltonians {x_i, -}, whose coefficients are {x_i, x_j}.
  static DerivationSet hamiltonians(const BracketSpec& spec);

  void add(std::vector<LaurentPoly> coefficients, std::string label = {});

  std::size_t size() const noexcept { return derivations_.size(); }
  const std::string& label(std::size_t k) const { return labels_.at(k); }
  const ContextPtr& context() const noexcept { return ctx_; }
  const std::vector<LaurentPoly>& coefficients(std::size_t k) const { return derivations_.at(k); }

  LaurentPoly apply(std::size_t k, const LaurentPoly& f) const;

private:
  ContextPtr ctx_;
  std::vector<std::vector<LaurentPoly>> derivations_;
  std::vector<std::string> labels_;
};

/// Whether every derivation maps every generator back into the ideal.
StabilityResult is_delta_stable(const DerivationSet& derivs, const IdealSpec& ideal);

/// Outcome of the bounded-depth test for f in the core (J : Delta).
struct CoreTestResult {
  enum class Kind { In, NotIn, Inconclusive };
  Kind kind = Kind::Inconclusive;
  /// For NotIn: derivation indices, innermost first (word d_1 d_2 ... applied as d_k(...(d_1 f))).
  std::vector<std::size_t> witness;
  /// For NotIn: the image outside the ideal (f itself for an empty witness).
  std::optional<LaurentPoly> image;
  /// Depth bound reached for Inconclusive; witness length for NotIn.
  std::size_t depth = 0;
};

inline constexpr std::size_t kDefaultCoreDepth = 6;

/// Breadth-first search over derivation words up to max_depth.
///
/// f outside J gives NotIn with an empty witness. f == 0, or J stable under every
/// derivation (so J is its own core), gives In. Otherwise the first word, in
/// breadth-first then index order, whose image leaves J gives NotIn; if none does
/// the result is Inconclusive at max_depth. Throws UnsupportedError when a needed
/// membership query is unsupported.
CoreTestResult delta_core_test(const DerivationSet& derivs, const IdealSpec& ideal, const LaurentPoly& f,
                               std::size_t max_depth = kDefaultCoreDepth, Exec exec = Exec::Parallel);

enum class Primality { Prime, NotPrime, Unverified };

std::string_view to_string(Primality p);

/// Certifies primality for coordinate ideals and for a single principal generator
/// over a coordinate ideal whose reduction passes the built-in irreducibility
/// certificates; refutes visibly reducible generators; otherwise Unverified.
Primality primality_lite(const IdealSpec& ideal);

/// Irreducibility certificate for a single nonzero polynomial in a polynomial ring.
/// Prime means irreducible, NotPrime means a factorization (or unit) was found.
Primality irreducibility_certificate(const LaurentPoly& g);

} // namespace psa
