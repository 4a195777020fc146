#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "psa/exec.hpp"
#include "psa/polyring.hpp"

namespace psa {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// One user-supplied bracket {x_i, x_j} = value. Either order of (i, j) is accepted.
struct TableEntry {
  std::size_t i;
  std::size_t j;
  LaurentPoly value;
};

/// A Poisson bracket given on generators.
///
/// Two forms are supported: log-canonical, {x_i, x_j} = pi_ij x_i x_j for an
/// antisymmetric rational matrix pi, and an explicit table of generator brackets.
/// Table entries are stored for i < j only; (j, i) is the negation and the
/// diagonal is zero, so antisymmetry holds by construction. The bracket of
/// arbitrary elements is the unique biderivation extending the generator values.
class BracketSpec {
public:
  /// Throws DomainError "pi is not antisymmetric at (i,j)" (1-indexed) on bad input.
  static BracketSpec log_canonical(ContextPtr ctx, RationalMatrix pi);
  static BracketSpec table(ContextPtr ctx, std::vector<TableEntry> entries);
  /// The zero bracket, as a log-canonical spec with pi = 0.
  static BracketSpec zero(ContextPtr ctx);

  const ContextPtr& context() const noexcept { return ctx_; }
  bool is_log_canonical() const noexcept { return std::holds_alternative<RationalMatrix>(form_); }
  /// Throws DomainError for table brackets.
  const RationalMatrix& pi() const;
  /// Stored table entries (i < j); empty for log-canonical specs.
  std::vector<TableEntry> table_entries() const;

  /// {x_i, x_j}.
  LaurentPoly generator_bracket(std::size_t i, std::size_t j) const;

  /// Same bracket over another context with identical arity (e.g. its Laurent localization).
  BracketSpec rebased(ContextPtr ctx) const;

private:
  using Table = std::map<std::pair<std::size_t, std::size_t>, LaurentPoly>;

  BracketSpec(ContextPtr ctx, std::variant<RationalMatrix, Table> form)
      : ctx_(std::move(ctx)), form_(std::move(form)) {}

  ContextPtr ctx_;
  std::variant<RationalMatrix, Table> form_;
};

/// {f, g} = sum_{i,j} {x_i, x_j} df/dx_i dg/dx_j.
LaurentPoly bracket(const BracketSpec& spec, const LaurentPoly& f, const LaurentPoly& g);

/// (a^T pi b) x^(a+b), evaluated directly from the matrix without derivatives.
LaurentPoly monomial_bracket_closed_form(const ContextPtr& ctx, const RationalMatrix& pi, const Exponent& a,
                                         const Exponent& b);

struct AxiomCounterexample {
  std::string axiom; // "antisymmetry", "leibniz" or "jacobi"
  LaurentPoly f;
  LaurentPoly g;
  LaurentPoly h;
  LaurentPoly residual;
};

struct AxiomReport {
  bool antisymmetry_ok = true;
  bool leibniz_ok = true;
  bool jacobi_ok = true;
  std::size_t generator_triples = 0;
  std::size_t trials = 0;
  std::optional<AxiomCounterexample> counterexample;

  bool ok() const noexcept { return antisymmetry_ok && leibniz_ok && jacobi_ok; }
};

/// Random element with at most 4 terms, coefficients in [-5, 5], exponents in
/// [-2, 2] for Laurent rings and [0, 3] otherwise.
LaurentPoly random_polynomial(const ContextPtr& ctx, std::mt19937_64& rng);

/// Deterministic per-trial generator derived from (seed, trial).
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);

/// Jacobi on every generator triple (exact and exhaustive), plus antisymmetry,
/// Leibniz and Jacobi on `trials` random triples. The first failure in
/// (generator triples, then trial index) order is reported as the counterexample,
/// regardless of the execution policy.
AxiomReport check_poisson_axioms(const BracketSpec& spec, std::size_t trials, std::uint64_t seed,
                                 Exec exec = Exec::Parallel);

} // namespace psa
