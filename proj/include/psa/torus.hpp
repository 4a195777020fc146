#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <variant>
#include <vector>

#include "psa/exec.hpp"
#include "psa/ideals.hpp"
#include "psa/polyring.hpp"

namespace psa {

/// Character lattice element: the weight of an H-eigenvector.
using Weight = std::vector<std::int64_t>;

/// Rational action of H = (k^x)^r given by an r x n integer weight matrix;
/// column i is the weight of x_i, so x^e has weight W*e.
class TorusAction {
public:
  TorusAction(std::size_t arity, std::vector<std::vector<std::int64_t>> weights);

  /// The full coordinate torus: W = identity.
  static TorusAction identity(std::size_t n);

  std::size_t rank() const noexcept { return weights_.size(); }
  std::size_t arity() const noexcept { return arity_; }
  const std::vector<std::vector<std::int64_t>>& weights() const noexcept { return weights_; }

  Weight weight_of_monomial(const Exponent& e) const;
  /// Rank of W over the rationals; n means distinct monomials have distinct weights.
  std::size_t matrix_rank() const;

private:
  std::size_t arity_;
  std::vector<std::vector<std::int64_t>> weights_;
};

/// Homogeneous components keyed by weight. Every component is nonzero.
using WeightDecomposition = std::map<Weight, LaurentPoly>;

WeightDecomposition decompose(const TorusAction& action, const LaurentPoly& f);

/// The common weight of a homogeneous f, or its full decomposition otherwise.
/// Throws DomainError for the zero polynomial.
std::variant<Weight, WeightDecomposition> weight_of(const TorusAction& action, const LaurentPoly& f);

/// H-stability of an ideal. Homogeneous generators certify stability; an
/// inhomogeneous generator is accepted when all of its homogeneous components
/// lie in the ideal.
Verdict is_h_stable(const TorusAction& action, const IdealSpec& ideal);

} // namespace psa
