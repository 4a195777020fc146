#include "psa/torus.hpp"

#include "psa/errors.hpp"
#include "psa/lattice.hpp"

namespace psa {

TorusAction::TorusAction(std::size_t arity, std::vector<std::vector<std::int64_t>> weights)
    : arity_(arity), weights_(std::move(weights)) {
  for (const auto& row : weights_)
    if (row.size() != arity_)
      throw DomainError("torus weight row has " + std::to_string(row.size()) + " columns, expected " +
                        std::to_string(arity_));
}

TorusAction TorusAction::identity(std::size_t n) {
  std::vector<std::vector<std::int64_t>> w(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    w[i][i] = 1;
  return TorusAction(n, std::move(w));
}

Weight TorusAction::weight_of_monomial(const Exponent& e) const {
  if (e.size() != arity_)
    throw DomainError("exponent length does not match torus arity");
  Weight w(weights_.size(), 0);
  for (std::size_t r = 0; r < weights_.size(); ++r)
    for (std::size_t i = 0; i < arity_; ++i) {
      std::int64_t prod;
      if (__builtin_mul_overflow(weights_[r][i], e[i], &prod) || __builtin_add_overflow(w[r], prod, &w[r]))
        throw DomainError("weight overflow");
    }
  return w;
}

std::size_t TorusAction::matrix_rank() const {
  IntMatrix m(weights_.size(), arity_);
  for (std::size_t r = 0; r < weights_.size(); ++r)
    for (std::size_t c = 0; c < arity_; ++c)
      m(r, c) = static_cast<long>(weights_[r][c]);
  return smith_normal_form(m).rank;
}

WeightDecomposition decompose(const TorusAction& action, const LaurentPoly& f) {
  if (action.arity() != f.context()->arity())
    throw DomainError("torus arity does not match the polynomial context");
  WeightDecomposition out;
  for (const auto& [e, c] : f.terms()) {
    Weight w = action.weight_of_monomial(e);
    auto it = out.try_emplace(std::move(w), f.context()).first;
    it->second.add_term(e, c);
  }
  return out;
}

std::variant<Weight, WeightDecomposition> weight_of(const TorusAction& action, const LaurentPoly& f) {
  if (f.is_zero())
    throw DomainError("the zero polynomial has no weight");
  WeightDecomposition parts = decompose(action, f);
  if (parts.size() == 1)
    return parts.begin()->first;
  return parts;
}

Verdict is_h_stable(const TorusAction& action, const IdealSpec& ideal) {
  Verdict verdict = Verdict::Yes;
  for (const auto& g : ideal.polynomial_generators()) {
    WeightDecomposition parts = decompose(action, g);
    if (parts.size() == 1)
      continue;
    for (const auto& [w, component] : parts) {
      Verdict v = membership(ideal, component);
      if (v == Verdict::No)
        return Verdict::No;
      if (v == Verdict::Unsupported)
        verdict = Verdict::Unsupported;
    }
  }
  return verdict;
}

} // namespace psa
