#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "psa/rational.hpp"

namespace psa {

enum class RingKind { Polynomial, Laurent };

/// Ordered variable names plus whether negative exponents are allowed.
class VarContext {
public:
  VarContext(std::vector<std::string> names, RingKind kind);

  std::size_t arity() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  RingKind kind() const noexcept { return kind_; }
  bool is_laurent() const noexcept { return kind_ == RingKind::Laurent; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const VarContext&) const = default;

private:
  std::vector<std::string> names_;
  RingKind kind_;
};

using ContextPtr = std::shared_ptr<const VarContext>;

ContextPtr make_context(std::vector<std::string> names, RingKind kind);

/// Same variables, opposite-or-equal ring kind.
ContextPtr with_kind(const ContextPtr& ctx, RingKind kind);

/// Dense exponent vector, one entry per variable.
using Exponent = std::vector<std::int64_t>;

/// Graded lexicographic order, larger first: total degree, then lex with x1 > x2 > ...
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

Exponent add_exponents(const Exponent& a, const Exponent& b);
Exponent sub_exponents(const Exponent& a, const Exponent& b);
std::int64_t total_degree(const Exponent& e);

/// x1^2*x2^-1 style rendering; "1" for the zero vector.
std::string format_monomial(const VarContext& ctx, const Exponent& e);

/// Exact multivariate (Laurent) polynomial over the rationals.
///
/// Terms are kept in a map keyed by exponent under GrlexGreater, so iteration
/// runs from the leading term down. No stored coefficient is ever zero, and in a
/// polynomial context every exponent entry is nonnegative.
class LaurentPoly {
public:
  using TermMap = std::map<Exponent, Rational, GrlexGreater>;

  explicit LaurentPoly(ContextPtr ctx);

  static LaurentPoly constant(ContextPtr ctx, const Rational& c);
  static LaurentPoly variable(ContextPtr ctx, std::size_t i);
  static LaurentPoly monomial(ContextPtr ctx, Exponent e, const Rational& c = 1);

  const ContextPtr& context() const noexcept { return ctx_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_constant() const;
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  const Exponent& leading_exponent() const;
  const Rational& leading_coefficient() const;

  /// Adds c*x^e into the polynomial, dropping the term if it cancels.
  void add_term(const Exponent& e, const Rational& c);

  /// Componentwise minimum exponent over all terms (zero vector for 0).
  Exponent min_exponent() const;
  /// Componentwise maximum exponent over all terms (zero vector for 0).
  Exponent max_exponent() const;
  std::int64_t degree() const;

  /// Multiplies by x^e. Throws DomainError if the result leaves a polynomial ring.
  LaurentPoly shifted(const Exponent& e) const;

  /// Same terms, reinterpreted in another context of equal arity.
  LaurentPoly rebased(ContextPtr ctx) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly& operator*=(const Rational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
  LaurentPoly operator-() const;

  bool operator==(const LaurentPoly& other) const;

  /// Canonical text in the input grammar; "0" for the zero polynomial.
  std::string to_string() const;

private:
  ContextPtr ctx_;
  TermMap terms_;
};

void require_same_context(const ContextPtr& a, const ContextPtr& b);

/// Parses text in the grammar
///   expr := term (('+'|'-') term)* ; term := factor ('*' factor)*
///   factor := rational | var ('^' integer)? ; rational := integer ('/' positive-integer)?
/// A leading sign on the first term is accepted so that printed output re-parses.
/// Throws ParseError carrying the offending position and token.
LaurentPoly parse(std::string_view text, const ContextPtr& ctx);

LaurentPoly partial_derivative(const LaurentPoly& f, std::size_t i);

/// Returns q with q*g == f, or nullopt when g does not divide f in the ring of f.
/// Throws DomainError when g is zero.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& f, const LaurentPoly& g);

using RationalPoint = std::vector<Rational>;

/// nullopt when some term has a negative power of a coordinate that is zero.
std::optional<Rational> evaluate(const LaurentPoly& f, const RationalPoint& p);

} // namespace psa
