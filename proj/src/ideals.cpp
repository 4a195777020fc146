#include "psa/ideals.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "psa/errors.hpp"

namespace psa {

namespace {

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i])
      return false;
  return true;
}

bool is_single_variable(const Exponent& e) {
  std::int64_t ones = 0;
  for (auto v : e) {
    if (v != 0 && v != 1)
      return false;
    ones += v;
  }
  return ones == 1;
}

bool is_zero_exponent(const Exponent& e) {
  return std::all_of(e.begin(), e.end(), [](std::int64_t v) { return v == 0; });
}

} // namespace

// ---------------------------------------------------------------------------
// IdealSpec

IdealSpec::IdealSpec(ContextPtr ctx, std::vector<Exponent> monomial_gens, std::vector<LaurentPoly> poly_gens)
    : ctx_(std::move(ctx)) {
  const std::size_t n = ctx_->arity();
  for (auto& g : poly_gens) {
    require_same_context(ctx_, g.context());
    if (g.is_zero())
      throw DomainError("ideal generators must be nonzero");
    if (!ctx_->is_laurent() && g.is_monomial())
      monomial_gens.push_back(g.leading_exponent());
    else
      polys_.push_back(std::move(g));
  }
  if (ctx_->is_laurent() && !monomial_gens.empty())
    throw DomainError("monomial generators are units in a Laurent ring");
  for (auto& m : monomial_gens) {
    if (m.size() != n)
      throw DomainError("monomial generator has wrong length");
    for (auto v : m)
      if (v < 0)
        throw DomainError("monomial generator has a negative exponent");
  }
  std::sort(monomial_gens.begin(), monomial_gens.end(), GrlexGreater{});
  monomial_gens.erase(std::unique(monomial_gens.begin(), monomial_gens.end()), monomial_gens.end());
  monomials_ = std::move(monomial_gens);
}

IdealSpec IdealSpec::coordinate(ContextPtr ctx, const std::vector<std::size_t>& vars) {
  std::vector<Exponent> gens;
  for (auto i : vars) {
    if (i >= ctx->arity())
      throw DomainError("variable index out of range");
    Exponent e(ctx->arity(), 0);
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  return IdealSpec(std::move(ctx), std::move(gens), {});
}

std::vector<LaurentPoly> IdealSpec::generators() const {
  std::vector<LaurentPoly> out;
  for (const auto& m : monomials_)
    out.push_back(LaurentPoly::monomial(ctx_, m));
  out.insert(out.end(), polys_.begin(), polys_.end());
  return out;
}

std::string IdealSpec::to_string(const std::string& separator) const {
  if (is_zero())
    return "<0>";
  std::string out = "<";
  bool first = true;
  for (const auto& g : generators()) {
    if (!first)
      out += separator;
    first = false;
    out += g.to_string();
  }
  return out + ">";
}

// ---------------------------------------------------------------------------
// Membership and stability

LaurentPoly reduce_by_monomials(const LaurentPoly& f, const std::vector<Exponent>& monomials) {
  LaurentPoly r(f.context());
  for (const auto& [e, c] : f.terms()) {
    bool killed = std::any_of(monomials.begin(), monomials.end(), [&](const Exponent& m) { return divides(m, e); });
    if (!killed)
      r.add_term(e, c);
  }
  return r;
}

Verdict membership(const IdealSpec& ideal, const LaurentPoly& f) {
  require_same_context(ideal.context(), f.context());
  if (ideal.presaturation())
    return Verdict::Unsupported;
  LaurentPoly reduced = reduce_by_monomials(f, ideal.monomial_generators());
  if (reduced.is_zero())
    return Verdict::Yes;
  std::vector<LaurentPoly> survivors;
  for (const auto& g : ideal.polynomial_generators()) {
    LaurentPoly r = reduce_by_monomials(g, ideal.monomial_generators());
    if (!r.is_zero())
      survivors.push_back(std::move(r));
  }
  if (survivors.empty())
    return Verdict::No;
  if (survivors.size() > 1)
    return Verdict::Unsupported;
  // Reduction is a ring map onto the remaining variables only when every
  // monomial generator is a variable.
  const auto& mons = ideal.monomial_generators();
  if (!std::all_of(mons.begin(), mons.end(), is_single_variable))
    return Verdict::Unsupported;
  return divide_exact(reduced, survivors.front()) ? Verdict::Yes : Verdict::No;
}

DerivationSet DerivationSet::hamiltonians(const BracketSpec& spec) {
  const auto& ctx = spec.context();
  DerivationSet d(ctx);
  for (std::size_t i = 0; i < ctx->arity(); ++i) {
    std::vector<LaurentPoly> coeffs;
    for (std::size_t j = 0; j < ctx->arity(); ++j)
      coeffs.push_back(spec.generator_bracket(i, j));
    d.add(std::move(coeffs), "{" + ctx->name(i) + ",-}");
  }
  return d;
}

void DerivationSet::add(std::vector<LaurentPoly> coefficients, std::string label) {
  if (!ctx_ && !coefficients.empty())
    ctx_ = coefficients.front().context();
  if (!ctx_)
    throw DomainError("derivation set has no context");
  if (coefficients.size() != ctx_->arity())
    throw DomainError("derivation has " + std::to_string(coefficients.size()) + " coefficients, expected " +
                      std::to_string(ctx_->arity()));
  for (const auto& c : coefficients)
    require_same_context(ctx_, c.context());
  if (label.empty())
    label = "d" + std::to_string(derivations_.size() + 1);
  derivations_.push_back(std::move(coefficients));
  labels_.push_back(std::move(label));
}

LaurentPoly DerivationSet::apply(std::size_t k, const LaurentPoly& f) const {
  const auto& coeffs = derivations_.at(k);
  require_same_context(ctx_, f.context());
  LaurentPoly r(ctx_);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero())
      continue;
    LaurentPoly d = partial_derivative(f, i);
    if (!d.is_zero())
      r += coeffs[i] * d;
  }
  return r;
}

StabilityResult is_delta_stable(const DerivationSet& derivs, const IdealSpec& ideal) {
  StabilityResult result;
  const auto gens = ideal.generators();
  for (std::size_t k = 0; k < derivs.size(); ++k)
    for (const auto& g : gens) {
      LaurentPoly image = derivs.apply(k, g);
      Verdict v = membership(ideal, image);
      if (v == Verdict::No)
        return {Verdict::No, StabilityWitness{k, g, image}};
      if (v == Verdict::Unsupported)
        result.verdict = Verdict::Unsupported;
    }
  return result;
}

StabilityResult is_poisson_stable(const BracketSpec& spec, const IdealSpec& ideal) {
  require_same_context(spec.context(), ideal.context());
  return is_delta_stable(DerivationSet::hamiltonians(spec), ideal);
}

// ---------------------------------------------------------------------------
// Bounded-depth core test

CoreTestResult delta_core_test(const DerivationSet& derivs, const IdealSpec& ideal, const LaurentPoly& f,
                               std::size_t max_depth, Exec exec) {
  using Kind = CoreTestResult::Kind;
  auto check = [](Verdict v) {
    if (v == Verdict::Unsupported)
      throw UnsupportedError("membership is unsupported for this ideal");
    return v == Verdict::Yes;
  };
  if (!check(membership(ideal, f)))
    return {Kind::NotIn, {}, f, 0};
  if (f.is_zero())
    return {Kind::In, {}, std::nullopt, 0};
  // A Delta-stable ideal is its own core.
  if (derivs.size() == 0 || is_delta_stable(derivs, ideal).verdict == Verdict::Yes)
    return {Kind::In, {}, std::nullopt, 0};

  struct Node {
    std::vector<std::size_t> word;
    LaurentPoly poly;
  };
  const std::size_t m = derivs.size();
  std::vector<Node> frontier{{{}, f}};
  std::set<LaurentPoly::TermMap> seen{f.terms()};

  for (std::size_t depth = 1; depth <= max_depth; ++depth) {
    const std::size_t count = frontier.size() * m;
    std::vector<std::optional<LaurentPoly>> images(count);
    std::vector<Verdict> verdicts(count, Verdict::Yes);
    for_each_index(count, exec, [&](std::size_t k) {
      images[k] = derivs.apply(k % m, frontier[k / m].poly);
      verdicts[k] = membership(ideal, *images[k]);
    });

    std::vector<Node> next;
    for (std::size_t k = 0; k < count; ++k) {
      auto word = frontier[k / m].word;
      word.push_back(k % m);
      if (!check(verdicts[k]))
        return {Kind::NotIn, std::move(word), std::move(*images[k]), depth};
      if (!images[k]->is_zero() && seen.insert(images[k]->terms()).second)
        next.push_back({std::move(word), std::move(*images[k])});
    }
    // Every reachable image has already been checked: the orbit closes inside J.
    if (next.empty())
      return {Kind::In, {}, std::nullopt, depth};
    frontier = std::move(next);
  }
  return {Kind::Inconclusive, {}, std::nullopt, max_depth};
}

// ---------------------------------------------------------------------------
// Primality

std::string_view to_string(Primality p) {
  switch (p) {
  case Primality::Prime: return "prime";
  case Primality::NotPrime: return "not-prime";
  case Primality::Unverified: return "unverified";
  }
  return "?";
}

namespace {

LaurentPoly power(const LaurentPoly& h, std::int64_t k) {
  LaurentPoly r = LaurentPoly::constant(h.context(), 1);
  for (std::int64_t i = 0; i < k; ++i)
    r *= h;
  return r;
}

// Reconstructs a k-th root term by term from the top: if g = H^k then
// LT(g - h^k) = k * LT(h)^(k-1) * (next term of H).
bool is_perfect_power(const LaurentPoly& g, std::int64_t k) {
  const auto& ctx = g.context();
  LaurentPoly monic = g * (1 / Rational(g.leading_coefficient()));
  Exponent lead = monic.leading_exponent();
  for (auto& v : lead) {
    if (v % k != 0)
      return false;
    v /= k;
  }
  Exponent cap = monic.max_exponent();
  std::int64_t min_degree = std::numeric_limits<std::int64_t>::max();
  for (const auto& [e, c] : monic.terms())
    min_degree = std::min(min_degree, total_degree(e));

  LaurentPoly h = LaurentPoly::monomial(ctx, lead);
  const Exponent h_lead = lead;
  Exponent scale_exp(lead.size());
  for (std::size_t i = 0; i < lead.size(); ++i)
    scale_exp[i] = (k - 1) * lead[i];
  for (int iter = 0; iter < 10000; ++iter) {
    LaurentPoly r = monic - power(h, k);
    if (r.is_zero())
      return true;
    Exponent t = sub_exponents(r.leading_exponent(), scale_exp);
    for (std::size_t i = 0; i < t.size(); ++i)
      if (t[i] < 0 || t[i] * k > cap[i])
        return false;
    if (total_degree(t) * k < min_degree || !GrlexGreater{}(h_lead, t))
      return false;
    h.add_term(t, r.leading_coefficient() / Rational(static_cast<long>(k)));
  }
  return false;
}

// A multilinear polynomial factors iff its variables split into two groups S, T
// with coefficient matrix [S-monomial][T-monomial] of rank one.
Primality multilinear_split(const LaurentPoly& g) {
  const std::size_t n = g.context()->arity();
  Exponent maxe = g.max_exponent();
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < n; ++i)
    if (maxe[i] > 0)
      vars.push_back(i);
  if (vars.size() < 2)
    return Primality::Prime;
  if (vars.size() > 20)
    return Primality::Unverified;
  const std::size_t rest = vars.size() - 1;
  for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t{1} << rest); ++mask) {
    std::vector<bool> in_s(n, false);
    in_s[vars[0]] = true;
    for (std::size_t b = 0; b < rest; ++b)
      if (mask >> b & 1)
        in_s[vars[b + 1]] = true;
    std::map<Exponent, std::map<Exponent, Rational>> rows;
    std::set<Exponent> cols;
    for (const auto& [e, c] : g.terms()) {
      Exponent s(n, 0), t(n, 0);
      for (std::size_t i = 0; i < n; ++i)
        (in_s[i] ? s : t)[i] = e[i];
      rows[s][t] = c;
      cols.insert(t);
    }
    const auto& pivot_row = rows.begin()->second;
    const auto& [t0, c0] = *pivot_row.begin();
    bool rank_one = true;
    for (const auto& [s, row] : rows) {
      auto at = [](const std::map<Exponent, Rational>& r, const Exponent& t) {
        auto it = r.find(t);
        return it == r.end() ? Rational(0) : it->second;
      };
      Rational rs0 = at(row, t0);
      for (const auto& t : cols)
        if (at(row, t) * c0 != rs0 * at(pivot_row, t)) {
          rank_one = false;
          break;
        }
      if (!rank_one)
        break;
    }
    if (rank_one)
      return Primality::NotPrime;
  }
  return Primality::Prime;
}

// g = A*x_i + B with A a monomial sharing no variable with the monomial content of B.
bool linear_with_monomial_coefficient(const LaurentPoly& g) {
  const std::size_t n = g.context()->arity();
  Exponent maxe = g.max_exponent();
  for (std::size_t i = 0; i < n; ++i) {
    if (maxe[i] != 1)
      continue;
    LaurentPoly a(g.context()), b(g.context());
    for (const auto& [e, c] : g.terms()) {
      if (e[i] == 1) {
        Exponent d = e;
        d[i] = 0;
        a.add_term(d, c);
      } else {
        b.add_term(e, c);
      }
    }
    if (!a.is_monomial() || b.is_zero())
      continue;
    const Exponent& ae = a.leading_exponent();
    Exponent content = b.min_exponent();
    bool coprime = true;
    for (std::size_t j = 0; j < n; ++j)
      if (ae[j] > 0 && content[j] > 0)
        coprime = false;
    if (coprime)
      return true;
  }
  return false;
}

} // namespace

Primality irreducibility_certificate(const LaurentPoly& g) {
  if (g.is_zero() || g.is_constant())
    return Primality::NotPrime;
  if (!is_zero_exponent(g.min_exponent())) {
    if (g.is_monomial())
      return is_single_variable(g.leading_exponent()) ? Primality::Prime : Primality::NotPrime;
    return Primality::NotPrime;
  }
  const std::int64_t deg = g.degree();
  if (deg == 1)
    return Primality::Prime;
  for (std::int64_t k = 2; k <= deg; ++k)
    if (deg % k == 0 && is_perfect_power(g, k))
      return Primality::NotPrime;
  Exponent maxe = g.max_exponent();
  if (std::all_of(maxe.begin(), maxe.end(), [](std::int64_t v) { return v <= 1; }))
    return multilinear_split(g);
  if (linear_with_monomial_coefficient(g))
    return Primality::Prime;
  return Primality::Unverified;
}

Primality primality_lite(const IdealSpec& ideal) {
  if (ideal.assume_prime())
    return Primality::Prime;
  if (ideal.presaturation())
    return Primality::Unverified;
  const auto& ctx = ideal.context();
  const auto& polys = ideal.polynomial_generators();

  if (ctx->is_laurent()) {
    if (polys.empty())
      return Primality::Prime;
    if (polys.size() > 1)
      return Primality::Unverified;
    const LaurentPoly& g = polys.front();
    Exponent shift = sub_exponents(Exponent(ctx->arity(), 0), g.min_exponent());
    LaurentPoly stripped = g.shifted(shift).rebased(with_kind(ctx, RingKind::Polynomial));
    return irreducibility_certificate(stripped);
  }

  // Minimal monomial generators decide primality of the monomial part.
  std::vector<Exponent> minimal;
  const auto& mons = ideal.monomial_generators();
  for (const auto& m : mons) {
    bool redundant = std::any_of(mons.begin(), mons.end(), [&](const Exponent& o) { return o != m && divides(o, m); });
    if (!redundant)
      minimal.push_back(m);
  }
  if (std::any_of(minimal.begin(), minimal.end(), is_zero_exponent))
    return Primality::NotPrime; // unit ideal
  bool coordinate = std::all_of(minimal.begin(), minimal.end(), is_single_variable);
  if (polys.empty())
    return coordinate ? Primality::Prime : Primality::NotPrime;
  if (!coordinate)
    return Primality::Unverified;
  std::vector<LaurentPoly> survivors;
  for (const auto& g : polys) {
    LaurentPoly r = reduce_by_monomials(g, minimal);
    if (!r.is_zero())
      survivors.push_back(std::move(r));
  }
  if (survivors.empty())
    return Primality::Prime;
  if (survivors.size() > 1)
    return Primality::Unverified;
  return irreducibility_certificate(survivors.front());
}

} // namespace psa
