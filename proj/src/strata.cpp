#include "psa/strata.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "psa/errors.hpp"

namespace psa {

void ProblemSpec::require_stratifiable() const {
  if (!bracket.is_log_canonical())
    throw UnsupportedError("stratification requires a log-canonical bracket");
  if (torus.arity() != context->arity() || torus.matrix_rank() != context->arity())
    throw UnsupportedError("stratification requires the full coordinate torus (weight matrix of rank n)");
}

Stratum make_stratum(const ProblemSpec& problem, std::vector<std::size_t> vanishing) {
  const std::size_t n = problem.context->arity();
  std::sort(vanishing.begin(), vanishing.end());
  if (std::adjacent_find(vanishing.begin(), vanishing.end()) != vanishing.end())
    throw DomainError("invalid stratum: repeated variable");
  if (!vanishing.empty() && vanishing.back() >= n)
    throw DomainError("invalid stratum: variable index out of range");
  if (problem.context->is_laurent() && !vanishing.empty())
    throw DomainError("invalid stratum: a Laurent ring has only the zero H-stratum");
  std::vector<std::size_t> alive;
  for (std::size_t i = 0, k = 0; i < n; ++i) {
    if (k < vanishing.size() && vanishing[k] == i)
      ++k;
    else
      alive.push_back(i);
  }
  IdealSpec ideal = IdealSpec::coordinate(problem.context, vanishing);
  CenterBasis center = center_basis(problem.bracket.pi(), alive);
  return {std::move(vanishing), std::move(alive), std::move(ideal), std::move(center)};
}

std::vector<Stratum> enumerate_strata(const ProblemSpec& problem, Exec exec) {
  problem.require_stratifiable();
  const std::size_t n = problem.context->arity();
  if (problem.context->is_laurent())
    return {make_stratum(problem, {})};
  if (n > 24)
    throw UnsupportedError("too many variables to enumerate 2^n strata");
  const std::size_t count = std::size_t{1} << n;
  std::vector<std::optional<Stratum>> slots(count);
  for_each_index(count, exec, [&](std::size_t mask) {
    std::vector<std::size_t> x;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1)
        x.push_back(i);
    slots[mask] = make_stratum(problem, std::move(x));
  });
  std::vector<Stratum> out;
  out.reserve(count);
  for (auto& s : slots)
    out.push_back(std::move(*s));
  return out;
}

namespace {

void split_exponent(const Exponent& g, Exponent& plus, Exponent& minus) {
  plus.assign(g.size(), 0);
  minus.assign(g.size(), 0);
  for (std::size_t i = 0; i < g.size(); ++i)
    (g[i] > 0 ? plus[i] : minus[i]) = g[i] > 0 ? g[i] : -g[i];
}

} // namespace

LaurentPoly center_numerator(const ContextPtr& ctx, const Exponent& g, const Rational& alpha) {
  Exponent plus, minus;
  split_exponent(g, plus, minus);
  LaurentPoly p = LaurentPoly::monomial(ctx, plus);
  p.add_term(minus, -alpha);
  return p;
}

std::string PrimitiveTemplate::to_string() const {
  const auto& ctx = *stratum_.ideal.context();
  std::vector<std::string> parts;
  for (auto i : stratum_.vanishing)
    parts.push_back(ctx.name(i));
  for (std::size_t j = 0; j < stratum_.center.rank(); ++j) {
    Exponent plus, minus;
    split_exponent(stratum_.center.generators[j], plus, minus);
    std::string param = "a" + std::to_string(j + 1);
    std::string m = format_monomial(ctx, minus);
    parts.push_back(format_monomial(ctx, plus) + " - " + (m == "1" ? param : param + "*" + m));
  }
  if (parts.empty())
    return "<0>";
  std::string out = "<";
  for (std::size_t k = 0; k < parts.size(); ++k)
    out += (k ? ", " : "") + parts[k];
  return out + ">";
}

IdealSpec PrimitiveTemplate::instantiate(const std::vector<Rational>& alpha) const {
  if (alpha.size() != parameter_count())
    throw DomainError("expected " + std::to_string(parameter_count()) + " parameters, got " +
                      std::to_string(alpha.size()));
  for (const auto& a : alpha)
    if (a == 0)
      throw DomainError("template parameters must be nonzero");
  const auto& ctx = stratum_.ideal.context();
  std::vector<LaurentPoly> polys;
  for (std::size_t j = 0; j < alpha.size(); ++j)
    polys.push_back(center_numerator(ctx, stratum_.center.generators[j], alpha[j]));
  IdealSpec ideal(ctx, stratum_.ideal.monomial_generators(), std::move(polys));
  ideal.set_presaturation(requires_saturation());
  return ideal;
}

PrimitiveTemplate primitive_template(const ProblemSpec& problem, std::vector<std::size_t> vanishing) {
  problem.require_stratifiable();
  return PrimitiveTemplate(make_stratum(problem, std::move(vanishing)));
}

std::optional<Rational> evaluate_monomial(const Exponent& g, const RationalPoint& p) {
  if (g.size() != p.size())
    throw DomainError("point arity mismatch");
  Rational v = 1;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] == 0)
      continue;
    if (g[i] < 0 && p[i] == 0)
      return std::nullopt;
    v *= power(p[i], g[i]);
  }
  return v;
}

IdealSpec pcore_point(const ProblemSpec& problem, const RationalPoint& p) {
  problem.require_stratifiable();
  const auto& ctx = problem.context;
  if (p.size() != ctx->arity())
    throw DomainError("point has " + std::to_string(p.size()) + " coordinates, expected " +
                      std::to_string(ctx->arity()));
  std::vector<std::size_t> zeros;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] == 0)
      zeros.push_back(i);
  if (ctx->is_laurent() && !zeros.empty())
    throw DomainError("a point of the torus must have nonzero coordinates");

  // The core is a Poisson ideal inside m_p. Its H-core is the coordinate ideal
  // of the exact vanishing set of p, so it lies in that stratum, and the
  // parameters are read off by evaluating the center generators at p.
  PrimitiveTemplate tmpl(make_stratum(problem, zeros));
  if (tmpl.requires_saturation())
    throw UnsupportedError("the stratum of this point has " + std::to_string(tmpl.parameter_count()) +
                           " center generators; the primitive ideal needs saturation");
  std::vector<Rational> alpha;
  for (const auto& g : tmpl.stratum().center.generators) {
    auto v = evaluate_monomial(g, p);
    if (!v || *v == 0)
      throw std::logic_error("center generator undefined or zero on its own stratum");
    alpha.push_back(*v);
  }
  IdealSpec core = tmpl.instantiate(alpha);

  if (is_poisson_stable(problem.bracket, core).verdict != Verdict::Yes)
    throw std::logic_error("computed Poisson core " + core.to_string() + " is not Poisson-stable");
  for (const auto& g : core.generators()) {
    auto v = evaluate(g, p);
    if (!v || *v != 0)
      throw std::logic_error("computed Poisson core " + core.to_string() + " does not vanish at the point");
  }
  return core;
}

std::vector<Rational> orbit_witness(const ProblemSpec& problem, const std::vector<std::size_t>& vanishing,
                                    const std::vector<Rational>& alpha, const std::vector<Rational>& beta) {
  problem.require_stratifiable();
  Stratum s = make_stratum(problem, vanishing);
  const std::size_t n = problem.context->arity();
  const std::size_t k = s.center.rank();
  if (alpha.size() != k || beta.size() != k)
    throw DomainError("expected " + std::to_string(k) + " parameters per side");
  std::vector<Rational> ratio(k);
  for (std::size_t j = 0; j < k; ++j) {
    if (alpha[j] == 0 || beta[j] == 0)
      throw DomainError("orbit parameters must be nonzero");
    ratio[j] = alpha[j] / beta[j];
  }
  std::vector<Rational> h(n, Rational(1));
  if (k == 0)
    return h;

  // U*G*V = [I | 0] because the center lattice is saturated. Solving G*y = log(ratio)
  // multiplicatively gives w = ratio^U on the first k coordinates and h = w^V.
  IntMatrix G(k, n);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i)
      G(j, i) = static_cast<long>(s.center.generators[j][i]);
  SmithForm f = smith_normal_form(G);
  for (std::size_t j = 0; j < k; ++j)
    if (f.S(j, j) != 1)
      throw std::logic_error("center lattice is not saturated");
  std::vector<Rational> w(k, Rational(1));
  for (std::size_t l = 0; l < k; ++l)
    for (std::size_t j = 0; j < k; ++j)
      w[l] *= power(ratio[j], to_int64(f.U(l, j)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l)
      h[i] *= power(w[l], to_int64(f.V(i, l)));

  for (std::size_t j = 0; j < k; ++j)
    if (evaluate_monomial(s.center.generators[j], h) != ratio[j])
      throw std::logic_error("orbit witness failed its own check");
  return h;
}

LaurentPoly apply_torus_element(const std::vector<Rational>& h, const LaurentPoly& f) {
  LaurentPoly r(f.context());
  for (const auto& [e, c] : f.terms()) {
    auto scale = evaluate_monomial(e, h);
    if (!scale)
      throw DomainError("torus element has a zero coordinate");
    r.add_term(e, c * *scale);
  }
  return r;
}

std::vector<CatalogEntryReport> verify_hpoisson_catalog(const ProblemSpec& problem,
                                                        const std::vector<IdealSpec>& catalog) {
  std::vector<CatalogEntryReport> out;
  for (const auto& ideal : catalog) {
    require_same_context(problem.context, ideal.context());
    CatalogEntryReport r{ideal, is_h_stable(problem.torus, ideal), is_poisson_stable(problem.bracket, ideal),
                         primality_lite(ideal)};
    out.push_back(std::move(r));
  }
  return out;
}

Verdict ideal_contained(const IdealSpec& i, const IdealSpec& j) {
  Verdict result = Verdict::Yes;
  for (const auto& g : i.generators()) {
    Verdict v = membership(j, g);
    if (v == Verdict::No)
      return Verdict::No;
    if (v == Verdict::Unsupported)
      result = Verdict::Unsupported;
  }
  return result;
}

std::string emit_poset_dot(const std::vector<IdealSpec>& catalog) {
  const std::size_t n = catalog.size();
  std::vector<std::vector<Verdict>> le(n, std::vector<Verdict>(n, Verdict::Yes));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b)
        le[a][b] = ideal_contained(catalog[a], catalog[b]);
  auto strict = [&](std::size_t a, std::size_t b) {
    return a != b && le[a][b] == Verdict::Yes && le[b][a] == Verdict::No;
  };

  std::ostringstream dot;
  dot << "digraph poset {\n  node [shape=box];\n";
  for (std::size_t a = 0; a < n; ++a)
    dot << "  n" << a << " [label=\"" << catalog[a].to_string() << "\"];\n";
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!strict(a, b))
        continue;
      bool covered = true;
      for (std::size_t c = 0; c < n && covered; ++c)
        if (strict(a, c) && strict(c, b))
          covered = false;
      if (covered)
        dot << "  n" << a << " -> n" << b << ";\n";
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (le[a][b] != Verdict::Unsupported && le[b][a] != Verdict::Unsupported)
        continue;
      bool reversed = le[a][b] == Verdict::No;
      dot << "  n" << (reversed ? b : a) << " -> n" << (reversed ? a : b)
          << " [style=dashed, label=\"unknown\"];\n";
    }
  dot << "}\n";
  return dot.str();
}

} // namespace psa
