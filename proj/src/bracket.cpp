#include "psa/bracket.hpp"

#include "psa/errors.hpp"

namespace psa {

BracketSpec BracketSpec::log_canonical(ContextPtr ctx, RationalMatrix pi) {
  const std::size_t n = ctx->arity();
  if (pi.size() != n)
    throw DomainError("pi has " + std::to_string(pi.size()) + " rows, expected " + std::to_string(n));
  for (const auto& row : pi)
    if (row.size() != n)
      throw DomainError("pi row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (pi[i][j] != -pi[j][i])
        throw DomainError("pi is not antisymmetric at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                          ")");
  return BracketSpec(std::move(ctx), std::move(pi));
}

BracketSpec BracketSpec::table(ContextPtr ctx, std::vector<TableEntry> entries) {
  Table t;
  const std::size_t n = ctx->arity();
  for (auto& entry : entries) {
    if (entry.i >= n || entry.j >= n)
      throw DomainError("bracket table index out of range");
    if (entry.i == entry.j)
      throw DomainError("bracket table entry {" + ctx->name(entry.i) + "," + ctx->name(entry.j) +
                        "} is on the diagonal");
    require_same_context(ctx, entry.value.context());
    std::pair key{std::min(entry.i, entry.j), std::max(entry.i, entry.j)};
    LaurentPoly value = entry.i < entry.j ? std::move(entry.value) : -entry.value;
    if (t.count(key))
      throw DomainError("duplicate bracket table entry {" + ctx->name(key.first) + "," + ctx->name(key.second) +
                        "}");
    if (!value.is_zero())
      t.emplace(key, std::move(value));
  }
  return BracketSpec(std::move(ctx), std::move(t));
}

BracketSpec BracketSpec::zero(ContextPtr ctx) {
  const std::size_t n = ctx->arity();
  return log_canonical(std::move(ctx), RationalMatrix(n, std::vector<Rational>(n, Rational(0))));
}

const RationalMatrix& BracketSpec::pi() const {
  if (auto* m = std::get_if<RationalMatrix>(&form_))
    return *m;
  throw DomainError("bracket is not log-canonical");
}

std::vector<TableEntry> BracketSpec::table_entries() const {
  std::vector<TableEntry> out;
  if (auto* t = std::get_if<Table>(&form_))
    for (const auto& [key, value] : *t)
      out.push_back({key.first, key.second, value});
  return out;
}

LaurentPoly BracketSpec::generator_bracket(std::size_t i, std::size_t j) const {
  const std::size_t n = ctx_->arity();
  if (i >= n || j >= n)
    throw DomainError("generator index out of range");
  if (auto* m = std::get_if<RationalMatrix>(&form_)) {
    Exponent e(n, 0);
    e[i] += 1;
    e[j] += 1;
    return LaurentPoly::monomial(ctx_, std::move(e), (*m)[i][j]);
  }
  if (i == j)
    return LaurentPoly(ctx_);
  const auto& t = std::get<Table>(form_);
  auto it = t.find({std::min(i, j), std::max(i, j)});
  if (it == t.end())
    return LaurentPoly(ctx_);
  return i < j ? it->second : -it->second;
}

BracketSpec BracketSpec::rebased(ContextPtr ctx) const {
  if (ctx->arity() != ctx_->arity())
    throw DomainError("cannot rebase bracket between contexts of different arity");
  if (auto* m = std::get_if<RationalMatrix>(&form_))
    return BracketSpec(std::move(ctx), *m);
  Table t;
  for (const auto& [key, value] : std::get<Table>(form_))
    t.emplace(key, value.rebased(ctx));
  return BracketSpec(std::move(ctx), std::move(t));
}

LaurentPoly bracket(const BracketSpec& spec, const LaurentPoly& f, const LaurentPoly& g) {
  require_same_context(spec.context(), f.context());
  require_same_context(spec.context(), g.context());
  const std::size_t n = spec.context()->arity();
  LaurentPoly result(spec.context());
  if (f.is_zero() || g.is_zero())
    return result;
  std::vector<LaurentPoly> df, dg;
  df.reserve(n);
  dg.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    df.push_back(partial_derivative(f, i));
    dg.push_back(partial_derivative(g, i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (df[i].is_zero())
      continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || dg[j].is_zero())
        continue;
      LaurentPoly gen = spec.generator_bracket(i, j);
      if (gen.is_zero())
        continue;
      result += gen * df[i] * dg[j];
    }
  }
  return result;
}

LaurentPoly monomial_bracket_closed_form(const ContextPtr& ctx, const RationalMatrix& pi, const Exponent& a,
                                         const Exponent& b) {
  const std::size_t n = ctx->arity();
  if (a.size() != n || b.size() != n || pi.size() != n)
    throw DomainError("dimension mismatch in monomial bracket");
  Rational scalar = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (pi[i].size() != n)
      throw DomainError("dimension mismatch in monomial bracket");
    if (a[i] == 0)
      continue;
    for (std::size_t j = 0; j < n; ++j)
      if (b[j] != 0)
        scalar += Rational(static_cast<long>(a[i])) * pi[i][j] * Rational(static_cast<long>(b[j]));
  }
  return LaurentPoly::monomial(ctx, add_exponents(a, b), scalar);
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

LaurentPoly random_polynomial(const ContextPtr& ctx, std::mt19937_64& rng) {
  const bool laurent = ctx->is_laurent();
  std::uniform_int_distribution<int> term_count(1, 4);
  std::uniform_int_distribution<int> exponent(laurent ? -2 : 0, laurent ? 2 : 3);
  std::uniform_int_distribution<int> coefficient(-5, 5);
  LaurentPoly p(ctx);
  int terms = term_count(rng);
  for (int t = 0; t < terms; ++t) {
    Exponent e(ctx->arity());
    for (auto& v : e)
      v = exponent(rng);
    p.add_term(e, coefficient(rng));
  }
  return p;
}

namespace {

LaurentPoly jacobiator(const BracketSpec& s, const LaurentPoly& f, const LaurentPoly& g, const LaurentPoly& h) {
  return bracket(s, f, bracket(s, g, h)) + bracket(s, g, bracket(s, h, f)) + bracket(s, h, bracket(s, f, g));
}

std::optional<AxiomCounterexample> check_trial(const BracketSpec& spec, std::uint64_t seed, std::size_t trial) {
  auto rng = trial_rng(seed, trial);
  const auto& ctx = spec.context();
  LaurentPoly f = random_polynomial(ctx, rng);
  LaurentPoly g = random_polynomial(ctx, rng);
  LaurentPoly h = random_polynomial(ctx, rng);

  LaurentPoly anti = bracket(spec, f, g) + bracket(spec, g, f);
  if (!anti.is_zero())
    return AxiomCounterexample{"antisymmetry", f, g, h, anti};
  LaurentPoly leib = bracket(spec, f, g * h) - g * bracket(spec, f, h) - bracket(spec, f, g) * h;
  if (!leib.is_zero())
    return AxiomCounterexample{"leibniz", f, g, h, leib};
  LaurentPoly jac = jacobiator(spec, f, g, h);
  if (!jac.is_zero())
    return AxiomCounterexample{"jacobi", f, g, h, jac};
  return std::nullopt;
}

void record(AxiomReport& report, const AxiomCounterexample& cx) {
  if (cx.axiom == "antisymmetry")
    report.antisymmetry_ok = false;
  else if (cx.axiom == "leibniz")
    report.leibniz_ok = false;
  else
    report.jacobi_ok = false;
  if (!report.counterexample)
    report.counterexample = cx;
}

} // namespace

AxiomReport check_poisson_axioms(const BracketSpec& spec, std::size_t trials, std::uint64_t seed, Exec exec) {
  AxiomReport report;
  const auto& ctx = spec.context();
  const std::size_t n = ctx->arity();

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t l = j + 1; l < n; ++l) {
        ++report.generator_triples;
        LaurentPoly xi = LaurentPoly::variable(ctx, i);
        LaurentPoly xj = LaurentPoly::variable(ctx, j);
        LaurentPoly xl = LaurentPoly::variable(ctx, l);
        LaurentPoly jac = jacobiator(spec, xi, xj, xl);
        if (!jac.is_zero())
          record(report, {"jacobi", xi, xj, xl, jac});
      }

  std::vector<std::optional<AxiomCounterexample>> results(trials);
  for_each_index(trials, exec, [&](std::size_t t) { results[t] = check_trial(spec, seed, t); });
  report.trials = trials;
  for (const auto& r : results)
    if (r)
      record(report, *r);
  return report;
}

} // namespace psa
