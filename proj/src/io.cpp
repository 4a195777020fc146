#include "psa/io.hpp"

#include <fstream>
#include <sstream>

namespace psa {

namespace {

[[noreturn]] void fail(const std::string& source, const std::string& where, const std::string& message) {
  throw InputError(source + ": " + (where.empty() ? "" : where + ": ") + message);
}

// Runs fn, re-labelling library and JSON errors with the file and JSON location.
template <class Fn>
auto located(const std::string& source, const std::string& where, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    fail(source, where, e.what());
  } catch (const json::exception& e) {
    fail(source, where, e.what());
  }
}

const json& require(const json& j, const char* key, const std::string& source, const std::string& where) {
  if (!j.is_object())
    fail(source, where, "expected an object");
  auto it = j.find(key);
  if (it == j.end())
    fail(source, where, std::string("missing key \"") + key + "\"");
  return *it;
}

Rational rational_from_json(const json& j, const std::string& source, const std::string& where) {
  if (j.is_number_integer())
    return Rational(j.get<long>());
  if (j.is_string())
    return located(source, where, [&] { return parse_rational(j.get<std::string>()); });
  fail(source, where, "expected a rational as a string or an integer");
}

LaurentPoly poly_from_json(const json& j, const ContextPtr& ctx, const std::string& source,
                           const std::string& where) {
  if (!j.is_string())
    fail(source, where, "expected a polynomial string");
  return located(source, where, [&] { return parse(j.get<std::string>(), ctx); });
}

std::size_t variable_from_json(const json& j, const ContextPtr& ctx, const std::string& source,
                               const std::string& where) {
  if (!j.is_string())
    fail(source, where, "expected a variable name");
  auto idx = ctx->index_of(j.get<std::string>());
  if (!idx)
    fail(source, where, "unknown variable '" + j.get<std::string>() + "'");
  return *idx;
}

const json& require_array(const json& j, const std::string& source, const std::string& where) {
  if (!j.is_array())
    fail(source, where, "expected an array");
  return j;
}

} // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw InputError(path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Bracket and torus

BracketSpec bracket_from_json(const json& j, const ContextPtr& ctx, const std::string& source) {
  const std::string where = "/bracket";
  const json& kind = require(j, "kind", source, where);
  if (kind == "log_canonical") {
    const json& pi = require_array(require(j, "pi", source, where), source, where + "/pi");
    RationalMatrix m;
    for (std::size_t r = 0; r < pi.size(); ++r) {
      const std::string row_where = where + "/pi/" + std::to_string(r);
      const json& row = require_array(pi[r], source, row_where);
      std::vector<Rational> values;
      for (std::size_t c = 0; c < row.size(); ++c)
        values.push_back(rational_from_json(row[c], source, row_where + "/" + std::to_string(c)));
      m.push_back(std::move(values));
    }
    return located(source, where + "/pi", [&] { return BracketSpec::log_canonical(ctx, std::move(m)); });
  }
  if (kind == "table") {
    const json& entries = require_array(require(j, "entries", source, where), source, where + "/entries");
    std::vector<TableEntry> table;
    for (std::size_t k = 0; k < entries.size(); ++k) {
      const std::string ew = where + "/entries/" + std::to_string(k);
      std::size_t i = variable_from_json(require(entries[k], "i", source, ew), ctx, source, ew + "/i");
      std::size_t jj = variable_from_json(require(entries[k], "j", source, ew), ctx, source, ew + "/j");
      LaurentPoly value = poly_from_json(require(entries[k], "value", source, ew), ctx, source, ew + "/value");
      table.push_back({i, jj, std::move(value)});
    }
    return located(source, where + "/entries", [&] { return BracketSpec::table(ctx, std::move(table)); });
  }
  fail(source, where + "/kind", "expected \"log_canonical\" or \"table\"");
}

json bracket_to_json(const BracketSpec& spec) {
  if (spec.is_log_canonical()) {
    json pi = json::array();
    for (const auto& row : spec.pi()) {
      json r = json::array();
      for (const auto& q : row)
        r.push_back(to_string(q));
      pi.push_back(std::move(r));
    }
    return {{"kind", "log_canonical"}, {"pi", std::move(pi)}};
  }
  json entries = json::array();
  const auto& ctx = spec.context();
  for (const auto& e : spec.table_entries())
    entries.push_back({{"i", ctx->name(e.i)}, {"j", ctx->name(e.j)}, {"value", e.value.to_string()}});
  return {{"kind", "table"}, {"entries", std::move(entries)}};
}

TorusAction torus_from_json(const json& j, std::size_t arity, const std::string& source) {
  const std::string where = "/torus";
  const json& weights = require_array(require(j, "weights", source, where), source, where + "/weights");
  std::vector<std::vector<std::int64_t>> w;
  for (std::size_t r = 0; r < weights.size(); ++r) {
    const std::string rw = where + "/weights/" + std::to_string(r);
    const json& row = require_array(weights[r], source, rw);
    std::vector<std::int64_t> values;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (!row[c].is_number_integer())
        fail(source, rw + "/" + std::to_string(c), "expected an integer weight");
      values.push_back(row[c].get<std::int64_t>());
    }
    w.push_back(std::move(values));
  }
  if (j.contains("rank")) {
    const json& rank = j["rank"];
    if (!rank.is_number_integer() || rank.get<std::int64_t>() != static_cast<std::int64_t>(w.size()))
      fail(source, where + "/rank", "rank does not match the number of weight rows");
  }
  return located(source, where + "/weights", [&] { return TorusAction(arity, std::move(w)); });
}

json torus_to_json(const TorusAction& torus) { return {{"rank", torus.rank()}, {"weights", torus.weights()}}; }

// ---------------------------------------------------------------------------
// Problem

ProblemSpec problem_from_json(const json& j, const std::string& source) {
  const json& vars = require_array(require(j, "variables", source, ""), source, "/variables");
  std::vector<std::string> names;
  for (std::size_t k = 0; k < vars.size(); ++k) {
    if (!vars[k].is_string())
      fail(source, "/variables/" + std::to_string(k), "expected a variable name");
    names.push_back(vars[k].get<std::string>());
  }
  RingKind kind = RingKind::Polynomial;
  if (j.contains("ring")) {
    if (j["ring"] == "laurent")
      kind = RingKind::Laurent;
    else if (j["ring"] != "polynomial")
      fail(source, "/ring", "expected \"polynomial\" or \"laurent\"");
  }
  ContextPtr ctx = located(source, "/variables", [&] { return make_context(std::move(names), kind); });

  BracketSpec bracket = j.contains("bracket") ? bracket_from_json(j["bracket"], ctx, source) : BracketSpec::zero(ctx);
  TorusAction torus =
      j.contains("torus") ? torus_from_json(j["torus"], ctx->arity(), source) : TorusAction::identity(ctx->arity());

  std::optional<DerivationSet> derivations;
  if (j.contains("derivations")) {
    const json& ds = require_array(j["derivations"], source, "/derivations");
    DerivationSet set(ctx);
    for (std::size_t k = 0; k < ds.size(); ++k) {
      std::string dw = "/derivations/" + std::to_string(k);
      const json* coeffs = &ds[k];
      std::string label;
      if (ds[k].is_object()) {
        coeffs = &require(ds[k], "coefficients", source, dw);
        if (ds[k].contains("label") && ds[k]["label"].is_string())
          label = ds[k]["label"].get<std::string>();
        dw += "/coefficients";
      }
      require_array(*coeffs, source, dw);
      std::vector<LaurentPoly> c;
      for (std::size_t i = 0; i < coeffs->size(); ++i)
        c.push_back(poly_from_json((*coeffs)[i], ctx, source, dw + "/" + std::to_string(i)));
      located(source, dw, [&] {
        set.add(std::move(c), label);
        return 0;
      });
    }
    derivations = std::move(set);
  }
  return ProblemSpec{ctx, std::move(bracket), std::move(torus), std::move(derivations)};
}

json problem_to_json(const ProblemSpec& problem) {
  const auto& ctx = problem.context;
  json j = {{"variables", ctx->names()},
            {"ring", ctx->is_laurent() ? "laurent" : "polynomial"},
            {"bracket", bracket_to_json(problem.bracket)},
            {"torus", torus_to_json(problem.torus)}};
  if (problem.derivations) {
    json ds = json::array();
    for (std::size_t k = 0; k < problem.derivations->size(); ++k) {
      json c = json::array();
      for (const auto& p : problem.derivations->coefficients(k))
        c.push_back(p.to_string());
      ds.push_back({{"label", problem.derivations->label(k)}, {"coefficients", std::move(c)}});
    }
    j["derivations"] = std::move(ds);
  }
  return j;
}

ProblemSpec load_problem(const std::string& path) { return problem_from_json(read_json_file(path), path); }

// ---------------------------------------------------------------------------
// Ideals

IdealSpec ideal_from_json(const json& j, const ContextPtr& ctx, const std::string& source) {
  if (!j.is_object())
    fail(source, "", "expected an ideal object");
  std::vector<Exponent> monomials;
  std::vector<LaurentPoly> polys;
  if (j.contains("monomial_generators")) {
    const json& ms = require_array(j["monomial_generators"], source, "/monomial_generators");
    for (std::size_t k = 0; k < ms.size(); ++k) {
      std::string w = "/monomial_generators/" + std::to_string(k);
      LaurentPoly m = poly_from_json(ms[k], ctx, source, w);
      if (!m.is_monomial())
        fail(source, w, "'" + ms[k].get<std::string>() + "' is not a monomial");
      monomials.push_back(m.leading_exponent());
    }
  }
  if (j.contains("polynomial_generators")) {
    const json& ps = require_array(j["polynomial_generators"], source, "/polynomial_generators");
    for (std::size_t k = 0; k < ps.size(); ++k)
      polys.push_back(poly_from_json(ps[k], ctx, source, "/polynomial_generators/" + std::to_string(k)));
  }
  IdealSpec ideal = located(source, "", [&] { return IdealSpec(ctx, std::move(monomials), std::move(polys)); });
  if (j.contains("assume_prime"))
    ideal.set_assume_prime(j["assume_prime"].get<bool>());
  if (j.contains("requires_saturation"))
    ideal.set_presaturation(j["requires_saturation"].get<bool>());
  return ideal;
}

json ideal_to_json(const IdealSpec& ideal) {
  json ms = json::array(), ps = json::array();
  for (const auto& m : ideal.monomial_generators())
    ms.push_back(format_monomial(*ideal.context(), m));
  for (const auto& p : ideal.polynomial_generators())
    ps.push_back(p.to_string());
  json j = {{"monomial_generators", std::move(ms)}, {"polynomial_generators", std::move(ps)}};
  if (ideal.assume_prime())
    j["assume_prime"] = true;
  if (ideal.presaturation())
    j["requires_saturation"] = true;
  return j;
}

std::vector<IdealSpec> catalog_from_json(const json& j, const ContextPtr& ctx, const std::string& source) {
  const json* list = &j;
  if (j.is_object() && j.contains("ideals"))
    list = &j["ideals"];
  else if (j.is_object())
    return {ideal_from_json(j, ctx, source)};
  require_array(*list, source, "/ideals");
  std::vector<IdealSpec> out;
  for (std::size_t k = 0; k < list->size(); ++k)
    out.push_back(ideal_from_json((*list)[k], ctx, source + " (entry " + std::to_string(k) + ")"));
  return out;
}

std::vector<IdealSpec> load_catalog(const std::string& path, const ContextPtr& ctx) {
  return catalog_from_json(read_json_file(path), ctx, path);
}

// ---------------------------------------------------------------------------
// Reports

json stratum_to_json(const PrimitiveTemplate& tmpl) {
  const auto& s = tmpl.stratum();
  const auto& ctx = *s.ideal.context();
  json x = json::array(), center = json::array();
  for (auto i : s.vanishing)
    x.push_back(ctx.name(i));
  for (const auto& g : s.center.generators)
    center.push_back(format_monomial(ctx, g));
  json j = {{"X", std::move(x)},
            {"J", s.ideal.to_string(",")},
            {"center", std::move(center)},
            {"primitive_template", tmpl.to_string()}};
  if (tmpl.requires_saturation())
    j["requires_saturation"] = true;
  return j;
}

PrimitiveTemplate stratum_from_json(const json& j, const ProblemSpec& problem) {
  const std::string source = "stratum record";
  const auto& ctx = problem.context;
  const json& x = require_array(require(j, "X", source, ""), source, "/X");
  std::vector<std::size_t> vanishing;
  for (std::size_t k = 0; k < x.size(); ++k)
    vanishing.push_back(variable_from_json(x[k], ctx, source, "/X/" + std::to_string(k)));
  PrimitiveTemplate tmpl = located(source, "/X", [&] { return primitive_template(problem, vanishing); });

  const json& center = require_array(require(j, "center", source, ""), source, "/center");
  ContextPtr lctx = with_kind(ctx, RingKind::Laurent);
  std::vector<Exponent> gens;
  for (std::size_t k = 0; k < center.size(); ++k) {
    LaurentPoly z = poly_from_json(center[k], lctx, source, "/center/" + std::to_string(k));
    if (!z.is_monomial() || z.leading_coefficient() != 1)
      fail(source, "/center/" + std::to_string(k), "center generators are monic monomials");
    gens.push_back(z.leading_exponent());
  }
  if (gens != tmpl.stratum().center.generators)
    fail(source, "/center", "center does not match the problem");
  if (require(j, "J", source, "") != tmpl.stratum().ideal.to_string(","))
    fail(source, "/J", "ideal does not match the problem");
  if (require(j, "primitive_template", source, "") != tmpl.to_string())
    fail(source, "/primitive_template", "template does not match the problem");
  return tmpl;
}

json axiom_report_to_json(const AxiomReport& report) {
  json j = {{"antisymmetry", report.antisymmetry_ok},
            {"leibniz", report.leibniz_ok},
            {"jacobi", report.jacobi_ok},
            {"generator_triples", report.generator_triples},
            {"trials", report.trials},
            {"counterexample", nullptr}};
  if (report.counterexample) {
    const auto& c = *report.counterexample;
    j["counterexample"] = {{"axiom", c.axiom},
                           {"f", c.f.to_string()},
                           {"g", c.g.to_string()},
                           {"h", c.h.to_string()},
                           {"residual", c.residual.to_string()}};
  }
  return j;
}

AxiomReport axiom_report_from_json(const json& j, const ContextPtr& ctx) {
  const std::string source = "axiom report";
  AxiomReport r;
  r.antisymmetry_ok = require(j, "antisymmetry", source, "").get<bool>();
  r.leibniz_ok = require(j, "leibniz", source, "").get<bool>();
  r.jacobi_ok = require(j, "jacobi", source, "").get<bool>();
  r.generator_triples = require(j, "generator_triples", source, "").get<std::size_t>();
  r.trials = require(j, "trials", source, "").get<std::size_t>();
  const json& c = require(j, "counterexample", source, "");
  if (!c.is_null()) {
    auto poly = [&](const char* key) {
      return poly_from_json(require(c, key, source, "/counterexample"), ctx, source,
                            std::string("/counterexample/") + key);
    };
    r.counterexample = AxiomCounterexample{require(c, "axiom", source, "/counterexample").get<std::string>(),
                                           poly("f"), poly("g"), poly("h"), poly("residual")};
  }
  return r;
}

json core_result_to_json(const CoreTestResult& result, const DerivationSet& derivs) {
  using Kind = CoreTestResult::Kind;
  json witness = json::array();
  for (auto k : result.witness)
    witness.push_back(derivs.label(k));
  const char* verdict = result.kind == Kind::In ? "In" : result.kind == Kind::NotIn ? "NotIn" : "Inconclusive";
  json j = {{"verdict", verdict}, {"depth", result.depth}, {"witness", std::move(witness)}, {"image", nullptr}};
  if (result.image)
    j["image"] = result.image->to_string();
  return j;
}

} // namespace psa
