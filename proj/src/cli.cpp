#include "psa/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "psa/io.hpp"

namespace psa {

namespace {

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos)
      throw InputError("empty entry in list '" + text + "'");
    out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

std::vector<Rational> rationals_option(const std::string& option, const std::string& text) {
  std::vector<Rational> out;
  for (const auto& item : split_list(text)) {
    try {
      out.push_back(parse_rational(item));
    } catch (const Error& e) {
      throw InputError(option + ": " + e.what());
    }
  }
  return out;
}

std::vector<std::size_t> variables_option(const std::string& option, const std::string& text,
                                          const VarContext& ctx) {
  std::vector<std::size_t> out;
  if (text.empty() || text == "{}")
    return out;
  for (const auto& name : split_list(text)) {
    auto idx = ctx.index_of(name);
    if (!idx)
      throw InputError(option + ": unknown variable '" + name + "'");
    out.push_back(*idx);
  }
  return out;
}

std::string set_text(const std::vector<std::size_t>& xs, const VarContext& ctx) {
  std::string s = "{";
  for (std::size_t k = 0; k < xs.size(); ++k)
    s += (k ? "," : "") + ctx.name(xs[k]);
  return s + "}";
}

std::string center_list(const CenterBasis& c, const VarContext& ctx) {
  std::string s = "[";
  for (std::size_t k = 0; k < c.rank(); ++k)
    s += (k ? ", " : "") + format_monomial(ctx, c.generators[k]);
  return s + "]";
}

int cmd_check(const RunConfig& cfg, const ProblemSpec& problem, std::ostream& out) {
  AxiomReport report = check_poisson_axioms(problem.bracket, cfg.trials, cfg.seed);
  if (cfg.json) {
    out << axiom_report_to_json(report).dump(2) << "\n";
  } else {
    auto flag = [](bool ok) { return ok ? "ok" : "FAILED"; };
    out << "antisymmetry: " << flag(report.antisymmetry_ok) << "\n"
        << "leibniz: " << flag(report.leibniz_ok) << "\n"
        << "jacobi: " << flag(report.jacobi_ok) << "\n"
        << "generator triples: " << report.generator_triples << ", random trials: " << report.trials
        << ", seed: " << cfg.seed << "\n";
    if (report.counterexample) {
      const auto& c = *report.counterexample;
      out << "counterexample (" << c.axiom << "): f = " << c.f.to_string() << "; g = " << c.g.to_string()
          << "; h = " << c.h.to_string() << "\n"
          << "residual: " << c.residual.to_string() << "\n";
    }
  }
  return report.ok() ? kExitOk : kExitMathFailure;
}

int cmd_center(const RunConfig& cfg, const ProblemSpec& problem, std::ostream& out) {
  if (!problem.bracket.is_log_canonical())
    throw UnsupportedError("center requires a log-canonical bracket");
  const auto& ctx = *problem.context;
  std::vector<std::size_t> all(ctx.arity());
  for (std::size_t i = 0; i < all.size(); ++i)
    all[i] = i;
  CenterBasis c = center_basis(problem.bracket.pi(), all);
  if (cfg.json) {
    json gens = json::array();
    for (const auto& g : c.generators)
      gens.push_back(format_monomial(ctx, g));
    out << json{{"ring", ctx.is_laurent() ? "laurent" : "polynomial"}, {"rank", c.rank()}, {"generators", gens}}
               .dump(2)
        << "\n";
    return kExitOk;
  }
  // For a polynomial ring this is the center of the localization at all monomials.
  out << (ctx.is_laurent() ? "Z_P(R) = Q" : "Z_P(R_0) = Q");
  if (c.rank() > 0) {
    out << "[";
    for (std::size_t k = 0; k < c.rank(); ++k)
      out << (k ? ", " : "") << "z" << k + 1 << "^±1";
    out << "]";
    for (std::size_t k = 0; k < c.rank(); ++k)
      out << ", z" << k + 1 << " = " << format_monomial(ctx, c.generators[k]);
  }
  out << "\n";
  return kExitOk;
}

int cmd_strata(const RunConfig& cfg, const ProblemSpec& problem, std::ostream& out) {
  const auto& ctx = *problem.context;
  std::vector<Stratum> strata = enumerate_strata(problem);
  if (cfg.json) {
    json arr = json::array();
    for (auto& s : strata)
      arr.push_back(stratum_to_json(PrimitiveTemplate(std::move(s))));
    out << arr.dump(2) << "\n";
    return kExitOk;
  }
  for (auto& s : strata) {
    PrimitiveTemplate t(std::move(s));
    const Stratum& st = t.stratum();
    out << "X=" << set_text(st.vanishing, ctx) << " J=" << st.ideal.to_string(",")
        << " center=" << center_list(st.center, ctx) << " template=" << t.to_string();
    if (t.requires_saturation())
      out << " (requires saturation)";
    out << "\n";
  }
  return kExitOk;
}

int cmd_primitive(const RunConfig& cfg, const ProblemSpec& problem, std::ostream& out) {
  auto vanishing = variables_option("--stratum", cfg.stratum, *problem.context);
  PrimitiveTemplate t = primitive_template(problem, vanishing);
  if (!cfg.alpha) {
    if (cfg.json)
      out << stratum_to_json(t).dump(2) << "\n";
    else
      out << t.to_string() << "\n";
    return kExitOk;
  }
  std::vector<Rational> alpha = cfg.alpha->empty() ? std::vector<Rational>{} : rationals_option("--alpha", *cfg.alpha);
  IdealSpec ideal = t.instantiate(alpha);
  if (cfg.json)
    out << ideal_to_json(ideal).dump(2) << "\n";
  else
    out << ideal.to_string() << (ideal.presaturation() ? " (requires saturation)" : "") << "\n";
  return kExitOk;
}

int cmd_pcore(const RunConfig& cfg, const ProblemSpec& problem, std::ostream& out) {
  IdealSpec core = pcore_point(problem, rationals_option("--point", cfg.point));
  if (cfg.json)
    out << ideal_to_json(core).dump(2) << "\n";
  else
    out << core.to_string() << "\n";
  return kExitOk;
}

std::string stability_witness_text(const StabilityWitness& w, const DerivationSet& ops) {
  return ops.label(w.operator_index) + " applied to " + w.generator.to_string() + " gives " + w.image.to_string();
}

int cmd_verify(const RunConfig& cfg, const ProblemSpec& problem, std::ostream& out) {
  auto catalog = load_catalog(cfg.ideal_path, problem.context);
  auto reports = verify_hpoisson_catalog(problem, catalog);
  DerivationSet hams = DerivationSet::hamiltonians(problem.bracket);
  std::size_t passed = 0, failed = 0, unsupported = 0;
  json arr = json::array();
  std::ostringstream text;
  for (const auto& r : reports) {
    std::string status = r.passed() ? "PASS" : r.unsupported() ? "UNSUPPORTED" : "FAIL";
    if (r.passed())
      ++passed;
    else if (r.unsupported())
      ++unsupported;
    else
      ++failed;
    json entry = {{"ideal", r.ideal.to_string()},
                  {"h_stable", std::string(to_string(r.h_stable))},
                  {"poisson_stable", std::string(to_string(r.poisson.verdict))},
                  {"primality", std::string(to_string(r.primality))},
                  {"status", status},
                  {"residual", nullptr}};
    text << r.ideal.to_string() << ": h_stable=" << to_string(r.h_stable)
         << " poisson_stable=" << to_string(r.poisson.verdict) << " primality=" << to_string(r.primality) << " ["
         << status << "]\n";
    if (r.poisson.witness) {
      entry["residual"] = stability_witness_text(*r.poisson.witness, hams);
      text << "  residual: " << stability_witness_text(*r.poisson.witness, hams) << "\n";
    }
    arr.push_back(std::move(entry));
  }
  if (cfg.json) {
    out << json{{"ideals", arr}, {"passed", passed}, {"failed", failed}, {"unsupported", unsupported}}.dump(2)
        << "\n";
  } else {
    out << text.str() << passed << "/" << reports.size() << " ideals passed";
    if (unsupported)
      out << ", " << unsupported << " unsupported";
    out << "\n";
  }
  return failed ? kExitMathFailure : kExitOk;
}

int cmd_core_test(const RunConfig& cfg, const ProblemSpec& problem, std::ostream& out) {
  auto catalog = load_catalog(cfg.ideal_path, problem.context);
  if (catalog.size() != 1)
    throw InputError(cfg.ideal_path + ": expected exactly one ideal");
  LaurentPoly f(problem.context);
  try {
    f = parse(cfg.element, problem.context);
  } catch (const Error& e) {
    throw InputError(std::string("--element: ") + e.what());
  }
  DerivationSet derivs = problem.derivations ? *problem.derivations : DerivationSet::hamiltonians(problem.bracket);
  CoreTestResult r = delta_core_test(derivs, catalog.front(), f, cfg.depth);
  if (cfg.json) {
    out << core_result_to_json(r, derivs).dump(2) << "\n";
    return kExitOk;
  }
  const std::string ideal = catalog.front().to_string();
  switch (r.kind) {
  case CoreTestResult::Kind::In:
    out << "In: " << f.to_string() << " lies in the core of " << ideal << "\n";
    break;
  case CoreTestResult::Kind::NotIn: {
    out << "NotIn: ";
    if (r.witness.empty()) {
      out << f.to_string() << " is not in " << ideal << "\n";
    } else {
      out << "witness [";
      for (std::size_t k = 0; k < r.witness.size(); ++k)
        out << (k ? ", " : "") << derivs.label(r.witness[k]);
      out << "] at depth " << r.depth << " gives " << r.image->to_string() << ", not in " << ideal << "\n";
    }
    break;
  }
  case CoreTestResult::Kind::Inconclusive:
    out << "Inconclusive at depth " << r.depth << ": every word image stays in " << ideal << "\n";
    break;
  }
  return kExitOk;
}

int cmd_poset(const RunConfig& cfg, const ProblemSpec& problem, std::ostream& out) {
  auto catalog = load_catalog(cfg.catalog_path, problem.context);
  std::string dot = emit_poset_dot(catalog);
  if (cfg.dot_path.empty()) {
    out << dot;
    return kExitOk;
  }
  std::ofstream file(cfg.dot_path);
  if (!file)
    throw InputError(cfg.dot_path + ": cannot open for writing");
  file << dot;
  out << "wrote " << catalog.size() << " nodes to " << cfg.dot_path << "\n";
  return kExitOk;
}

} // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    ProblemSpec problem = load_problem(cfg.problem_path);
    if (cfg.command == "check")
      return cmd_check(cfg, problem, out);
    if (cfg.command == "center")
      return cmd_center(cfg, problem, out);
    if (cfg.command == "strata")
      return cmd_strata(cfg, problem, out);
    if (cfg.command == "primitive")
      return cmd_primitive(cfg, problem, out);
    if (cfg.command == "pcore")
      return cmd_pcore(cfg, problem, out);
    if (cfg.command == "verify-ideal")
      return cmd_verify(cfg, problem, out);
    if (cfg.command == "core-test")
      return cmd_core_test(cfg, problem, out);
    if (cfg.command == "poset")
      return cmd_poset(cfg, problem, out);
    err << "error: unknown command '" << cfg.command << "'\n";
    return kExitInputError;
  } catch (const UnsupportedError& e) {
    err << "error: unsupported: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::logic_error& e) {
    err << "internal check failed: " << e.what() << "\n";
    return kExitMathFailure;
  }
}

} // namespace psa
