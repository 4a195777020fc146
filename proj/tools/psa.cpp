// psa: Poisson spectra of torus-equivariant polynomial and Laurent algebras.

#include <iostream>

#include <CLI11.hpp>

#include "psa/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Poisson centers, H-strata and Poisson primitive ideals"};
  app.require_subcommand(1);
  psa::RunConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("-i,--input", cfg.problem_path, "problem JSON file")->required();
    sub->add_flag("--json", cfg.json, "emit JSON instead of text");
  };

  auto* check = app.add_subcommand("check", "verify antisymmetry, Leibniz and Jacobi");
  common(check);
  check->add_option("--trials", cfg.trials, "random triples to test");
  check->add_option("--seed", cfg.seed, "random seed");

  common(app.add_subcommand("center", "Poisson center of the torus localization"));
  common(app.add_subcommand("strata", "H-strata with centers and primitive templates"));

  auto* primitive = app.add_subcommand("primitive", "primitive ideal template of one stratum");
  common(primitive);
  primitive->add_option("--stratum", cfg.stratum, "vanishing variables, comma separated (empty for {})")->required();
  primitive->add_option("--alpha", cfg.alpha, "nonzero parameters, comma separated");

  auto* pcore = app.add_subcommand("pcore", "Poisson core of a rational point");
  common(pcore);
  pcore->add_option("--point", cfg.point, "coordinates, comma separated")->required();

  auto* verify = app.add_subcommand("verify-ideal", "check H-stability, Poisson stability and primality");
  common(verify);
  verify->add_option("--ideal", cfg.ideal_path, "ideal or catalog JSON file")->required();

  auto* core = app.add_subcommand("core-test", "bounded-depth test for membership in a derivation core");
  common(core);
  core->add_option("--ideal", cfg.ideal_path, "ideal JSON file")->required();
  core->add_option("--element", cfg.element, "polynomial to test")->required();
  core->add_option("--depth", cfg.depth, "maximum word length");

  auto* poset = app.add_subcommand("poset", "inclusion Hasse diagram of a catalog");
  common(poset);
  poset->add_option("--catalog", cfg.catalog_path, "catalog JSON file")->required();
  poset->add_option("--dot", cfg.dot_path, "write Graphviz output to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : psa::kExitInputError;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  return psa::run(cfg, std::cout, std::cerr);
}
