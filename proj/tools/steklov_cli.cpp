// Command-line driver: batch certificate runs, ball tables and the
// radial/geometry property grid.  Exit codes: 0 all pass, 1 a certificate or
// property failed, 2 configuration/usage error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "steklov/harness.hpp"

using namespace steklov;

namespace {

int write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot write to '" << path << "'\n";
    return 2;
  }
  out << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steklov eigenvalue certificates on flat and hyperbolic star domains"};
  app.require_subcommand(1);

  std::string config_path, out_override;
  int levels_override = 0;
  bool strict = false;
  std::uint64_t seed = 12345;

  CLI::App* cmd_run = app.add_subcommand("run", "run an experiment config");
  cmd_run->add_option("config", config_path, "key = value config file")->required();
  cmd_run->add_option("--levels", levels_override, "override refinement level count");
  cmd_run->add_option("--out", out_override, "override output path");
  cmd_run->add_flag("--strict", strict, "halve every certificate tolerance");

  std::string space_name = "flat";
  std::vector<int> n_list = {2, 3, 4, 5};
  std::vector<double> R_list = {0.5, 1.0, 2.0, 4.0};
  std::string table_out;
  CLI::App* cmd_tab = app.add_subcommand("tabulate-balls", "closed-form ball quantities");
  cmd_tab->add_option("--space", space_name, "flat or hyperbolic")->required();
  cmd_tab->add_option("--n", n_list, "dimension list");
  cmd_tab->add_option("--R", R_list, "radius list");
  cmd_tab->add_option("--out", table_out, "output path (default stdout)");

  CLI::App* cmd_lemmas = app.add_subcommand("check-lemmas", "radial + geometry property grid");
  cmd_lemmas->add_option("--seed", seed, "seed for the randomized round trips");
  cmd_lemmas->add_flag("--strict", strict, "halve every tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_run->parsed()) {
      ExperimentConfig cfg = parse_config_file(config_path);
      if (levels_override > 0) cfg.levels = levels_override;
      if (!out_override.empty()) cfg.output_path = out_override;
      if (strict) cfg.tol_multiplier = 0.5;
      if (cfg.levels < 2) {
        std::cerr << "error: levels must be >= 2\n";
        return 2;
      }
      const RunReport report = run(cfg);
      const int rc = write_output(report.to_string(), cfg.output_path);
      if (rc != 0) return rc;
      return report.any_fail ? 1 : 0;
    }
    if (cmd_tab->parsed()) {
      SpaceForm space;
      if (space_name == "flat") space = SpaceForm::Flat;
      else if (space_name == "hyperbolic") space = SpaceForm::Hyperbolic;
      else {
        std::cerr << "error: --space must be flat or hyperbolic\n";
        return 2;
      }
      for (int n : n_list)
        if (n < 2) {
          std::cerr << "error: dimensions must be >= 2\n";
          return 2;
        }
      for (double R : R_list)
        if (!(R > 0.0)) {
          std::cerr << "error: radii must be > 0\n";
          return 2;
        }
      return write_output(tabulate_balls(space, n_list, R_list), table_out);
    }
    // check-lemmas
    return check_lemmas(std::cout, seed, strict ? 0.5 : 1.0) ? 0 : 1;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
