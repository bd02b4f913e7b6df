#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "steklov/constructions.hpp"

namespace steklov {

// Raised on malformed configs; the CLI maps it to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class DomainFamily { Disk, Ellipse, PerturbedDisk, CustomFourier };

// Parsed from a flat key = value text file ('#' starts a comment).  The
// numeric fields R, a, b, eps, m accept comma-separated sweep lists, expanded
// as a nested product in declaration order R, a, b, eps, m.
struct ExperimentConfig {
  SpaceForm space = SpaceForm::Flat;
  DomainFamily family = DomainFamily::Disk;
  std::vector<double> R = {1.0};
  std::vector<double> a = {1.0};
  std::vector<double> b = {1.0};
  std::vector<double> eps = {0.0};
  std::vector<int> m = {2};
  std::vector<double> coeffs_cos;  // custom_fourier: c0, a1, a2, ...
  std::vector<double> coeffs_sin;  // custom_fourier: b1, b2, ...
  bool volume_normalize = false;
  int levels = 2;
  int eigen_count = 5;
  std::vector<std::string> certificates;
  std::string output_path;  // empty = stdout
  double tol_multiplier = 1.0;
  std::string raw;  // original text, hashed into the provenance block
};

ExperimentConfig parse_config_text(const std::string& text, const std::string& source);
ExperimentConfig parse_config_file(const std::string& path);

struct RunReport {
  std::vector<std::string> provenance;  // '# key: value' lines
  std::vector<std::string> rows;        // CSV records
  bool any_fail = false;

  std::string to_string() const;
};

// Expands the family sweep, solves every domain with refinement, evaluates
// the requested certificates and collects CSV rows.  Deterministic up to the
// timestamp provenance line.
RunReport run(const ExperimentConfig& config);

// CSV table of ball quantities over a (n, R) grid: g, g', both mu_1 formulas
// and their discrepancy, the harmonic sum and the volumes.
std::string tabulate_balls(SpaceForm space, const std::vector<int>& n_list,
                           const std::vector<double>& R_list);

// Property grid over the radial module plus geometry round trips; prints one
// PASS/FAIL line per property group.  The seed drives the randomized round
// trips; tol_multiplier < 1 tightens every tolerance.
bool check_lemmas(std::ostream& out, std::uint64_t seed, double tol_multiplier = 1.0);

std::uint64_t fnv1a_hash(const std::string& text);

}  // namespace steklov
