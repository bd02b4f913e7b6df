#include "steklov/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include "steklov/quadrature.hpp"

namespace steklov {

namespace {

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string g12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string trim(const std::string& s) {
  auto begin = s.find_first_not_of(" \t\r");
  auto end = s.find_last_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

[[noreturn]] void fail(const std::string& source, int line, const std::string& what) {
  throw ConfigError(source + ":" + std::to_string(line) + ": " + what);
}

double parse_double(const std::string& source, int line, const std::string& key,
                    const std::string& value) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    fail(source, line, "field '" + key + "': cannot parse number '" + value + "'");
  }
}

int parse_int(const std::string& source, int line, const std::string& key,
              const std::string& value) {
  const double v = parse_double(source, line, key, value);
  if (v != std::floor(v)) fail(source, line, "field '" + key + "': expected an integer");
  return static_cast<int>(v);
}

bool parse_bool(const std::string& source, int line, const std::string& key,
                const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  fail(source, line, "field '" + key + "': expected true/false");
}

const std::vector<std::string> kCertNames = {"boundary_g2",       "F_rearrangement",
                                             "theorem_hyperbolic", "theorem_euclidean",
                                             "hersch_payne",       "sum1_chain"};

std::string timestamp_line(double wall_seconds) {
  const std::time_t now = std::time(nullptr);
  char buf[64];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return std::string("# timestamp: ") + buf + " wall_s=" + g12(wall_seconds);
}

struct DomainSpecimen {
  StarDomain domain;
  std::string descriptor;
};

std::vector<DomainSpecimen> expand_sweep(const ExperimentConfig& cfg) {
  std::vector<DomainSpecimen> out;
  const Point center = pole(cfg.space);
  auto push = [&](FourierSeries rho, std::string desc, double R_ref) {
    StarDomain dom(cfg.space, center, std::move(rho));
    if (cfg.volume_normalize) {
      normalize_to_volume(dom, ball_volume(cfg.space, 2, R_ref));
      desc += ";norm";
    }
    out.push_back({std::move(dom), "(" + desc + ")"});
  };
  switch (cfg.family) {
    case DomainFamily::Disk:
      for (double R : cfg.R) push(disk_series(R), "R=" + g12(R), R);
      for (auto& s : out) s.descriptor = "disk" + s.descriptor;
      break;
    case DomainFamily::Ellipse:
      for (double R : cfg.R)
        for (double a : cfg.a)
          for (double b : cfg.b)
            push(ellipse_series(a, b, 32), "a=" + g12(a) + ";b=" + g12(b), R);
      for (auto& s : out) s.descriptor = "ellipse" + s.descriptor;
      break;
    case DomainFamily::PerturbedDisk:
      for (double R : cfg.R)
        for (double eps : cfg.eps)
          for (int m : cfg.m)
            push(perturbed_disk_series(R, eps, m),
                 "R0=" + g12(R) + ";eps=" + g12(eps) + ";m=" + std::to_string(m), R);
      for (auto& s : out) s.descriptor = "perturbed_disk" + s.descriptor;
      break;
    case DomainFamily::CustomFourier: {
      FourierSeries rho;
      if (cfg.coeffs_cos.empty()) throw ConfigError("custom_fourier: coeffs_cos required");
      rho.c0 = cfg.coeffs_cos.front();
      rho.a.assign(cfg.coeffs_cos.begin() + 1, cfg.coeffs_cos.end());
      rho.b = cfg.coeffs_sin;
      const int deg = rho.degree();
      push(std::move(rho), "deg=" + std::to_string(deg), cfg.R.front());
      out.back().descriptor = "custom_fourier" + out.back().descriptor;
      break;
    }
  }
  return out;
}

CertificateReport dispatch_certificate(const std::string& name, const CertificateContext& ctx) {
  if (name == "boundary_g2") return check_boundary_g2(ctx);
  if (name == "F_rearrangement") return check_F_rearrangement(ctx);
  if (name == "theorem_hyperbolic") return check_theorem_hyperbolic(ctx);
  if (name == "theorem_euclidean") return check_theorem_euclidean(ctx);
  if (name == "hersch_payne") return check_hersch_payne(ctx);
  if (name == "sum1_chain") return check_sum1_chain(ctx);
  throw ConfigError("unknown certificate '" + name + "'");
}

}  // namespace

std::uint64_t fnv1a_hash(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

ExperimentConfig parse_config_text(const std::string& text, const std::string& source) {
  ExperimentConfig cfg;
  cfg.raw = text;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool saw_space = false, saw_family = false;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(source, lineno, "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (value.empty()) fail(source, lineno, "field '" + key + "': empty value");

    if (key == "space") {
      if (value == "flat") cfg.space = SpaceForm::Flat;
      else if (value == "hyperbolic") cfg.space = SpaceForm::Hyperbolic;
      else fail(source, lineno, "space must be flat or hyperbolic");
      saw_space = true;
    } else if (key == "family") {
      if (value == "disk") cfg.family = DomainFamily::Disk;
      else if (value == "ellipse") cfg.family = DomainFamily::Ellipse;
      else if (value == "perturbed_disk") cfg.family = DomainFamily::PerturbedDisk;
      else if (value == "custom_fourier") cfg.family = DomainFamily::CustomFourier;
      else fail(source, lineno, "unknown family '" + value + "'");
      saw_family = true;
    } else if (key == "R" || key == "a" || key == "b" || key == "eps") {
      std::vector<double> vals;
      for (const auto& item : split_list(value))
        vals.push_back(parse_double(source, lineno, key, item));
      if (vals.empty()) fail(source, lineno, "field '" + key + "': empty list");
      if (key == "R") cfg.R = vals;
      else if (key == "a") cfg.a = vals;
      else if (key == "b") cfg.b = vals;
      else cfg.eps = vals;
    } else if (key == "m") {
      cfg.m.clear();
      for (const auto& item : split_list(value))
        cfg.m.push_back(parse_int(source, lineno, key, item));
      if (cfg.m.empty()) fail(source, lineno, "field 'm': empty list");
    } else if (key == "coeffs_cos" || key == "coeffs_sin") {
      std::vector<double> vals;
      for (const auto& item : split_list(value))
        vals.push_back(parse_double(source, lineno, key, item));
      (key == "coeffs_cos" ? cfg.coeffs_cos : cfg.coeffs_sin) = vals;
    } else if (key == "volume_normalize") {
      cfg.volume_normalize = parse_bool(source, lineno, key, value);
    } else if (key == "levels") {
      cfg.levels = parse_int(source, lineno, key, value);
    } else if (key == "eigen_count") {
      cfg.eigen_count = parse_int(source, lineno, key, value);
    } else if (key == "certificates") {
      cfg.certificates = split_list(value);
    } else if (key == "out") {
      cfg.output_path = value;
    } else {
      fail(source, lineno, "unknown field '" + key + "'");
    }
  }
  if (!saw_space) throw ConfigError(source + ": missing required field 'space'");
  if (!saw_family) throw ConfigError(source + ": missing required field 'family'");
  if (cfg.levels < 2)
    throw ConfigError(source + ": levels must be >= 2 (error estimates need two levels)");
  if (cfg.eigen_count < 1) throw ConfigError(source + ": eigen_count must be >= 1");
  for (double R : cfg.R)
    if (!(R > 0.0)) throw ConfigError(source + ": R must be > 0");
  if (cfg.family == DomainFamily::PerturbedDisk) {
    for (double e : cfg.eps)
      if (e < 0.0 || e > 0.5)
        throw ConfigError(source + ": perturbed_disk requires eps in [0, 0.5]");
    for (int m : cfg.m)
      if (m < 1) throw ConfigError(source + ": perturbed_disk requires m >= 1");
  }
  for (const auto& name : cfg.certificates) {
    if (std::find(kCertNames.begin(), kCertNames.end(), name) == kCertNames.end())
      throw ConfigError(source + ": unknown certificate '" + name + "'");
    if (name == "theorem_hyperbolic" && cfg.space != SpaceForm::Hyperbolic)
      throw ConfigError(source + ": theorem_hyperbolic needs space = hyperbolic");
    if ((name == "theorem_euclidean" || name == "hersch_payne") && cfg.space != SpaceForm::Flat)
      throw ConfigError(source + ": " + name + " needs space = flat");
  }
  return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path + ": cannot open config file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str(), path);
}

std::string RunReport::to_string() const {
  std::string out;
  for (const auto& line : provenance) out += line + "\n";
  for (const auto& row : rows) out += row + "\n";
  return out;
}

RunReport run(const ExperimentConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  RunReport rep;
  char hash[24];
  std::snprintf(hash, sizeof(hash), "%016llx",
                static_cast<unsigned long long>(fnv1a_hash(cfg.raw)));
  rep.provenance.push_back("# steklov-run v1");
  rep.provenance.push_back(std::string("# config_hash: ") + hash);
  rep.provenance.push_back("# space: " + to_string(cfg.space));
  rep.provenance.push_back("# levels: " + std::to_string(cfg.levels) +
                           " eigen_count: " + std::to_string(cfg.eigen_count));
  rep.rows.push_back("record,name,domain,lhs,rhs,gap,tol,pass");

  for (const DomainSpecimen& spec : expand_sweep(cfg)) {
    CertificateContext ctx =
        prepare_certificates(spec.domain, cfg.eigen_count, cfg.levels, cfg.tol_multiplier);
    ctx.descriptor = spec.descriptor;
    rep.provenance.push_back("# mesh: " + spec.descriptor +
                             " vertices=" + std::to_string(ctx.fem.mesh.vertex_count()) +
                             " h=" + g12(ctx.fem.mesh.h) +
                             " base_level=" + std::to_string(ctx.fem.base_level) +
                             (ctx.fem.monotone ? "" : " warn=nonmonotone") +
                             (ctx.com.ambiguous ? " warn=com_ambiguous" : ""));
    const int shown = std::min<int>(cfg.eigen_count,
                                    static_cast<int>(ctx.fem.spectrum.eigenvalues.size()));
    for (int i = 0; i < shown; ++i) {
      rep.rows.push_back("spectrum,mu_" + std::to_string(i) + "," + spec.descriptor + "," +
                         g17(ctx.fem.spectrum.eigenvalues[i]) + "," +
                         g17(ctx.fem.error_estimate[i]) + ",,,");
    }
    for (const auto& name : cfg.certificates) {
      const CertificateReport r = dispatch_certificate(name, ctx);
      rep.rows.push_back("certificate," + r.csv_row());
      if (!r.pass) rep.any_fail = true;
    }
  }

  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  rep.provenance.push_back(timestamp_line(wall));
  return rep;
}

std::string tabulate_balls(SpaceForm space, const std::vector<int>& n_list,
                           const std::vector<double>& R_list) {
  std::string out =
      "space,n,R,g,g_prime,mu1,mu1_rayleigh,discrepancy,harmonic_sum,ball_volume,sphere_area\n";
  for (int n : n_list) {
    const RadialProfile profile(space, n);
    for (double R : R_list) {
      const double mu = mu1_ball(space, n, R);
      const double ray = mu1_ball_rayleigh(space, n, R);
      out += to_string(space) + "," + std::to_string(n) + "," + g17(R) + "," +
             g17(profile.g(R)) + "," + g17(profile.g_prime(R)) + "," + g17(mu) + "," + g17(ray) +
             "," + g17(std::abs(mu - ray)) + "," + g17(harmonic_sum_ball(space, n, R)) + "," +
             g17(ball_volume(space, n, R)) + "," + g17(sphere_area(space, n, R)) + "\n";
    }
  }
  return out;
}

bool check_lemmas(std::ostream& out, std::uint64_t seed, double tol_multiplier) {
  bool all_ok = true;
  auto report = [&](const std::string& name, bool ok, double worst) {
    out << (ok ? "[PASS] " : "[FAIL] ") << name << " (worst = " << worst << ")\n";
    all_ok = all_ok && ok;
  };

  {  // property-g grid: positivity, g' sin_k <= g, F non-increasing
    bool ok = true;
    double worst = 0.0;
    for (SpaceForm space : {SpaceForm::Flat, SpaceForm::Hyperbolic}) {
      for (int n = 2; n <= 6; ++n) {
        const RadialProfile p(space, n);
        double prevF = 0.0;
        for (int i = 0; i < 400; ++i) {
          const double r = 1e-4 * std::pow(10.0 / 1e-4, i / 399.0);
          const double g = p.g(r), gp = p.g_prime(r), F = p.F(r);
          ok = ok && g > 0.0 && gp > 0.0;
          const double slack1 = gp * sin_k(space, r) / g - 1.0;
          worst = std::max(worst, slack1);
          ok = ok && slack1 <= 1e-12 * tol_multiplier;
          if (i > 0) {
            const double slack2 = F / prevF - 1.0;
            worst = std::max(worst, slack2);
            ok = ok && slack2 <= 1e-12 * tol_multiplier;
          }
          prevF = F;
        }
      }
    }
    report("property_g_grid", ok, worst);
  }

  {  // reduction recurrence vs quadrature
    bool ok = true;
    double worst = 0.0;
    for (int m = 1; m <= 5; ++m) {
      for (int i = 0; i < 40; ++i) {
        const double r = 0.02 * std::pow(10.0 / 0.02, i / 39.0);
        const double rec = sin_k_power_integral(SpaceForm::Hyperbolic, m, r);
        const double quad =
            integrate([m](double t) { return std::pow(std::sinh(t), m); }, 0.0, r);
        const double rel = std::abs(rec - quad) / rec;
        worst = std::max(worst, rel);
        ok = ok && rel < 1e-12 * tol_multiplier;
      }
    }
    report("sinh_recurrence_vs_quadrature", ok, worst);
  }

  {  // mu1 boundary-condition form vs Rayleigh-integral form
    bool ok = true;
    double worst = 0.0;
    for (SpaceForm space : {SpaceForm::Flat, SpaceForm::Hyperbolic}) {
      for (int n = 2; n <= 6; ++n) {
        for (double R : {0.5, 1.0, 2.0, 4.0}) {
          const double mu = mu1_ball(space, n, R);
          const double rel = std::abs(mu - mu1_ball_rayleigh(space, n, R)) / mu;
          worst = std::max(worst, rel);
          ok = ok && rel < 1e-10 * tol_multiplier;
        }
      }
    }
    report("mu1_consistency", ok, worst);
  }

  {  // exp/log round trip on random hyperbolic pairs
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> radius(0.0, 3.0), angle(0.0, 2.0 * M_PI);
    const Point o = pole(SpaceForm::Hyperbolic);
    auto sample = [&] {
      const double r = radius(rng), phi = angle(rng);
      return exp_map(o, {o, r * std::cos(phi), r * std::sin(phi)});
    };
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const Point p = sample(), q = sample();
      worst = std::max(worst, distance(exp_map(p, log_map(p, q)), q));
    }
    report("exp_log_round_trip", worst < 1e-11 * tol_multiplier, worst);
  }

  {  // radius_from_volume inverts ball_volume
    bool ok = true;
    double worst = 0.0;
    for (SpaceForm space : {SpaceForm::Flat, SpaceForm::Hyperbolic}) {
      for (int n = 2; n <= 6; ++n) {
        for (double R : {0.3, 1.0, 2.0, 5.0}) {
          const double rel =
              std::abs(radius_from_volume(space, n, ball_volume(space, n, R)) - R) / R;
          worst = std::max(worst, rel);
          ok = ok && rel < 1e-10 * tol_multiplier;
        }
      }
    }
    report("volume_radius_round_trip", ok, worst);
  }

  return all_ok;
}

}  // namespace steklov
