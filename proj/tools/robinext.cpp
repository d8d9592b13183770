// Copyright 2026 The robinext Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// robinext command-line interface.
//
// Exit codes: 0 success, 1 input error, 2 solver failure or no discrete
// eigenvalue, 3 verification violations.

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "robinext/errors.hpp"
#include "robinext/harness.hpp"

namespace {

using robinext::harness::Record;

constexpr int kInputError = 1;
constexpr int kSolverError = 2;
constexpr int kViolations = 3;

struct Output {
  std::string path;
  std::string format = "json";
};

void emit(const Output& out, const Record& record) {
  const std::string text =
      out.format == "csv" ? robinext::harness::to_csv(record) : robinext::harness::to_json(record);
  if (out.path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out.path, std::ios::binary);
  if (!file) throw robinext::ParseError("cannot write " + out.path);
  file << text;
}

void add_output(CLI::App* cmd, Output& out, const std::string& default_format) {
  out.format = default_format;
  cmd->add_option("--out", out.path, "Write to this file instead of stdout");
  cmd->add_option("--format", out.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
}

struct Geometry {
  int n = 3;
  double R = 1.0;
};

void add_geometry(CLI::App* cmd, Geometry& g) {
  cmd->add_option("--n", g.n, "Dimension")->capture_default_str();
  cmd->add_option("--radius", g.R, "Ball radius")->capture_default_str();
}

// Nonzero degree-1 coefficients without any degree >= 2 content are a pure
// translation; they are accepted with a warning.
bool only_translations(const robinext::PerturbationSpectrum& spec) {
  bool any = false;
  for (const auto& e : spec.entries) {
    if (e.b == 0.0) continue;
    if (e.k != 1) return false;
    any = true;
  }
  return any;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Principal Robin eigenvalue of the exterior of a ball: dispersion, Steklov spectra, "
               "shape variations and verification suites"};
  app.require_subcommand(1);

  // dispersion
  Geometry disp_geom;
  std::optional<double> disp_alpha;
  std::optional<double> disp_lambda;
  Output disp_out;
  auto* disp = app.add_subcommand("dispersion", "Solve the dispersion relation at one point");
  add_geometry(disp, disp_geom);
  auto* alpha_opt = disp->add_option("--alpha", disp_alpha, "Robin parameter");
  auto* lambda_opt = disp->add_option("--lambda", disp_lambda, "Eigenvalue (negative)");
  alpha_opt->excludes(lambda_opt);
  add_output(disp, disp_out, "json");

  // curve
  std::vector<int> curve_dims{2, 3, 4, 5};
  double curve_R = 1.0;
  double curve_min = -25.0;
  double curve_max = -1e-6;
  int curve_points = 400;
  Output curve_out;
  auto* curve = app.add_subcommand("curve", "Tabulate alpha(lambda), one block per dimension");
  curve->add_option("--n", curve_dims, "Dimensions, comma separated")->delimiter(',');
  curve->add_option("--radius", curve_R, "Ball radius");
  curve->add_option("--lambda-min", curve_min, "Most negative lambda");
  curve->add_option("--lambda-max", curve_max, "Least negative lambda");
  curve->add_option("--points", curve_points, "Points per dimension");
  add_output(curve, curve_out, "csv");

  // steklov
  Geometry stek_geom;
  double stek_alpha = -3.0;
  int stek_kmax = 10;
  Output stek_out;
  auto* stek = app.add_subcommand("steklov", "Shifted and harmonic Steklov eigenvalues");
  add_geometry(stek, stek_geom);
  stek->add_option("--alpha", stek_alpha, "Robin parameter")->required();
  stek->add_option("--kmax", stek_kmax, "Highest degree");
  add_output(stek, stek_out, "json");

  // second-variation
  Geometry sv_geom;
  double sv_alpha = -3.0;
  std::string sv_spectrum;
  int sv_kmax = robinext::kDefaultSpectrumKMax;
  Output sv_out;
  auto* sv = app.add_subcommand("second-variation", "Second shape variation for a perturbation spectrum");
  add_geometry(sv, sv_geom);
  sv->add_option("--alpha", sv_alpha, "Robin parameter")->required();
  sv->add_option("--spectrum", sv_spectrum, "Spectrum file (k i b per line)")->required();
  sv->add_option("--kmax", sv_kmax, "Largest accepted degree");
  add_output(sv, sv_out, "json");

  // quant-bound
  Geometry qb_geom;
  double qb_alpha = -3.0;
  std::string qb_spectrum;
  Output qb_out;
  auto* qb = app.add_subcommand("quant-bound", "Constant of the quantitative inequality");
  add_geometry(qb, qb_geom);
  qb->add_option("--alpha", qb_alpha, "Robin parameter")->required();
  qb->add_option("--spectrum", qb_spectrum, "Optional spectrum file for the ratio check");
  add_output(qb, qb_out, "json");

  // counterexample
  Output ce_out;
  auto* ce = app.add_subcommand("counterexample", "Strong-coupling comparisons");
  ce->require_subcommand(1);
  int ell_n = 3;
  double ell_a = 0.1;
  double ell_alpha = -50.0;
  auto* ell = ce->add_subcommand("ellipsoid", "Ellipsoid E(a) against the ball of equal volume");
  ell->add_option("--n", ell_n, "Dimension (>= 3)");
  ell->add_option("--a", ell_a, "Aspect parameter in (0, 1)");
  ell->add_option("--alpha", ell_alpha, "Robin parameter");
  add_output(ell, ce_out, "json");
  double sq_alpha = -10.0;
  Output sq_out;
  auto* sq = ce->add_subcommand("square", "Square against the unit disk");
  sq->add_option("--alpha", sq_alpha, "Robin parameter");
  add_output(sq, sq_out, "json");

  // verify
  std::string suite = "all";
  std::string grid_path;
  Output ver_out;
  auto* ver = app.add_subcommand("verify", "Run verification suites");
  ver->add_option("--suite", suite, "Suite")->check(CLI::IsMember({"bessel", "spectra", "variation", "quant", "all"}));
  ver->add_option("--grid", grid_path, "Grid file (key = value)");
  add_output(ver, ver_out, "json");

  // bessel-table
  std::vector<int> table_dims{2, 3, 4, 5};
  double table_zmin = 1e-3;
  double table_zmax = 700.0;
  int table_points = 50;
  Output table_out;
  auto* table = app.add_subcommand("bessel-table", "Tabulate f_n, a_n and the ratio bounds");
  table->add_option("--n", table_dims, "Dimensions, comma separated")->delimiter(',');
  table->add_option("--z-min", table_zmin, "Smallest z");
  table->add_option("--z-max", table_zmax, "Largest z");
  table->add_option("--points", table_points, "Log-spaced points");
  add_output(table, table_out, "csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  namespace h = robinext::harness;
  try {
    if (*disp) {
      const auto g = robinext::BallGeometry::make(disp_geom.n, disp_geom.R);
      if (disp_alpha.has_value() == disp_lambda.has_value()) {
        std::cerr << "error: give exactly one of --alpha or --lambda\n";
        return kInputError;
      }
      double alpha = disp_alpha ? *disp_alpha : robinext::alpha_of_lambda(g, *disp_lambda);
      emit(disp_out, h::dispersion_record(robinext::solve_lambda(g, alpha)));
    } else if (*curve) {
      emit(curve_out, h::curve_record(h::curve_rows(curve_dims, curve_R, curve_min, curve_max, curve_points)));
    } else if (*stek) {
      const auto g = robinext::BallGeometry::make(stek_geom.n, stek_geom.R);
      emit(stek_out, h::steklov_record(robinext::solve_lambda(g, stek_alpha), stek_kmax));
    } else if (*sv) {
      const auto g = robinext::BallGeometry::make(sv_geom.n, sv_geom.R);
      const auto spec = h::parse_spectrum_file(sv_spectrum);
      robinext::SecondVariationOptions options;
      options.k_max = sv_kmax;
      if (only_translations(spec)) {
        options.allow_translations = true;
        std::cerr << "warning: null mode: degree-1 coefficients are translations and leave the "
                     "eigenvalue unchanged (lambda_ddot = 0)\n";
      }
      const auto sol = robinext::solve_lambda(g, sv_alpha);
      emit(sv_out, h::variation_record(sol, robinext::second_variation(sol, spec, options)));
    } else if (*qb) {
      const auto g = robinext::BallGeometry::make(qb_geom.n, qb_geom.R);
      const auto sol = robinext::solve_lambda(g, qb_alpha);
      const auto bound = robinext::quant_bound(sol);
      Record rec = {{"n", g.n},
                    {"R", g.R},
                    {"alpha", sol.alpha},
                    {"u_boundary_sq", sol.u_boundary_sq},
                    {"ratio_bound", bound.ratio_bound},
                    {"deficit_constant", bound.deficit_constant}};
      if (!qb_spectrum.empty()) {
        const auto check = robinext::quant_ratio_check(sol, h::parse_spectrum_file(qb_spectrum));
        rec["ratio"] = check.ratio;
        rec["margin"] = check.margin;
        rec["holds"] = check.holds;
      }
      emit(qb_out, rec);
    } else if (*ce) {
      if (*ell) {
        const auto spec = robinext::EllipsoidSpec::make(ell_n, ell_a);
        emit(ce_out, h::ellipsoid_record(robinext::compare_ellipsoid_ball(spec, ell_alpha)));
      } else {
        emit(sq_out, h::square_record(robinext::square_vs_disk(sq_alpha)));
      }
    } else if (*ver) {
      const auto grid = grid_path.empty() ? robinext::GridConfig::defaults() : h::parse_grid_file(grid_path);
      const auto rep = h::run_suite(suite, grid);
      Record rec = h::report_record(rep);
      if (ver_out.format == "csv") {
        Record rows = Record::array();
        for (const auto& v : rec["violations"]) rows.push_back(v);
        if (rows.empty()) rows.push_back({{"check", ""}, {"parameters", ""}, {"lhs", nullptr}, {"rhs", nullptr}, {"margin", nullptr}});
        emit(ver_out, rows);
      } else {
        emit(ver_out, rec);
      }
      std::cerr << rep.suite << ": " << rep.checks_run << " checks, " << rep.violations.size()
                << " violations\n";
      return rep.passed() ? 0 : kViolations;
    } else if (*table) {
      std::vector<double> z;
      if (!(table_zmin > 0.0) || !(table_zmax > table_zmin) || table_points < 2) {
        std::cerr << "error: need 0 < z-min < z-max and at least 2 points\n";
        return kInputError;
      }
      for (int i = 0; i < table_points; ++i) {
        z.push_back(table_zmin * std::pow(table_zmax / table_zmin, static_cast<double>(i) / (table_points - 1)));
      }
      z.back() = table_zmax;
      emit(table_out, h::bessel_table(table_dims, z));
    }
  } catch (const robinext::NoDiscreteEigenvalue& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSolverError;
  } catch (const robinext::SolverFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSolverError;
  } catch (const robinext::RangeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSolverError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return 0;
}
