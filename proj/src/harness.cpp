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

#include "robinext/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "robinext/bessel.hpp"
#include "robinext/errors.hpp"

namespace robinext::harness {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string strip_comment(const std::string& line) { return line.substr(0, line.find('#')); }

std::string where(int line) { return "line " + std::to_string(line) + ": "; }

bool parse_double(const std::string& text, double& out) {
  const std::string t = trim(text);
  if (t.empty()) return false;
  const char* begin = t.data();
  if (*begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, t.data() + t.size(), out);
  return ec == std::errc() && ptr == t.data() + t.size() && std::isfinite(out);
}

bool parse_int(const std::string& text, int& out) {
  const std::string t = trim(text);
  if (t.empty()) return false;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), out);
  return ec == std::errc() && ptr == t.data() + t.size();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) parts.push_back(trim(item));
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

std::vector<int> parse_int_list(const std::string& value, int line) {
  std::vector<int> out;
  for (const std::string& item : split(value, ',')) {
    const auto dots = item.find("..");
    int lo = 0;
    int hi = 0;
    if (dots != std::string::npos) {
      if (!parse_int(item.substr(0, dots), lo) || !parse_int(item.substr(dots + 2), hi) || hi < lo) {
        throw ParseError(where(line) + "bad integer range '" + item + "'");
      }
      for (int v = lo; v <= hi; ++v) out.push_back(v);
    } else {
      if (!parse_int(item, lo)) throw ParseError(where(line) + "bad integer '" + item + "'");
      out.push_back(lo);
    }
  }
  return out;
}

std::vector<double> parse_real_list(const std::string& value, int line) {
  std::vector<double> out;
  for (const std::string& item : split(value, ',')) {
    double v = 0.0;
    if (!parse_double(item, v)) throw ParseError(where(line) + "bad number '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::string csv_cell(const Record& v) {
  if (v.is_null()) return {};
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number_unsigned()) return std::to_string(v.get<unsigned long long>());
  if (v.is_number()) return format_number(v.get<double>());
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::vector<std::string> csv_split(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cell += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cell += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      cells.push_back(cell);
      cell.clear();
    } else {
      cell += c;
    }
  }
  cells.push_back(cell);
  return cells;
}

Record csv_value(const std::string& cell) {
  if (cell.empty()) return nullptr;
  if (cell == "true") return true;
  if (cell == "false") return false;
  long long i = 0;
  const auto [iptr, iec] = std::from_chars(cell.data(), cell.data() + cell.size(), i);
  if (iec == std::errc() && iptr == cell.data() + cell.size()) return i;
  double d = 0.0;
  const auto [dptr, dec] = std::from_chars(cell.data(), cell.data() + cell.size(), d);
  if (dec == std::errc() && dptr == cell.data() + cell.size()) return d;
  return cell;
}

Record level_rows(const std::vector<SteklovLevel>& levels) {
  Record rows = Record::array();
  for (const auto& l : levels) rows.push_back({{"k", l.k}, {"mu", l.mu}, {"multiplicity", l.multiplicity}});
  return rows;
}

std::string params(int n, double R, double alpha) {
  return "n=" + std::to_string(n) + " R=" + format_number(R) + " alpha=" + format_number(alpha);
}

// alpha < alpha*, inside the z window, log-uniform in the distance to alpha*.
double draw_alpha(std::mt19937_64& rng, int n, double R) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double lo = std::max(-50.0, -ratio_f(n, kMaxScaledFrequency) / R);
  const double hi = -ratio_f(n, n == 2 ? 1e-6 : 1e-4) / R;
  const double astar = alpha_star({n, R});
  const double near = std::log(astar - hi);
  const double far = std::log(astar - lo);
  return astar - std::exp(near + unit(rng) * (far - near));
}

PerturbationSpectrum draw_spectrum(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> pick_k(2, 30);
  std::uniform_int_distribution<int> terms(1, 6);
  std::normal_distribution<double> coef(0.0, 1.0);
  PerturbationSpectrum spec;
  const int count = terms(rng);
  for (int t = 0; t < count; ++t) {
    const int k = pick_k(rng);
    const int d = static_cast<int>(std::min<std::uint64_t>(multiplicity(n, k), 1000));
    const int i = std::uniform_int_distribution<int>(1, d)(rng);
    const bool taken = std::any_of(spec.entries.begin(), spec.entries.end(),
                                   [&](const SpectrumEntry& e) { return e.k == k && e.i == i; });
    if (!taken) spec.entries.push_back({k, i, coef(rng)});
  }
  return spec;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

VerificationReport bessel_suite(const GridConfig& grid) {
  VerificationReport rep;
  rep.suite = "bessel";
  const auto zs = grid.z_points();
  double worst_a3 = 0.0;
  double worst_recurrence = 0.0;
  for (int n : grid.bessel_dims) {
    double previous = -1.0;
    for (double z : zs) {
      const std::string at = "n=" + std::to_string(n) + " z=" + format_number(z);
      const double g = ratio_shift(n, z);
      const double f = z + g;
      const SeguraBounds b = segura_bounds(n, z);
      const double a = gap_from_shift(n, z, g);
      if (n >= 3) {
        rep.expect_lt("segura_lower", at, b.lower_shift, g);
        rep.expect_lt("segura_upper", at, g, b.upper_shift);
        rep.expect_le("shift_lower_bound", at, 0.5 * (n - 1), g);
        rep.expect_le("a_lower", at, -(n - 2.0), a);
      } else {
        rep.expect_le("segura_lower", at, b.lower_shift, g);
        rep.expect_le("segura_upper", at, g, b.upper_shift);
        rep.expect_le("a_lower", at, -0.5, a);
      }
      rep.expect_lt("a_negative", at, a, 0.0);
      rep.expect_lt("f_increasing", at, previous, f);
      previous = f;
      const double next = ratio_f(n + 2, z);
      const double closure = std::abs(next - z * z / f - n) / next;
      worst_recurrence = std::max(worst_recurrence, closure);
      rep.expect_le("recurrence_closure", at, closure, 1e-12);
      if (n == 3) {
        worst_a3 = std::max(worst_a3, std::abs(a + 1.0));
        rep.expect_le("a3_constant", at, std::abs(a + 1.0), 1e-12);
      }
    }
    const std::string at = "n=" + std::to_string(n);
    if (n >= 3) rep.expect_le("small_z_limit", at, std::abs(ratio_f(n, 1e-8) - (n - 2.0)), 1e-4);
    const double tail = ratio_f(n, 500.0) - 500.0 - 0.5 * (n - 1);
    // n = 3 is exact (f_3 = z + 1) and n = 2 approaches from below as -1/(8z).
    if (n >= 4) rep.expect_lt("large_z_positive", at, 0.0, tail);
    rep.expect_le("large_z_bound", at, std::abs(tail), 0.05);
  }
  for (unsigned twice = 0; twice <= 12; ++twice) {
    for (double z : {1e-3, 0.05, 1.0, 2.0, 2.5, 9.0, 31.0, 300.0}) {
      const IdentityResiduals r = identity_residuals(BesselOrder{twice}, z);
      const std::string at = "order=" + format_number(0.5 * twice) + " z=" + format_number(z);
      rep.expect_le("identity_recurrence", at, r.recurrence, 1e-12);
      rep.expect_le("identity_cross", at, r.cross, 1e-12);
      rep.expect_le("identity_derivative", at, r.derivative, 1e-8);
    }
  }
  rep.set_metric("max_abs_a3_plus_1", worst_a3);
  rep.set_metric("max_recurrence_residual", worst_recurrence);
  return rep;
}

VerificationReport spectra_suite(const GridConfig& grid) {
  VerificationReport rep;
  rep.suite = "spectra";

  const auto reference = solve_lambda({3, 1.0}, -3.0);
  rep.expect_le("reference_lambda", params(3, 1.0, -3.0), std::abs(reference.lambda + 4.0), 1e-12);
  const auto ref_levels = shifted_steklov(reference, 2);
  rep.expect_le("reference_mu1", params(3, 1.0, -3.0), std::abs(ref_levels[1].mu - 1.0 / 3.0), 1e-12);
  rep.expect_le("reference_mu2", params(3, 1.0, -3.0), std::abs(ref_levels[2].mu - 12.0 / 13.0), 1e-12);
  rep.expect_le("reference_u_sq", params(3, 1.0, -3.0),
                std::abs(reference.u_boundary_sq - 1.0 / std::numbers::pi), 1e-10);

  double worst_round_trip = 0.0;
  std::mt19937_64 rng(20261014);
  std::uniform_int_distribution<int> pick_n(2, 8);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int draw = 0; draw < 200; ++draw) {
    const int n = pick_n(rng);
    const double R = 0.2 + 4.8 * unit(rng);
    const double alpha = draw_alpha(rng, n, R);
    const std::string at = params(n, R, alpha);
    const auto sol = solve_lambda({n, R}, alpha);
    const double back = rel(alpha_of_lambda({n, R}, sol.lambda), alpha);
    worst_round_trip = std::max(worst_round_trip, back);
    rep.expect_le("round_trip", at, back, 1e-10);
    rep.expect_le("dispersion_residual", at, std::abs(ratio_f(n, sol.z) - sol.y), 1e-13 * sol.y);
    rep.expect_lt("K_negative", at, sol.K_const, 0.0);
  }

  double worst_norm = 0.0;
  for (int n : grid.dims) {
    for (double R : grid.radii) {
      const BallGeometry g{n, R};
      if (n >= 3) {
        rep.expect_le("alpha_star_steklov", params(n, R, 0.0),
                      std::abs(alpha_star(g) + harmonic_steklov(g, 0)[0].mu), 0.0);
      } else {
        rep.expect_le("alpha_star_planar", params(n, R, 0.0), std::abs(alpha_star(g)), 0.0);
      }
      auto alphas = grid.alphas(n, R);
      std::sort(alphas.begin(), alphas.end());
      double previous = -std::numeric_limits<double>::infinity();
      for (double alpha : alphas) {
        const std::string at = params(n, R, alpha);
        SpectralSolution sol;
        try {
          sol = solve_lambda(g, alpha);
        } catch (const NoDiscreteEigenvalue&) {
          continue;
        } catch (const RangeError&) {
          continue;
        }
        rep.expect_lt("lambda_increasing_in_alpha", at, previous, sol.lambda);
        previous = sol.lambda;
        const auto levels = shifted_steklov(sol, 21);
        rep.expect_le("mu0_zero", at, std::abs(levels[0].mu), 0.0);
        for (int k = 0; k <= 20; ++k) {
          rep.expect_lt("steklov_order", at + " k=" + std::to_string(k), levels[k].mu, levels[k + 1].mu);
        }
        const double closed = normalized_boundary_sq_closed(sol);
        const double mismatch = rel(sol.u_boundary_sq, closed);
        worst_norm = std::max(worst_norm, mismatch);
        rep.expect_le("normalization_closed_tail", at, mismatch, 1e-9);

        // A smaller ball at the same alpha has the larger eigenvalue.
        for (double shrink : {0.5, 0.9}) {
          const BallGeometry smaller{n, shrink * R};
          double small = 0.0;
          if (alpha < alpha_star(smaller)) {
            try {
              small = solve_lambda(smaller, alpha).lambda;
            } catch (const RangeError&) {
              // Planar root below the z window: the eigenvalue is above -(1e-8/r)^2.
              small = -std::pow(kMinScaledFrequency / smaller.R, 2);
            }
          }
          rep.expect_lt("radial_monotonicity", at + " r=" + format_number(shrink * R), sol.lambda, small);
        }
      }
    }
    for (double z : grid.z_points()) {
      const double q = normalized_tail_quadrature(n, z);
      const double c = normalized_tail_closed(n, z);
      worst_norm = std::max(worst_norm, rel(q, c));
      rep.expect_le("tail_identity", "n=" + std::to_string(n) + " z=" + format_number(z), rel(q, c), 1e-9);
    }
  }

  const auto rows = curve_rows({2, 3, 4, 5}, 1.0, -25.0, -1e-6, 400);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].n != rows[i - 1].n) continue;
    rep.expect_lt("curve_monotone", "n=" + std::to_string(rows[i].n) + " lambda=" + format_number(rows[i].lambda),
                  rows[i - 1].alpha, rows[i].alpha);
  }
  for (const auto& r : rows) {
    if (r.n >= 3 && r.lambda == -1e-6) {
      rep.expect_le("curve_limit", "n=" + std::to_string(r.n), std::abs(r.alpha + (r.n - 2.0)), 0.02);
    }
  }

  rep.set_metric("max_round_trip_rel", worst_round_trip);
  rep.set_metric("max_normalization_rel", worst_norm);
  return rep;
}

VerificationReport variation_suite(const GridConfig& grid) {
  VerificationReport rep = certify_negativity(grid);
  rep.suite = "variation";
  const auto reference = solve_lambda({3, 1.0}, -3.0);
  rep.expect_le("reference_L2", params(3, 1.0, -3.0), std::abs(mode_coefficient(reference, 2) + 49.0 / 6.0),
                1e-12);

  std::mt19937_64 rng(314159);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  for (int draw = 0; draw < 100; ++draw) {
    const int n = 2 + draw % 5;
    const double R = 0.3 + 3.0 * unit(rng);
    const double alpha = draw_alpha(rng, n, R);
    const auto sol = solve_lambda({n, R}, alpha);
    const auto rep_v = second_variation(sol, draw_spectrum(rng, n));
    const double u2 = sol.u_boundary_sq;
    const double rebuilt = 2.0 * u2 * sol.alpha * sol.K_const * rep_v.sum_b_sq +
                           sol.alpha * u2 * rep_v.S_ddot - 2.0 * rep_v.Q_val;
    const double residual = rel(rebuilt, rep_v.lambda_ddot);
    worst = std::max(worst, residual);
    const std::string at = params(n, R, alpha) + " draw=" + std::to_string(draw);
    rep.expect_le("decomposition", at, residual, 1e-10);
    rep.expect_lt("lambda_ddot_negative", at, rep_v.lambda_ddot, 0.0);
    rep.expect_lt("S_ddot_positive", at, 0.0, rep_v.S_ddot);
    rep.expect_lt("Q_positive", at, 0.0, rep_v.Q_val);
  }
  rep.set_metric("max_decomposition_rel", worst);
  return rep;
}

VerificationReport quant_suite(const GridConfig&) {
  VerificationReport rep;
  rep.suite = "quant";
  const auto reference = solve_lambda({3, 1.0}, -3.0);
  const double deficit = quant_bound(reference).deficit_constant;
  rep.expect_le("reference_deficit", params(3, 1.0, -3.0), std::abs(deficit - 3.0 / (4.0 * std::numbers::pi)),
                1e-10);
  std::mt19937_64 rng(271828);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double min_margin = std::numeric_limits<double>::infinity();
  for (int draw = 0; draw < 100; ++draw) {
    const int n = 2 + draw % 5;
    const double R = 0.3 + 3.0 * unit(rng);
    const double alpha = draw_alpha(rng, n, R);
    const auto sol = solve_lambda({n, R}, alpha);
    const auto check = quant_ratio_check(sol, draw_spectrum(rng, n));
    min_margin = std::min(min_margin, check.margin / std::abs(check.bound));
    rep.expect_le("quant_ratio", params(n, R, alpha) + " draw=" + std::to_string(draw), check.ratio, check.bound);
  }
  rep.set_metric("reference_deficit_constant", deficit);
  rep.set_metric("min_relative_margin", min_margin);
  return rep;
}

}  // namespace

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ptr);
}

GridConfig parse_grid(std::istream& in) {
  GridConfig grid = GridConfig::defaults();
  bool saw_alpha = false;
  bool saw_multipliers = false;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string text = trim(strip_comment(raw));
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw ParseError(where(line) + "expected key = value");
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (value.empty()) throw ParseError(where(line) + "empty value for '" + key + "'");
    if (key == "dims") {
      grid.dims = parse_int_list(value, line);
    } else if (key == "bessel_dims") {
      grid.bessel_dims = parse_int_list(value, line);
    } else if (key == "radii") {
      grid.radii = parse_real_list(value, line);
    } else if (key == "alpha") {
      grid.alpha_absolute = parse_real_list(value, line);
      saw_alpha = true;
    } else if (key == "alpha_multipliers") {
      grid.alpha_multipliers = parse_real_list(value, line);
      saw_multipliers = true;
    } else if (key == "k") {
      const auto ks = parse_int_list(value, line);
      grid.k_min = ks.front();
      grid.k_max = ks.back();
    } else if (key == "z_min" || key == "z_max") {
      double v = 0.0;
      if (!parse_double(value, v)) throw ParseError(where(line) + "bad number '" + value + "'");
      (key == "z_min" ? grid.z_min : grid.z_max) = v;
    } else if (key == "z_count") {
      if (!parse_int(value, grid.z_count)) throw ParseError(where(line) + "bad integer '" + value + "'");
    } else {
      throw ParseError(where(line) + "unknown key '" + key + "'");
    }
  }
  if (saw_alpha && !saw_multipliers) grid.alpha_multipliers.clear();
  try {
    grid.validate();
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  return grid;
}

GridConfig parse_grid_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open grid file " + path);
  return parse_grid(in);
}

PerturbationSpectrum parse_spectrum(std::istream& in) {
  PerturbationSpectrum spec;
  std::string raw;
  int line = 0;
  bool first = true;
  while (std::getline(in, raw)) {
    ++line;
    std::string text = trim(strip_comment(raw));
    if (text.empty()) continue;
    std::replace(text.begin(), text.end(), ',', ' ');
    std::istringstream fields(text);
    std::vector<std::string> parts;
    for (std::string f; fields >> f;) parts.push_back(f);
    if (first && parts.size() == 3 && parts[0] == "k" && parts[1] == "i" && parts[2] == "b") {
      first = false;
      continue;
    }
    first = false;
    if (parts.size() != 3) throw ParseError(where(line) + "expected three fields k i b");
    SpectrumEntry e;
    if (!parse_int(parts[0], e.k) || !parse_int(parts[1], e.i) || !parse_double(parts[2], e.b)) {
      throw ParseError(where(line) + "cannot parse '" + trim(raw) + "'");
    }
    spec.entries.push_back(e);
  }
  return spec;
}

PerturbationSpectrum parse_spectrum_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open spectrum file " + path);
  return parse_spectrum(in);
}

std::string to_csv(const Record& rows) {
  const Record table = rows.is_array() ? rows : Record::array({rows});
  if (table.empty()) return {};
  std::string out;
  std::vector<std::string> keys;
  for (const auto& [key, value] : table.front().items()) keys.push_back(key);
  for (std::size_t i = 0; i < keys.size(); ++i) out += (i ? "," : "") + keys[i];
  out += '\n';
  for (const auto& row : table) {
    for (std::size_t i = 0; i < keys.size(); ++i) {
      if (i) out += ',';
      out += csv_cell(row.contains(keys[i]) ? row.at(keys[i]) : Record());
    }
    out += '\n';
  }
  return out;
}

Record parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Record rows = Record::array();
  if (!std::getline(in, line)) return rows;
  const auto header = csv_split(line);
  int number = 1;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    const auto cells = csv_split(line);
    if (cells.size() != header.size()) throw ParseError(where(number) + "cell count differs from header");
    Record row = Record::object();
    for (std::size_t i = 0; i < header.size(); ++i) row[header[i]] = csv_value(cells[i]);
    rows.push_back(row);
  }
  return rows;
}

std::string to_json(const Record& record) { return record.dump(2) + "\n"; }

std::vector<CurveRow> curve_rows(const std::vector<int>& dims, double R, double lambda_min,
                                 double lambda_max, int points) {
  if (!(lambda_min < lambda_max) || !(lambda_max < 0.0) || points < 2) {
    throw DomainError("curve: need lambda_min < lambda_max < 0 and at least 2 points");
  }
  const double far = std::log(-lambda_min);
  const double near = std::log(-lambda_max);
  std::vector<CurveRow> rows;
  for (int n : dims) {
    const BallGeometry g = BallGeometry::make(n, R);
    for (int i = 0; i < points; ++i) {
      double lambda = -std::exp(far + (near - far) * i / (points - 1));
      if (i == 0) lambda = lambda_min;
      if (i == points - 1) lambda = lambda_max;
      const double z = R * std::sqrt(-lambda);
      rows.push_back({n, R, lambda, z, alpha_of_lambda(g, lambda)});
    }
  }
  return rows;
}

Record curve_record(const std::vector<CurveRow>& rows) {
  Record out = Record::array();
  for (const auto& r : rows) {
    out.push_back({{"n", r.n}, {"R", r.R}, {"lambda", r.lambda}, {"z", r.z}, {"alpha", r.alpha}});
  }
  return out;
}

Record dispersion_record(const SpectralSolution& sol) {
  return {{"n", sol.geom.n},          {"R", sol.geom.R},       {"alpha", sol.alpha},
          {"lambda", sol.lambda},     {"z", sol.z},            {"K", sol.K_const},
          {"a_n", sol.a_val},         {"u_boundary_sq", sol.u_boundary_sq},
          {"alpha_star", alpha_star(sol.geom)}};
}

Record steklov_record(const SpectralSolution& sol, int k_max) {
  Record out = dispersion_record(sol);
  Record levels = level_rows(shifted_steklov(sol, k_max));
  if (sol.geom.n >= 3) {
    const auto harmonic = harmonic_steklov(sol.geom, k_max);
    for (int k = 0; k <= k_max; ++k) levels[k]["harmonic_mu"] = harmonic[k].mu;
    out["discrete_count_with_multiplicity"] = count_discrete(sol.geom, sol.alpha);
    out["discrete_count_levels"] = count_discrete_levels(sol.geom, sol.alpha);
  }
  out["levels"] = levels;
  return out;
}

Record variation_record(const SpectralSolution& sol, const VariationReport& rep) {
  Record out = {{"n", sol.geom.n},
                {"R", sol.geom.R},
                {"alpha", sol.alpha},
                {"lambda", sol.lambda},
                {"lambda_dot", rep.lambda_dot},
                {"lambda_ddot", rep.lambda_ddot},
                {"S_ddot", rep.S_ddot},
                {"Q_val", rep.Q_val},
                {"quant_ratio", rep.quant_ratio ? Record(*rep.quant_ratio) : Record()},
                {"quant_bound", rep.quant_bound}};
  if (rep.quant_ratio) {
    out["quant_margin"] = rep.quant_bound - *rep.quant_ratio;
    out["quant_holds"] = *rep.quant_ratio <= rep.quant_bound;
  } else {
    out["quant_margin"] = nullptr;
    out["quant_holds"] = nullptr;
  }
  return out;
}

Record ellipsoid_record(const EllipsoidComparison& c) {
  return {{"n", c.spec.n},
          {"a", c.spec.a},
          {"alpha", c.alpha},
          {"h_max_ellipsoid", c.h_max_ellipsoid},
          {"h_max_ball", c.h_max_ball},
          {"equivalent_radius", c.ball_radius},
          {"lambda_ellipsoid", c.lambda_ellipsoid},
          {"lambda_ball", c.lambda_ball},
          {"delta", c.delta},
          {"hynak_gap", c.gap},
          {"hynak_holds", c.ellipsoid_exceeds_ball},
          {"hynak_threshold", c.threshold},
          {"verdict", c.verdict},
          {"remainder", "unmodeled o(alpha)"}};
}

Record square_record(const SquareDiskComparison& c) {
  return {{"alpha", c.alpha},
          {"h_max_square", c.h_max_square},
          {"h_max_disk", c.h_max_disk},
          {"lambda_square", c.lambda_square},
          {"lambda_disk", c.lambda_disk},
          {"square_smaller", c.square_smaller},
          {"remainder", "unmodeled o(alpha)"}};
}

Record bessel_table(const std::vector<int>& dims, const std::vector<double>& z) {
  Record rows = Record::array();
  for (int n : dims) {
    const BesselOrder order = BesselOrder::radial(static_cast<unsigned>(n));
    for (double t : z) {
      const SeguraBounds b = segura_bounds(n, t);
      rows.push_back({{"n", n},
                      {"z", t},
                      {"f_n", ratio_f(n, t)},
                      {"a_n", gap_a(n, t)},
                      {"scaled_K", modified_bessel_K(order, t, Scaling::scaled).mantissa},
                      {"segura_lower", b.lower},
                      {"segura_upper", b.upper}});
    }
  }
  return rows;
}

Record report_record(const VerificationReport& rep) {
  Record metrics = Record::object();
  for (const auto& [key, value] : rep.metrics) metrics[key] = value;
  Record violations = Record::array();
  for (const auto& v : rep.violations) {
    violations.push_back({{"check", v.check},
                          {"parameters", v.parameters},
                          {"lhs", v.lhs},
                          {"rhs", v.rhs},
                          {"margin", v.margin}});
  }
  return {{"suite", rep.suite},
          {"grid", rep.grid_summary},
          {"checks_run", rep.checks_run},
          {"status", rep.passed() ? "pass" : "fail"},
          {"metrics", metrics},
          {"violations", violations}};
}

VerificationReport run_suite(const std::string& suite, const GridConfig& grid) {
  grid.validate();
  VerificationReport rep;
  if (suite == "bessel") {
    rep = bessel_suite(grid);
  } else if (suite == "spectra") {
    rep = spectra_suite(grid);
  } else if (suite == "variation") {
    rep = variation_suite(grid);
  } else if (suite == "quant") {
    rep = quant_suite(grid);
  } else if (suite == "all") {
    rep.suite = "all";
    for (const char* name : {"bessel", "spectra", "variation", "quant"}) rep.absorb(run_suite(name, grid));
  } else {
    throw DomainError("unknown suite '" + suite + "'");
  }
  rep.grid_summary = grid.summary();
  return rep;
}

}  // namespace robinext::harness
