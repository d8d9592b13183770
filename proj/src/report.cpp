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

#include "robinext/report.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "robinext/errors.hpp"
#include "robinext/exterior_spectra.hpp"

namespace robinext {

GridConfig GridConfig::defaults() {
  GridConfig g;
  g.dims = {2, 3, 4, 5, 6, 7, 8, 9, 10};
  g.bessel_dims = {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
  g.radii = {0.2, 1.0, 5.0};
  g.alpha_absolute = {-50.0, -20.0, -10.0, -5.0, -2.0, -1.0, -0.5, -0.3};
  g.alpha_multipliers = {1.01, 1.05, 1.2, 1.5, 2.0, 3.0, 5.0, 10.0, 20.0, 50.0};
  return g;
}

void GridConfig::validate() const {
  if (dims.empty() || radii.empty()) throw DomainError("grid: dims and radii must be nonempty");
  for (int n : dims) {
    if (n < 2) throw DomainError("grid: dimensions must be >= 2");
  }
  for (int n : bessel_dims) {
    if (n < 2) throw DomainError("grid: bessel dimensions must be >= 2");
  }
  for (double R : radii) {
    if (!(R > 0.0) || !std::isfinite(R)) throw DomainError("grid: radii must be positive");
  }
  for (double a : alpha_absolute) {
    if (!(a < 0.0) || !std::isfinite(a)) throw DomainError("grid: absolute alphas must be negative");
  }
  for (double m : alpha_multipliers) {
    if (!(m > 1.0) || !std::isfinite(m)) throw DomainError("grid: alpha multipliers must exceed 1");
  }
  if (alpha_absolute.empty() && alpha_multipliers.empty()) {
    throw DomainError("grid: no alpha values");
  }
  bool has_two = false;
  for (int n : dims) has_two = has_two || n == 2;
  if (has_two && alpha_absolute.empty()) {
    throw DomainError("grid: n = 2 needs absolute alphas (alpha_star = 0)");
  }
  if (k_min < 1 || k_max < k_min) throw DomainError("grid: need 1 <= k_min <= k_max");
  if (!(z_min > 0.0) || !(z_max > z_min) || z_count < 2) {
    throw DomainError("grid: need 0 < z_min < z_max and z_count >= 2");
  }
}

std::vector<double> GridConfig::z_points() const {
  std::vector<double> z(static_cast<std::size_t>(z_count));
  for (int i = 0; i < z_count; ++i) {
    z[i] = z_min * std::pow(z_max / z_min, static_cast<double>(i) / (z_count - 1));
  }
  z.back() = z_max;
  return z;
}

std::vector<double> GridConfig::alphas(int n, double R) const {
  if (n == 2 || alpha_multipliers.empty()) return alpha_absolute;
  const double astar = alpha_star({n, R});
  std::vector<double> out;
  for (double m : alpha_multipliers) out.push_back(m * astar);
  return out;
}

std::string GridConfig::summary() const {
  std::ostringstream os;
  os << "n={";
  for (std::size_t i = 0; i < dims.size(); ++i) os << (i ? "," : "") << dims[i];
  os << "} R={";
  for (std::size_t i = 0; i < radii.size(); ++i) os << (i ? "," : "") << radii[i];
  os << "} alpha_abs={";
  for (std::size_t i = 0; i < alpha_absolute.size(); ++i) os << (i ? "," : "") << alpha_absolute[i];
  os << "} alpha_mult={";
  for (std::size_t i = 0; i < alpha_multipliers.size(); ++i) {
    os << (i ? "," : "") << alpha_multipliers[i];
  }
  os << "} k=" << k_min << ".." << k_max << " z=" << z_min << ".." << z_max << "x" << z_count;
  return os.str();
}

void VerificationReport::expect_le(const std::string& check, const std::string& parameters,
                                   double lhs, double rhs) {
  ++checks_run;
  if (!(lhs <= rhs)) violations.push_back({check, parameters, lhs, rhs, rhs - lhs});
}

void VerificationReport::expect_lt(const std::string& check, const std::string& parameters,
                                   double lhs, double rhs) {
  ++checks_run;
  if (!(lhs < rhs)) violations.push_back({check, parameters, lhs, rhs, rhs - lhs});
}

void VerificationReport::set_metric(const std::string& name, double value) {
  for (auto& [key, stored] : metrics) {
    if (key == name) {
      stored = value;
      return;
    }
  }
  metrics.emplace_back(name, value);
}

double VerificationReport::metric(const std::string& name) const {
  for (const auto& [key, value] : metrics) {
    if (key == name) return value;
  }
  throw std::out_of_range("no metric named " + name);
}

void VerificationReport::absorb(const VerificationReport& other) {
  checks_run += other.checks_run;
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  for (const auto& [key, value] : other.metrics) set_metric(other.suite + "." + key, value);
}

}  // namespace robinext
