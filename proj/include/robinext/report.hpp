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

#ifndef ROBINEXT_REPORT_HPP
#define ROBINEXT_REPORT_HPP

// Parameter grids and verification reports shared by the certification
// routines and the command-line harness.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace robinext {

struct GridConfig {
  std::vector<int> dims;
  /// Dimensions for the kernel-inequality suite.
  std::vector<int> bessel_dims;
  std::vector<double> radii;
  /// Absolute Robin parameters. Used for n = 2, and for n >= 3 when no
  /// multipliers are given.
  std::vector<double> alpha_absolute;
  /// alpha = multiplier * alpha_star for n >= 3; each multiplier > 1.
  std::vector<double> alpha_multipliers;
  int k_min = 2;
  int k_max = 25;
  double z_min = 1e-3;
  double z_max = 700.0;
  int z_count = 240;

  static GridConfig defaults();

  /// Throws DomainError on empty lists or out-of-range entries.
  void validate() const;

  std::vector<double> z_points() const;
  std::vector<double> alphas(int n, double R) const;
  std::string summary() const;
};

struct Violation {
  std::string check;
  std::string parameters;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
};

struct VerificationReport {
  std::string suite;
  std::string grid_summary;
  std::uint64_t checks_run = 0;
  std::vector<Violation> violations;
  /// Named extremal values, in insertion order.
  std::vector<std::pair<std::string, double>> metrics;

  bool passed() const { return violations.empty(); }

  /// Records one check; a failing check (lhs <= rhs violated) is kept as a
  /// violation with margin rhs - lhs.
  void expect_le(const std::string& check, const std::string& parameters, double lhs, double rhs);
  void expect_lt(const std::string& check, const std::string& parameters, double lhs, double rhs);
  void set_metric(const std::string& name, double value);
  double metric(const std::string& name) const;
  void absorb(const VerificationReport& other);
};

}  // namespace robinext

#endif  // ROBINEXT_REPORT_HPP
