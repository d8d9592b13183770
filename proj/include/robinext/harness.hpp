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

#ifndef ROBINEXT_HARNESS_HPP
#define ROBINEXT_HARNESS_HPP

// File formats, tabulations and verification suites behind the robinext CLI.

#include <iosfwd>
#include <json.hpp>
#include <string>
#include <vector>

#include "robinext/counterexamples.hpp"
#include "robinext/exterior_spectra.hpp"
#include "robinext/report.hpp"
#include "robinext/shape_calculus.hpp"

namespace robinext::harness {

/// Structured output record; keys keep insertion order.
using Record = nlohmann::ordered_json;

/// Shortest decimal that reads back to the same double (at most 17 digits).
std::string format_number(double value);

/// Grid file: `key = value` lines, `#` starts a comment. Keys: dims,
/// bessel_dims, radii, alpha, alpha_multipliers, k, z_min, z_max, z_count.
/// Integer lists accept ranges `lo..hi`; `k` takes `lo..hi` or one degree.
/// Unset keys keep their defaults, except that giving `alpha` alone drops the
/// default multipliers so the absolute list applies to every n.
GridConfig parse_grid(std::istream& in);
GridConfig parse_grid_file(const std::string& path);

/// Spectrum file: one `k i b` record per line, separated by whitespace or
/// commas; `#` starts a comment and a leading `k,i,b` header is skipped.
PerturbationSpectrum parse_spectrum(std::istream& in);
PerturbationSpectrum parse_spectrum_file(const std::string& path);

/// CSV with a header from the keys of the first object. `rows` is an array of
/// flat objects, or a single flat object for a one-row table.
std::string to_csv(const Record& rows);
/// Inverse of to_csv: numeric cells become numbers, others strings.
Record parse_csv(const std::string& text);
std::string to_json(const Record& record);

struct CurveRow {
  int n = 0;
  double R = 0.0;
  double lambda = 0.0;
  double z = 0.0;
  double alpha = 0.0;
};

/// alpha(lambda) on |lambda| log-spaced in [lambda_min, lambda_max] (both < 0),
/// one block per n, rows ascending in lambda.
std::vector<CurveRow> curve_rows(const std::vector<int>& dims, double R, double lambda_min,
                                 double lambda_max, int points);
Record curve_record(const std::vector<CurveRow>& rows);

Record dispersion_record(const SpectralSolution& sol);
Record steklov_record(const SpectralSolution& sol, int k_max);
Record variation_record(const SpectralSolution& sol, const VariationReport& rep);
Record ellipsoid_record(const EllipsoidComparison& c);
Record square_record(const SquareDiskComparison& c);
Record bessel_table(const std::vector<int>& dims, const std::vector<double>& z);
Record report_record(const VerificationReport& rep);

/// Suites: bessel, spectra, variation, quant, all. Throws DomainError for an
/// unknown name.
VerificationReport run_suite(const std::string& suite, const GridConfig& grid);

}  // namespace robinext::harness

#endif  // ROBINEXT_HARNESS_HPP
