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

#ifndef ROBINEXT_SHAPE_CALCULUS_HPP
#define ROBINEXT_SHAPE_CALCULUS_HPP

// First and second shape variations of the principal exterior Robin
// eigenvalue at the ball, for Hadamard perturbations given by their
// spherical-harmonic coefficients.

#include <optional>
#include <vector>

#include "robinext/exterior_spectra.hpp"
#include "robinext/report.hpp"

namespace robinext {

/// Coefficient b of <v, nu> on the i-th degree-k Steklov eigenfunction.
struct SpectrumEntry {
  int k = 0;
  int i = 1;
  double b = 0.0;
};

struct PerturbationSpectrum {
  std::vector<SpectrumEntry> entries;

  /// All degree-0 coefficients vanish.
  bool measure_preserving() const;
  /// All degree-1 coefficients vanish.
  bool barycenter_preserving() const;
  PerturbationSpectrum scaled(double t) const;
};

inline constexpr int kDefaultSpectrumKMax = 64;

/// Throws ConstraintViolation(malformed) on negative or too-large k, an index
/// outside 1..d_k, duplicate (k, i) pairs or non-finite coefficients.
void validate_spectrum(const PerturbationSpectrum& spec, int n, int k_max = kDefaultSpectrumKMax);

struct VariationReport {
  double lambda_dot = 0.0;
  double lambda_ddot = 0.0;
  double S_ddot = 0.0;
  double Q_val = 0.0;
  std::optional<double> quant_ratio;  // lambda_ddot / S_ddot, absent when S_ddot = 0
  double quant_bound = 0.0;           // alpha u(R)^2 / (n + 1)
  double sum_b_sq = 0.0;
};

/// u(R)^2 K v_dot, where v_dot = int <v, nu> dS.
double first_variation(const SpectralSolution& sol, double v_dot);

/// Pointwise boundary integrand of the first variation, sign included:
/// -(|grad u|^2 - 2 alpha^2 u^2 + alpha u^2 (n-1) H_ext - lambda u^2).
double first_variation_integrand(double grad_u_sq, double u_sq, double H_ext, double alpha,
                                 double lambda, int n);

/// L(alpha, n, k, R) = 2 K alpha + (alpha/R^2)[k(n+k-2) - (n-1)] - 2 K^2 / mu_k, k >= 1.
double mode_coefficient(const SpectralSolution& sol, int k);

/// Both sides of R^4 mu_k L = -2 a^2 - y R mu_k [2a + k^2 + (n-2)k - (n-1)] and
/// the magnitude of the largest term, for relative comparison.
struct ModeIdentity {
  double lhs = 0.0;
  double rhs = 0.0;
  double scale = 0.0;
};
ModeIdentity mode_identity(const SpectralSolution& sol, int k);

/// |R^3 L(k=1)| over the magnitude of its two cancelling terms.
double scaled_translation_coefficient(const SpectralSolution& sol);

struct SecondVariationOptions {
  int k_max = kDefaultSpectrumKMax;
  /// Accept degree-1 (translation) coefficients; they contribute 0 to lambda_ddot.
  bool allow_translations = false;
};

/// Throws ConstraintViolation for a nonzero degree-0 coefficient
/// (measure_preserving) or degree-1 coefficient (barycenter).
VariationReport second_variation(const SpectralSolution& sol, const PerturbationSpectrum& spec,
                                 const SecondVariationOptions& options = {});

struct QuantBound {
  double ratio_bound = 0.0;       // alpha u(R)^2 / (n+1), negative
  double deficit_constant = 0.0;  // -alpha u(R)^2 / (n+1), positive
};
QuantBound quant_bound(const SpectralSolution& sol);

struct QuantCheck {
  bool holds = false;
  double ratio = 0.0;
  double bound = 0.0;
  double margin = 0.0;  // bound - ratio
};

/// lambda_ddot / S_ddot <= alpha u(R)^2 / (n+1). Throws DegenerateInput when no
/// degree >= 2 coefficient is nonzero.
QuantCheck quant_ratio_check(const SpectralSolution& sol, const PerturbationSpectrum& spec,
                             const SecondVariationOptions& options = {});

/// Sign of L over the (n, R, alpha, k) grid and over a dimensionless sweep of z
/// in [1e-8, 700] at R = 1, plus the k = 1 null mode and the mode identity.
VerificationReport certify_negativity(const GridConfig& grid);

}  // namespace robinext

#endif  // ROBINEXT_SHAPE_CALCULUS_HPP
