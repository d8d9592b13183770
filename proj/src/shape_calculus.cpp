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

#include "robinext/shape_calculus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <string>

#include "robinext/errors.hpp"

namespace robinext {
namespace {

// k(n+k-2) - (n-1): the degree-k eigenvalue of the sphere Laplacian minus n-1.
double surface_mode(int n, int k) { return static_cast<double>(k) * (n + k - 2) - (n - 1); }

double coefficient_from(const SpectralSolution& sol, int k, double mu) {
  const double R = sol.geom.R;
  const double K = sol.K_const;
  return 2.0 * K * sol.alpha + (sol.alpha / (R * R)) * surface_mode(sol.geom.n, k) -
         2.0 * K * K / mu;
}

double steklov_mu(const SpectralSolution& sol, int k) { return shifted_steklov(sol, k).back().mu; }

ModeIdentity identity_from(const SpectralSolution& sol, int k, double mu) {
  const double R = sol.geom.R;
  const double a = sol.a_val;
  const double yrm = sol.y * R * mu;
  const double bracket = 2.0 * a + static_cast<double>(k) * k + (sol.geom.n - 2.0) * k - (sol.geom.n - 1);
  ModeIdentity id;
  id.lhs = R * R * R * R * mu * coefficient_from(sol, k, mu);
  id.rhs = -2.0 * a * a - yrm * bracket;
  const double spread =
      std::abs(yrm) * (2.0 * std::abs(a) + static_cast<double>(k) * k + (sol.geom.n - 2.0) * k + (sol.geom.n - 1));
  id.scale = std::max({std::abs(id.lhs), 2.0 * a * a, spread});
  return id;
}

double translation_from(const SpectralSolution& sol, double mu1) {
  const double R = sol.geom.R;
  const double a = sol.a_val;
  const double L1 = coefficient_from(sol, 1, mu1);
  const double scale = std::abs(2.0 * a * sol.y) + std::abs(2.0 * a * a / (R * mu1));
  return std::abs(R * R * R * L1) / scale;
}

std::string describe(int n, double R, double alpha, double z) {
  std::ostringstream os;
  os.precision(12);
  os << "n=" << n << " R=" << R << " alpha=" << alpha << " z=" << z;
  return os.str();
}

}  // namespace

bool PerturbationSpectrum::measure_preserving() const {
  return std::none_of(entries.begin(), entries.end(),
                      [](const SpectrumEntry& e) { return e.k == 0 && e.b != 0.0; });
}

bool PerturbationSpectrum::barycenter_preserving() const {
  return std::none_of(entries.begin(), entries.end(),
                      [](const SpectrumEntry& e) { return e.k == 1 && e.b != 0.0; });
}

PerturbationSpectrum PerturbationSpectrum::scaled(double t) const {
  PerturbationSpectrum out = *this;
  for (auto& e : out.entries) e.b *= t;
  return out;
}

void validate_spectrum(const PerturbationSpectrum& spec, int n, int k_max) {
  using Kind = ConstraintViolation::Kind;
  std::map<std::pair<int, int>, bool> seen;
  for (const auto& e : spec.entries) {
    std::ostringstream os;
    os << "spectrum entry (k=" << e.k << ", i=" << e.i << "): ";
    if (e.k < 0) throw ConstraintViolation(Kind::malformed, os.str() + "degree must be >= 0");
    if (e.k > k_max) {
      os << "degree exceeds k_max = " << k_max;
      throw ConstraintViolation(Kind::malformed, os.str());
    }
    const std::uint64_t d = multiplicity(n, e.k);
    if (e.i < 1 || static_cast<std::uint64_t>(e.i) > d) {
      os << "index must be in 1.." << d;
      throw ConstraintViolation(Kind::malformed, os.str());
    }
    if (!std::isfinite(e.b)) throw ConstraintViolation(Kind::malformed, os.str() + "coefficient is not finite");
    if (!seen.emplace(std::make_pair(e.k, e.i), true).second) {
      throw ConstraintViolation(Kind::malformed, os.str() + "duplicate");
    }
  }
}

double first_variation(const SpectralSolution& sol, double v_dot) {
  return sol.u_boundary_sq * sol.K_const * v_dot;
}

double first_variation_integrand(double grad_u_sq, double u_sq, double H_ext, double alpha,
                                 double lambda, int n) {
  return -(grad_u_sq - 2.0 * alpha * alpha * u_sq + alpha * u_sq * (n - 1) * H_ext - lambda * u_sq);
}

double mode_coefficient(const SpectralSolution& sol, int k) {
  if (k < 1) throw DomainError("mode_coefficient: k must be >= 1 (mu_0 = 0)");
  return coefficient_from(sol, k, steklov_mu(sol, k));
}

ModeIdentity mode_identity(const SpectralSolution& sol, int k) {
  if (k < 1) throw DomainError("mode_identity: k must be >= 1");
  return identity_from(sol, k, steklov_mu(sol, k));
}

double scaled_translation_coefficient(const SpectralSolution& sol) {
  return translation_from(sol, steklov_mu(sol, 1));
}

VariationReport second_variation(const SpectralSolution& sol, const PerturbationSpectrum& spec,
                                 const SecondVariationOptions& options) {
  using Kind = ConstraintViolation::Kind;
  const int n = sol.geom.n;
  validate_spectrum(spec, n, options.k_max);
  for (const auto& e : spec.entries) {
    if (e.k == 0 && e.b != 0.0) {
      std::ostringstream os;
      os << "measure-preserving condition violated: b_{0," << e.i << "} = " << e.b << " must be 0";
      throw ConstraintViolation(Kind::measure_preserving, os.str());
    }
    if (e.k == 1 && e.b != 0.0 && !options.allow_translations) {
      std::ostringstream os;
      os << "barycenter condition violated: b_{1," << e.i << "} = " << e.b << " must be 0";
      throw ConstraintViolation(Kind::barycenter, os.str());
    }
  }

  int top = 0;
  for (const auto& e : spec.entries) top = std::max(top, e.k);
  const auto levels = shifted_steklov(sol, top);

  const double R = sol.geom.R;
  const double u2 = sol.u_boundary_sq;
  const double K = sol.K_const;
  double weighted_L = 0.0;
  double surface = 0.0;
  double q_sum = 0.0;
  double b_sq = 0.0;
  for (const auto& e : spec.entries) {
    if (e.k == 0) continue;
    const double b2 = e.b * e.b;
    const double mu = levels[e.k].mu;
    b_sq += b2;
    q_sum += b2 / mu;
    surface += surface_mode(n, e.k) * b2;
    // Translations leave the eigenvalue unchanged; L(1) = 0 exactly.
    if (e.k >= 2) weighted_L += coefficient_from(sol, e.k, mu) * b2;
  }

  VariationReport rep;
  rep.lambda_dot = 0.0;
  rep.lambda_ddot = u2 * weighted_L;
  rep.S_ddot = surface / (R * R);
  rep.Q_val = u2 * K * K * q_sum;
  rep.sum_b_sq = b_sq;
  rep.quant_bound = quant_bound(sol).ratio_bound;
  if (rep.S_ddot != 0.0) rep.quant_ratio = rep.lambda_ddot / rep.S_ddot;
  return rep;
}

QuantBound quant_bound(const SpectralSolution& sol) {
  const double c = sol.alpha * sol.u_boundary_sq / (sol.geom.n + 1.0);
  return {c, -c};
}

QuantCheck quant_ratio_check(const SpectralSolution& sol, const PerturbationSpectrum& spec,
                             const SecondVariationOptions& options) {
  const bool active = std::any_of(spec.entries.begin(), spec.entries.end(),
                                  [](const SpectrumEntry& e) { return e.k >= 2 && e.b != 0.0; });
  if (!active) throw DegenerateInput("quant_ratio_check: no nonzero coefficient of degree >= 2");
  const VariationReport rep = second_variation(sol, spec, options);
  QuantCheck check;
  check.ratio = *rep.quant_ratio;
  check.bound = rep.quant_bound;
  check.margin = check.bound - check.ratio;
  check.holds = check.ratio <= check.bound;
  return check;
}

VerificationReport certify_negativity(const GridConfig& grid) {
  grid.validate();
  VerificationReport rep;
  rep.suite = "variation";
  rep.grid_summary = grid.summary();

  double max_L = -std::numeric_limits<double>::infinity();
  double max_translation = 0.0;
  double max_identity = 0.0;
  double skipped = 0.0;
  double points = 0.0;

  double* max_L_target = &max_L;
  double max_L_sweep = -std::numeric_limits<double>::infinity();

  const auto evaluate = [&](const SpectralSolution& sol) {
    const int n = sol.geom.n;
    const std::string where = describe(n, sol.geom.R, sol.alpha, sol.z);
    const auto levels = shifted_steklov(sol, std::max(grid.k_max, 1));
    points += 1.0;

    const double t = translation_from(sol, levels[1].mu);
    max_translation = std::max(max_translation, t);
    rep.expect_le("translation_null_mode", where, t, 1e-9);

    for (int k = std::max(grid.k_min, 2); k <= grid.k_max; ++k) {
      const std::string at = where + " k=" + std::to_string(k);
      const double mu = levels[k].mu;
      const double L = coefficient_from(sol, k, mu);
      *max_L_target = std::max(*max_L_target, L);
      rep.expect_lt("mode_coefficient_negative", at, L, 0.0);
      rep.expect_lt("surface_mode_positive", at, static_cast<double>(n - 1), static_cast<double>(k) * (n + k - 2));
      const ModeIdentity id = identity_from(sol, k, mu);
      const double residual = std::abs(id.lhs - id.rhs) / id.scale;
      max_identity = std::max(max_identity, residual);
      rep.expect_le("mode_identity", at, residual, 1e-11);
    }
  };

  for (int n : grid.dims) {
    for (double R : grid.radii) {
      for (double alpha : grid.alphas(n, R)) {
        try {
          evaluate(solve_lambda({n, R}, alpha));
        } catch (const NoDiscreteEigenvalue&) {
          skipped += 1.0;
        } catch (const RangeError&) {
          skipped += 1.0;
        }
      }
    }
  }

  // The dimensionless sweep reaches the z -> 0 corner that fixed alpha grids
  // cannot for n = 2.
  max_L_target = &max_L_sweep;
  const int sweep = std::max(grid.z_count, 2);
  for (int n : grid.dims) {
    for (int i = 0; i < sweep; ++i) {
      const double z = kMinScaledFrequency *
                       std::pow(kMaxScaledFrequency / kMinScaledFrequency, static_cast<double>(i) / (sweep - 1));
      evaluate(solution_at_z({n, 1.0}, std::min(z, kMaxScaledFrequency)));
    }
  }

  rep.set_metric("max_L", max_L);
  rep.set_metric("sweep_max_L", max_L_sweep);
  rep.set_metric("max_scaled_L_k1", max_translation);
  rep.set_metric("max_identity_residual", max_identity);
  rep.set_metric("points", points);
  rep.set_metric("skipped_points", skipped);
  return rep;
}

}  // namespace robinext
