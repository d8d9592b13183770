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

#ifndef ROBINEXT_EXTERIOR_SPECTRA_HPP
#define ROBINEXT_EXTERIOR_SPECTRA_HPP

// Principal Robin eigenvalue of the Laplacian on the exterior of a ball, the
// normalized radial eigenfunction, and the Steklov spectra of the exterior ball.

#include <cstdint>
#include <vector>

namespace robinext {

/// Exterior of the closed ball of radius R in R^n.
struct BallGeometry {
  int n = 3;
  double R = 1.0;

  /// Throws DomainError unless n >= 2 and R > 0.
  static BallGeometry make(int n, double R);
};

/// Scaled frequency z = R sqrt(-lambda) is kept inside this window; requests
/// mapping outside it raise RangeError.
inline constexpr double kMinScaledFrequency = 1e-8;
inline constexpr double kMaxScaledFrequency = 700.0;

/// One point (alpha, lambda) of the principal branch, with the derived
/// dimensionless quantities.
struct SpectralSolution {
  BallGeometry geom;
  double alpha = 0.0;          // Robin parameter, 1/length
  double lambda = 0.0;         // principal eigenvalue, 1/length^2, < 0
  double z = 0.0;              // R sqrt(-lambda)
  double y = 0.0;              // -alpha R = f_n(z)
  double K_const = 0.0;        // alpha^2 + alpha (n-1)/R + lambda, < 0
  double a_val = 0.0;          // R^2 K_const = a_n(z)
  double u_boundary_sq = 0.0;  // u(R)^2 under unit L2 normalization
};

struct SteklovLevel {
  int k = 0;
  double mu = 0.0;
  std::uint64_t multiplicity = 1;
};

/// Critical coupling -(n-2)/R; discrete spectrum exists iff alpha < alpha_star.
double alpha_star(const BallGeometry& geom);

/// Dispersion relation alpha(lambda) = -f_n(R sqrt(-lambda)) / R for lambda < 0.
double alpha_of_lambda(const BallGeometry& geom, double lambda);

/// Inverts the dispersion relation by Segura-bracketed bisection and a secant
/// polish. Throws NoDiscreteEigenvalue when alpha >= alpha_star, RangeError
/// when the root lies outside the z window, SolverFailure on non-convergence.
SpectralSolution solve_lambda(const BallGeometry& geom, double alpha);

/// The branch point with scaled frequency z (alpha follows from z).
SpectralSolution solution_at_z(const BallGeometry& geom, double z);

/// u(R)^2 with the normalization omega_{n-1} int_R^inf u(r)^2 r^{n-1} dr = mass,
/// by adaptive Gauss-Kronrod quadrature of the radial tail.
double normalized_boundary_sq(const SpectralSolution& sol, double mass = 1.0);

/// e^{2z} int_z^inf t K_nu(t)^2 dt / (z K_nu(z))^2 with nu = (n-2)/2:
/// the quadrature route and the closed antiderivative
/// int t K_nu^2 = (t^2/2)(K_{nu-1} K_{nu+1} - K_nu^2).
double normalized_tail_quadrature(int n, double z);
double normalized_tail_closed(int n, double z);

/// u(R)^2 from the closed tail identity, for cross-checks.
double normalized_boundary_sq_closed(const SpectralSolution& sol, double mass = 1.0);

/// Surface measure of the unit sphere S^{n-1}, 2 pi^{n/2} / Gamma(n/2).
double unit_sphere_area(int n);

/// Eigenvalues of the shifted Steklov problem
///   Delta phi + lambda phi = 0 outside, -d_nu phi + alpha phi = mu phi on the sphere,
/// mu_k = (f_{n+2k}(z) - f_n(z) - k) / R for k = 0..k_max.
std::vector<SteklovLevel> shifted_steklov(const SpectralSolution& sol, int k_max);

/// Exterior harmonic Steklov eigenvalues (n - 2 + l)/R, l = 0..l_max. n >= 3.
std::vector<SteklovLevel> harmonic_steklov(const BallGeometry& geom, int l_max);

/// Dimension of the degree-k spherical harmonics on S^{n-1}.
std::uint64_t multiplicity(int n, int k);

/// Number of discrete Robin eigenvalues below the essential spectrum, counted
/// with multiplicity. n >= 3.
std::uint64_t count_discrete(const BallGeometry& geom, double alpha);

/// Same count without multiplicity: the number of distinct degrees l.
std::uint64_t count_discrete_levels(const BallGeometry& geom, double alpha);

}  // namespace robinext

#endif  // ROBINEXT_EXTERIOR_SPECTRA_HPP
