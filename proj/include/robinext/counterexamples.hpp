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

#ifndef ROBINEXT_COUNTEREXAMPLES_HPP
#define ROBINEXT_COUNTEREXAMPLES_HPP

// Strong-coupling comparison of exterior Robin eigenvalues: an elongated
// ellipsoid against the ball of equal volume, and a square against a disk.
// All eigenvalues here are quadratic truncations -alpha^2 + (n-1) H_max alpha;
// the o(alpha) remainder is not modeled.

#include <string>

#include "robinext/exterior_spectra.hpp"

namespace robinext {

/// E(a) = {(a x_1)^2 + x_2^2 + ... + x_n^2 <= 1}.
struct EllipsoidSpec {
  int n = 3;
  double a = 0.5;

  /// Throws DomainError unless n >= 3 and 0 < a < 1.
  static EllipsoidSpec make(int n, double a);
};

/// The two distinct principal curvatures of the boundary at axial position x1:
/// `common` has multiplicity n-2, `last` belongs to the meridian.
struct PrincipalCurvatures {
  double common = 0.0;
  double last = 0.0;
};

PrincipalCurvatures ellipsoid_curvatures(const EllipsoidSpec& spec, double x1);

/// Maximal mean curvature of the exterior boundary, -(n-2+a^2)/(n-1), at x1 = 0.
double ellipsoid_hmax(const EllipsoidSpec& spec);

/// Radius a^{-1/n} of the ball with the volume of E(a).
double equivalent_ball_radius(const EllipsoidSpec& spec);

struct AsymptoticModel {
  int n = 3;
  double h_max = -1.0;

  static AsymptoticModel ball(int n, double R);
  static AsymptoticModel ellipsoid(const EllipsoidSpec& spec);
  /// Squares of any side in the plane: the flat sides give H_max = 0.
  static AsymptoticModel square();
};

/// -alpha^2 + (n-1) h_max alpha for alpha < 0.
double asymptotic_lambda(const AsymptoticModel& model, double alpha);

/// Exact principal eigenvalue of B_R^ext minus its truncation. For n = 3
/// the exact branch is closed form when the solver window is exceeded.
double ball_truncation_defect(const BallGeometry& geom, double alpha);

struct HynakResult {
  bool holds = false;
  double gap = 0.0;  // n - 2 + a^2 - (n-1) a^{1/n}
};

/// n - 2 + a^2 > (n-1) a^{1/n}.
HynakResult hynak_check(int n, double a);

/// Root of the gap in (0, 1), located by a left-to-right scan of step 1e-3 and
/// bisection to 1e-10. The gap is positive below it.
double hynak_threshold(int n);

struct EllipsoidComparison {
  EllipsoidSpec spec;
  double alpha = 0.0;
  double h_max_ellipsoid = 0.0;
  double h_max_ball = 0.0;
  double ball_radius = 0.0;
  double lambda_ellipsoid = 0.0;
  double lambda_ball = 0.0;
  double delta = 0.0;  // lambda_ellipsoid - lambda_ball = -alpha * gap
  double gap = 0.0;
  bool ellipsoid_exceeds_ball = false;
  double threshold = 0.0;
  std::string verdict;
};

EllipsoidComparison compare_ellipsoid_ball(const EllipsoidSpec& spec, double alpha);

struct SquareDiskComparison {
  double alpha = 0.0;
  double h_max_square = 0.0;
  double h_max_disk = -1.0;
  double lambda_square = 0.0;
  double lambda_disk = 0.0;
  bool square_smaller = false;
};

/// Unit disk against a square, n = 2.
SquareDiskComparison square_vs_disk(double alpha);

}  // namespace robinext

#endif  // ROBINEXT_COUNTEREXAMPLES_HPP
