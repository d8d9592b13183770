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

#include "robinext/counterexamples.hpp"

#include <cmath>

#include "robinext/errors.hpp"

namespace robinext {
namespace {

void require_negative(double alpha, const char* op) {
  if (!(alpha < 0.0)) throw DomainError(std::string(op) + ": alpha must be negative");
}

double gap(int n, double a) { return n - 2.0 + a * a - (n - 1.0) * std::pow(a, 1.0 / n); }

}  // namespace

EllipsoidSpec EllipsoidSpec::make(int n, double a) {
  if (n < 3) throw DomainError("ellipsoid: n must be >= 3");
  if (!(a > 0.0 && a < 1.0)) throw DomainError("ellipsoid: a must lie in (0, 1)");
  return {n, a};
}

PrincipalCurvatures ellipsoid_curvatures(const EllipsoidSpec& spec, double x1) {
  const EllipsoidSpec s = EllipsoidSpec::make(spec.n, spec.a);
  if (!(std::abs(x1) <= 1.0 / s.a)) throw DomainError("ellipsoid_curvatures: |x1| exceeds 1/a");
  const double a2 = s.a * s.a;
  const double d = 1.0 + a2 * (a2 - 1.0) * x1 * x1;
  return {1.0 / std::sqrt(d), a2 / (d * std::sqrt(d))};
}

double ellipsoid_hmax(const EllipsoidSpec& spec) {
  const EllipsoidSpec s = EllipsoidSpec::make(spec.n, spec.a);
  return -(s.n - 2.0 + s.a * s.a) / (s.n - 1.0);
}

double equivalent_ball_radius(const EllipsoidSpec& spec) {
  const EllipsoidSpec s = EllipsoidSpec::make(spec.n, spec.a);
  return std::pow(s.a, -1.0 / s.n);
}

AsymptoticModel AsymptoticModel::ball(int n, double R) {
  const BallGeometry g = BallGeometry::make(n, R);
  return {g.n, -1.0 / g.R};
}

AsymptoticModel AsymptoticModel::ellipsoid(const EllipsoidSpec& spec) {
  return {spec.n, ellipsoid_hmax(spec)};
}

AsymptoticModel AsymptoticModel::square() { return {2, 0.0}; }

double asymptotic_lambda(const AsymptoticModel& model, double alpha) {
  require_negative(alpha, "asymptotic_lambda");
  return -alpha * alpha + (model.n - 1.0) * model.h_max * alpha;
}

double ball_truncation_defect(const BallGeometry& geom, double alpha) {
  const double truncated = asymptotic_lambda(AsymptoticModel::ball(geom.n, geom.R), alpha);
  double exact;
  try {
    exact = solve_lambda(geom, alpha).lambda;
  } catch (const RangeError&) {
    if (geom.n != 3) throw;
    // f_3(z) = z + 1.
    const double z = -alpha * geom.R - 1.0;
    exact = -(z / geom.R) * (z / geom.R);
  }
  return exact - truncated;
}

HynakResult hynak_check(int n, double a) {
  (void)EllipsoidSpec::make(n, a);
  const double g = gap(n, a);
  return {g > 0.0, g};
}

double hynak_threshold(int n) {
  if (n < 3) throw DomainError("hynak_threshold: n must be >= 3");
  double lo = 0.0;
  double hi = 1.0;
  for (int i = 1; i < 1000; ++i) {
    const double a = i / 1000.0;
    if (gap(n, a) <= 0.0) {
      hi = a;
      break;
    }
    lo = a;
  }
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    (gap(n, mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

EllipsoidComparison compare_ellipsoid_ball(const EllipsoidSpec& spec, double alpha) {
  const EllipsoidSpec s = EllipsoidSpec::make(spec.n, spec.a);
  require_negative(alpha, "compare_ellipsoid_ball");
  EllipsoidComparison c;
  c.spec = s;
  c.alpha = alpha;
  c.h_max_ellipsoid = ellipsoid_hmax(s);
  c.ball_radius = equivalent_ball_radius(s);
  c.h_max_ball = -1.0 / c.ball_radius;
  c.lambda_ellipsoid = asymptotic_lambda({s.n, c.h_max_ellipsoid}, alpha);
  c.lambda_ball = asymptotic_lambda({s.n, c.h_max_ball}, alpha);
  c.gap = gap(s.n, s.a);
  c.delta = -alpha * c.gap;
  c.ellipsoid_exceeds_ball = c.gap > 0.0;
  c.threshold = hynak_threshold(s.n);
  c.verdict = c.ellipsoid_exceeds_ball ? "ellipsoid exceeds ball (asymptotic)"
                                       : "ball exceeds ellipsoid (asymptotic)";
  return c;
}

SquareDiskComparison square_vs_disk(double alpha) {
  require_negative(alpha, "square_vs_disk");
  SquareDiskComparison c;
  c.alpha = alpha;
  c.h_max_square = AsymptoticModel::square().h_max;
  c.h_max_disk = AsymptoticModel::ball(2, 1.0).h_max;
  c.lambda_square = asymptotic_lambda(AsymptoticModel::square(), alpha);
  c.lambda_disk = asymptotic_lambda(AsymptoticModel::ball(2, 1.0), alpha);
  c.square_smaller = c.lambda_square < c.lambda_disk;
  return c;
}

}  // namespace robinext
