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

#include "robinext/exterior_spectra.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <numeric>
#include <numbers>
#include <sstream>
#include <string>

#include "robinext/bessel.hpp"
#include "robinext/errors.hpp"

namespace robinext {
namespace {

void validate(const BallGeometry& geom) { (void)BallGeometry::make(geom.n, geom.R); }

void require_window(double z, const char* op) {
  if (!(z >= kMinScaledFrequency && z <= kMaxScaledFrequency)) {
    std::ostringstream os;
    os << op << ": scaled frequency z = " << z << " outside [" << kMinScaledFrequency << ", "
       << kMaxScaledFrequency << "]";
    throw RangeError(os.str());
  }
}

// Distance the radial tail is integrated past z; the integrand carries e^{-2(t-z)}.
constexpr double kTailLength = 40.0;

}  // namespace

BallGeometry BallGeometry::make(int n, double R) {
  if (n < 2) throw DomainError("BallGeometry: dimension n must be >= 2");
  if (!(R > 0.0) || !std::isfinite(R)) throw DomainError("BallGeometry: radius R must be positive");
  return {n, R};
}

double alpha_star(const BallGeometry& geom) {
  validate(geom);
  if (geom.n == 2) return 0.0;
  return -(geom.n - 2.0) / geom.R;
}

double alpha_of_lambda(const BallGeometry& geom, double lambda) {
  validate(geom);
  if (!(lambda < 0.0)) {
    throw DomainError("alpha_of_lambda: lambda must be negative; [0, inf) is essential spectrum");
  }
  const double z = geom.R * std::sqrt(-lambda);
  require_window(z, "alpha_of_lambda");
  return -ratio_f(geom.n, z) / geom.R;
}

SpectralSolution solution_at_z(const BallGeometry& geom, double z) {
  validate(geom);
  require_window(z, "solution_at_z");
  const double g = ratio_shift(geom.n, z);
  SpectralSolution sol;
  sol.geom = geom;
  sol.z = z;
  sol.y = z + g;
  sol.alpha = -sol.y / geom.R;
  sol.lambda = -(z / geom.R) * (z / geom.R);
  sol.a_val = gap_from_shift(geom.n, z, g);
  sol.K_const = sol.a_val / (geom.R * geom.R);
  sol.u_boundary_sq = normalized_boundary_sq(sol);
  return sol;
}

SpectralSolution solve_lambda(const BallGeometry& geom, double alpha) {
  validate(geom);
  const double astar = alpha_star(geom);
  if (!(alpha < astar)) {
    std::ostringstream os;
    os << "no discrete eigenvalue: alpha = " << alpha << " is not below alpha* = " << astar;
    throw NoDiscreteEigenvalue(os.str(), alpha, astar);
  }
  const int n = geom.n;
  const double y = -alpha * geom.R;
  const auto residual = [n, y](double z) { return (z + ratio_shift(n, z)) - y; };

  if (residual(kMinScaledFrequency) > 0.0) {
    throw RangeError("solve_lambda: alpha too close to alpha*; root below z = 1e-8");
  }
  if (residual(kMaxScaledFrequency) < 0.0) {
    throw RangeError("solve_lambda: alpha too negative; root above z = 700");
  }

  const SeguraBracket bracket = segura_bracket(n, y);
  double lo = std::clamp(bracket.z_lo, kMinScaledFrequency, kMaxScaledFrequency);
  double hi = std::clamp(bracket.z_hi, kMinScaledFrequency, kMaxScaledFrequency);
  double f_lo = residual(lo);
  double f_hi = residual(hi);
  // Rounding at the bracket ends can only be off by ulps; fall back to the window.
  if (f_lo > 0.0) f_lo = residual(lo = kMinScaledFrequency);
  if (f_hi < 0.0) f_hi = residual(hi = kMaxScaledFrequency);

  int iterations = 0;
  while (hi - lo > 1e-12 * hi) {
    if (++iterations > 200) throw SolverFailure("solve_lambda: bisection did not converge");
    const double mid = hi > 4.0 * lo ? std::sqrt(lo * hi) : 0.5 * (lo + hi);
    const double f_mid = residual(mid);
    if (f_mid == 0.0) {
      lo = hi = mid;
      f_lo = f_hi = 0.0;
      break;
    }
    if (f_mid < 0.0) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
      f_hi = f_mid;
    }
  }

  double z = lo;
  if (f_hi != f_lo) z = std::clamp(lo - f_lo * (hi - lo) / (f_hi - f_lo), lo, hi);
  // Keep whichever candidate has the smallest residual.
  double best = std::abs(residual(z));
  for (double candidate : {lo, hi}) {
    const double r = std::abs(residual(candidate));
    if (r < best) {
      best = r;
      z = candidate;
    }
  }

  SpectralSolution sol = solution_at_z(geom, z);
  sol.alpha = alpha;
  sol.y = y;
  return sol;
}

double unit_sphere_area(int n) {
  return 2.0 * std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(0.5 * n);
}

double normalized_tail_quadrature(int n, double z) {
  const BesselOrder order = BesselOrder::radial(static_cast<unsigned>(n));
  const double k_at_z = modified_bessel_K(order, z, Scaling::scaled).mantissa;

  // Below t = 1 integrate in u = ln(t/z), where K follows a power law:
  // (t/z)^2 (S(t)/S(z))^2 e^{-2(t-z)} du with S(t) = e^t K_nu(t).
  const auto log_integrand = [&](double u) {
    const double ratio = modified_bessel_K(order, z * std::exp(u), Scaling::scaled).mantissa / k_at_z;
    const double growth = std::exp(u);
    return growth * growth * ratio * ratio * std::exp(-2.0 * z * std::expm1(u));
  };
  // Above it in s = t - z: (1 + s/z) (S(t)/S(z))^2 e^{-2s} ds / z.
  const auto linear_integrand = [&](double s) {
    const double ratio = modified_bessel_K(order, z + s, Scaling::scaled).mantissa / k_at_z;
    return (1.0 + s / z) * ratio * ratio * std::exp(-2.0 * s) / z;
  };

  using Quadrature = boost::math::quadrature::gauss_kronrod<double, 31>;
  // Just above the Kronrod roundoff floor of 50 eps.
  constexpr double kTolerance = 1e-13;
  struct Piece {
    bool log_variable;
    double from, to, estimate;
  };
  std::vector<Piece> pieces;
  if (z < 1.0) pieces.push_back({true, 0.0, -std::log(z), 0.0});
  double left = z < 1.0 ? 1.0 - z : 0.0;
  for (double right : {1.0, 4.0, 12.0, kTailLength}) {
    if (right <= left) continue;
    pieces.push_back({false, left, right, 0.0});
    left = right;
  }
  const auto integrate = [&](const Piece& p, unsigned depth, double tol) {
    return p.log_variable ? Quadrature::integrate(log_integrand, p.from, p.to, depth, tol)
                          : Quadrature::integrate(linear_integrand, p.from, p.to, depth, tol);
  };
  // Share one absolute budget: a piece's relative tolerance is scaled by its
  // share of the total.
  double rough = 0.0;
  for (Piece& p : pieces) rough += (p.estimate = std::abs(integrate(p, 0, kTolerance)));
  double total = 0.0;
  for (const Piece& p : pieces) {
    const double tol = p.estimate > 0.0 ? std::min(1e-3, kTolerance * rough / p.estimate) : 1e-3;
    total += integrate(p, 15, tol);
  }
  return total;
}

double normalized_tail_closed(int n, double z) {
  if (n == 2) {
    const double g = ratio_shift(2, z);
    return (2.0 * z * g + g * g) / (2.0 * z * z);
  }
  if (n == 3) return 0.5 / z;
  // With g_m = f_m - z the antiderivative reduces to (g_n - g_{n-2}) / (2 (z + g_{n-2})).
  const auto chain = ratio_shift_chain(n - 2, z, 2);
  return (chain[1] - chain[0]) / (2.0 * (z + chain[0]));
}

double normalized_boundary_sq(const SpectralSolution& sol, double mass) {
  const int n = sol.geom.n;
  return mass / (unit_sphere_area(n) * std::pow(sol.geom.R, n) * normalized_tail_quadrature(n, sol.z));
}

double normalized_boundary_sq_closed(const SpectralSolution& sol, double mass) {
  const int n = sol.geom.n;
  return mass / (unit_sphere_area(n) * std::pow(sol.geom.R, n) * normalized_tail_closed(n, sol.z));
}

std::vector<SteklovLevel> shifted_steklov(const SpectralSolution& sol, int k_max) {
  if (k_max < 0) throw DomainError("shifted_steklov: k_max must be >= 0");
  const int n = sol.geom.n;
  const auto chain = ratio_shift_chain(n, sol.z, static_cast<std::size_t>(k_max) + 1);
  std::vector<SteklovLevel> levels;
  levels.reserve(chain.size());
  for (int k = 0; k <= k_max; ++k) {
    const double mu = k == 0 ? 0.0 : (chain[k] - chain[0] - k) / sol.geom.R;
    levels.push_back({k, mu, multiplicity(n, k)});
  }
  return levels;
}

std::vector<SteklovLevel> harmonic_steklov(const BallGeometry& geom, int l_max) {
  validate(geom);
  if (geom.n < 3) {
    throw DomainError("harmonic_steklov: the exterior harmonic Steklov problem needs n >= 3");
  }
  if (l_max < 0) throw DomainError("harmonic_steklov: l_max must be >= 0");
  std::vector<SteklovLevel> levels;
  for (int l = 0; l <= l_max; ++l) {
    levels.push_back({l, (geom.n - 2.0 + l) / geom.R, multiplicity(geom.n, l)});
  }
  return levels;
}

namespace {

std::uint64_t binomial(long long a, long long b) {
  if (b < 0 || a < 0 || a < b) return 0;
  b = std::min(b, a - b);
  std::uint64_t result = 1;
  for (long long i = 1; i <= b; ++i) {
    // result * (a - b + i) is divisible by i; cancel first to stay in range.
    const auto step = static_cast<std::uint64_t>(a - b + i);
    const auto den = static_cast<std::uint64_t>(i);
    const std::uint64_t common = std::gcd(result, den);
    result /= common;
    if (__builtin_mul_overflow(result, step / (den / common), &result)) {
      throw RangeError("multiplicity: binomial coefficient exceeds 64 bits");
    }
  }
  return result;
}

}  // namespace

std::uint64_t multiplicity(int n, int k) {
  if (n < 2) throw DomainError("multiplicity: n must be >= 2");
  if (k < 0) throw DomainError("multiplicity: k must be >= 0");
  return binomial(n + k - 1, n - 1) - binomial(n + k - 3, n - 1);
}

std::uint64_t count_discrete(const BallGeometry& geom, double alpha) {
  validate(geom);
  if (geom.n < 3) throw DomainError("count_discrete: harmonic Steklov spectrum not modeled for n = 2");
  if (!(alpha < alpha_star(geom))) return 0;
  const double y = -alpha * geom.R;
  std::uint64_t count = 0;
  for (int l = 0; geom.n - 2.0 + l < y; ++l) count += multiplicity(geom.n, l);
  return count;
}

std::uint64_t count_discrete_levels(const BallGeometry& geom, double alpha) {
  validate(geom);
  if (geom.n < 3) throw DomainError("count_discrete: harmonic Steklov spectrum not modeled for n = 2");
  if (!(alpha < alpha_star(geom))) return 0;
  const double y = -alpha * geom.R;
  std::uint64_t count = 0;
  for (int l = 0; geom.n - 2.0 + l < y; ++l) ++count;
  return count;
}

}  // namespace robinext
