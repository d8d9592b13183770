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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "robinext/bessel.hpp"
#include "robinext/errors.hpp"
#include "robinext/exterior_spectra.hpp"

using namespace robinext;
using Big = boost::multiprecision::cpp_bin_float_50;

namespace {

constexpr double kPi = std::numbers::pi;

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

double oracle_f(int n, double z) {
  const Big bz(z);
  return static_cast<double>(bz * boost::math::cyl_bessel_k(Big(n) / 2, bz) /
                             boost::math::cyl_bessel_k(Big(n - 2) / 2, bz));
}

// Tail integral by tanh-sinh over Boost's own K, normalized like the library.
double oracle_tail(int n, double z) {
  const double nu = 0.5 * (n - 2);
  const double kz = boost::math::cyl_bessel_k(nu, z) * std::exp(z);
  const auto integrand = [&](double t) {
    const double kt = boost::math::cyl_bessel_k(nu, t) * std::exp(t);
    return t * kt * kt * std::exp(-2.0 * (t - z));
  };
  boost::math::quadrature::tanh_sinh<double> q;
  double total = 0.0;
  if (z < 1.0) total += q.integrate(integrand, z, 1.0);
  total += q.integrate(integrand, std::max(z, 1.0), z + 45.0);
  return total / (z * kz * z * kz);
}

}  // namespace

TEST_CASE("geometry validation") {
  CHECK_THROWS_AS(BallGeometry::make(1, 1.0), DomainError);
  CHECK_THROWS_AS(BallGeometry::make(3, 0.0), DomainError);
  CHECK_THROWS_AS(BallGeometry::make(3, -2.0), DomainError);
  CHECK(BallGeometry::make(4, 2.5).R == 2.5);
}

TEST_CASE("alpha_star") {
  CHECK(alpha_star({3, 1.0}) == -1.0);
  CHECK(alpha_star({2, 5.0}) == 0.0);
  CHECK(alpha_star({5, 0.5}) == -6.0);
  for (int n = 3; n <= 10; ++n) {
    const BallGeometry g{n, 0.7};
    CHECK(alpha_star(g) == doctest::Approx(-harmonic_steklov(g, 0)[0].mu).epsilon(1e-15));
  }
}

TEST_CASE("alpha_of_lambda") {
  CHECK(alpha_of_lambda({3, 1.0}, -4.0) == doctest::Approx(-3.0).epsilon(1e-15));
  CHECK(alpha_of_lambda({5, 1.0}, -4.0) == doctest::Approx(-13.0 / 3.0).epsilon(1e-15));
  double previous = -1.0;
  for (double lambda : {-1e-4, -1e-8, -1e-12, -1e-15}) {
    const double a = alpha_of_lambda({2, 1.0}, lambda);
    CHECK(a < 0.0);
    CHECK(a > previous);
    previous = a;
  }
  CHECK(previous > -0.1);
  CHECK_THROWS_AS(alpha_of_lambda({3, 1.0}, 0.0), DomainError);
  CHECK_THROWS_AS(alpha_of_lambda({3, 1.0}, 1.0), DomainError);
  CHECK_THROWS_AS(alpha_of_lambda({3, 1.0}, -1e6), RangeError);
}

TEST_CASE("solve_lambda examples") {
  const auto s = solve_lambda({3, 1.0}, -3.0);
  CHECK(s.lambda == doctest::Approx(-4.0).epsilon(1e-13));
  CHECK(s.z == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(s.a_val == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(s.K_const == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(s.y == 3.0);

  CHECK_THROWS_AS(solve_lambda({3, 1.0}, -1.0 + 1e-9), NoDiscreteEigenvalue);
  CHECK_THROWS_AS(solve_lambda({3, 1.0}, -1.0), NoDiscreteEigenvalue);
  CHECK_THROWS_AS(solve_lambda({2, 1.0}, 0.0), NoDiscreteEigenvalue);
  try {
    solve_lambda({4, 2.0}, -0.5);
    FAIL("expected NoDiscreteEigenvalue");
  } catch (const NoDiscreteEigenvalue& e) {
    CHECK(e.alpha() == -0.5);
    CHECK(e.alpha_star() == -1.0);
  }

  // n = 2: value from a 40-digit reference; round trip is the defining check.
  const auto t = solve_lambda({2, 1.0}, -0.5);
  CHECK(t.lambda == doctest::Approx(-0.027463620926139019).epsilon(1e-11));
  CHECK(t.z == doctest::Approx(0.16572151618344257).epsilon(1e-12));
  CHECK(rel(alpha_of_lambda({2, 1.0}, t.lambda), -0.5) <= 1e-10);
}

TEST_CASE("solve_lambda window") {
  CHECK_THROWS_AS(solve_lambda({3, 1.0}, -800.0), RangeError);
  CHECK_THROWS_AS(solve_lambda({2, 1.0}, -1e-3), RangeError);
  CHECK_NOTHROW(solve_lambda({3, 1.0}, -600.0));
}

TEST_CASE("solution invariants over random draws") {
  std::mt19937_64 rng(20261014);
  std::uniform_int_distribution<int> pick_n(2, 8);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int solved = 0;
  for (int draw = 0; draw < 200; ++draw) {
    const int n = pick_n(rng);
    const double R = 0.2 + 4.8 * unit(rng);
    const BallGeometry g{n, R};
    const double astar = alpha_star(g);
    // For n = 2 the z window bounds how close to 0 alpha can go; sample the
    // representable part geometrically.
    double alpha;
    if (n == 2) {
      const double lo = std::max(-50.0, -ratio_f(2, kMaxScaledFrequency) / R);
      const double hi = -ratio_f(2, 1e-6) / R;
      alpha = -std::exp(std::log(-hi) + unit(rng) * (std::log(-lo) - std::log(-hi)));
    } else {
      const double lo = std::max(-50.0, -ratio_f(n, kMaxScaledFrequency) / R);
      alpha = astar + (lo - astar) * std::pow(unit(rng), 2.0);
      if (!(alpha < astar)) alpha = std::nextafter(astar, -1.0) - 1e-9;
    }
    SpectralSolution s;
    try {
      s = solve_lambda(g, alpha);
    } catch (const RangeError&) {
      continue;
    }
    ++solved;
    CHECK(rel(alpha_of_lambda(g, s.lambda), alpha) <= 1e-10);
    CHECK(std::abs(ratio_f(n, s.z) - s.y) <= 1e-13 * s.y);
    CHECK(rel(s.y, oracle_f(n, s.z)) <= 1e-10);
    const double a_direct = s.y * s.y - (n - 1) * s.y - s.z * s.z;
    CHECK(std::abs(s.a_val - a_direct) <= 1e-12 * std::max(std::abs(s.a_val), s.y * s.y));
    CHECK(s.K_const < 0.0);
    CHECK(s.alpha < astar);
    CHECK(std::abs(s.K_const - (alpha * alpha + alpha * (n - 1) / R + s.lambda)) <=
          1e-10 * (alpha * alpha + std::abs(s.lambda)));
  }
  CHECK(solved >= 190);
}

TEST_CASE("monotone in alpha") {
  for (int n = 2; n <= 7; ++n) {
    const BallGeometry g{n, 1.3};
    double previous = -std::numeric_limits<double>::infinity();
    for (double alpha = -40.0; alpha < alpha_star(g) - 0.05; alpha += 0.37) {
      const double lambda = solve_lambda(g, alpha).lambda;
      CHECK(lambda > previous);
      previous = lambda;
    }
  }
}

TEST_CASE("radial monotonicity on ball pairs") {
  for (int n = 2; n <= 8; ++n) {
    for (double R2 : {0.5, 1.0, 3.0}) {
      for (double r : {0.1 * R2, 0.5 * R2, 0.9 * R2, R2}) {
        const double cap = n == 2 ? -0.3 / r : alpha_star({n, R2}) * 1.1;
        for (double alpha : {cap, 2.0 * cap, 10.0 * cap}) {
          if (-alpha * R2 > 600.0) continue;
          const double big = solve_lambda({n, R2}, alpha).lambda;
          // Without a discrete eigenvalue the bottom of the spectrum is 0.
          double small = 0.0;
          if (alpha < alpha_star({n, r})) small = solve_lambda({n, r}, alpha).lambda;
          if (r < R2) CHECK(big < small); else CHECK(big == small);
        }
      }
    }
  }
}

TEST_CASE("normalized boundary value") {
  const auto s = solve_lambda({3, 1.0}, -3.0);
  CHECK(s.u_boundary_sq == doctest::Approx(1.0 / kPi).epsilon(1e-10));
  CHECK(normalized_boundary_sq_closed(s) == doctest::Approx(1.0 / kPi).epsilon(1e-13));
  CHECK(normalized_boundary_sq(s, 4.0) == doctest::Approx(4.0 * s.u_boundary_sq).epsilon(1e-15));

  const auto t = solve_lambda({2, 1.0}, -1.0);
  CHECK(t.u_boundary_sq == doctest::Approx(0.17449136651919250).epsilon(1e-9));
  CHECK(rel(t.u_boundary_sq, normalized_boundary_sq_closed(t)) <= 1e-9);
}

TEST_CASE("tail identity against independent quadrature") {
  for (int n = 2; n <= 10; ++n) {
    for (double z : {1e-6, 1e-3, 0.1, 0.7, 1.0, 2.5, 10.0, 50.0, 300.0, 700.0}) {
      const double q = normalized_tail_quadrature(n, z);
      const double c = normalized_tail_closed(n, z);
      CAPTURE(n);
      CAPTURE(z);
      CHECK(rel(q, c) <= 1e-10);
      if (z <= 500.0) CHECK(rel(q, oracle_tail(n, z)) <= 1e-8);
    }
  }
  CHECK(normalized_tail_closed(3, 2.0) == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("unit sphere area") {
  CHECK(unit_sphere_area(2) == doctest::Approx(2.0 * kPi).epsilon(1e-15));
  CHECK(unit_sphere_area(3) == doctest::Approx(4.0 * kPi).epsilon(1e-15));
  CHECK(unit_sphere_area(4) == doctest::Approx(2.0 * kPi * kPi).epsilon(1e-15));
}

TEST_CASE("shifted Steklov") {
  const auto s = solve_lambda({3, 1.0}, -3.0);
  const auto levels = shifted_steklov(s, 2);
  REQUIRE(levels.size() == 3);
  CHECK(levels[0].mu == 0.0);
  CHECK(levels[1].mu == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
  CHECK(levels[2].mu == doctest::Approx(12.0 / 13.0).epsilon(1e-13));
  CHECK(levels[1].multiplicity == 3);
  // y R mu_1 = -a_n.
  CHECK(s.y * s.geom.R * levels[1].mu == doctest::Approx(-s.a_val).epsilon(1e-12));
  CHECK_THROWS_AS(shifted_steklov(s, -1), DomainError);

  for (int n = 2; n <= 10; ++n) {
    for (double z : {1e-6, 0.01, 0.5, 3.0, 40.0, 700.0}) {
      const auto sol = solution_at_z({n, 2.0}, z);
      const auto mu = shifted_steklov(sol, 21);
      CHECK(mu[0].mu == 0.0);
      for (int k = 0; k < 21; ++k) CHECK(mu[k].mu < mu[k + 1].mu);
      CHECK(sol.y * sol.geom.R * mu[1].mu == doctest::Approx(-sol.a_val).epsilon(1e-9));
    }
  }
}

TEST_CASE("harmonic Steklov") {
  const auto h = harmonic_steklov({3, 1.0}, 2);
  CHECK(h[0].mu == 1.0);
  CHECK(h[1].mu == 2.0);
  CHECK(h[1].multiplicity == 3);
  CHECK(harmonic_steklov({4, 2.0}, 0)[0].mu == 1.0);
  CHECK_THROWS_AS(harmonic_steklov({2, 1.0}, 3), DomainError);
  CHECK_THROWS_AS(harmonic_steklov({3, 1.0}, -1), DomainError);

  // mu_k - alpha tends to the harmonic value as z -> 0 along the branch.
  for (int n = 3; n <= 7; ++n) {
    const auto sol = solution_at_z({n, 1.5}, 1e-7);
    const auto mu = shifted_steklov(sol, 5);
    const auto harm = harmonic_steklov({n, 1.5}, 5);
    for (int k = 0; k <= 5; ++k) {
      CHECK(mu[k].mu - sol.alpha == doctest::Approx(harm[k].mu).epsilon(1e-5));
    }
  }
}

TEST_CASE("multiplicity") {
  CHECK(multiplicity(3, 2) == 5);
  CHECK(multiplicity(2, 3) == 2);
  CHECK(multiplicity(2, 1) == 2);
  for (int n = 2; n <= 12; ++n) CHECK(multiplicity(n, 0) == 1);
  CHECK(multiplicity(3, 7) == 15);
  CHECK(multiplicity(4, 3) == 16);
  CHECK(multiplicity(5, 1) == 5);
  CHECK_THROWS_AS(multiplicity(1, 0), DomainError);
  CHECK_THROWS_AS(multiplicity(3, -1), DomainError);
}

TEST_CASE("count_discrete") {
  CHECK(count_discrete({3, 1.0}, -1.5) == 1);
  CHECK(count_discrete({3, 1.0}, -2.5) == 4);
  CHECK(count_discrete({3, 1.0}, -0.5) == 0);
  CHECK(count_discrete({3, 1.0}, -1.0) == 0);
  CHECK(count_discrete({3, 1.0}, -3.0) == 4);
  CHECK(count_discrete({3, 1.0}, -3.0 - 1e-12) == 9);
  CHECK(count_discrete_levels({3, 1.0}, -2.5) == 2);
  CHECK_THROWS_AS(count_discrete({2, 1.0}, -1.0), DomainError);
}
