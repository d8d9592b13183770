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

#include <boost/math/special_functions/bessel.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "robinext/errors.hpp"
#include "robinext/exterior_spectra.hpp"
#include "robinext/shape_calculus.hpp"

using namespace robinext;
using Big = boost::multiprecision::cpp_bin_float_50;

namespace {

constexpr double kPi = std::numbers::pi;

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

PerturbationSpectrum single(int k, int i, double b) { return {{{k, i, b}}}; }

PerturbationSpectrum random_spectrum(std::mt19937_64& rng, int n, int k_top) {
  std::uniform_int_distribution<int> pick_k(2, k_top);
  std::uniform_int_distribution<int> count(1, 6);
  std::normal_distribution<double> coef(0.0, 1.0);
  PerturbationSpectrum spec;
  const int terms = count(rng);
  for (int t = 0; t < terms; ++t) {
    const int k = pick_k(rng);
    const int d = static_cast<int>(std::min<std::uint64_t>(multiplicity(n, k), 1000));
    const int i = std::uniform_int_distribution<int>(1, d)(rng);
    bool duplicate = false;
    for (const auto& e : spec.entries) duplicate = duplicate || (e.k == k && e.i == i);
    if (!duplicate) spec.entries.push_back({k, i, coef(rng)});
  }
  return spec;
}

// L from the proof identity with 50-digit kernel values at a given z.
double oracle_L(int n, double R, double z, int k) {
  const Big bz(z);
  const auto f = [&](int m) {
    return bz * boost::math::cyl_bessel_k(Big(m) / 2, bz) / boost::math::cyl_bessel_k(Big(m - 2) / 2, bz);
  };
  const Big y = f(n);
  const Big a = y * y - (n - 1) * y - bz * bz;
  const Big mu = (f(n + 2 * k) - y - k) / R;
  const Big rhs = -2 * a * a - y * R * mu * (2 * a + k * k + (n - 2) * k - (n - 1));
  return static_cast<double>(rhs / (Big(R) * R * R * R * mu));
}

}  // namespace

TEST_CASE("first variation") {
  const auto s = solve_lambda({3, 1.0}, -3.0);
  CHECK(first_variation(s, 1.0) == doctest::Approx(-1.0 / kPi).epsilon(1e-10));
  CHECK(first_variation(s, 0.0) == 0.0);
  CHECK(first_variation(s, -2.0) == doctest::Approx(2.0 / kPi).epsilon(1e-10));
}

TEST_CASE("first variation integrand") {
  const auto s = solve_lambda({3, 1.0}, -3.0);
  const double u2 = s.u_boundary_sq;
  const double ball = first_variation_integrand(9.0 * u2, u2, -1.0, s.alpha, s.lambda, 3);
  CHECK(ball == doctest::Approx(u2 * s.K_const).epsilon(1e-12));
  CHECK(ball == doctest::Approx(-u2).epsilon(1e-12));
  CHECK(first_variation_integrand(2.0, 0.5, -1.0, 0.0, -3.0, 3) == doctest::Approx(-(2.0 + 1.5)));
  CHECK(first_variation_integrand(2.0, 0.0, -1.0, -3.0, -4.0, 3) == -2.0);
  // Ball reduction for arbitrary parameters: |grad u|^2 = alpha^2 u^2, H = -1/R.
  for (int n = 2; n <= 8; ++n) {
    const auto t = solve_lambda({n, 2.0}, -5.0);
    const double v = first_variation_integrand(t.alpha * t.alpha, 1.0, -1.0 / 2.0, t.alpha, t.lambda, n);
    CHECK(v == doctest::Approx(t.K_const).epsilon(1e-12));
  }
}

TEST_CASE("mode coefficient") {
  const auto s = solve_lambda({3, 1.0}, -3.0);
  CHECK(mode_coefficient(s, 2) == doctest::Approx(-49.0 / 6.0).epsilon(1e-12));
  CHECK(std::abs(mode_coefficient(s, 1)) <= 1e-12);
  CHECK_THROWS_AS(mode_coefficient(s, 0), DomainError);

  const auto t = solve_lambda({2, 1.0}, -2.0);
  CHECK(t.z == doctest::Approx(1.5526512556453646).epsilon(1e-12));
  const double L = mode_coefficient(t, 2);
  CHECK(L < 0.0);
  CHECK(L == doctest::Approx(-4.8057007845180814).epsilon(1e-11));
  CHECK(rel(L, oracle_L(2, 1.0, t.z, 2)) <= 1e-11);
}

TEST_CASE("mode coefficient against the high-precision identity") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int draw = 0; draw < 60; ++draw) {
    const int n = 2 + draw % 9;
    const double R = 0.2 + 4.8 * unit(rng);
    const double z = std::exp(std::log(1e-3) + unit(rng) * std::log(700.0 / 1e-3));
    const auto sol = solution_at_z({n, R}, z);
    for (int k : {2, 3, 7, 25}) {
      CAPTURE(n);
      CAPTURE(z);
      CAPTURE(k);
      const double L = mode_coefficient(sol, k);
      CHECK(L < 0.0);
      // The formula cancels by up to the ratio of its largest term to L.
      const ModeIdentity id = mode_identity(sol, k);
      const double tol = 1e-12 * std::max(1.0, id.scale / std::abs(id.lhs));
      CHECK(rel(L, oracle_L(n, R, z, k)) <= tol);
    }
  }
}

TEST_CASE("mode identity and null mode") {
  for (int n = 2; n <= 10; ++n) {
    for (double z : {1e-8, 1e-4, 0.3, 2.0, 30.0, 700.0}) {
      const auto sol = solution_at_z({n, 1.7}, z);
      CHECK(scaled_translation_coefficient(sol) <= 1e-9);
      for (int k = 1; k <= 25; ++k) {
        const ModeIdentity id = mode_identity(sol, k);
        CHECK(std::abs(id.lhs - id.rhs) <= 1e-11 * id.scale);
      }
    }
  }
}

TEST_CASE("second variation reference") {
  const auto s = solve_lambda({3, 1.0}, -3.0);
  const auto rep = second_variation(s, single(2, 1, 1.0));
  CHECK(rep.lambda_ddot == doctest::Approx(-49.0 / (6.0 * kPi)).epsilon(1e-10));
  CHECK(rep.S_ddot == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(rep.Q_val == doctest::Approx(13.0 / (12.0 * kPi)).epsilon(1e-10));
  CHECK(rep.lambda_dot == 0.0);
  REQUIRE(rep.quant_ratio.has_value());
  CHECK(*rep.quant_ratio == doctest::Approx(-49.0 / (24.0 * kPi)).epsilon(1e-10));

  const auto empty = second_variation(s, {});
  CHECK(empty.lambda_ddot == 0.0);
  CHECK(empty.S_ddot == 0.0);
  CHECK(empty.Q_val == 0.0);
  CHECK_FALSE(empty.quant_ratio.has_value());

  const auto zeros = second_variation(s, {{{0, 1, 0.0}, {1, 2, 0.0}, {3, 4, 0.0}}});
  CHECK(zeros.lambda_ddot == 0.0);
}

TEST_CASE("second variation constraints") {
  const auto s = solve_lambda({3, 1.0}, -3.0);
  try {
    second_variation(s, single(0, 1, 0.1));
    FAIL("expected ConstraintViolation");
  } catch (const ConstraintViolation& e) {
    CHECK(e.kind() == ConstraintViolation::Kind::measure_preserving);
    CHECK(std::string(e.what()).find("measure-preserving") != std::string::npos);
  }
  try {
    second_variation(s, single(1, 2, 0.5));
    FAIL("expected ConstraintViolation");
  } catch (const ConstraintViolation& e) {
    CHECK(e.kind() == ConstraintViolation::Kind::barycenter);
    CHECK(std::string(e.what()).find("b_{1,2}") != std::string::npos);
  }
  const auto malformed = [&](const PerturbationSpectrum& p) {
    try {
      second_variation(s, p);
    } catch (const ConstraintViolation& e) {
      return e.kind() == ConstraintViolation::Kind::malformed;
    }
    return false;
  };
  CHECK(malformed(single(2, 6, 1.0)));
  CHECK(malformed(single(2, 0, 1.0)));
  CHECK(malformed(single(-1, 1, 1.0)));
  CHECK(malformed(single(65, 1, 1.0)));
  CHECK(malformed(single(2, 1, std::nan(""))));
  CHECK(malformed({{{2, 1, 1.0}, {2, 1, 2.0}}}));

  SecondVariationOptions options;
  options.allow_translations = true;
  const auto null_mode = second_variation(s, single(1, 1, 1.0), options);
  CHECK(null_mode.lambda_ddot == 0.0);
  CHECK(null_mode.S_ddot == 0.0);
  options.k_max = 80;
  CHECK_NOTHROW(second_variation(s, single(70, 1, 1.0), options));
}

TEST_CASE("decomposition, signs, scaling and additivity on random spectra") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int draw = 0; draw < 100; ++draw) {
    const int n = 2 + draw % 5;
    const double R = 0.3 + 3.0 * unit(rng);
    const double alpha = n == 2 ? -0.3 - 20.0 * unit(rng) : alpha_star({n, R}) * (1.02 + 20.0 * unit(rng));
    const auto sol = solve_lambda({n, R}, alpha);
    const auto spec = random_spectrum(rng, n, 30);
    const auto rep = second_variation(sol, spec);
    const double u2 = sol.u_boundary_sq;
    const double t1 = 2.0 * u2 * sol.alpha * sol.K_const * rep.sum_b_sq;
    const double t2 = sol.alpha * u2 * rep.S_ddot;
    const double t3 = -2.0 * rep.Q_val;
    const double rebuilt = t1 + t2 + t3;
    CHECK(std::abs(rebuilt - rep.lambda_ddot) <= 1e-10 * std::abs(rep.lambda_ddot));
    CHECK(rep.lambda_ddot < 0.0);
    CHECK(rep.S_ddot > 0.0);
    CHECK(rep.Q_val > 0.0);

    const auto twice = second_variation(sol, spec.scaled(3.0));
    CHECK(twice.lambda_ddot == doctest::Approx(9.0 * rep.lambda_ddot).epsilon(1e-13));
    CHECK(twice.S_ddot == doctest::Approx(9.0 * rep.S_ddot).epsilon(1e-13));
    CHECK(twice.Q_val == doctest::Approx(9.0 * rep.Q_val).epsilon(1e-13));

    // Split into two disjoint halves; the forms add.
    PerturbationSpectrum left, right;
    for (std::size_t j = 0; j < spec.entries.size(); ++j) {
      (j % 2 ? right : left).entries.push_back(spec.entries[j]);
    }
    const auto a = second_variation(sol, left);
    const auto b = second_variation(sol, right);
    CHECK(a.lambda_ddot + b.lambda_ddot == doctest::Approx(rep.lambda_ddot).epsilon(1e-13));
    CHECK(a.S_ddot + b.S_ddot == doctest::Approx(rep.S_ddot).epsilon(1e-13));
    CHECK(a.Q_val + b.Q_val == doctest::Approx(rep.Q_val).epsilon(1e-13));

    const auto q = quant_ratio_check(sol, spec);
    CHECK(q.holds);
    CHECK(q.margin >= 0.0);
    const auto q10 = quant_ratio_check(sol, spec.scaled(10.0));
    CHECK(q10.ratio == doctest::Approx(q.ratio).epsilon(1e-13));
    CHECK(q10.margin == doctest::Approx(q.margin).epsilon(1e-12));
  }
}

TEST_CASE("quant bound") {
  const auto s = solve_lambda({3, 1.0}, -3.0);
  const auto qb = quant_bound(s);
  CHECK(qb.deficit_constant == doctest::Approx(3.0 / (4.0 * kPi)).epsilon(1e-10));
  CHECK(qb.ratio_bound == -qb.deficit_constant);

  const auto check = quant_ratio_check(s, single(2, 1, 1.0));
  CHECK(check.holds);
  CHECK(check.ratio == doctest::Approx(-49.0 / (24.0 * kPi)).epsilon(1e-10));
  CHECK(check.bound == doctest::Approx(-3.0 / (4.0 * kPi)).epsilon(1e-10));
  CHECK(check.margin == doctest::Approx(-3.0 / (4.0 * kPi) + 49.0 / (24.0 * kPi)).epsilon(1e-10));

  // Mixed spectrum: the ratio is a weighted mean of the per-mode ratios, so it
  // lies under the worst single mode.
  const PerturbationSpectrum mixed{{{2, 1, 1.0}, {5, 2, 0.3}}};
  const auto m = quant_ratio_check(s, mixed);
  CHECK(m.holds);
  const double worst = std::max(quant_ratio_check(s, single(2, 1, 1.0)).ratio,
                                quant_ratio_check(s, single(5, 2, 1.0)).ratio);
  CHECK(m.ratio <= worst);
  CHECK(worst <= m.bound);

  CHECK_THROWS_AS(quant_ratio_check(s, {}), DegenerateInput);
  CHECK_THROWS_AS(quant_ratio_check(s, single(2, 1, 0.0)), DegenerateInput);

  // Near alpha*, the constant stays finite and positive.
  double previous = 0.0;
  for (double gap : {1e-1, 1e-2, 1e-3, 1e-4}) {
    const auto near = solve_lambda({3, 1.0}, -1.0 - gap);
    const double c = quant_bound(near).deficit_constant;
    CHECK(c > 0.0);
    CHECK(std::isfinite(c));
    if (previous > 0.0) CHECK(c == doctest::Approx(previous).epsilon(0.2));
    previous = c;
  }

  const auto t = solve_lambda({2, 1.0}, -1.0);
  CHECK(quant_bound(t).deficit_constant == doctest::Approx(t.u_boundary_sq / 3.0).epsilon(1e-15));
  CHECK(quant_bound(t).deficit_constant > 0.0);
}

TEST_CASE("certify negativity") {
  const auto rep = certify_negativity(GridConfig::defaults());
  CHECK(rep.passed());
  CHECK(rep.metric("max_L") < 0.0);
  CHECK(rep.metric("sweep_max_L") < 0.0);
  CHECK(rep.metric("max_scaled_L_k1") <= 1e-9);
  CHECK(rep.metric("skipped_points") == 0.0);

  GridConfig one;
  one.dims = {3};
  one.radii = {1.0};
  one.alpha_absolute = {-3.0};
  one.k_min = one.k_max = 2;
  const auto spot = certify_negativity(one);
  CHECK(spot.passed());
  CHECK(spot.metric("max_L") == doctest::Approx(-49.0 / 6.0).epsilon(1e-12));

  GridConfig bad = one;
  bad.radii.clear();
  CHECK_THROWS_AS(certify_negativity(bad), DomainError);
}
