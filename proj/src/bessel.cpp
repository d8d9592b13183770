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

#include "robinext/bessel.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "robinext/errors.hpp"

namespace robinext {
namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209;
constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// K_0, K_1 use the power series up to here, the Temme/Steed continued
// fraction up to kAsymptoticLimit, and the large-argument series beyond.
constexpr double kSeriesLimit = 2.0;
constexpr double kAsymptoticLimit = 30.0;

void require_argument(double z, const char* op) {
  if (!(z > 0.0) || !std::isfinite(z)) {
    throw DomainError(std::string(op) + ": argument z must be positive and finite, got " +
                      std::to_string(z));
  }
}

void require_dimension(int n, const char* op) {
  if (n < 2) {
    throw DomainError(std::string(op) + ": dimension n must be >= 2, got " + std::to_string(n));
  }
}

struct KPair {
  double k0;
  double k1;
};

// Unscaled K_0, K_1 from the series with the logarithmic term.
KPair k01_series(double z) {
  const double t = 0.25 * z * z;
  const double log_half = std::log(0.5 * z);
  double term0 = 1.0;  // t^k / (k!)^2
  double term1 = 1.0;  // t^k / (k! (k+1)!)
  double harmonic = 0.0;
  double i0 = 0.0, i1 = 0.0, s0 = 0.0, s1 = 0.0;
  for (int k = 0; k < 64; ++k) {
    const double psi_k1 = harmonic - kEulerGamma;
    const double psi_k2 = psi_k1 + 1.0 / (k + 1.0);
    i0 += term0;
    s0 += term0 * psi_k1;
    i1 += term1;
    s1 += term1 * (psi_k1 + psi_k2);
    if (term0 < 1e-18 * i0 && term1 < 1e-18 * i1) break;
    harmonic += 1.0 / (k + 1.0);
    term0 *= t / ((k + 1.0) * (k + 1.0));
    term1 *= t / ((k + 1.0) * (k + 2.0));
  }
  i1 *= 0.5 * z;
  return {-log_half * i0 + s0, 1.0 / z + log_half * i1 - 0.25 * z * s1};
}

struct Cf2 {
  double scaled_k;  // e^z K_mu(z)
  double shift;     // z K_{mu+1}(z) / K_mu(z) - z
};

// Steed's evaluation of Temme's continued fraction for |mu| <= 1/2, z >= 2.
Cf2 k_continued_fraction(double mu, double z) {
  const double a1 = 0.25 - mu * mu;
  double b = 2.0 * (1.0 + z);
  double d = 1.0 / b;
  double h = d;
  double delh = d;
  double q1 = 0.0;
  double q2 = 1.0;
  double q = a1;
  double c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  int i = 2;
  for (; i <= 100000; ++i) {
    a -= 2.0 * (i - 1);
    c = -a * c / i;
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels) < 0.25 * kEps * std::abs(s) && std::abs(delh) < 0.25 * kEps * std::abs(h)) {
      break;
    }
  }
  if (i > 100000) throw SolverFailure("K continued fraction did not converge");
  h *= a1;
  return {std::sqrt(kPi / (2.0 * z)) / s, mu + 0.5 - h};
}

// e^z K_nu(z) from the large-argument expansion, summed to its smallest term.
double k_asymptotic_scaled(double nu, double z) {
  const double mu4 = 4.0 * nu * nu;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 400; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = term * (mu4 - odd * odd) / (8.0 * k * z);
    if (std::abs(next) >= std::abs(term)) break;
    term = next;
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return std::sqrt(kPi / (2.0 * z)) * sum;
}

KPair k01_scaled(double z) {
  if (z <= kSeriesLimit) {
    const KPair p = k01_series(z);
    const double e = std::exp(z);
    return {p.k0 * e, p.k1 * e};
  }
  if (z < kAsymptoticLimit) {
    const Cf2 cf = k_continued_fraction(0.0, z);
    return {cf.scaled_k, cf.scaled_k * (z + cf.shift) / z};
  }
  return {k_asymptotic_scaled(0.0, z), k_asymptotic_scaled(1.0, z)};
}

// g_2(z) = z K_1(z) / K_0(z) - z.
double shift_two(double z) {
  if (z <= kSeriesLimit) {
    const KPair p = k01_series(z);
    return z * (p.k1 - p.k0) / p.k0;
  }
  return k_continued_fraction(0.0, z).shift;
}

double scaled_I(BesselOrder order, double z) {
  const bool half = order.is_half_integer();
  const double offset = half ? 0.5 : 0.0;
  const int target = static_cast<int>(order.twice_order / 2);  // order = target + offset
  const double reach = std::max(static_cast<double>(target), std::ceil(z));
  const int start = static_cast<int>(reach) + 30 + static_cast<int>(std::ceil(std::sqrt(80.0 * (reach + 1.0))));

  constexpr double kRescale = 1e200;
  double above = 0.0;  // I at index j + 1
  double cur = 1.0;    // I at index j
  double result = 0.0;
  double sum = 0.0;  // I_0 + 2 sum_{k>=1} I_k for integer orders
  for (int j = start; j >= 1; --j) {
    const double below = above + (2.0 * (j + offset) / z) * cur;
    above = cur;
    cur = below;
    if (!half) sum += 2.0 * above;
    if (j - 1 == target) result = cur;
    if (std::abs(cur) > kRescale) {
      cur /= kRescale;
      above /= kRescale;
      sum /= kRescale;
      result /= kRescale;
    }
  }
  if (!half) {
    sum += cur;
    return result / sum;
  }
  // Normalize with e^{-z} I_{1/2}(z) = sqrt(2/(pi z)) (1 - e^{-2z}) / 2.
  const double exact_half = std::sqrt(2.0 / (kPi * z)) * (-0.5 * std::expm1(-2.0 * z));
  return result / cur * exact_half;
}

ScaledValue finish(double scaled_value, double log_factor, Scaling scaling, const char* op) {
  if (!std::isfinite(scaled_value) || !(scaled_value > 0.0)) {
    throw RangeError(std::string(op) + ": value not representable even in scaled form");
  }
  if (scaling == Scaling::scaled) return {scaled_value, true};
  const double v = scaled_value * std::exp(log_factor);
  if (!std::isfinite(v) || v < std::numeric_limits<double>::min()) {
    throw RangeError(std::string(op) +
                     ": unscaled value leaves the double range; request Scaling::scaled");
  }
  return {v, false};
}

}  // namespace

std::vector<double> scaled_K_sequence(BesselOrder order, double z, std::size_t count) {
  require_argument(z, "modified_bessel_K");
  std::vector<double> out;
  out.reserve(count);
  if (count == 0) return out;

  double lo;
  double hi;  // seeds at orders base and base + 1
  double base;
  if (order.is_half_integer()) {
    base = 0.5;
    lo = std::sqrt(kPi / (2.0 * z));
    hi = lo * (1.0 + 1.0 / z);
  } else {
    base = 0.0;
    const KPair p = k01_scaled(z);
    lo = p.k0;
    hi = p.k1;
  }
  const double first = order.value();
  for (double nu = base;; nu += 1.0) {
    if (nu >= first - 0.25) out.push_back(lo);
    if (out.size() == count) break;
    const double next = lo + (2.0 * (nu + 1.0) / z) * hi;
    lo = hi;
    hi = next;
    if (!std::isfinite(lo)) throw RangeError("modified_bessel_K: scaled value overflows");
  }
  return out;
}

ScaledValue modified_bessel_K(BesselOrder order, double z, Scaling scaling) {
  const double s = scaled_K_sequence(order, z, 1).front();
  return finish(s, -z, scaling, "modified_bessel_K");
}

ScaledValue modified_bessel_I(BesselOrder order, double z, Scaling scaling) {
  require_argument(z, "modified_bessel_I");
  return finish(scaled_I(order, z), z, scaling, "modified_bessel_I");
}

double ratio_shift(int n, double z) {
  require_dimension(n, "ratio_f");
  require_argument(z, "ratio_f");
  int m = (n % 2 == 0) ? 2 : 3;
  double g = (m == 2) ? shift_two(z) : 1.0;
  for (; m < n; m += 2) g = m - z * g / (z + g);
  return g;
}

std::vector<double> ratio_shift_chain(int n, double z, std::size_t count) {
  std::vector<double> out;
  out.reserve(count);
  if (count == 0) return out;
  double g = ratio_shift(n, z);
  out.push_back(g);
  for (int m = n; out.size() < count; m += 2) {
    g = m - z * g / (z + g);
    out.push_back(g);
  }
  return out;
}

double ratio_f(int n, double z) { return z + ratio_shift(n, z); }

double gap_from_shift(int n, double z, double shift) {
  const double nm1 = n - 1.0;
  return z * (2.0 * shift - nm1) + shift * (shift - nm1);
}

double gap_a(int n, double z) { return gap_from_shift(n, z, ratio_shift(n, z)); }

SeguraBounds segura_bounds(int n, double z) {
  require_dimension(n, "segura_bounds");
  require_argument(z, "segura_bounds");
  // c + sqrt(c^2 + z^2) - z  ==  c + c^2 / (sqrt(c^2 + z^2) + z)
  const auto shifted = [z](double c) { return c + c * c / (std::hypot(c, z) + z); };
  const double lo_c = 0.5 * (n - 2);
  const double hi_c = 0.5 * (n - 1);
  SeguraBounds b;
  b.lower_shift = shifted(lo_c);
  b.upper_shift = shifted(hi_c);
  b.lower = z + b.lower_shift;
  b.upper = z + b.upper_shift;
  return b;
}

SeguraBracket segura_bracket(int n, double y) {
  require_dimension(n, "segura_bracket");
  if (!(y > n - 2.0) || !std::isfinite(y)) {
    throw DomainError("segura_bracket: y must exceed n - 2 (no discrete eigenvalue otherwise)");
  }
  // Inverting the upper and lower bound respectively.
  return {std::sqrt(std::max(0.0, y * (y - (n - 1.0)))), std::sqrt(y * (y - (n - 2.0)))};
}

IdentityResiduals identity_residuals(BesselOrder order, double z) {
  require_argument(z, "identity_residuals");
  const double m = order.value();
  const std::vector<double> k = scaled_K_sequence(order, z, 3);

  IdentityResiduals r;
  r.recurrence = std::abs(k[2] - (2.0 * m + 2.0) * k[1] / z - k[0]) / k[2];

  // Central difference of the scaled function S(t) = e^t K_m(t), which varies
  // slowly; K_m'/K_m = S'/S - 1.
  const double h = z * 1e-6;
  const double up = modified_bessel_K(order, z + h, Scaling::scaled).mantissa;
  const double down = modified_bessel_K(order, z - h, Scaling::scaled).mantissa;
  const double fd = (up - down) / (2.0 * h * k[0]) - 1.0;
  const double exact = -k[1] / k[0] + m / z;
  r.derivative = std::abs(fd - exact) / std::abs(exact);

  const double i0 = modified_bessel_I(order, z, Scaling::scaled).mantissa;
  const double i1 = modified_bessel_I(order.plus(1), z, Scaling::scaled).mantissa;
  r.cross = std::abs(z * (i0 * k[1] + i1 * k[0]) - 1.0);

  const double log_k = std::log(k[0]) - z;
  if (order.twice_order == 0) {
    r.small_argument = std::exp(log_k) / -(std::log(0.5 * z) + kEulerGamma);
  } else {
    r.small_argument = std::exp(log_k - (std::lgamma(m) - std::log(2.0) + m * std::log(2.0 / z)));
  }
  return r;
}

}  // namespace robinext
