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

#ifndef ROBINEXT_BESSEL_HPP
#define ROBINEXT_BESSEL_HPP

// Modified Bessel functions K_m, I_m of integer and half-integer order, and the
// ratio family f_n(z) = z K_{n/2}(z) / K_{(n-2)/2}(z) with its gap function
// a_n(z) = f_n(z)^2 - (n-1) f_n(z) - z^2.

#include <cstddef>
#include <vector>

namespace robinext {

/// Order m = twice_order / 2, exact for integers and half-integers.
struct BesselOrder {
  unsigned twice_order = 0;

  static constexpr BesselOrder integer(unsigned m) { return {2 * m}; }
  /// Order j + 1/2.
  static constexpr BesselOrder half(unsigned j) { return {2 * j + 1}; }
  /// Order (n - 2)/2, the radial order of the exterior ball in dimension n.
  static constexpr BesselOrder radial(unsigned n) { return {n - 2}; }

  constexpr double value() const { return 0.5 * twice_order; }
  constexpr bool is_half_integer() const { return twice_order % 2 == 1; }
  constexpr BesselOrder plus(unsigned steps) const { return {twice_order + 2 * steps}; }

  friend constexpr bool operator==(BesselOrder, BesselOrder) = default;
};

enum class Scaling { unscaled, scaled };

/// A strictly positive Bessel value. When `scaled` is true the mantissa holds
/// e^z K_m(z) for K, or e^{-z} I_m(z) for I.
struct ScaledValue {
  double mantissa = 0.0;
  bool scaled = false;
};

/// K_m(z) for z > 0. Throws DomainError for z <= 0 and RangeError when the
/// unscaled value under- or overflows (use Scaling::scaled there).
ScaledValue modified_bessel_K(BesselOrder order, double z, Scaling scaling = Scaling::unscaled);

/// I_m(z) for z > 0 by normalized downward recurrence. Only used to validate
/// identities; accuracy target is 1e-10 relative.
ScaledValue modified_bessel_I(BesselOrder order, double z, Scaling scaling = Scaling::unscaled);

/// e^z K_m(z) for every m in [order, order + count).
std::vector<double> scaled_K_sequence(BesselOrder order, double z, std::size_t count);

/// f_n(z) for n >= 2, z > 0.
double ratio_f(int n, double z);

/// f_n(z) - z, computed without cancellation. Lies in [0, n-1) and tends to
/// (n-1)/2 as z grows.
double ratio_shift(int n, double z);

/// Shifts g_n, g_{n+2}, ..., g_{n+2(count-1)} at a common z.
std::vector<double> ratio_shift_chain(int n, double z, std::size_t count);

/// a_n(z) for n >= 2, z > 0.
double gap_a(int n, double z);

/// a_n(z) from a precomputed shift g = f_n(z) - z.
double gap_from_shift(int n, double z, double shift);

/// Two-sided bounds on f_n(z) from the ratio inequality
///   (n-2)/2 + sqrt((n-2)^2/4 + z^2) <= f_n(z) <= (n-1)/2 + sqrt((n-1)^2/4 + z^2).
/// The *_shift members are the same bounds minus z.
struct SeguraBounds {
  double lower = 0.0;
  double upper = 0.0;
  double lower_shift = 0.0;
  double upper_shift = 0.0;
};

SeguraBounds segura_bounds(int n, double z);

/// Bracket for the root of f_n(z) = y: f_n(z_lo) <= y <= f_n(z_hi).
/// Throws DomainError unless y > n - 2.
struct SeguraBracket {
  double z_lo = 0.0;
  double z_hi = 0.0;
};

SeguraBracket segura_bracket(int n, double y);

/// Relative residuals of standard identities at (m, z).
struct IdentityResiduals {
  double recurrence = 0.0;      // K_{m+2} = (2m+2) K_{m+1}/z + K_m
  double derivative = 0.0;      // K_m' = -K_{m+1} + m K_m / z, central difference h = z 1e-6
  double cross = 0.0;           // I_m K_{m+1} + I_{m+1} K_m = 1/z
  double small_argument = 0.0;  // K_m(z) divided by its leading small-z form
};

IdentityResiduals identity_residuals(BesselOrder order, double z);

}  // namespace robinext

#endif  // ROBINEXT_BESSEL_HPP
