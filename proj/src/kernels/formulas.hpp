#pragma once

// Scalar reference formulas shared by the scalar kernels and the public
// pointwise functions. The AVX2 variants mirror these expressions operation
// for operation; keep them in sync.

#include <cmath>

namespace dehn::kernels::detail {

/// Coefficient of h(r) = 3.3957 tanh r / cosh 2r.
inline constexpr double kPackingCoefficient = 3.3957;

inline double envelope_F(double z) noexcept {
  const double z2 = z * z;
  const double q = 1.0 + z2;
  const double num = 1.0 + 4.0 * z + 6.0 * z2 + z2 * z2;
  const double den = (z + 1.0) * (q * q);
  return -num / den;
}

inline double envelope_Ftilde(double z) noexcept {
  const double z2 = z * z;
  const double z3 = z2 * z;
  const double num = z3 * z3 + 7.0 * (z2 * z2) + 12.0 * z3 - 9.0 * z2 - 4.0 * z + 1.0;
  const double den = (z + 1.0) * (z2 + 1.0) * ((z2 - 2.0 * z) - 1.0) * ((z2 + 2.0 * z) - 1.0);
  return -num / den;
}

// With A = 1/H = 3.3957 z (1 - z^2) / (1 + z^2) we have H'/H^2 = -A', and
//   -A' = 3.3957 (z^4 + 4 z^2 - 1) / (1 + z^2)^2,
//   G/H  = (1 - z^2) / (2 z^2),
//   G~/H = (1 - z^4) / (2 z^2 (3 - z^2)).
// These forms stay finite at z = 1 where H has a pole.
inline double minus_area_slope(double z2) noexcept {
  const double q = 1.0 + z2;
  return kPackingCoefficient * ((z2 * z2 + 4.0 * z2) - 1.0) / (q * q);
}

inline double envelope_volume_upper(double z) noexcept {
  const double z2 = z * z;
  return minus_area_slope(z2) * ((2.0 * z2) / (1.0 + z2));
}

inline double envelope_volume_lower(double z) noexcept {
  const double z2 = z * z;
  const double t = 2.0 * z2 * (3.0 - z2);
  return minus_area_slope(z2) * (t / ((6.0 * z2 - z2 * z2) - 1.0));
}

inline double slope_length(double tau_re, double tau_im, double sqrt_im_tau, double p,
                           double q) noexcept {
  const double re = p + q * tau_re;
  const double im = q * tau_im;
  return std::sqrt(re * re + im * im) / sqrt_im_tau;
}

}  // namespace dehn::kernels::detail
