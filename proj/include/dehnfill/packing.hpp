#pragma once

// Tube-packing bounds relating the total visual area of the boundary to the
// tube radius of the filled manifold.
//
// The coefficients 3.3957 and 0.980258 are kept as the published truncated
// decimals: every certified bound downstream is stated with them, and a
// tighter recomputation would change certified outputs. Their provenance is
// checked in the tests instead.

namespace dehn {

struct PackingConstants {
  /// Upper bound on the packing density of the bumping ellipses.
  double density_ratio;
  /// S = (1/(2 sqrt 2)) / arcsinh(1/(2 sqrt 2)), the sinh-convexity slope.
  double s_constant;
  /// Coefficient of h(r) = 3.3957 tanh r / cosh 2r.
  double h_coefficient;
  /// Truncated 1/S used for the ellipse semi-axes.
  double axis_coefficient;
};

/// The constants above; density_ratio and s_constant are computed, the other
/// two are the literal decimals.
const PackingConstants& packing_constants();

struct EllipseAxes {
  double a = 0.0;  ///< along the longitudinal (zeta) direction
  double b = 0.0;  ///< along the meridional (theta) direction
};

/// Lower bound for the total visual area when the filled manifold has tube
/// radius r: h(r) = 3.3957 tanh r / cosh 2r. Throws DomainError for r <= 0.
double visual_area_lower_bound(double r);

/// Derivative of h, used for the monotonicity checks.
double visual_area_lower_bound_derivative(double r);

/// Semi-axes of the disjoint ellipses a bump of radius R leaves on a torus of
/// tube radius R_i >= R. With R_i = R these are the bumping-ellipse axes.
/// Throws DomainError unless 0 < R <= R_i.
EllipseAxes ellipse_axes(double tube_radius_i, double bump_radius);

/// Lower bound c(R) = 0.980258 / (coth R + 1) on the Euclidean injectivity
/// radius of boundary tori after truncation. Accepts R = +infinity.
double boundary_injectivity_bound(double r);

}  // namespace dehn
