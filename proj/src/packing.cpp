#include "dehnfill/packing.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dehnfill/errors.hpp"

namespace dehn {

namespace {

constexpr double kHCoefficient = 3.3957;
constexpr double kAxisCoefficient = 0.980258;

void require_positive(double r, const char* what) {
  if (!(r > 0.0)) throw DomainError(std::string(what) + ": radius must be positive");
}

}  // namespace

const PackingConstants& packing_constants() {
  static const PackingConstants constants = [] {
    const double t = 1.0 / (2.0 * std::numbers::sqrt2);
    return PackingConstants{std::numbers::pi / (2.0 * std::numbers::sqrt3), t / std::asinh(t),
                            kHCoefficient, kAxisCoefficient};
  }();
  return constants;
}

double visual_area_lower_bound(double r) {
  require_positive(r, "h(r)");
  if (std::isinf(r)) return 0.0;
  return kHCoefficient * std::tanh(r) / std::cosh(2.0 * r);
}

double visual_area_lower_bound_derivative(double r) {
  require_positive(r, "h'(r)");
  if (std::isinf(r)) return 0.0;
  // d/dr [tanh r / cosh 2r] = sech^2 r / cosh 2r - 2 tanh r sinh 2r / cosh^2 2r
  const double c2 = std::cosh(2.0 * r);
  const double sech = 1.0 / std::cosh(r);
  return kHCoefficient * (sech * sech / c2 - 2.0 * std::tanh(r) * std::sinh(2.0 * r) / (c2 * c2));
}

EllipseAxes ellipse_axes(double tube_radius_i, double bump_radius) {
  require_positive(bump_radius, "ellipse_axes");
  if (!(bump_radius <= tube_radius_i) || !std::isfinite(tube_radius_i)) {
    throw DomainError("ellipse_axes requires 0 < R <= R_i < infinity");
  }
  const double r = bump_radius;
  const double ri = tube_radius_i;
  return {kAxisCoefficient * std::sinh(r) * std::cosh(ri) / std::cosh(ri + r),
          std::sinh(r) * std::sinh(ri) / std::sinh(ri + r)};
}

double boundary_injectivity_bound(double r) {
  require_positive(r, "boundary_injectivity_bound");
  return kAxisCoefficient / (1.0 / std::tanh(r) + 1.0);
}

}  // namespace dehn
