#include "dehnfill/torus_geometry.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "dehnfill/constants.hpp"
#include "dehnfill/errors.hpp"

namespace dehn {

TubeRadius TubeRadius::finite(double r) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw DomainError("tube radius must be a positive finite number, got " + std::to_string(r));
  }
  return TubeRadius{r};
}

TubeRadius TubeRadius::from_double(double r) {
  if (std::isinf(r) && r > 0.0) return infinite();
  return finite(r);
}

double TubeRadius::value() const {
  if (!value_) throw DomainError("tube radius is infinite");
  return *value_;
}

namespace {

double determinant(Vec2 a, Vec2 b) noexcept { return a.x1 * b.x2 - b.x1 * a.x2; }

double require_finite_radius(const TubeRadius& r, const char* what) {
  if (r.is_infinite()) throw DomainError(std::string(what) + " requires a finite tube radius");
  return r.value();
}

}  // namespace

TubularTorus::TubularTorus(TubeRadius radius, Vec2 holonomy_a, Vec2 holonomy_b)
    : radius_(radius), a_(holonomy_a), b_(holonomy_b) {
  const double det = determinant(a_, b_);
  const double scale = std::hypot(a_.x1, a_.x2) * std::hypot(b_.x1, b_.x2);
  if (!std::isfinite(det) || std::abs(det) <= 64.0 * std::numeric_limits<double>::epsilon() * scale) {
    throw DegenerateError("holonomy of the basis is linearly dependent");
  }
  if (det < 0.0) throw OrientationError("basis is negatively oriented");
}

TubularTorus TubularTorus::from_complex_lengths(TubeRadius radius, ComplexLength a,
                                                ComplexLength b) {
  const double r = require_finite_radius(radius, "from_complex_lengths");
  const double sh = std::sinh(r);
  const double ch = std::cosh(r);
  return TubularTorus(radius, Vec2{a.rot * sh, a.trans * ch}, Vec2{b.rot * sh, b.trans * ch});
}

Vec2 TubularTorus::holonomy(SlopeClass slope) const noexcept {
  return {slope.p * a_.x1 + slope.q * b_.x1, slope.p * a_.x2 + slope.q * b_.x2};
}

double TubularTorus::area() const noexcept { return determinant(a_, b_); }

PrincipalCurvatures principal_curvatures(TubeRadius radius) {
  if (radius.is_infinite()) return {1.0, 1.0};
  const double t = std::tanh(radius.value());
  return {1.0 / t, t};
}

PrincipalCurvatures principal_curvatures(double r) {
  return principal_curvatures(TubeRadius::from_double(r));
}

ComplexLength complex_length(const TubularTorus& torus, SlopeClass slope) {
  if (torus.radius().is_infinite()) return {0.0, 0.0};
  const double r = torus.radius().value();
  const Vec2 h = torus.holonomy(slope);
  return {h.x2 / std::cosh(r), h.x1 / std::sinh(r)};
}

double euclidean_length(const TubularTorus& torus, SlopeClass slope) {
  if (slope.p == 0.0 && slope.q == 0.0) throw DomainError("euclidean_length of the zero class");
  const Vec2 h = torus.holonomy(slope);
  return std::hypot(h.x1, h.x2);
}

double euclidean_length_from_complex(TubeRadius radius, ComplexLength length) {
  const double r = require_finite_radius(radius, "euclidean_length_from_complex");
  return std::hypot(std::cosh(r) * length.trans, std::sinh(r) * length.rot);
}

double visual_area(const TubularTorus& torus) {
  const double r = require_finite_radius(torus.radius(), "visual_area");
  return torus.area() / (std::sinh(r) * std::cosh(r));
}

double visual_area(ComplexLength a, ComplexLength b) {
  const double area = b.trans * a.rot - a.trans * b.rot;
  if (!(area > 0.0)) throw OrientationError("basis is not positively oriented (visual area <= 0)");
  return area;
}

double normalized_length(const TubularTorus& torus, SlopeClass slope) {
  return euclidean_length(torus, slope) / std::sqrt(torus.area());
}

SlopeClass surgery_coefficient(const TubularTorus& torus) {
  if (torus.radius().is_infinite()) {
    throw InfiniteCoefficientError("infinite coefficient: the cusp is complete");
  }
  const ComplexLength la = complex_length(torus, {1.0, 0.0});
  const ComplexLength lb = complex_length(torus, {0.0, 1.0});
  // [la.trans lb.trans; la.rot lb.rot] (p, q)^T = (0, 2 pi)^T
  const double det = la.trans * lb.rot - lb.trans * la.rot;
  const double scale = std::hypot(la.trans, la.rot) * std::hypot(lb.trans, lb.rot);
  if (!(std::abs(det) > 64.0 * std::numeric_limits<double>::epsilon() * scale)) {
    throw DegenerateError("complex length map is singular");
  }
  return {-lb.trans * kTwoPi / det, la.trans * kTwoPi / det};
}

}  // namespace dehn
