#pragma once

// Closed-form geometry of tubular boundary tori.
//
// A tubular torus T_R is the boundary of an embedded tube of radius R about a
// geodesic (or, for R = infinity, a horospherical cusp cross-section). Its flat
// metric is recorded as the Euclidean holonomy of a homology basis (a, b),
// expressed in the principal-curvature frame: x1 runs along the direction of
// curvature k1 = coth R, x2 along k2 = tanh R.
//
// Sign convention: the complex length is only defined up to an overall sign.
// We fix it by the stored basis, which must be positively oriented
// (x1(a) x2(b) - x1(b) x2(a) > 0), and by taking
//     L(gamma) = x2 / cosh R + i x1 / sinh R.

#include <optional>

namespace dehn {

/// Tube radius in hyperbolic units: either a positive finite real or +infinity.
class TubeRadius {
 public:
  /// Throws DomainError unless 0 < r < infinity.
  static TubeRadius finite(double r);
  static TubeRadius infinite() noexcept { return TubeRadius{}; }
  /// Accepts +infinity as the horospherical case.
  static TubeRadius from_double(double r);

  bool is_infinite() const noexcept { return !value_.has_value(); }
  /// Throws DomainError for the infinite radius.
  double value() const;

  friend bool operator==(const TubeRadius&, const TubeRadius&) = default;

 private:
  TubeRadius() = default;
  explicit TubeRadius(double r) : value_(r) {}
  std::optional<double> value_;
};

/// A translation of the flat torus, in the principal frame.
struct Vec2 {
  double x1 = 0.0;
  double x2 = 0.0;
};

/// Real homology class p*a + q*b relative to a torus's stored basis.
struct SlopeClass {
  double p = 0.0;
  double q = 0.0;
};

/// trans = signed translation length, rot = total rotation (not reduced mod 2pi).
struct ComplexLength {
  double trans = 0.0;
  double rot = 0.0;

  friend ComplexLength operator+(ComplexLength a, ComplexLength b) noexcept {
    return {a.trans + b.trans, a.rot + b.rot};
  }
  friend ComplexLength operator*(double s, ComplexLength c) noexcept {
    return {s * c.trans, s * c.rot};
  }
};

struct PrincipalCurvatures {
  double k1 = 1.0;  ///< coth R, the larger one
  double k2 = 1.0;  ///< tanh R
};

class TubularTorus {
 public:
  /// Throws DegenerateError if the holonomy vectors are dependent and
  /// OrientationError if the basis is negatively oriented.
  TubularTorus(TubeRadius radius, Vec2 holonomy_a, Vec2 holonomy_b);

  /// Builds the torus at radius R whose basis has the given complex lengths,
  /// i.e. h(c) = (rot sinh R, trans cosh R). Requires a finite radius.
  static TubularTorus from_complex_lengths(TubeRadius radius, ComplexLength a,
                                           ComplexLength b);

  const TubeRadius& radius() const noexcept { return radius_; }
  Vec2 holonomy_a() const noexcept { return a_; }
  Vec2 holonomy_b() const noexcept { return b_; }

  /// Real-linear extension of the holonomy to H_1(T; R).
  Vec2 holonomy(SlopeClass slope) const noexcept;

  /// Area of the fundamental parallelogram (positive by construction).
  double area() const noexcept;

 private:
  TubeRadius radius_;
  Vec2 a_;
  Vec2 b_;
};

/// (coth R, tanh R); (1, 1) for the horospherical torus.
PrincipalCurvatures principal_curvatures(TubeRadius radius);
/// Same, accepting +infinity. Throws DomainError for r <= 0 or NaN.
PrincipalCurvatures principal_curvatures(double r);

/// Zero for every class when the radius is infinite.
ComplexLength complex_length(const TubularTorus& torus, SlopeClass slope);

/// |h(slope)|; throws DomainError for the zero class.
double euclidean_length(const TubularTorus& torus, SlopeClass slope);

/// The same length recovered from the complex length:
/// L^2 = (cosh R trans)^2 + (sinh R rot)^2. Requires a finite radius.
double euclidean_length_from_complex(TubeRadius radius, ComplexLength length);

/// area(T_R) / (sinh R cosh R). Requires a finite radius.
double visual_area(const TubularTorus& torus);

/// l_b theta_a - l_a theta_b for a positively oriented basis (a, b); throws
/// OrientationError if the result is not positive.
double visual_area(ComplexLength a, ComplexLength b);

/// L / sqrt(area); invariant under rescaling of the flat metric.
double normalized_length(const TubularTorus& torus, SlopeClass slope);

/// The unique real class c with complex_length(c) = 2 pi i.
/// Throws InfiniteCoefficientError for a horospherical torus.
SlopeClass surgery_coefficient(const TubularTorus& torus);

}  // namespace dehn
