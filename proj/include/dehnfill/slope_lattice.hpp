#pragma once

// Cusp-shape lattice arithmetic at the complete structure. A cusp shape tau
// (Im tau > 0) presents the cusp torus as C / <1, tau> rescaled to unit area;
// the slope (p, q) is the curve p * 1 + q * tau.

#include <cstdint>
#include <vector>

namespace dehn {

class CuspShape {
 public:
  /// Throws DomainError unless im > 0 and both parts are finite.
  CuspShape(double re, double im);

  double re() const noexcept { return re_; }
  double im() const noexcept { return im_; }

 private:
  double re_;
  double im_;
};

/// Unimodular integer matrix acting on slope coordinates (column vectors).
struct SlopeMatrix {
  std::int64_t m00 = 1, m01 = 0, m10 = 0, m11 = 1;

  std::int64_t determinant() const noexcept { return m00 * m11 - m01 * m10; }
  void apply(std::int64_t p, std::int64_t q, std::int64_t& p_out, std::int64_t& q_out) const noexcept {
    p_out = m00 * p + m01 * q;
    q_out = m10 * p + m11 * q;
  }
  SlopeMatrix inverse() const noexcept;  ///< exact for determinant +-1

  friend bool operator==(const SlopeMatrix&, const SlopeMatrix&) = default;
};

struct ReducedShape {
  CuspShape shape;         ///< |Re tau'| <= 1/2 and |tau'| >= 1
  SlopeMatrix to_reduced;  ///< old slope coordinates -> reduced coordinates
};

struct Slope {
  std::int64_t p = 0;
  std::int64_t q = 0;
  friend bool operator==(const Slope&, const Slope&) = default;
};

struct ShortSlope {
  Slope slope;
  double lhat = 0.0;
};

/// |p + q tau| / sqrt(Im tau). Throws DomainError for the zero slope.
double slope_normalized_length(const CuspShape& shape, double p, double q);

/// Gauss reduction of the basis (1, tau) by SL(2, Z); the change of basis has
/// determinant +1, so orientation (Im tau' > 0) is preserved.
ReducedShape lattice_reduce(const CuspShape& shape);

/// Primitive slopes (gcd(|p|, |q|) = 1) with normalized length <= cutoff, one
/// representative per +- pair (p > 0, or p = 0 and q > 0), sorted by
/// (lhat, p, q). Throws DomainError unless cutoff > 0.
std::vector<ShortSlope> enumerate_short_slopes(const CuspShape& shape, double cutoff);

/// (p, q) or (-p, -q), whichever has p > 0, or p = 0 and q > 0.
Slope canonical_slope(Slope s) noexcept;

}  // namespace dehn
