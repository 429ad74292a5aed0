#pragma once

// Decision procedure and geometric bounds for hyperbolic Dehn filling.
//
// Surgery coefficients whose normalized lengths satisfy
//     sum_i 1 / L_i^2 < 1 / C^2,   C = 7.5832,
// are reached by a radial deformation from the complete structure with the
// filled tube radius kept above R0 = arctanh(1/sqrt3). For such coefficients
// the drop in volume and the total visual area of the filled manifold are
// bracketed by integrals over the envelope.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dehnfill/envelope.hpp"

namespace dehn {

/// The universal threshold as stated (governs every decision).
inline constexpr double kCertificationThreshold = 7.5832;

/// sqrt((2 pi)^2 / f(1/sqrt3)) ~ 7.58315, the value the threshold rounds.
double derived_threshold(const Envelope& env = default_envelope());

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

struct FillingCertificate {
  std::vector<double> per_cusp_lhat;
  double combined_lhat = 0.0;
  bool certified = false;
  double margin = 0.0;  ///< 1/C^2 - sum 1/L_i^2
  std::optional<double> tube_radius_floor;
  std::optional<Interval> volume_drop;
  std::optional<Interval> visual_area;
  std::optional<double> core_length_hi;
  std::optional<double> z_hat;
  std::optional<double> z_tilde;
};

/// L with 1/L^2 = sum 1/L_i^2. +infinity entries (complete cusps) contribute
/// nothing. Throws DomainError for an empty list or a non-positive entry.
double combine_normalized_lengths(std::span<const double> lhats);

/// Decision fields only: certified, margin, combined length and, when
/// certified, the tube-radius floor R0. Equality with the threshold is not
/// certified.
FillingCertificate certify(std::span<const double> lhats);

/// certify() plus the volume, visual-area and core-length bounds when certified.
FillingCertificate certify_with_bounds(std::span<const double> lhats,
                                       const Envelope& env = default_envelope());

/// ẑ = invert_f(x̂) and z̃ = invert_ftilde(x̂) for x̂ = (2 pi)^2 / L^2.
struct EnvelopeRoots {
  double x_hat = 0.0;
  double z_hat = 1.0;
  double z_tilde = 1.0;
};

/// Throws UncertifiableError if lhat < C.
EnvelopeRoots envelope_roots(double lhat, const Envelope& env = default_envelope());

/// Bounds on V_infinity - vol(M(c)):
///   lo = 1/4 int_{z~}^1 H'/(H (H - G~)),  hi = 1/4 int_{ẑ}^1 H'/(H (H + G)).
/// Throws UncertifiableError if lhat < C.
Interval volume_drop_bounds(double lhat, const Envelope& env = default_envelope());

/// [1/H(z~), 1/H(ẑ)]. Throws UncertifiableError if lhat < C.
Interval visual_area_bounds(double lhat, const Envelope& env = default_envelope());

/// Upper bound on the length of a smooth core geodesic: visual_area.hi / 2 pi.
double core_length_bound(double lhat, const Envelope& env = default_envelope());

/// The same bounds parametrized by x̂ in [0, f(z*)], without the threshold
/// check (used for the figure tables).
Interval volume_drop_bounds_at(double x_hat, const Envelope& env = default_envelope());
Interval visual_area_bounds_at(double x_hat, const Envelope& env = default_envelope());

struct SchlafliStep {
  double visual_area = 0.0;
  double alpha = 0.0;
  double d_alpha = 0.0;
};

/// dV = -(A / (2 alpha)) d alpha. Throws DomainError unless alpha > 0 and A > 0.
double schlafli_dV(const SchlafliStep& step);

struct FigureTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Data behind the three published graphs, sampled at `samples` equally spaced
/// x values in [0, f(1/sqrt3)]:
///   1: x, area_lower, area_upper
///   2: x_hat, volume_drop_lower, volume_drop_upper, neumann_zagier
///   3: x_hat, area_lower, area_upper, neumann_zagier
/// The neumann_zagier column is the asymptote pi^2/L^2 = x̂/4 (figure 2) or
/// (2 pi)^2/L^2 = x̂ (figure 3). Throws DomainError for an unknown figure or
/// fewer than two samples.
FigureTable figure_data(int which, std::size_t samples, const Envelope& env = default_envelope());

}  // namespace dehn
