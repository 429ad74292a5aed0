#include "dehnfill/certificates.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "dehnfill/constants.hpp"
#include "dehnfill/errors.hpp"
#include "dehnfill/kernels/kernels.hpp"
#include "dehnfill/quadrature.hpp"

namespace dehn {

namespace {

constexpr double kVolumeQuadTolerance = 1e-12;

double threshold_inverse_square() noexcept {
  return 1.0 / (kCertificationThreshold * kCertificationThreshold);
}

double x_hat_of(double lhat) { return kTwoPi * kTwoPi / (lhat * lhat); }

void require_certifiable(double lhat) {
  if (!(lhat >= kCertificationThreshold)) {
    throw UncertifiableError("uncertifiable: normalized length " + std::to_string(lhat) +
                             " is below the threshold 7.5832");
  }
}

// -z^4 + 6 z^2 - 1 > 0 exactly when z > sqrt2 - 1, which is H > G~.
bool dominates_gtilde(double z) { return (6.0 * z * z - z * z * z * z) - 1.0 > 0.0; }

double quarter_integral(kernels::EnvelopeIntegrand which, double from) {
  if (from >= 1.0) return 0.0;
  const BatchIntegrand f = [which](std::span<const double> z, std::span<double> out) {
    kernels::evaluate_envelope(which, z, out);
  };
  return 0.25 * integrate(f, from, 1.0, {kVolumeQuadTolerance, 4096}).value;
}

double area_at(double z) { return z >= 1.0 ? 0.0 : 1.0 / envelope::H(z); }

}  // namespace

double derived_threshold(const Envelope& env) {
  return std::sqrt(kTwoPi * kTwoPi / env.f(kTanhR0));
}

double combine_normalized_lengths(std::span<const double> lhats) {
  if (lhats.empty()) throw DomainError("combine_normalized_lengths: empty list");
  double sum = 0.0;
  for (double l : lhats) {
    if (!(l > 0.0)) throw DomainError("normalized lengths must be positive");
    sum += 1.0 / (l * l);
  }
  return sum == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / std::sqrt(sum);
}

FillingCertificate certify(std::span<const double> lhats) {
  FillingCertificate cert;
  cert.per_cusp_lhat.assign(lhats.begin(), lhats.end());
  cert.combined_lhat = combine_normalized_lengths(lhats);
  double sum = 0.0;
  for (double l : lhats) sum += 1.0 / (l * l);
  cert.margin = threshold_inverse_square() - sum;
  cert.certified = sum < threshold_inverse_square();
  if (cert.certified) cert.tube_radius_floor = kR0;
  return cert;
}

FillingCertificate certify_with_bounds(std::span<const double> lhats, const Envelope& env) {
  FillingCertificate cert = certify(lhats);
  if (!cert.certified) return cert;
  const double x_hat = std::isinf(cert.combined_lhat) ? 0.0 : x_hat_of(cert.combined_lhat);
  const double z_hat = env.invert_f(x_hat);
  const double z_tilde = env.invert_ftilde(x_hat);
  cert.z_hat = z_hat;
  cert.z_tilde = z_tilde;
  cert.volume_drop = volume_drop_bounds_at(x_hat, env);
  cert.visual_area = Interval{area_at(z_tilde), area_at(z_hat)};
  cert.core_length_hi = cert.visual_area->hi / kTwoPi;
  return cert;
}

EnvelopeRoots envelope_roots(double lhat, const Envelope& env) {
  require_certifiable(lhat);
  const double x_hat = std::isinf(lhat) ? 0.0 : x_hat_of(lhat);
  return {x_hat, env.invert_f(x_hat), env.invert_ftilde(x_hat)};
}

Interval volume_drop_bounds_at(double x_hat, const Envelope& env) {
  const double z_hat = env.invert_f(x_hat);
  const double z_tilde = env.invert_ftilde(x_hat);
  if (z_tilde < 1.0 && !dominates_gtilde(z_tilde)) {
    throw NumericalError("H > G~ fails on the lower-bound integration interval");
  }
  return {quarter_integral(kernels::EnvelopeIntegrand::volume_lower, z_tilde),
          quarter_integral(kernels::EnvelopeIntegrand::volume_upper, z_hat)};
}

Interval visual_area_bounds_at(double x_hat, const Envelope& env) {
  return {area_at(env.invert_ftilde(x_hat)), area_at(env.invert_f(x_hat))};
}

Interval volume_drop_bounds(double lhat, const Envelope& env) {
  require_certifiable(lhat);
  return volume_drop_bounds_at(std::isinf(lhat) ? 0.0 : x_hat_of(lhat), env);
}

Interval visual_area_bounds(double lhat, const Envelope& env) {
  require_certifiable(lhat);
  return visual_area_bounds_at(std::isinf(lhat) ? 0.0 : x_hat_of(lhat), env);
}

double core_length_bound(double lhat, const Envelope& env) {
  return visual_area_bounds(lhat, env).hi / kTwoPi;
}

double schlafli_dV(const SchlafliStep& step) {
  if (!(step.alpha > 0.0)) throw DomainError("schlafli_dV: cone angle must be positive");
  if (!(step.visual_area > 0.0)) throw DomainError("schlafli_dV: visual area must be positive");
  return -(step.visual_area / (2.0 * step.alpha)) * step.d_alpha;
}

FigureTable figure_data(int which, std::size_t samples, const Envelope& env) {
  if (which < 1 || which > 3) throw DomainError("figure id must be 1, 2 or 3");
  if (samples < 2) throw DomainError("figure data needs at least two samples");
  FigureTable table;
  switch (which) {
    case 1: table.columns = {"x", "area_lower", "area_upper"}; break;
    case 2: table.columns = {"x_hat", "volume_drop_lower", "volume_drop_upper", "neumann_zagier"}; break;
    default: table.columns = {"x_hat", "area_lower", "area_upper", "neumann_zagier"}; break;
  }
  const double x_end = env.f(kTanhR0);
  table.rows.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    const double x = i + 1 == samples
                         ? x_end
                         : x_end * static_cast<double>(i) / static_cast<double>(samples - 1);
    switch (which) {
      case 1: {
        const Interval a = visual_area_bounds_at(x, env);
        table.rows.push_back({x, a.lo, a.hi});
        break;
      }
      case 2: {
        const Interval v = volume_drop_bounds_at(x, env);
        table.rows.push_back({x, v.lo, v.hi, x / 4.0});
        break;
      }
      default: {
        const Interval a = visual_area_bounds_at(x, env);
        table.rows.push_back({x, a.lo, a.hi, x});
        break;
      }
    }
  }
  return table;
}

}  // namespace dehn
