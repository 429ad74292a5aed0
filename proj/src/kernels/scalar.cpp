#include <cstddef>

#include "backends.hpp"
#include "formulas.hpp"

namespace dehn::kernels::detail {

namespace {

template <class Fn>
void apply(Fn fn, std::span<const double> z, std::span<double> out) {
  for (std::size_t i = 0; i < z.size(); ++i) out[i] = fn(z[i]);
}

}  // namespace

void envelope_scalar(EnvelopeIntegrand which, std::span<const double> z, std::span<double> out) {
  switch (which) {
    case EnvelopeIntegrand::F: apply(envelope_F, z, out); break;
    case EnvelopeIntegrand::Ftilde: apply(envelope_Ftilde, z, out); break;
    case EnvelopeIntegrand::volume_upper: apply(envelope_volume_upper, z, out); break;
    case EnvelopeIntegrand::volume_lower: apply(envelope_volume_lower, z, out); break;
  }
}

void slope_lengths_scalar(double tau_re, double tau_im, double sqrt_im_tau,
                          std::span<const double> p, std::span<const double> q,
                          std::span<double> out) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i] = slope_length(tau_re, tau_im, sqrt_im_tau, p[i], q[i]);
  }
}

}  // namespace dehn::kernels::detail
