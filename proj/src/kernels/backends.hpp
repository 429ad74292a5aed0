#pragma once

#include <span>

#include "dehnfill/kernels/kernels.hpp"

namespace dehn::kernels::detail {

void envelope_scalar(EnvelopeIntegrand which, std::span<const double> z, std::span<double> out);
void slope_lengths_scalar(double tau_re, double tau_im, double sqrt_im_tau,
                          std::span<const double> p, std::span<const double> q,
                          std::span<double> out);

#if defined(DEHNFILL_HAVE_AVX2)
void envelope_avx2(EnvelopeIntegrand which, std::span<const double> z, std::span<double> out);
void slope_lengths_avx2(double tau_re, double tau_im, double sqrt_im_tau,
                        std::span<const double> p, std::span<const double> q,
                        std::span<double> out);
#endif

}  // namespace dehn::kernels::detail
