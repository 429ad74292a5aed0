#pragma once

// Batched arithmetic kernels with a scalar reference implementation and
// vector variants chosen at runtime. Every variant performs the same
// sequence of correctly rounded IEEE operations as the scalar reference (no
// fused multiply-add), so results are bit-identical across backends.

#include <span>
#include <string_view>

namespace dehn::kernels {

enum class Backend { scalar, avx2 };

std::string_view backend_name(Backend backend) noexcept;

/// Whether the backend was compiled in and the running CPU supports it.
bool backend_available(Backend backend) noexcept;

/// Best available backend, detected once.
Backend detected_backend() noexcept;

/// Backend currently used by the dispatching entry points below.
Backend active_backend() noexcept;

/// Forces a backend (tests, benchmarking). Throws DomainError if unavailable.
void select_backend(Backend backend);

/// Pointwise integrands of the deformation envelope.
enum class EnvelopeIntegrand {
  F,              ///< F(z) = H'/(H+G) - 1/(1-z)
  Ftilde,         ///< F~(z) = H'/(H-G~) - 1/(1-z)
  volume_upper,   ///< H'/(H (H+G)), integrand of the volume-drop upper bound
  volume_lower,   ///< H'/(H (H-G~)), integrand of the volume-drop lower bound
};

/// out[i] = integrand(z[i]). Spans must have equal length.
void evaluate_envelope(EnvelopeIntegrand which, std::span<const double> z,
                       std::span<double> out);

/// out[i] = |p[i] + q[i] tau| / sqrt_im_tau, the normalized length of the
/// slope (p, q) on the unit-area lattice <1, tau> when sqrt_im_tau = sqrt(Im tau).
void slope_lengths(double tau_re, double tau_im, double sqrt_im_tau, std::span<const double> p,
                   std::span<const double> q, std::span<double> out);

/// Direct access to one backend, bypassing dispatch (equivalence tests).
void evaluate_envelope(Backend backend, EnvelopeIntegrand which, std::span<const double> z,
                       std::span<double> out);
void slope_lengths(Backend backend, double tau_re, double tau_im, double sqrt_im_tau,
                   std::span<const double> p, std::span<const double> q, std::span<double> out);

}  // namespace dehn::kernels
