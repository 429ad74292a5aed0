#include <atomic>
#include <string>

#include "backends.hpp"
#include "dehnfill/errors.hpp"
#include "dehnfill/kernels/kernels.hpp"

namespace dehn::kernels {

namespace {

bool cpu_has_avx2() noexcept {
#if defined(DEHNFILL_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

std::atomic<Backend>& active() noexcept {
  static std::atomic<Backend> backend{detected_backend()};
  return backend;
}

void check_sizes(std::size_t a, std::size_t b) {
  if (a != b) throw DomainError("kernel input and output spans differ in length");
}

}  // namespace

std::string_view backend_name(Backend backend) noexcept {
  switch (backend) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
  }
  return "unknown";
}

bool backend_available(Backend backend) noexcept {
  switch (backend) {
    case Backend::scalar: return true;
    case Backend::avx2: {
      static const bool has = cpu_has_avx2();
      return has;
    }
  }
  return false;
}

Backend detected_backend() noexcept {
  return backend_available(Backend::avx2) ? Backend::avx2 : Backend::scalar;
}

Backend active_backend() noexcept { return active().load(std::memory_order_relaxed); }

void select_backend(Backend backend) {
  if (!backend_available(backend)) {
    throw DomainError("kernel backend '" + std::string(backend_name(backend)) +
                      "' is not available on this build or CPU");
  }
  active().store(backend, std::memory_order_relaxed);
}

void evaluate_envelope(Backend backend, EnvelopeIntegrand which, std::span<const double> z,
                       std::span<double> out) {
  check_sizes(z.size(), out.size());
#if defined(DEHNFILL_HAVE_AVX2)
  if (backend == Backend::avx2 && backend_available(Backend::avx2)) {
    detail::envelope_avx2(which, z, out);
    return;
  }
#endif
  if (backend != Backend::scalar) select_backend(backend);  // throws
  detail::envelope_scalar(which, z, out);
}

void slope_lengths(Backend backend, double tau_re, double tau_im, double sqrt_im_tau,
                   std::span<const double> p, std::span<const double> q, std::span<double> out) {
  check_sizes(p.size(), q.size());
  check_sizes(p.size(), out.size());
#if defined(DEHNFILL_HAVE_AVX2)
  if (backend == Backend::avx2 && backend_available(Backend::avx2)) {
    detail::slope_lengths_avx2(tau_re, tau_im, sqrt_im_tau, p, q, out);
    return;
  }
#endif
  if (backend != Backend::scalar) select_backend(backend);
  detail::slope_lengths_scalar(tau_re, tau_im, sqrt_im_tau, p, q, out);
}

void evaluate_envelope(EnvelopeIntegrand which, std::span<const double> z, std::span<double> out) {
  evaluate_envelope(active_backend(), which, z, out);
}

void slope_lengths(double tau_re, double tau_im, double sqrt_im_tau, std::span<const double> p,
                   std::span<const double> q, std::span<double> out) {
  slope_lengths(active_backend(), tau_re, tau_im, sqrt_im_tau, p, q, out);
}

}  // namespace dehn::kernels
