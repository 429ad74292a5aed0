#include <doctest.h>

#include <cmath>
#include <cstring>
#include <random>
#include <vector>

#include "dehnfill/errors.hpp"
#include "dehnfill/kernels/kernels.hpp"

using namespace dehn;
using namespace dehn::kernels;

namespace {

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof(double)) == 0; }

// Odd lengths exercise the scalar tail of the vector loops.
std::vector<double> sample(std::mt19937_64& rng, std::size_t n, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

}  // namespace

TEST_CASE("backend selection") {
  CHECK(backend_available(Backend::scalar));
  CHECK(backend_available(detected_backend()));
  CHECK(backend_name(Backend::scalar) == "scalar");
  CHECK(backend_name(Backend::avx2) == "avx2");
  const Backend before = active_backend();
  select_backend(Backend::scalar);
  CHECK(active_backend() == Backend::scalar);
  if (!backend_available(Backend::avx2)) {
    CHECK_THROWS_AS(select_backend(Backend::avx2), DomainError);
  }
  select_backend(before);
}

TEST_CASE("vector backends match the scalar reference bit for bit") {
  std::mt19937_64 rng(41);
  std::vector<Backend> others;
  if (backend_available(Backend::avx2)) others.push_back(Backend::avx2);
  if (others.empty()) {
    MESSAGE("no vector backend on this machine; equivalence is vacuous");
    return;
  }

  SUBCASE("envelope integrands") {
    for (auto which : {EnvelopeIntegrand::F, EnvelopeIntegrand::Ftilde, EnvelopeIntegrand::volume_upper,
                       EnvelopeIntegrand::volume_lower}) {
      for (std::size_t n : {1u, 3u, 4u, 15u, 1001u}) {
        const auto z = sample(rng, n, 0.42, 1.0);
        std::vector<double> ref(n), got(n);
        evaluate_envelope(Backend::scalar, which, z, ref);
        for (Backend b : others) {
          evaluate_envelope(b, which, z, got);
          for (std::size_t i = 0; i < n; ++i) {
            CHECK_MESSAGE(same_bits(ref[i], got[i]), "z = " << z[i]);
          }
        }
      }
    }
  }
  SUBCASE("slope lengths") {
    for (int trial = 0; trial < 20; ++trial) {
      const double re = std::uniform_real_distribution<double>(-3, 3)(rng);
      const double im = std::uniform_real_distribution<double>(0.1, 4)(rng);
      const std::size_t n = 37 + trial;
      auto p = sample(rng, n, -50, 50);
      auto q = sample(rng, n, -50, 50);
      for (auto& v : p) v = std::round(v);
      for (auto& v : q) v = std::round(v);
      std::vector<double> ref(n), got(n);
      slope_lengths(Backend::scalar, re, im, std::sqrt(im), p, q, ref);
      for (Backend b : others) {
        slope_lengths(b, re, im, std::sqrt(im), p, q, got);
        for (std::size_t i = 0; i < n; ++i) CHECK(same_bits(ref[i], got[i]));
      }
    }
  }
}

TEST_CASE("dispatch follows the selected backend") {
  const std::vector<double> z{0.5, 0.6, 0.7, 0.8, 0.9};
  std::vector<double> a(z.size()), b(z.size());
  const Backend before = active_backend();
  select_backend(Backend::scalar);
  evaluate_envelope(EnvelopeIntegrand::F, z, a);
  evaluate_envelope(Backend::scalar, EnvelopeIntegrand::F, z, b);
  CHECK(a == b);
  select_backend(before);
}

TEST_CASE("mismatched spans") {
  std::vector<double> z(4), out(3);
  CHECK_THROWS_AS(evaluate_envelope(EnvelopeIntegrand::F, z, out), DomainError);
}
