// AVX2 variants of the batched kernels. Compiled with -mavx2 -mno-fma; each
// expression mirrors formulas.hpp operation for operation.

#include <immintrin.h>

#include <cstddef>

#include "backends.hpp"
#include "formulas.hpp"

namespace dehn::kernels::detail {

namespace {

inline __m256d set1(double v) { return _mm256_set1_pd(v); }
inline __m256d add(__m256d a, __m256d b) { return _mm256_add_pd(a, b); }
inline __m256d sub(__m256d a, __m256d b) { return _mm256_sub_pd(a, b); }
inline __m256d mul(__m256d a, __m256d b) { return _mm256_mul_pd(a, b); }
inline __m256d div(__m256d a, __m256d b) { return _mm256_div_pd(a, b); }
inline __m256d neg(__m256d a) { return _mm256_xor_pd(a, set1(-0.0)); }

inline __m256d F4(__m256d z) {
  const __m256d one = set1(1.0);
  const __m256d z2 = mul(z, z);
  const __m256d q = add(one, z2);
  const __m256d num = add(add(add(one, mul(set1(4.0), z)), mul(set1(6.0), z2)), mul(z2, z2));
  const __m256d den = mul(add(z, one), mul(q, q));
  return neg(div(num, den));
}

inline __m256d Ftilde4(__m256d z) {
  const __m256d one = set1(1.0);
  const __m256d z2 = mul(z, z);
  const __m256d z3 = mul(z2, z);
  __m256d num = add(mul(z3, z3), mul(set1(7.0), mul(z2, z2)));
  num = add(num, mul(set1(12.0), z3));
  num = sub(num, mul(set1(9.0), z2));
  num = sub(num, mul(set1(4.0), z));
  num = add(num, one);
  const __m256d two_z = mul(set1(2.0), z);
  __m256d den = mul(add(z, one), add(z2, one));
  den = mul(den, sub(sub(z2, two_z), one));
  den = mul(den, sub(add(z2, two_z), one));
  return neg(div(num, den));
}

inline __m256d minus_area_slope4(__m256d z2) {
  const __m256d q = add(set1(1.0), z2);
  const __m256d poly = sub(add(mul(z2, z2), mul(set1(4.0), z2)), set1(1.0));
  return div(mul(set1(kPackingCoefficient), poly), mul(q, q));
}

inline __m256d volume_upper4(__m256d z) {
  const __m256d z2 = mul(z, z);
  return mul(minus_area_slope4(z2), div(mul(set1(2.0), z2), add(set1(1.0), z2)));
}

inline __m256d volume_lower4(__m256d z) {
  const __m256d z2 = mul(z, z);
  const __m256d t = mul(mul(set1(2.0), z2), sub(set1(3.0), z2));
  const __m256d d = sub(sub(mul(set1(6.0), z2), mul(z2, z2)), set1(1.0));
  return mul(minus_area_slope4(z2), div(t, d));
}

template <class Vec, class Scalar>
void apply(Vec vec, Scalar scalar, std::span<const double> z, std::span<double> out) {
  const std::size_t n = z.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out.data() + i, vec(_mm256_loadu_pd(z.data() + i)));
  }
  for (; i < n; ++i) out[i] = scalar(z[i]);
}

}  // namespace

void envelope_avx2(EnvelopeIntegrand which, std::span<const double> z, std::span<double> out) {
  switch (which) {
    case EnvelopeIntegrand::F: apply(F4, envelope_F, z, out); break;
    case EnvelopeIntegrand::Ftilde: apply(Ftilde4, envelope_Ftilde, z, out); break;
    case EnvelopeIntegrand::volume_upper: apply(volume_upper4, envelope_volume_upper, z, out); break;
    case EnvelopeIntegrand::volume_lower: apply(volume_lower4, envelope_volume_lower, z, out); break;
  }
}

void slope_lengths_avx2(double tau_re, double tau_im, double sqrt_im_tau,
                        std::span<const double> p, std::span<const double> q,
                        std::span<double> out) {
  const std::size_t n = p.size();
  const __m256d tr = set1(tau_re);
  const __m256d ti = set1(tau_im);
  const __m256d s = set1(sqrt_im_tau);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d pv = _mm256_loadu_pd(p.data() + i);
    const __m256d qv = _mm256_loadu_pd(q.data() + i);
    const __m256d re = add(pv, mul(qv, tr));
    const __m256d im = mul(qv, ti);
    const __m256d len = div(_mm256_sqrt_pd(add(mul(re, re), mul(im, im))), s);
    _mm256_storeu_pd(out.data() + i, len);
  }
  for (; i < n; ++i) out[i] = slope_length(tau_re, tau_im, sqrt_im_tau, p[i], q[i]);
}

}  // namespace dehn::kernels::detail
