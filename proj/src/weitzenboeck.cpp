#include "dehnfill/weitzenboeck.hpp"

#include <cmath>
#include <numbers>

#include "dehnfill/errors.hpp"

namespace dehn {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
using cd = std::complex<double>;

}  // namespace

BoundaryCurvature BoundaryCurvature::from_k1(double k1, double epsilon) {
  if (!(k1 > 0.0) || !std::isfinite(k1)) throw DomainError("k1 must be positive and finite");
  BoundaryCurvature c{k1, 1.0 / k1, epsilon};
  c.validate();
  return c;
}

void BoundaryCurvature::validate() const {
  if (!(k1 > 0.0) || !(k2 > 0.0) || !std::isfinite(k1) || !std::isfinite(k2)) {
    throw DomainError("principal curvatures must be positive and finite");
  }
  if (std::abs(k1 * k2 - 1.0) > 1e-12) throw DomainError("tubular boundary requires k1 k2 = 1");
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) throw DomainError("epsilon must be >= 0");
}

bool BoundaryCurvature::in_positivity_range() const noexcept {
  const double lo = std::min(k1, k2);
  const double hi = std::max(k1, k2);
  return lo >= 1.0 / std::numbers::sqrt3 && hi <= std::numbers::sqrt3 && epsilon <= 2.0 * lo;
}

void FourierMode1Form::add(int m, int n, cd c1, cd c2) {
  auto& slot = modes_[{m, n}];
  slot.c1 += c1;
  slot.c2 += c2;
}

void FourierMode1Form::set(int m, int n, cd c1, cd c2) {
  if (m == 0 && n == 0) {
    if (c1.imag() != 0.0 || c2.imag() != 0.0) {
      throw DomainError("the constant mode of a real form must be real");
    }
    modes_[{0, 0}] = {c1, c2};
    return;
  }
  modes_[{m, n}] = {c1, c2};
  modes_[{-m, -n}] = {std::conj(c1), std::conj(c2)};
}

void FourierMode1Form::add_sine(int m, int n, int component, double amplitude) {
  if (component != 1 && component != 2) throw DomainError("component must be 1 or 2");
  if (m == 0 && n == 0) return;  // sin(0) = 0
  // sin t = (e^{it} - e^{-it}) / 2i
  const cd c = cd(0.0, -0.5 * amplitude);
  const cd zero{};
  add(m, n, component == 1 ? c : zero, component == 2 ? c : zero);
  add(-m, -n, component == 1 ? std::conj(c) : zero, component == 2 ? std::conj(c) : zero);
}

void FourierMode1Form::add_cosine(int m, int n, int component, double amplitude) {
  if (component != 1 && component != 2) throw DomainError("component must be 1 or 2");
  const cd zero{};
  if (m == 0 && n == 0) {
    add(0, 0, component == 1 ? cd(amplitude) : zero, component == 2 ? cd(amplitude) : zero);
    return;
  }
  const cd c = cd(0.5 * amplitude, 0.0);
  add(m, n, component == 1 ? c : zero, component == 2 ? c : zero);
  add(-m, -n, component == 1 ? c : zero, component == 2 ? c : zero);
}

double FourierMode1Form::l2_norm_squared() const noexcept {
  double sum = 0.0;
  for (const auto& [freq, c] : modes_) sum += std::norm(c.c1) + std::norm(c.c2);
  return sum;
}

void FourierMode1Form::scale(double s) {
  for (auto& [freq, c] : modes_) {
    c.c1 *= s;
    c.c2 *= s;
  }
}

FourierMode1Form random_mode1_form(std::mt19937_64& rng, int terms, int max_frequency) {
  std::uniform_int_distribution<int> freq(-max_frequency, max_frequency);
  std::normal_distribution<double> gauss(0.0, 1.0);
  FourierMode1Form form;
  for (int t = 0; t < terms; ++t) {
    const int m = freq(rng);
    const int n = freq(rng);
    if (m == 0 && n == 0) {
      form.set(0, 0, gauss(rng), gauss(rng));
    } else {
      form.set(m, n, {gauss(rng), gauss(rng)}, {gauss(rng), gauss(rng)});
    }
  }
  const double norm2 = form.l2_norm_squared();
  if (norm2 > 0.0) form.scale(1.0 / std::sqrt(norm2));
  return form;
}

double boundary_form_b(const BoundaryCurvature& curvature, const FourierMode1Form& sigma) {
  curvature.validate();
  const double k[2] = {curvature.k1, curvature.k2};
  const double eps = curvature.epsilon;

  // Parseval on the unit-area torus: ||f||^2 = sum over all modes of |f_hat|^2.
  double gradient = 0.0;
  double a1_sq = 0.0;
  double a2_sq = 0.0;
  for (const auto& [freq, c] : sigma.modes()) {
    const double nu[2] = {kTwoPi * freq.first, kTwoPi * freq.second};
    const double cj[2] = {std::norm(c.c1), std::norm(c.c2)};
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        gradient += (3.0 - k[i] * k[i]) * k[j] * nu[i] * nu[i] * cj[j];
      }
    }
    // d sigma = g theta_1 ^ theta_2, g = d1 sigma2 - d2 sigma1;
    // delta d sigma = (d2 g) theta_1 - (d1 g) theta_2.
    const cd g = cd(0.0, 1.0) * (nu[0] * c.c2 - nu[1] * c.c1);
    a1_sq += nu[1] * nu[1] * std::norm(g);
    a2_sq += nu[0] * nu[0] * std::norm(g);
  }
  return 0.25 * gradient +
         0.5 * eps * ((curvature.k2 - 0.5 * eps) * a1_sq + (curvature.k1 - 0.5 * eps) * a2_sq);
}

StandardFormCoefficients standard_form_coeffs(double r) {
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("tube radius must be positive and finite");
  const double sh2 = std::sinh(r) * std::sinh(r);
  const double ch2 = std::cosh(r) * std::cosh(r);
  StandardFormCoefficients s;
  s.a = -(sh2 / ch2) * (2.0 * ch2 + 1.0);
  s.b = -2.0 / ch2;
  s.c = (2.0 * ch2 - 1.0) / (sh2 * ch2);
  s.xi = 1.0 / (sh2 * (2.0 * ch2 + 1.0));
  s.w = 2.0 * ch2 / (sh2 * (2.0 * ch2 + 1.0));
  s.x_ratio_lo = -s.w - s.xi;
  s.x_ratio_hi = s.w - s.xi;
  return s;
}

SymbolMatrix symbol_matrix_LS(double k, double zeta_a, double zeta_b) {
  if (!(k > 0.0)) throw DomainError("symbol_matrix_LS: k must be positive");
  SymbolMatrix m;
  m.entries[0][0] = k * k * zeta_a * zeta_a + zeta_b * zeta_b;
  m.entries[1][1] = zeta_a * zeta_a + zeta_b * zeta_b / (k * k);
  m.determinant = m.entries[0][0] * m.entries[1][1];
  return m;
}

KernelVector epsilon_zero_kernel(double zeta_a, double zeta_b) {
  const double len = std::hypot(zeta_a, zeta_b);
  if (!(len > 0.0)) throw DomainError("epsilon_zero_kernel: zeta must be nonzero");
  // i sigma0 = zeta / |zeta|  =>  sigma0 = -i zeta / |zeta|
  return {cd(1.0, 0.0), {cd(0.0, -zeta_a / len), cd(0.0, -zeta_b / len)}};
}

std::pair<double, double> epsilon_zero_residuals(double zeta_a, double zeta_b, const KernelVector& v) {
  const double len = std::hypot(zeta_a, zeta_b);
  const cd i(0.0, 1.0);
  const cd first = v.h0 * len - i * (zeta_a * v.sigma0[0] + zeta_b * v.sigma0[1]);
  const cd second0 = v.sigma0[0] * len + i * v.h0 * zeta_a;
  const cd second1 = v.sigma0[1] * len + i * v.h0 * zeta_b;
  return {std::abs(first), std::hypot(std::abs(second0), std::abs(second1))};
}

}  // namespace dehn
