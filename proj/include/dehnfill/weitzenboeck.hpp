#pragma once

// Boundary term of the Weitzenboeck formula for the boundary condition
// A = S + (eps/2) delta d on a tubular boundary torus, evaluated exactly on
// finite Fourier sums, plus the algebra behind the standard-form estimate and
// the ellipticity symbol computation.
//
// Forms live on the unit-area square flat torus with coordinates (x1, x2)
// along the principal directions; theta_i = dx_i is a parallel orthonormal
// coframe, so nabla_i sigma_j = d sigma_j / d x_i.

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <utility>

namespace dehn {

struct BoundaryCurvature {
  double k1 = 1.0;
  double k2 = 1.0;
  double epsilon = 0.0;

  /// k2 = 1 / k1.
  static BoundaryCurvature from_k1(double k1, double epsilon);
  /// Throws DomainError unless k1, k2 > 0, |k1 k2 - 1| <= 1e-12 and eps >= 0.
  void validate() const;
  /// 1/sqrt3 <= min(k) <= max(k) <= sqrt3 and eps <= 2 min(k).
  bool in_positivity_range() const noexcept;
};

/// sigma = sum over (m, n) of (c1 theta_1 + c2 theta_2) exp(2 pi i (m x1 + n x2)).
class FourierMode1Form {
 public:
  using Frequency = std::pair<int, int>;
  struct Coefficients {
    std::complex<double> c1;
    std::complex<double> c2;
  };

  /// Sets the (m, n) coefficients and their conjugates at (-m, -n), so the form
  /// stays real. At (0, 0) the coefficients must be real (DomainError otherwise).
  void set(int m, int n, std::complex<double> c1, std::complex<double> c2);

  /// Adds amplitude * sin(2 pi (m x1 + n x2)) to component 1 or 2.
  void add_sine(int m, int n, int component, double amplitude);
  void add_cosine(int m, int n, int component, double amplitude);

  const std::map<Frequency, Coefficients>& modes() const noexcept { return modes_; }
  /// ||sigma||^2 = sum |c1|^2 + |c2|^2 over all stored modes.
  double l2_norm_squared() const noexcept;
  void scale(double s);

 private:
  void add(int m, int n, std::complex<double> c1, std::complex<double> c2);
  std::map<Frequency, Coefficients> modes_;
};

/// A real form with `terms` random conjugate-pair modes of frequency in
/// [-max_frequency, max_frequency]^2 and unit L^2 norm.
FourierMode1Form random_mode1_form(std::mt19937_64& rng, int terms, int max_frequency);

/// b = 1/4 sum_{i,j} (3 - k_i^2) k_j ||nabla_i sigma_j||^2
///     + eps/2 int ((k2 - eps/2) a1^2 + (k1 - eps/2) a2^2) dA,
/// with delta d sigma = a1 theta_1 + a2 theta_2.
double boundary_form_b(const BoundaryCurvature& curvature, const FourierMode1Form& sigma);

struct StandardFormCoefficients {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double xi = 0.0;
  double w = 0.0;
  /// Range of sum_j (v_j / v) X_j: [-w - xi, w - xi].
  double x_ratio_lo = 0.0;
  double x_ratio_hi = 0.0;
};

/// Coefficients of the quadratic form a (X^2 + Y^2) + b X + c controlling the
/// standard part of a harmonic deformation at tube radius R.
/// Throws DomainError unless R is positive and finite.
StandardFormCoefficients standard_form_coeffs(double r);

struct SymbolMatrix {
  std::array<std::array<double, 2>, 2> entries{};
  double determinant = 0.0;
};

/// Symbol of delta d + S d delta S for S = diag(k, 1/k) at zeta = (a, b):
/// diag(k^2 a^2 + b^2, a^2 + b^2 / k^2).
SymbolMatrix symbol_matrix_LS(double k, double zeta_a, double zeta_b);

struct KernelVector {
  std::complex<double> h0;
  std::array<std::complex<double>, 2> sigma0;
};

/// Nontrivial solution of h|zeta| - i zeta.sigma = 0, sigma|zeta| + i h zeta = 0
/// (the eps = 0 boundary system): h0 = 1, i sigma0 = zeta / |zeta|.
/// Throws DomainError for zeta = 0.
KernelVector epsilon_zero_kernel(double zeta_a, double zeta_b);

/// Residual norms of the two equations above.
std::pair<double, double> epsilon_zero_residuals(double zeta_a, double zeta_b, const KernelVector& v);

}  // namespace dehn
