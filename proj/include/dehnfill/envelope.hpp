#pragma once

// The deformation envelope: closed forms H, G, G~, F, F~ in the variable
// z = tanh(rho), where the total visual area is A = h(rho) = 1/H(z), and the
// integrated extremals
//
//     f(z)  = 3.3957 (1 - z) exp(-int_1^z F(w) dw),
//     f~(z) = 3.3957 (1 - z) exp(-int_1^z F~(w) dw),
//
// which bracket x = alpha^2 / L^2 during a radial Dehn filling deformation:
// f(z) <= x <= f~(z). The integrals are computed by adaptive quadrature.
//
// Both f and f~ rise from z_min to a common maximum at z* = sqrt(sqrt5 - 2)
// (where H' = 0) and are strictly decreasing on [z*, 1]. Inversion works on
// that branch only.

#include <cstddef>
#include <vector>

namespace dehn {

namespace envelope {

/// Lower end of F~'s integrability interval: F~ has a pole at sqrt(2) - 1.
inline constexpr double kPole = 0.41421356237309504880;

/// H(z) = (1 + z^2) / (3.3957 z (1 - z^2)) = 1 / h(arctanh z); z in (0, 1).
double H(double z);
/// Analytic derivative of H on (0, 1).
double H_prime(double z);
/// G(z) = (1 + z^2) / (6.7914 z^3); z in (0, 1].
double G(double z);
/// G~(z) = (1 + z^2)^2 / (6.7914 z^3 (3 - z^2)); z in (0, 1].
double Gtilde(double z);
/// F(z) = -(1 + 4z + 6z^2 + z^4) / ((z + 1)(1 + z^2)^2); z in [0, 1].
double F(double z);
/// F~(z) on (sqrt2 - 1, 1].
double Ftilde(double z);

}  // namespace envelope

struct EnvelopeDomain {
  double z_min = 0.45;
};

struct EnvelopeValue {
  double value = 0.0;
  double abs_error = 0.0;
};

/// Samples of f, f~ and H on an ascending grid of the monotone branch.
struct EnvelopeTable {
  std::vector<double> z_grid;
  std::vector<double> f_values;
  std::vector<double> ftilde_values;
  std::vector<double> H_values;  ///< +infinity at z = 1
  double quad_tolerance = 0.0;   ///< largest absolute error bound among the f, f~ samples
};

class Envelope {
 public:
  struct Options {
    EnvelopeDomain domain{};
    /// Absolute tolerance of each log-factor integral.
    double quad_tolerance = 1e-13;
    std::size_t table_points = 129;
  };

  Envelope() : Envelope(Options{}) {}
  /// Throws DomainError if z_min is not above the pole of F~ or below 1.
  explicit Envelope(Options options);

  const Options& options() const noexcept { return options_; }
  const EnvelopeTable& table() const noexcept { return table_; }

  /// z* = sqrt(sqrt 5 - 2), where f and f~ attain their maxima.
  static double monotone_floor() noexcept;

  /// Throws DomainError for z outside [z_min, 1].
  EnvelopeValue f_with_error(double z) const;
  EnvelopeValue ftilde_with_error(double z) const;
  double f(double z) const { return f_with_error(z).value; }
  double ftilde(double z) const { return ftilde_with_error(z).value; }

  /// Largest attainable x on the monotone branch, f(z*) and f~(z*).
  double f_max() const noexcept { return f_max_; }
  double ftilde_max() const noexcept { return ftilde_max_; }

  /// The z in [z*, 1] with f(z) = x. invert_f(0) = 1. Throws
  /// UncertifiableError when x exceeds f_max() and DomainError for x < 0.
  double invert_f(double x) const;
  double invert_ftilde(double x) const;

 private:
  enum class Branch { lower, upper };
  EnvelopeValue evaluate(Branch branch, double z) const;
  double invert(Branch branch, double x) const;

  Options options_;
  EnvelopeTable table_;
  double f_max_ = 0.0;
  double ftilde_max_ = 0.0;
};

/// Shared envelope with default options, built on first use.
const Envelope& default_envelope();

}  // namespace dehn
