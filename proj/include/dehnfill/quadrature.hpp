#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace dehn {

/// Evaluates an integrand at a batch of abscissae: out[i] = f(x[i]).
using BatchIntegrand = std::function<void(std::span<const double> x, std::span<double> out)>;

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;  ///< sum of per-panel |K15 - G7| estimates
  std::size_t panels = 0;
};

struct QuadratureOptions {
  double abs_tolerance = 1e-10;
  std::size_t max_panels = 4096;
};

/// Globally adaptive 7/15-point Gauss-Kronrod quadrature of f over [a, b]
/// (a > b gives the negated integral over [b, a]). The panel with the largest
/// error estimate is bisected until the summed estimate is within tolerance.
/// Throws NumericalError if max_panels is reached first.
QuadratureResult integrate(const BatchIntegrand& f, double a, double b,
                           const QuadratureOptions& options = {});

/// Convenience overload for pointwise integrands.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& options = {});

}  // namespace dehn
