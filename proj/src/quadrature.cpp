#include "dehnfill/quadrature.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "dehnfill/errors.hpp"

namespace dehn {

namespace {

// Kronrod abscissae on [-1, 1] (non-negative half, descending) and weights.
// The odd-indexed abscissae are the 7-point Gauss nodes.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel evaluate_panel(const BatchIntegrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::array<double, 15> x{};
  for (std::size_t j = 0; j < 7; ++j) {
    x[2 * j] = center - half * kNodes[j];
    x[2 * j + 1] = center + half * kNodes[j];
  }
  x[14] = center;
  std::array<double, 15> y{};
  f(x, y);

  double kronrod = kKronrodWeights[7] * y[14];
  double gauss = kGaussWeights[3] * y[14];
  for (std::size_t j = 0; j < 7; ++j) {
    const double pair = y[2 * j] + y[2 * j + 1];
    kronrod += kKronrodWeights[j] * pair;
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * pair;
  }
  kronrod *= half;
  gauss *= half;
  if (!std::isfinite(kronrod)) throw NumericalError("integrand is not finite on the interval");
  // Floor the estimate at rounding level so tiny panels stop refining.
  const double round_off = 50.0 * std::numeric_limits<double>::epsilon() * std::abs(kronrod);
  return {a, b, kronrod, std::max(std::abs(kronrod - gauss), round_off)};
}

}  // namespace

QuadratureResult integrate(const BatchIntegrand& f, double a, double b,
                           const QuadratureOptions& options) {
  if (!std::isfinite(a) || !std::isfinite(b)) throw DomainError("integration limits must be finite");
  if (a == b) return {0.0, 0.0, 0};
  const double sign = a < b ? 1.0 : -1.0;
  if (a > b) std::swap(a, b);

  std::priority_queue<Panel> panels;
  Panel first = evaluate_panel(f, a, b);
  double total = first.value;
  double error = first.error;
  panels.push(first);

  while (error > options.abs_tolerance) {
    if (panels.size() >= options.max_panels) {
      throw NumericalError("adaptive quadrature did not converge within the panel budget");
    }
    const Panel worst = panels.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) break;  // interval exhausted
    panels.pop();
    const Panel left = evaluate_panel(f, worst.a, mid);
    const Panel right = evaluate_panel(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
  }

  // Re-sum to avoid drift from the running updates.
  double value = 0.0;
  double err = 0.0;
  const std::size_t count = panels.size();
  while (!panels.empty()) {
    value += panels.top().value;
    err += panels.top().error;
    panels.pop();
  }
  return {sign * value, err, count};
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& options) {
  const BatchIntegrand batch = [&f](std::span<const double> x, std::span<double> out) {
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = f(x[i]);
  };
  return integrate(batch, a, b, options);
}

}  // namespace dehn
