#include "dehnfill/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <string>

#include "dehnfill/bisection.hpp"
#include "dehnfill/errors.hpp"
#include "dehnfill/kernels/kernels.hpp"
#include "dehnfill/quadrature.hpp"
#include "kernels/formulas.hpp"

namespace dehn {

namespace envelope {

namespace {

constexpr double kK = kernels::detail::kPackingCoefficient;

void require(bool ok, const char* what, double z) {
  if (!ok) throw DomainError(std::string(what) + ": z = " + std::to_string(z) + " is outside the domain");
}

}  // namespace

double H(double z) {
  require(z > 0.0 && z < 1.0, "H", z);
  return (1.0 + z * z) / (kK * z * (1.0 - z * z));
}

double H_prime(double z) {
  require(z > 0.0 && z < 1.0, "H'", z);
  // H = (1 + z^2) / (K (z - z^3))
  const double z2 = z * z;
  const double d = z - z2 * z;
  return (2.0 * z * d - (1.0 + z2) * (1.0 - 3.0 * z2)) / (kK * d * d);
}

double G(double z) {
  require(z > 0.0 && z <= 1.0, "G", z);
  return (1.0 + z * z) / (2.0 * kK * z * z * z);
}

double Gtilde(double z) {
  require(z > 0.0 && z <= 1.0, "G~", z);
  const double q = 1.0 + z * z;
  return q * q / (2.0 * kK * z * z * z * (3.0 - z * z));
}

double F(double z) {
  require(z >= 0.0 && z <= 1.0, "F", z);
  return kernels::detail::envelope_F(z);
}

double Ftilde(double z) {
  require(z > kPole && z <= 1.0, "F~", z);
  return kernels::detail::envelope_Ftilde(z);
}

}  // namespace envelope

namespace {

BatchIntegrand kernel_integrand(kernels::EnvelopeIntegrand which) {
  return [which](std::span<const double> z, std::span<double> out) {
    kernels::evaluate_envelope(which, z, out);
  };
}

}  // namespace

Envelope::Envelope(Options options) : options_(options) {
  const double z_min = options_.domain.z_min;
  if (!(z_min > envelope::kPole && z_min < monotone_floor())) {
    throw DomainError("envelope z_min must lie in (sqrt2 - 1, z*)");
  }
  if (!(options_.quad_tolerance > 0.0)) throw DomainError("quadrature tolerance must be positive");
  if (options_.table_points < 2) throw DomainError("envelope table needs at least two points");

  const double lo = monotone_floor();
  const std::size_t n = options_.table_points;
  table_.z_grid.resize(n);
  table_.f_values.resize(n);
  table_.ftilde_values.resize(n);
  table_.H_values.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double z = i + 1 == n ? 1.0 : lo + (1.0 - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    const EnvelopeValue fv = evaluate(Branch::lower, z);
    const EnvelopeValue ftv = evaluate(Branch::upper, z);
    table_.z_grid[i] = z;
    table_.f_values[i] = fv.value;
    table_.ftilde_values[i] = ftv.value;
    table_.H_values[i] = z < 1.0 ? envelope::H(z) : std::numeric_limits<double>::infinity();
    table_.quad_tolerance = std::max({table_.quad_tolerance, fv.abs_error, ftv.abs_error});
  }
  f_max_ = table_.f_values.front();
  ftilde_max_ = table_.ftilde_values.front();
}

double Envelope::monotone_floor() noexcept {
  static const double z_star = std::sqrt(std::sqrt(5.0) - 2.0);
  return z_star;
}

EnvelopeValue Envelope::evaluate(Branch branch, double z) const {
  if (!(z >= options_.domain.z_min && z <= 1.0)) {
    throw DomainError("envelope function evaluated at z = " + std::to_string(z) +
                      " outside [z_min, 1]");
  }
  if (z == 1.0) return {0.0, 0.0};
  const auto which =
      branch == Branch::lower ? kernels::EnvelopeIntegrand::F : kernels::EnvelopeIntegrand::Ftilde;
  // -int_1^z F = int_z^1 F
  const QuadratureResult q =
      integrate(kernel_integrand(which), z, 1.0, {options_.quad_tolerance, 4096});
  const double value = kernels::detail::kPackingCoefficient * (1.0 - z) * std::exp(q.value);
  return {value, value * std::expm1(q.abs_error)};
}

EnvelopeValue Envelope::f_with_error(double z) const { return evaluate(Branch::lower, z); }
EnvelopeValue Envelope::ftilde_with_error(double z) const { return evaluate(Branch::upper, z); }

double Envelope::invert(Branch branch, double x) const {
  if (!(x >= 0.0)) throw DomainError("envelope inversion needs x >= 0");
  if (x == 0.0) return 1.0;
  const auto& values = branch == Branch::lower ? table_.f_values : table_.ftilde_values;
  if (x > values.front()) {
    throw UncertifiableError("uncertifiable: normalized length too small");
  }
  // values are descending; first sample not above x bounds the root from the right.
  const auto it = std::lower_bound(values.begin(), values.end(), x, std::greater<>());
  const std::size_t hi = static_cast<std::size_t>(it - values.begin());
  if (values[hi] == x) return table_.z_grid[hi];
  const std::size_t lo = hi - 1;
  const auto fn = [this, branch](double z) { return evaluate(branch, z).value; };
  return bisect_decreasing(fn, x, table_.z_grid[lo], table_.z_grid[hi]);
}

double Envelope::invert_f(double x) const { return invert(Branch::lower, x); }
double Envelope::invert_ftilde(double x) const { return invert(Branch::upper, x); }

const Envelope& default_envelope() {
  static const Envelope instance;
  return instance;
}

}  // namespace dehn
