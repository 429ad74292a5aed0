#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dehnfill/bisection.hpp"
#include "dehnfill/errors.hpp"
#include "dehnfill/quadrature.hpp"

using namespace dehn;
using doctest::Approx;

TEST_CASE("gauss-kronrod") {
  SUBCASE("exact on low-degree polynomials in one panel") {
    const auto r = integrate([](double x) { return 3 * x * x * x * x - x + 2; }, -1.0, 2.0);
    // 3/5 (32 + 1) - (4 - 1)/2 + 6
    CHECK(r.value == Approx(19.8 - 1.5 + 6.0).epsilon(1e-15));
    CHECK(r.panels == 1);
  }
  SUBCASE("exp") {
    const auto r = integrate([](double x) { return std::exp(x); }, 0.0, 1.0, {1e-13, 4096});
    CHECK(std::abs(r.value - (std::numbers::e - 1.0)) <= 1e-14);
    CHECK(r.abs_error <= 1e-13);
  }
  SUBCASE("endpoint singularity is handled adaptively") {
    const auto r = integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, {1e-9, 4096});
    CHECK(r.value == Approx(2.0).epsilon(1e-8));
    CHECK(r.panels > 1);
  }
  SUBCASE("reversed limits") {
    const auto fwd = integrate([](double x) { return std::sin(x); }, 0.0, 2.0);
    const auto rev = integrate([](double x) { return std::sin(x); }, 2.0, 0.0);
    CHECK(rev.value == -fwd.value);
    CHECK(fwd.value == Approx(1.0 - std::cos(2.0)).epsilon(1e-13));
  }
  SUBCASE("empty interval") {
    CHECK(integrate([](double) { return 1.0; }, 1.0, 1.0).value == 0.0);
  }
  SUBCASE("batch integrand") {
    const BatchIntegrand f = [](std::span<const double> x, std::span<double> out) {
      for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::cos(x[i]);
    };
    CHECK(integrate(f, 0.0, std::numbers::pi / 2).value == Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("budget exhaustion") {
    CHECK_THROWS_AS(integrate([](double x) { return std::sin(1.0 / x); }, 1e-6, 1.0, {1e-15, 8}),
                    NumericalError);
  }
}

TEST_CASE("bisection") {
  const auto fn = [](double x) { return std::exp(-x); };
  const double x = bisect_decreasing(fn, 0.5, 0.0, 2.0);
  CHECK(x == Approx(std::log(2.0)).epsilon(1e-15));
  CHECK_THROWS_AS(bisect_decreasing(fn, 2.0, 0.0, 2.0), DomainError);
  CHECK_THROWS_AS(bisect_decreasing(fn, 0.5, 2.0, 0.0), DomainError);
}
