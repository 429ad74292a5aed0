#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "dehnfill/certificates.hpp"
#include "dehnfill/constants.hpp"
#include "dehnfill/errors.hpp"

using namespace dehn;
using doctest::Approx;

namespace {

// mpmath, 40 digits
struct FrozenBounds {
  double lhat, z_hat, z_tilde, dv_lo, dv_hi, a_lo, a_hi;
};
constexpr FrozenBounds kFrozen[] = {
    {7.5832, 0.577382713948650879, 0.81126430134053135015, 0.15610422033190347231,
     0.19781231847833471678, 0.56794176535365285379, 0.98022660673317088938},
    {10.0, 0.85311570187019182528, 0.88909618991910795648, 0.093341959834511994583,
     0.1056051192583483891, 0.35326955318181434336, 0.45637314402550933948},
    {25.0, 0.98085198068507163576, 0.98156510743903070246, 0.015646270609795973891,
     0.015942019565756376799, 0.062011623309998424414, 0.064386384231534217723},
};

constexpr double kPi2 = std::numbers::pi * std::numbers::pi;

}  // namespace

TEST_CASE("combined normalized length") {
  const std::vector<double> one{10.0};
  CHECK(combine_normalized_lengths(one) == 10.0);
  const std::vector<double> two{11.0, 11.0};
  CHECK(combine_normalized_lengths(two) == Approx(11.0 / std::numbers::sqrt2).epsilon(1e-15));
  const std::vector<double> with_complete{9.0, INFINITY};
  CHECK(combine_normalized_lengths(with_complete) == 9.0);
  CHECK_THROWS_AS(combine_normalized_lengths(std::vector<double>{}), DomainError);
  CHECK_THROWS_AS(combine_normalized_lengths(std::vector<double>{5.0, 0.0}), DomainError);
  CHECK_THROWS_AS(combine_normalized_lengths(std::vector<double>{-1.0}), DomainError);
}

TEST_CASE("certification decision") {
  CHECK(certify(std::vector<double>{7.6}).certified);
  CHECK_FALSE(certify(std::vector<double>{7.5}).certified);
  // 2/121 < 1/C^2
  CHECK(certify(std::vector<double>{11.0, 11.0}).certified);
  CHECK(certify(std::vector<double>{11.0, 11.0, INFINITY}).certified);
  CHECK_FALSE(certify(std::vector<double>{10.0, 10.0}).certified);
  // equality is not certified
  CHECK_FALSE(certify(std::vector<double>{kCertificationThreshold}).certified);

  const auto c = certify(std::vector<double>{7.6});
  CHECK(c.margin == Approx(1 / (7.5832 * 7.5832) - 1 / (7.6 * 7.6)));
  REQUIRE(c.tube_radius_floor.has_value());
  CHECK(*c.tube_radius_floor == Approx(kR0));
  CHECK_FALSE(c.volume_drop.has_value());
  CHECK_FALSE(certify(std::vector<double>{7.5}).tube_radius_floor.has_value());

  const auto full = certify_with_bounds(std::vector<double>{10.0});
  REQUIRE(full.volume_drop.has_value());
  REQUIRE(full.visual_area.has_value());
  REQUIRE(full.core_length_hi.has_value());
  CHECK(full.volume_drop->hi == Approx(kFrozen[1].dv_hi).epsilon(1e-9));
  CHECK(*full.z_hat == Approx(kFrozen[1].z_hat).epsilon(1e-10));

  const auto rejected = certify_with_bounds(std::vector<double>{7.0});
  CHECK_FALSE(rejected.certified);
  CHECK_FALSE(rejected.volume_drop.has_value());
}

TEST_CASE("threshold constant") {
  const double c = derived_threshold();
  CHECK(c * c == Approx(57.50411417783).epsilon(1e-11));
  CHECK(c == Approx(7.58314672).epsilon(1e-8));
  CHECK(c < kCertificationThreshold);
}

TEST_CASE("bounds against frozen values") {
  for (const auto& v : kFrozen) {
    CAPTURE(v.lhat);
    const auto roots = envelope_roots(v.lhat);
    CHECK(roots.x_hat == Approx(4 * kPi2 / (v.lhat * v.lhat)).epsilon(1e-15));
    CHECK(roots.z_hat == Approx(v.z_hat).epsilon(1e-10));
    CHECK(roots.z_tilde == Approx(v.z_tilde).epsilon(1e-10));
    const auto dv = volume_drop_bounds(v.lhat);
    CHECK(dv.lo == Approx(v.dv_lo).epsilon(1e-9));
    CHECK(dv.hi == Approx(v.dv_hi).epsilon(1e-9));
    const auto a = visual_area_bounds(v.lhat);
    CHECK(a.lo == Approx(v.a_lo).epsilon(1e-9));
    CHECK(a.hi == Approx(v.a_hi).epsilon(1e-9));
    CHECK(core_length_bound(v.lhat) == Approx(v.a_hi / (2 * std::numbers::pi)).epsilon(1e-14));
  }
  CHECK_THROWS_AS(volume_drop_bounds(7.5), UncertifiableError);
  CHECK_THROWS_AS(visual_area_bounds(7.5), UncertifiableError);
  CHECK_THROWS_AS(core_length_bound(7.5), UncertifiableError);
  CHECK_THROWS_AS(envelope_roots(7.5), UncertifiableError);
}

TEST_CASE("neumann-zagier asymptotics") {
  for (double lhat : {200.0, 1000.0}) {
    const double l2 = lhat * lhat;
    const auto dv = volume_drop_bounds(lhat);
    const auto a = visual_area_bounds(lhat);
    CHECK(dv.hi * l2 / kPi2 == Approx(1.0).epsilon(1e-3));
    CHECK(dv.lo * l2 / kPi2 == Approx(1.0).epsilon(1e-3));
    CHECK(a.hi * l2 / (4 * kPi2) == Approx(1.0).epsilon(1e-3));
    CHECK(a.lo * l2 / (4 * kPi2) == Approx(1.0).epsilon(1e-3));
  }
}

TEST_CASE("ordering and monotonicity in lhat") {
  double prev_core = INFINITY;
  double prev_dv = INFINITY;
  for (int i = 0; i < 100; ++i) {
    const double lhat = 7.6 + (100.0 - 7.6) * i / 99.0;
    const auto dv = volume_drop_bounds(lhat);
    const auto a = visual_area_bounds(lhat);
    CHECK(0.0 < dv.lo);
    CHECK(dv.lo <= dv.hi);
    CHECK(0.0 < a.lo);
    CHECK(a.lo <= a.hi);
    const double core = core_length_bound(lhat);
    CHECK(core < prev_core);
    CHECK(dv.hi < prev_dv);
    prev_core = core;
    prev_dv = dv.hi;
  }
}

TEST_CASE("schlafli") {
  CHECK(schlafli_dV({0.1, std::numbers::pi, 0.5}) == Approx(-0.1 / (2 * std::numbers::pi) * 0.5));
  CHECK(schlafli_dV({0.1, std::numbers::pi, 0.5}) == Approx(-0.0079577).epsilon(1e-5));
  CHECK(schlafli_dV({0.1, std::numbers::pi, -0.5}) > 0.0);
  CHECK_THROWS_AS(schlafli_dV({0.1, 0.0, 0.5}), DomainError);
  CHECK_THROWS_AS(schlafli_dV({0.0, 1.0, 0.5}), DomainError);
}

TEST_CASE("figure tables") {
  const auto& env = default_envelope();
  const double x_max = env.f(kTanhR0);
  SUBCASE("figure 1") {
    const auto t = figure_data(1, 21);
    CHECK(t.columns == std::vector<std::string>{"x", "area_lower", "area_upper"});
    REQUIRE(t.rows.size() == 21);
    CHECK(t.rows.front()[0] == 0.0);
    CHECK(t.rows.back()[0] == Approx(x_max).epsilon(1e-15));
    CHECK(t.rows.front()[1] == 0.0);
    for (const auto& r : t.rows) CHECK(r[1] <= r[2]);
    CHECK(t.rows.back()[2] == Approx(0.980254154).epsilon(1e-6));
  }
  SUBCASE("figure 2") {
    const auto t = figure_data(2, 11);
    CHECK(t.columns.size() == 4);
    for (const auto& r : t.rows) {
      CHECK(r[1] <= r[2]);
      CHECK(r[3] == Approx(r[0] / 4.0));
    }
  }
  SUBCASE("figure 3") {
    const auto t = figure_data(3, 11);
    for (const auto& r : t.rows) CHECK(r[3] == Approx(r[0]));
  }
  CHECK_THROWS_AS(figure_data(4, 10), DomainError);
  CHECK_THROWS_AS(figure_data(1, 1), DomainError);
}
