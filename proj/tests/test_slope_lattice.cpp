#include <doctest.h>

#include <cmath>
#include <random>
#include <set>
#include <utility>

#include "dehnfill/errors.hpp"
#include "dehnfill/slope_lattice.hpp"
#include "dehnfill/torus_geometry.hpp"
#include "oracles.hpp"

using namespace dehn;
using doctest::Approx;

TEST_CASE("slope normalized length") {
  CHECK(slope_normalized_length(CuspShape(0, 1), 1, 0) == Approx(1.0));
  CHECK(slope_normalized_length(CuspShape(0, 1), 3, 4) == Approx(5.0).epsilon(1e-15));
  CHECK(slope_normalized_length(CuspShape(0, 2), 0, 1) == Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK_THROWS_AS(slope_normalized_length(CuspShape(0, 1), 0, 0), DomainError);
  CHECK_THROWS_AS(CuspShape(0.3, 0.0), DomainError);
  CHECK_THROWS_AS(CuspShape(0.3, -1.0), DomainError);

  SUBCASE("agrees with the torus presentation") {
    const CuspShape shape(0.37, 1.9);
    const TubularTorus torus(TubeRadius::infinite(), {1.0, 0.0}, {shape.re(), shape.im()});
    for (auto [p, q] : {std::pair{1.0, 0.0}, {2.0, -3.0}, {0.5, 1.25}, {-4.0, 1.0}}) {
      CHECK(slope_normalized_length(shape, p, q) ==
            Approx(normalized_length(torus, {p, q})).epsilon(1e-14));
    }
  }
}

TEST_CASE("lattice reduction") {
  SUBCASE("already reduced") {
    const auto r = lattice_reduce(CuspShape(0, 1));
    CHECK(r.shape.re() == 0.0);
    CHECK(r.shape.im() == 1.0);
    CHECK(r.to_reduced == SlopeMatrix{});
  }
  SUBCASE("shear") {
    const auto r = lattice_reduce(CuspShape(5, 1));
    CHECK(r.shape.re() == Approx(0.0));
    CHECK(r.shape.im() == Approx(1.0));
    // p + q tau = (p + 5q) + q (tau - 5)
    CHECK(r.to_reduced == SlopeMatrix{1, 5, 0, 1});
  }
  SUBCASE("small modulus is inverted; minimality by brute force") {
    const CuspShape s(0.1, 0.3);
    const auto r = lattice_reduce(s);
    CHECK(std::abs(r.shape.re()) <= 0.5 + 1e-12);
    CHECK(std::hypot(r.shape.re(), r.shape.im()) >= 1.0 - 1e-12);
    // The shortest nonzero lattice vector, scanned over a small box, matches
    // the reduced basis vector (length sqrt(Im tau') after normalization).
    double shortest = INFINITY;
    for (int p = -10; p <= 10; ++p)
      for (int q = -10; q <= 10; ++q)
        if (p || q) shortest = std::min(shortest, slope_normalized_length(s, p, q));
    CHECK(shortest == Approx(1.0 / std::sqrt(r.shape.im())).epsilon(1e-12));
  }
  SUBCASE("preserves normalized lengths and orientation on random shapes") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> re(-20.0, 20.0);
    std::uniform_real_distribution<double> log_im(-4.0, 3.0);
    std::uniform_int_distribution<int> coord(-9, 9);
    for (int i = 0; i < 200; ++i) {
      const CuspShape s(re(rng), std::exp(log_im(rng)));
      const auto r = lattice_reduce(s);
      CHECK(r.to_reduced.determinant() == 1);
      CHECK(std::abs(r.shape.re()) <= 0.5 + 1e-9);
      CHECK(std::hypot(r.shape.re(), r.shape.im()) >= 1.0 - 1e-9);
      for (int k = 0; k < 10; ++k) {
        const int p = coord(rng), q = coord(rng);
        if (!p && !q) continue;
        std::int64_t pn = 0, qn = 0;
        r.to_reduced.apply(p, q, pn, qn);
        const double before = slope_normalized_length(s, p, q);
        const double after = slope_normalized_length(r.shape, static_cast<double>(pn), static_cast<double>(qn));
        CHECK(std::abs(before - after) <= 1e-12 * std::max(1.0, before));
      }
    }
  }
}

TEST_CASE("short slope enumeration") {
  SUBCASE("square lattice, tiny cutoff") {
    CHECK(enumerate_short_slopes(CuspShape(0, 1), 0.5).empty());
  }
  SUBCASE("square lattice, cutoff 1.5") {
    const auto slopes = enumerate_short_slopes(CuspShape(0, 1), 1.5);
    REQUIRE(slopes.size() == 4);
    std::set<std::pair<std::int64_t, std::int64_t>> got;
    for (const auto& s : slopes) got.insert({s.slope.p, s.slope.q});
    CHECK(got == std::set<std::pair<std::int64_t, std::int64_t>>{{1, 0}, {0, 1}, {1, 1}, {1, -1}});
  }
  SUBCASE("square lattice at the threshold equals the |p|,|q| <= 8 scan") {
    const double cutoff = 7.5832;
    std::size_t expected = 0;
    for (int p = 0; p <= 8; ++p)
      for (int q = -8; q <= 8; ++q)
        if ((p > 0 || q > 0) && std::gcd(p, q) == 1 && std::hypot(p, q) <= cutoff) ++expected;
    CHECK(enumerate_short_slopes(CuspShape(0, 1), cutoff).size() == expected);
  }
  SUBCASE("sorted, canonical, primitive, no duplicates") {
    const auto slopes = enumerate_short_slopes(CuspShape(-0.31, 0.77), 9.0);
    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    for (std::size_t i = 0; i < slopes.size(); ++i) {
      const auto& s = slopes[i].slope;
      CHECK((s.p > 0 || (s.p == 0 && s.q > 0)));
      CHECK(std::gcd(s.p, s.q) == 1);
      CHECK(seen.insert({s.p, s.q}).second);
      CHECK(seen.count({-s.p, -s.q}) == 0);
      if (i) CHECK(slopes[i - 1].lhat <= slopes[i].lhat);
    }
  }
  SUBCASE("matches brute force on skewed shapes") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> re(-4.0, 4.0);
    std::uniform_real_distribution<double> im(0.2, 4.0);
    for (int i = 0; i < 50; ++i) {
      const CuspShape s(re(rng), im(rng));
      const auto fast = enumerate_short_slopes(s, 6.0);
      const auto slow = oracle::brute_force_slopes(s, 6.0);
      REQUIRE(fast.size() == slow.size());
      for (std::size_t k = 0; k < fast.size(); ++k) {
        CHECK(fast[k].slope.p == slow[k].p);
        CHECK(fast[k].slope.q == slow[k].q);
        CHECK(fast[k].lhat == slow[k].lhat);
      }
    }
  }
  SUBCASE("reduced-basis window bound") {
    // For a reduced tau', |x + y tau'|^2 >= (3/4) x^2 and >= y^2 Im(tau')^2,
    // so every admissible slope lies in |q'| <= L / sqrt(Im tau'),
    // |p'| <= 2 L sqrt(Im tau') / sqrt3.
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> re(-3.0, 3.0);
    std::uniform_real_distribution<double> im(0.1, 5.0);
    for (int i = 0; i < 50; ++i) {
      const CuspShape s(re(rng), im(rng));
      const auto r = lattice_reduce(s);
      const double cutoff = 8.0;
      const double qb = cutoff / std::sqrt(r.shape.im());
      const double pb = 2.0 * cutoff * std::sqrt(r.shape.im()) / std::sqrt(3.0);
      for (const auto& sl : enumerate_short_slopes(s, cutoff)) {
        std::int64_t pn = 0, qn = 0;
        r.to_reduced.apply(sl.slope.p, sl.slope.q, pn, qn);
        CHECK(std::abs(static_cast<double>(qn)) <= qb + 1e-9);
        CHECK(std::abs(static_cast<double>(pn)) <= pb + 1e-9);
      }
    }
  }
  SUBCASE("invalid cutoff") {
    CHECK_THROWS_AS(enumerate_short_slopes(CuspShape(0, 1), 0.0), DomainError);
    CHECK_THROWS_AS(enumerate_short_slopes(CuspShape(0, 1), -1.0), DomainError);
  }
}
