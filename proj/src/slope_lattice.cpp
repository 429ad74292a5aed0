#include "dehnfill/slope_lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <tuple>

#include "dehnfill/errors.hpp"
#include "dehnfill/kernels/kernels.hpp"
#include "kernels/formulas.hpp"

namespace dehn {

CuspShape::CuspShape(double re, double im) : re_(re), im_(im) {
  if (!std::isfinite(re) || !std::isfinite(im) || !(im > 0.0)) {
    throw DomainError("cusp shape needs finite parts and Im(tau) > 0");
  }
}

SlopeMatrix SlopeMatrix::inverse() const noexcept {
  const std::int64_t det = determinant();
  return {det * m11, -det * m01, -det * m10, det * m00};
}

Slope canonical_slope(Slope s) noexcept {
  if (s.p < 0 || (s.p == 0 && s.q < 0)) return {-s.p, -s.q};
  return s;
}

double slope_normalized_length(const CuspShape& shape, double p, double q) {
  if (p == 0.0 && q == 0.0) throw DomainError("normalized length of the zero slope");
  return kernels::detail::slope_length(shape.re(), shape.im(), std::sqrt(shape.im()), p, q);
}

ReducedShape lattice_reduce(const CuspShape& shape) {
  // Current basis u = a + c tau, v = b + d tau, with tau' = v / u.
  std::int64_t a = 1, b = 0, c = 0, d = 1;
  const double tr = shape.re();
  const double ti = shape.im();
  auto current = [&] {
    // (b + d tau) / (a + c tau)
    const double ur = static_cast<double>(a) + static_cast<double>(c) * tr;
    const double ui = static_cast<double>(c) * ti;
    const double vr = static_cast<double>(b) + static_cast<double>(d) * tr;
    const double vi = static_cast<double>(d) * ti;
    const double n = ur * ur + ui * ui;
    return std::pair{(vr * ur + vi * ui) / n, (vi * ur - vr * ui) / n};
  };

  for (int iter = 0; iter < 10000; ++iter) {
    auto [re, im] = current();
    const double shift = std::round(re);
    if (shift != 0.0) {
      // v <- v - n u
      const auto n = static_cast<std::int64_t>(shift);
      b -= n * a;
      d -= n * c;
      std::tie(re, im) = current();
    }
    if (re * re + im * im < 1.0 - 1e-12) {
      // (u, v) <- (v, -u): tau' -> -1 / tau'
      std::tie(a, b, c, d) = std::tuple{b, -a, d, -c};
      continue;
    }
    break;
  }
  auto [re, im] = current();
  // B = [a b; c d] maps reduced coordinates to old ones; its inverse maps old to new.
  const SlopeMatrix basis{a, b, c, d};
  return {CuspShape(re, im), basis.inverse()};
}

std::vector<ShortSlope> enumerate_short_slopes(const CuspShape& shape, double cutoff) {
  if (!(cutoff > 0.0) || !std::isfinite(cutoff)) {
    throw DomainError("enumeration cutoff must be a positive finite number");
  }
  const ReducedShape reduced = lattice_reduce(shape);
  const SlopeMatrix to_old = reduced.to_reduced.inverse();
  const double rr = reduced.shape.re();
  const double ri = reduced.shape.im();

  // In the reduced basis L = |p' + q' tau'| / sqrt(Im tau') and
  // |p' + q' tau'| >= |q'| Im tau', so |q'| <= cutoff / sqrt(Im tau'). For
  // each q' the admissible p' lie within r of -q' Re tau', where
  // r^2 = cutoff^2 Im tau' - (q' Im tau')^2. One unit of slack on either side
  // absorbs rounding; membership is decided by the exact length below.
  const double radius2 = cutoff * cutoff * ri;
  const auto q_max = static_cast<std::int64_t>(std::floor(cutoff / std::sqrt(ri))) + 1;

  std::vector<double> ps;
  std::vector<double> qs;
  for (std::int64_t qn = 0; qn <= q_max; ++qn) {
    const double y = static_cast<double>(qn) * ri;
    const double r = std::sqrt(std::max(0.0, radius2 - y * y));
    const double center = -static_cast<double>(qn) * rr;
    const auto p_lo = static_cast<std::int64_t>(std::floor(center - r)) - 1;
    const auto p_hi = static_cast<std::int64_t>(std::ceil(center + r)) + 1;
    for (std::int64_t pn = p_lo; pn <= p_hi; ++pn) {
      if (qn == 0 && pn <= 0) continue;  // one of each +- pair, and skip zero
      if (std::gcd(pn, qn) != 1) continue;
      std::int64_t p = 0, q = 0;
      to_old.apply(pn, qn, p, q);
      ps.push_back(static_cast<double>(p));
      qs.push_back(static_cast<double>(q));
    }
  }

  // Lengths are evaluated in the caller's coordinates so the cutoff test is
  // identical to evaluating slope_normalized_length directly.
  std::vector<double> lengths(ps.size());
  kernels::slope_lengths(shape.re(), shape.im(), std::sqrt(shape.im()), ps, qs, lengths);

  std::vector<ShortSlope> out;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (lengths[i] <= cutoff) {
      const Slope s = canonical_slope(
          {static_cast<std::int64_t>(ps[i]), static_cast<std::int64_t>(qs[i])});
      out.push_back({s, lengths[i]});
    }
  }
  std::sort(out.begin(), out.end(), [](const ShortSlope& x, const ShortSlope& y) {
    return std::tie(x.lhat, x.slope.p, x.slope.q) < std::tie(y.lhat, y.slope.p, y.slope.q);
  });
  return out;
}

}  // namespace dehn
