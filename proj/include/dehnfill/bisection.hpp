#pragma once

#include <cmath>
#include <concepts>

#include "dehnfill/errors.hpp"

namespace dehn {

/// Solves fn(x) = target for a strictly decreasing fn on [lo, hi] with
/// fn(lo) >= target >= fn(hi). Bisects until the bracket cannot shrink in
/// floating point, then returns whichever endpoint has the smaller residual.
template <std::invocable<double> Fn>
double bisect_decreasing(Fn&& fn, double target, double lo, double hi) {
  if (!(lo < hi)) throw DomainError("bisection bracket must satisfy lo < hi");
  double f_lo = fn(lo);
  double f_hi = fn(hi);
  if (!(f_lo >= target && target >= f_hi)) {
    throw DomainError("bisection target is not bracketed");
  }
  for (int iter = 0; iter < 2000; ++iter) {
    const double mid = lo + 0.5 * (hi - lo);
    if (!(mid > lo && mid < hi)) break;
    const double f_mid = fn(mid);
    if (f_mid == target) return mid;
    if (f_mid > target) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
      f_hi = f_mid;
    }
  }
  return std::abs(f_lo - target) <= std::abs(f_hi - target) ? lo : hi;
}

}  // namespace dehn
