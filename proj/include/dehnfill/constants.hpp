#pragma once

#include <numbers>

namespace dehn {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// tanh of the critical tube radius R0 = arctanh(1/sqrt(3)).
inline constexpr double kTanhR0 = 1.0 / std::numbers::sqrt3;

/// R0 = arctanh(1/sqrt(3)) ~ 0.65848, the tube radius above which the boundary
/// term of the Weitzenboeck formula is non-negative.
inline constexpr double kR0 = 0.6584789484624085;

}  // namespace dehn
