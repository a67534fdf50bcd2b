#pragma once

#include <cmath>
#include <numbers>

namespace meyer {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * kPi;

// Band edges of the scale and wavelet spectra.
inline constexpr double kBandLow = 2.0 * kPi / 3.0;
inline constexpr double kBandMid = 4.0 * kPi / 3.0;
inline constexpr double kBandHigh = 8.0 * kPi / 3.0;

/// 1/sqrt(2*pi), the flat-band level of the scale spectrum.
inline const double kSpectrumLevel = 1.0 / std::sqrt(kTwoPi);

/// Demodulation carrier (6*pi/3 rad per unit time).
inline constexpr double kCarrier = kTwoPi;

}  // namespace meyer
