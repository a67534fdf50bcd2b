#include "meyer/spectral.hpp"

#include <cmath>
#include <stdexcept>

#include "meyer/constants.hpp"

namespace meyer {

namespace {

void require_finite(double w) {
    if (!std::isfinite(w)) {
        throw std::domain_error("meyer: non-finite angular frequency");
    }
}

}  // namespace

double nu(double x) {
    if (!std::isfinite(x)) {
        throw std::domain_error("meyer: non-finite ramp argument");
    }
    if (x < 0.0) return 0.0;
    if (x <= 1.0) return x;
    return 1.0;
}

namespace detail {

double scale_flat_branch(double) { return kSpectrumLevel; }

double scale_taper_branch(double w) {
    return kSpectrumLevel * std::cos(0.5 * kPi * nu(3.0 * w / kTwoPi - 1.0));
}

double wavelet_lower_branch(double w) {
    return kSpectrumLevel * std::sin(0.5 * kPi * nu(3.0 * w / kTwoPi - 1.0));
}

double wavelet_upper_branch(double w) {
    return kSpectrumLevel * std::cos(0.5 * kPi * nu(3.0 * w / (2.0 * kTwoPi) - 1.0));
}

}  // namespace detail

double scale_spectrum(double w) {
    require_finite(w);
    const double aw = std::abs(w);
    if (aw <= kBandLow) return detail::scale_flat_branch(aw);
    if (aw <= kBandMid) return detail::scale_taper_branch(aw);
    return 0.0;
}

double wavelet_spectrum_magnitude(double w) {
    require_finite(w);
    const double aw = std::abs(w);
    if (aw < kBandLow) return 0.0;
    if (aw <= kBandMid) return detail::wavelet_lower_branch(aw);
    if (aw <= kBandHigh) return detail::wavelet_upper_branch(aw);
    return 0.0;
}

ComplexAmp wavelet_spectrum(double w) {
    const double m = wavelet_spectrum_magnitude(w);
    if (m == 0.0) return {0.0, 0.0};
    return std::polar(m, 0.5 * w);
}

}  // namespace meyer
