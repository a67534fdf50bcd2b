#pragma once

#include <complex>

namespace meyer {

using ComplexAmp = std::complex<double>;

/// Linear transition ramp: 0 below 0, identity on [0, 1], 1 above 1.
double nu(double x);

/// Scale-function spectrum Phi(w), evenly extended to negative w.
double scale_spectrum(double w);

/// Wavelet spectrum Psi(w) = M(|w|) * exp(j*w/2).
ComplexAmp wavelet_spectrum(double w);

/// |Psi(w)|, without forming the phase factor.
double wavelet_spectrum_magnitude(double w);

namespace detail {

// Individual branch formulas, exposed so the branch-continuity check can
// evaluate both sides of a shared endpoint. Arguments are |w|.
double scale_flat_branch(double w);
double scale_taper_branch(double w);
double wavelet_lower_branch(double w);
double wavelet_upper_branch(double w);

}  // namespace detail

}  // namespace meyer
