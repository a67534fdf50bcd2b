#pragma once

#include <functional>

namespace meyer {

struct QuadratureConfig {
    double abs_tolerance = 1e-10;
    int max_panel_doublings = 20;
    int panel_nodes = 12;
};

/// Throws InvalidConfig unless abs_tolerance >= 1e-14, 1 <= doublings <= 30
/// and panel_nodes >= 1.
void validate(const QuadratureConfig& cfg);

/// Composite Gauss-Legendre quadrature of f over [a, b].
///
/// Starts from `initial_panels` equal panels and doubles the panel count
/// until two successive estimates differ by at most cfg.abs_tolerance.
/// Throws NoConvergence carrying the last estimate when the doubling budget
/// runs out.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureConfig& cfg = {}, int initial_panels = 1);

/// Scaling function by direct quadrature of its inverse Fourier integral.
/// `panel_multiplier` scales the starting panel count (scheme-independence checks).
double phi_oracle(double t, const QuadratureConfig& cfg = {}, int panel_multiplier = 1);

/// Wavelet by direct quadrature of its inverse Fourier integral.
double psi_oracle(double t, const QuadratureConfig& cfg = {}, int panel_multiplier = 1);

/// The wavelet integrand's spectral factor 2 * Phi(w/2) * Phi(w - 2*pi).
double psi_oracle_weight(double w);

}  // namespace meyer
