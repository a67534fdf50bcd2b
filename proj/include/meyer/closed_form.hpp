#pragma once

#include <vector>

namespace meyer {

/// Controls evaluation near the removable singularities of the closed forms.
///
/// Inside `guard_radius` of a denominator root the numerator is replaced by
/// its Taylor polynomial about the root (terms up to h^(order + 1)), the
/// common factor h is cancelled against the cubic denominator, and the
/// ratio of the reduced polynomials is returned. Outside the radius the
/// rational expression is evaluated directly.
struct SingularityGuard {
    double guard_radius = 1e-4;
    int expansion_order = 4;
};

inline constexpr SingularityGuard kDefaultGuard{};

/// Beyond this |t| the rational forms are evaluated directly, no root search.
inline constexpr double kDirectEvaluationThreshold = 1e8;

/// Meyer scaling function, closed form. Even in t, peak 2/3 + 4/(3*pi) at t = 0.
double phi(double t, const SingularityGuard& guard = kDefaultGuard);

/// Low-band wavelet component, even about t = 1/2.
double psi1(double t, const SingularityGuard& guard = kDefaultGuard);

/// High-band wavelet component, even about t = 1/2.
double psi2(double t, const SingularityGuard& guard = kDefaultGuard);

/// Meyer wavelet, psi1 + psi2.
double psi(double t, const SingularityGuard& guard = kDefaultGuard);

/// Dilated and translated wavelet 2^(j/2) * psi(2^j * t - k).
double psi_jk(double t, int j, int k);

struct SingularPoint {
    double t;
    double limit;
};

/// Denominator roots of each closed form together with the analytic limit there.
struct SingularPointTable {
    std::vector<SingularPoint> phi_points;
    std::vector<SingularPoint> psi1_points;
    std::vector<SingularPoint> psi2_points;

    std::vector<double> phi_singularities() const;
    std::vector<double> psi1_singularities() const;
    std::vector<double> psi2_singularities() const;
};

SingularPointTable singular_points();

}  // namespace meyer
