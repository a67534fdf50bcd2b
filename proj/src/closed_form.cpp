#include "meyer/closed_form.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "meyer/constants.hpp"

namespace meyer {

namespace {

// cos(theta + k*pi/2) and sin(theta + k*pi/2) without rounding the shift.
double cos_quarter_shift(double c, double s, int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return c;
        case 1: return -s;
        case 2: return -c;
        default: return s;
    }
}

double sin_quarter_shift(double c, double s, int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return s;
        case 1: return c;
        case 2: return -s;
        default: return -c;
    }
}

// All three closed forms share the shape
//     N(x) / D(x),  N(x) = a*x*cos(b*x) + c*sin(d*x),  D(x) = p*x + q*x^3,
// where x is t (phi) or t - 1/2 (psi1, psi2). D has roots 0 and
// +-sqrt(-p/q); N vanishes at each of them, so every root is removable.
struct RationalKernel {
    double a, b, c, d;
    double p, q;
    std::array<double, 3> roots;

    double numerator(double x) const { return a * x * std::cos(b * x) + c * std::sin(d * x); }
    double denominator(double x) const { return x * (p + q * x * x); }

    // k-th derivative of N at x, k >= 1.
    double numerator_derivative(int k, double x) const {
        const double cb = std::cos(b * x), sb = std::sin(b * x);
        const double cd = std::cos(d * x), sd = std::sin(d * x);
        const double bk = std::pow(b, k);
        const double bk1 = std::pow(b, k - 1);
        const double x_cos = x * bk * cos_quarter_shift(cb, sb, k) +
                             k * bk1 * cos_quarter_shift(cb, sb, k - 1);
        return a * x_cos + c * std::pow(d, k) * sin_quarter_shift(cd, sd, k);
    }

    // N'(r) / D'(r): the limit at a root.
    double limit(double r) const { return numerator_derivative(1, r) / (p + 3.0 * q * r * r); }

    // Ratio of Taylor polynomials about root r, with the common factor h
    // cancelled. The cubic denominator is represented exactly:
    //     D(r + h) = h * (D'(r) + 3*q*r*h + q*h^2).
    double expand(double r, double h, int order) const {
        double num = 0.0;
        double hk = 1.0;
        double factorial = 1.0;
        for (int k = 1; k <= order + 1; ++k) {
            factorial *= k;
            num += numerator_derivative(k, r) / factorial * hk;
            hk *= h;
        }
        const double den = (p + 3.0 * q * r * r) + 3.0 * q * r * h + q * h * h;
        return num / den;
    }

    double evaluate(double x, const SingularityGuard& guard) const {
        if (std::abs(x) <= kDirectEvaluationThreshold) {
            for (double r : roots) {
                const double h = x - r;
                if (std::abs(h) < guard.guard_radius) {
                    return expand(r, h, guard.expansion_order);
                }
            }
        }
        return numerator(x) / denominator(x);
    }
};

// phi:  [sin(2pi t/3) + (4/3) t cos(4pi t/3)] / [pi t - (16pi/9) t^3]
//   limit at 0:     (2pi/3 + 4/3) / pi           = 2/3 + 4/(3pi)
//   limit at +-3/4: (-4/3) / (-2pi)               = 2/(3pi)
const RationalKernel kPhiKernel{
    4.0 / 3.0, 4.0 * kPi / 3.0, 1.0, 2.0 * kPi / 3.0,
    kPi, -16.0 * kPi / 9.0,
    {-0.75, 0.0, 0.75},
};

// psi1 in x = t - 1/2:  [(4/(3pi)) x cos(2pi x/3) - (1/pi) sin(4pi x/3)] / [x - (16/9) x^3]
//   limit at 0:     4/(3pi) - 4/3
//   limit at +-3/4: -1/3
const RationalKernel kPsi1Kernel{
    4.0 / (3.0 * kPi), 2.0 * kPi / 3.0, -1.0 / kPi, 4.0 * kPi / 3.0,
    1.0, -16.0 / 9.0,
    {-0.75, 0.0, 0.75},
};

// psi2 in x = t - 1/2:  [(8/(3pi)) x cos(8pi x/3) + (1/pi) sin(4pi x/3)] / [x - (64/9) x^3]
//   limit at 0:     8/(3pi) + 4/3
//   limit at +-3/8: 4/(3pi)
const RationalKernel kPsi2Kernel{
    8.0 / (3.0 * kPi), 8.0 * kPi / 3.0, 1.0 / kPi, 4.0 * kPi / 3.0,
    1.0, -64.0 / 9.0,
    {-0.375, 0.0, 0.375},
};

void require_finite(double t) {
    if (!std::isfinite(t)) {
        throw std::domain_error("meyer: non-finite time argument");
    }
}

std::vector<SingularPoint> points_of(const RationalKernel& kernel, double shift) {
    std::vector<SingularPoint> out;
    for (double r : kernel.roots) {
        out.push_back({r + shift, kernel.limit(r)});
    }
    return out;
}

std::vector<double> abscissas(const std::vector<SingularPoint>& points) {
    std::vector<double> out;
    out.reserve(points.size());
    for (const auto& p : points) out.push_back(p.t);
    return out;
}

}  // namespace

double phi(double t, const SingularityGuard& guard) {
    require_finite(t);
    if (t == 0.0) return 2.0 / 3.0 + 4.0 / (3.0 * kPi);
    return kPhiKernel.evaluate(t, guard);
}

double psi1(double t, const SingularityGuard& guard) {
    require_finite(t);
    return kPsi1Kernel.evaluate(t - 0.5, guard);
}

double psi2(double t, const SingularityGuard& guard) {
    require_finite(t);
    return kPsi2Kernel.evaluate(t - 0.5, guard);
}

double psi(double t, const SingularityGuard& guard) {
    require_finite(t);
    const double x = t - 0.5;
    return kPsi1Kernel.evaluate(x, guard) + kPsi2Kernel.evaluate(x, guard);
}

double psi_jk(double t, int j, int k) {
    const double scale = std::ldexp(1.0, j);
    return std::sqrt(scale) * psi(scale * t - k);
}

std::vector<double> SingularPointTable::phi_singularities() const { return abscissas(phi_points); }
std::vector<double> SingularPointTable::psi1_singularities() const { return abscissas(psi1_points); }
std::vector<double> SingularPointTable::psi2_singularities() const { return abscissas(psi2_points); }

SingularPointTable singular_points() {
    SingularPointTable table;
    table.phi_points = points_of(kPhiKernel, 0.0);
    table.phi_points[1].limit = phi(0.0);
    table.psi1_points = points_of(kPsi1Kernel, 0.5);
    table.psi2_points = points_of(kPsi2Kernel, 0.5);
    return table;
}

}  // namespace meyer
