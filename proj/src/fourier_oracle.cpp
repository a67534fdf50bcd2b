#include "meyer/fourier_oracle.hpp"

#include <array>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "meyer/constants.hpp"
#include "meyer/errors.hpp"
#include "meyer/spectral.hpp"

namespace meyer {

namespace {

struct GaussRule {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;
};

// Newton iteration on P_n from the Chebyshev initial guess.
GaussRule make_gauss_legendre(int n) {
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 1; j <= n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / j;
            }
            dp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / dp;
            z -= dz;
            if (std::abs(dz) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - z * z) * dp * dp);
        rule.nodes[i] = -z;
        rule.nodes[n - 1 - i] = z;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

const GaussRule& gauss_rule(int n) {
    thread_local std::map<int, GaussRule> cache;
    auto it = cache.find(n);
    if (it == cache.end()) {
        it = cache.emplace(n, make_gauss_legendre(n)).first;
    }
    return it->second;
}

double composite(const std::function<double(double)>& f, double a, double b,
                 const GaussRule& rule, long panels) {
    const double width = (b - a) / static_cast<double>(panels);
    const double half = 0.5 * width;
    double sum = 0.0;
    for (long p = 0; p < panels; ++p) {
        const double mid = a + (static_cast<double>(p) + 0.5) * width;
        double panel = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            panel += rule.weights[i] * f(mid + half * rule.nodes[i]);
        }
        sum += half * panel;
    }
    return sum;
}

// Starting panel count: one per unit of |t| so cos(w*t) is resolved before doubling.
int panels_for(double t, int multiplier) {
    const double base = std::max(1.0, std::ceil(std::abs(t)));
    return static_cast<int>(std::min(base, 1e6)) * std::max(1, multiplier);
}

void require_finite(double t) {
    if (!std::isfinite(t)) {
        throw std::domain_error("meyer: non-finite time argument");
    }
}

}  // namespace

void validate(const QuadratureConfig& cfg) {
    if (!(cfg.abs_tolerance >= 1e-14)) {
        throw InvalidConfig("quadrature abs_tolerance must be >= 1e-14");
    }
    if (cfg.max_panel_doublings < 1 || cfg.max_panel_doublings > 30) {
        throw InvalidConfig("quadrature max_panel_doublings must be in [1, 30]");
    }
    if (cfg.panel_nodes < 1 || cfg.panel_nodes > 64) {
        throw InvalidConfig("quadrature panel_nodes must be in [1, 64]");
    }
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureConfig& cfg, int initial_panels) {
    validate(cfg);
    if (!(a <= b)) {
        throw std::invalid_argument("integrate: require a <= b");
    }
    if (a == b) return 0.0;

    const GaussRule& rule = gauss_rule(cfg.panel_nodes);
    long panels = std::max(1, initial_panels);
    double previous = composite(f, a, b, rule, panels);
    double error = 0.0;
    for (int level = 1; level <= cfg.max_panel_doublings; ++level) {
        panels *= 2;
        const double current = composite(f, a, b, rule, panels);
        error = std::abs(current - previous);
        if (error <= cfg.abs_tolerance) {
            return current;
        }
        previous = current;
    }
    std::ostringstream msg;
    msg << "integrate: no convergence on [" << a << ", " << b << "] after "
        << cfg.max_panel_doublings << " doublings (error " << error << ")";
    throw NoConvergence(msg.str(), previous, error);
}

double phi_oracle(double t, const QuadratureConfig& cfg, int panel_multiplier) {
    require_finite(t);
    QuadratureConfig piece = cfg;
    piece.abs_tolerance = std::max(1e-14, cfg.abs_tolerance / 2.0);
    const int panels = panels_for(t, panel_multiplier);
    auto integrand = [t](double w) { return scale_spectrum(w) * std::cos(w * t); };
    const double flat = integrate(integrand, 0.0, kBandLow, piece, panels);
    const double taper = integrate(integrand, kBandLow, kBandMid, piece, panels);
    return 2.0 * kSpectrumLevel * (flat + taper);
}

double psi_oracle_weight(double w) {
    return 2.0 * scale_spectrum(0.5 * w) * scale_spectrum(w - kTwoPi);
}

double psi_oracle(double t, const QuadratureConfig& cfg, int panel_multiplier) {
    require_finite(t);
    // Phi(w/2) has a kink at w = 4pi/3, Phi(w - 2pi) at w = 4pi/3 and w = 2pi.
    constexpr std::array<double, 4> breaks{kBandLow, kBandMid, kTwoPi, kBandHigh};
    QuadratureConfig piece = cfg;
    piece.abs_tolerance = std::max(1e-14, cfg.abs_tolerance / 3.0);
    const int panels = panels_for(t, panel_multiplier);
    const double shift = t - 0.5;
    auto integrand = [shift](double w) { return psi_oracle_weight(w) * std::cos(w * shift); };
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        sum += integrate(integrand, breaks[i], breaks[i + 1], piece, panels);
    }
    return sum;
}

}  // namespace meyer
