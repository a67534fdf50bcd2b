#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "meyer/constants.hpp"
#include "meyer/errors.hpp"
#include "meyer/fourier_oracle.hpp"
#include "meyer/spectral.hpp"

using namespace meyer;

TEST_CASE("integrate textbook integrals") {
    CHECK(integrate([](double) { return 1.0; }, 0.0, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(integrate([](double x) { return std::sin(x); }, 0.0, kPi) == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(std::abs(integrate([](double x) { return x * x * x; }, -1.0, 1.0)) <= 1e-14);
    CHECK(integrate([](double x) { return std::exp(x); }, 0.0, 0.0) == 0.0);
    CHECK(integrate([](double x) { return std::cos(40.0 * x); }, 0.0, 1.0, {}, 40) ==
          doctest::Approx(std::sin(40.0) / 40.0).epsilon(1e-12));
}

TEST_CASE("integrate rejects bad configuration and reversed bounds") {
    QuadratureConfig cfg;
    cfg.abs_tolerance = 1e-15;
    CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 0.0, 1.0, cfg), InvalidConfig);
    cfg = {};
    cfg.max_panel_doublings = 31;
    CHECK_THROWS_AS(validate(cfg), InvalidConfig);
    cfg = {};
    cfg.panel_nodes = 0;
    CHECK_THROWS_AS(validate(cfg), InvalidConfig);
    CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("integrate reports non-convergence with the last estimate") {
    // sqrt has an endpoint singularity in its derivative; a 1-node rule with
    // 2 doublings cannot reach 1e-14.
    QuadratureConfig cfg;
    cfg.abs_tolerance = 1e-14;
    cfg.max_panel_doublings = 2;
    cfg.panel_nodes = 1;
    try {
        integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0, cfg);
        FAIL("expected NoConvergence");
    } catch (const NoConvergence& e) {
        CHECK(e.estimate() == doctest::Approx(2.0 / 3.0).epsilon(0.05));
        CHECK(e.achieved_error() > 1e-14);
    }
}

TEST_CASE("oracle anchor values") {
    QuadratureConfig cfg;
    cfg.abs_tolerance = 1e-10;
    CHECK(std::abs(phi_oracle(0.0, cfg) - (2.0 / 3.0 + 4.0 / (3.0 * kPi))) <= 1e-10);
    CHECK(std::abs(phi_oracle(0.75, cfg) - 2.0 / (3.0 * kPi)) <= 1e-10);
    CHECK(std::abs(psi_oracle(0.5, cfg) - 4.0 / kPi) <= 1e-10);
}

TEST_CASE("oracle symmetries") {
    for (double u : {0.1, 0.9, 2.75, 7.3, 15.2}) {
        CHECK(phi_oracle(u) == doctest::Approx(phi_oracle(-u)).epsilon(1e-12));
        CHECK(std::abs(psi_oracle(0.5 + u) - psi_oracle(0.5 - u)) <= 1e-10);
    }
}

TEST_CASE("halving the panel width changes results below the tolerance") {
    QuadratureConfig cfg;
    for (double t : {0.0, 0.3, 3.3, -7.7, 12.0}) {
        CAPTURE(t);
        CHECK(std::abs(phi_oracle(t, cfg) - phi_oracle(t, cfg, 2)) <= cfg.abs_tolerance);
        CHECK(std::abs(psi_oracle(t, cfg) - psi_oracle(t, cfg, 2)) <= cfg.abs_tolerance);
    }
}

TEST_CASE("wavelet integrand weight is the scaled spectrum magnitude") {
    for (int i = 0; i <= 10000; ++i) {
        const double w = kBandLow + (kBandHigh - kBandLow) * i / 10000.0;
        CHECK(std::abs(psi_oracle_weight(w) - 2.0 * kSpectrumLevel * wavelet_spectrum_magnitude(w)) <= 1e-12);
    }
}

TEST_CASE("oracles vanish far from the centre") {
    CHECK(std::abs(phi_oracle(30.0)) < 1e-3);
    CHECK(std::abs(psi_oracle(30.0)) < 1e-3);
    CHECK(std::abs(psi_oracle(-30.0)) < 1e-3);
}

TEST_CASE("spectral energy of the scale function is one") {
    QuadratureConfig cfg;
    cfg.abs_tolerance = 1e-13;
    auto density = [](double w) { const double a = scale_spectrum(w); return a * a; };
    const double energy = 2.0 * (integrate(density, 0.0, kBandLow, cfg) + integrate(density, kBandLow, kBandMid, cfg));
    CHECK(std::abs(energy - 1.0) <= 1e-12);
}

TEST_CASE("oracles propagate non-convergence") {
    QuadratureConfig cfg;
    cfg.abs_tolerance = 1e-14;
    cfg.max_panel_doublings = 1;
    cfg.panel_nodes = 1;
    CHECK_THROWS_AS(phi_oracle(3.0, cfg), NoConvergence);
    CHECK_THROWS_AS(psi_oracle(3.0, cfg), NoConvergence);
}
