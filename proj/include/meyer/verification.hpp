#pragma once

#include <string>
#include <vector>

#include "meyer/fourier_oracle.hpp"
#include "meyer/signal.hpp"

namespace meyer {

/// Every threshold used by the verification suite, in one place.
/// The report echoes the active value next to each computed metric.
struct Tolerances {
    double spectral_identity = 1e-12;
    double spectral_energy = 1e-10;
    double oracle_agreement = 1e-8;
    double anchor = 1e-10;
    double singularity_slope = 10.0;  // bound on |f(s) - f(s +- h)| / h
    double symmetry = 1e-12;
    double normalization = 1e-6;
    double orthogonality = 1e-5;
    double decay_slope_target = -3.0;
    double decay_slope = 0.3;
    double oracle_tail = 1e-3;
    double scheme_independence = 1e-10;
    double dft_roundtrip = 1e-12;
    double parseval = 1e-10;
    double hilbert_involution = 1e-10;
    double closure = 1e-3;
    double envelope_slack = 1e-3;
    double csv_roundtrip = 0.0;

    /// Scales every tolerance except the decay target, which is a location.
    Tolerances scaled(double factor) const;
};

struct VerifyConfig {
    double grid_dt = 1.0 / 64.0;
    double grid_span = 16.0;  // signal grid covers [-span, span]
    double cutoff = kDefaultCutoff;
    double tolerance_scale = 1.0;
    QuadratureConfig oracle{};  // abs_tolerance 1e-10 by default
};

enum class CheckKind {
    at_most,      // passed iff value <= tolerance
    near_target,  // passed iff |value - target| <= tolerance
};

struct CheckResult {
    std::string name;
    double value = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    CheckKind kind = CheckKind::at_most;
    double target = 0.0;
    std::string detail;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    std::string grid_description;

    bool overall_pass() const;
    const CheckResult* find(const std::string& name) const;
};

/// Runs every property check. Check groups run concurrently; the merged
/// order is fixed, so the report is deterministic.
VerificationReport run_verification(const VerifyConfig& cfg = {});

std::string format_table(const VerificationReport& report);

/// Machine-readable report. `timestamp` is the only field that varies between runs.
std::string to_json(const VerificationReport& report, const std::string& timestamp);

/// Log-log least-squares slope of the windowed peak |psi| over [t_begin, t_end].
double envelope_decay_slope(double t_begin = 5.0, double t_end = 50.0);

/// Centered verification grid [-span, span] with step dt.
SampledSignal sample_on_grid(double (*f)(double), double span, double dt);

}  // namespace meyer
