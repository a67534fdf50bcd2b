#include "meyer/verification.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <future>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>

#include "meyer/closed_form.hpp"
#include "meyer/constants.hpp"
#include "meyer/errors.hpp"
#include "meyer/export.hpp"
#include "meyer/spectral.hpp"

namespace meyer {

namespace {

using Checks = std::vector<CheckResult>;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

CheckResult at_most(std::string name, double value, double tolerance, std::string detail = {}) {
    CheckResult c;
    c.name = std::move(name);
    c.value = value;
    c.tolerance = tolerance;
    c.passed = value <= tolerance;  // NaN fails
    c.detail = std::move(detail);
    return c;
}

CheckResult near_target(std::string name, double value, double target, double tolerance,
                        std::string detail = {}) {
    CheckResult c;
    c.name = std::move(name);
    c.value = value;
    c.tolerance = tolerance;
    c.kind = CheckKind::near_target;
    c.target = target;
    c.passed = std::abs(value - target) <= tolerance;
    c.detail = std::move(detail);
    return c;
}

CheckResult errored(std::string name, double tolerance, const std::exception& e) {
    return at_most(std::move(name), kNaN, tolerance, e.what());
}

// Equispaced grid of n points on [a, b].
std::vector<double> linspace(double a, double b, std::size_t n) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    return out;
}

template <typename F>
double max_over(const std::vector<double>& xs, F f) {
    double m = 0.0;
    for (double x : xs) m = std::max(m, std::abs(f(x)));
    return m;
}

std::string fmt(double v) {
    std::array<char, 32> buf{};
    std::snprintf(buf.data(), buf.size(), "%.6g", v);
    return buf.data();
}

// ---------------------------------------------------------------- spectral

Checks spectral_checks(const Tolerances& tol) {
    Checks out;
    const double level2 = 1.0 / kTwoPi;
    const auto transition = linspace(kBandLow, kBandMid, 10000);

    out.push_back(at_most("spectral_ramp_complementarity",
                          max_over(linspace(0.0, 1.0, 1001), [](double x) { return nu(x) + nu(1.0 - x) - 1.0; }),
                          tol.spectral_identity));

    using namespace detail;
    const std::array<double, 5> jumps{
        scale_flat_branch(kBandLow) - scale_taper_branch(kBandLow),
        scale_taper_branch(kBandMid),
        wavelet_lower_branch(kBandLow),
        wavelet_lower_branch(kBandMid) - wavelet_upper_branch(kBandMid),
        wavelet_upper_branch(kBandHigh),
    };
    double jump = 0.0;
    for (double j : jumps) jump = std::max(jump, std::abs(j));
    out.push_back(at_most("spectral_branch_continuity", jump, tol.spectral_identity));

    out.push_back(at_most("spectral_partition_scale", max_over(transition, [&](double w) {
                              const double a = scale_spectrum(w), b = scale_spectrum(kTwoPi - w);
                              return a * a + b * b - level2;
                          }),
                          tol.spectral_identity));

    out.push_back(at_most("spectral_partition_scale_wavelet", max_over(transition, [&](double w) {
                              const double a = scale_spectrum(w), b = wavelet_spectrum_magnitude(w);
                              return a * a + b * b - level2;
                          }),
                          tol.spectral_identity));

    out.push_back(at_most("spectral_littlewood_paley", max_over(transition, [&](double w) {
                              const double a = wavelet_spectrum_magnitude(w);
                              const double b = wavelet_spectrum_magnitude(2.0 * w);
                              return a * a + b * b - level2;
                          }),
                          tol.spectral_identity));

    out.push_back(at_most("spectral_product_identity",
                          max_over(linspace(kBandLow, kBandHigh, 10000), [](double w) {
                              return std::sqrt(kTwoPi) * scale_spectrum(0.5 * w) * scale_spectrum(w - kTwoPi) -
                                     wavelet_spectrum_magnitude(w);
                          }),
                          tol.spectral_identity));

    QuadratureConfig fine;
    fine.abs_tolerance = 1e-13;
    auto energy_density = [](double w) { const double a = scale_spectrum(w); return a * a; };
    double energy = 0.0;
    const std::array<double, 5> breaks{-kBandMid, -kBandLow, 0.0, kBandLow, kBandMid};
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        energy += integrate(energy_density, breaks[i], breaks[i + 1], fine);
    }
    out.push_back(at_most("spectral_energy", std::abs(energy - 1.0), tol.spectral_energy,
                          "integral of Phi^2 = " + fmt(energy)));
    return out;
}

// ------------------------------------------------------------- closed form

Checks closed_form_local_checks(const VerifyConfig& cfg, const Tolerances& tol) {
    Checks out;
    const SingularPointTable table = singular_points();

    struct Target {
        double (*f)(double, const SingularityGuard&);
        const std::vector<SingularPoint>* points;
    };
    const std::array<Target, 3> targets{{
        {&phi, &table.phi_points},
        {&psi1, &table.psi1_points},
        {&psi2, &table.psi2_points},
    }};
    double slope = 0.0;
    for (const auto& target : targets) {
        for (const auto& p : *target.points) {
            const double at = target.f(p.t, kDefaultGuard);
            for (double h : {1e-5, 1e-6, 1e-7}) {
                for (double sign : {-1.0, 1.0}) {
                    slope = std::max(slope, std::abs(at - target.f(p.t + sign * h, kDefaultGuard)) / h);
                }
            }
        }
    }
    out.push_back(at_most("closed_form_singularity_continuity", slope, tol.singularity_slope,
                          "max |f(s) - f(s+-h)|/h over all roots, h in {1e-5,1e-6,1e-7}"));

    const double phi0_expected = 2.0 / 3.0 + 4.0 / (3.0 * kPi);
    out.push_back(at_most("closed_form_anchor_phi0_exact", std::abs(phi(0.0) - phi0_expected), 0.0,
                          "phi(0) = 2/3 + 4/(3pi)"));
    try {
        const double o = phi_oracle(0.75, cfg.oracle);
        out.push_back(at_most("closed_form_anchor_phi_three_quarters", std::abs(phi(0.75) - o), tol.anchor,
                              "phi(0.75) = 2/(3pi) vs oracle " + fmt(o)));
    } catch (const std::exception& e) {
        out.push_back(errored("closed_form_anchor_phi_three_quarters", tol.anchor, e));
    }
    try {
        const double o = psi_oracle(0.5, cfg.oracle);
        out.push_back(at_most("closed_form_anchor_psi_half", std::abs(psi(0.5) - o), tol.anchor,
                              "psi(0.5) = 4/pi vs oracle " + fmt(o)));
    } catch (const std::exception& e) {
        out.push_back(errored("closed_form_anchor_psi_half", tol.anchor, e));
    }

    const auto offsets = linspace(0.0, 8.0, 1001);
    const double sym = std::max(max_over(offsets, [](double u) { return phi(u) - phi(-u); }),
                                max_over(offsets, [](double u) { return psi(0.5 + u) - psi(0.5 - u); }));
    out.push_back(at_most("closed_form_symmetry", sym, tol.symmetry, "phi even about 0, psi even about 1/2"));
    return out;
}

Checks oracle_agreement_checks(const VerifyConfig& cfg, const Tolerances& tol) {
    std::vector<double> ts = linspace(-8.0, 8.0, 4001);
    const SingularPointTable table = singular_points();
    for (const auto* pts : {&table.phi_points, &table.psi1_points, &table.psi2_points}) {
        for (const auto& p : *pts) ts.push_back(p.t);
    }
    try {
        double phi_err = 0.0, psi_err = 0.0;
        for (double t : ts) {
            phi_err = std::max(phi_err, std::abs(phi(t) - phi_oracle(t, cfg.oracle)));
            psi_err = std::max(psi_err, std::abs(psi(t) - psi_oracle(t, cfg.oracle)));
        }
        return {at_most("closed_form_vs_oracle_max_abs_error", std::max(phi_err, psi_err), tol.oracle_agreement,
                        "phi " + fmt(phi_err) + ", psi " + fmt(psi_err) + " over " + std::to_string(ts.size()) +
                            " points in [-8, 8]")};
    } catch (const std::exception& e) {
        return {errored("closed_form_vs_oracle_max_abs_error", tol.oracle_agreement, e)};
    }
}

Checks normalization_checks(const Tolerances& tol) {
    // Trapezoid rule on [-40, 41] with step 1/256.
    constexpr double dt = 1.0 / 256.0;
    constexpr double t0 = -40.0;
    constexpr std::size_t n = 81 * 256 + 1;
    auto grid_of = [&](auto f, double shift) {
        std::vector<double> v(n);
        for (std::size_t k = 0; k < n; ++k) v[k] = f(t0 + static_cast<double>(k) * dt - shift);
        return v;
    };
    auto trapezoid = [&](const std::vector<double>& a, const std::vector<double>& b) {
        double s = 0.0;
        for (std::size_t k = 0; k < n; ++k) s += a[k] * b[k];
        s -= 0.5 * (a.front() * b.front() + a.back() * b.back());
        return s * dt;
    };
    const auto phi_fn = [](double t) { return phi(t); };
    const auto psi_fn = [](double t) { return psi(t); };
    const auto ph = grid_of(phi_fn, 0.0);
    const auto ps = grid_of(psi_fn, 0.0);
    const std::vector<double> ones(n, 1.0);

    Checks out;
    const double int_phi = trapezoid(ph, ones);
    const double int_psi = trapezoid(ps, ones);
    out.push_back(at_most("closed_form_integral_phi", std::abs(int_phi - 1.0), tol.normalization,
                          "integral = " + fmt(int_phi)));
    out.push_back(at_most("closed_form_integral_psi", std::abs(int_psi), tol.normalization,
                          "integral = " + fmt(int_psi)));
    const double norm_phi = std::sqrt(trapezoid(ph, ph));
    const double norm_psi = std::sqrt(trapezoid(ps, ps));
    out.push_back(at_most("closed_form_energy_phi", std::abs(norm_phi - 1.0), tol.normalization,
                          "L2 norm = " + fmt(norm_phi)));
    out.push_back(at_most("closed_form_energy_psi", std::abs(norm_psi - 1.0), tol.normalization,
                          "L2 norm = " + fmt(norm_psi)));

    double orth_phi = 0.0, orth_psi = 0.0, orth_cross = 0.0;
    for (int shift = -3; shift <= 3; ++shift) {
        const double delta = shift == 0 ? 1.0 : 0.0;
        const auto ph_n = grid_of(phi_fn, shift);
        const auto ps_n = grid_of(psi_fn, shift);
        orth_phi = std::max(orth_phi, std::abs(trapezoid(ph, ph_n) - delta));
        orth_psi = std::max(orth_psi, std::abs(trapezoid(ps, ps_n) - delta));
        orth_cross = std::max(orth_cross, std::abs(trapezoid(ph, ps_n)));
    }
    out.push_back(at_most("closed_form_shift_orthogonality_phi", orth_phi, tol.orthogonality, "shifts -3..3"));
    out.push_back(at_most("closed_form_shift_orthogonality_psi", orth_psi, tol.orthogonality, "shifts -3..3"));
    out.push_back(at_most("closed_form_shift_orthogonality_cross", orth_cross, tol.orthogonality, "shifts -3..3"));
    return out;
}

Checks decay_checks(const Tolerances& tol) {
    const double slope = envelope_decay_slope();
    return {near_target("closed_form_decay_slope", slope, tol.decay_slope_target, tol.decay_slope,
                        "log-log slope of windowed peak |psi| over t in [5, 50]")};
}

// ------------------------------------------------------------------ oracle

Checks oracle_checks(const VerifyConfig& cfg, const Tolerances& tol) {
    Checks out;
    try {
        double diff = 0.0;
        for (double t : {0.0, 0.75, 2.3, -5.5, 7.9}) {
            diff = std::max(diff, std::abs(phi_oracle(t, cfg.oracle) - phi_oracle(t, cfg.oracle, 2)));
            diff = std::max(diff, std::abs(psi_oracle(t, cfg.oracle) - psi_oracle(t, cfg.oracle, 2)));
        }
        out.push_back(at_most("oracle_scheme_independence", diff, tol.scheme_independence,
                              "default vs halved panel width"));
    } catch (const std::exception& e) {
        out.push_back(errored("oracle_scheme_independence", tol.scheme_independence, e));
    }

    out.push_back(at_most("oracle_integrand_consistency",
                          max_over(linspace(kBandLow, kBandHigh, 10000), [](double w) {
                              return psi_oracle_weight(w) - 2.0 * kSpectrumLevel * wavelet_spectrum_magnitude(w);
                          }),
                          tol.spectral_identity));

    try {
        const double a = std::abs(phi_oracle(30.0, cfg.oracle));
        const double b = std::abs(psi_oracle(30.0, cfg.oracle));
        out.push_back(at_most("oracle_tail_decay", std::max(a, b), tol.oracle_tail,
                              "|phi_oracle(30)| = " + fmt(a) + ", |psi_oracle(30)| = " + fmt(b)));
    } catch (const std::exception& e) {
        out.push_back(errored("oracle_tail_decay", tol.oracle_tail, e));
    }
    return out;
}

// ------------------------------------------------------------------ signal

Checks signal_checks(const VerifyConfig& cfg, const Tolerances& tol) {
    Checks out;
    std::optional<SampledSignal> w, p;
    try {
        w = sample_on_grid([](double t) { return psi(t); }, cfg.grid_span, cfg.grid_dt);
        p = sample_on_grid([](double t) { return phi(t); }, cfg.grid_span, cfg.grid_dt);
    } catch (const std::exception& e) {
        for (auto [name, t] : std::array<std::pair<const char*, double>, 6>{{
                 {"signal_dft_roundtrip", tol.dft_roundtrip},
                 {"signal_parseval", tol.parseval},
                 {"signal_hilbert_involution", tol.hilbert_involution},
                 {"signal_quadrature_closure", tol.closure},
                 {"signal_scale_from_wavelet_closure", tol.closure},
                 {"signal_envelope_dominance", tol.envelope_slack},
             }}) {
            out.push_back(errored(name, t, e));
        }
        return out;
    }

    const ComplexSpectrumGrid spectrum = dft(*w);
    const SampledSignal back = idft(spectrum);
    double roundtrip = 0.0;
    for (std::size_t k = 0; k < w->size(); ++k) roundtrip = std::max(roundtrip, std::abs(back[k] - (*w)[k]));
    out.push_back(at_most("signal_dft_roundtrip", roundtrip, tol.dft_roundtrip));

    double time_energy = 0.0, freq_energy = 0.0;
    for (double v : w->samples()) time_energy += v * v;
    for (const auto& c : spectrum.coefficients) freq_energy += std::norm(c);
    freq_energy /= static_cast<double>(w->size());
    out.push_back(at_most("signal_parseval", std::abs(time_energy - freq_energy) / time_energy, tol.parseval));

    // Remove DC (and the Nyquist bin when N is even) so H^2 = -I holds exactly.
    ComplexSpectrumGrid cleaned = spectrum;
    cleaned.coefficients[0] = 0.0;
    if (cleaned.coefficients.size() % 2 == 0) cleaned.coefficients[cleaned.coefficients.size() / 2] = 0.0;
    const SampledSignal zero_mean = idft(cleaned);
    const SampledSignal hh = hilbert(hilbert(zero_mean));
    double involution = 0.0;
    for (std::size_t k = 0; k < hh.size(); ++k) involution = std::max(involution, std::abs(hh[k] + zero_mean[k]));
    out.push_back(at_most("signal_hilbert_involution", involution, tol.hilbert_involution));

    const auto [lo, hi] = interior_range(w->size());
    auto interior_max = [lo = lo, hi = hi](const SampledSignal& a, const SampledSignal& b) {
        double m = 0.0;
        for (std::size_t k = lo; k < hi; ++k) m = std::max(m, std::abs(a[k] - b[k]));
        return m;
    };

    try {
        const auto parts = decompose_quadrature(*w, cfg.cutoff);
        const SampledSignal rec = reconstruct_quadrature(parts.in_phase, parts.quadrature);
        out.push_back(at_most("signal_quadrature_closure", interior_max(rec, *w), tol.closure,
                              "interior max |reconstruct(decompose(psi)) - psi|"));
    } catch (const std::exception& e) {
        out.push_back(errored("signal_quadrature_closure", tol.closure, e));
    }

    try {
        const SampledSignal lsb = scale_from_wavelet(*w);
        out.push_back(at_most("signal_scale_from_wavelet_closure", interior_max(lsb, *p), tol.closure,
                              "interior max |psi cos + H[psi] sin - phi|"));
    } catch (const std::exception& e) {
        out.push_back(errored("signal_scale_from_wavelet_closure", tol.closure, e));
    }

    try {
        if (!(cfg.grid_dt < kMaxWaveletStep)) {
            throw GridTooCoarse("envelope dominance: grid step does not resolve 8*pi/3 (need dt < 3/8)");
        }
        const SampledSignal env = envelope(*w);
        double deficit = -std::numeric_limits<double>::infinity();
        for (std::size_t k = lo; k < hi; ++k) deficit = std::max(deficit, std::abs((*p)[k]) - env[k]);
        out.push_back(at_most("signal_envelope_dominance", deficit, tol.envelope_slack,
                              "interior max (|phi| - envelope(psi))"));
    } catch (const std::exception& e) {
        out.push_back(errored("signal_envelope_dominance", tol.envelope_slack, e));
    }
    return out;
}

// ------------------------------------------------------------------ export

Checks export_checks(const Tolerances& tol) {
    ExportRequest req;
    req.function = ExportFunction::phi;
    const Series series = evaluate(req);
    std::stringstream buffer;
    write_csv(buffer, series);
    const Series parsed = read_csv(buffer);
    double diff = parsed.values.size() == series.values.size() ? 0.0 : std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < std::min(parsed.values.size(), series.values.size()); ++k) {
        diff = std::max({diff, std::abs(parsed.values[k] - series.values[k]),
                         std::abs(parsed.abscissa[k] - series.abscissa[k])});
    }
    return {at_most("export_csv_roundtrip", diff, tol.csv_roundtrip, "phi on [-8, 8] step 0.01")};
}

}  // namespace

Tolerances Tolerances::scaled(double factor) const {
    Tolerances t = *this;
    for (double* v : {&t.spectral_identity, &t.spectral_energy, &t.oracle_agreement, &t.anchor,
                      &t.singularity_slope, &t.symmetry, &t.normalization, &t.orthogonality, &t.decay_slope,
                      &t.oracle_tail, &t.scheme_independence, &t.dft_roundtrip, &t.parseval,
                      &t.hilbert_involution, &t.closure, &t.envelope_slack, &t.csv_roundtrip}) {
        *v *= factor;
    }
    return t;
}

bool VerificationReport::overall_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerificationReport::find(const std::string& name) const {
    for (const auto& c : checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

SampledSignal sample_on_grid(double (*f)(double), double span, double dt) {
    if (!(span > 0.0) || !(dt > 0.0) || !std::isfinite(span) || !std::isfinite(dt)) {
        throw InvalidGrid("verification grid: span and dt must be finite and > 0");
    }
    const auto n = static_cast<std::size_t>(std::llround(2.0 * span / dt)) + 1;
    return sample(f, -span, dt, n);
}

double envelope_decay_slope(double t_begin, double t_end) {
    // Windows span one period of the slowest oscillation, cos(2*pi*t/3).
    constexpr double window = 3.0;
    constexpr double step = 1.0 / 64.0;
    std::vector<double> log_t, log_peak;
    for (double a = t_begin; a + window <= t_end + 1e-12; a += window) {
        double peak = 0.0;
        for (double t = a; t <= a + window; t += step) peak = std::max(peak, std::abs(psi(t)));
        log_t.push_back(std::log(a + 0.5 * window));
        log_peak.push_back(std::log(peak));
    }
    const double n = static_cast<double>(log_t.size());
    const double mx = std::accumulate(log_t.begin(), log_t.end(), 0.0) / n;
    const double my = std::accumulate(log_peak.begin(), log_peak.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < log_t.size(); ++i) {
        sxy += (log_t[i] - mx) * (log_peak[i] - my);
        sxx += (log_t[i] - mx) * (log_t[i] - mx);
    }
    return sxy / sxx;
}

VerificationReport run_verification(const VerifyConfig& cfg) {
    const Tolerances tol = Tolerances{}.scaled(cfg.tolerance_scale);

    std::vector<std::function<Checks()>> groups{
        [&] { return spectral_checks(tol); },
        [&] { return closed_form_local_checks(cfg, tol); },
        [&] { return oracle_agreement_checks(cfg, tol); },
        [&] { return normalization_checks(tol); },
        [&] { return decay_checks(tol); },
        [&] { return oracle_checks(cfg, tol); },
        [&] { return signal_checks(cfg, tol); },
        [&] { return export_checks(tol); },
    };
    std::vector<std::future<Checks>> pending;
    pending.reserve(groups.size());
    for (auto& g : groups) pending.push_back(std::async(std::launch::async, g));

    VerificationReport report;
    for (auto& f : pending) {
        auto part = f.get();
        report.checks.insert(report.checks.end(), part.begin(), part.end());
    }

    std::ostringstream grid;
    grid << "signal grid t in [" << format_double(-cfg.grid_span) << ", " << format_double(cfg.grid_span)
         << "], dt=" << format_double(cfg.grid_dt) << ", cutoff=" << format_double(cfg.cutoff)
         << ", oracle tolerance=" << format_double(cfg.oracle.abs_tolerance)
         << ", tolerance scale=" << format_double(cfg.tolerance_scale);
    report.grid_description = grid.str();
    return report;
}

std::string format_table(const VerificationReport& report) {
    std::ostringstream os;
    char line[256];
    std::snprintf(line, sizeof line, "%-40s %14s %14s  %s\n", "check", "value", "tolerance", "status");
    os << line;
    for (const auto& c : report.checks) {
        const std::string tol = c.kind == CheckKind::near_target
                                    ? fmt(c.target) + "+-" + fmt(c.tolerance)
                                    : fmt(c.tolerance);
        std::snprintf(line, sizeof line, "%-40s %14s %14s  %s\n", c.name.c_str(), fmt(c.value).c_str(),
                      tol.c_str(), c.passed ? "PASS" : "FAIL");
        os << line;
        if (!c.passed && !c.detail.empty()) os << "    " << c.detail << '\n';
    }
    os << "grid: " << report.grid_description << '\n';
    os << "overall: " << (report.overall_pass() ? "PASS" : "FAIL") << '\n';
    return os.str();
}

std::string to_json(const VerificationReport& report, const std::string& timestamp) {
    nlohmann::ordered_json j;
    j["timestamp"] = timestamp;
    j["grid"] = report.grid_description;
    j["overall_pass"] = report.overall_pass();
    auto& checks = j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
        nlohmann::ordered_json entry;
        entry["name"] = c.name;
        entry["value"] = c.value;  // NaN serializes as null
        entry["tolerance"] = c.tolerance;
        entry["kind"] = c.kind == CheckKind::at_most ? "at_most" : "near_target";
        if (c.kind == CheckKind::near_target) entry["target"] = c.target;
        entry["passed"] = c.passed;
        entry["detail"] = c.detail;
        checks.push_back(std::move(entry));
    }
    return j.dump(2) + "\n";
}

}  // namespace meyer
