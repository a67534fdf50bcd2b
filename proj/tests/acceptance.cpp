// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fail.

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "meyer/closed_form.hpp"
#include "meyer/constants.hpp"
#include "meyer/export.hpp"
#include "meyer/fourier_oracle.hpp"
#include "meyer/signal.hpp"
#include "meyer/spectral.hpp"
#include "meyer/verification.hpp"

using namespace meyer;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(const char* id, const std::string& what, bool ok, const std::string& measured) {
    std::printf("[%s] %-4s %-58s %s\n", ok ? "PASS" : "FAIL", id, what.c_str(), measured.c_str());
    if (!ok) ++failures;
}

std::string g(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

std::vector<double> linspace(double a, double b, std::size_t n) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
    return v;
}

struct Run {
    int status;
    std::string out;
};

Run run_cli(const std::string& args) {
    const fs::path out = fs::temp_directory_path() / "meyer_acceptance_stdout.txt";
    const std::string cmd = std::string(MEYER_CLI_PATH) + " " + args + " > " + out.string() + " 2>/dev/null";
    const int raw = std::system(cmd.c_str());
    std::ifstream is(out);
    std::stringstream ss;
    ss << is.rdbuf();
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, ss.str()};
}

void criterion_oracle_agreement() {
    QuadratureConfig cfg;
    cfg.abs_tolerance = 1e-10;
    std::vector<double> ts = linspace(-8.0, 8.0, 4001);
    for (double s : {-0.75, 0.0, 0.75, -0.25, 0.5, 1.25, 0.125, 0.875}) ts.push_back(s);
    ts.push_back(0.5);  // shared root of psi1 and psi2, listed for both
    double e_phi = 0.0, e_psi = 0.0;
    for (double t : ts) {
        e_phi = std::max(e_phi, std::abs(phi(t) - phi_oracle(t, cfg)));
        e_psi = std::max(e_psi, std::abs(psi(t) - psi_oracle(t, cfg)));
    }
    report("C1", "closed form vs inverse-Fourier quadrature (<= 1e-8)", std::max(e_phi, e_psi) <= 1e-8,
           "phi " + g(e_phi) + ", psi " + g(e_psi));
}

void criterion_anchor_values() {
    QuadratureConfig cfg;
    cfg.abs_tolerance = 1e-10;
    const double phi0 = 2.0 / 3.0 + 4.0 / (3.0 * kPi);
    report("C2a", "phi(0) == 2/3 + 4/(3pi) exactly", phi(0.0) == phi0, "phi(0) = " + format_double(phi(0.0)));
    const double d1 = std::abs(phi(0.75) - phi_oracle(0.75, cfg));
    const double a1 = std::abs(phi(0.75) - 2.0 / (3.0 * kPi));
    report("C2b", "phi(0.75) = 2/(3pi), oracle within 1e-10", d1 <= 1e-10 && a1 <= 1e-10,
           "vs oracle " + g(d1) + ", vs 2/(3pi) " + g(a1));
    const double d2 = std::abs(psi(0.5) - psi_oracle(0.5, cfg));
    const double a2 = std::abs(psi(0.5) - 4.0 / kPi);
    report("C2c", "psi(0.5) = 4/pi, oracle within 1e-10", d2 <= 1e-10 && a2 <= 1e-10,
           "vs oracle " + g(d2) + ", vs 4/pi " + g(a2));
}

void criterion_spectral_identities() {
    const double level2 = 1.0 / kTwoPi;
    double part = 0.0;
    for (double w : linspace(kBandLow, kBandMid, 10000)) {
        const double a = scale_spectrum(w), b = scale_spectrum(kTwoPi - w);
        const double m = wavelet_spectrum_magnitude(w), m2 = wavelet_spectrum_magnitude(2.0 * w);
        part = std::max({part, std::abs(a * a + b * b - level2), std::abs(a * a + m * m - level2),
                         std::abs(m * m + m2 * m2 - level2)});
    }
    report("C3a", "partition-of-unity identities (<= 1e-12)", part <= 1e-12, g(part));

    using namespace detail;
    const double cont = std::max({std::abs(scale_flat_branch(kBandLow) - scale_taper_branch(kBandLow)),
                                  std::abs(scale_taper_branch(kBandMid)), std::abs(wavelet_lower_branch(kBandLow)),
                                  std::abs(wavelet_lower_branch(kBandMid) - wavelet_upper_branch(kBandMid)),
                                  std::abs(wavelet_upper_branch(kBandHigh))});
    report("C3b", "branch continuity at 2pi/3, 4pi/3, 8pi/3 (<= 1e-12)", cont <= 1e-12, g(cont));

    double prod = 0.0;
    for (double w : linspace(kBandLow, kBandHigh, 10000)) {
        prod = std::max(prod, std::abs(std::sqrt(kTwoPi) * scale_spectrum(0.5 * w) * scale_spectrum(w - kTwoPi) -
                                       wavelet_spectrum_magnitude(w)));
    }
    report("C3c", "product identity on 1e4 points (<= 1e-12)", prod <= 1e-12, g(prod));
}

void criterion_normalization() {
    constexpr double dt = 1.0 / 256.0;
    constexpr std::size_t n = 81 * 256 + 1;
    auto trap = [&](auto f) {
        double s = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const double t = -40.0 + static_cast<double>(k) * dt;
            s += (k == 0 || k == n - 1 ? 0.5 : 1.0) * f(t);
        }
        return s * dt;
    };
    const double i_phi = trap([](double t) { return phi(t); });
    const double i_psi = trap([](double t) { return psi(t); });
    const double n_phi = std::sqrt(trap([](double t) { return phi(t) * phi(t); }));
    const double n_psi = std::sqrt(trap([](double t) { return psi(t) * psi(t); }));
    report("C4a", "integral phi = 1 (<= 1e-6)", std::abs(i_phi - 1.0) <= 1e-6, g(i_phi - 1.0));
    report("C4b", "integral psi = 0 (<= 1e-6)", std::abs(i_psi) <= 1e-6, g(i_psi));
    report("C4c", "||phi||_2 = ||psi||_2 = 1 (<= 1e-6)",
           std::abs(n_phi - 1.0) <= 1e-6 && std::abs(n_psi - 1.0) <= 1e-6,
           "phi " + g(n_phi - 1.0) + ", psi " + g(n_psi - 1.0));
    double orth = 0.0;
    for (int s = -3; s <= 3; ++s) {
        const double delta = s == 0 ? 1.0 : 0.0;
        orth = std::max({orth, std::abs(trap([s](double t) { return phi(t) * phi(t - s); }) - delta),
                         std::abs(trap([s](double t) { return psi(t) * psi(t - s); }) - delta),
                         std::abs(trap([s](double t) { return phi(t) * psi(t - s); }))});
    }
    report("C4d", "integer-shift orthogonality, n in -3..3 (<= 1e-5)", orth <= 1e-5, g(orth));
}

void criterion_closures() {
    const SampledSignal w = sample([](double t) { return psi(t); }, -16.0, 1.0 / 64.0, 2049);
    const SampledSignal p = sample([](double t) { return phi(t); }, -16.0, 1.0 / 64.0, 2049);
    const auto parts = decompose_quadrature(w, kDefaultCutoff);
    const SampledSignal rec = reconstruct_quadrature(parts.in_phase, parts.quadrature);
    const SampledSignal lsb = scale_from_wavelet(w);
    const SampledSignal env = envelope(w);
    const auto [lo, hi] = interior_range(w.size());
    double e7 = 0.0, e8 = 0.0, deficit = -INFINITY;
    for (std::size_t k = lo; k < hi; ++k) {
        e7 = std::max(e7, std::abs(rec[k] - w[k]));
        e8 = std::max(e8, std::abs(lsb[k] - p[k]));
        deficit = std::max(deficit, std::abs(p[k]) - env[k]);
    }
    report("C5a", "quadrature reconstruction of psi, interior (<= 1e-3)", e7 <= 1e-3, g(e7));
    report("C5b", "psi cos + H[psi] sin reproduces phi, interior (<= 1e-3)", e8 <= 1e-3, g(e8));
    report("C5c", "envelope(psi) >= |phi| - 1e-3, interior", deficit <= 1e-3, "max deficit " + g(deficit));
}

void criterion_decay() {
    const double slope = envelope_decay_slope(5.0, 50.0);
    report("C6", "log-log envelope slope on [5, 50] = -3 +- 0.3", std::abs(slope + 3.0) <= 0.3,
           "slope " + format_double(slope).substr(0, 8));
}

void criterion_cli_contract() {
    const Run a = run_cli("verify");
    const Run b = run_cli("verify");
    bool same = false, status_ok = false;
    try {
        auto ja = nlohmann::json::parse(a.out);
        auto jb = nlohmann::json::parse(b.out);
        const bool pass = ja["overall_pass"].get<bool>();
        status_ok = a.status == (pass ? 0 : 1) && b.status == a.status;
        ja.erase("timestamp");
        jb.erase("timestamp");
        same = ja.dump() == jb.dump();
        // Byte-level: only the timestamp line may differ.
        auto strip = [](const std::string& s) {
            std::stringstream in(s), out;
            for (std::string line; std::getline(in, line);) {
                if (line.find("\"timestamp\"") == std::string::npos) out << line << '\n';
            }
            return out.str();
        };
        same = same && strip(a.out) == strip(b.out);
    } catch (const std::exception&) {
    }
    report("C7a", "verify deterministic apart from timestamp", same, same ? "identical" : "differs");

    const Run coarse = run_cli("verify --grid-dt 0.5");
    bool coarse_ok = false;
    try {
        coarse_ok = coarse.status == 1 && !nlohmann::json::parse(coarse.out)["overall_pass"].get<bool>();
    } catch (const std::exception&) {
    }
    report("C7b", "exit status 0 iff overall_pass", status_ok && coarse_ok,
           "default " + std::to_string(a.status) + ", dt=0.5 " + std::to_string(coarse.status));

    const Run csv = run_cli("sample --function psi --from -8 --to 8 --step 0.01");
    bool exact = csv.status == 0;
    std::size_t rows = 0;
    try {
        std::stringstream ss(csv.out);
        const Series parsed = read_csv(ss);
        ExportRequest req;
        req.function = ExportFunction::psi;
        const Series mem = evaluate(req);
        rows = parsed.values.size();
        exact = exact && parsed.values.size() == mem.values.size();
        for (std::size_t k = 0; exact && k < mem.values.size(); ++k) {
            exact = parsed.values[k] == mem.values[k] && parsed.abscissa[k] == mem.abscissa[k];
        }
    } catch (const std::exception&) {
        exact = false;
    }
    report("C7c", "CSV export round-trips exactly", exact, std::to_string(rows) + " rows");
}

void figure_features() {
    double beyond = 0.0;
    for (double w : linspace(kBandMid, kBandMid + 1.0, 1001)) beyond = std::max(beyond, std::abs(scale_spectrum(w)));
    report("F1", "scale spectrum support within [0, 4pi/3]", beyond <= 1e-16, g(beyond));

    ExportRequest req;
    req.function = ExportFunction::psi_spectrum_magnitude;
    req.t_start = 0.0;
    req.t_end = 10.0;
    req.step = 1e-3;
    const Series s = evaluate(req);
    double lo = INFINITY, hi = -INFINITY;
    for (std::size_t k = 0; k < s.values.size(); ++k) {
        if (s.values[k] > 1e-12) {
            lo = std::min(lo, s.abscissa[k]);
            hi = std::max(hi, s.abscissa[k]);
        }
    }
    const double centre = 0.5 * (lo + hi);
    const bool ok = std::abs(lo - kBandLow) <= 2e-3 && std::abs(hi - kBandHigh) <= 2e-3 &&
                    std::abs(centre - 5.0 * kPi / 3.0) <= 2e-3;
    report("F2", "wavelet spectrum support [2pi/3, 8pi/3], centre 5pi/3", ok,
           "support [" + format_double(lo).substr(0, 6) + ", " + format_double(hi).substr(0, 6) + "]");
}

}  // namespace

int main() {
    criterion_oracle_agreement();
    criterion_anchor_values();
    criterion_spectral_identities();
    criterion_normalization();
    criterion_closures();
    criterion_decay();
    criterion_cli_contract();
    figure_features();
    std::printf("%d criterion check(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
