// meyer: sample, verify and decompose the Meyer scaling function and wavelet.
//
// Exit status: 0 success / all checks pass, 1 verification or I/O failure,
// 2 usage error, 3 oracle quadrature did not converge.

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <string>

#include "meyer/errors.hpp"
#include "meyer/export.hpp"
#include "meyer/verification.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNoConvergence = 3;

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// Writes through `emit` to `path`, or stdout when path is empty or "-".
template <typename Emit>
void with_output(const std::string& path, Emit emit) {
    if (path.empty() || path == "-") {
        emit(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream os(path);
    if (!os) throw meyer::Error("cannot open " + path + " for writing");
    emit(os);
    if (!os) throw meyer::Error("write failed for " + path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Meyer wavelet closed forms: sampling, verification and quadrature decomposition"};
    app.require_subcommand(1);

    // sample
    auto* sample_cmd = app.add_subcommand("sample", "Export one function on a uniform grid");
    std::string function_name = "phi";
    std::string format_name = "csv";
    std::string output;
    meyer::ExportRequest req;
    sample_cmd->add_option("--function", function_name,
                           "phi|psi|psi1|psi2|phi_spectrum|psi_spectrum_magnitude|envelope|s_c|s_s|"
                           "phi_oracle|psi_oracle")
        ->required();
    sample_cmd->add_option("--from", req.t_start, "First abscissa (t, or w for spectra)")->required();
    sample_cmd->add_option("--to", req.t_end, "Last abscissa")->required();
    sample_cmd->add_option("--step", req.step, "Grid step")->required();
    sample_cmd->add_option("--format", format_name, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    sample_cmd->add_option("--output", output, "Output file (default stdout)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Run every property check and report");
    meyer::VerifyConfig vcfg;
    std::string report_path;
    verify_cmd->add_option("--grid-dt", vcfg.grid_dt, "Signal grid step");
    verify_cmd->add_option("--grid-span", vcfg.grid_span, "Signal grid covers [-span, span]");
    verify_cmd->add_option("--cutoff", vcfg.cutoff, "Low-pass cutoff in rad per unit time");
    verify_cmd->add_option("--tolerance-scale", vcfg.tolerance_scale, "Multiplies every tolerance");
    verify_cmd->add_option("--output", report_path, "JSON report file (default stdout)");

    // decompose
    auto* decompose_cmd = app.add_subcommand("decompose", "Export the in-phase/quadrature decomposition of psi");
    std::string decompose_dir = "decomposition";
    std::string decompose_format = "csv";
    double grid_dt = 1.0 / 64.0;
    double grid_span = 16.0;
    double cutoff = meyer::kDefaultCutoff;
    decompose_cmd->add_option("--output", decompose_dir, "Output directory");
    decompose_cmd->add_option("--format", decompose_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    decompose_cmd->add_option("--grid-dt", grid_dt, "Grid step");
    decompose_cmd->add_option("--grid-span", grid_span, "Grid covers [-span, span]");
    decompose_cmd->add_option("--cutoff", cutoff, "Low-pass cutoff in rad per unit time");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*sample_cmd) {
            const auto fn = meyer::parse_function(function_name);
            if (!fn) {
                std::cerr << "meyer: unknown function '" << function_name << "'\n";
                return kExitUsage;
            }
            req.function = *fn;
            req.format = *meyer::parse_format(format_name);
            const meyer::Series series = meyer::evaluate(req);
            with_output(output, [&](std::ostream& os) { meyer::write_series(os, series, req.format); });
            return kExitOk;
        }

        if (*verify_cmd) {
            const meyer::VerificationReport report = meyer::run_verification(vcfg);
            std::cerr << meyer::format_table(report);
            const std::string json = meyer::to_json(report, utc_timestamp());
            with_output(report_path, [&](std::ostream& os) { os << json; });
            return report.overall_pass() ? kExitOk : kExitFailure;
        }

        if (*decompose_cmd) {
            const auto d = meyer::run_decomposition(grid_span, grid_dt, cutoff);
            const auto written =
                meyer::write_decomposition(d, decompose_dir, *meyer::parse_format(decompose_format));
            for (const auto& p : written) std::cout << p.string() << '\n';
            return kExitOk;
        }
    } catch (const meyer::NoConvergence& e) {
        std::cerr << "meyer: " << e.what() << " (last estimate " << e.estimate() << ")\n";
        return kExitNoConvergence;
    } catch (const meyer::InvalidRequest& e) {
        std::cerr << "meyer: " << e.what() << '\n';
        return kExitUsage;
    } catch (const meyer::InvalidGrid& e) {
        std::cerr << "meyer: " << e.what() << '\n';
        return kExitUsage;
    } catch (const meyer::GridTooCoarse& e) {
        std::cerr << "meyer: " << e.what() << '\n';
        return kExitUsage;
    } catch (const meyer::InvalidConfig& e) {
        std::cerr << "meyer: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "meyer: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}
