#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "meyer/fourier_oracle.hpp"
#include "meyer/signal.hpp"

namespace meyer {

enum class ExportFunction {
    phi,
    psi,
    psi1,
    psi2,
    phi_spectrum,
    psi_spectrum_magnitude,
    envelope,
    s_c,
    s_s,
    phi_oracle,
    psi_oracle,
};

enum class ExportFormat { csv, json };

inline constexpr double kMaxExportPoints = 1e7;

struct ExportRequest {
    ExportFunction function = ExportFunction::phi;
    double t_start = -8.0;
    double t_end = 8.0;
    double step = 0.01;
    ExportFormat format = ExportFormat::csv;
};

std::optional<ExportFunction> parse_function(std::string_view name);
std::string_view function_name(ExportFunction f);
std::optional<ExportFormat> parse_format(std::string_view name);

/// Throws InvalidRequest on t_start >= t_end, step <= 0, non-finite bounds
/// or more than kMaxExportPoints intervals.
void validate(const ExportRequest& req);

/// Number of abscissas t_start + k*step that do not pass t_end.
std::size_t point_count(const ExportRequest& req);

/// A named pair of columns.
struct Series {
    std::string abscissa_name;  // "t" or "w"
    std::string value_name;
    double step = 0.0;
    std::vector<double> abscissa;
    std::vector<double> values;
};

/// Evaluates the requested function on the request grid. Oracle exports
/// propagate NoConvergence; grid-based exports (envelope, s_c, s_s) raise
/// InvalidRequest when the grid cannot carry them.
Series evaluate(const ExportRequest& req, const QuadratureConfig& oracle = {});

Series to_series(const SampledSignal& s, std::string value_name);

/// Shortest form is not required; 17 significant digits round-trip exactly.
std::string format_double(double v);

void write_csv(std::ostream& os, const Series& series);
void write_json(std::ostream& os, const Series& series);
void write_series(std::ostream& os, const Series& series, ExportFormat format);

/// Parses a two-column CSV produced by write_csv. Throws InvalidRequest on malformed input.
Series read_csv(std::istream& is);

/// Signals produced by the synchronous-detection pipeline on one grid.
struct Decomposition {
    SampledSignal psi;
    SampledSignal phi;
    SampledSignal s_c;
    SampledSignal s_s;
    SampledSignal reconstruction;
    SampledSignal reconstruction_error;
    SampledSignal envelope;
};

Decomposition run_decomposition(double span = 16.0, double dt = 1.0 / 64.0,
                                double cutoff = kDefaultCutoff);

/// Writes one file per series of `d` into `dir` (created if missing).
/// Returns the paths written; throws Error with the path on I/O failure.
std::vector<std::filesystem::path> write_decomposition(const Decomposition& d,
                                                       const std::filesystem::path& dir,
                                                       ExportFormat format);

}  // namespace meyer
