#include "meyer/export.hpp"

#include <json.hpp>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <utility>

#include "meyer/closed_form.hpp"
#include "meyer/errors.hpp"
#include "meyer/spectral.hpp"

namespace meyer {

namespace {

constexpr std::array<std::pair<ExportFunction, std::string_view>, 11> kFunctionNames{{
    {ExportFunction::phi, "phi"},
    {ExportFunction::psi, "psi"},
    {ExportFunction::psi1, "psi1"},
    {ExportFunction::psi2, "psi2"},
    {ExportFunction::phi_spectrum, "phi_spectrum"},
    {ExportFunction::psi_spectrum_magnitude, "psi_spectrum_magnitude"},
    {ExportFunction::envelope, "envelope"},
    {ExportFunction::s_c, "s_c"},
    {ExportFunction::s_s, "s_s"},
    {ExportFunction::phi_oracle, "phi_oracle"},
    {ExportFunction::psi_oracle, "psi_oracle"},
}};

bool is_spectrum(ExportFunction f) {
    return f == ExportFunction::phi_spectrum || f == ExportFunction::psi_spectrum_magnitude;
}

double parse_number(const std::string& text, std::size_t line) {
    const char* begin = text.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (text.empty() || end != begin + text.size()) {
        throw InvalidRequest("csv line " + std::to_string(line) + ": bad number '" + text + "'");
    }
    return v;
}

std::pair<std::string, std::string> split_pair(const std::string& line, std::size_t number) {
    const auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
        throw InvalidRequest("csv line " + std::to_string(number) + ": expected two columns");
    }
    return {line.substr(0, comma), line.substr(comma + 1)};
}

}  // namespace

std::optional<ExportFunction> parse_function(std::string_view name) {
    for (const auto& [f, n] : kFunctionNames) {
        if (n == name) return f;
    }
    return std::nullopt;
}

std::string_view function_name(ExportFunction f) {
    for (const auto& [g, n] : kFunctionNames) {
        if (g == f) return n;
    }
    return "unknown";
}

std::optional<ExportFormat> parse_format(std::string_view name) {
    if (name == "csv") return ExportFormat::csv;
    if (name == "json") return ExportFormat::json;
    return std::nullopt;
}

void validate(const ExportRequest& req) {
    if (!std::isfinite(req.t_start) || !std::isfinite(req.t_end) || !std::isfinite(req.step)) {
        throw InvalidRequest("export range and step must be finite");
    }
    if (!(req.t_start < req.t_end)) {
        throw InvalidRequest("export range: require from < to");
    }
    if (!(req.step > 0.0)) {
        throw InvalidRequest("export step must be > 0");
    }
    if ((req.t_end - req.t_start) / req.step > kMaxExportPoints) {
        throw InvalidRequest("export would exceed 1e7 points");
    }
}

std::size_t point_count(const ExportRequest& req) {
    validate(req);
    const double intervals = (req.t_end - req.t_start) / req.step;
    // Tolerate representation error so [-8, 8] at 0.01 yields 1601 points.
    return static_cast<std::size_t>(std::floor(intervals + 1e-9)) + 1;
}

Series to_series(const SampledSignal& s, std::string value_name) {
    Series out;
    out.abscissa_name = "t";
    out.value_name = std::move(value_name);
    out.step = s.dt();
    out.abscissa.resize(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) out.abscissa[k] = s.abscissa(k);
    out.values.assign(s.samples().begin(), s.samples().end());
    return out;
}

Series evaluate(const ExportRequest& req, const QuadratureConfig& oracle) {
    const std::size_t n = point_count(req);
    const std::string name(function_name(req.function));

    switch (req.function) {
        case ExportFunction::envelope:
        case ExportFunction::s_c:
        case ExportFunction::s_s: {
            if (n < 2) throw InvalidRequest(name + ": grid needs at least 2 points");
            const SampledSignal w = sample([](double t) { return psi(t); }, req.t_start, req.step, n);
            if (req.function == ExportFunction::envelope) return to_series(envelope(w), name);
            try {
                auto parts = decompose_quadrature(w);
                return to_series(req.function == ExportFunction::s_c ? parts.in_phase : parts.quadrature, name);
            } catch (const GridTooCoarse& e) {
                throw InvalidRequest(e.what());
            }
        }
        default:
            break;
    }

    if (req.function == ExportFunction::phi_oracle || req.function == ExportFunction::psi_oracle) {
        validate(oracle);
    }

    Series out;
    out.abscissa_name = is_spectrum(req.function) ? "w" : "t";
    out.value_name = name;
    out.step = req.step;
    out.abscissa.resize(n);
    out.values.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double x = req.t_start + static_cast<double>(k) * req.step;
        out.abscissa[k] = x;
        switch (req.function) {
            case ExportFunction::phi: out.values[k] = phi(x); break;
            case ExportFunction::psi: out.values[k] = psi(x); break;
            case ExportFunction::psi1: out.values[k] = psi1(x); break;
            case ExportFunction::psi2: out.values[k] = psi2(x); break;
            case ExportFunction::phi_spectrum: out.values[k] = scale_spectrum(x); break;
            case ExportFunction::psi_spectrum_magnitude: out.values[k] = wavelet_spectrum_magnitude(x); break;
            case ExportFunction::phi_oracle: out.values[k] = phi_oracle(x, oracle); break;
            case ExportFunction::psi_oracle: out.values[k] = psi_oracle(x, oracle); break;
            default: break;
        }
    }
    return out;
}

std::string format_double(double v) {
    std::array<char, 40> buf{};
    std::snprintf(buf.data(), buf.size(), "%.17g", v);
    return buf.data();
}

void write_csv(std::ostream& os, const Series& series) {
    os << series.abscissa_name << ',' << series.value_name << '\n';
    for (std::size_t k = 0; k < series.values.size(); ++k) {
        os << format_double(series.abscissa[k]) << ',' << format_double(series.values[k]) << '\n';
    }
}

void write_json(std::ostream& os, const Series& series) {
    nlohmann::ordered_json j;
    j["function"] = series.value_name;
    j["grid"] = {
        {"abscissa", series.abscissa_name},
        {"start", series.abscissa.empty() ? 0.0 : series.abscissa.front()},
        {"step", series.step},
        {"count", series.values.size()},
    };
    j["t"] = series.abscissa;
    j["value"] = series.values;
    os << j.dump() << '\n';
}

void write_series(std::ostream& os, const Series& series, ExportFormat format) {
    if (format == ExportFormat::csv) {
        write_csv(os, series);
    } else {
        write_json(os, series);
    }
}

Series read_csv(std::istream& is) {
    Series out;
    std::string line;
    std::size_t number = 1;
    if (!std::getline(is, line)) throw InvalidRequest("csv: missing header");
    std::tie(out.abscissa_name, out.value_name) = split_pair(line, number);
    while (std::getline(is, line)) {
        ++number;
        if (line.empty()) continue;
        const auto [a, v] = split_pair(line, number);
        out.abscissa.push_back(parse_number(a, number));
        out.values.push_back(parse_number(v, number));
    }
    if (out.abscissa.size() >= 2) out.step = out.abscissa[1] - out.abscissa[0];
    return out;
}

Decomposition run_decomposition(double span, double dt, double cutoff) {
    if (!(span > 0.0) || !(dt > 0.0)) {
        throw InvalidGrid("decomposition grid: span and dt must be > 0");
    }
    const auto n = static_cast<std::size_t>(std::llround(2.0 * span / dt)) + 1;
    SampledSignal w = sample([](double t) { return psi(t); }, -span, dt, n);
    SampledSignal p = sample([](double t) { return phi(t); }, -span, dt, n);
    auto parts = decompose_quadrature(w, cutoff);
    SampledSignal rec = reconstruct_quadrature(parts.in_phase, parts.quadrature);
    std::vector<double> err(n);
    for (std::size_t k = 0; k < n; ++k) err[k] = rec[k] - w[k];
    SampledSignal env = envelope(w);
    return Decomposition{
        std::move(w),
        std::move(p),
        std::move(parts.in_phase),
        std::move(parts.quadrature),
        std::move(rec),
        SampledSignal(-span, dt, std::move(err)),
        std::move(env),
    };
}

std::vector<std::filesystem::path> write_decomposition(const Decomposition& d,
                                                       const std::filesystem::path& dir,
                                                       ExportFormat format) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw Error("cannot create output directory " + dir.string() + ": " + ec.message());
    }
    const std::array<std::pair<const SampledSignal*, const char*>, 7> parts{{
        {&d.psi, "psi"},
        {&d.phi, "phi"},
        {&d.s_c, "s_c"},
        {&d.s_s, "s_s"},
        {&d.reconstruction, "reconstruction"},
        {&d.reconstruction_error, "reconstruction_error"},
        {&d.envelope, "envelope"},
    }};
    const char* ext = format == ExportFormat::csv ? ".csv" : ".json";
    std::vector<std::filesystem::path> written;
    for (const auto& [signal, name] : parts) {
        const auto path = dir / (std::string(name) + ext);
        std::ofstream os(path);
        if (!os) throw Error("cannot open " + path.string() + " for writing");
        write_series(os, to_series(*signal, name), format);
        if (!os) throw Error("write failed for " + path.string());
        written.push_back(path);
    }
    return written;
}

}  // namespace meyer
