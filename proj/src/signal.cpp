#include "meyer/signal.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "meyer/errors.hpp"

namespace meyer {

namespace {

// FFTW planning is not thread-safe; execution with new-array calls is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

enum class Direction { forward, backward };

std::vector<std::complex<double>> transform(std::vector<std::complex<double>> data, Direction dir) {
    const int n = static_cast<int>(data.size());
    std::vector<std::complex<double>> out(data.size());
    auto* in_ptr = reinterpret_cast<fftw_complex*>(data.data());
    auto* out_ptr = reinterpret_cast<fftw_complex*>(out.data());
    const int sign = dir == Direction::forward ? FFTW_FORWARD : FFTW_BACKWARD;

    fftw_plan plan;
    {
        std::lock_guard lock(planner_mutex());
        plan = fftw_plan_dft_1d(n, in_ptr, out_ptr, sign, FFTW_ESTIMATE);
    }
    if (plan == nullptr) {
        throw Error("fftw: failed to create plan");
    }
    fftw_execute(plan);
    {
        std::lock_guard lock(planner_mutex());
        fftw_destroy_plan(plan);
    }
    return out;
}

void require_wavelet_resolution(const SampledSignal& s, const char* op) {
    if (!(s.dt() < kMaxWaveletStep)) {
        std::ostringstream msg;
        msg << op << ": grid step " << s.dt() << " does not resolve 8*pi/3 (need dt < 3/8)";
        throw GridTooCoarse(msg.str());
    }
}

// Applies a per-bin multiplier and returns to the time domain.
template <typename Gain>
SampledSignal filter_bins(const SampledSignal& s, Gain gain) {
    ComplexSpectrumGrid g = dft(s);
    for (std::size_t k = 0; k < g.coefficients.size(); ++k) {
        g.coefficients[k] *= gain(k, g.bin_frequencies[k]);
    }
    return idft(g);
}

bool is_nyquist_bin(std::size_t k, std::size_t n) { return n % 2 == 0 && k == n / 2; }

}  // namespace

SampledSignal::SampledSignal(double t0, double dt, std::vector<double> samples)
    : t0_(t0), dt_(dt), samples_(std::move(samples)) {
    if (!std::isfinite(t0_) || !std::isfinite(dt_) || !(dt_ > 0.0)) {
        throw InvalidGrid("sampled signal: dt must be finite and > 0");
    }
    if (samples_.size() < 2) {
        throw InvalidGrid("sampled signal: need at least 2 samples");
    }
    if (!std::all_of(samples_.begin(), samples_.end(), [](double v) { return std::isfinite(v); })) {
        throw InvalidGrid("sampled signal: non-finite sample");
    }
}

bool SampledSignal::same_grid(const SampledSignal& other) const noexcept {
    return t0_ == other.t0_ && dt_ == other.dt_ && samples_.size() == other.samples_.size();
}

SampledSignal sample(const std::function<double(double)>& f, double t0, double dt, std::size_t n) {
    if (!(dt > 0.0) || n < 2) {
        throw InvalidGrid("sample: require dt > 0 and n >= 2");
    }
    std::vector<double> values(n);
    for (std::size_t k = 0; k < n; ++k) {
        values[k] = f(t0 + static_cast<double>(k) * dt);
    }
    return SampledSignal(t0, dt, std::move(values));
}

std::vector<double> dft_bin_frequencies(std::size_t n, double dt) {
    std::vector<double> w(n);
    const double step = kTwoPi / (static_cast<double>(n) * dt);
    const std::size_t positive = (n + 1) / 2;
    for (std::size_t k = 0; k < n; ++k) {
        const double index = k < positive ? static_cast<double>(k)
                                          : static_cast<double>(k) - static_cast<double>(n);
        w[k] = index * step;
    }
    return w;
}

ComplexSpectrumGrid dft(const SampledSignal& s) {
    std::vector<std::complex<double>> data(s.samples().begin(), s.samples().end());
    ComplexSpectrumGrid g;
    g.t0 = s.t0();
    g.dt = s.dt();
    g.bin_frequencies = dft_bin_frequencies(s.size(), s.dt());
    g.coefficients = transform(std::move(data), Direction::forward);
    return g;
}

SampledSignal idft(const ComplexSpectrumGrid& g) {
    if (g.coefficients.size() != g.bin_frequencies.size()) {
        throw InvalidGrid("idft: frequency and coefficient counts differ");
    }
    const auto out = transform(g.coefficients, Direction::backward);
    const double scale = 1.0 / static_cast<double>(out.size());
    std::vector<double> values(out.size());
    for (std::size_t k = 0; k < out.size(); ++k) {
        values[k] = out[k].real() * scale;
    }
    return SampledSignal(g.t0, g.dt, std::move(values));
}

SampledSignal modulate(const SampledSignal& s, double carrier, CarrierPhase phase) {
    std::vector<double> values(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) {
        const double arg = carrier * s.abscissa(k);
        values[k] = s[k] * (phase == CarrierPhase::cosine ? std::cos(arg) : std::sin(arg));
    }
    return SampledSignal(s.t0(), s.dt(), std::move(values));
}

SampledSignal lowpass(const SampledSignal& s, double cutoff) {
    if (!(cutoff > 0.0)) {
        throw std::invalid_argument("lowpass: cutoff must be > 0");
    }
    // The Nyquist bin is shared by +-w_N, so comparing |w| treats it symmetrically.
    return filter_bins(s, [cutoff](std::size_t, double w) {
        return std::abs(w) > cutoff ? std::complex<double>{0.0, 0.0} : std::complex<double>{1.0, 0.0};
    });
}

SampledSignal hilbert(const SampledSignal& s) {
    const std::size_t n = s.size();
    return filter_bins(s, [n](std::size_t k, double w) -> std::complex<double> {
        if (k == 0 || is_nyquist_bin(k, n)) return {0.0, 0.0};
        return w > 0.0 ? std::complex<double>{0.0, -1.0} : std::complex<double>{0.0, 1.0};
    });
}

QuadratureComponents decompose_quadrature(const SampledSignal& psi_s, double cutoff) {
    require_wavelet_resolution(psi_s, "decompose_quadrature");
    auto doubled = [](SampledSignal s) {
        std::vector<double> v(s.samples().begin(), s.samples().end());
        for (double& x : v) x *= 2.0;
        return SampledSignal(s.t0(), s.dt(), std::move(v));
    };
    return {
        lowpass(doubled(modulate(psi_s, kCarrier, CarrierPhase::cosine)), cutoff),
        lowpass(doubled(modulate(psi_s, kCarrier, CarrierPhase::sine)), cutoff),
    };
}

SampledSignal reconstruct_quadrature(const SampledSignal& s_c, const SampledSignal& s_s) {
    if (!s_c.same_grid(s_s)) {
        throw GridMismatch("reconstruct_quadrature: components are on different grids");
    }
    std::vector<double> values(s_c.size());
    for (std::size_t k = 0; k < s_c.size(); ++k) {
        const double arg = kCarrier * s_c.abscissa(k);
        values[k] = s_c[k] * std::cos(arg) + s_s[k] * std::sin(arg);
    }
    return SampledSignal(s_c.t0(), s_c.dt(), std::move(values));
}

SampledSignal scale_from_wavelet(const SampledSignal& psi_s) {
    require_wavelet_resolution(psi_s, "scale_from_wavelet");
    return reconstruct_quadrature(psi_s, hilbert(psi_s));
}

SampledSignal envelope(const SampledSignal& s) {
    const SampledSignal h = hilbert(s);
    std::vector<double> values(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) {
        values[k] = std::hypot(s[k], h[k]);
    }
    return SampledSignal(s.t0(), s.dt(), std::move(values));
}

std::pair<std::size_t, std::size_t> interior_range(std::size_t n, double fraction) {
    const auto margin = static_cast<std::size_t>(std::floor(0.5 * (1.0 - fraction) * static_cast<double>(n)));
    return {margin, n - margin};
}

}  // namespace meyer
