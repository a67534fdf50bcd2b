#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "meyer/constants.hpp"

namespace meyer {

/// Uniformly sampled real waveform; sample k sits at t0 + k*dt.
class SampledSignal {
public:
    /// Throws InvalidGrid unless dt > 0, size >= 2 and every sample is finite.
    SampledSignal(double t0, double dt, std::vector<double> samples);

    double t0() const noexcept { return t0_; }
    double dt() const noexcept { return dt_; }
    std::size_t size() const noexcept { return samples_.size(); }
    double abscissa(std::size_t k) const noexcept { return t0_ + static_cast<double>(k) * dt_; }

    std::span<const double> samples() const noexcept { return samples_; }
    double operator[](std::size_t k) const noexcept { return samples_[k]; }

    bool same_grid(const SampledSignal& other) const noexcept;

private:
    double t0_;
    double dt_;
    std::vector<double> samples_;
};

/// Unnormalized forward DFT of a SampledSignal with its bin layout.
///
/// bin_frequencies follow the usual signed layout: 2*pi*k/(N*dt) for
/// k < ceil(N/2), 2*pi*(k - N)/(N*dt) otherwise.
struct ComplexSpectrumGrid {
    double t0 = 0.0;
    double dt = 1.0;
    std::vector<double> bin_frequencies;
    std::vector<std::complex<double>> coefficients;
};

enum class CarrierPhase { cosine, sine };

/// Default low-pass cutoff for synchronous detection, rad per unit time.
inline constexpr double kDefaultCutoff = kTwoPi;

/// Fraction of samples kept when comparing away from the periodic edges.
inline constexpr double kInteriorFraction = 0.8;

/// Grids must sample finer than this to resolve the 8*pi/3 band edge.
inline constexpr double kMaxWaveletStep = 3.0 / 8.0;

SampledSignal sample(const std::function<double(double)>& f, double t0, double dt, std::size_t n);

std::vector<double> dft_bin_frequencies(std::size_t n, double dt);
ComplexSpectrumGrid dft(const SampledSignal& s);
SampledSignal idft(const ComplexSpectrumGrid& g);

SampledSignal modulate(const SampledSignal& s, double carrier, CarrierPhase phase);
SampledSignal lowpass(const SampledSignal& s, double cutoff);
SampledSignal hilbert(const SampledSignal& s);

struct QuadratureComponents {
    SampledSignal in_phase;    // s_c
    SampledSignal quadrature;  // s_s
};

/// Synchronous detection against the 2*pi carrier. Throws GridTooCoarse if dt >= 3/8.
QuadratureComponents decompose_quadrature(const SampledSignal& psi_s, double cutoff = kDefaultCutoff);

/// s_c*cos(2*pi*t) + s_s*sin(2*pi*t). Throws GridMismatch if the grids differ.
SampledSignal reconstruct_quadrature(const SampledSignal& s_c, const SampledSignal& s_s);

/// psi*cos(2*pi*t) + H[psi]*sin(2*pi*t). Throws GridTooCoarse if dt >= 3/8.
SampledSignal scale_from_wavelet(const SampledSignal& psi_s);

/// Pointwise sqrt(s^2 + H[s]^2).
SampledSignal envelope(const SampledSignal& s);

/// Half-open index range [begin, end) of the central kInteriorFraction of n samples.
std::pair<std::size_t, std::size_t> interior_range(std::size_t n, double fraction = kInteriorFraction);

}  // namespace meyer
