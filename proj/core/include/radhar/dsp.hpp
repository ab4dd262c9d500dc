#pragma once

#include <array>
#include <complex>
#include <span>
#include <vector>

#include "radhar/mat.hpp"

namespace radhar::dsp {

struct RealSignal {
    std::vector<double> samples;
    double sample_rate_hz = 1.0;
};

struct ComplexSignal {
    std::vector<std::complex<double>> samples;
    double sample_rate_hz = 1.0;
};

enum class WindowKind { Hamming, Gaussian };

/// Short-time Fourier transform configuration. Window length is derived
/// from the signal's sample rate: round(window_duration_s * fs).
struct StftParams {
    WindowKind window_kind = WindowKind::Hamming;
    double window_duration_s = 0.2;
    double overlap_fraction = 0.95;      // in [0, 1)
    std::size_t fft_size = 0;            // 0 -> window length
    double gaussian_sigma_fraction = 0.125;  // sigma = fraction * window length

    std::size_t window_length(double sample_rate_hz) const;
    std::size_t hop(std::size_t window_len) const;  // round(len * (1 - overlap)), must be >= 1
};

/// Symmetric window, values in [0, 1]. Hamming: 0.54 - 0.46 cos(2 pi k / (N-1)).
/// Gaussian: exp(-0.5 ((k - (N-1)/2) / sigma)^2) with sigma = sigma_fraction * N.
std::vector<double> make_window(WindowKind kind, std::size_t length,
                                double gaussian_sigma_fraction = 0.125);

/// Forward DFT, unnormalized, zero-padding up to fft_size. Any size (not just
/// powers of two) is supported.
std::vector<std::complex<double>> dft(std::span<const std::complex<double>> x,
                                      std::size_t fft_size);
std::vector<std::complex<double>> dft(std::span<const double> x, std::size_t fft_size);

/// Inverse DFT with 1/N normalization; idft(dft(x)) == x up to rounding.
std::vector<std::complex<double>> idft(std::span<const std::complex<double>> spectrum);

/// Row index of the DC bin after fftshift (n/2, matching the centered
/// Doppler-axis convention used throughout).
inline std::size_t dc_bin(std::size_t n) { return n / 2; }

/// Reorder a spectrum so DC sits at dc_bin(n).
std::vector<std::complex<double>> fftshift(std::span<const std::complex<double>> spectrum);

/// STFT: frame t covers samples [t*hop, t*hop + window_len). Each row of the
/// result is one frame's windowed, fftshifted spectrum (frames x fft_size).
Mat<std::complex<double>> stft(const ComplexSignal& signal, const StftParams& params);

std::size_t stft_frame_count(std::size_t signal_len, std::size_t window_len, std::size_t hop);

/// 4th-order Butterworth low-pass transfer function (b, a), designed by the
/// bilinear transform with frequency pre-warping. DC gain is 1.
struct IirCoeffs {
    std::array<double, 5> b{};
    std::array<double, 5> a{};  // a[0] == 1
};
IirCoeffs butterworth4_design(double cutoff_hz, double sample_rate_hz);

/// Causal single forward pass of the 4th-order Butterworth low-pass.
RealSignal butterworth4_lowpass(const RealSignal& signal, double cutoff_hz);
ComplexSignal butterworth4_lowpass(const ComplexSignal& signal, double cutoff_hz);

/// Entropy in bits of the distribution obtained by normalizing `weights`.
/// Requires at least one strictly positive weight; 0 log 0 := 0.
double shannon_entropy(std::span<const double> weights);

}  // namespace radhar::dsp
