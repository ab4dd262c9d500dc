#include "radhar/dsp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace radhar::dsp {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

// In-place iterative radix-2 Cooley-Tukey. sign = -1 forward, +1 inverse
// (inverse leaves the 1/N scaling to the caller).
void fft_pow2(std::vector<std::complex<double>>& a, int sign) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * kPi / static_cast<double>(len);
        const std::complex<double> wstep(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = a[i + k];
                const std::complex<double> v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wstep;
            }
        }
    }
}

// Bluestein's chirp-z algorithm for arbitrary sizes, built on the radix-2 core.
std::vector<std::complex<double>> dft_bluestein(std::span<const std::complex<double>> x,
                                                std::size_t n) {
    // Chirp factors b[k] = exp(i pi k^2 / n); k^2 taken mod 2n to keep the
    // argument small (exact because exp has period 2 pi and k^2 pi/n has
    // period 2n in k^2).
    std::vector<std::complex<double>> b(n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t k2 = static_cast<std::size_t>(
            (static_cast<unsigned long long>(k) * k) % (2ull * n));
        const double ang = kPi * static_cast<double>(k2) / static_cast<double>(n);
        b[k] = {std::cos(ang), std::sin(ang)};
    }

    const std::size_t m = next_pow2(2 * n - 1);
    std::vector<std::complex<double>> fa(m), fb(m);
    for (std::size_t k = 0; k < x.size(); ++k) fa[k] = x[k] * std::conj(b[k]);
    fb[0] = b[0];
    for (std::size_t k = 1; k < n; ++k) {
        fb[k] = b[k];
        fb[m - k] = b[k];
    }

    fft_pow2(fa, -1);
    fft_pow2(fb, -1);
    for (std::size_t k = 0; k < m; ++k) fa[k] *= fb[k];
    fft_pow2(fa, +1);

    std::vector<std::complex<double>> out(n);
    const double scale = 1.0 / static_cast<double>(m);
    for (std::size_t k = 0; k < n; ++k) out[k] = std::conj(b[k]) * (fa[k] * scale);
    return out;
}

template <typename T>
void filter_forward(const IirCoeffs& c, std::span<const T> x, std::span<T> y) {
    // Direct form II transposed, zero initial state.
    T z1{}, z2{}, z3{}, z4{};
    for (std::size_t k = 0; k < x.size(); ++k) {
        const T xi = x[k];
        const T yi = c.b[0] * xi + z1;
        z1 = c.b[1] * xi - c.a[1] * yi + z2;
        z2 = c.b[2] * xi - c.a[2] * yi + z3;
        z3 = c.b[3] * xi - c.a[3] * yi + z4;
        z4 = c.b[4] * xi - c.a[4] * yi;
        y[k] = yi;
    }
}

}  // namespace

std::size_t StftParams::window_length(double sample_rate_hz) const {
    if (!(sample_rate_hz > 0.0)) throw std::invalid_argument("StftParams: sample rate must be > 0");
    if (!(window_duration_s > 0.0))
        throw std::invalid_argument("StftParams: window duration must be > 0");
    const auto len = static_cast<std::size_t>(std::llround(window_duration_s * sample_rate_hz));
    if (len < 1) throw std::invalid_argument("StftParams: window shorter than one sample");
    return len;
}

std::size_t StftParams::hop(std::size_t window_len) const {
    if (!(overlap_fraction >= 0.0 && overlap_fraction < 1.0))
        throw std::invalid_argument("StftParams: overlap_fraction must be in [0, 1)");
    const auto h = static_cast<std::size_t>(
        std::llround(static_cast<double>(window_len) * (1.0 - overlap_fraction)));
    if (h < 1) throw std::invalid_argument("StftParams: hop rounds to zero");
    return h;
}

std::vector<double> make_window(WindowKind kind, std::size_t length,
                                double gaussian_sigma_fraction) {
    if (length == 0) throw std::invalid_argument("make_window: length must be >= 1");
    std::vector<double> w(length, 1.0);
    if (length == 1) return w;

    switch (kind) {
        case WindowKind::Hamming: {
            const double denom = static_cast<double>(length - 1);
            for (std::size_t k = 0; k < length; ++k)
                w[k] = 0.54 - 0.46 * std::cos(2.0 * kPi * static_cast<double>(k) / denom);
            break;
        }
        case WindowKind::Gaussian: {
            if (!(gaussian_sigma_fraction > 0.0))
                throw std::invalid_argument("make_window: gaussian sigma fraction must be > 0");
            const double sigma = gaussian_sigma_fraction * static_cast<double>(length);
            const double center = static_cast<double>(length - 1) / 2.0;
            for (std::size_t k = 0; k < length; ++k) {
                const double d = (static_cast<double>(k) - center) / sigma;
                w[k] = std::exp(-0.5 * d * d);
            }
            break;
        }
    }
    return w;
}

std::vector<std::complex<double>> dft(std::span<const std::complex<double>> x,
                                      std::size_t fft_size) {
    if (fft_size == 0) throw std::invalid_argument("dft: fft_size must be >= 1");
    if (x.size() > fft_size)
        throw std::invalid_argument("dft: fft_size must be >= signal length");
    if (is_pow2(fft_size)) {
        std::vector<std::complex<double>> a(fft_size);
        std::copy(x.begin(), x.end(), a.begin());
        fft_pow2(a, -1);
        return a;
    }
    return dft_bluestein(x, fft_size);
}

std::vector<std::complex<double>> dft(std::span<const double> x, std::size_t fft_size) {
    std::vector<std::complex<double>> cx(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) cx[i] = {x[i], 0.0};
    return dft(std::span<const std::complex<double>>(cx), fft_size);
}

std::vector<std::complex<double>> idft(std::span<const std::complex<double>> spectrum) {
    const std::size_t n = spectrum.size();
    if (n == 0) throw std::invalid_argument("idft: empty spectrum");
    std::vector<std::complex<double>> conj_in(n);
    for (std::size_t k = 0; k < n; ++k) conj_in[k] = std::conj(spectrum[k]);
    auto y = dft(std::span<const std::complex<double>>(conj_in), n);
    const double scale = 1.0 / static_cast<double>(n);
    for (auto& v : y) v = std::conj(v) * scale;
    return y;
}

std::vector<std::complex<double>> fftshift(std::span<const std::complex<double>> spectrum) {
    const std::size_t n = spectrum.size();
    std::vector<std::complex<double>> out(n);
    const std::size_t half = n - n / 2;  // DC lands on index n/2
    for (std::size_t i = 0; i < n; ++i) out[i] = spectrum[(i + half) % n];
    return out;
}

std::size_t stft_frame_count(std::size_t signal_len, std::size_t window_len, std::size_t hop) {
    if (signal_len < window_len) return 0;
    return (signal_len - window_len) / hop + 1;
}

Mat<std::complex<double>> stft(const ComplexSignal& signal, const StftParams& params) {
    const std::size_t win_len = params.window_length(signal.sample_rate_hz);
    if (signal.samples.size() < win_len)
        throw std::invalid_argument("stft: signal shorter than one window");
    const std::size_t hop = params.hop(win_len);
    const std::size_t nfft = params.fft_size == 0 ? win_len : params.fft_size;
    if (nfft < win_len)
        throw std::invalid_argument("stft: fft_size must be >= window length");

    const auto window = make_window(params.window_kind, win_len, params.gaussian_sigma_fraction);
    const std::size_t frames = stft_frame_count(signal.samples.size(), win_len, hop);

    Mat<std::complex<double>> out(frames, nfft);
    std::vector<std::complex<double>> buf(win_len);
    for (std::size_t t = 0; t < frames; ++t) {
        const std::size_t off = t * hop;
        for (std::size_t k = 0; k < win_len; ++k) buf[k] = signal.samples[off + k] * window[k];
        const auto spec = dft(std::span<const std::complex<double>>(buf), nfft);
        const auto shifted = fftshift(spec);
        std::copy(shifted.begin(), shifted.end(), out.row(t).begin());
    }
    return out;
}

IirCoeffs butterworth4_design(double cutoff_hz, double sample_rate_hz) {
    if (!(sample_rate_hz > 0.0))
        throw std::invalid_argument("butterworth4: sample rate must be > 0");
    if (!(cutoff_hz > 0.0 && cutoff_hz < sample_rate_hz / 2.0))
        throw std::invalid_argument("butterworth4: cutoff must satisfy 0 < fc < fs/2, got " +
                                    std::to_string(cutoff_hz));

    constexpr int order = 4;
    const double fs2 = 2.0 * sample_rate_hz;
    const double warped = fs2 * std::tan(kPi * cutoff_hz / sample_rate_hz);

    // Analog prototype poles on the unit circle, scaled to the prewarped
    // cutoff, then mapped by the bilinear transform. All four zeros go to -1.
    std::array<std::complex<double>, order> zpoles;
    for (int k = 0; k < order; ++k) {
        const double ang = kPi * (2.0 * k + order + 1.0) / (2.0 * order);
        const std::complex<double> p = warped * std::exp(std::complex<double>(0.0, ang));
        zpoles[k] = (fs2 + p) / (fs2 - p);
    }

    // Denominator from pole polynomial (complex poles come in conjugate pairs,
    // so coefficients are real up to rounding).
    std::array<std::complex<double>, order + 1> ac{};
    ac[0] = 1.0;
    for (int i = 0; i < order; ++i)
        for (int j = i + 1; j > 0; --j) ac[j] -= zpoles[i] * ac[j - 1];

    IirCoeffs c;
    for (int i = 0; i <= order; ++i) c.a[i] = ac[i].real();

    // Numerator (1 + z^-1)^4 scaled for unit DC gain.
    const double asum = c.a[0] + c.a[1] + c.a[2] + c.a[3] + c.a[4];
    const double gain = asum / 16.0;
    c.b = {gain, 4.0 * gain, 6.0 * gain, 4.0 * gain, gain};
    return c;
}

RealSignal butterworth4_lowpass(const RealSignal& signal, double cutoff_hz) {
    const auto c = butterworth4_design(cutoff_hz, signal.sample_rate_hz);
    RealSignal out{std::vector<double>(signal.samples.size()), signal.sample_rate_hz};
    filter_forward<double>(c, signal.samples, out.samples);
    return out;
}

ComplexSignal butterworth4_lowpass(const ComplexSignal& signal, double cutoff_hz) {
    const auto c = butterworth4_design(cutoff_hz, signal.sample_rate_hz);
    ComplexSignal out{std::vector<std::complex<double>>(signal.samples.size()),
                      signal.sample_rate_hz};
    filter_forward<std::complex<double>>(c, signal.samples, out.samples);
    return out;
}

double shannon_entropy(std::span<const double> weights) {
    double total = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0) || !std::isfinite(w))
            throw std::invalid_argument("shannon_entropy: weights must be finite and >= 0");
        total += w;
    }
    if (!(total > 0.0))
        throw std::invalid_argument("shannon_entropy: needs at least one positive weight");

    double h = 0.0;
    for (double w : weights) {
        if (w <= 0.0) continue;
        const double p = w / total;
        h -= p * std::log2(p);
    }
    return std::max(0.0, h);
}

}  // namespace radhar::dsp
