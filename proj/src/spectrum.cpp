#include "ecuprint/spectrum.hpp"

#include <cmath>

#include "ecuprint/error.hpp"

namespace ecuprint {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool is_pow2(size_t n) { return n != 0 && (n & (n - 1)) == 0; }

size_t next_pow2(size_t n) {
    size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

// In-place iterative radix-2 transform; sign = -1 forward, +1 inverse
// (inverse left unscaled).
void fft_pow2(std::vector<std::complex<double>>& a, int sign) {
    const size_t n = a.size();
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * kPi / static_cast<double>(len);
        const std::complex<double> wl(std::cos(ang), std::sin(ang));
        for (size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (size_t j = 0; j < len / 2; ++j) {
                const std::complex<double> u = a[i + j];
                const std::complex<double> v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

// Chirp-z transform for arbitrary lengths. The chirp phase is reduced with
// an integer mod so sin/cos arguments stay in [0, 2pi).
std::vector<std::complex<double>> bluestein(const std::vector<std::complex<double>>& x) {
    const size_t m = x.size();
    const size_t l = next_pow2(2 * m - 1);

    std::vector<std::complex<double>> chirp(m);
    for (size_t n = 0; n < m; ++n) {
        const unsigned long long k = (static_cast<unsigned long long>(n) * n) % (2ull * m);
        const double phase = kPi * static_cast<double>(k) / static_cast<double>(m);
        chirp[n] = {std::cos(phase), -std::sin(phase)};
    }

    std::vector<std::complex<double>> a(l), b(l);
    for (size_t n = 0; n < m; ++n) a[n] = x[n] * chirp[n];
    b[0] = std::conj(chirp[0]);
    for (size_t n = 1; n < m; ++n) b[n] = b[l - n] = std::conj(chirp[n]);

    fft_pow2(a, -1);
    fft_pow2(b, -1);
    for (size_t i = 0; i < l; ++i) a[i] *= b[i];
    fft_pow2(a, +1);

    std::vector<std::complex<double>> out(m);
    const double scale = 1.0 / static_cast<double>(l);
    for (size_t k = 0; k < m; ++k) out[k] = a[k] * scale * chirp[k];
    return out;
}

}  // namespace

std::vector<std::complex<double>> dft(const std::vector<double>& samples) {
    if (samples.empty()) throw Error("dft: empty input");
    std::vector<std::complex<double>> x(samples.begin(), samples.end());
    if (x.size() == 1) return x;
    if (is_pow2(x.size())) {
        fft_pow2(x, -1);
        return x;
    }
    return bluestein(x);
}

Spectrum magnitude_spectrum(const std::vector<double>& samples, double sample_rate) {
    if (samples.size() < 16) throw Error("magnitude_spectrum: need at least 16 samples");
    if (sample_rate <= 0) throw Error("magnitude_spectrum: sample rate must be positive");

    const std::vector<std::complex<double>> spec = dft(samples);
    const size_t m = samples.size();
    const size_t bins = m / 2 + 1;

    Spectrum s;
    s.magnitudes.resize(bins);
    s.bin_freqs.resize(bins);
    for (size_t i = 0; i < bins; ++i) {
        s.magnitudes[i] = std::abs(spec[i]);
        s.bin_freqs[i] = static_cast<double>(i) * sample_rate / static_cast<double>(m);
    }
    return s;
}

Spectrum magnitude_spectrum(const Waveform& w) { return magnitude_spectrum(w.samples, w.sample_rate); }

}  // namespace ecuprint
