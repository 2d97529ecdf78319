#pragma once

#include <complex>
#include <vector>

#include "ecuprint/waveform.hpp"

namespace ecuprint {

// Magnitude spectrum of a rectangular-windowed DFT. Bins 0..floor(M/2)
// with bin_freqs[i] = i * sample_rate / M; the DC bin is kept.
struct Spectrum {
    std::vector<double> magnitudes;
    std::vector<double> bin_freqs;

    size_t bins() const { return magnitudes.size(); }
};

// Full M-point DFT of a real signal (M arbitrary; radix-2 for powers of
// two, Bluestein otherwise).
std::vector<std::complex<double>> dft(const std::vector<double>& samples);

Spectrum magnitude_spectrum(const std::vector<double>& samples, double sample_rate);
Spectrum magnitude_spectrum(const Waveform& w);

}  // namespace ecuprint
