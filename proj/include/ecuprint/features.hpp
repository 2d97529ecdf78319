#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "ecuprint/spectrum.hpp"
#include "ecuprint/waveform.hpp"

namespace ecuprint {

inline constexpr size_t kFeatureCount = 17;

// The 17-element fingerprint F(S): 8 time-domain plus 9 frequency-domain
// statistics of the sampled EXID window.
struct FeatureVector {
    double mean = 0;
    double std_dev = 0;
    double avg_deviation = 0;
    double skewness = 0;
    double kurtosis = 0;
    double rms_amplitude = 0;
    double lowest = 0;
    double highest = 0;
    double spec_std_dev = 0;
    double spec_skewness = 0;
    double spec_kurtosis = 0;
    double spec_centroid = 0;
    double irregularity_k = 0;
    double irregularity_j = 0;
    double rolloff = 0;
    double flatness = 0;
    double smoothness = 0;

    static const std::array<std::string, kFeatureCount>& names();
    std::array<double, kFeatureCount> values() const;
    static FeatureVector from_values(std::span<const double> v);
};

// Table statistics on the raw samples: mean, sample standard deviation
// (N-1), mean absolute deviation, skewness, excess kurtosis, RMS, min, max.
// Zero-variance inputs get skewness = kurtosis = 0.
std::array<double, 8> time_features(std::span<const double> x);

// Magnitude-weighted spectral statistics. Rolloff is the smallest bin
// frequency at which the cumulative magnitude reaches rolloff_fraction of
// the total. Smoothness uses 20*ln with magnitudes floored at 1e-12;
// flatness uses exp(mean(ln(y_m + 1e-12))) over the arithmetic mean.
std::array<double, 9> freq_features(const Spectrum& s, double rolloff_fraction = 0.95);

FeatureVector extract(const Waveform& w, double rolloff_fraction = 0.95);

// Feature matrix file: header row with the 17 feature names plus "label";
// one observation per row, full-precision decimal text.
struct FeatureMatrix {
    std::vector<std::vector<double>> rows;
    std::vector<std::string> labels;

    size_t size() const { return rows.size(); }
    void add(const FeatureVector& f, std::string label);
};

std::string feature_matrix_to_string(const FeatureMatrix& m);
FeatureMatrix feature_matrix_from_string(const std::string& text);
void write_feature_matrix(const std::string& path, const FeatureMatrix& m);
FeatureMatrix read_feature_matrix(const std::string& path);

}  // namespace ecuprint
