#include "ecuprint/features.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ecuprint/error.hpp"

namespace ecuprint {

namespace {

constexpr double kLogFloor = 1e-12;

}  // namespace

const std::array<std::string, kFeatureCount>& FeatureVector::names() {
    static const std::array<std::string, kFeatureCount> n = {
        "mean",        "std_dev",       "avg_deviation", "skewness",       "kurtosis",
        "rms_amplitude", "lowest",      "highest",       "spec_std_dev",   "spec_skewness",
        "spec_kurtosis", "spec_centroid", "irregularity_k", "irregularity_j", "rolloff",
        "flatness",    "smoothness"};
    return n;
}

std::array<double, kFeatureCount> FeatureVector::values() const {
    return {mean,          std_dev,       avg_deviation, skewness,     kurtosis,  rms_amplitude,
            lowest,        highest,       spec_std_dev,  spec_skewness, spec_kurtosis,
            spec_centroid, irregularity_k, irregularity_j, rolloff,     flatness,  smoothness};
}

FeatureVector FeatureVector::from_values(std::span<const double> v) {
    if (v.size() != kFeatureCount) throw Error("FeatureVector: expected 17 values");
    FeatureVector f;
    f.mean = v[0];
    f.std_dev = v[1];
    f.avg_deviation = v[2];
    f.skewness = v[3];
    f.kurtosis = v[4];
    f.rms_amplitude = v[5];
    f.lowest = v[6];
    f.highest = v[7];
    f.spec_std_dev = v[8];
    f.spec_skewness = v[9];
    f.spec_kurtosis = v[10];
    f.spec_centroid = v[11];
    f.irregularity_k = v[12];
    f.irregularity_j = v[13];
    f.rolloff = v[14];
    f.flatness = v[15];
    f.smoothness = v[16];
    return f;
}

std::array<double, 8> time_features(std::span<const double> x) {
    const size_t n = x.size();
    if (n < 2) throw Error("time_features: need at least 2 samples");

    double sum = 0, sum_sq = 0;
    double lo = x[0], hi = x[0];
    for (double v : x) {
        sum += v;
        sum_sq += v * v;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    const double nd = static_cast<double>(n);
    const double mean = sum / nd;

    double ss = 0, abs_dev = 0;
    for (double v : x) {
        const double d = v - mean;
        ss += d * d;
        abs_dev += std::abs(d);
    }
    const double std_dev = std::sqrt(ss / (nd - 1.0));
    const double avg_deviation = abs_dev / nd;
    const double rms = std::sqrt(sum_sq / nd);

    double skew = 0, kurt = 0;
    if (std_dev > 0) {
        double s3 = 0, s4 = 0;
        for (double v : x) {
            const double z = (v - mean) / std_dev;
            const double z3 = z * z * z;
            s3 += z3;
            s4 += z3 * z;
        }
        skew = s3 / nd;
        kurt = s4 / nd - 3.0;
    }
    return {mean, std_dev, avg_deviation, skew, kurt, rms, lo, hi};
}

std::array<double, 9> freq_features(const Spectrum& s, double rolloff_fraction) {
    const size_t n = s.bins();
    if (n < 3) throw Error("freq_features: need at least 3 spectrum bins");
    if (s.bin_freqs.size() != n) throw Error("freq_features: magnitude/frequency size mismatch");
    if (!(rolloff_fraction > 0.0 && rolloff_fraction <= 1.0))
        throw Error("freq_features: rolloff fraction must be in (0, 1]");

    const std::vector<double>& ym = s.magnitudes;
    const std::vector<double>& yf = s.bin_freqs;

    double total = 0;
    for (double v : ym) total += v;
    if (total <= 0) throw Error("freq_features: degenerate all-zero spectrum");

    const double centroid = [&] {
        double acc = 0;
        for (size_t i = 0; i < n; ++i) acc += yf[i] * ym[i];
        return acc / total;
    }();

    double m2 = 0, m3 = 0, m4 = 0;
    for (size_t i = 0; i < n; ++i) {
        const double d = yf[i] - centroid;
        const double d2 = d * d;
        m2 += d2 * ym[i];
        m3 += d2 * d * ym[i];
        m4 += d2 * d2 * ym[i];
    }
    m2 /= total;
    m3 /= total;
    m4 /= total;
    const double spread = std::sqrt(std::max(m2, 0.0));
    const double spec_skew = spread > 0 ? m3 / (spread * spread * spread) : 0.0;
    const double spec_kurt = spread > 0 ? m4 / (m2 * m2) - 3.0 : 0.0;

    double irr_k = 0;
    for (size_t i = 1; i + 1 < n; ++i)
        irr_k += std::abs(ym[i] - (ym[i - 1] + ym[i] + ym[i + 1]) / 3.0);

    double irr_j_num = 0, irr_j_den = 0;
    for (size_t i = 0; i + 1 < n; ++i) {
        const double d = ym[i] - ym[i + 1];
        irr_j_num += d * d;
        irr_j_den += ym[i] * ym[i];
    }
    const double irr_j = irr_j_den > 0 ? irr_j_num / irr_j_den : 0.0;

    double rolloff = yf.back();
    {
        const double threshold = rolloff_fraction * total;
        double cum = 0;
        for (size_t i = 0; i < n; ++i) {
            cum += ym[i];
            if (cum >= threshold) {
                rolloff = yf[i];
                break;
            }
        }
    }

    double log_acc = 0;
    for (double v : ym) log_acc += std::log(v + kLogFloor);
    const double flatness = std::exp(log_acc / static_cast<double>(n)) / (total / static_cast<double>(n));

    double smooth = 0;
    {
        auto db = [](double v) { return 20.0 * std::log(std::max(v, kLogFloor)); };
        for (size_t i = 1; i + 1 < n; ++i)
            smooth += std::abs(db(ym[i]) - (db(ym[i - 1]) + db(ym[i]) + db(ym[i + 1])) / 3.0);
    }

    return {spread, spec_skew, spec_kurt, centroid, irr_k, irr_j, rolloff, flatness, smooth};
}

FeatureVector extract(const Waveform& w, double rolloff_fraction) {
    const std::array<double, 8> t = time_features(w.samples);
    const std::array<double, 9> f = freq_features(magnitude_spectrum(w), rolloff_fraction);

    FeatureVector out;
    out.mean = t[0];
    out.std_dev = t[1];
    out.avg_deviation = t[2];
    out.skewness = t[3];
    out.kurtosis = t[4];
    out.rms_amplitude = t[5];
    out.lowest = t[6];
    out.highest = t[7];
    out.spec_std_dev = f[0];
    out.spec_skewness = f[1];
    out.spec_kurtosis = f[2];
    out.spec_centroid = f[3];
    out.irregularity_k = f[4];
    out.irregularity_j = f[5];
    out.rolloff = f[6];
    out.flatness = f[7];
    out.smoothness = f[8];
    return out;
}

void FeatureMatrix::add(const FeatureVector& f, std::string label) {
    const auto v = f.values();
    rows.emplace_back(v.begin(), v.end());
    labels.push_back(std::move(label));
}

std::string feature_matrix_to_string(const FeatureMatrix& m) {
    if (m.rows.size() != m.labels.size()) throw Error("feature matrix: row/label count mismatch");
    std::string out;
    const auto& names = FeatureVector::names();
    for (size_t i = 0; i < names.size(); ++i) {
        out += names[i];
        out += ',';
    }
    out += "label\n";

    char buf[40];
    for (size_t r = 0; r < m.rows.size(); ++r) {
        if (m.rows[r].size() != kFeatureCount) throw Error("feature matrix: row is not 17 wide");
        for (double v : m.rows[r]) {
            std::snprintf(buf, sizeof buf, "%.17g", v);
            out += buf;
            out += ',';
        }
        out += m.labels[r];
        out += '\n';
    }
    return out;
}

FeatureMatrix feature_matrix_from_string(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line)) throw Error("feature matrix: empty file");

    std::string expected_header;
    for (const auto& n : FeatureVector::names()) {
        expected_header += n;
        expected_header += ',';
    }
    expected_header += "label";
    if (line != expected_header) throw Error("feature matrix: unexpected header");

    FeatureMatrix m;
    size_t line_no = 1;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::vector<double> row;
        row.reserve(kFeatureCount);
        size_t pos = 0;
        for (size_t c = 0; c < kFeatureCount; ++c) {
            const size_t comma = line.find(',', pos);
            if (comma == std::string::npos)
                throw Error("feature matrix: short row at line " + std::to_string(line_no));
            row.push_back(std::stod(line.substr(pos, comma - pos)));
            pos = comma + 1;
        }
        if (pos >= line.size()) throw Error("feature matrix: missing label at line " + std::to_string(line_no));
        m.rows.push_back(std::move(row));
        m.labels.push_back(line.substr(pos));
    }
    return m;
}

void write_feature_matrix(const std::string& path, const FeatureMatrix& m) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw Error("write_feature_matrix: cannot open " + path);
    const std::string text = feature_matrix_to_string(m);
    os.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!os) throw Error("write_feature_matrix: write failed for " + path);
}

FeatureMatrix read_feature_matrix(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw Error("read_feature_matrix: cannot open " + path);
    std::ostringstream ss;
    ss << is.rdbuf();
    return feature_matrix_from_string(ss.str());
}

}  // namespace ecuprint
