#pragma once

// Independent reference implementations used only by tests. Everything here
// is written as direct summation of the defining formulas, accumulating in
// long double, so it shares no code path with the library.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace oracle {

inline std::vector<std::complex<double>> naive_dft(const std::vector<double>& x) {
    const size_t m = x.size();
    std::vector<std::complex<double>> out(m);
    const long double two_pi = 2.0L * 3.141592653589793238462643383279502884L;
    for (size_t k = 0; k < m; ++k) {
        long double re = 0, im = 0;
        for (size_t n = 0; n < m; ++n) {
            const long double ang = two_pi * static_cast<long double>(k) * static_cast<long double>(n) /
                                    static_cast<long double>(m);
            re += static_cast<long double>(x[n]) * std::cos(ang);
            im -= static_cast<long double>(x[n]) * std::sin(ang);
        }
        out[k] = {static_cast<double>(re), static_cast<double>(im)};
    }
    return out;
}

inline std::array<double, 8> time_features(const std::vector<double>& x) {
    const long double n = static_cast<long double>(x.size());
    long double mean = 0;
    for (double v : x) mean += v;
    mean /= n;

    long double var = 0;
    for (double v : x) var += (v - mean) * (v - mean);
    const long double sd = std::sqrt(var / (n - 1.0L));

    long double adev = 0;
    for (double v : x) adev += std::abs(static_cast<long double>(v) - mean);
    adev /= n;

    long double skew = 0, kurt = 0;
    if (sd > 0) {
        for (double v : x) {
            const long double z = (v - mean) / sd;
            skew += z * z * z;
            kurt += z * z * z * z;
        }
        skew /= n;
        kurt = kurt / n - 3.0L;
    }

    long double rms = 0;
    for (double v : x) rms += static_cast<long double>(v) * v;
    rms = std::sqrt(rms / n);

    const double lo = *std::min_element(x.begin(), x.end());
    const double hi = *std::max_element(x.begin(), x.end());

    return {static_cast<double>(mean), static_cast<double>(sd),   static_cast<double>(adev),
            static_cast<double>(skew), static_cast<double>(kurt), static_cast<double>(rms),
            lo,                        hi};
}

// Order: spread, skewness, kurtosis, centroid, irregularity-k,
// irregularity-j, rolloff, flatness, smoothness.
inline std::array<double, 9> freq_features(const std::vector<double>& ym, const std::vector<double>& yf,
                                           double rolloff_fraction) {
    const size_t n = ym.size();
    long double total = 0;
    for (double v : ym) total += v;

    long double centroid = 0;
    for (size_t i = 0; i < n; ++i) centroid += static_cast<long double>(yf[i]) * ym[i];
    centroid /= total;

    long double m2 = 0, m3 = 0, m4 = 0;
    for (size_t i = 0; i < n; ++i) {
        const long double d = yf[i] - centroid;
        m2 += d * d * ym[i];
        m3 += d * d * d * ym[i];
        m4 += d * d * d * d * ym[i];
    }
    m2 /= total;
    m3 /= total;
    m4 /= total;
    const long double spread = std::sqrt(m2);
    const long double skew = spread > 0 ? m3 / (spread * spread * spread) : 0.0L;
    const long double kurt = spread > 0 ? m4 / (m2 * m2) - 3.0L : 0.0L;

    long double irr_k = 0;
    for (size_t i = 1; i + 1 < n; ++i)
        irr_k += std::abs(static_cast<long double>(ym[i]) -
                          (static_cast<long double>(ym[i - 1]) + ym[i] + ym[i + 1]) / 3.0L);

    long double irr_j_num = 0, irr_j_den = 0;
    for (size_t i = 0; i + 1 < n; ++i) {
        irr_j_num += (static_cast<long double>(ym[i]) - ym[i + 1]) * (static_cast<long double>(ym[i]) - ym[i + 1]);
        irr_j_den += static_cast<long double>(ym[i]) * ym[i];
    }
    const long double irr_j = irr_j_den > 0 ? irr_j_num / irr_j_den : 0.0L;

    double rolloff = yf[n - 1];
    long double cum = 0;
    for (size_t i = 0; i < n; ++i) {
        cum += ym[i];
        if (cum >= static_cast<long double>(rolloff_fraction) * total) {
            rolloff = yf[i];
            break;
        }
    }

    long double log_acc = 0;
    for (double v : ym) log_acc += std::log(static_cast<long double>(v) + 1e-12L);
    const long double flatness =
        std::exp(log_acc / static_cast<long double>(n)) / (total / static_cast<long double>(n));

    long double smooth = 0;
    auto db = [](double v) { return 20.0L * std::log(std::max(static_cast<long double>(v), 1e-12L)); };
    for (size_t i = 1; i + 1 < n; ++i)
        smooth += std::abs(db(ym[i]) - (db(ym[i - 1]) + db(ym[i]) + db(ym[i + 1])) / 3.0L);

    return {static_cast<double>(spread),  static_cast<double>(skew),  static_cast<double>(kurt),
            static_cast<double>(centroid), static_cast<double>(irr_k), static_cast<double>(irr_j),
            rolloff,                       static_cast<double>(flatness), static_cast<double>(smooth)};
}

// Relative-or-absolute closeness: values that both collapse to floating
// point noise around zero compare by the absolute branch.
inline bool close(double a, double b, double rel = 1e-9, double abs_floor = 1e-12) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return std::abs(a - b) <= std::max(rel * scale, abs_floor);
}

}  // namespace oracle
