#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ecuprint/error.hpp"
#include "ecuprint/features.hpp"
#include "ecuprint/profile.hpp"
#include "ecuprint/rng.hpp"
#include "oracles.hpp"

using namespace ecuprint;

namespace {

constexpr double kFs = 50e6;
constexpr double kBr = 500e3;

std::vector<double> random_signal(Rng& rng, size_t n) {
    std::vector<double> x(n);
    const double offset = rng.uniform(-2.0, 2.0);
    const double scale = rng.uniform(0.1, 3.0);
    for (double& v : x) v = offset + scale * rng.uniform(-1.0, 1.0);
    return x;
}

Spectrum random_spectrum(Rng& rng, size_t bins) {
    Spectrum s;
    s.magnitudes.resize(bins);
    s.bin_freqs.resize(bins);
    for (size_t i = 0; i < bins; ++i) {
        s.magnitudes[i] = rng.uniform(0.0, 10.0);
        s.bin_freqs[i] = static_cast<double>(i) * 100.0;
    }
    return s;
}

}  // namespace

TEST_CASE("constant signal follows the degenerate policy") {
    const std::vector<double> x(32, 2.5);
    const auto t = time_features(x);
    CHECK(t[0] == doctest::Approx(2.5));  // mean
    CHECK(t[1] == 0.0);                   // std
    CHECK(t[2] == 0.0);                   // avg deviation
    CHECK(t[3] == 0.0);                   // skewness
    CHECK(t[4] == 0.0);                   // kurtosis
    CHECK(t[5] == doctest::Approx(2.5));  // rms
    CHECK(t[6] == 2.5);
    CHECK(t[7] == 2.5);
}

TEST_CASE("alternating unit signal") {
    const std::vector<double> x = {1, -1, 1, -1};
    const auto t = time_features(x);
    CHECK(t[0] == doctest::Approx(0.0));
    CHECK(t[5] == doctest::Approx(1.0));
    CHECK(t[6] == -1.0);
    CHECK(t[7] == 1.0);
}

TEST_CASE("time features match the direct-formula oracle") {
    Rng rng(0x7175u);
    for (int i = 0; i < 200; ++i) {
        const std::vector<double> x = random_signal(rng, 64 + rng.below(960));
        const auto got = time_features(x);
        const auto want = oracle::time_features(x);
        for (size_t f = 0; f < 8; ++f) CHECK_MESSAGE(oracle::close(got[f], want[f]), "feature ", f);
    }
}

TEST_CASE("lowest <= mean <= highest") {
    Rng rng(0x10eu);
    for (int i = 0; i < 50; ++i) {
        const auto t = time_features(random_signal(rng, 64));
        CHECK(t[6] <= t[0]);
        CHECK(t[0] <= t[7]);
    }
}

TEST_CASE("flat spectrum has unit flatness and zero irregularity") {
    Spectrum s;
    s.magnitudes.assign(65, 3.0);
    s.bin_freqs.resize(65);
    for (size_t i = 0; i < 65; ++i) s.bin_freqs[i] = static_cast<double>(i);
    const auto f = freq_features(s);
    CHECK(f[7] == doctest::Approx(1.0).epsilon(1e-9));  // flatness
    CHECK(f[5] == 0.0);                                  // irregularity-j
    CHECK(f[8] == doctest::Approx(0.0));                 // smoothness
}

TEST_CASE("single nonzero bin is a point mass at its frequency") {
    Spectrum s;
    s.magnitudes.assign(33, 0.0);
    s.bin_freqs.resize(33);
    for (size_t i = 0; i < 33; ++i) s.bin_freqs[i] = static_cast<double>(i) * 250.0;
    s.magnitudes[7] = 4.2;
    const auto f = freq_features(s);
    CHECK(f[3] == doctest::Approx(7 * 250.0));  // centroid
    CHECK(f[0] == doctest::Approx(0.0));        // spread
    CHECK(f[1] == 0.0);                          // skewness policy at zero spread
    CHECK(f[2] == 0.0);
    CHECK(f[6] == doctest::Approx(7 * 250.0));  // rolloff lands on the mass
}

TEST_CASE("frequency features match the direct-formula oracle") {
    Rng rng(0xf12eu);
    for (int i = 0; i < 200; ++i) {
        const Spectrum s = random_spectrum(rng, 129);
        const auto got = freq_features(s);
        const auto want = oracle::freq_features(s.magnitudes, s.bin_freqs, 0.95);
        for (size_t f = 0; f < 9; ++f) CHECK_MESSAGE(oracle::close(got[f], want[f]), "feature ", f);
    }
}

TEST_CASE("rolloff is monotone in the fraction") {
    Rng rng(0x5011u);
    for (int i = 0; i < 20; ++i) {
        const Spectrum s = random_spectrum(rng, 65);
        double prev = -1;
        for (double frac : {0.5, 0.7, 0.9, 0.95, 0.99, 1.0}) {
            const double r = freq_features(s, frac)[6];
            CHECK(r >= prev);
            prev = r;
        }
    }
}

TEST_CASE("degenerate spectra are rejected") {
    Spectrum zero;
    zero.magnitudes.assign(16, 0.0);
    zero.bin_freqs.assign(16, 0.0);
    for (size_t i = 0; i < 16; ++i) zero.bin_freqs[i] = static_cast<double>(i);
    CHECK_THROWS_AS(freq_features(zero), Error);

    Spectrum tiny;
    tiny.magnitudes.assign(2, 1.0);
    tiny.bin_freqs.assign(2, 1.0);
    CHECK_THROWS_AS(freq_features(tiny), Error);

    CHECK_THROWS_AS(time_features(std::vector<double>{1.0}), Error);

    Spectrum s;
    s.magnitudes.assign(16, 1.0);
    s.bin_freqs.resize(16);
    CHECK_THROWS_AS(freq_features(s, 0.0), Error);
    CHECK_THROWS_AS(freq_features(s, 1.5), Error);
}

TEST_CASE("extraction is deterministic") {
    const DeviceProfile p = make_profile(4, ProfileSpread::defaults());
    const Waveform w = synthesize(p, BitString::parse("000001000001000001000"), kFs, kBr, 11);
    const auto a = extract(w).values();
    const auto b = extract(w).values();
    CHECK(a == b);
}

TEST_CASE("dominant and recessive windows differ by the 2 V swing") {
    const DeviceProfile p = make_profile(1, ProfileSpread::zero());
    const Waveform dom = synthesize(p, BitString::parse("000000000000000000"), kFs, kBr, 5);
    const Waveform rec = synthesize(p, BitString::parse("111111111111111111"), kFs, kBr, 6);
    const double gap = extract(dom).mean - extract(rec).mean;
    CHECK(gap == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("shift moves location features and leaves shape features alone") {
    Rng rng(0x5417u);
    const std::vector<double> x = random_signal(rng, 512);
    const double c = 1.75;
    std::vector<double> shifted = x;
    for (double& v : shifted) v += c;

    const auto a = time_features(x);
    const auto b = time_features(shifted);
    CHECK(oracle::close(b[0], a[0] + c));  // mean
    CHECK(oracle::close(b[6], a[6] + c));  // lowest
    CHECK(oracle::close(b[7], a[7] + c));  // highest
    CHECK(oracle::close(b[1], a[1]));      // std
    CHECK(oracle::close(b[2], a[2]));      // avg deviation
    CHECK(oracle::close(b[3], a[3]));      // skewness
    CHECK(oracle::close(b[4], a[4]));      // kurtosis
}

TEST_CASE("positive scaling stretches amplitudes and keeps shape features") {
    Rng rng(0x5ca1eu);
    std::vector<double> x = random_signal(rng, 600);
    const double a_scale = 2.5;
    std::vector<double> scaled = x;
    for (double& v : scaled) v *= a_scale;

    const auto ta = time_features(x);
    const auto tb = time_features(scaled);
    for (size_t f : {0u, 1u, 2u, 5u, 6u, 7u}) CHECK(oracle::close(tb[f], a_scale * ta[f]));
    CHECK(oracle::close(tb[3], ta[3]));
    CHECK(oracle::close(tb[4], ta[4]));

    const Spectrum sa = magnitude_spectrum(x, 1e6);
    const Spectrum sb = magnitude_spectrum(scaled, 1e6);
    const auto fa = freq_features(sa);
    const auto fb = freq_features(sb);
    CHECK(oracle::close(fb[7], fa[7], 1e-9, 1e-9));  // flatness
    CHECK(oracle::close(fb[5], fa[5]));              // irregularity-j
}

TEST_CASE("within-profile spread is small against between-profile gaps") {
    const DeviceProfile p = make_profile(derive_seed(1, 0x50, 0), ProfileSpread::defaults(), "a");
    const DeviceProfile q = make_profile(derive_seed(1, 0x50, 1), ProfileSpread::defaults(), "b");
    const BitString pat = BitString::parse("000001000001000001000");

    const int reps = 100;
    std::vector<std::array<double, kFeatureCount>> fp, fq;
    for (int i = 0; i < reps; ++i) {
        fp.push_back(extract(synthesize(p, pat, kFs, kBr, derive_seed(2, 1, i))).values());
        fq.push_back(extract(synthesize(q, pat, kFs, kBr, derive_seed(2, 2, i))).values());
    }

    int informative = 0;
    for (size_t f = 0; f < kFeatureCount; ++f) {
        double mp = 0, mq = 0;
        for (int i = 0; i < reps; ++i) {
            mp += fp[i][f];
            mq += fq[i][f];
        }
        mp /= reps;
        mq /= reps;
        double vp = 0, vq = 0;
        for (int i = 0; i < reps; ++i) {
            vp += (fp[i][f] - mp) * (fp[i][f] - mp);
            vq += (fq[i][f] - mq) * (fq[i][f] - mq);
        }
        const double pooled_sd = std::sqrt((vp + vq) / (2.0 * reps - 2.0));
        if (std::abs(mp - mq) > 4.0 * pooled_sd && pooled_sd > 0) ++informative;
    }
    // enough well-separated coordinates for the classifiers downstream
    CHECK(informative >= 5);
}

TEST_CASE("feature matrix files round-trip exactly") {
    const DeviceProfile p = make_profile(2, ProfileSpread::defaults());
    FeatureMatrix m;
    for (int i = 0; i < 3; ++i) {
        const Waveform w = synthesize(p, BitString::parse("010101010101010101"), kFs, kBr, 100 + i);
        m.add(extract(w), "ecu0" + std::to_string(i + 1));
    }

    const std::string text = feature_matrix_to_string(m);
    CHECK(text == feature_matrix_to_string(m));

    const FeatureMatrix back = feature_matrix_from_string(text);
    REQUIRE(back.size() == m.size());
    CHECK(back.labels == m.labels);
    for (size_t r = 0; r < m.size(); ++r)
        for (size_t c = 0; c < kFeatureCount; ++c) CHECK(back.rows[r][c] == m.rows[r][c]);

    CHECK_THROWS_AS(feature_matrix_from_string("bad,header\n"), Error);
}
