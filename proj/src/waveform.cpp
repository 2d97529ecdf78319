#include "ecuprint/waveform.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ecuprint/error.hpp"
#include "ecuprint/rng.hpp"

namespace ecuprint {

namespace {

constexpr double kTwoPi = 2.0 * 3.14159265358979323846;

struct Edge {
    double t;
    double start;   // differential level when the edge fires
    double target;  // level the edge settles toward
    double tau;
    double dir;     // +1 rising, -1 falling
};

double base_level(const std::vector<Edge>& edges, size_t upto, double idle, double t) {
    if (upto == 0) return idle;
    const Edge& e = edges[upto - 1];
    return e.target + (e.start - e.target) * std::exp(-(t - e.t) / e.tau);
}

}  // namespace

Waveform synthesize(const DeviceProfile& profile, const BitString& pattern, double sample_rate,
                    double bit_rate, uint64_t noise_seed) {
    if (pattern.empty()) throw Error("synthesize: empty pattern");
    if (sample_rate <= 0 || bit_rate <= 0) throw Error("synthesize: rates must be positive");
    if (sample_rate / bit_rate < kMinOversampling)
        throw Error("synthesize: undersampled (need >= 20 samples per bit)");

    const double bit_time = 1.0 / bit_rate;
    const double dom = profile.dominant_level();
    const double rec = profile.recessive_level();
    const double idle = rec;

    std::vector<Edge> edges;
    double prev_target = idle;
    for (size_t i = 0; i < pattern.size(); ++i) {
        const double target = pattern[i] == 0 ? dom : rec;
        if (target == prev_target) continue;
        const double t = static_cast<double>(i) * bit_time;
        const double start = base_level(edges, edges.size(), idle, t);
        const double tau = target > start ? profile.rise_tau : profile.fall_tau;
        edges.push_back({t, start, target, tau, target > start ? 1.0 : -1.0});
        prev_target = target;
    }

    Waveform w;
    w.sample_rate = sample_rate;
    w.bit_rate = bit_rate;
    w.pattern = pattern;
    const size_t n =
        static_cast<size_t>(std::ceil(static_cast<double>(pattern.size()) * sample_rate / bit_rate));
    w.samples.resize(n);

    Rng rng(noise_seed);
    const double dc = rng.gaussian(0.0, profile.level_jitter_sigma);

    size_t seg = 0;  // edges fired so far
    for (size_t k = 0; k < n; ++k) {
        const double t = static_cast<double>(k) / sample_rate;
        while (seg < edges.size() && edges[seg].t <= t) ++seg;
        double v = base_level(edges, seg, idle, t);
        for (size_t j = seg; j-- > 0;) {
            const double dt = t - edges[j].t;
            const double env = std::exp(-profile.ring_decay * dt);
            if (env < 1e-12) break;
            v += edges[j].dir * profile.ring_amp * env * std::sin(kTwoPi * profile.ring_freq * dt);
        }
        w.samples[k] = v + dc + rng.gaussian(0.0, profile.noise_sigma);
    }
    return w;
}

Waveform exid_window(const Waveform& full_frame, const WireFrame& wire) {
    const FieldWindow& win = wire.window(FrameField::Exid);
    const double spb = full_frame.sample_rate / full_frame.bit_rate;
    const auto s0 = static_cast<size_t>(std::llround(static_cast<double>(win.offset) * spb));
    const auto s1 = static_cast<size_t>(std::llround(static_cast<double>(win.offset + win.length) * spb));
    if (s1 > full_frame.samples.size() || s0 > s1)
        throw Error("exid_window: window outside the sampled range");

    Waveform out;
    out.sample_rate = full_frame.sample_rate;
    out.bit_rate = full_frame.bit_rate;
    out.source_label = full_frame.source_label;
    out.pattern = wire.bits.slice(win.offset, win.length);
    out.samples.assign(full_frame.samples.begin() + s0, full_frame.samples.begin() + s1);
    return out;
}

BitString decode_pattern(const Waveform& w) {
    if (w.samples.empty() || w.bit_rate <= 0) throw Error("decode_pattern: empty waveform");
    const double spb = w.sample_rate / w.bit_rate;
    const size_t bits = w.pattern.empty()
                            ? static_cast<size_t>(std::floor(w.samples.size() / spb + 0.5))
                            : w.pattern.size();
    constexpr double midpoint = 1.0;
    BitString out;
    for (size_t i = 0; i < bits; ++i) {
        const auto lo = static_cast<size_t>(std::llround(i * spb));
        const auto hi = std::min(w.samples.size(), static_cast<size_t>(std::llround((i + 1) * spb)));
        size_t above = 0, total = 0;
        for (size_t k = lo; k < hi; ++k, ++total) above += w.samples[k] > midpoint;
        out.push_back(above * 2 > total ? 0 : 1);
    }
    return out;
}

std::string trace_to_string(const Waveform& w) {
    std::string out;
    char buf[64];
    std::snprintf(buf, sizeof buf, "sample_rate=%.9g bit_rate=%.9g", w.sample_rate, w.bit_rate);
    out += buf;
    out += " pattern=" + w.pattern.str();
    out += " label=" + (w.source_label.empty() ? std::string("-") : w.source_label);
    out += '\n';
    for (double v : w.samples) {
        std::snprintf(buf, sizeof buf, "%.9e\n", v);
        out += buf;
    }
    return out;
}

Waveform trace_from_string(const std::string& text) {
    std::istringstream is(text);
    std::string header;
    if (!std::getline(is, header)) throw Error("trace: missing header line");

    Waveform w;
    std::istringstream hs(header);
    std::string tok;
    bool have_sr = false, have_br = false, have_pattern = false;
    while (hs >> tok) {
        const size_t eq = tok.find('=');
        if (eq == std::string::npos) throw Error("trace: malformed header token '" + tok + "'");
        const std::string key = tok.substr(0, eq);
        const std::string value = tok.substr(eq + 1);
        if (key == "sample_rate") {
            w.sample_rate = std::stod(value);
            have_sr = true;
        } else if (key == "bit_rate") {
            w.bit_rate = std::stod(value);
            have_br = true;
        } else if (key == "pattern") {
            w.pattern = BitString::parse(value);
            have_pattern = true;
        } else if (key == "label") {
            w.source_label = value == "-" ? "" : value;
        } else {
            throw Error("trace: unknown header key '" + key + "'");
        }
    }
    if (!have_sr || !have_br || !have_pattern) throw Error("trace: incomplete header");

    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        w.samples.push_back(std::stod(line));
    }
    return w;
}

void write_trace(const std::string& path, const Waveform& w) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw Error("write_trace: cannot open " + path);
    const std::string text = trace_to_string(w);
    os.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!os) throw Error("write_trace: write failed for " + path);
}

Waveform read_trace(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw Error("read_trace: cannot open " + path);
    std::ostringstream ss;
    ss << is.rdbuf();
    try {
        return trace_from_string(ss.str());
    } catch (const Error& e) {
        throw Error(std::string(e.what()) + " (" + path + ")");
    }
}

}  // namespace ecuprint
