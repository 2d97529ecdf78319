#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ecuprint/bits.hpp"
#include "ecuprint/frame.hpp"
#include "ecuprint/profile.hpp"

namespace ecuprint {

// Sampled differential voltage signal (CAN-H minus CAN-L) covering one bit
// window.
struct Waveform {
    std::vector<double> samples;
    double sample_rate = 0;  // samples/second
    double bit_rate = 0;     // bits/second
    std::string source_label;  // ground-truth device id, empty if unknown
    BitString pattern;         // the bit window the samples cover
};

inline constexpr double kMinOversampling = 20.0;

// NRZ synthesis: per-bit target levels from the profile, first-order
// exponential edges, one damped sinusoid per transition, per-signal DC
// jitter and per-sample white noise. Deterministic in (profile, pattern,
// noise_seed). The wire is assumed recessive before the window starts.
Waveform synthesize(const DeviceProfile& profile, const BitString& pattern, double sample_rate,
                    double bit_rate, uint64_t noise_seed);

// Slice of a full-frame waveform covering exactly the EXID field window
// (stuff bits included).
Waveform exid_window(const Waveform& full_frame, const WireFrame& wire);

// Per-bit majority vote against the nominal 1.0 V midpoint between the
// dominant (2 V) and recessive (0 V) differential levels.
BitString decode_pattern(const Waveform& w);

// Trace file: one header line (sample_rate, bit_rate, pattern, label) then
// one voltage sample per line in decimal volts. Written deterministically.
std::string trace_to_string(const Waveform& w);
Waveform trace_from_string(const std::string& text);
void write_trace(const std::string& path, const Waveform& w);
Waveform read_trace(const std::string& path);

}  // namespace ecuprint
