#pragma once

#include <cstdint>
#include <string>

namespace ecuprint {

// Analog parameters of one simulated CAN transceiver. Voltages are the
// single-ended CAN-H/CAN-L levels; the synthesizer works on the
// differential CAN-H minus CAN-L.
struct DeviceProfile {
    std::string device_id;
    double v_rec_h = 2.5;   // recessive CAN-H, volts
    double v_rec_l = 2.5;   // recessive CAN-L, volts
    double v_dom_h = 3.5;   // dominant CAN-H, volts
    double v_dom_l = 1.5;   // dominant CAN-L, volts
    double rise_tau = 70e-9;   // recessive-to-dominant edge constant, seconds
    double fall_tau = 90e-9;   // dominant-to-recessive edge constant, seconds
    double ring_amp = 0.12;    // overshoot amplitude, volts
    double ring_freq = 6e6;    // overshoot frequency, Hz
    double ring_decay = 2.5e7; // overshoot decay, 1/seconds
    double noise_sigma = 0.02;        // additive white noise per sample, volts
    double level_jitter_sigma = 0.01; // per-signal DC drift, volts

    double dominant_level() const { return v_dom_h - v_dom_l; }
    double recessive_level() const { return v_rec_h - v_rec_l; }
};

// Per-parameter standard deviations around the nominal profile. Dominant
// levels are actively driven and vary more between devices than the
// passively biased recessive levels.
struct ProfileSpread {
    double v_dom = 0.06;
    double v_rec = 0.01;
    double tau = 12e-9;
    double ring_amp = 0.03;
    double ring_freq = 1.2e6;
    double ring_decay = 5e6;
    double noise_sigma = 0.004;
    double level_jitter = 0.002;

    static ProfileSpread defaults() { return {}; }
    static ProfileSpread zero() { return {0, 0, 0, 0, 0, 0, 0, 0}; }
};

// Deterministic in seed: distinct seeds give independent Gaussian draws
// around the nominal levels. Negative spread entries are invalid; zero
// entries pin the parameter to its nominal value.
DeviceProfile make_profile(uint64_t seed, const ProfileSpread& spread, std::string device_id = "");

}  // namespace ecuprint
