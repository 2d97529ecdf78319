#include "ecuprint/profile.hpp"

#include <algorithm>

#include "ecuprint/error.hpp"
#include "ecuprint/rng.hpp"

namespace ecuprint {

DeviceProfile make_profile(uint64_t seed, const ProfileSpread& spread, std::string device_id) {
    for (double s : {spread.v_dom, spread.v_rec, spread.tau, spread.ring_amp, spread.ring_freq,
                     spread.ring_decay, spread.noise_sigma, spread.level_jitter}) {
        if (s < 0) throw Error("make_profile: spread entries must be >= 0");
    }

    Rng rng(seed);
    DeviceProfile p;
    p.device_id = device_id.empty() ? "dev" + std::to_string(seed) : std::move(device_id);

    // Fixed draw order keeps profiles reproducible across versions.
    p.v_dom_h = rng.gaussian(p.v_dom_h, spread.v_dom);
    p.v_dom_l = rng.gaussian(p.v_dom_l, spread.v_dom);
    p.v_rec_h = rng.gaussian(p.v_rec_h, spread.v_rec);
    p.v_rec_l = rng.gaussian(p.v_rec_l, spread.v_rec);
    p.rise_tau = rng.gaussian(p.rise_tau, spread.tau);
    p.fall_tau = rng.gaussian(p.fall_tau, spread.tau);
    p.ring_amp = rng.gaussian(p.ring_amp, spread.ring_amp);
    p.ring_freq = rng.gaussian(p.ring_freq, spread.ring_freq);
    p.ring_decay = rng.gaussian(p.ring_decay, spread.ring_decay);
    p.noise_sigma = rng.gaussian(p.noise_sigma, spread.noise_sigma);
    p.level_jitter_sigma = rng.gaussian(p.level_jitter_sigma, spread.level_jitter);

    // Keep physical invariants under extreme draws.
    p.rise_tau = std::max(p.rise_tau, 1e-9);
    p.fall_tau = std::max(p.fall_tau, 1e-9);
    p.ring_amp = std::max(p.ring_amp, 0.0);
    p.ring_freq = std::max(p.ring_freq, 1e3);
    p.ring_decay = std::max(p.ring_decay, 1e5);
    p.noise_sigma = std::max(p.noise_sigma, 0.0);
    p.level_jitter_sigma = std::max(p.level_jitter_sigma, 0.0);
    p.v_dom_h = std::max(p.v_dom_h, p.v_rec_h + 0.2);
    p.v_dom_l = std::min(p.v_dom_l, p.v_rec_l - 0.2);

    return p;
}

}  // namespace ecuprint
