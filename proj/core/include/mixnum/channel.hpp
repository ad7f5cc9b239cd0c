#pragma once

#include "mixnum/fft.hpp"

#include <span>
#include <vector>

namespace mixnum {

class Rng;

// Mean tap powers, normalized so they sum to ~1.
struct PowerDelayProfile {
    std::vector<double> tap_powers;
};

// The nine-tap profile used by the reference evaluations.
PowerDelayProfile reference_pdp();

// Throws ParameterError on negative powers or a sum off 1 by more than 1e-3.
void validate_pdp(const PowerDelayProfile& pdp);

// One Rayleigh block-fading draw: h[l] = sqrt(p_l) * g_l with g_l unit-variance
// circularly symmetric complex Gaussian. Zero-power taps stay exactly zero but
// still consume their Gaussian pair, so tap positions never shift the stream.
std::vector<cd> draw_rayleigh_channel(const PowerDelayProfile& pdp, Rng& rng);

// Linear convolution with the tail truncated to the input length; the CP
// absorbs the spread, so frame boundaries stay aligned.
std::vector<cd> apply_channel(std::span<const cd> frame, std::span<const cd> taps);

// Block fading: one independent tap draw per frame-length block. Each block
// is convolved on its own, so a draw never bleeds into the next frame.
std::vector<cd> apply_block_fading(std::span<const cd> record,
                                   const std::vector<std::vector<cd>>& taps_per_frame,
                                   long frame_len);

// Element-wise sum of equal-length user signals.
std::vector<cd> combine_users(const std::vector<std::vector<cd>>& user_signals);

// Mean transmitted energy per payload bit, measured from the clean composite.
double measure_energy_per_bit(std::span<const cd> clean_composite, long total_bits);

// Noise variance for a target SNR: N_o = E_b / 10^(snr_db/10); +inf disables noise.
double noise_variance(double energy_per_bit, double snr_db);

// Adds complex Gaussian noise with the given per-sample variance in place.
// Variance 0 (disabled noise) leaves both the signal and the stream untouched.
void add_awgn(std::vector<cd>& signal, double variance, Rng& rng);

} // namespace mixnum
