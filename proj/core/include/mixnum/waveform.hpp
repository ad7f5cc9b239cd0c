#pragma once

#include "mixnum/fft.hpp"
#include "mixnum/numerology.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace mixnum {

// One user's transmitted record: the payload and the time-domain samples.
struct UserFrame {
    int user_index = 1;
    std::vector<std::uint8_t> payload_bits;
    std::vector<cd> samples;
};

// BPSK: bit 0 -> +1, bit 1 -> -1. The demapper mirrors this.
std::vector<cd> map_bpsk(std::span<const std::uint8_t> bits);

// Places M_k symbols into an N_k-long spectral-order vector (index 0 is
// the lowest frequency, DC sits at N/2); all other bins zero.
std::vector<cd> build_freq_vector(std::span<const cd> symbols,
                                  const SubbandAllocation& alloc,
                                  const NumerologyConfig& cfg);

// CP prepend: output = [last n_cp samples | symbol].
std::vector<cd> add_cp(std::span<const cd> symbol, int n_cp);

// `n_frames` frames of CP-OFDM symbols for one user. Bit count must be
// n_frames * symbols_per_frame * m_active.
UserFrame assemble_user_frame(std::span<const std::uint8_t> bits,
                              const NumerologyConfig& cfg,
                              const SubbandAllocation& alloc,
                              int n_frames = 1);

// Draws payloads and builds every user's record for one trial.
std::vector<UserFrame> build_scenario_frames(const ScenarioPlan& plan, int n_frames,
                                             class Rng& rng);

} // namespace mixnum
