#pragma once

#include <vector>

namespace mixnum {

// Exact rational, used for the CP ratio so integer CP lengths can be checked.
struct Ratio {
    long num = 1;
    long den = 16;
};

// Base (index 0) waveform parameters from which every scaled numerology
// in a band is derived.
struct BaseParams {
    double delta_f0_hz = 15000.0; // base subcarrier spacing
    int n_fft0 = 4096;            // base transform size
    int m_active0 = 1024;         // base active subcarrier count per user
    Ratio cp_ratio{1, 16};        // CP duration / useful symbol duration
    int frame_symbol_budget = 1;  // base-numerology symbols per frame
};

// One scaled numerology: spacing doubles and symbol shrinks by the same
// power of two, so every numerology spans the same bandwidth and frame.
struct NumerologyConfig {
    int k = 0;                // scaling index
    double delta_f_hz = 0.0;  // subcarrier spacing
    int n_fft = 0;            // transform size
    int n_cp = 0;             // cyclic prefix length in samples
    int m_active = 0;         // active subcarriers for one user
    double t_data_s = 0.0;    // useful symbol duration
    double t_cp_s = 0.0;      // CP duration
    double t_ofdm_s = 0.0;    // total symbol duration
    int symbols_per_frame = 0;
};

// Placement of one user's active subcarriers inside its subband.
// Indices are "spectral order": 0 is the lowest frequency of the band,
// at the granularity of the user's own numerology.
struct SubbandAllocation {
    int user_index = 1;       // 1-based
    int subband = 1;          // 1-based position, low band first
    int first_active = 0;     // first occupied bin, spectral order
    int m_active = 0;
    double band_start_hz = 0; // subband lower edge relative to band center
    double band_width_hz = 0;
};

struct UserSpec {
    int k = 0;       // numerology index
    int subband = 1; // 1-based subband position
};

struct UserPlan {
    UserSpec spec;
    NumerologyConfig cfg;
    SubbandAllocation alloc;
};

// A validated multi-user transmission plan plus the candidate set the
// identifier searches over (the numerologies in use, ordered by subband).
struct ScenarioPlan {
    BaseParams base;
    std::vector<UserPlan> users;
    std::vector<NumerologyConfig> candidates;
    long frame_len = 0;      // samples per frame, equal for every user
    long bits_per_frame = 0; // payload bits per frame, all users
};

// Derives numerology k from the base parameters.
// Throws ParameterError when the scaled sizes are not positive integers.
NumerologyConfig derive_numerology(int k, const BaseParams& base);

// First occupied bin (spectral order) of a centered active block inside
// subband `subband` of `n_subbands` equal slices of cfg.n_fft.
// Throws AllocationError when the block does not fit or cannot be centered.
int centered_first_active(int subband, int n_subbands, const NumerologyConfig& cfg);

// Centered allocation of one user inside subband `subband` of `n_users`
// equal-width subbands; guards split evenly on both sides.
// Throws AllocationError when the active block does not fit.
SubbandAllocation subband_allocation(int user_index, int subband, int n_users,
                                     const NumerologyConfig& cfg,
                                     const BaseParams& base);

// Builds and checks a full plan: distinct numerologies, subbands forming a
// permutation of 1..U, and identical frame length for every user.
ScenarioPlan validate_scenario(const std::vector<UserSpec>& users,
                               const BaseParams& base);

// The two reference two-user setups used throughout the tests:
// 1 = {15 kHz in subband 1, 30 kHz in subband 2}
// 2 = {15 kHz in subband 1, 60 kHz in subband 2}
std::vector<UserSpec> reference_scenario(int which);

} // namespace mixnum
