#pragma once

#include "mixnum/metrics.hpp"
#include "mixnum/numerology.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mixnum {

// Resolved sweep configuration. The JSON echo of this struct is the
// reproduction contract: feeding it back yields byte-identical results.
struct SimConfig {
    int scenario = 1;                  // 1 or 2; 0 = take `users` as given
    std::vector<UserSpec> users;       // used when scenario == 0
    std::string channel = "awgn";      // "awgn" | "rayleigh"
    std::vector<double> pdp;           // rayleigh tap powers; empty = reference profile
    std::vector<double> snr_db = {-10, -8, -6, -4, -2, 0,  2,  4,
                                  6,   8,  10, 12, 14, 16, 18, 20};
    long trials = 10000;
    std::uint64_t seed = 1;
    int record_frames = 16;            // frames observed per trial
    std::string mode = "both";         // "blind" | "nonblind" | "both"
    int jobs = 1;
    BaseParams base;
};

// Throws on malformed fields (unknown channel/mode, empty grid, ...).
void validate_config(const SimConfig& config);

// Builds the scenario plan the config describes.
ScenarioPlan plan_from_config(const SimConfig& config);

// One deterministic trial: the outcome is a pure function of
// (config.seed, snr_index, trial_index) plus the resolved plan.
TrialOutcome run_trial(const SimConfig& config, const ScenarioPlan& plan, double snr_db,
                       std::size_t snr_index, long trial_index);

// All trials of one SNR point, split across config.jobs workers; the
// aggregate is independent of the worker count.
SweepRow run_point(const SimConfig& config, const ScenarioPlan& plan, double snr_db,
                   std::size_t snr_index);

// The full grid.
std::vector<SweepRow> run_sweep(const SimConfig& config);

} // namespace mixnum
