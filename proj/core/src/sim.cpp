#include "mixnum/sim.hpp"

#include "mixnum/blind_id.hpp"
#include "mixnum/channel.hpp"
#include "mixnum/errors.hpp"
#include "mixnum/receiver.hpp"
#include "mixnum/rng.hpp"
#include "mixnum/waveform.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <span>
#include <string>
#include <thread>
#include <vector>

namespace mixnum {

namespace {

PowerDelayProfile config_pdp(const SimConfig& config) {
    if (config.pdp.empty()) return reference_pdp();
    return {config.pdp};
}

// Index of the candidate the blind receiver would apply, given a size
// estimate: the nearest candidate transform size, first one on ties.
std::size_t nearest_candidate(const std::vector<NumerologyConfig>& candidates,
                              int size_estimate) {
    std::size_t best = 0;
    long best_dist = std::numeric_limits<long>::max();
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        const long dist = std::abs(static_cast<long>(size_estimate) -
                                   static_cast<long>(candidates[c].n_fft));
        if (dist < best_dist) {
            best_dist = dist;
            best = c;
        }
    }
    return best;
}

} // namespace

void validate_config(const SimConfig& config) {
    if (config.scenario != 0 && config.scenario != 1 && config.scenario != 2)
        throw ParameterError("scenario must be 0 (custom), 1, or 2");
    if (config.scenario == 0 && config.users.empty())
        throw ParameterError("custom scenario needs a user list");
    if (config.channel != "awgn" && config.channel != "rayleigh")
        throw ParameterError("channel must be awgn or rayleigh, got " + config.channel);
    if (config.mode != "blind" && config.mode != "nonblind" && config.mode != "both")
        throw ParameterError("mode must be blind, nonblind, or both, got " + config.mode);
    if (config.snr_db.empty()) throw ParameterError("SNR grid is empty");
    if (config.trials < 1) throw ParameterError("trials must be >= 1");
    if (config.record_frames < 2)
        throw ParameterError("records need at least 2 frames so the slowest candidate "
                             "spans a full correlation period");
    if (config.jobs < 1) throw ParameterError("jobs must be >= 1");
    if (!config.pdp.empty()) validate_pdp({config.pdp});
}

ScenarioPlan plan_from_config(const SimConfig& config) {
    const auto users =
        config.scenario == 0 ? config.users : reference_scenario(config.scenario);
    return validate_scenario(users, config.base);
}

TrialOutcome run_trial(const SimConfig& config, const ScenarioPlan& plan, double snr_db,
                       std::size_t snr_index, long trial_index) {
    const std::uint64_t seed = derive_stream(config.seed, snr_index,
                                             static_cast<std::uint64_t>(trial_index));
    Rng rng(seed);

    // Draw order is fixed (payloads, then taps, then noise) so the mode
    // flags cannot shift the realization.
    const auto frames = build_scenario_frames(plan, config.record_frames, rng);

    // Taps are redrawn every frame (block fading), independently per user.
    const bool rayleigh = config.channel == "rayleigh";
    std::vector<std::vector<std::vector<cd>>> taps(plan.users.size());
    if (rayleigh) {
        const auto pdp = config_pdp(config);
        for (auto& user_taps : taps) {
            user_taps.resize(static_cast<std::size_t>(config.record_frames));
            for (auto& t : user_taps) t = draw_rayleigh_channel(pdp, rng);
        }
    }

    long total_bits = 0;
    std::vector<std::vector<cd>> clean;
    clean.reserve(frames.size());
    for (const auto& f : frames) {
        total_bits += static_cast<long>(f.payload_bits.size());
        clean.push_back(f.samples);
    }
    const auto clean_composite = combine_users(clean);
    const double eb = measure_energy_per_bit(clean_composite, total_bits);

    std::vector<cd> rx;
    if (rayleigh) {
        std::vector<std::vector<cd>> faded(frames.size());
        for (std::size_t u = 0; u < frames.size(); ++u)
            faded[u] = apply_block_fading(frames[u].samples, taps[u], plan.frame_len);
        rx = combine_users(faded);
    } else {
        rx = clean_composite;
    }
    add_awgn(rx, noise_variance(eb, snr_db), rng);

    TrialOutcome outcome;
    outcome.snr_db = snr_db;
    outcome.seed = seed;
    outcome.total_bits = total_bits;

    const bool do_blind = config.mode != "nonblind";
    const bool do_nonblind = config.mode != "blind";

    IdentificationResult id;
    if (do_blind) {
        id = identify(rx, plan);
        outcome.type_correct = id.type_correct;
        outcome.location_correct = id.location_correct;
    }

    const int n_users = static_cast<int>(plan.users.size());
    const std::vector<std::vector<cd>> no_taps;
    for (std::size_t u = 0; u < plan.users.size(); ++u) {
        const auto& user = plan.users[u];
        const auto& user_taps = rayleigh ? taps[u] : no_taps;

        if (do_nonblind) {
            const auto report =
                demodulate_subband(rx, user.cfg, user.alloc, user_taps, plan.frame_len,
                                   DemodMode::non_blind, frames[u].payload_bits);
            outcome.bit_errors_nonblind += report.bit_errors;
        }

        if (do_blind) {
            // The blind receiver applies whatever the identifier produced
            // for this user's numerology; a wrong estimate still gets
            // demodulated and scored.
            const CandidateReport* own = nullptr;
            for (const auto& r : id.candidates)
                if (r.type.cfg.k == user.spec.k) own = &r;
            if (own == nullptr) throw ScenarioError("candidate set misses a user numerology");

            const std::size_t use =
                nearest_candidate(plan.candidates, own->type.size_estimate);
            const auto& use_cfg = plan.candidates[use];
            const int use_subband = std::max(1, id.candidates[use].subband);
            const auto use_alloc = subband_allocation(user.alloc.user_index, use_subband,
                                                      n_users, use_cfg, plan.base);
            const auto report =
                demodulate_subband(rx, use_cfg, use_alloc, user_taps, plan.frame_len,
                                   DemodMode::blind, frames[u].payload_bits);
            outcome.bit_errors_blind += report.bit_errors;
        }
    }
    return outcome;
}

SweepRow run_point(const SimConfig& config, const ScenarioPlan& plan, double snr_db,
                   std::size_t snr_index) {
    std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(config.trials));
    const int jobs = std::max(1, config.jobs);
    if (jobs == 1) {
        for (long t = 0; t < config.trials; ++t)
            outcomes[static_cast<std::size_t>(t)] =
                run_trial(config, plan, snr_db, snr_index, t);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(static_cast<std::size_t>(jobs));
        for (int w = 0; w < jobs; ++w) {
            workers.emplace_back([&, w] {
                for (long t = w; t < config.trials; t += jobs)
                    outcomes[static_cast<std::size_t>(t)] =
                        run_trial(config, plan, snr_db, snr_index, t);
            });
        }
        for (auto& worker : workers) worker.join();
    }
    return aggregate(outcomes);
}

std::vector<SweepRow> run_sweep(const SimConfig& config) {
    validate_config(config);
    const auto plan = plan_from_config(config);
    std::vector<SweepRow> rows;
    rows.reserve(config.snr_db.size());
    for (std::size_t i = 0; i < config.snr_db.size(); ++i)
        rows.push_back(run_point(config, plan, config.snr_db[i], i));
    return rows;
}

} // namespace mixnum
