#include "mixnum/channel.hpp"

#include "mixnum/errors.hpp"
#include "mixnum/rng.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace mixnum {

PowerDelayProfile reference_pdp() {
    return {{0.8407, 0.0, 0.0, 0.1332, 0.0, 0.0168, 0.0067, 0.0, 0.0027}};
}

void validate_pdp(const PowerDelayProfile& pdp) {
    if (pdp.tap_powers.empty()) throw ParameterError("power delay profile is empty");
    double sum = 0.0;
    for (double p : pdp.tap_powers) {
        if (p < 0.0) throw ParameterError("negative tap power");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-3)
        throw ParameterError("tap powers sum to " + std::to_string(sum) +
                             ", expected 1 within 1e-3");
}

std::vector<cd> draw_rayleigh_channel(const PowerDelayProfile& pdp, Rng& rng) {
    validate_pdp(pdp);
    std::vector<cd> taps(pdp.tap_powers.size());
    for (std::size_t l = 0; l < taps.size(); ++l) {
        const double g_re = rng.gaussian();
        const double g_im = rng.gaussian();
        const double p = pdp.tap_powers[l];
        taps[l] = p > 0.0 ? std::sqrt(p / 2.0) * cd(g_re, g_im) : cd(0.0, 0.0);
    }
    return taps;
}

std::vector<cd> apply_channel(std::span<const cd> frame, std::span<const cd> taps) {
    if (taps.empty()) throw ParameterError("channel needs at least one tap");
    std::vector<cd> out(frame.size(), cd(0.0, 0.0));
    const std::size_t n_taps = std::min(taps.size(), frame.size());
    for (std::size_t l = 0; l < n_taps; ++l) {
        const cd h = taps[l];
        if (h == cd(0.0, 0.0)) continue;
        for (std::size_t n = l; n < frame.size(); ++n) out[n] += h * frame[n - l];
    }
    return out;
}

std::vector<cd> apply_block_fading(std::span<const cd> record,
                                   const std::vector<std::vector<cd>>& taps_per_frame,
                                   long frame_len) {
    if (frame_len <= 0) throw ParameterError("frame length must be positive");
    if (static_cast<long>(record.size()) % frame_len != 0)
        throw SizeError("record of " + std::to_string(record.size()) +
                        " samples is not a whole number of " + std::to_string(frame_len) +
                        "-sample frames");
    const long n_frames = static_cast<long>(record.size()) / frame_len;
    if (static_cast<long>(taps_per_frame.size()) != n_frames)
        throw SizeError("need " + std::to_string(n_frames) + " tap draws, got " +
                        std::to_string(taps_per_frame.size()));

    std::vector<cd> out;
    out.reserve(record.size());
    for (long f = 0; f < n_frames; ++f) {
        const auto block = record.subspan(static_cast<std::size_t>(f * frame_len),
                                          static_cast<std::size_t>(frame_len));
        const auto faded = apply_channel(block, taps_per_frame[static_cast<std::size_t>(f)]);
        out.insert(out.end(), faded.begin(), faded.end());
    }
    return out;
}

std::vector<cd> combine_users(const std::vector<std::vector<cd>>& user_signals) {
    if (user_signals.empty()) throw ParameterError("no user signals to combine");
    const std::size_t len = user_signals.front().size();
    std::vector<cd> out(len, cd(0.0, 0.0));
    for (const auto& sig : user_signals) {
        if (sig.size() != len)
            throw SizeError("user signal lengths differ: " + std::to_string(sig.size()) +
                            " vs " + std::to_string(len));
        for (std::size_t n = 0; n < len; ++n) out[n] += sig[n];
    }
    return out;
}

double measure_energy_per_bit(std::span<const cd> clean_composite, long total_bits) {
    if (total_bits <= 0) throw ParameterError("bit count must be positive");
    double energy = 0.0;
    for (const cd& x : clean_composite) energy += std::norm(x);
    return energy / static_cast<double>(total_bits);
}

double noise_variance(double energy_per_bit, double snr_db) {
    if (!(energy_per_bit > 0.0)) throw ParameterError("energy per bit must be positive");
    if (std::isinf(snr_db) && snr_db > 0.0) return 0.0;
    return energy_per_bit / std::pow(10.0, snr_db / 10.0);
}

void add_awgn(std::vector<cd>& signal, double variance, Rng& rng) {
    if (variance < 0.0) throw ParameterError("noise variance must be non-negative");
    if (variance == 0.0) return;
    const double sigma = std::sqrt(variance / 2.0);
    for (cd& x : signal) x += sigma * cd(rng.gaussian(), rng.gaussian());
}

} // namespace mixnum
