#include "mixnum/receiver.hpp"

#include "mixnum/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace mixnum {

std::vector<std::vector<cd>> remove_cp(std::span<const cd> record,
                                       const NumerologyConfig& cfg) {
    const long period = cfg.n_fft + cfg.n_cp;
    if (record.empty() || static_cast<long>(record.size()) % period != 0)
        throw FramingError("record of " + std::to_string(record.size()) +
                           " samples is not a whole number of " + std::to_string(period) +
                           "-sample symbols");
    const long n_symbols = static_cast<long>(record.size()) / period;
    std::vector<std::vector<cd>> bodies;
    bodies.reserve(static_cast<std::size_t>(n_symbols));
    for (long s = 0; s < n_symbols; ++s) {
        const auto body = record.subspan(static_cast<std::size_t>(s * period + cfg.n_cp),
                                         static_cast<std::size_t>(cfg.n_fft));
        bodies.emplace_back(body.begin(), body.end());
    }
    return bodies;
}

long count_bit_errors(std::span<const std::uint8_t> tx_bits,
                      std::span<const std::uint8_t> rx_bits) {
    if (tx_bits.size() != rx_bits.size())
        throw SizeError("bit streams differ in length: " + std::to_string(tx_bits.size()) +
                        " vs " + std::to_string(rx_bits.size()));
    long errors = 0;
    for (std::size_t i = 0; i < tx_bits.size(); ++i)
        if ((tx_bits[i] != 0) != (rx_bits[i] != 0)) ++errors;
    return errors;
}

long count_bit_errors_padded(std::span<const std::uint8_t> tx_bits,
                             std::span<const std::uint8_t> rx_bits) {
    const std::size_t overlap = std::min(tx_bits.size(), rx_bits.size());
    long errors = count_bit_errors(tx_bits.first(overlap), rx_bits.first(overlap));
    errors += static_cast<long>(tx_bits.size() > rx_bits.size() ? tx_bits.size() - rx_bits.size()
                                                                : rx_bits.size() - tx_bits.size());
    return std::min(errors, static_cast<long>(tx_bits.size()));
}

namespace {

// One-tap ZF response of a genie tap draw on the active bins only.
std::vector<cd> bin_response(std::span<const cd> taps, const NumerologyConfig& cfg,
                             const SubbandAllocation& alloc) {
    std::vector<cd> h_bins(static_cast<std::size_t>(alloc.m_active));
    for (int i = 0; i < alloc.m_active; ++i) {
        const int fft_index = (alloc.first_active + i + cfg.n_fft / 2) % cfg.n_fft;
        cd h(0.0, 0.0);
        for (std::size_t l = 0; l < taps.size(); ++l) {
            const double phase =
                -2.0 * std::numbers::pi * fft_index * static_cast<double>(l) / cfg.n_fft;
            h += taps[l] * cd(std::cos(phase), std::sin(phase));
        }
        h_bins[static_cast<std::size_t>(i)] = h;
    }
    return h_bins;
}

} // namespace

DemodReport demodulate_subband(std::span<const cd> record, const NumerologyConfig& cfg,
                               const SubbandAllocation& alloc,
                               const std::vector<std::vector<cd>>& taps_per_frame,
                               long frame_len, DemodMode mode,
                               std::span<const std::uint8_t> tx_bits) {
    if (alloc.first_active < 0 || alloc.first_active + alloc.m_active > cfg.n_fft)
        throw AllocationError("allocation exceeds transform size");
    const long period = cfg.n_fft + cfg.n_cp;
    const long n_symbols = static_cast<long>(record.size()) / period;
    if (!taps_per_frame.empty() && frame_len <= 0)
        throw ParameterError("block fading needs a positive frame length");

    DemodReport report;
    report.user_index = alloc.user_index;
    report.mode = mode;

    std::vector<cd> equalizer;
    long eq_frame = -1;
    for (long s = 0; s < n_symbols; ++s) {
        const long body_start = s * period + cfg.n_cp;
        if (!taps_per_frame.empty()) {
            const long f = std::min(body_start / frame_len,
                                    static_cast<long>(taps_per_frame.size()) - 1);
            if (f != eq_frame) {
                equalizer = bin_response(taps_per_frame[static_cast<std::size_t>(f)], cfg, alloc);
                eq_frame = f;
            }
        }
        const auto body = record.subspan(static_cast<std::size_t>(body_start),
                                         static_cast<std::size_t>(cfg.n_fft));
        const auto bins = fft_to_spectral_order(dft(body));
        for (int i = 0; i < alloc.m_active; ++i) {
            cd z = bins[static_cast<std::size_t>(alloc.first_active + i)];
            if (!equalizer.empty()) {
                const cd h = equalizer[static_cast<std::size_t>(i)];
                if (h != cd(0.0, 0.0)) z /= h;
            }
            report.bits_out.push_back(z.real() < 0.0 ? 1 : 0);
        }
    }
    report.total_bits = static_cast<long>(tx_bits.size());
    report.bit_errors = count_bit_errors_padded(tx_bits, report.bits_out);
    return report;
}

DemodReport demodulate_subband(std::span<const cd> record, const NumerologyConfig& cfg,
                               const SubbandAllocation& alloc, std::span<const cd> taps,
                               DemodMode mode, std::span<const std::uint8_t> tx_bits) {
    std::vector<std::vector<cd>> taps_per_frame;
    if (!taps.empty()) taps_per_frame.emplace_back(taps.begin(), taps.end());
    return demodulate_subband(record, cfg, alloc, taps_per_frame,
                              static_cast<long>(record.size()), mode, tx_bits);
}

} // namespace mixnum
