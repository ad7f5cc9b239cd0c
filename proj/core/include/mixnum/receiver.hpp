#pragma once

#include "mixnum/fft.hpp"
#include "mixnum/numerology.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace mixnum {

enum class DemodMode { non_blind, blind };

struct DemodReport {
    int user_index = 1;
    DemodMode mode = DemodMode::non_blind;
    std::vector<std::uint8_t> bits_out;
    long bit_errors = 0; // vs the supplied ground truth
    long total_bits = 0; // ground-truth length
};

// Splits a record into CP-stripped symbol bodies of length n_fft.
// The record length must be a whole number of symbol periods.
std::vector<std::vector<cd>> remove_cp(std::span<const cd> record,
                                       const NumerologyConfig& cfg);

// Exact Hamming distance; lengths must match.
long count_bit_errors(std::span<const std::uint8_t> tx_bits,
                      std::span<const std::uint8_t> rx_bits);

// Error count against a possibly length-mismatched decode: Hamming distance
// over the overlap plus one error per missing or excess bit, capped at the
// ground-truth length. Misidentified parameters land here.
long count_bit_errors_padded(std::span<const std::uint8_t> tx_bits,
                             std::span<const std::uint8_t> rx_bits);

// Demodulates one user's subband across the whole record: CP removal,
// transform, active-bin extraction, optional one-tap zero forcing with the
// given genie taps (empty taps = no equalization), BPSK hard decision
// (re >= 0 -> bit 0). With wrong parameters it still produces bits; the
// (possibly length-mismatched) decode is scored with the padded counter.
// Block fading hands one tap draw per frame_len-sample block; each symbol
// is equalized with the draw its body falls in. Trailing samples short of
// a whole symbol are ignored.
DemodReport demodulate_subband(std::span<const cd> record, const NumerologyConfig& cfg,
                               const SubbandAllocation& alloc,
                               const std::vector<std::vector<cd>>& taps_per_frame,
                               long frame_len, DemodMode mode,
                               std::span<const std::uint8_t> tx_bits);

// Channel constant over the whole record (or no equalization at all).
DemodReport demodulate_subband(std::span<const cd> record, const NumerologyConfig& cfg,
                               const SubbandAllocation& alloc, std::span<const cd> taps,
                               DemodMode mode, std::span<const std::uint8_t> tx_bits);

} // namespace mixnum
