#pragma once

#include <cstdint>
#include <vector>

namespace mixnum {

// Gaussian tail probability, 0.5*erfc(x/sqrt(2)).
double q_function(double x);

// BPSK bit error probability under AWGN at linear SNR. Throws DomainError
// for negative SNR.
double ber_awgn_bpsk(double snr_linear);

// BPSK bit error probability under flat Rayleigh fading at linear SNR.
double ber_rayleigh_bpsk(double snr_linear);

double db_to_linear(double snr_db);

// One Monte-Carlo trial's record.
struct TrialOutcome {
    double snr_db = 0.0;
    std::uint64_t seed = 0;
    bool type_correct = false;
    bool location_correct = false; // implies type_correct
    long bit_errors_blind = 0;
    long bit_errors_nonblind = 0;
    long total_bits = 0;
};

// One CSV row: success rates, measured BERs, and the theory curves at the
// same SNR. loc_rate conditions on type success (0 when type never
// succeeds); joint_rate is the unconditional two-stage success.
struct SweepRow {
    double snr_db = 0.0;
    long trials = 0;
    double type_rate = 0.0;
    double loc_rate = 0.0;
    double joint_rate = 0.0;
    double ber_blind = 0.0;
    double ber_nonblind = 0.0;
    double ber_awgn_theory = 0.0;
    double ber_rayleigh_theory = 0.0;
};

// Pure fold over outcomes of one SNR point; permutation-invariant, so
// worker partitioning cannot change the result.
SweepRow aggregate(const std::vector<TrialOutcome>& outcomes);

} // namespace mixnum
