#include "mixnum/metrics.hpp"

#include "mixnum/errors.hpp"

#include <cmath>
#include <string>

namespace mixnum {

double q_function(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

double ber_awgn_bpsk(double snr_linear) {
    if (snr_linear < 0.0)
        throw DomainError("SNR must be non-negative, got " + std::to_string(snr_linear));
    return 0.5 * q_function(std::sqrt(2.0 * snr_linear));
}

double ber_rayleigh_bpsk(double snr_linear) {
    if (snr_linear < 0.0)
        throw DomainError("SNR must be non-negative, got " + std::to_string(snr_linear));
    if (std::isinf(snr_linear)) return 0.0;
    return 0.5 * (1.0 - std::sqrt(snr_linear / (snr_linear + 1.0)));
}

double db_to_linear(double snr_db) { return std::pow(10.0, snr_db / 10.0); }

SweepRow aggregate(const std::vector<TrialOutcome>& outcomes) {
    if (outcomes.empty()) throw ParameterError("no outcomes to aggregate");

    SweepRow row;
    row.snr_db = outcomes.front().snr_db;
    row.trials = static_cast<long>(outcomes.size());

    long type_ok = 0;
    long joint_ok = 0;
    long errs_blind = 0;
    long errs_nonblind = 0;
    long bits = 0;
    for (const auto& o : outcomes) {
        if (o.snr_db != row.snr_db)
            throw ParameterError("outcomes mix SNR points");
        type_ok += o.type_correct ? 1 : 0;
        joint_ok += o.location_correct ? 1 : 0;
        errs_blind += o.bit_errors_blind;
        errs_nonblind += o.bit_errors_nonblind;
        bits += o.total_bits;
    }
    row.type_rate = static_cast<double>(type_ok) / static_cast<double>(row.trials);
    row.joint_rate = static_cast<double>(joint_ok) / static_cast<double>(row.trials);
    row.loc_rate = type_ok > 0 ? static_cast<double>(joint_ok) / static_cast<double>(type_ok) : 0.0;
    row.ber_blind = bits > 0 ? static_cast<double>(errs_blind) / static_cast<double>(bits) : 0.0;
    row.ber_nonblind =
        bits > 0 ? static_cast<double>(errs_nonblind) / static_cast<double>(bits) : 0.0;

    const double snr_linear = db_to_linear(row.snr_db);
    row.ber_awgn_theory = ber_awgn_bpsk(snr_linear);
    row.ber_rayleigh_theory = ber_rayleigh_bpsk(snr_linear);
    return row;
}

} // namespace mixnum
