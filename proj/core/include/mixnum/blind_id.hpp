#pragma once

#include "mixnum/fft.hpp"
#include "mixnum/numerology.hpp"

#include <span>
#include <vector>

namespace mixnum {

// Sliding CP-correlation sums at every start position n_s:
//   num[n_s]    = sum_{i<n_cp} conj(y[n_s+i]) * y[n_s+n_fft+i]
//   e_lead[n_s] = sum |y[n_s+i]|^2,  e_lag[n_s] = sum |y[n_s+n_fft+i]|^2
// Computed incrementally, one update per shift.
struct CorrelationSums {
    std::vector<cd> num;
    std::vector<double> e_lead;
    std::vector<double> e_lag;
};

CorrelationSums correlation_sums(std::span<const cd> y, int n_fft, int n_cp);

// Normalized correlation magnitude per start position, each value in [0,1].
struct CorrelationMetric {
    int candidate_k = 0;
    std::vector<double> values;
};

CorrelationMetric cp_correlation_metric(std::span<const cd> y,
                                        const NumerologyConfig& candidate);

// Correlation sums folded coherently over the candidate's symbol period
// (position mod n_fft+n_cp), then normalized. Folding averages every CP
// event in the record into one period, which is what keeps the peak above
// the noise floor at low SNR.
struct FoldedMetric {
    std::vector<double> values; // length n_fft+n_cp, or empty when the
                                // record is shorter than one period
    int folds = 0;
};

FoldedMetric fold_correlation(const CorrelationSums& sums, int period);

// The two highest peaks of one symbol period: argmax over the first and the
// second half-window. Ties break toward the smaller index.
struct PeakPair {
    int i_p1 = 0;
    int i_p2 = 0;
    int estimated_size = 0; // |i_p2 - i_p1|
};

PeakPair find_peak_pair(const CorrelationMetric& metric,
                        const NumerologyConfig& candidate);

// One candidate's verdict. The peak pair is taken from the folded metric
// rotated so its apex sits at position 0; the peak separation is accepted
// either as the transform size directly or as one whole symbol period
// (then the CP length is subtracted), whichever target is closer, within
// tolerance n_cp/2. A candidate matches only when it is also the nearest
// candidate to the final size estimate.
struct TypeVerdict {
    NumerologyConfig cfg;
    bool matched = false;
    int raw_distance = 0;    // peak separation as found
    int size_estimate = 0;   // transform-size estimate after CP adjustment
    int timing = 0;          // apex position: CP start modulo the period
    double apex_value = 0.0; // folded metric at the apex
    int folds = 0;
};

std::vector<TypeVerdict> estimate_type(std::span<const cd> y,
                                       const std::vector<NumerologyConfig>& candidates);

// Per-subband variation coefficients (amplitude sample variance over sample
// mean, 1/(n-1) divisor) of the analysis spectrum at the identified
// numerology's size. Bodies start at `timing` (CP stripped per symbol);
// n_symbols = 0 pools every whole symbol the record holds, which averages
// the statistic without changing its expected value. Amplitudes carry the
// plain (non-unitary) transform scale. All-zero bands get +inf.
std::vector<double> variation_coefficients(std::span<const cd> y,
                                           const NumerologyConfig& identified,
                                           int n_subbands, int timing = 0,
                                           long n_symbols = 1);

// argmin with 1-based result; ties break toward the smaller subband.
int locate(std::span<const double> v_values);

// Verdict + location for every candidate, no ground truth involved.
struct CandidateReport {
    TypeVerdict type;
    int subband = 0;              // 1-based location estimate
    std::vector<double> v_values; // per-subband variation coefficients
};

std::vector<CandidateReport> identify_candidates(std::span<const cd> y,
                                                 const std::vector<NumerologyConfig>& candidates,
                                                 int n_subbands);

// Full two-stage identification scored against a plan's ground truth.
struct IdentificationResult {
    std::vector<CandidateReport> candidates; // plan.candidates order
    bool type_correct = false;       // every user's numerology matched
    bool location_correct = false;   // implies type_correct
};

IdentificationResult identify(std::span<const cd> y, const ScenarioPlan& plan);

} // namespace mixnum
