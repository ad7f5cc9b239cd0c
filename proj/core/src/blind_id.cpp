#include "mixnum/blind_id.hpp"

#include "mixnum/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace mixnum {

namespace {

int argmax_range(std::span<const double> v, int first, int last) {
    int best = first;
    for (int i = first + 1; i < last; ++i)
        if (v[static_cast<std::size_t>(i)] > v[static_cast<std::size_t>(best)]) best = i;
    return best;
}

double normalized(const cd& num, double e_lead, double e_lag) {
    if (e_lead <= 0.0 || e_lag <= 0.0) return 0.0;
    return std::abs(num) / std::sqrt(e_lead * e_lag);
}

} // namespace

CorrelationSums correlation_sums(std::span<const cd> y, int n_fft, int n_cp) {
    const long len = static_cast<long>(y.size());
    if (n_fft <= 0 || n_cp <= 0) throw ParameterError("window sizes must be positive");
    const long count = len - n_fft - n_cp;
    if (count < 1)
        throw SizeError("record of " + std::to_string(len) + " samples is too short for a " +
                        std::to_string(n_fft) + "+" + std::to_string(n_cp) + " candidate");

    CorrelationSums sums;
    sums.num.resize(static_cast<std::size_t>(count));
    sums.e_lead.resize(static_cast<std::size_t>(count));
    sums.e_lag.resize(static_cast<std::size_t>(count));

    cd num(0.0, 0.0);
    double e_lead = 0.0;
    double e_lag = 0.0;
    for (int i = 0; i < n_cp; ++i) {
        num += std::conj(y[static_cast<std::size_t>(i)]) * y[static_cast<std::size_t>(i + n_fft)];
        e_lead += std::norm(y[static_cast<std::size_t>(i)]);
        e_lag += std::norm(y[static_cast<std::size_t>(i + n_fft)]);
    }
    for (long s = 0;;) {
        sums.num[static_cast<std::size_t>(s)] = num;
        sums.e_lead[static_cast<std::size_t>(s)] = std::max(e_lead, 0.0);
        sums.e_lag[static_cast<std::size_t>(s)] = std::max(e_lag, 0.0);
        if (++s >= count) break;
        const auto drop = static_cast<std::size_t>(s - 1);
        const auto take = static_cast<std::size_t>(s - 1 + n_cp);
        num -= std::conj(y[drop]) * y[drop + static_cast<std::size_t>(n_fft)];
        num += std::conj(y[take]) * y[take + static_cast<std::size_t>(n_fft)];
        e_lead += std::norm(y[take]) - std::norm(y[drop]);
        e_lag += std::norm(y[take + static_cast<std::size_t>(n_fft)]) -
                 std::norm(y[drop + static_cast<std::size_t>(n_fft)]);
    }
    return sums;
}

CorrelationMetric cp_correlation_metric(std::span<const cd> y,
                                        const NumerologyConfig& candidate) {
    const auto sums = correlation_sums(y, candidate.n_fft, candidate.n_cp);
    CorrelationMetric metric;
    metric.candidate_k = candidate.k;
    metric.values.resize(sums.num.size());
    for (std::size_t i = 0; i < sums.num.size(); ++i)
        metric.values[i] = std::min(1.0, normalized(sums.num[i], sums.e_lead[i], sums.e_lag[i]));
    return metric;
}

FoldedMetric fold_correlation(const CorrelationSums& sums, int period) {
    if (period <= 0) throw ParameterError("period must be positive");
    FoldedMetric folded;
    const long count = static_cast<long>(sums.num.size());
    folded.folds = static_cast<int>(count / period);
    if (folded.folds < 1) return folded;

    std::vector<cd> num(static_cast<std::size_t>(period), cd(0.0, 0.0));
    std::vector<double> e_lead(static_cast<std::size_t>(period), 0.0);
    std::vector<double> e_lag(static_cast<std::size_t>(period), 0.0);
    for (int m = 0; m < folded.folds; ++m) {
        const std::size_t off = static_cast<std::size_t>(m) * static_cast<std::size_t>(period);
        for (int j = 0; j < period; ++j) {
            num[static_cast<std::size_t>(j)] += sums.num[off + static_cast<std::size_t>(j)];
            e_lead[static_cast<std::size_t>(j)] += sums.e_lead[off + static_cast<std::size_t>(j)];
            e_lag[static_cast<std::size_t>(j)] += sums.e_lag[off + static_cast<std::size_t>(j)];
        }
    }
    folded.values.resize(static_cast<std::size_t>(period));
    for (int j = 0; j < period; ++j)
        folded.values[static_cast<std::size_t>(j)] =
            std::min(1.0, normalized(num[static_cast<std::size_t>(j)],
                                     e_lead[static_cast<std::size_t>(j)],
                                     e_lag[static_cast<std::size_t>(j)]));
    return folded;
}

PeakPair find_peak_pair(const CorrelationMetric& metric, const NumerologyConfig& candidate) {
    const int period = candidate.n_fft + candidate.n_cp;
    if (static_cast<long>(metric.values.size()) < period)
        throw SizeError("metric covers less than one symbol period");
    PeakPair pair;
    pair.i_p1 = argmax_range(metric.values, 0, period / 2);
    pair.i_p2 = argmax_range(metric.values, period / 2, period);
    pair.estimated_size = std::abs(pair.i_p2 - pair.i_p1);
    return pair;
}

std::vector<TypeVerdict> estimate_type(std::span<const cd> y,
                                       const std::vector<NumerologyConfig>& candidates) {
    if (candidates.empty()) throw ParameterError("candidate set is empty");

    std::vector<TypeVerdict> verdicts;
    verdicts.reserve(candidates.size());
    for (const auto& cfg : candidates) {
        TypeVerdict v;
        v.cfg = cfg;
        const int period = cfg.n_fft + cfg.n_cp;
        if (static_cast<long>(y.size()) < static_cast<long>(period) + period) {
            verdicts.push_back(v); // too short to fold even one period
            continue;
        }
        const auto folded = fold_correlation(correlation_sums(y, cfg.n_fft, cfg.n_cp), period);
        if (folded.folds < 1) {
            verdicts.push_back(v);
            continue;
        }
        v.folds = folded.folds;

        // Rotate the folded metric so the apex (a CP start, modulo the
        // period) sits at position 0; peak picking is then offset-free.
        const int apex = argmax_range(folded.values, 0, period);
        v.timing = apex;
        v.apex_value = folded.values[static_cast<std::size_t>(apex)];
        std::vector<double> rot(static_cast<std::size_t>(period));
        for (int j = 0; j < period; ++j)
            rot[static_cast<std::size_t>(j)] =
                folded.values[static_cast<std::size_t>((apex + j) % period)];

        const int i_p1 = argmax_range(rot, 0, period / 2);
        const int i_p2 = argmax_range(rot, period / 2, period);
        v.raw_distance = std::abs(i_p2 - i_p1);

        const int d_size = std::abs(v.raw_distance - cfg.n_fft);
        const int d_period = std::abs(v.raw_distance - period);
        v.size_estimate = d_period < d_size ? v.raw_distance - cfg.n_cp : v.raw_distance;
        const int deviation = std::min(d_size, d_period);
        v.matched = deviation <= cfg.n_cp / 2;
        verdicts.push_back(v);
    }

    // A match must also be the nearest candidate to its own size estimate.
    for (auto& v : verdicts) {
        if (!v.matched) continue;
        int best = 0;
        long best_dist = std::numeric_limits<long>::max();
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            const long dist = std::abs(static_cast<long>(v.size_estimate) -
                                       static_cast<long>(candidates[c].n_fft));
            if (dist < best_dist) {
                best_dist = dist;
                best = static_cast<int>(c);
            }
        }
        v.matched = candidates[static_cast<std::size_t>(best)].n_fft == v.cfg.n_fft &&
                    candidates[static_cast<std::size_t>(best)].k == v.cfg.k;
    }
    return verdicts;
}

std::vector<double> variation_coefficients(std::span<const cd> y,
                                           const NumerologyConfig& identified,
                                           int n_subbands, int timing, long n_symbols) {
    if (n_subbands <= 0) throw ParameterError("subband count must be positive");
    const int period = identified.n_fft + identified.n_cp;
    if (timing < 0 || timing >= static_cast<long>(y.size()))
        throw ParameterError("timing offset outside the record");
    const long available = (static_cast<long>(y.size()) - timing) / period;
    const long pool = n_symbols == 0 ? available : n_symbols;
    if (pool < 1 || pool > available)
        throw SizeError("record holds " + std::to_string(available) +
                        " whole symbols after the offset, need " + std::to_string(pool));

    std::vector<int> first(static_cast<std::size_t>(n_subbands));
    for (int u = 1; u <= n_subbands; ++u)
        first[static_cast<std::size_t>(u - 1)] = centered_first_active(u, n_subbands, identified);

    const int m = identified.m_active;
    const double scale = std::sqrt(static_cast<double>(identified.n_fft));
    std::vector<double> sum(static_cast<std::size_t>(n_subbands), 0.0);
    std::vector<double> sum_sq(static_cast<std::size_t>(n_subbands), 0.0);
    for (long s = 0; s < pool; ++s) {
        const auto body = y.subspan(static_cast<std::size_t>(timing + s * period + identified.n_cp),
                                    static_cast<std::size_t>(identified.n_fft));
        const auto bins = fft_to_spectral_order(dft(body));
        for (int u = 0; u < n_subbands; ++u) {
            for (int i = 0; i < m; ++i) {
                const double a =
                    scale * std::abs(bins[static_cast<std::size_t>(first[static_cast<std::size_t>(u)] + i)]);
                sum[static_cast<std::size_t>(u)] += a;
                sum_sq[static_cast<std::size_t>(u)] += a * a;
            }
        }
    }

    const double n = static_cast<double>(pool) * m;
    std::vector<double> v_values(static_cast<std::size_t>(n_subbands));
    for (int u = 0; u < n_subbands; ++u) {
        const double mean = sum[static_cast<std::size_t>(u)] / n;
        if (mean <= 0.0) {
            v_values[static_cast<std::size_t>(u)] = std::numeric_limits<double>::infinity();
            continue;
        }
        const double variance =
            std::max(0.0, (sum_sq[static_cast<std::size_t>(u)] -
                           sum[static_cast<std::size_t>(u)] * sum[static_cast<std::size_t>(u)] / n) /
                              (n - 1.0));
        v_values[static_cast<std::size_t>(u)] = variance / mean;
    }
    return v_values;
}

int locate(std::span<const double> v_values) {
    if (v_values.empty()) throw ParameterError("no variation coefficients to rank");
    int best = 0;
    for (int u = 1; u < static_cast<int>(v_values.size()); ++u)
        if (v_values[static_cast<std::size_t>(u)] < v_values[static_cast<std::size_t>(best)])
            best = u;
    return best + 1;
}

std::vector<CandidateReport> identify_candidates(std::span<const cd> y,
                                                 const std::vector<NumerologyConfig>& candidates,
                                                 int n_subbands) {
    const auto verdicts = estimate_type(y, candidates);
    std::vector<CandidateReport> reports;
    reports.reserve(verdicts.size());
    for (const auto& v : verdicts) {
        CandidateReport report;
        report.type = v;
        const int period = v.cfg.n_fft + v.cfg.n_cp;
        const long available =
            v.folds >= 1 ? (static_cast<long>(y.size()) - v.timing) / period : 0;
        if (available >= 1) {
            report.v_values = variation_coefficients(y, v.cfg, n_subbands, v.timing, 0);
            report.subband = locate(report.v_values);
        }
        reports.push_back(std::move(report));
    }
    return reports;
}

IdentificationResult identify(std::span<const cd> y, const ScenarioPlan& plan) {
    IdentificationResult result;
    result.candidates =
        identify_candidates(y, plan.candidates, static_cast<int>(plan.users.size()));

    result.type_correct = true;
    result.location_correct = true;
    for (const auto& user : plan.users) {
        const CandidateReport* report = nullptr;
        for (const auto& r : result.candidates)
            if (r.type.cfg.k == user.spec.k) report = &r;
        if (report == nullptr || !report->type.matched) {
            result.type_correct = false;
            result.location_correct = false;
            break;
        }
        if (report->subband != user.spec.subband) result.location_correct = false;
    }
    if (!result.type_correct) result.location_correct = false;
    return result;
}

} // namespace mixnum
