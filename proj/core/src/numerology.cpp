#include "mixnum/numerology.hpp"

#include "mixnum/errors.hpp"
#include "mixnum/fft.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace mixnum {

NumerologyConfig derive_numerology(int k, const BaseParams& base) {
    if (k < 0) throw ParameterError("numerology index must be >= 0, got " + std::to_string(k));
    if (base.delta_f0_hz <= 0.0) throw ParameterError("base spacing must be positive");
    if (base.n_fft0 <= 0 || !is_pow2(static_cast<std::size_t>(base.n_fft0)))
        throw ParameterError("base transform size must be a positive power of two, got " +
                             std::to_string(base.n_fft0));
    if (base.m_active0 <= 0 || base.m_active0 > base.n_fft0)
        throw ParameterError("base active count must be in 1.." + std::to_string(base.n_fft0));
    if (base.cp_ratio.num <= 0 || base.cp_ratio.den <= 0)
        throw ParameterError("CP ratio must be positive");
    if (base.frame_symbol_budget <= 0)
        throw ParameterError("frame symbol budget must be positive");

    const long scale = 1L << k;
    if (base.n_fft0 % scale != 0 || base.m_active0 % scale != 0)
        throw ParameterError("index " + std::to_string(k) +
                             " does not divide the base sizes evenly");

    NumerologyConfig cfg;
    cfg.k = k;
    cfg.delta_f_hz = base.delta_f0_hz * static_cast<double>(scale);
    cfg.n_fft = static_cast<int>(base.n_fft0 / scale);
    cfg.m_active = static_cast<int>(base.m_active0 / scale);
    if (!is_pow2(static_cast<std::size_t>(cfg.n_fft)))
        throw ParameterError("scaled transform size is not a power of two");

    const long cp_num = static_cast<long>(cfg.n_fft) * base.cp_ratio.num;
    if (cp_num % base.cp_ratio.den != 0)
        throw ParameterError("CP ratio " + std::to_string(base.cp_ratio.num) + "/" +
                             std::to_string(base.cp_ratio.den) +
                             " gives a fractional CP at transform size " +
                             std::to_string(cfg.n_fft));
    cfg.n_cp = static_cast<int>(cp_num / base.cp_ratio.den);
    if (cfg.n_cp <= 0) throw ParameterError("CP length must be positive");

    cfg.t_data_s = 1.0 / cfg.delta_f_hz;
    cfg.t_cp_s = cfg.t_data_s * static_cast<double>(base.cp_ratio.num) /
                 static_cast<double>(base.cp_ratio.den);
    cfg.t_ofdm_s = cfg.t_data_s + cfg.t_cp_s;
    cfg.symbols_per_frame = base.frame_symbol_budget * static_cast<int>(scale);
    return cfg;
}

int centered_first_active(int subband, int n_subbands, const NumerologyConfig& cfg) {
    if (n_subbands <= 0) throw AllocationError("subband count must be positive");
    if (subband < 1 || subband > n_subbands)
        throw AllocationError("subband position " + std::to_string(subband) +
                              " outside 1.." + std::to_string(n_subbands));
    if (cfg.n_fft % n_subbands != 0)
        throw AllocationError("transform size " + std::to_string(cfg.n_fft) +
                              " not divisible into " + std::to_string(n_subbands) + " subbands");
    const int band_bins = cfg.n_fft / n_subbands;
    if (cfg.m_active > band_bins)
        throw AllocationError("active block of " + std::to_string(cfg.m_active) +
                              " bins exceeds subband width of " + std::to_string(band_bins));
    if ((band_bins - cfg.m_active) % 2 != 0)
        throw AllocationError("guard of " + std::to_string(band_bins - cfg.m_active) +
                              " bins cannot be split evenly");
    return (subband - 1) * band_bins + (band_bins - cfg.m_active) / 2;
}

SubbandAllocation subband_allocation(int user_index, int subband, int n_users,
                                     const NumerologyConfig& cfg,
                                     const BaseParams& base) {
    SubbandAllocation alloc;
    alloc.user_index = user_index;
    alloc.subband = subband;
    alloc.m_active = cfg.m_active;
    alloc.first_active = centered_first_active(subband, n_users, cfg);

    const double total_bw = base.delta_f0_hz * static_cast<double>(base.n_fft0);
    alloc.band_width_hz = total_bw / static_cast<double>(n_users);
    alloc.band_start_hz = -total_bw / 2.0 + (subband - 1) * alloc.band_width_hz;
    return alloc;
}

ScenarioPlan validate_scenario(const std::vector<UserSpec>& users, const BaseParams& base) {
    if (users.empty()) throw ScenarioError("scenario needs at least one user");

    ScenarioPlan plan;
    plan.base = base;
    const int n_users = static_cast<int>(users.size());

    std::set<int> seen_k;
    std::set<int> seen_band;
    for (const auto& u : users) {
        if (!seen_k.insert(u.k).second)
            throw ScenarioError("numerology index " + std::to_string(u.k) + " used twice");
        if (!seen_band.insert(u.subband).second)
            throw ScenarioError("subband " + std::to_string(u.subband) + " used twice");
        if (u.subband < 1 || u.subband > n_users)
            throw ScenarioError("subband " + std::to_string(u.subband) + " outside 1.." +
                                std::to_string(n_users));
    }

    const NumerologyConfig base_cfg = derive_numerology(0, base);
    plan.frame_len =
        static_cast<long>(base.frame_symbol_budget) * (base_cfg.n_fft + base_cfg.n_cp);

    plan.bits_per_frame = 0;
    for (const auto& u : users) {
        UserPlan up;
        up.spec = u;
        up.cfg = derive_numerology(u.k, base);
        up.alloc = subband_allocation(static_cast<int>(plan.users.size()) + 1, u.subband,
                                      n_users, up.cfg, base);
        const long fill = static_cast<long>(up.cfg.symbols_per_frame) *
                          (up.cfg.n_fft + up.cfg.n_cp);
        if (fill != plan.frame_len)
            throw ScenarioError("numerology " + std::to_string(u.k) + " fills " +
                                std::to_string(fill) + " samples per frame, expected " +
                                std::to_string(plan.frame_len));
        plan.bits_per_frame +=
            static_cast<long>(up.cfg.symbols_per_frame) * up.cfg.m_active;
        plan.users.push_back(std::move(up));
    }

    std::vector<const UserPlan*> by_band;
    by_band.reserve(plan.users.size());
    for (const auto& up : plan.users) by_band.push_back(&up);
    std::sort(by_band.begin(), by_band.end(),
              [](const UserPlan* a, const UserPlan* b) {
                  return a->spec.subband < b->spec.subband;
              });
    for (const auto* up : by_band) plan.candidates.push_back(up->cfg);
    return plan;
}

std::vector<UserSpec> reference_scenario(int which) {
    switch (which) {
    case 1: return {{0, 1}, {1, 2}};
    case 2: return {{0, 1}, {2, 2}};
    default:
        throw ScenarioError("reference scenario must be 1 or 2, got " + std::to_string(which));
    }
}

} // namespace mixnum
