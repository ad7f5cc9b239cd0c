#include "mixnum/waveform.hpp"

#include "mixnum/errors.hpp"
#include "mixnum/rng.hpp"

#include <string>

namespace mixnum {

std::vector<cd> map_bpsk(std::span<const std::uint8_t> bits) {
    std::vector<cd> out(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i)
        out[i] = bits[i] ? cd(-1.0, 0.0) : cd(1.0, 0.0);
    return out;
}

std::vector<cd> build_freq_vector(std::span<const cd> symbols,
                                  const SubbandAllocation& alloc,
                                  const NumerologyConfig& cfg) {
    if (static_cast<int>(symbols.size()) != cfg.m_active)
        throw PayloadError("expected " + std::to_string(cfg.m_active) + " symbols, got " +
                           std::to_string(symbols.size()));
    if (alloc.first_active < 0 || alloc.first_active + alloc.m_active > cfg.n_fft)
        throw AllocationError("allocation exceeds transform size");
    std::vector<cd> bins(static_cast<std::size_t>(cfg.n_fft), cd(0.0, 0.0));
    for (int i = 0; i < cfg.m_active; ++i)
        bins[static_cast<std::size_t>(alloc.first_active + i)] = symbols[static_cast<std::size_t>(i)];
    return bins;
}

std::vector<cd> add_cp(std::span<const cd> symbol, int n_cp) {
    if (n_cp < 0 || static_cast<std::size_t>(n_cp) > symbol.size())
        throw ParameterError("CP length " + std::to_string(n_cp) +
                             " outside 0.." + std::to_string(symbol.size()));
    std::vector<cd> out;
    out.reserve(symbol.size() + static_cast<std::size_t>(n_cp));
    out.insert(out.end(), symbol.end() - n_cp, symbol.end());
    out.insert(out.end(), symbol.begin(), symbol.end());
    return out;
}

UserFrame assemble_user_frame(std::span<const std::uint8_t> bits,
                              const NumerologyConfig& cfg,
                              const SubbandAllocation& alloc,
                              int n_frames) {
    if (n_frames < 1) throw ParameterError("frame count must be >= 1");
    const long n_symbols = static_cast<long>(cfg.symbols_per_frame) * n_frames;
    const long expected = n_symbols * cfg.m_active;
    if (static_cast<long>(bits.size()) != expected)
        throw PayloadError("expected " + std::to_string(expected) + " bits, got " +
                           std::to_string(bits.size()));

    UserFrame frame;
    frame.user_index = alloc.user_index;
    frame.payload_bits.assign(bits.begin(), bits.end());
    frame.samples.reserve(static_cast<std::size_t>(n_symbols) *
                          static_cast<std::size_t>(cfg.n_fft + cfg.n_cp));
    for (long s = 0; s < n_symbols; ++s) {
        const auto chunk = bits.subspan(static_cast<std::size_t>(s) * cfg.m_active,
                                        static_cast<std::size_t>(cfg.m_active));
        const auto bins = build_freq_vector(map_bpsk(chunk), alloc, cfg);
        const auto body = idft(spectral_to_fft_order(bins));
        const auto sym = add_cp(body, cfg.n_cp);
        frame.samples.insert(frame.samples.end(), sym.begin(), sym.end());
    }
    return frame;
}

std::vector<UserFrame> build_scenario_frames(const ScenarioPlan& plan, int n_frames, Rng& rng) {
    std::vector<UserFrame> frames;
    frames.reserve(plan.users.size());
    for (const auto& user : plan.users) {
        const long n_bits = static_cast<long>(user.cfg.symbols_per_frame) * n_frames *
                            user.cfg.m_active;
        std::vector<std::uint8_t> bits(static_cast<std::size_t>(n_bits));
        for (auto& b : bits) b = rng.bit();
        frames.push_back(assemble_user_frame(bits, user.cfg, user.alloc, n_frames));
    }
    return frames;
}

} // namespace mixnum
