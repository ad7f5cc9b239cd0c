#include "mixnum/receiver.hpp"

#include "mixnum/channel.hpp"
#include "mixnum/errors.hpp"
#include "mixnum/rng.hpp"
#include "mixnum/waveform.hpp"

#include "doctest.h"

#include <vector>

using namespace mixnum;

namespace {

struct TwoUserRecord {
    ScenarioPlan plan;
    std::vector<UserFrame> frames;
    std::vector<cd> composite;
};

TwoUserRecord clean_record(int scenario, int n_frames, std::uint64_t seed) {
    TwoUserRecord r;
    r.plan = validate_scenario(reference_scenario(scenario), BaseParams{});
    Rng rng(seed);
    r.frames = build_scenario_frames(r.plan, n_frames, rng);
    std::vector<std::vector<cd>> signals;
    for (const auto& f : r.frames) signals.push_back(f.samples);
    r.composite = combine_users(signals);
    return r;
}

} // namespace

TEST_CASE("cp removal returns the symbol bodies") {
    const BaseParams base;
    const auto cfg = derive_numerology(2, base);
    const auto alloc = subband_allocation(1, 1, 1, cfg, base);
    Rng rng(3);
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(cfg.symbols_per_frame) *
                                   cfg.m_active);
    for (auto& b : bits) b = rng.bit();
    const auto frame = assemble_user_frame(bits, cfg, alloc, 1);

    const auto bodies = remove_cp(frame.samples, cfg);
    REQUIRE(bodies.size() == static_cast<std::size_t>(cfg.symbols_per_frame));
    const long period = cfg.n_fft + cfg.n_cp;
    for (std::size_t s = 0; s < bodies.size(); ++s) {
        REQUIRE(bodies[s].size() == static_cast<std::size_t>(cfg.n_fft));
        for (int i = 0; i < cfg.n_fft; ++i)
            CHECK(bodies[s][static_cast<std::size_t>(i)] ==
                  frame.samples[static_cast<std::size_t>(static_cast<long>(s) * period +
                                                         cfg.n_cp + i)]);
    }

    CHECK_THROWS_AS((void)remove_cp(std::span<const cd>(frame.samples).first(100), cfg),
                    FramingError);
    CHECK_THROWS_AS((void)remove_cp(std::span<const cd>(), cfg), FramingError);
}

TEST_CASE("bit error counting") {
    const std::vector<std::uint8_t> tx = {0, 1, 1, 0};
    CHECK(count_bit_errors(tx, std::vector<std::uint8_t>{0, 1, 1, 0}) == 0);
    CHECK(count_bit_errors(tx, std::vector<std::uint8_t>{0, 1, 0, 0}) == 1);
    CHECK(count_bit_errors(tx, std::vector<std::uint8_t>{1, 0, 0, 1}) == 4);
    // nonzero means one
    CHECK(count_bit_errors(tx, std::vector<std::uint8_t>{0, 2, 1, 0}) == 0);
    CHECK_THROWS_AS((void)count_bit_errors(tx, std::vector<std::uint8_t>{0, 1}), SizeError);
}

TEST_CASE("padded counting charges the length mismatch and caps at the truth") {
    const std::vector<std::uint8_t> tx = {0, 1, 1, 0, 0, 1, 1, 0};
    // one overlap error plus three missing bits
    CHECK(count_bit_errors_padded(tx, std::vector<std::uint8_t>{0, 0, 1, 0, 0}) == 4);
    // all missing
    CHECK(count_bit_errors_padded(tx, std::vector<std::uint8_t>{}) == 8);
    // excess bits count, capped at the ground-truth length
    const std::vector<std::uint8_t> tx3 = {0, 1, 0};
    CHECK(count_bit_errors_padded(tx3, std::vector<std::uint8_t>{0, 1, 0, 0, 0, 0, 0, 0, 0, 0}) ==
          3);
    CHECK(count_bit_errors_padded(tx3, std::vector<std::uint8_t>{0, 1, 0, 0}) == 1);
}

TEST_CASE("a clean single-user record decodes without errors in either mode") {
    const BaseParams base;
    const auto cfg = derive_numerology(1, base);
    const auto alloc = subband_allocation(1, 1, 1, cfg, base);
    Rng rng(8);
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(3) * cfg.symbols_per_frame *
                                   cfg.m_active);
    for (auto& b : bits) b = rng.bit();
    const auto frame = assemble_user_frame(bits, cfg, alloc, 3);

    for (auto mode : {DemodMode::non_blind, DemodMode::blind}) {
        const auto report = demodulate_subband(frame.samples, cfg, alloc,
                                               std::span<const cd>(), mode, bits);
        CHECK(report.bit_errors == 0);
        CHECK(report.total_bits == static_cast<long>(bits.size()));
        CHECK(report.bits_out == bits);
        CHECK(report.mode == mode);
    }
}

TEST_CASE("both users decode cleanly from the mixed record") {
    for (int scenario : {1, 2}) {
        CAPTURE(scenario);
        const auto r = clean_record(scenario, 2, 41);
        for (std::size_t u = 0; u < r.plan.users.size(); ++u) {
            const auto& user = r.plan.users[u];
            const auto report =
                demodulate_subband(r.composite, user.cfg, user.alloc, std::span<const cd>(),
                                   DemodMode::non_blind, r.frames[u].payload_bits);
            CAPTURE(user.spec.k);
            CHECK(report.bit_errors == 0);
        }
    }
}

TEST_CASE("identical inputs give identical bits whatever the label says") {
    const auto r = clean_record(1, 2, 43);
    const auto& user = r.plan.users[0];
    const auto a = demodulate_subband(r.composite, user.cfg, user.alloc, std::span<const cd>(),
                                      DemodMode::non_blind, r.frames[0].payload_bits);
    const auto b = demodulate_subband(r.composite, user.cfg, user.alloc, std::span<const cd>(),
                                      DemodMode::blind, r.frames[0].payload_bits);
    CHECK(a.bits_out == b.bits_out);
    CHECK(a.bit_errors == b.bit_errors);
}

TEST_CASE("per-frame zero forcing undoes noiseless block fading exactly") {
    const auto r = clean_record(1, 3, 47);
    const auto pdp = reference_pdp();
    Rng rng(48);

    std::vector<std::vector<std::vector<cd>>> taps(r.plan.users.size());
    std::vector<std::vector<cd>> faded(r.plan.users.size());
    for (std::size_t u = 0; u < r.plan.users.size(); ++u) {
        for (int f = 0; f < 3; ++f) taps[u].push_back(draw_rayleigh_channel(pdp, rng));
        faded[u] = apply_block_fading(r.frames[u].samples, taps[u], r.plan.frame_len);
    }
    const auto composite = combine_users(faded);

    for (std::size_t u = 0; u < r.plan.users.size(); ++u) {
        const auto& user = r.plan.users[u];
        const auto report =
            demodulate_subband(composite, user.cfg, user.alloc, taps[u], r.plan.frame_len,
                               DemodMode::non_blind, r.frames[u].payload_bits);
        CAPTURE(user.spec.k);
        CHECK(report.bit_errors == 0);
    }
}

TEST_CASE("a stale single draw cannot equalize a faded record, per-frame draws can") {
    const auto r = clean_record(1, 4, 53);
    const auto pdp = reference_pdp();
    Rng rng(54);
    std::vector<std::vector<cd>> taps;
    for (int f = 0; f < 4; ++f) taps.push_back(draw_rayleigh_channel(pdp, rng));
    const auto faded = apply_block_fading(r.frames[0].samples, taps, r.plan.frame_len);

    const auto& user = r.plan.users[0];
    const auto good = demodulate_subband(faded, user.cfg, user.alloc, taps, r.plan.frame_len,
                                         DemodMode::non_blind, r.frames[0].payload_bits);
    CHECK(good.bit_errors == 0);

    const auto stale = demodulate_subband(faded, user.cfg, user.alloc, taps[0],
                                          DemodMode::non_blind, r.frames[0].payload_bits);
    CHECK(stale.bit_errors > 0);
}

TEST_CASE("wrong parameters still produce a scored decode") {
    const auto r = clean_record(1, 2, 59);
    const auto& truth = r.plan.users[0]; // 15 kHz user
    const auto& wrong = r.plan.users[1]; // decode it as the 30 kHz user instead
    const auto report =
        demodulate_subband(r.composite, wrong.cfg, wrong.alloc, std::span<const cd>(),
                           DemodMode::blind, r.frames[0].payload_bits);
    (void)truth;
    CHECK(report.total_bits == static_cast<long>(r.frames[0].payload_bits.size()));
    CHECK(report.bit_errors > 0);
    CHECK(report.bit_errors <= report.total_bits);
    // 30 kHz analysis of a 2-frame record: 4 symbols of 512 bins
    CHECK(report.bits_out.size() == 2048);
}

TEST_CASE("block fading demod validates its frame length") {
    const auto r = clean_record(1, 2, 61);
    const auto& user = r.plan.users[0];
    const std::vector<std::vector<cd>> taps = {{cd(1.0, 0.0)}};
    CHECK_THROWS_AS((void)demodulate_subband(r.composite, user.cfg, user.alloc, taps, 0,
                                             DemodMode::non_blind, r.frames[0].payload_bits),
                    ParameterError);
}
