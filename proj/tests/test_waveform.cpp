#include "mixnum/errors.hpp"
#include "mixnum/rng.hpp"
#include "mixnum/waveform.hpp"

#include "doctest.h"

#include <cmath>

using namespace mixnum;

namespace {

const BaseParams kBase;

std::vector<std::uint8_t> random_bits(long n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
    for (auto& b : bits) b = rng.bit();
    return bits;
}

} // namespace

TEST_CASE("bpsk maps 0 to +1 and 1 to -1") {
    const auto sym = map_bpsk(std::vector<std::uint8_t>{0, 1, 1, 0});
    CHECK(sym[0] == cd(1.0, 0.0));
    CHECK(sym[1] == cd(-1.0, 0.0));
    CHECK(sym[2] == cd(-1.0, 0.0));
    CHECK(sym[3] == cd(1.0, 0.0));
}

TEST_CASE("frequency vector places symbols at the allocation") {
    const auto cfg = derive_numerology(2, kBase);
    const auto alloc = subband_allocation(1, 2, 2, cfg, kBase);
    std::vector<cd> symbols(static_cast<std::size_t>(cfg.m_active), cd(-1.0, 0.0));
    const auto bins = build_freq_vector(symbols, alloc, cfg);
    REQUIRE(static_cast<int>(bins.size()) == cfg.n_fft);
    for (int i = 0; i < cfg.n_fft; ++i) {
        const bool active = i >= alloc.first_active && i < alloc.first_active + alloc.m_active;
        CHECK(bins[static_cast<std::size_t>(i)] == (active ? cd(-1.0, 0.0) : cd(0.0, 0.0)));
    }

    symbols.pop_back();
    CHECK_THROWS_AS((void)build_freq_vector(symbols, alloc, cfg), PayloadError);
}

TEST_CASE("cyclic prefix is a copy of the symbol tail") {
    std::vector<cd> body(16);
    for (int i = 0; i < 16; ++i) body[static_cast<std::size_t>(i)] = cd(i, -i);
    const auto sym = add_cp(body, 4);
    REQUIRE(sym.size() == 20);
    for (int i = 0; i < 4; ++i) CHECK(sym[static_cast<std::size_t>(i)] == body[static_cast<std::size_t>(12 + i)]);
    for (int i = 0; i < 16; ++i) CHECK(sym[static_cast<std::size_t>(4 + i)] == body[static_cast<std::size_t>(i)]);

    CHECK_THROWS_AS((void)add_cp(body, 17), ParameterError);
    CHECK_THROWS_AS((void)add_cp(body, -1), ParameterError);
}

TEST_CASE("assembled frames have the right length and energy") {
    const auto cfg = derive_numerology(1, kBase);
    const auto alloc = subband_allocation(2, 2, 2, cfg, kBase);
    const auto bits = random_bits(2L * cfg.symbols_per_frame * cfg.m_active, 17);
    const auto frame = assemble_user_frame(bits, cfg, alloc, 2);

    CHECK(frame.samples.size() == 2u * 4352u);
    CHECK(frame.payload_bits.size() == bits.size());

    // unitary synthesis: each symbol body carries exactly m_active units of
    // energy; the CP window adds n_cp/n_fft of that on average (its exact
    // share depends on the payload)
    const int period = cfg.n_fft + cfg.n_cp;
    double energy = 0.0;
    for (const auto& s : frame.samples) energy += std::norm(s);
    for (int s = 0; s < 2 * cfg.symbols_per_frame; ++s) {
        double body = 0.0;
        for (int i = 0; i < cfg.n_fft; ++i)
            body += std::norm(
                frame.samples[static_cast<std::size_t>(s * period + cfg.n_cp + i)]);
        CHECK(body == doctest::Approx(static_cast<double>(cfg.m_active)).epsilon(1e-9));
    }
    const double expected =
        2.0 * cfg.symbols_per_frame * cfg.m_active * (1.0 + 1.0 / 16.0);
    CHECK(energy == doctest::Approx(expected).epsilon(0.05));

    CHECK_THROWS_AS((void)assemble_user_frame(bits, cfg, alloc, 3), PayloadError);
    CHECK_THROWS_AS((void)assemble_user_frame(bits, cfg, alloc, 0), ParameterError);
}

TEST_CASE("every cyclic prefix in an assembled frame is a verbatim copy") {
    const auto cfg = derive_numerology(1, kBase);
    const auto alloc = subband_allocation(1, 1, 2, cfg, kBase);
    const auto bits = random_bits(cfg.symbols_per_frame * cfg.m_active, 23);
    const auto frame = assemble_user_frame(bits, cfg, alloc, 1);

    const int period = cfg.n_fft + cfg.n_cp;
    for (int s = 0; s < cfg.symbols_per_frame; ++s) {
        const long start = static_cast<long>(s) * period;
        for (int i = 0; i < cfg.n_cp; ++i)
            REQUIRE(frame.samples[static_cast<std::size_t>(start + i)] ==
                    frame.samples[static_cast<std::size_t>(start + cfg.n_fft + i)]);
    }
}

TEST_CASE("scenario frames line up and consume one payload per user") {
    const auto plan = validate_scenario(reference_scenario(1), kBase);
    Rng rng(31);
    const auto frames = build_scenario_frames(plan, 3, rng);
    REQUIRE(frames.size() == 2);
    CHECK(frames[0].samples.size() == frames[1].samples.size());
    CHECK(frames[0].payload_bits.size() == 3u * 1024u);
    CHECK(frames[1].payload_bits.size() == 3u * 2u * 512u);

    // same seed, same payloads
    Rng rng2(31);
    const auto again = build_scenario_frames(plan, 3, rng2);
    CHECK(again[0].payload_bits == frames[0].payload_bits);
    CHECK(again[1].samples == frames[1].samples);
}
