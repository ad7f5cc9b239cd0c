#include "mixnum/channel.hpp"
#include "mixnum/errors.hpp"
#include "mixnum/rng.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <cmath>

using namespace mixnum;

namespace {

std::vector<cd> random_signal(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<cd> x(n);
    for (auto& v : x) v = cd(rng.gaussian(), rng.gaussian());
    return x;
}

} // namespace

TEST_CASE("reference profile is normalized and validated") {
    const auto pdp = reference_pdp();
    REQUIRE(pdp.tap_powers.size() == 9);
    CHECK(pdp.tap_powers[0] == 0.8407);
    CHECK_NOTHROW(validate_pdp(pdp));

    CHECK_THROWS_AS(validate_pdp({{0.5, -0.1}}), ParameterError);
    CHECK_THROWS_AS(validate_pdp({{0.5, 0.4}}), ParameterError); // sums to 0.9
    CHECK_THROWS_AS(validate_pdp({{}}), ParameterError);
}

TEST_CASE("rayleigh draws respect the profile on average") {
    const auto pdp = reference_pdp();
    Rng rng(1234);
    const int n = 100000;
    std::vector<double> mean_power(pdp.tap_powers.size(), 0.0);
    for (int i = 0; i < n; ++i) {
        const auto taps = draw_rayleigh_channel(pdp, rng);
        for (std::size_t l = 0; l < taps.size(); ++l) mean_power[l] += std::norm(taps[l]);
    }
    for (std::size_t l = 0; l < mean_power.size(); ++l) {
        mean_power[l] /= n;
        if (pdp.tap_powers[l] == 0.0) {
            CHECK(mean_power[l] == 0.0);
        } else {
            CHECK(mean_power[l] == doctest::Approx(pdp.tap_powers[l]).epsilon(0.02));
        }
    }
}

TEST_CASE("flat profile gives a unit-power rayleigh tap") {
    Rng rng(55);
    double mean = 0.0;
    for (int i = 0; i < 100000; ++i) mean += std::norm(draw_rayleigh_channel({{1.0}}, rng)[0]);
    CHECK(mean / 100000 == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("zero-power taps consume their draw so positions cannot shift the stream") {
    // same tap count, different zero pattern: the draw after the channel
    // must be identical
    Rng a(77), b(77);
    (void)draw_rayleigh_channel({{0.5, 0.0, 0.5}}, a);
    (void)draw_rayleigh_channel({{0.5, 0.5, 0.0}}, b);
    CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("convolution matches the double loop") {
    const auto x = random_signal(200, 2);
    const auto h = random_signal(9, 3);
    const auto fast = apply_channel(x, h);
    const auto slow = oracle::naive_convolve(x, h);
    REQUIRE(fast.size() == slow.size());
    for (std::size_t i = 0; i < fast.size(); ++i)
        CHECK(std::abs(fast[i] - slow[i]) <= 1e-12);
}

TEST_CASE("identity channel is a passthrough") {
    const auto x = random_signal(64, 4);
    const auto y = apply_channel(x, std::vector<cd>{cd(1.0, 0.0)});
    for (std::size_t i = 0; i < x.size(); ++i) CHECK(y[i] == x[i]);
    CHECK_THROWS_AS((void)apply_channel(x, std::vector<cd>{}), ParameterError);
}

TEST_CASE("block fading applies one draw per frame") {
    const auto x = random_signal(300, 5);
    const std::vector<std::vector<cd>> taps = {random_signal(3, 6), random_signal(3, 7),
                                               random_signal(3, 8)};
    const auto y = apply_block_fading(x, taps, 100);
    for (int f = 0; f < 3; ++f) {
        const std::span<const cd> block(x.data() + f * 100, 100);
        const auto expect = apply_channel(block, taps[static_cast<std::size_t>(f)]);
        for (int i = 0; i < 100; ++i)
            CHECK(y[static_cast<std::size_t>(f * 100 + i)] == expect[static_cast<std::size_t>(i)]);
    }

    CHECK_THROWS_AS((void)apply_block_fading(x, taps, 99), SizeError);
    CHECK_THROWS_AS((void)apply_block_fading(x, {taps[0]}, 100), SizeError);
    CHECK_THROWS_AS((void)apply_block_fading(x, taps, 0), ParameterError);
}

TEST_CASE("combining requires equal lengths") {
    const auto a = random_signal(32, 9);
    auto b = random_signal(32, 10);
    const auto sum = combine_users({a, b});
    for (std::size_t i = 0; i < sum.size(); ++i) CHECK(sum[i] == a[i] + b[i]);

    b.pop_back();
    CHECK_THROWS_AS((void)combine_users({a, b}), SizeError);
    CHECK_THROWS_AS((void)combine_users({}), ParameterError);
}

TEST_CASE("energy per bit and noise variance") {
    std::vector<cd> sig(100, cd(0.5, 0.0)); // energy 25
    CHECK(measure_energy_per_bit(sig, 50) == doctest::Approx(0.5));
    CHECK_THROWS_AS((void)measure_energy_per_bit(sig, 0), ParameterError);

    CHECK(noise_variance(2.0, 0.0) == doctest::Approx(2.0));
    CHECK(noise_variance(2.0, 10.0) == doctest::Approx(0.2));
    CHECK(noise_variance(2.0, std::numeric_limits<double>::infinity()) == 0.0);
}

TEST_CASE("awgn has the requested variance and zero variance is a no-op") {
    std::vector<cd> sig(200000, cd(0.0, 0.0));
    Rng rng(11);
    add_awgn(sig, 4.0, rng);
    double power = 0.0;
    for (const auto& s : sig) power += std::norm(s);
    CHECK(power / static_cast<double>(sig.size()) == doctest::Approx(4.0).epsilon(0.02));

    std::vector<cd> untouched(8, cd(1.0, 2.0));
    Rng r1(12), r2(12);
    add_awgn(untouched, 0.0, r1);
    for (const auto& s : untouched) CHECK(s == cd(1.0, 2.0));
    CHECK(r1.next_u64() == r2.next_u64()); // stream untouched too

    CHECK_THROWS_AS(add_awgn(untouched, -1.0, r1), ParameterError);
}
