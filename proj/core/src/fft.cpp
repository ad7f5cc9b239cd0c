#include "mixnum/fft.hpp"

#include "mixnum/errors.hpp"

#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <unordered_map>

namespace mixnum {

bool is_pow2(std::size_t n) {
    return n != 0 && (n & (n - 1)) == 0;
}

namespace {

// Twiddle tables are cached per size; trig setup would otherwise dominate
// the transform cost for the sizes used here.
const std::vector<cd>& twiddles(std::size_t n) {
    static std::mutex mu;
    static std::unordered_map<std::size_t, std::unique_ptr<std::vector<cd>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) {
        auto table = std::make_unique<std::vector<cd>>(n / 2);
        for (std::size_t k = 0; k < n / 2; ++k) {
            double ang = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
            (*table)[k] = cd(std::cos(ang), std::sin(ang));
        }
        slot = std::move(table);
    }
    return *slot;
}

void fft_in_place(std::vector<cd>& a, bool inverse) {
    const std::size_t n = a.size();
    if (!is_pow2(n))
        throw ParameterError("transform size must be a nonzero power of two");
    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1)
            j ^= bit;
        j ^= bit;
        if (i < j)
            std::swap(a[i], a[j]);
    }
    const auto& tw = twiddles(n);
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t step = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                cd w = tw[k * step];
                if (inverse)
                    w = std::conj(w);
                cd u = a[i + k];
                cd v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
            }
        }
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (auto& x : a)
        x *= scale;
}

} // namespace

std::vector<cd> dft(std::span<const cd> x) {
    std::vector<cd> a(x.begin(), x.end());
    fft_in_place(a, false);
    return a;
}

std::vector<cd> idft(std::span<const cd> x) {
    std::vector<cd> a(x.begin(), x.end());
    fft_in_place(a, true);
    return a;
}

std::vector<cd> spectral_to_fft_order(std::span<const cd> bins) {
    const std::size_t n = bins.size();
    if (!is_pow2(n))
        throw ParameterError("bin vector size must be a nonzero power of two");
    std::vector<cd> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[(i + n / 2) % n] = bins[i];
    return out;
}

std::vector<cd> fft_to_spectral_order(std::span<const cd> bins) {
    const std::size_t n = bins.size();
    if (!is_pow2(n))
        throw ParameterError("bin vector size must be a nonzero power of two");
    std::vector<cd> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = bins[(i + n / 2) % n];
    return out;
}

} // namespace mixnum
