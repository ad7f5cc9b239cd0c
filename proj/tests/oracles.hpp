#pragma once

// Brute-force reference implementations the fast library code is checked
// against. Deliberately naive: direct summation, no shared state.

#include "mixnum/fft.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <vector>

namespace oracle {

using mixnum::cd;

// O(N^2) unitary transform.
inline std::vector<cd> naive_dft(std::span<const cd> x) {
    const std::size_t n = x.size();
    std::vector<cd> out(n, cd(0.0, 0.0));
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t t = 0; t < n; ++t) {
            const double phase = -2.0 * std::numbers::pi * static_cast<double>(k * t) /
                                 static_cast<double>(n);
            out[k] += x[t] * cd(std::cos(phase), std::sin(phase));
        }
        out[k] /= std::sqrt(static_cast<double>(n));
    }
    return out;
}

inline std::vector<cd> naive_idft(std::span<const cd> x) {
    const std::size_t n = x.size();
    std::vector<cd> out(n, cd(0.0, 0.0));
    for (std::size_t t = 0; t < n; ++t) {
        for (std::size_t k = 0; k < n; ++k) {
            const double phase = 2.0 * std::numbers::pi * static_cast<double>(k * t) /
                                 static_cast<double>(n);
            out[t] += x[k] * cd(std::cos(phase), std::sin(phase));
        }
        out[t] /= std::sqrt(static_cast<double>(n));
    }
    return out;
}

// Normalized CP correlation at one start position, summed term by term.
inline double direct_cp_metric(std::span<const cd> y, long n_s, int n_fft, int n_cp) {
    cd num(0.0, 0.0);
    double e_lead = 0.0;
    double e_lag = 0.0;
    for (int j = 0; j < n_cp; ++j) {
        const cd a = y[static_cast<std::size_t>(n_s + j)];
        const cd b = y[static_cast<std::size_t>(n_s + n_fft + j)];
        num += std::conj(a) * b;
        e_lead += std::norm(a);
        e_lag += std::norm(b);
    }
    if (e_lead <= 0.0 || e_lag <= 0.0) return 0.0;
    return std::abs(num) / std::sqrt(e_lead * e_lag);
}

// Double-loop linear convolution truncated to the signal length.
inline std::vector<cd> naive_convolve(std::span<const cd> x, std::span<const cd> h) {
    std::vector<cd> out(x.size(), cd(0.0, 0.0));
    for (std::size_t n = 0; n < x.size(); ++n)
        for (std::size_t l = 0; l < h.size() && l <= n; ++l) out[n] += h[l] * x[n - l];
    return out;
}

} // namespace oracle
