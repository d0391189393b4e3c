#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

namespace subwave {

inline constexpr double pi = std::numbers::pi;

// CODATA / exact SI values.
inline constexpr double planck_h = 6.62607015e-34;     // J s
inline constexpr double light_speed = 299792458.0;     // m/s

/// Gauss-Legendre nodes and weights on [-1, 1], Newton iteration on P_n.
struct Quadrature {
    std::vector<double> nodes;
    std::vector<double> weights;
};

inline Quadrature gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    Quadrature q;
    q.nodes.resize(n);
    q.weights.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            dp = n * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        q.nodes[i] = -x;
        q.nodes[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        q.weights[i] = w;
        q.weights[n - 1 - i] = w;
    }
    return q;
}

/// Same quadrature mapped to [a, b].
inline Quadrature gauss_legendre(int n, double a, double b) {
    Quadrature q = gauss_legendre(n);
    const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
    for (int i = 0; i < n; ++i) {
        q.nodes[i] = mid + half * q.nodes[i];
        q.weights[i] *= half;
    }
    return q;
}

// Bessel J0/J1: rational fits below |x|=8, asymptotic expansion above
// (Hart-style coefficients). Absolute error ~1e-8, an order below every
// tolerance that depends on field values. std::cyl_bessel_j matches them
// but costs ~0.6 us per call, too slow for the 2-D focal maps.
inline double bessel_j0(double x) {
    const double ax = std::abs(x);
    if (ax < 8.0) {
        const double y = x * x;
        const double num = 57568490574.0 + y * (-13362590354.0 + y * (651619640.7 +
                           y * (-11214424.18 + y * (77392.33017 + y * (-184.9052456)))));
        const double den = 57568490411.0 + y * (1029532985.0 + y * (9494680.718 +
                           y * (59272.64853 + y * (267.8532712 + y))));
        return num / den;
    }
    const double z = 8.0 / ax, y = z * z;
    const double p = 1.0 + y * (-0.1098628627e-2 + y * (0.2734510407e-4 +
                     y * (-0.2073370639e-5 + y * 0.2093887211e-6)));
    const double q = -0.1562499995e-1 + y * (0.1430488765e-3 + y * (-0.6911147651e-5 +
                     y * (0.7621095161e-6 + y * (-0.934935152e-7))));
    const double xx = ax - 0.25 * pi;
    return std::sqrt(2.0 / (pi * ax)) * (std::cos(xx) * p - z * std::sin(xx) * q);
}

inline double bessel_j1(double x) {
    const double ax = std::abs(x);
    if (ax < 8.0) {
        const double y = x * x;
        const double num = x * (72362614232.0 + y * (-7895059235.0 + y * (242396853.1 +
                           y * (-2972611.439 + y * (15704.48260 + y * (-30.16036606))))));
        const double den = 144725228442.0 + y * (2300535178.0 + y * (18583304.74 +
                           y * (99447.43394 + y * (376.9991397 + y))));
        return num / den;
    }
    const double z = 8.0 / ax, y = z * z;
    const double p = 1.0 + y * (0.183105e-2 + y * (-0.3516396496e-4 +
                     y * (0.2457520174e-5 + y * (-0.240337019e-6))));
    const double q = 0.04687499995 + y * (-0.2002690873e-3 + y * (0.8449199096e-5 +
                     y * (-0.88228987e-6 + y * 0.105787412e-6)));
    const double xx = ax - 0.75 * pi;
    const double j = std::sqrt(2.0 / (pi * ax)) * (std::cos(xx) * p - z * std::sin(xx) * q);
    return x < 0.0 ? -j : j;
}

inline double bessel_j2(double x) {
    const double ax = std::abs(x);
    if (ax < 1e-4) {
        // leading series terms; the recurrence below would cancel badly here
        const double y = x * x;
        return y / 8.0 * (1.0 - y / 12.0);
    }
    return 2.0 * bessel_j1(x) / x - bessel_j0(x);
}

/// Counter-based hash; the basis for all reproducible random draws.
inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t hash_combine(std::uint64_t a, std::uint64_t b) {
    return splitmix64(a ^ (0x9e3779b97f4a7c15ULL + (b << 6) + (b >> 2)));
}

/// Standard normal from a counter tuple, bit-reproducible on every platform
/// (Box-Muller on two splitmix64 uniforms; no library distributions).
inline double counter_normal(std::uint64_t seed, std::uint64_t trial, std::uint64_t slot) {
    const std::uint64_t base = hash_combine(hash_combine(seed, trial), slot);
    const std::uint64_t u1 = splitmix64(base);
    const std::uint64_t u2 = splitmix64(base + 0x632be59bd9b4e019ULL);
    // map to (0,1]; 2^-53 granularity
    const double a = (static_cast<double>(u1 >> 11) + 1.0) * 0x1.0p-53;
    const double b = static_cast<double>(u2 >> 11) * 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(a)) * std::cos(2.0 * pi * b);
}

inline double relative_diff(double a, double b) {
    const double den = std::max(std::abs(a), std::abs(b));
    return den == 0.0 ? 0.0 : std::abs(a - b) / den;
}

}  // namespace subwave
