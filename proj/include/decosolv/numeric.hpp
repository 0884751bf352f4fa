// numeric.hpp — Small numerical helpers shared across modules.

#pragma once

#include <cmath>
#include <cstdint>

namespace decosolv::numeric {

// coth(x) for x > 0.  Series below the switch-over keeps full precision
// where 1/tanh(x) would round 1/x + x/3 into 1/x, and the large-x branch
// avoids exp overflow.
inline double coth(double x) {
    if (x < 1e-4) return 1.0 / x + x / 3.0 - x * x * x / 45.0;
    if (x > 20.0) return 1.0;
    return 1.0 / std::tanh(x);
}

// coth(x) - 1/x evaluated without catastrophic cancellation.  Direct
// evaluation loses ~4 digits already at x ~ 1e-2.
inline constexpr double coth_minus_inverse_switch = 1e-2;

inline double coth_minus_inverse_series(double x) {
    const double x2 = x * x;
    return x / 3.0 - x * x2 / 45.0 + 2.0 * x2 * x2 * x / 945.0;
}

inline double coth_minus_inverse(double x) {
    if (x < coth_minus_inverse_switch) return coth_minus_inverse_series(x);
    return coth(x) - 1.0 / x;
}

// 1 - cos(x) via the half-angle form; stable for small x.
inline double one_minus_cos(double x) {
    const double s = std::sin(0.5 * x);
    return 2.0 * s * s;
}

// splitmix64 step; used to derive independent per-sample RNG seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace decosolv::numeric
