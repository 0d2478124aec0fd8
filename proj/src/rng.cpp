// SPDX-License-Identifier: Apache-2.0

#include "micap/rng.hpp"

#include <cmath>

namespace micap {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30; z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27; z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

} // namespace

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t substream_id)
    : seed_(seed), substream_id_(substream_id) {
    state_ = mix(seed + kGolden) ^ mix(substream_id * 0xBF58476D1CE4E5B9ull + 0x94D049BB133111EBull);
}

std::uint64_t RandomStream::next_u64() {
    state_ += kGolden;
    return mix(state_);
}

double RandomStream::next_unit() {
    return double(next_u64() >> 11) * 0x1.0p-53;
}

std::complex<double> RandomStream::next_complex_gaussian() {
    // Polar rejection: (u, v) uniform in the unit disk, scaled so each
    // component has variance 1/2 (the factor 2 of the textbook method is
    // absorbed into the target variance).
    for (;;) {
        const double u = 2.0 * next_unit() - 1.0;
        const double v = 2.0 * next_unit() - 1.0;
        const double s = u * u + v * v;
        if (s >= 1.0 || s == 0.0) continue;
        const double f = std::sqrt(-std::log(s) / s);
        return {u * f, v * f};
    }
}

} // namespace micap
