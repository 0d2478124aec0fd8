// SPDX-License-Identifier: Apache-2.0

#ifndef MICAP_RNG_HPP
#define MICAP_RNG_HPP

#include <complex>
#include <cstdint>

namespace micap {

/// Deterministic splittable generator: a SplitMix64 counter whose starting
/// state is hash-derived from (seed, substream_id). Identical pairs always
/// replay the same sequence; distinct substream ids decorrelate by
/// construction, so per-trial streams are independent of trial count and of
/// evaluation order. The algorithm is pinned in the project README.
class RandomStream {
public:
    RandomStream(std::uint64_t seed, std::uint64_t substream_id);

    std::uint64_t next_u64();

    /// Uniform double in [0, 1) with 53 random bits.
    double next_unit();

    /// Circularly symmetric complex Gaussian with unit total variance:
    /// real and imaginary parts each N(0, 1/2), via the Marsaglia polar
    /// method.
    std::complex<double> next_complex_gaussian();

    std::uint64_t seed() const { return seed_; }
    std::uint64_t substream_id() const { return substream_id_; }

private:
    std::uint64_t seed_;
    std::uint64_t substream_id_;
    std::uint64_t state_;
};

} // namespace micap

#endif
