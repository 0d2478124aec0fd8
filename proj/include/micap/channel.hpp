// SPDX-License-Identifier: Apache-2.0

#ifndef MICAP_CHANNEL_HPP
#define MICAP_CHANNEL_HPP

#include <cstdint>

#include "micap/matrix.hpp"
#include "micap/rng.hpp"

namespace micap {

/// Monte Carlo run parameters.
struct ChannelConfig {
    std::size_t n_t = 4;        // transmit antennas
    std::size_t n_r = 4;        // receive antennas
    double snr_db = 30.0;       // gamma_0 in dB
    std::size_t trials = 10000;
    std::uint64_t seed = 12345;
};

/// Throws config_error on nonpositive dimensions or trial counts, or a
/// nonfinite SNR.
void validate_config(const ChannelConfig& config);

/// 10^(snr_db / 10).
double snr_linear(double snr_db);

struct ChannelRealization {
    ComplexMatrix h;  // N_r x N_t
};

/// i.i.d. entries, each a circularly symmetric complex Gaussian with unit
/// total variance, drawn row-major from the stream.
ChannelRealization sample_hw(std::size_t n_r, std::size_t n_t, RandomStream& stream);

/// Transmit-side shaping H = H_w sqrt(R_t). R_t must be Hermitian PSD;
/// shaping by the identity returns the input unchanged.
ChannelRealization apply_tx_correlation(const ChannelRealization& hw, const ComplexMatrix& r_t);

} // namespace micap

#endif
