// SPDX-License-Identifier: Apache-2.0

#include "micap/channel.hpp"

#include <cmath>

#include "micap/linalg.hpp"

namespace micap {

void validate_config(const ChannelConfig& config) {
    if (config.n_t == 0 || config.n_r == 0)
        throw config_error("channel config: antenna counts must be positive");
    if (config.trials == 0)
        throw config_error("channel config: trials must be positive");
    if (!std::isfinite(config.snr_db))
        throw config_error("channel config: snr_db must be finite");
}

double snr_linear(double snr_db) {
    return std::pow(10.0, snr_db / 10.0);
}

ChannelRealization sample_hw(std::size_t n_r, std::size_t n_t, RandomStream& stream) {
    ComplexMatrix h(n_r, n_t);
    for (std::size_t i = 0; i < n_r; ++i)
        for (std::size_t j = 0; j < n_t; ++j)
            h(i, j) = stream.next_complex_gaussian();
    return ChannelRealization{std::move(h)};
}

ChannelRealization apply_tx_correlation(const ChannelRealization& hw, const ComplexMatrix& r_t) {
    if (!r_t.square() || r_t.rows() != hw.h.cols())
        throw shape_error("apply_tx_correlation: R_t must be N_t x N_t");
    return ChannelRealization{mat_mul(hw.h, psd_sqrt(r_t))};
}

} // namespace micap
