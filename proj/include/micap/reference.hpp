// SPDX-License-Identifier: Apache-2.0

#ifndef MICAP_REFERENCE_HPP
#define MICAP_REFERENCE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "micap/matrix.hpp"

namespace micap {

/// One row of the published bound-versus-radius table.
struct ReferenceBoundRow {
    double alpha = 0.0;
    double sigma = 0.0;
    double rho = 0.0;
};

/// Published per-alpha capacity gain over the correlated baseline.
struct ReferenceGain {
    double alpha = 0.0;
    double gain = 0.0;  // bps/Hz
};

/// Values transcribed from the publication this toolkit reproduces: the
/// worked order-4 covariance, its printed split, the bound table, and the
/// capacity claims. Loaded once from data embedded at build time.
struct PublishedReference {
    int version = 0;

    ComplexMatrix example_covariance{1, 1};
    std::string example_covariance_note;

    std::vector<cxd> split_a;
    std::vector<cxd> split_b;
    ComplexMatrix split_a_dense{1, 1};
    ComplexMatrix split_b_dense{1, 1};
    std::string split_b_dense_note;

    std::vector<ReferenceBoundRow> bound_rows;
    double zero_correlation_from_alpha = 0.0;

    double claims_snr_db = 0.0;
    std::size_t claims_n_t = 0;
    std::size_t claims_n_r = 0;
    double claims_loss_bps = 0.0;
    std::vector<ReferenceGain> claims_gains;
};

/// The embedded reference, parsed on first use.
const PublishedReference& published_reference();

} // namespace micap

#endif
