// SPDX-License-Identifier: Apache-2.0

#include "micap/reference.hpp"

#include <nlohmann/json.hpp>

#include "micap/errors.hpp"
#include "micap/reference_data.hpp"

namespace micap {

namespace {

using nlohmann::json;

cxd pair_to_complex(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw config_error("reference data: complex entries must be [re, im] pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<cxd> pairs_to_vector(const json& j) {
    std::vector<cxd> out;
    out.reserve(j.size());
    for (const json& entry : j) out.push_back(pair_to_complex(entry));
    return out;
}

ComplexMatrix pairs_to_matrix(const json& j, std::size_t n) {
    const std::vector<cxd> flat = pairs_to_vector(j);
    if (flat.size() != n * n)
        throw config_error("reference data: dense matrix entry count does not match n");
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) m(i, k) = flat[i * n + k];
    return m;
}

PublishedReference parse_reference() {
    const json root = json::parse(kReferenceDataJson);
    PublishedReference ref;
    ref.version = root.at("version").get<int>();

    const json& cov = root.at("example_covariance");
    const std::size_t n = cov.at("n").get<std::size_t>();
    ref.example_covariance = pairs_to_matrix(cov.at("dense"), n);
    ref.example_covariance_note = cov.at("note").get<std::string>();

    const json& split = root.at("example_split");
    ref.split_a = pairs_to_vector(split.at("a"));
    ref.split_b = pairs_to_vector(split.at("b"));
    ref.split_a_dense = pairs_to_matrix(split.at("a_dense"), n);
    ref.split_b_dense = pairs_to_matrix(split.at("b_dense"), n);
    ref.split_b_dense_note = split.at("b_dense_note").get<std::string>();

    const json& table = root.at("spectral_radius_bound_table");
    for (const json& row : table.at("rows")) {
        ReferenceBoundRow r;
        r.alpha = row.at("alpha").get<double>();
        r.sigma = row.at("sigma").get<double>();
        r.rho = row.at("rho").get<double>();
        ref.bound_rows.push_back(r);
    }
    ref.zero_correlation_from_alpha = table.at("zero_correlation_from_alpha").get<double>();

    const json& claims = root.at("capacity_claims");
    ref.claims_snr_db = claims.at("snr_db").get<double>();
    ref.claims_n_t = claims.at("n_t").get<std::size_t>();
    ref.claims_n_r = claims.at("n_r").get<std::size_t>();
    ref.claims_loss_bps = claims.at("loss_iid_minus_correlated_bps").get<double>();
    for (const json& row : claims.at("gains_over_correlated_bps")) {
        ReferenceGain g;
        g.alpha = row.at("alpha").get<double>();
        g.gain = row.at("gain").get<double>();
        ref.claims_gains.push_back(g);
    }
    return ref;
}

} // namespace

const PublishedReference& published_reference() {
    static const PublishedReference ref = parse_reference();
    return ref;
}

} // namespace micap
