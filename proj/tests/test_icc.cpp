// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "micap/errors.hpp"
#include "micap/icc.hpp"
#include "micap/linalg.hpp"
#include "micap/reference.hpp"
#include "micap/toeplitz.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using micap::ComplexMatrix;
using micap::cxd;
using micap::IccVariant;
using micap_test::TestRng;

namespace {

micap::SplitPair published_split() {
    return micap::split(
        micap::toeplitz_from_dense(micap::published_reference().example_covariance, false));
}

/// Hermitian Toeplitz with a dominant diagonal, so both splitting factors
/// have spectra in the right half plane.
micap::ToeplitzCovariance dominant_hermitian_toeplitz(TestRng& rng, std::size_t n) {
    std::vector<cxd> column(n);
    std::vector<cxd> tail(n - 1);
    double tail_mass = 0.0;
    for (std::size_t j = 1; j < n; ++j) {
        column[j] = 0.5 * rng.complex_in_disk();
        tail[j - 1] = std::conj(column[j]);
        tail_mass += std::abs(column[j]);
    }
    column[0] = cxd{2.0 * tail_mass + 0.5, 0.0};
    return micap::ToeplitzCovariance(std::move(column), std::move(tail), true);
}

} // namespace

TEST_CASE("closed-form spectra match the QR oracle on random instances") {
    TestRng rng(301);
    for (int rep = 0; rep < 20; ++rep) {
        const std::size_t n = 2 + rng.index(11);
        const micap::SplitPair pair =
            micap::split(micap_test::random_toeplitz(rng, n, false));
        CHECK(micap_test::multiset_distance(
                  micap::circulant_spectrum(pair.a),
                  micap_test::qr_eigenvalues(micap::dense_of_circulant(pair.a))) <= 1e-8);
        CHECK(micap_test::multiset_distance(
                  micap::skew_circulant_spectrum(pair.b),
                  micap_test::qr_eigenvalues(micap::dense_of_skew_circulant(pair.b))) <= 1e-8);
    }
}

TEST_CASE("published split spectra") {
    const micap::SpectrumPair spectra = micap::split_spectra(published_split());

    const std::vector<cxd> lambda_expected = {
        cxd{0.0278, 0.0581}, cxd{0.7735, 0.0}, cxd{1.3122, -0.0581}, cxd{-0.1135, 0.0}};
    CHECK(micap_test::multiset_distance(spectra.lambda, lambda_expected) <= 1e-12);

    const std::vector<cxd> mu_expected = {
        cxd{0.7578759556, -0.0410829040}, cxd{0.8693277593, 0.0410829040},
        cxd{0.2353240444, 0.0410829040}, cxd{0.1374722407, -0.0410829040}};
    CHECK(micap_test::multiset_distance(spectra.mu, mu_expected) <= 1e-9);

    // Trace consistency: the spectra sum to the traces of the two factors.
    cxd total{};
    for (const cxd& v : spectra.lambda) total += v;
    for (const cxd& v : spectra.mu) total += v;
    CHECK(std::abs(total - cxd{4.0, 0.0}) <= 1e-12);
}

TEST_CASE("sigma bound golden value and monotone trend") {
    const micap::SpectrumPair spectra = micap::split_spectra(published_split());
    CHECK(micap::sigma_bound(spectra, 5.0) == doctest::Approx(0.990454608732).epsilon(1e-10));

    double prev = 0.0;
    for (double alpha : micap::kDefaultAlphaGrid) {
        const double sigma = micap::sigma_bound(spectra, alpha);
        CHECK(sigma > prev);
        CHECK(sigma < 1.0);
        prev = sigma;
    }
}

TEST_CASE("sigma bound reports poles") {
    const micap::SpectrumPair spectra{{cxd{-1.0, 0.0}}, {cxd{0.5, 0.0}}};
    CHECK_THROWS_AS(micap::sigma_bound(spectra, 1.0), micap::pole_error);
}

TEST_CASE("identity split gives a zero bound and radius at alpha one half") {
    const micap::ToeplitzCovariance id =
        micap::toeplitz_from_dense(ComplexMatrix::identity(4), true);
    const micap::SplitPair pair = micap::split(id);
    const micap::SpectrumPair spectra = micap::split_spectra(pair);
    CHECK(micap::sigma_bound(spectra, 0.5) == 0.0);
    for (IccVariant variant : {IccVariant::AsPrinted, IccVariant::CscsCorrected}) {
        const micap::SpectralRadius rho =
            micap::spectral_radius(micap::iteration_matrix(pair, 0.5, variant));
        CHECK(rho.value == 0.0);
    }
}

TEST_CASE("as-printed closed form equals the measured radius") {
    const micap::SplitPair pair = published_split();
    const micap::SpectrumPair spectra = micap::split_spectra(pair);
    for (double alpha : {5.0, 100.0, 1000.0, 60000.0}) {
        const double closed = micap::rho_closed_form_as_printed(spectra, alpha);
        const micap::SpectralRadius measured =
            micap::spectral_radius(micap::iteration_matrix(pair, alpha, IccVariant::AsPrinted));
        CHECK(std::abs(measured.value - closed) <= 1e-5);
    }
}

TEST_CASE("cscs variant stays below the bound for positive spectra") {
    TestRng rng(302);
    for (int rep = 0; rep < 10; ++rep) {
        const std::size_t n = 2 + rng.index(7);
        const micap::SplitPair pair = micap::split(dominant_hermitian_toeplitz(rng, n));
        const micap::SpectrumPair spectra = micap::split_spectra(pair);
        for (const cxd& v : spectra.lambda) REQUIRE(v.real() > 0.0);
        for (const cxd& v : spectra.mu) REQUIRE(v.real() > 0.0);
        for (double alpha : {5.0, 50.0}) {
            const double sigma = micap::sigma_bound(spectra, alpha);
            const double rho =
                micap::spectral_radius(
                    micap::iteration_matrix(pair, alpha, IccVariant::CscsCorrected))
                    .value;
            CHECK(sigma < 1.0);
            CHECK(rho <= sigma + 1e-7);
        }
    }
}

TEST_CASE("iteration matrix approaches the identity as alpha grows") {
    const micap::SplitPair pair = published_split();
    const ComplexMatrix id = ComplexMatrix::identity(4);

    const double dist_1000 = micap::max_abs_diff(
        micap::iteration_matrix(pair, 1000.0, IccVariant::AsPrinted), id);
    const double dist_60000 = micap::max_abs_diff(
        micap::iteration_matrix(pair, 60000.0, IccVariant::AsPrinted), id);
    CHECK(dist_1000 == doctest::Approx(9.9894e-4).epsilon(1e-3));
    CHECK(dist_60000 == doctest::Approx(1.6666e-5).epsilon(1e-3));
    CHECK(dist_60000 < dist_1000);

    const double dist_cscs_60000 = micap::max_abs_diff(
        micap::iteration_matrix(pair, 60000.0, IccVariant::CscsCorrected), id);
    CHECK(dist_cscs_60000 == doctest::Approx(3.3333e-5).epsilon(1e-3));
}

TEST_CASE("icc_sweep records the grid in order with convergence flags") {
    const micap::SplitPair pair = published_split();
    const std::vector<double> grid = {5.0, 1000.0, 60000.0};
    const std::vector<micap::IccRecord> records =
        micap::icc_sweep(pair, grid, IccVariant::AsPrinted, micap::kDefaultEpsConv);
    const std::vector<micap::IccRecord> serial =
        micap::icc_sweep_serial(pair, grid, IccVariant::AsPrinted, micap::kDefaultEpsConv);

    REQUIRE(records.size() == 3);
    REQUIRE(serial.size() == 3);
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(records[i].alpha == grid[i]);
        CHECK(records[i].sigma == serial[i].sigma);
        CHECK(records[i].rho == serial[i].rho);
        CHECK(records[i].distance_to_identity == serial[i].distance_to_identity);
        CHECK(records[i].converged ==
              (records[i].distance_to_identity <= micap::kDefaultEpsConv));
    }
    CHECK_FALSE(records[0].converged);
    CHECK(records[2].converged);
}

TEST_CASE("icc csv serialization") {
    micap::IccRecord record;
    record.alpha = 5.0;
    record.sigma = 0.5;
    record.rho = 0.25;
    record.variant = IccVariant::AsPrinted;
    record.distance_to_identity = 0.125;
    record.converged = true;
    const std::vector<micap::IccRecord> records = {record};
    CHECK(micap::icc_records_to_csv(records) ==
          "alpha,sigma,rho,variant,dist_identity,converged\n"
          "5,0.5,0.25,as-printed,0.125,true\n");
}

TEST_CASE("variant names round trip") {
    CHECK(micap::variant_name(IccVariant::AsPrinted) == "as-printed");
    CHECK(micap::variant_name(IccVariant::CscsCorrected) == "cscs");
    CHECK(micap::variant_from_name("as-printed") == IccVariant::AsPrinted);
    CHECK(micap::variant_from_name("cscs") == IccVariant::CscsCorrected);
    CHECK_THROWS_AS(micap::variant_from_name("bogus"), micap::config_error);
}

TEST_CASE("iteration_matrix validation and singular shifts") {
    const micap::SplitPair pair = published_split();
    CHECK_THROWS_AS(micap::iteration_matrix(pair, 0.0, IccVariant::AsPrinted),
                    micap::config_error);
    CHECK_THROWS_AS(micap::iteration_matrix(pair, -5.0, IccVariant::AsPrinted),
                    micap::config_error);

    // h_0 = 0 and h_{+-1} = -1 put -1 in the circulant spectrum, so the
    // shift alpha = 1 is exactly singular.
    const micap::ToeplitzCovariance degenerate(
        {cxd{0.0, 0.0}, cxd{-1.0, 0.0}}, {cxd{-1.0, 0.0}}, true);
    CHECK_THROWS_AS(
        micap::iteration_matrix(micap::split(degenerate), 1.0, IccVariant::AsPrinted),
        micap::singular_error);
}

TEST_CASE("default grid matches the published table rows") {
    const micap::PublishedReference& ref = micap::published_reference();
    REQUIRE(ref.bound_rows.size() == micap::kDefaultAlphaGrid.size());
    for (std::size_t i = 0; i < ref.bound_rows.size(); ++i)
        CHECK(ref.bound_rows[i].alpha == micap::kDefaultAlphaGrid[i]);
}
