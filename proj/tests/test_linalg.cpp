// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "micap/errors.hpp"
#include "micap/linalg.hpp"
#include "micap/matrix.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using micap::ComplexMatrix;
using micap::cxd;
using micap_test::TestRng;

namespace {

ComplexMatrix well_conditioned(TestRng& rng, std::size_t n) {
    ComplexMatrix m = micap_test::random_matrix(rng, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) += cxd{double(n), 0.0};
    return m;
}

ComplexMatrix random_pd(TestRng& rng, std::size_t n) {
    const ComplexMatrix a = micap_test::random_matrix(rng, n, n);
    ComplexMatrix m = micap::mat_mul(a, micap::conj_transpose(a));
    for (std::size_t i = 0; i < n; ++i) m(i, i) += cxd{0.5, 0.0};
    return micap::hermitize(m);
}

} // namespace

TEST_CASE("mat_mul matches the triple-loop oracle") {
    TestRng rng(101);
    for (int rep = 0; rep < 25; ++rep) {
        const std::size_t r = 1 + rng.index(6);
        const std::size_t k = 1 + rng.index(6);
        const std::size_t c = 1 + rng.index(6);
        const ComplexMatrix a = micap_test::random_matrix(rng, r, k);
        const ComplexMatrix b = micap_test::random_matrix(rng, k, c);
        CHECK(micap::max_abs_diff(micap::mat_mul(a, b), micap_test::naive_mat_mul(a, b)) <=
              1e-13);
    }
    CHECK_THROWS_AS(micap::mat_mul(ComplexMatrix(2, 3), ComplexMatrix(2, 3)),
                    micap::shape_error);
}

TEST_CASE("mat_mul by the identity returns the operand") {
    TestRng rng(102);
    const ComplexMatrix a = micap_test::random_matrix(rng, 5, 5);
    const ComplexMatrix id = ComplexMatrix::identity(5);
    CHECK(micap::max_abs_diff(micap::mat_mul(a, id), a) == 0.0);
    CHECK(micap::max_abs_diff(micap::mat_mul(id, a), a) == 0.0);
}

TEST_CASE("conj_transpose is an involution and reverses products") {
    TestRng rng(103);
    const ComplexMatrix a = micap_test::random_matrix(rng, 4, 6);
    const ComplexMatrix b = micap_test::random_matrix(rng, 6, 3);
    CHECK(micap::max_abs_diff(micap::conj_transpose(micap::conj_transpose(a)), a) == 0.0);
    CHECK(micap::max_abs_diff(
              micap::conj_transpose(micap::mat_mul(a, b)),
              micap::mat_mul(micap::conj_transpose(b), micap::conj_transpose(a))) <= 1e-14);
}

TEST_CASE("inverse solves back to the identity") {
    TestRng rng(104);
    for (std::size_t n : {1, 2, 5, 8}) {
        const ComplexMatrix a = well_conditioned(rng, n);
        const ComplexMatrix prod = micap::mat_mul(a, micap::inverse(a));
        CHECK(micap::max_abs_diff(prod, ComplexMatrix::identity(n)) <= 1e-12);
    }
}

TEST_CASE("inverse rejects singular input") {
    ComplexMatrix m(2, 2);
    m(0, 0) = {1.0, 0.0};
    m(0, 1) = {2.0, 0.0};
    m(1, 0) = {2.0, 0.0};
    m(1, 1) = {4.0, 0.0};
    CHECK_THROWS_AS(micap::inverse(m), micap::singular_error);
}

TEST_CASE("det_lu matches cofactor expansion") {
    TestRng rng(105);
    for (int rep = 0; rep < 20; ++rep) {
        const std::size_t n = 1 + rng.index(6);
        const ComplexMatrix a = micap_test::random_matrix(rng, n, n);
        const cxd expected = micap_test::cofactor_det(a);
        const cxd got = micap::det_lu(a);
        CHECK(std::abs(got - expected) <= 1e-10 * std::max(1.0, std::abs(expected)));
    }
    CHECK(std::abs(micap::det_lu(ComplexMatrix::identity(4)) - cxd{1.0, 0.0}) == 0.0);
}

TEST_CASE("log2_det_hermitian_pd agrees with the LU determinant") {
    TestRng rng(106);
    for (std::size_t n : {1, 3, 6}) {
        const ComplexMatrix m = random_pd(rng, n);
        const double expected = std::log2(std::abs(micap::det_lu(m)));
        CHECK(micap::log2_det_hermitian_pd(m) == doctest::Approx(expected).epsilon(1e-10));
    }
}

TEST_CASE("log2_det_hermitian_pd rejects bad structure") {
    TestRng rng(107);
    const ComplexMatrix general = micap_test::random_matrix(rng, 3, 3);
    CHECK_THROWS_AS(micap::log2_det_hermitian_pd(general), micap::structure_error);

    const ComplexMatrix negative = cxd{-1.0, 0.0} * ComplexMatrix::identity(3);
    CHECK_THROWS_AS(micap::log2_det_hermitian_pd(negative), micap::definiteness_error);
}

TEST_CASE("hermitian_eig diagonalizes random Hermitian matrices") {
    TestRng rng(108);
    for (std::size_t n : {1, 2, 4, 8, 12}) {
        const ComplexMatrix a = micap_test::random_hermitian(rng, n);
        const micap::HermitianEig eig = micap::hermitian_eig(a);

        for (std::size_t j = 0; j + 1 < n; ++j) CHECK(eig.values[j] <= eig.values[j + 1]);

        const ComplexMatrix vhv =
            micap::mat_mul(micap::conj_transpose(eig.vectors), eig.vectors);
        CHECK(micap::max_abs_diff(vhv, ComplexMatrix::identity(n)) <= 1e-10);

        ComplexMatrix scaled = eig.vectors;
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) scaled(i, j) *= eig.values[j];
        const ComplexMatrix rebuilt =
            micap::mat_mul(scaled, micap::conj_transpose(eig.vectors));
        CHECK(micap::max_abs_diff(rebuilt, a) <= 1e-10);
    }
}

TEST_CASE("hermitian_eig agrees with the QR oracle on shifted matrices") {
    TestRng rng(109);
    for (int rep = 0; rep < 10; ++rep) {
        const std::size_t n = 2 + rng.index(7);
        // Shift to positive definite so every eigenvalue modulus is distinct
        // almost surely, which unshifted QR requires.
        ComplexMatrix a = micap_test::random_hermitian(rng, n);
        for (std::size_t i = 0; i < n; ++i) a(i, i) += cxd{double(n) + 1.0, 0.0};

        const micap::HermitianEig eig = micap::hermitian_eig(a);
        std::vector<cxd> jacobi(eig.values.begin(), eig.values.end());
        CHECK(micap_test::multiset_distance(jacobi, micap_test::qr_eigenvalues(a)) <= 1e-8);
    }
}

TEST_CASE("psd_sqrt squares back and is exact on the identity") {
    TestRng rng(110);
    for (std::size_t n : {2, 5, 9}) {
        const ComplexMatrix m = random_pd(rng, n);
        const ComplexMatrix s = micap::psd_sqrt(m);
        CHECK(micap::max_abs_diff(micap::mat_mul(s, s), m) <= 1e-9);
    }

    const ComplexMatrix id = ComplexMatrix::identity(6);
    const ComplexMatrix root = micap::psd_sqrt(id);
    CHECK(micap::max_abs_diff(root, id) == 0.0);

    // Rank-deficient PSD input: eigenvalue clamping keeps the root real.
    TestRng rng2(111);
    const ComplexMatrix tall = micap_test::random_matrix(rng2, 5, 2);
    const ComplexMatrix low_rank =
        micap::hermitize(micap::mat_mul(tall, micap::conj_transpose(tall)));
    const ComplexMatrix s = micap::psd_sqrt(low_rank);
    CHECK(micap::max_abs_diff(micap::mat_mul(s, s), low_rank) <= 1e-9);

    const ComplexMatrix negative = cxd{-2.0, 0.0} * ComplexMatrix::identity(3);
    CHECK_THROWS_AS(micap::psd_sqrt(negative), micap::definiteness_error);
}

TEST_CASE("spectral_radius handles diagonal, random, and nilpotent cases") {
    ComplexMatrix diag(3, 3);
    diag(0, 0) = {0.2, 0.0};
    diag(1, 1) = {-0.9, 0.1};
    diag(2, 2) = {0.4, -0.3};
    const micap::SpectralRadius rd = micap::spectral_radius(diag);
    CHECK(rd.converged);
    CHECK(rd.value == doctest::Approx(std::abs(cxd{-0.9, 0.1})).epsilon(1e-8));

    TestRng rng(112);
    for (int rep = 0; rep < 8; ++rep) {
        const std::size_t n = 2 + rng.index(6);
        const ComplexMatrix a = micap_test::random_matrix(rng, n, n);
        double expected = 0.0;
        for (const cxd& lam : micap_test::qr_eigenvalues(a))
            expected = std::max(expected, std::abs(lam));
        const micap::SpectralRadius r = micap::spectral_radius(a);
        CHECK(r.value == doctest::Approx(expected).epsilon(1e-5));
    }

    ComplexMatrix nilpotent(3, 3);
    nilpotent(0, 1) = {1.0, 0.0};
    nilpotent(1, 2) = {2.0, 0.0};
    const micap::SpectralRadius rn = micap::spectral_radius(nilpotent);
    CHECK(rn.value == 0.0);
}

TEST_CASE("dft matches the direct sum and the all-ones case") {
    TestRng rng(113);
    const std::size_t n = 7;
    std::vector<cxd> v(n);
    for (cxd& z : v) z = rng.complex_in_disk();

    const std::vector<cxd> got = micap::dft(v);
    for (std::size_t k = 0; k < n; ++k) {
        cxd expected{};
        for (std::size_t j = 0; j < n; ++j)
            expected += v[j] * std::exp(cxd{0.0, 2.0 * 3.14159265358979323846 * double(j) *
                                                  double(k) / double(n)});
        CHECK(std::abs(got[k] - expected) <= 1e-10);
    }

    const std::vector<cxd> pulse = micap::dft(std::vector<cxd>{cxd{1.0, 0.0}, cxd{}, cxd{}});
    for (const cxd& z : pulse) CHECK(std::abs(z - cxd{1.0, 0.0}) <= 1e-12);
}
