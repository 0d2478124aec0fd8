// SPDX-License-Identifier: Apache-2.0

#ifndef MICAP_LINALG_HPP
#define MICAP_LINALG_HPP

#include <span>
#include <vector>

#include "micap/matrix.hpp"

namespace micap {

/// Standard complex matrix product.
ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b);

/// Conjugate transpose A^H.
ComplexMatrix conj_transpose(const ComplexMatrix& a);

/// Inverse via LU factorization with partial pivoting. Throws singular_error
/// when a pivot falls below 1e-13 times the largest input entry.
ComplexMatrix inverse(const ComplexMatrix& a);

/// Determinant as the signed product of LU pivots. Singular inputs yield 0.
cxd det_lu(const ComplexMatrix& a);

/// log2 det of a Hermitian positive definite matrix via Cholesky,
/// 2 * sum(log2 of the factor diagonal). Throws definiteness_error on a
/// nonpositive pivot and structure_error when the input is not Hermitian
/// to 1e-9 in max-norm.
double log2_det_hermitian_pd(const ComplexMatrix& a);

struct HermitianEig {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // columns; V diag(values) V^H reconstructs the input
};

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations,
/// swept until the off-diagonal norm is negligible. Throws structure_error
/// when the input is not Hermitian to 1e-9.
HermitianEig hermitian_eig(const ComplexMatrix& a);

/// Hermitian square root S of a PSD matrix, S*S ~= a. Eigenvalues in
/// [-1e-9, 0) are clamped to zero; anything below -1e-9 throws
/// definiteness_error.
ComplexMatrix psd_sqrt(const ComplexMatrix& a);

struct SpectralRadius {
    double value = 0.0;
    bool converged = false;  // power iteration settled; false means the
                             // Gelfand squaring estimate was returned
};

/// Largest eigenvalue modulus of a general square matrix. Power iteration
/// from a fixed pseudo-random start vector, declared converged once
/// successive Rayleigh-quotient moduli repeatedly differ by <= 1e-9
/// (capped at 1e5 iterations); near-tied dominant moduli fall back to
/// the Gelfand limit estimated by 30 successive squarings of the
/// normalized matrix.
SpectralRadius spectral_radius(const ComplexMatrix& a);

/// Direct O(N^2) transform X_k = sum_j v_j e^{+2 pi i j k / N}. The +
/// exponent sign is fixed project-wide; the circulant spectra depend on it.
std::vector<cxd> dft(std::span<const cxd> v);

} // namespace micap

#endif
