// SPDX-License-Identifier: Apache-2.0

#ifndef MICAP_TOEPLITZ_HPP
#define MICAP_TOEPLITZ_HPP

#include <cstddef>
#include <vector>

#include "micap/matrix.hpp"

namespace micap {

/// Toeplitz matrix with (i, j) entry h_{i-j}, held as its first column
/// h_0 .. h_{N-1} plus the first-row tail h_{-1} .. h_{-(N-1)}.
struct ToeplitzCovariance {
    std::size_t n = 0;
    std::vector<cxd> first_column;    // h_0 .. h_{N-1}
    std::vector<cxd> first_row_tail;  // h_{-1} .. h_{-(N-1)}
    bool hermitian = false;

    /// Validates lengths and finiteness; when hermitian_flag is set, also
    /// checks h_{-j} == conj(h_j) and real h_0 to 1e-12.
    ToeplitzCovariance(std::vector<cxd> column, std::vector<cxd> row_tail, bool hermitian_flag);

    /// h_k for k in [-(N-1), N-1].
    cxd coefficient(std::ptrdiff_t k) const;
};

/// Circulant matrix held by its first row a_0 .. a_{N-1}; each row is the
/// previous one cyclically shifted right.
struct CirculantMatrix {
    std::size_t n = 0;
    std::vector<cxd> first_row;
};

/// Skew-circulant matrix held by its first row b_0 .. b_{N-1}; wrapped
/// entries change sign, b_{-j} = -b_{N-j}.
struct SkewCirculantMatrix {
    std::size_t n = 0;
    std::vector<cxd> first_row;
};

/// Additive splitting R = A + B into a circulant A and a skew-circulant B.
struct SplitPair {
    CirculantMatrix a;
    SkewCirculantMatrix b;
    ToeplitzCovariance source;
};

/// Extracts the first column and row of a dense Toeplitz matrix. Throws
/// structure_error when some diagonal is not constant to 1e-10, or when a
/// requested hermitian flag is violated.
ToeplitzCovariance toeplitz_from_dense(const ComplexMatrix& m, bool hermitian);

/// Dense N x N expansion, entry (i, j) = h_{i-j}.
ComplexMatrix dense_of_toeplitz(const ToeplitzCovariance& r);

/// Coefficient form of the splitting: a_0 = b_0 = h_0 / 2 and, for j >= 1,
/// a_j = (h_{-j} + h_{N-j}) / 2, b_j = (h_{-j} - h_{N-j}) / 2.
SplitPair split(const ToeplitzCovariance& r);

/// Dense expansion, entry (i, j) = a_{(j-i) mod N}.
ComplexMatrix dense_of_circulant(const CirculantMatrix& a);

/// Dense expansion, entry (i, j) = b_{j-i} when j >= i and -b_{N+j-i} below
/// the diagonal.
ComplexMatrix dense_of_skew_circulant(const SkewCirculantMatrix& b);

/// dense(A) + dense(B); equals the dense source matrix up to rounding.
ComplexMatrix reconstruct(const SplitPair& pair);

} // namespace micap

#endif
