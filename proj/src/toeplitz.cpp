// SPDX-License-Identifier: Apache-2.0

#include "micap/toeplitz.hpp"

#include <string>
#include <utility>

namespace micap {

namespace {

constexpr double kDiagonalTol = 1e-10;
constexpr double kHermitianTol = 1e-12;

void check_hermitian_coeffs(const std::vector<cxd>& column, const std::vector<cxd>& row_tail) {
    if (std::abs(column[0].imag()) > kHermitianTol)
        throw structure_error("ToeplitzCovariance: hermitian flag set but h_0 is not real");
    for (std::size_t j = 1; j < column.size(); ++j) {
        if (std::abs(row_tail[j - 1] - std::conj(column[j])) > kHermitianTol)
            throw structure_error("ToeplitzCovariance: hermitian flag set but h_{-" +
                                  std::to_string(j) + "} != conj(h_" + std::to_string(j) + ")");
    }
}

} // namespace

ToeplitzCovariance::ToeplitzCovariance(std::vector<cxd> column, std::vector<cxd> row_tail,
                                       bool hermitian_flag)
    : n(column.size()),
      first_column(std::move(column)),
      first_row_tail(std::move(row_tail)),
      hermitian(hermitian_flag) {
    if (n == 0) throw shape_error("ToeplitzCovariance: order must be positive");
    if (first_row_tail.size() != n - 1)
        throw shape_error("ToeplitzCovariance: first_row_tail must have N-1 entries");
    for (const cxd& z : first_column)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw shape_error("ToeplitzCovariance: nonfinite coefficient");
    for (const cxd& z : first_row_tail)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw shape_error("ToeplitzCovariance: nonfinite coefficient");
    if (hermitian) check_hermitian_coeffs(first_column, first_row_tail);
}

cxd ToeplitzCovariance::coefficient(std::ptrdiff_t k) const {
    const std::ptrdiff_t order = static_cast<std::ptrdiff_t>(n);
    if (k <= -order || k >= order)
        throw shape_error("ToeplitzCovariance: coefficient index out of range");
    return k >= 0 ? first_column[static_cast<std::size_t>(k)]
                  : first_row_tail[static_cast<std::size_t>(-k - 1)];
}

ToeplitzCovariance toeplitz_from_dense(const ComplexMatrix& m, bool hermitian) {
    if (!m.square()) throw shape_error("toeplitz_from_dense: matrix must be square");
    const std::size_t n = m.rows();

    std::vector<cxd> column(n);
    std::vector<cxd> row_tail(n > 0 ? n - 1 : 0);
    for (std::size_t i = 0; i < n; ++i) column[i] = m(i, 0);
    for (std::size_t j = 1; j < n; ++j) row_tail[j - 1] = m(0, j);

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const cxd expected = i >= j ? column[i - j] : row_tail[j - i - 1];
            if (std::abs(m(i, j) - expected) > kDiagonalTol)
                throw structure_error("toeplitz_from_dense: diagonal through (" +
                                      std::to_string(i) + "," + std::to_string(j) +
                                      ") is not constant");
        }
    }
    return ToeplitzCovariance(std::move(column), std::move(row_tail), hermitian);
}

ComplexMatrix dense_of_toeplitz(const ToeplitzCovariance& r) {
    ComplexMatrix m(r.n, r.n);
    for (std::size_t i = 0; i < r.n; ++i)
        for (std::size_t j = 0; j < r.n; ++j)
            m(i, j) = i >= j ? r.first_column[i - j] : r.first_row_tail[j - i - 1];
    return m;
}

SplitPair split(const ToeplitzCovariance& r) {
    const std::size_t n = r.n;
    std::vector<cxd> a(n);
    std::vector<cxd> b(n);
    a[0] = 0.5 * r.first_column[0];
    b[0] = a[0];
    for (std::size_t j = 1; j < n; ++j) {
        const cxd h_neg_j = r.first_row_tail[j - 1];
        const cxd h_wrap = r.first_column[n - j];
        a[j] = 0.5 * (h_neg_j + h_wrap);
        b[j] = 0.5 * (h_neg_j - h_wrap);
    }
    return SplitPair{CirculantMatrix{n, std::move(a)}, SkewCirculantMatrix{n, std::move(b)}, r};
}

ComplexMatrix dense_of_circulant(const CirculantMatrix& a) {
    const std::size_t n = a.n;
    if (n == 0 || a.first_row.size() != n)
        throw shape_error("dense_of_circulant: inconsistent coefficient count");
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = a.first_row[(j + n - i) % n];
    return m;
}

ComplexMatrix dense_of_skew_circulant(const SkewCirculantMatrix& b) {
    const std::size_t n = b.n;
    if (n == 0 || b.first_row.size() != n)
        throw shape_error("dense_of_skew_circulant: inconsistent coefficient count");
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = j >= i ? b.first_row[j - i] : -b.first_row[n + j - i];
    return m;
}

ComplexMatrix reconstruct(const SplitPair& pair) {
    return dense_of_circulant(pair.a) + dense_of_skew_circulant(pair.b);
}

} // namespace micap
