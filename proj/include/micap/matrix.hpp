// SPDX-License-Identifier: Apache-2.0

#ifndef MICAP_MATRIX_HPP
#define MICAP_MATRIX_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "micap/errors.hpp"

namespace micap {

using cxd = std::complex<double>;

/// Dense row-major complex matrix. The workhorse value type of the library;
/// immutable by convention once filled (operations return new values).
class ComplexMatrix {
public:
    ComplexMatrix() = default;

    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {
        if (rows == 0 || cols == 0)
            throw shape_error("ComplexMatrix: dimensions must be positive");
    }

    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cxd> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (rows == 0 || cols == 0)
            throw shape_error("ComplexMatrix: dimensions must be positive");
        if (entries_.size() != rows * cols)
            throw shape_error("ComplexMatrix: entry count does not match dimensions");
    }

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    cxd& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const cxd& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    const std::vector<cxd>& entries() const { return entries_; }
    std::vector<cxd>& entries() { return entries_; }

    bool is_finite() const {
        for (const cxd& z : entries_)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
        return true;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cxd> entries_;
};

inline ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw shape_error("matrix sum: dimension mismatch");
    ComplexMatrix c(a.rows(), a.cols());
    for (std::size_t k = 0; k < a.entries().size(); ++k)
        c.entries()[k] = a.entries()[k] + b.entries()[k];
    return c;
}

inline ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw shape_error("matrix difference: dimension mismatch");
    ComplexMatrix c(a.rows(), a.cols());
    for (std::size_t k = 0; k < a.entries().size(); ++k)
        c.entries()[k] = a.entries()[k] - b.entries()[k];
    return c;
}

inline ComplexMatrix operator*(const cxd& s, const ComplexMatrix& a) {
    ComplexMatrix c(a.rows(), a.cols());
    for (std::size_t k = 0; k < a.entries().size(); ++k) c.entries()[k] = s * a.entries()[k];
    return c;
}

/// Largest entry modulus.
inline double max_abs(const ComplexMatrix& a) {
    double m = 0.0;
    for (const cxd& z : a.entries()) m = std::max(m, std::abs(z));
    return m;
}

/// Max-norm of the difference, the comparison metric used throughout.
inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw shape_error("max_abs_diff: dimension mismatch");
    double m = 0.0;
    for (std::size_t k = 0; k < a.entries().size(); ++k)
        m = std::max(m, std::abs(a.entries()[k] - b.entries()[k]));
    return m;
}

/// (A + A^H) / 2.
inline ComplexMatrix hermitize(const ComplexMatrix& a) {
    if (!a.square()) throw shape_error("hermitize: matrix must be square");
    ComplexMatrix h(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
    return h;
}

inline double hermitian_defect(const ComplexMatrix& a) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
    return m;
}

} // namespace micap

#endif
