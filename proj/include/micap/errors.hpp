// SPDX-License-Identifier: Apache-2.0

#ifndef MICAP_ERRORS_HPP
#define MICAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace micap {

/// Dimension mismatch between operands.
class shape_error : public std::invalid_argument {
public:
    explicit shape_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Matrix singular to working tolerance.
class singular_error : public std::runtime_error {
public:
    explicit singular_error(const std::string& what) : std::runtime_error(what) {}
};

/// Operand fails a structural precondition (Hermitian, Toeplitz, ...).
class structure_error : public std::invalid_argument {
public:
    explicit structure_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Matrix is not positive (semi)definite where required.
class definiteness_error : public std::runtime_error {
public:
    explicit definiteness_error(const std::string& what) : std::runtime_error(what) {}
};

/// A shifted-spectrum denominator |alpha + eigenvalue| is numerically zero.
class pole_error : public std::runtime_error {
public:
    explicit pole_error(const std::string& what) : std::runtime_error(what) {}
};

/// Incompatible runs handed to a comparison.
class comparison_error : public std::invalid_argument {
public:
    explicit comparison_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Bad experiment configuration or input file.
class config_error : public std::invalid_argument {
public:
    explicit config_error(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace micap

#endif
