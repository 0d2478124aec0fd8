// SPDX-License-Identifier: Apache-2.0

#ifndef MICAP_JSON_IO_HPP
#define MICAP_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "micap/matrix.hpp"
#include "micap/toeplitz.hpp"

namespace micap {

/// [re, im] pair representation used throughout the JSON surface.
nlohmann::json complex_to_json(cxd value);
cxd complex_from_json(const nlohmann::json& j);

nlohmann::json complex_vector_to_json(const std::vector<cxd>& values);
std::vector<cxd> complex_vector_from_json(const nlohmann::json& j);

/// Dense matrix as an array of rows, each row an array of [re, im] pairs.
nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

/// Coefficient document {"n": int, "first_column": [[re, im], ...],
/// "first_row_tail": [[re, im], ...]}. An optional "hermitian" boolean
/// defaults to false on input and is always written.
nlohmann::json toeplitz_to_json(const ToeplitzCovariance& r);
ToeplitzCovariance toeplitz_from_json(const nlohmann::json& j);

/// Parses text as JSON, rethrowing parser failures as config_error with
/// the given context in the message.
nlohmann::json parse_json_text(const std::string& text, const std::string& context);

} // namespace micap

#endif
