// SPDX-License-Identifier: Apache-2.0

#include "micap/json_io.hpp"

#include <string>

#include "micap/errors.hpp"

namespace micap {

using nlohmann::json;

json complex_to_json(cxd value) { return json::array({value.real(), value.imag()}); }

cxd complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw config_error("complex entries must be [re, im] number pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

json complex_vector_to_json(const std::vector<cxd>& values) {
    json out = json::array();
    for (cxd v : values) out.push_back(complex_to_json(v));
    return out;
}

std::vector<cxd> complex_vector_from_json(const json& j) {
    if (!j.is_array()) throw config_error("expected an array of [re, im] pairs");
    std::vector<cxd> out;
    out.reserve(j.size());
    for (const json& entry : j) out.push_back(complex_from_json(entry));
    return out;
}

json matrix_to_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(complex_to_json(m(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw config_error("dense matrix must be a nonempty row array");
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
    if (cols == 0) throw config_error("dense matrix rows must be nonempty arrays");
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw config_error("dense matrix rows must all have the same length");
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = complex_from_json(j[i][k]);
    }
    return m;
}

json toeplitz_to_json(const ToeplitzCovariance& r) {
    json out;
    out["n"] = r.n;
    out["first_column"] = complex_vector_to_json(r.first_column);
    out["first_row_tail"] = complex_vector_to_json(r.first_row_tail);
    out["hermitian"] = r.hermitian;
    return out;
}

ToeplitzCovariance toeplitz_from_json(const json& j) {
    if (!j.is_object()) throw config_error("Toeplitz document must be a JSON object");
    if (!j.contains("n") || !j.contains("first_column") || !j.contains("first_row_tail"))
        throw config_error("Toeplitz document needs n, first_column, and first_row_tail");
    const auto n = j.at("n").get<std::size_t>();
    std::vector<cxd> column = complex_vector_from_json(j.at("first_column"));
    std::vector<cxd> tail = complex_vector_from_json(j.at("first_row_tail"));
    if (column.size() != n || tail.size() + 1 != n)
        throw config_error("Toeplitz document lengths do not match n");
    const bool hermitian = j.value("hermitian", false);
    return ToeplitzCovariance(std::move(column), std::move(tail), hermitian);
}

json parse_json_text(const std::string& text, const std::string& context) {
    json parsed = json::parse(text, nullptr, false);
    if (parsed.is_discarded()) throw config_error(context + ": not valid JSON");
    return parsed;
}

} // namespace micap
