#pragma once

#include "json.hpp"

#include "oplab/complex_matrix.hpp"

namespace oplab {

nlohmann::json complex_to_json(Complex z);
Complex complex_from_json(const nlohmann::json& j);

/// {"rows": n, "cols": m, "entries": [[re, im], ...]} in row-major order.
nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

/// Reads a matrix JSON file; Parse error on malformed input.
ComplexMatrix read_matrix_file(const std::string& path);

} // namespace oplab
