#include "oplab/json_io.hpp"

#include <fstream>

namespace oplab {

nlohmann::json complex_to_json(Complex z)
{
    return nlohmann::json::array({z.real(), z.imag()});
}

Complex complex_from_json(const nlohmann::json& j)
{
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw Error(ErrorKind::Parse, "complex number must be [re, im], got " + j.dump());
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

nlohmann::json matrix_to_json(const ComplexMatrix& m)
{
    nlohmann::json entries = nlohmann::json::array();
    for (const Complex& z : m.entries()) {
        entries.push_back(complex_to_json(z));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

ComplexMatrix matrix_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries")) {
        throw Error(ErrorKind::Parse, "matrix JSON needs rows, cols and entries");
    }
    if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned() || !j["entries"].is_array()) {
        throw Error(ErrorKind::Parse, "malformed matrix JSON fields");
    }
    const auto rows = j["rows"].get<std::size_t>();
    const auto cols = j["cols"].get<std::size_t>();
    if (rows == 0 || cols == 0) {
        throw Error(ErrorKind::Parse, "matrix dimensions must be positive");
    }
    std::vector<Complex> entries;
    for (const auto& e : j["entries"]) {
        entries.push_back(complex_from_json(e));
    }
    if (entries.size() != rows * cols) {
        throw Error(ErrorKind::Parse, "entry count does not match rows * cols");
    }
    return ComplexMatrix(rows, cols, std::move(entries));
}

ComplexMatrix read_matrix_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::Parse, "cannot open " + path);
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("invalid JSON in ") + path + ": " + e.what());
    }
    return matrix_from_json(j);
}

} // namespace oplab
