#pragma once

#include "symmsum/conjectures.hpp"
#include "symmsum/matrix.hpp"
#include "symmsum/rational.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <variant>

namespace symmsum {

/// A matrix read from disk lives in exactly one ring.
using AnyMatrix = std::variant<Matrix<Rational>, Matrix<double>>;

/*
 * Matrix file format:
 *
 *   {"rows": n, "cols": m, "entries": [[...], ...]}
 *
 * Entries are JSON integers, JSON floats, or strings "p/q". Integers and
 * "p/q" strings are exact; a single float entry puts the whole matrix in
 * the float ring.
 */
AnyMatrix matrix_from_json(const nlohmann::json& j);
AnyMatrix read_matrix_file(const std::filesystem::path& path);

nlohmann::json matrix_to_json(const Matrix<Rational>& m);
nlohmann::json matrix_to_json(const Matrix<double>& m);
nlohmann::json matrix_to_json(const AnyMatrix& m);

Matrix<double> to_float(const AnyMatrix& m);

/// Shortest decimal string that reads back to the same double.
std::string format_double(double x);

nlohmann::json scan_report_to_json(const ScanReport& report);
ScanReport scan_report_from_json(const nlohmann::json& j);

/// The serialized report without the timing field; equal across thread counts.
std::string scan_report_body(const ScanReport& report);

/// Writes `j` (pretty-printed, trailing newline). Throws input_error on failure.
void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);
nlohmann::json read_json_file(const std::filesystem::path& path);

} // namespace symmsum
