#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "srkit/codes.hpp"
#include "srkit/toeplitz.hpp"

namespace srkit {

using json = nlohmann::ordered_json;

std::string witness_line(const IndexPair& idx);  // "FAIL s=<s> I=<...> J=<...>"
IndexPair parse_witness_line(const std::string& line);

// Toeplitz text format: field header line, then "col: e0, e1, ..., eN".
void write_toeplitz(std::ostream& os, const Toeplitz& t);
Toeplitz read_toeplitz(std::istream& is);

json field_to_json(const Field& f);
FieldPtr field_from_json(const json& j);
json toeplitz_to_json(const Toeplitz& t);
Toeplitz toeplitz_from_json(const json& j);

// Polynomial matrix text format: field header, "P <rows> <cols>", then one
// "i j : c0, c1, ..." line per nonzero entry (1-based, coefficients in the
// element notation).
void write_poly_matrix(std::ostream& os, const PolyMatrix& p);
PolyMatrix read_poly_matrix(std::istream& is);
json poly_matrix_to_json(const PolyMatrix& p);
PolyMatrix poly_matrix_from_json(const json& j);
json mat_to_json(const Mat& m);
Mat mat_from_json(const json& j);

// Dense matrix text format: field header, "M <rows> <cols>", then one line
// of space-separated elements per row.
void write_dense(std::ostream& os, const Mat& m);
Mat read_dense(std::istream& is);

Toeplitz load_toeplitz(const std::string& path);
PolyMatrix load_poly_matrix(const std::string& path);

std::string to_text(const Toeplitz& t);
std::string to_text(const Mat& m);
std::string to_text(const PolyMatrix& p);

}  // namespace srkit
