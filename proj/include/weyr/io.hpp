#ifndef WEYR_IO_HPP
#define WEYR_IO_HPP

#include <json.hpp>
#include <string>

#include "weyr/structure.hpp"

namespace weyr::io {

using nlohmann::json;

/// {"kind":"rational"} or {"kind":"prime","modulus":p}
json field_to_json(const FieldDescriptor& f);
FieldDescriptor field_from_json(const json& j);

/// Row grid of entry strings; exact values survive serialization because
/// entries are never native numbers.
json grid_to_json(const Matrix& m);
Matrix grid_from_json(const json& grid, const FieldDescriptor& f);

/// {"field":..., "matrix":[[...]]}
json matrix_document(const Matrix& m);
Matrix parse_matrix_document(const json& doc);

struct PairDocument {
  Matrix m;
  Matrix n;
};

/// {"field":..., "m":[[...]], "n":[[...]]}; both grids square of equal size.
json pair_document(const Matrix& m, const Matrix& n);
PairDocument parse_pair_document(const json& doc);

json structure_to_json(const WeyrStructure& w);

/// Canonical text form used for all emitted documents: two-space indent,
/// sorted keys, trailing newline. Parsing then re-dumping is the identity.
std::string canonical_dump(const json& j);

json parse_text(const std::string& text);  // wraps errors in ParseError

}  // namespace weyr::io

#endif
