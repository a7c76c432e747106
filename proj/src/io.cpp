#include "weyr/io.hpp"

#include "weyr/errors.hpp"

namespace weyr::io {

json field_to_json(const FieldDescriptor& f) {
  json j;
  j["kind"] = f.is_rational() ? "rational" : "prime";
  if (f.is_prime()) j["modulus"] = f.modulus();
  return j;
}

FieldDescriptor field_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw ParseError("field descriptor must be an object with a 'kind' string");
  std::string kind = j["kind"].get<std::string>();
  if (kind == "rational") return FieldDescriptor::rational();
  if (kind == "prime") {
    if (!j.contains("modulus") || !j["modulus"].is_number_unsigned())
      throw ParseError("prime field needs an unsigned 'modulus'");
    return FieldDescriptor::prime(j["modulus"].get<std::uint64_t>());
  }
  throw ParseError("unknown field kind '" + kind + "'");
}

json grid_to_json(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix grid_from_json(const json& grid, const FieldDescriptor& f) {
  if (!grid.is_array()) throw ParseError("matrix grid must be an array of rows");
  int nrows = (int)grid.size();
  int ncols = nrows == 0 ? 0 : (int)grid[0].size();
  Matrix m(nrows, ncols, f);
  for (int i = 0; i < nrows; ++i) {
    const json& row = grid[i];
    if (!row.is_array() || (int)row.size() != ncols)
      throw ParseError("matrix rows must be arrays of equal length");
    for (int j = 0; j < ncols; ++j) {
      if (!row[j].is_string()) throw ParseError("matrix entries must be strings");
      m.set(i, j, Scalar::parse(row[j].get<std::string>(), f));
    }
  }
  return m;
}

json matrix_document(const Matrix& m) {
  json doc;
  doc["field"] = field_to_json(m.field());
  doc["matrix"] = grid_to_json(m);
  return doc;
}

Matrix parse_matrix_document(const json& doc) {
  if (!doc.is_object() || !doc.contains("field") || !doc.contains("matrix"))
    throw ParseError("matrix document needs 'field' and 'matrix'");
  FieldDescriptor f = field_from_json(doc["field"]);
  return grid_from_json(doc["matrix"], f);
}

json pair_document(const Matrix& m, const Matrix& n) {
  if (m.field() != n.field()) throw std::invalid_argument("pair document field mismatch");
  json doc;
  doc["field"] = field_to_json(m.field());
  doc["m"] = grid_to_json(m);
  doc["n"] = grid_to_json(n);
  return doc;
}

PairDocument parse_pair_document(const json& doc) {
  if (!doc.is_object() || !doc.contains("field") || !doc.contains("m") || !doc.contains("n"))
    throw ParseError("pair document needs 'field', 'm' and 'n'");
  FieldDescriptor f = field_from_json(doc["field"]);
  PairDocument p{grid_from_json(doc["m"], f), grid_from_json(doc["n"], f)};
  if (!p.m.is_square() || !p.n.is_square() || p.m.rows() != p.n.rows())
    throw ParseError("pair matrices must be square and of equal size");
  return p;
}

json structure_to_json(const WeyrStructure& w) {
  json j;
  json k = json::array(), p = json::array();
  for (const SegrePart& part : w.segre().parts()) {
    k.push_back(part.size);
    p.push_back(part.multiplicity);
  }
  j["k"] = std::move(k);
  j["p"] = std::move(p);
  j["r"] = w.r();
  j["m"] = w.m();
  return j;
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace weyr::io
