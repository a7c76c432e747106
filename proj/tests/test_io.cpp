#include <doctest.h>

#include "weyr/errors.hpp"
#include "weyr/io.hpp"

using namespace weyr;
namespace io = weyr::io;

namespace {
const FieldDescriptor Q = FieldDescriptor::rational();
}

TEST_CASE("field descriptor serialization") {
  CHECK(io::field_from_json(io::field_to_json(Q)) == Q);
  FieldDescriptor f5 = FieldDescriptor::prime(5);
  CHECK(io::field_from_json(io::field_to_json(f5)) == f5);
  CHECK(FieldDescriptor::parse("rational") == Q);
  CHECK(FieldDescriptor::parse("prime:11") == FieldDescriptor::prime(11));
  CHECK_THROWS_AS(FieldDescriptor::parse("prime:9"), PreconditionError);
  CHECK_THROWS_AS(FieldDescriptor::parse("float"), ParseError);
  CHECK_THROWS_AS(io::field_from_json(io::json{{"kind", "prime"}}), ParseError);
  CHECK_THROWS_AS(io::field_from_json(io::json{{"kind", "galois"}}), ParseError);
}

TEST_CASE("matrix document round trip is canonical") {
  io::json doc = io::parse_text(R"({
    "field": {"kind": "rational"},
    "matrix": [["2/4", "-3"], ["0", "10/5"]]
  })");
  Matrix m = io::parse_matrix_document(doc);
  CHECK(m.at(0, 0).str() == "1/2");  // canonicalized on parse
  CHECK(m.at(1, 1).str() == "2");
  std::string once = io::canonical_dump(io::matrix_document(m));
  Matrix again = io::parse_matrix_document(io::parse_text(once));
  CHECK(again == m);
  CHECK(io::canonical_dump(io::matrix_document(again)) == once);  // byte-identical
}

TEST_CASE("prime field documents canonicalize residues") {
  io::json doc = io::parse_text(R"({
    "field": {"kind": "prime", "modulus": 5},
    "matrix": [["7", "-1"], ["3/4", "0"]]
  })");
  Matrix m = io::parse_matrix_document(doc);
  CHECK(m.at(0, 0).str() == "2");
  CHECK(m.at(0, 1).str() == "4");
  CHECK(m.at(1, 0).str() == "2");
  std::string once = io::canonical_dump(io::matrix_document(m));
  CHECK(io::canonical_dump(io::matrix_document(io::parse_matrix_document(io::parse_text(once)))) ==
        once);
}

TEST_CASE("pair documents") {
  Matrix m = Matrix::from_int_rows({{0, 1}, {0, 0}}, Q);
  Matrix n = Matrix::from_int_rows({{0, 5}, {0, 0}}, Q);
  io::json doc = io::pair_document(m, n);
  io::PairDocument pd = io::parse_pair_document(doc);
  CHECK(pd.m == m);
  CHECK(pd.n == n);

  CHECK_THROWS_AS(io::parse_pair_document(io::parse_text(R"({
    "field": {"kind": "rational"},
    "m": [["0", "1"], ["0", "0"]],
    "n": [["0"]]
  })")),
                  ParseError);
  CHECK_THROWS_AS(io::parse_pair_document(io::parse_text(R"({
    "field": {"kind": "rational"},
    "m": [["0", "1"]],
    "n": [["0", "1"]]
  })")),
                  ParseError);
}

TEST_CASE("malformed documents raise parse errors") {
  CHECK_THROWS_AS(io::parse_text("{nope"), ParseError);
  CHECK_THROWS_AS(io::parse_matrix_document(io::parse_text(R"({"matrix": []})")), ParseError);
  CHECK_THROWS_AS(io::parse_matrix_document(io::parse_text(R"({
    "field": {"kind": "rational"},
    "matrix": [["1", "2"], ["3"]]
  })")),
                  ParseError);
  CHECK_THROWS_AS(io::parse_matrix_document(io::parse_text(R"({
    "field": {"kind": "rational"},
    "matrix": [[1]]
  })")),
                  ParseError);
  CHECK_THROWS_AS(io::parse_matrix_document(io::parse_text(R"({
    "field": {"kind": "rational"},
    "matrix": [["1/x"]]
  })")),
                  ParseError);
}

TEST_CASE("structure serialization") {
  WeyrStructure w = weyr_characteristic(SegreStructure({{3, 2}, {1, 1}}));
  io::json j = io::structure_to_json(w);
  CHECK(j["k"] == io::json{3, 1});
  CHECK(j["p"] == io::json{2, 1});
  CHECK(j["r"] == io::json{3, 2, 2});
  CHECK(j["m"] == io::json{2, 1, 1});
}
