#include <doctest.h>

#include "weyr/errors.hpp"
#include "weyr/harness.hpp"
#include "weyr/matrix.hpp"

using namespace weyr;

namespace {
const FieldDescriptor Q = FieldDescriptor::rational();

Matrix jordan(int n, const FieldDescriptor& f = Q) {
  Matrix j(n, n, f);
  for (int i = 0; i + 1 < n; ++i) j.set(i, i + 1, Scalar::one(f));
  return j;
}
}  // namespace

TEST_CASE("scalar canonical forms") {
  CHECK(Scalar::parse("2/4", Q).str() == "1/2");
  CHECK(Scalar::parse("-3/6", Q).str() == "-1/2");
  CHECK(Scalar::parse("4/2", Q).str() == "2");
  CHECK(Scalar::parse("0", Q).str() == "0");
  FieldDescriptor f5 = FieldDescriptor::prime(5);
  CHECK(Scalar::parse("7", f5).str() == "2");
  CHECK(Scalar::parse("-1", f5).str() == "4");
  CHECK(Scalar::parse("3/4", f5).str() == "2");  // 3 * 4^{-1} = 3 * 4 = 12 = 2 (mod 5)
  CHECK_THROWS_AS(Scalar::parse("1/0", Q), ParseError);
  CHECK_THROWS_AS(Scalar::parse("x", Q), ParseError);
  CHECK_THROWS_AS(Scalar::parse("", Q), ParseError);
}

TEST_CASE("scalar arithmetic and errors") {
  Scalar h = Scalar::parse("1/2", Q), t = Scalar::parse("1/3", Q);
  CHECK((h + t).str() == "5/6");
  CHECK((h * t).str() == "1/6");
  CHECK((h / t).str() == "3/2");
  CHECK((h - h).is_zero());
  CHECK_THROWS_AS(h / Scalar::zero(Q), std::domain_error);
  CHECK_THROWS_AS(h + Scalar::one(FieldDescriptor::prime(7)), std::invalid_argument);

  FieldDescriptor f7 = FieldDescriptor::prime(7);
  Scalar a = Scalar::from_integer(3, f7);
  CHECK((a.inverse() * a).is_one());
  CHECK((a * a).str() == "2");
  CHECK_THROWS_AS(FieldDescriptor::prime(10), PreconditionError);
  CHECK_THROWS_AS(FieldDescriptor::prime(1), PreconditionError);
}

TEST_CASE("rational arithmetic is arbitrary precision") {
  // 20th harmonic-like sum has a large denominator; everything stays exact.
  Scalar sum = Scalar::zero(Q);
  for (int i = 1; i <= 25; ++i) sum += Scalar::one(Q) / Scalar::from_integer(i, Q);
  Scalar back = sum;
  for (int i = 1; i <= 25; ++i) back -= Scalar::one(Q) / Scalar::from_integer(i, Q);
  CHECK(back.is_zero());

  // Hilbert matrices are notoriously ill conditioned; exact inversion must
  // still satisfy H * H^{-1} == I on the nose.
  int n = 6;
  Matrix h(n, n, Q);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      h.set(i, j, Scalar::one(Q) / Scalar::from_integer(i + j + 1, Q));
  CHECK(h * invert(h) == Matrix::identity(n, Q));
}

TEST_CASE("mat_mul basics") {
  Matrix x = Matrix::from_int_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}, Q);
  CHECK(Matrix::identity(3, Q) * x == x);
  CHECK(jordan(2) * jordan(2) == Matrix::zero(2, 2, Q));
  CHECK(jordan(3) * jordan(3) == Matrix::from_int_rows({{0, 0, 1}, {0, 0, 0}, {0, 0, 0}}, Q));
  CHECK_THROWS_AS(x * Matrix::zero(2, 2, Q), std::invalid_argument);
  CHECK_THROWS_AS(x * Matrix::zero(3, 3, FieldDescriptor::prime(5)), std::invalid_argument);
}

TEST_CASE("rank") {
  CHECK(rank(Matrix::zero(4, 4, Q)) == 0);
  CHECK(rank(jordan(4)) == 3);
  // Weyr matrix with strip sizes (2, 1): a single 1 in the corner.
  Matrix w = Matrix::from_int_rows({{0, 0, 1}, {0, 0, 0}, {0, 0, 0}}, Q);
  CHECK(rank(w) == 1);
}

TEST_CASE("kernel_basis") {
  CHECK(kernel_basis(Matrix::identity(4, Q)).empty());
  auto kb = kernel_basis(jordan(2));
  REQUIRE(kb.size() == 1);
  CHECK(kb[0][0].is_one());
  CHECK(kb[0][1].is_zero());

  Matrix stacked = vstack(jordan(3), jordan(3) * jordan(3));
  auto kb2 = kernel_basis(stacked);
  REQUIRE(kb2.size() == 1);
  CHECK(kb2[0][0].is_one());
  CHECK(kb2[0][1].is_zero());
  CHECK(kb2[0][2].is_zero());
}

TEST_CASE("kernel vectors really lie in the kernel") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Rng rng(seed);
    int nr = (int)rng.bounded(1, 6), nc = (int)rng.bounded(1, 6);
    FieldDescriptor f = seed % 2 ? Q : FieldDescriptor::prime(5);
    Matrix a(nr, nc, f);
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nc; ++j) a.set(i, j, Scalar::from_integer(rng.bounded(-3, 3), f));
    auto kb = kernel_basis(a);
    CHECK((int)kb.size() + rank(a) == nc);
    for (const Vector& v : kb) {
      Matrix col = columns_to_matrix({v}, nc, f);
      CHECK((a * col).is_zero());
    }
  }
}

TEST_CASE("invert") {
  CHECK(invert(Matrix::identity(5, Q)) == Matrix::identity(5, Q));
  Matrix d = Matrix::from_int_rows({{2, 0}, {0, 3}}, Q);
  Matrix dinv(2, 2, Q);
  dinv.set(0, 0, Scalar::parse("1/2", Q));
  dinv.set(1, 1, Scalar::parse("1/3", Q));
  CHECK(invert(d) == dinv);

  Matrix u = Matrix::from_int_rows({{1, 2, -1}, {0, 1, 4}, {0, 0, 1}}, Q);
  Matrix uinv = invert(u);
  CHECK(u * uinv == Matrix::identity(3, Q));
  // Unit upper-triangular inverses stay unit upper triangular.
  for (int i = 0; i < 3; ++i) {
    CHECK(uinv.at(i, i).is_one());
    for (int j = 0; j < i; ++j) CHECK(uinv.at(i, j).is_zero());
  }
  CHECK_THROWS_AS(invert(Matrix::zero(2, 2, Q)), std::domain_error);
  CHECK_THROWS_AS(invert(Matrix::zero(2, 3, Q)), std::invalid_argument);
}

TEST_CASE("conjugate") {
  Matrix x = Matrix::from_int_rows({{1, 2}, {3, 4}}, Q);
  CHECK(conjugate(x, Matrix::identity(2, Q)) == x);
  Matrix d = Matrix::from_int_rows({{1, 0}, {0, 2}}, Q);
  CHECK(conjugate(jordan(2), d) == Matrix::from_int_rows({{0, 2}, {0, 0}}, Q));
  CHECK_THROWS_AS(conjugate(x, Matrix::zero(2, 2, Q)), std::domain_error);

  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Rng rng(seed);
    int n = (int)rng.bounded(1, 6);
    FieldDescriptor f = seed % 2 ? Q : FieldDescriptor::prime(11);
    Matrix a(n, n, f);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a.set(i, j, Scalar::from_integer(rng.bounded(-3, 3), f));
    Matrix s = random_invertible(n, f, seed * 77 + 1);
    CHECK(rank(conjugate(a, s)) == rank(a));
  }
}

TEST_CASE("product associativity and inverse round trips") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    Rng rng(seed);
    FieldDescriptor f = seed % 2 ? Q : FieldDescriptor::prime(13);
    int n = (int)rng.bounded(1, 5), m = (int)rng.bounded(1, 5), p = (int)rng.bounded(1, 5),
        q = (int)rng.bounded(1, 5);
    auto rnd = [&](int r, int c) {
      Matrix x(r, c, f);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) x.set(i, j, Scalar::from_integer(rng.bounded(-4, 4), f));
      return x;
    };
    Matrix a = rnd(n, m), b = rnd(m, p), c = rnd(p, q);
    CHECK((a * b) * c == a * (b * c));
    Matrix s = random_invertible(n, f, seed * 31 + 7);
    CHECK(invert(s) * s == Matrix::identity(n, f));
  }
}

TEST_CASE("row space tracker") {
  RowSpace space(3, Q);
  CHECK(space.add({Scalar::from_integer(1, Q), Scalar::from_integer(2, Q),
                   Scalar::from_integer(0, Q)}));
  CHECK(space.add({Scalar::from_integer(0, Q), Scalar::from_integer(1, Q),
                   Scalar::from_integer(1, Q)}));
  CHECK_FALSE(space.add({Scalar::from_integer(1, Q), Scalar::from_integer(3, Q),
                         Scalar::from_integer(1, Q)}));
  CHECK(space.dimension() == 2);
  CHECK(space.contains({Scalar::from_integer(2, Q), Scalar::from_integer(5, Q),
                        Scalar::from_integer(1, Q)}));
  CHECK_FALSE(space.contains({Scalar::zero(Q), Scalar::zero(Q), Scalar::one(Q)}));
}
