#ifndef WEYR_MATRIX_HPP
#define WEYR_MATRIX_HPP

#include <optional>
#include <string>
#include <vector>

#include "weyr/field.hpp"

namespace weyr {

/// Dense row-major matrix over a single coefficient field. Values are
/// immutable in spirit: operations return new matrices, mutation is limited
/// to set() during construction of a value.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0), field_(FieldDescriptor::rational()) {}
  Matrix(int rows, int cols, const FieldDescriptor& f);

  static Matrix zero(int rows, int cols, const FieldDescriptor& f) { return Matrix(rows, cols, f); }
  static Matrix identity(int n, const FieldDescriptor& f);
  /// Builds from integer rows; convenient for literals in tests and tools.
  static Matrix from_int_rows(const std::vector<std::vector<long long>>& rows,
                              const FieldDescriptor& f);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const FieldDescriptor& field() const { return field_; }

  const Scalar& at(int r, int c) const { return data_[index(r, c)]; }
  void set(int r, int c, const Scalar& v);

  bool is_zero() const;
  bool is_identity() const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator*(const Scalar& s) const;
  Matrix operator-() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix transpose() const;
  Matrix pow(int e) const;  // square matrices, e >= 0
  Matrix submatrix(int row0, int col0, int nrows, int ncols) const;
  /// Copies `block` into position (row0, col0) of a copy of *this.
  Matrix with_block(int row0, int col0, const Matrix& block) const;

  std::string str() const;  // bracketed rows, for diagnostics

 private:
  std::size_t index(int r, int c) const { return (std::size_t)r * cols_ + c; }
  int rows_, cols_;
  FieldDescriptor field_;
  std::vector<Scalar> data_;
};

using Vector = std::vector<Scalar>;

/// a * b with dimension and field checks (throws std::invalid_argument).
Matrix mat_mul(const Matrix& a, const Matrix& b);

/// Exact rank by Gaussian elimination (first-nonzero pivot rule).
int rank(const Matrix& a);

/// Basis of the right null space; empty iff the matrix is injective.
std::vector<Vector> kernel_basis(const Matrix& a);

/// Exact inverse; throws std::domain_error on singular input.
Matrix invert(const Matrix& a);

/// s^{-1} * m * s; throws on singular s or size mismatch.
Matrix conjugate(const Matrix& m, const Matrix& s);

/// Reduced row echelon form; optionally reports rank and pivot columns.
Matrix rref(const Matrix& a, int* rank_out = nullptr, std::vector<int>* pivot_cols = nullptr);

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix direct_sum(const Matrix& a, const Matrix& b);
Matrix columns_to_matrix(const std::vector<Vector>& cols, int nrows, const FieldDescriptor& f);

/// Incremental row-space tracker: add rows one by one, each reduced against
/// the pivots collected so far. Used for greedy basis completion and for
/// exact span-membership tests.
class RowSpace {
 public:
  explicit RowSpace(int ncols, const FieldDescriptor& f) : ncols_(ncols), field_(f) {}
  /// Returns true (and absorbs the row) iff v is independent of the rows so far.
  bool add(Vector v);
  /// True iff v lies in the span of the absorbed rows.
  bool contains(Vector v) const;
  int dimension() const { return (int)rows_.size(); }

 private:
  void reduce(Vector& v) const;
  int ncols_;
  FieldDescriptor field_;
  std::vector<Vector> rows_;   // each normalized to leading 1
  std::vector<int> pivots_;    // pivot column of rows_[i]
};

}  // namespace weyr

#endif
