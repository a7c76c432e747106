#include "weyr/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace weyr {

Matrix::Matrix(int rows, int cols, const FieldDescriptor& f)
    : rows_(rows), cols_(cols), field_(f) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  data_.assign((std::size_t)rows * cols, Scalar::zero(f));
}

Matrix Matrix::identity(int n, const FieldDescriptor& f) {
  Matrix m(n, n, f);
  Scalar one = Scalar::one(f);
  for (int i = 0; i < n; ++i) m.set(i, i, one);
  return m;
}

Matrix Matrix::from_int_rows(const std::vector<std::vector<long long>>& rows,
                             const FieldDescriptor& f) {
  int nr = (int)rows.size();
  int nc = nr == 0 ? 0 : (int)rows[0].size();
  Matrix m(nr, nc, f);
  for (int i = 0; i < nr; ++i) {
    if ((int)rows[i].size() != nc) throw std::invalid_argument("ragged row list");
    for (int j = 0; j < nc; ++j) m.set(i, j, Scalar::from_integer(rows[i][j], f));
  }
  return m;
}

void Matrix::set(int r, int c, const Scalar& v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("matrix index out of range");
  if (v.field() != field_) throw std::invalid_argument("entry field mismatch");
  data_[index(r, c)] = v;
}

bool Matrix::is_zero() const {
  for (const Scalar& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const Scalar& s = at(i, j);
      if (i == j ? !s.is_one() : !s.is_zero()) return false;
    }
  return true;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in +");
  if (field_ != o.field_) throw std::invalid_argument("field mismatch in +");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + (-o); }

Matrix Matrix::operator-() const {
  Matrix r = *this;
  for (Scalar& s : r.data_) s = -s;
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const { return mat_mul(*this, o); }

Matrix Matrix::operator*(const Scalar& s) const {
  Matrix r = *this;
  for (Scalar& x : r.data_) x *= s;
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) return false;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (data_[i] != o.data_[i]) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
  return r;
}

Matrix Matrix::pow(int e) const {
  if (!is_square()) throw std::invalid_argument("pow of non-square matrix");
  if (e < 0) throw std::invalid_argument("negative matrix power");
  Matrix acc = identity(rows_, field_);
  for (int i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

Matrix Matrix::submatrix(int row0, int col0, int nrows, int ncols) const {
  if (row0 < 0 || col0 < 0 || row0 + nrows > rows_ || col0 + ncols > cols_)
    throw std::out_of_range("submatrix out of range");
  Matrix r(nrows, ncols, field_);
  for (int i = 0; i < nrows; ++i)
    for (int j = 0; j < ncols; ++j) r.set(i, j, at(row0 + i, col0 + j));
  return r;
}

Matrix Matrix::with_block(int row0, int col0, const Matrix& block) const {
  Matrix r = *this;
  for (int i = 0; i < block.rows(); ++i)
    for (int j = 0; j < block.cols(); ++j) r.set(row0 + i, col0 + j, block.at(i, j));
  return r;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j).str();
    os << "]";
  }
  os << "]";
  return os.str();
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("shape mismatch in product");
  if (a.field() != b.field()) throw std::invalid_argument("field mismatch in product");
  Matrix r(a.rows(), b.cols(), a.field());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) {
        const Scalar& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        r.set(i, j, r.at(i, j) + aik * bkj);
      }
    }
  return r;
}

Matrix rref(const Matrix& a, int* rank_out, std::vector<int>* pivot_cols) {
  Matrix m = a;
  int nr = m.rows(), nc = m.cols();
  int rank = 0;
  std::vector<int> pivots;
  for (int col = 0; col < nc && rank < nr; ++col) {
    // Deterministic pivot rule: first nonzero entry in column order.
    int pivot = -1;
    for (int r = rank; r < nr; ++r)
      if (!m.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = 0; j < nc; ++j) {
        Scalar tmp = m.at(rank, j);
        m.set(rank, j, m.at(pivot, j));
        m.set(pivot, j, tmp);
      }
    Scalar inv = m.at(rank, col).inverse();
    for (int j = col; j < nc; ++j) m.set(rank, j, m.at(rank, j) * inv);
    for (int r = 0; r < nr; ++r) {
      if (r == rank || m.at(r, col).is_zero()) continue;
      Scalar factor = m.at(r, col);
      for (int j = col; j < nc; ++j) m.set(r, j, m.at(r, j) - factor * m.at(rank, j));
    }
    pivots.push_back(col);
    ++rank;
  }
  if (rank_out) *rank_out = rank;
  if (pivot_cols) *pivot_cols = pivots;
  return m;
}

int rank(const Matrix& a) {
  int r = 0;
  rref(a, &r);
  return r;
}

std::vector<Vector> kernel_basis(const Matrix& a) {
  int r = 0;
  std::vector<int> pivots;
  Matrix e = rref(a, &r, &pivots);
  int nc = a.cols();
  std::vector<char> is_pivot(nc, 0);
  for (int c : pivots) is_pivot[c] = 1;
  std::vector<Vector> basis;
  Scalar zero = Scalar::zero(a.field()), one = Scalar::one(a.field());
  for (int free = 0; free < nc; ++free) {
    if (is_pivot[free]) continue;
    Vector v(nc, zero);
    v[free] = one;
    for (int i = 0; i < (int)pivots.size(); ++i) v[pivots[i]] = -e.at(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix invert(const Matrix& a) {
  if (!a.is_square()) throw std::invalid_argument("inverse of non-square matrix");
  int n = a.rows();
  Matrix aug = hstack(a, Matrix::identity(n, a.field()));
  int r = 0;
  std::vector<int> pivots;
  Matrix e = rref(aug, &r, &pivots);
  // All pivots must land in the left block, i.e. it reduced to the identity.
  if (n > 0 && (pivots.size() < (std::size_t)n || pivots[n - 1] != n - 1))
    throw std::domain_error("matrix is singular");
  return e.submatrix(0, n, n, n);
}

Matrix conjugate(const Matrix& m, const Matrix& s) {
  if (!m.is_square() || !s.is_square() || m.rows() != s.rows())
    throw std::invalid_argument("conjugation size mismatch");
  return invert(s) * m * s;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
  if (a.field() != b.field()) throw std::invalid_argument("hstack field mismatch");
  Matrix r(a.rows(), a.cols() + b.cols(), a.field());
  return r.with_block(0, 0, a).with_block(0, a.cols(), b);
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
  if (a.field() != b.field()) throw std::invalid_argument("vstack field mismatch");
  Matrix r(a.rows() + b.rows(), a.cols(), a.field());
  return r.with_block(0, 0, a).with_block(a.rows(), 0, b);
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) throw std::invalid_argument("direct_sum field mismatch");
  Matrix r(a.rows() + b.rows(), a.cols() + b.cols(), a.field());
  return r.with_block(0, 0, a).with_block(a.rows(), a.cols(), b);
}

Matrix columns_to_matrix(const std::vector<Vector>& cols, int nrows, const FieldDescriptor& f) {
  Matrix r(nrows, (int)cols.size(), f);
  for (int j = 0; j < (int)cols.size(); ++j) {
    if ((int)cols[j].size() != nrows) throw std::invalid_argument("column length mismatch");
    for (int i = 0; i < nrows; ++i) r.set(i, j, cols[j][i]);
  }
  return r;
}

void RowSpace::reduce(Vector& v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar& c = v[pivots_[i]];
    if (c.is_zero()) continue;
    Scalar factor = c;  // rows are normalized to leading 1
    for (int j = pivots_[i]; j < ncols_; ++j) v[j] -= factor * rows_[i][j];
  }
}

bool RowSpace::add(Vector v) {
  if ((int)v.size() != ncols_) throw std::invalid_argument("row length mismatch");
  reduce(v);
  int pivot = -1;
  for (int j = 0; j < ncols_; ++j)
    if (!v[j].is_zero()) {
      pivot = j;
      break;
    }
  if (pivot < 0) return false;
  Scalar inv = v[pivot].inverse();
  for (int j = pivot; j < ncols_; ++j) v[j] *= inv;
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

bool RowSpace::contains(Vector v) const {
  reduce(v);
  for (const Scalar& s : v)
    if (!s.is_zero()) return false;
  return true;
}

}  // namespace weyr
