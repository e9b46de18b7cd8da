#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hcell/scalar.hpp"

namespace hcell {

// Sparse vector: (index, coefficient) pairs, strictly increasing indices,
// no zero coefficients.
using SparseVec = std::vector<std::pair<int, Scalar>>;

SparseVec sparse_normalize(SparseVec v);
SparseVec sparse_add(const SparseVec& a, const SparseVec& b);
SparseVec sparse_scale(const SparseVec& a, const Scalar& c);

// Dense row-major matrix over an exact field.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols, const Field& f);

  static Matrix identity(int n, const Field& f);
  static Matrix zeros(int rows, int cols, const Field& f) { return Matrix(rows, cols, f); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scaled(const Scalar& c) const;
  Matrix transpose() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool is_zero() const;
  bool is_identity() const;

  Scalar trace() const;

  Matrix block(int r0, int c0, int nr, int nc) const;
  void set_block(int r0, int c0, const Matrix& m);

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;  // this * v
  SparseVec apply_sparse(const SparseVec& v) const;

  Matrix col_matrix(const std::vector<Scalar>& v) const;  // column vector helper
  std::vector<Scalar> column(int j) const;
  std::vector<Scalar> row_vec(int i) const;

  // Kronecker product: (A ⊗ B)[(i*Br+k), (j*Bc+l)] = A[i,j]·B[k,l].
  static Matrix kron(const Matrix& a, const Matrix& b);

  static Matrix hcat(const Matrix& a, const Matrix& b);
  static Matrix vcat(const Matrix& a, const Matrix& b);
  // Block-diagonal direct sum.
  static Matrix dsum(const Matrix& a, const Matrix& b);

  int rank() const;
  std::optional<Matrix> inverse() const;
  bool invertible() const { return rows_ == cols_ && rank() == rows_; }

  // Basis of { x : A x = 0 }, returned as columns.
  Matrix nullspace() const;

  // Solve A X = B; nullopt if inconsistent.
  std::optional<Matrix> solve(const Matrix& b) const;

  // Column space: basis columns (as a matrix) and their pivot column indices.
  std::pair<Matrix, std::vector<int>> column_space() const;

  std::string str() const;

 private:
  int rows_, cols_;
  Field field_;
  std::vector<Scalar> data_;
};

// Reduced row echelon form in place; returns pivot column indices. If
// `transform` is non-null it is multiplied by the performed row operations
// (so transform * original == result).
std::vector<int> rref(Matrix& m, Matrix* transform = nullptr);

// Incremental sparse reduced echelon structure over a fixed ambient
// dimension. Rows are kept fully reduced against each other.
class Echelon {
 public:
  Echelon(int dim, const Field& f) : dim_(dim), field_(f) {}

  // Reduces v against current rows; if a nonzero residual remains, inserts
  // it as a new row and returns true.
  bool insert(SparseVec v);

  // Fully reduces v; the result is supported on non-pivot coordinates.
  SparseVec reduce(SparseVec v) const;

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  bool is_pivot(int i) const { return pivot_of_.count(i) > 0; }
  // Sorted list of non-pivot coordinates (a basis of the quotient).
  std::vector<int> free_coordinates() const;
  const std::vector<SparseVec>& rows() const { return rows_; }

 private:
  int dim_;
  Field field_;
  std::vector<SparseVec> rows_;                 // normalized, pivot coeff 1
  std::vector<int> pivots_;                     // pivot index per row
  std::map<int, int> pivot_of_;                 // pivot coord -> row idx
};

// Column-major sparse matrix; efficient at applying to sparse vectors.
class SparseMat {
 public:
  SparseMat() : rows_(0) {}
  SparseMat(int rows, int cols) : rows_(rows), cols_(cols_init(cols)) {}

  int rows() const { return rows_; }
  int cols() const { return static_cast<int>(cols_.size()); }
  void set_col(int j, SparseVec v) { cols_[j] = std::move(v); }
  const SparseVec& col(int j) const { return cols_[j]; }

  SparseVec apply(const SparseVec& v) const;
  std::vector<Scalar> apply_dense(const std::vector<Scalar>& v, const Field& f) const;
  Matrix to_dense(const Field& f) const;
  static SparseMat from_dense(const Matrix& m);

 private:
  static std::vector<SparseVec> cols_init(int n) { return std::vector<SparseVec>(n); }
  int rows_;
  std::vector<SparseVec> cols_;
};

}  // namespace hcell
