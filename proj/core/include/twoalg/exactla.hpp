#pragma once

// Exact rational linear algebra: scalars, dense matrices, sparse rows with an
// incremental echelon basis, and subspaces of Q^n in canonical form.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace twoalg {

using Scalar = mpq_class;

// Always "p/q" with q >= 1.
std::string to_string(const Scalar& q);
// Accepts "p", "p/q", with optional sign; throws InputError otherwise.
Scalar parse_scalar(const std::string& text);

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows, int cols = -1);
  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& at(int r, int c) { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Scalar& at(int r, int c) const { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
  std::vector<Scalar> row(int r) const;
  std::vector<std::vector<Scalar>> to_rows() const;
  Matrix transposed() const;
  bool is_zero() const;

  // Appends a row; a matrix with zero rows adopts the row length.
  void push_row(const std::vector<Scalar>& row);

  friend bool operator==(const Matrix& a, const Matrix& b) = default;
  friend Matrix operator*(const Matrix& a, const Matrix& b);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Scalar> entries_;
};

std::vector<Scalar> apply(const Matrix& m, const std::vector<Scalar>& x);

struct RrefResult {
  Matrix form;
  int rank = 0;
  std::vector<int> pivots;
};

RrefResult rref(const Matrix& m);
int rank(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

// Sparse vectors: sorted by index, no stored zeros.
using SparseVec = std::vector<std::pair<int, Scalar>>;

SparseVec sparse_from_dense(const std::vector<Scalar>& v);
std::vector<Scalar> dense_from_sparse(const SparseVec& v, int size);
// y + a*x
SparseVec axpy(const SparseVec& y, const Scalar& a, const SparseVec& x);
SparseVec scaled(const SparseVec& x, const Scalar& a);
Scalar coefficient(const SparseVec& v, int index);

// Accumulates sparse sums with arbitrary insertion order.
class SparseBuilder {
 public:
  void add(int index, const Scalar& value);
  void add(const SparseVec& v, const Scalar& coef = 1);
  SparseVec take();
  bool empty() const { return terms_.empty(); }

 private:
  std::vector<std::pair<int, Scalar>> terms_;
};

// Incremental row echelon basis. Pivots are chosen among columns below
// pivot_limit; columns at or above it ride along (used for kernels).
class RowEchelon {
 public:
  explicit RowEchelon(int cols, int pivot_limit = -1);

  SparseVec reduce(SparseVec v) const;
  bool insert(const SparseVec& v);
  // Like insert, but returns the reduced remainder when dependent.
  std::optional<SparseVec> insert_or_remainder(const SparseVec& v);
  bool contains(const SparseVec& v) const;

  int rank() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  bool is_pivot(int col) const { return col < pivot_limit_ && pivot_row_[col] >= 0; }
  std::vector<int> pivot_columns() const;
  const SparseVec& row_for_pivot(int col) const { return rows_[pivot_row_[col]]; }
  std::vector<SparseVec> rows() const { return rows_; }

  // Back-substitutes so every row vanishes on the other pivot columns.
  void make_reduced();

 private:
  int cols_;
  int pivot_limit_;
  std::vector<int> pivot_row_;
  std::vector<int> row_pivot_;
  std::vector<SparseVec> rows_;
};

int rank_of(const std::vector<SparseVec>& rows, int cols);
// Basis of {x : sum_j x_j rows[j] = 0}, as sparse vectors of length rows.size().
std::vector<SparseVec> kernel_of_rows(const std::vector<SparseVec>& rows, int cols);

// Subspace of Q^n, stored by its reduced row echelon basis.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(int ambient);
  static Subspace span(int ambient, const std::vector<std::vector<Scalar>>& vectors);
  static Subspace full(int ambient);

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  std::vector<Scalar> basis_vector(int i) const { return basis_.row(i); }
  const std::vector<int>& pivots() const { return pivots_; }
  bool contains(const std::vector<Scalar>& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  int ambient_ = 0;
  Matrix basis_;
  std::vector<int> pivots_;
};

Subspace intersect(const Subspace& u, const Subspace& w);
Subspace sum(const Subspace& u, const Subspace& w);
Subspace coordinate_complement(const Subspace& u);
// Projection onto t with kernel u, in coordinates of t's basis (dim t x n).
Matrix projection_along(const Subspace& u, const Subspace& t);

// Entries drawn uniformly from [-9, 9]; resamples rank-deficient draws.
Subspace random_subspace(int n, int d, std::mt19937_64& rng);
Subspace random_subspace(int n, int d, std::uint64_t seed);
int random_entry(std::mt19937_64& rng);

}  // namespace twoalg
