#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cartankit/exact_scalar.hpp"

namespace cartankit {

using Vec = std::vector<ExactScalar>;

// Dense matrix over the exact rationals.  Sized at construction; all
// higher-level code treats instances as immutable values once filled in.
class DenseMatrix {
 public:
  DenseMatrix() : rows_(0), cols_(0) {}
  DenseMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {}

  static DenseMatrix identity(int n);
  static DenseMatrix from_rows(const std::vector<Vec>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  ExactScalar& at(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }
  const ExactScalar& at(int i, int j) const {
    return entries_[static_cast<size_t>(i) * cols_ + j];
  }

  DenseMatrix operator+(const DenseMatrix& rhs) const;
  DenseMatrix operator-(const DenseMatrix& rhs) const;
  DenseMatrix operator*(const DenseMatrix& rhs) const;
  DenseMatrix operator*(const ExactScalar& c) const;
  bool operator==(const DenseMatrix& rhs) const;

  DenseMatrix transpose() const;
  ExactScalar trace() const;
  bool is_zero() const;
  Vec row(int i) const;
  Vec flatten() const { return entries_; }

 private:
  int rows_, cols_;
  Vec entries_;
};

// Rank via fraction-free Gaussian elimination (Bareiss) after clearing row
// denominators; no floating point, no modular shortcuts.
int matrix_rank(const DenseMatrix& m);

// Exact determinant of a square matrix (Bareiss, with the denominator
// clearing factored back in).
ExactScalar determinant(const DenseMatrix& m);

// Basis of the right kernel {x : m x = 0}.  Returned vectors are exact and
// the list is empty exactly when the matrix has full column rank.
std::vector<Vec> kernel_basis(const DenseMatrix& m);

// Solve m x = b exactly.  Returns std::nullopt when inconsistent; when the
// solution space is positive-dimensional an arbitrary solution is returned
// (free coordinates set to zero).
std::optional<Vec> solve_linear(const DenseMatrix& m, const Vec& b);

// Signature (p, q) of a symmetric matrix: p positive and q negative
// eigenvalue counts, computed by exact congruence diagonalisation.
std::pair<int, int> symmetric_signature(const DenseMatrix& m);

// Exact inverse; std::nullopt when singular.
std::optional<DenseMatrix> inverse(const DenseMatrix& m);

int rank_of_vectors(const std::vector<Vec>& vectors);

// Incrementally maintained row-reduced spanning set.  add() reports whether
// the vector enlarged the span; contains() tests membership exactly.
class SpanAccumulator {
 public:
  explicit SpanAccumulator(int ambient_dim) : ambient_(ambient_dim) {}

  bool add(Vec v);
  bool contains(Vec v) const;
  int dim() const { return static_cast<int>(rows_.size()); }
  int ambient_dim() const { return ambient_; }
  const std::vector<Vec>& basis() const { return rows_; }

  bool same_span_as(const SpanAccumulator& other) const;

 private:
  void reduce(Vec& v) const;
  int ambient_;
  std::vector<Vec> rows_;       // forward-reduced, leading entry 1
  std::vector<int> lead_cols_;  // parallel to rows_
};

}  // namespace cartankit
