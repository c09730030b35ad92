#pragma once

#include <string>
#include <vector>

#include "cartankit/dense_matrix.hpp"
#include "cartankit/rng.hpp"

namespace cartankit {

// The split orthogonal Lie algebra so(n+1, n), realised as (2n+1)x(2n+1)
// matrices X with X^t J + J X = 0 for the anti-diagonal form J below, carries
// a |2|-grading g = g(-2) + g(-1) + g(0) + g(1) + g(2) induced by the block
// decomposition
//
//   X = [ A    v    B  ]      rows/cols 0..n-1   : "top"
//       [ w    0   -v^t]      row/col  n         : "middle"
//       [ C   -w^t -A^t]      rows/cols n+1..2n  : "bottom"
//
// with A arbitrary (grade 0), v, w column vectors (grades +1 / -1), and B, C
// skew-symmetric (grades +2 / -2).  This module provides exact arithmetic in
// that realisation together with a fixed graded basis.

DenseMatrix defining_form(int n);  // J = antidiag(Id_n, 1, Id_n)

class LieElement {
 public:
  LieElement() : n_(0) {}

  static LieElement zero(int n);
  // Builds the embedded matrix from block data; B and C must be skew.
  static LieElement from_blocks(int n, const DenseMatrix& A, const Vec& v,
                                const DenseMatrix& B, const Vec& w, const DenseMatrix& C);
  // Accepts a raw (2n+1)x(2n+1) matrix and verifies X^t J + J X = 0.
  static LieElement from_embedded(int n, DenseMatrix m);

  int n() const { return n_; }
  int ambient_size() const { return 2 * n_ + 1; }
  const DenseMatrix& matrix() const { return m_; }

  // Block reads (valid index ranges: 0 <= a, b < n).
  ExactScalar block_A(int a, int b) const { return m_.at(a, b); }
  ExactScalar block_v(int i) const { return m_.at(i, n_); }
  ExactScalar block_B(int j, int k) const { return m_.at(j, n_ + 1 + k); }
  ExactScalar block_w(int i) const { return m_.at(n_, i); }
  ExactScalar block_C(int k, int j) const { return m_.at(n_ + 1 + k, j); }

  LieElement operator+(const LieElement& rhs) const;
  LieElement operator-(const LieElement& rhs) const;
  LieElement operator*(const ExactScalar& c) const;
  bool operator==(const LieElement& rhs) const { return m_ == rhs.m_; }
  bool is_zero() const { return m_.is_zero(); }

  // Component of the given grade in {-2,-1,0,1,2}.
  LieElement graded_part(int grade) const;

 private:
  int n_;
  DenseMatrix m_;
};

LieElement bracket(const LieElement& x, const LieElement& y);

// The trace form tr(xy): an invariant, nondegenerate symmetric form.
ExactScalar invariant_form(const LieElement& x, const LieElement& y);

struct BasisLabel {
  int grade;     // -2, -1, 0, 1, 2
  int i = 0;     // first index
  int j = 0;     // second index (pair grades and grade 0 only)
  std::string text() const;
};

// Fixed ordered basis adapted to the grading.  Flat order: grade -2 pairs
// (j<k, lexicographic), grade -1, grade 0 (all (a,b)), grade +1, grade +2
// pairs.  coordinates() and element() are exact mutual inverses.
class GradedBasis {
 public:
  explicit GradedBasis(int n);

  int n() const { return n_; }
  int dim() const { return static_cast<int>(elements_.size()); }
  int pair_count() const { return n_ * (n_ - 1) / 2; }

  const LieElement& element(int flat) const { return elements_[flat]; }
  const BasisLabel& label(int flat) const { return labels_[flat]; }
  const LieElement& grading_element() const { return eps0_; }

  // Flat index helpers (grade sections in flat order).
  int index_m2(int j, int k) const;  // j < k
  int index_m1(int i) const;
  int index_0(int a, int b) const;
  int index_p1(int i) const;
  int index_p2(int j, int k) const;  // j < k
  int grade_of(int flat) const { return labels_[flat].grade; }
  int section_begin(int grade) const;
  int section_dim(int grade) const;

  Vec coordinates(const LieElement& x) const;
  LieElement from_coordinates(const Vec& coords) const;

  // Dual basis w.r.t. the invariant form, computed by inverting its Gram
  // matrix (no per-element sign bookkeeping).
  const std::vector<LieElement>& dual_basis() const;

  LieElement random_element(RationalSampler& rng) const;

 private:
  int n_;
  std::vector<LieElement> elements_;
  std::vector<BasisLabel> labels_;
  LieElement eps0_;
  mutable std::vector<LieElement> dual_;  // built lazily
};

// Structural reports --------------------------------------------------------

struct NilradicalReport {
  bool bracket_into_subspace = false;   // [p, p-perp] stays in p-perp
  bool step_two_nilpotent = false;      // [p-perp, [p-perp, p-perp]] = 0
  bool is_orthocomplement = false;      // p-perp = orthocomplement of p
  bool ok() const { return bracket_into_subspace && step_two_nilpotent && is_orthocomplement; }
};

// p = g(0)+g(1)+g(2); its nilradical p-perp = g(1)+g(2) is checked to be a
// step-two nilpotent ideal equal to the trace-form orthocomplement of p.
NilradicalReport nilradical_check(int n);

struct CyclicDistributionReport {
  int dim_h = 0;
  bool torus_preserves_h = false;       // [h, diagonal traceless] stays in h
  bool first_bracket_is_transpose = false;   // span[h,h] = h^t
  bool second_bracket_recovers_h = false;    // span[h^t,h^t] = h
  bool ok() const {
    return dim_h == 3 && torus_preserves_h && first_bracket_is_transpose &&
           second_bracket_recovers_h;
  }
};

// Inside sl(3): h = span{E12, E23, E31} is a 3-dimensional torus-invariant
// subspace whose iterated brackets alternate between h^t and h.
CyclicDistributionReport sl3_distribution_check();

}  // namespace cartankit
