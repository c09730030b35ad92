#pragma once

#include <array>
#include <map>
#include <vector>

#include "cartankit/lie_so.hpp"

namespace cartankit {

// Chains live in Lambda^c(m) (x) g, where m = g(1) + g(2) is the nilradical
// of the nonnegative parabolic.  A basis chain is a strictly increasing tuple
// of m-basis indices wedged together, tensored with one full-algebra basis
// element; general chains are exact linear combinations of those.

struct ChainKey {
  std::vector<int> wedge;  // strictly increasing indices into the m-basis
  int value = 0;           // flat index into the full graded basis
  bool operator<(const ChainKey& o) const {
    if (wedge != o.wedge) return wedge < o.wedge;
    return value < o.value;
  }
  bool operator==(const ChainKey& o) const { return wedge == o.wedge && value == o.value; }
};

struct Chain {
  std::map<ChainKey, ExactScalar> terms;
  void add_term(const ChainKey& k, const ExactScalar& c);
  bool is_zero() const { return terms.empty(); }
};

class ChainComplex {
 public:
  explicit ChainComplex(int n);

  const GradedBasis& basis() const { return basis_; }
  int m_dim() const { return m_dim_; }

  // The m-basis in flat order: the grade +1 section then the grade +2 pairs.
  int m_flat_to_g(int m_index) const { return m_to_g_[m_index]; }
  int m_grade(int m_index) const { return m_index < basis_.n() ? 1 : 2; }

  // Homogeneity = sum of slot grades + grade of the value; the diagonal
  // torus weight refines each homogeneity into small independent blocks.
  int homogeneity(const ChainKey& k) const;
  std::vector<int> torus_weight(const ChainKey& k) const;

  // The boundary-type operator of the complex: on u_1 ^ ... ^ u_c (x) v it is
  //   sum_{j<k} (-1)^(j+k) {u_j, u_k} ^ (rest) (x) v
  //   + sum_j (-1)^j (rest_j) (x) {u_j, v},
  // positions 1-based and the bracket wedged in front before re-sorting.
  Chain codifferential(const Chain& c) const;

  Chain basis_chain(std::vector<int> wedge, int value) const;
  Chain random_chain(int degree, RationalSampler& rng, int terms = 6) const;

  std::vector<ChainKey> all_keys(int degree) const;

 private:
  GradedBasis basis_;
  int m_dim_;
  std::vector<int> m_to_g_;
  std::vector<std::vector<int>> g_weights_;  // torus weight per g-basis element
  // Precomputed structure constants: m x m -> m coords, m x g -> g coords.
  std::vector<std::vector<std::vector<std::pair<int, ExactScalar>>>> mm_;
  std::vector<std::vector<std::vector<std::pair<int, ExactScalar>>>> mg_;
};

// Whether the codifferential composed with itself vanishes in degrees
// (c) -> (c-1) -> (c-2), verified on every basis chain of degree c.
bool codifferential_squares_to_zero(int n, int c);

struct HomologyBlockReport {
  int homogeneity = 0;
  std::vector<int> weight;
  int dim = 0;
  // Slot-grade patterns present among this block's degree-two keys.
  std::vector<std::array<int, 3>> shapes;  // {grade(u1), grade(u2), grade(value)}
};

struct HomologyResult {
  int n = 0;
  std::map<int, int> dim_by_homogeneity;        // degree-two homology dims
  std::vector<HomologyBlockReport> nonzero_blocks;
  bool image_contained_in_kernel = true;        // checked in every block
  // Every class is representable by chains of shape
  // (grade 1 wedge grade 2) (x) (value of claimed_value_grade).
  bool representable_in_claimed_shape = true;
  int claimed_homogeneity = 0;
  int claimed_value_grade = 0;
  bool value_grade_nonnegative = false;         // the dichotomy verdict
};

// Full degree-two homology of the complex, organised by homogeneity, with
// exact per-block kernel/image computations.
HomologyResult homology_analysis(int n);

}  // namespace cartankit
