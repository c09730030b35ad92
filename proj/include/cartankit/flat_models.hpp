#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cartankit/lie_so.hpp"
#include "cartankit/poly.hpp"
#include "cartankit/rng.hpp"

namespace cartankit {

// Polynomial frames on the nilpotent group chart R^(n + n(n-1)/2) with
// coordinates x_1..x_n, y_(j|k) (j<k).  The unmodified frame
//
//   X_i = d/dx_i - sum_(p>i) x_p d/dy_(i|p),      Y_(j|k) = d/dy_(j|k)
//
// satisfies [X_j, X_k] = Y_(j|k) exactly.  Modified frames add polynomial
// corrections to X_1 and X_2 in Y-directions whose pair indices are disjoint
// from {(1,2), (1,3), (2,3)}; the bracket relations survive unchanged while
// the induced connection acquires curvature.

enum class Modification { None, SingleY34, General };

// Exponent data is kept 1-based, matching the display conventions used in the
// JSON model files; build_model() converts internally.
struct ModelSpec {
  int n = 3;
  Modification mod = Modification::None;
  std::map<std::pair<int, int>, int> beta;  // (j,k) with 3<=j<k<=n -> exponent
  std::map<int, int> gamma;                 // j in [4,n] -> exponent
  std::map<int, int> delta;                 // j in [4,n] -> exponent
};

// Fills every admissible slot of each family with pairwise-distinct exponents.
ModelSpec saturated_general(int n);

struct ModelParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ModelSpec parse_model_json(const std::string& text);
ModelSpec parse_model_file(const std::string& path);

// Vector field with polynomial components, one per chart coordinate.
using PolyVF = std::vector<Poly>;

PolyVF vf_zero(int nvars);
bool vf_is_zero(const PolyVF& v);
PolyVF vf_add(const PolyVF& a, const PolyVF& b);
PolyVF vf_sub(const PolyVF& a, const PolyVF& b);
// Lie bracket of vector fields: [X,Y]^k = sum_j (X^j d_j Y^k - Y^j d_j X^k).
PolyVF vf_bracket(const PolyVF& X, const PolyVF& Y);
// Directional derivative of a polynomial along a vector field.
Poly vf_apply(const PolyVF& X, const Poly& f);

class FrameModel {
 public:
  explicit FrameModel(const ModelSpec& spec);

  const ModelSpec& spec() const { return spec_; }
  int n() const { return n_; }
  int nvars() const { return nvars_; }
  int frame_size() const { return nvars_; }
  const GradedBasis& basis() const { return basis_; }

  // Chart coordinate indices (0-based labels).
  int x_var(int i) const { return i; }
  int y_var(int j, int k) const;  // 0-based pair j<k

  // Frame order: X'_1..X'_n first, then the Y fields in pair order.
  int frame_x(int i) const { return i; }
  int frame_y(int j, int k) const;  // 0-based pair j<k
  const PolyVF& frame(int f) const { return frame_[f]; }
  std::string frame_label(int f) const;

  // Identification of frame labels with the negative part of the algebra.
  int g_index_of_frame(int f) const;
  Vec ident_coords(int f) const;

  // Expands a vector field over the frame; the expansion is triangular, so no
  // linear solve is needed.  Throws if the field is not in the frame span.
  std::vector<Poly> expand_in_frame(const PolyVF& vf) const;

  // Largest exponent appearing in the modification data (1 when none).
  int max_exponent() const;

 private:
  ModelSpec spec_;
  int n_;
  int nvars_;
  GradedBasis basis_;
  std::vector<PolyVF> frame_;
};

// Section of the adjoint bundle in the flat trivialisation: polynomial
// coefficients over the fixed graded basis of g.
struct ASection {
  int nvars = 0;
  std::map<int, Poly> comp;  // flat g index -> coefficient

  static ASection zero(int nvars) { return ASection{nvars, {}}; }
  void add(int gidx, const Poly& p);
  bool is_zero() const;
  ASection operator+(const ASection& o) const;
  ASection operator-(const ASection& o) const;
  ASection scaled(const ExactScalar& c) const;
  Vec eval(const GradedBasis& basis, const Vec& point) const;
};

// Curvature of the induced connection: the failure of the frame bracket to
// match the algebra bracket of the identified elements.
class Curvature {
 public:
  explicit Curvature(const FrameModel& m);

  // kappa on frame fields, any order (antisymmetric accessor).
  ASection eval_pair(int fa, int fb) const;
  const std::map<std::pair<int, int>, ASection>& stored() const { return val_; }
  std::vector<std::pair<int, int>> support() const;

 private:
  const FrameModel* model_;
  std::map<std::pair<int, int>, ASection> val_;  // keys a<b, nonzero values only
};

struct NormalityReport {
  bool ok = false;
  std::vector<std::string> nonzero_at;  // frame labels where the image fails to vanish
};

// Evaluates the homology-normalisation operator on the curvature:
//   (d* kappa)(X) = sum_l { Z^l, kappa(Z_l, X) } - 1/2 kappa({Z^l, X}_-, Z_l)
// over the frame basis Z_l with trace-form duals Z^l, and reports whether it
// vanishes identically.
NormalityReport normality_check(const FrameModel& m, const Curvature& kappa);

// Covariant derivative of an adjoint-bundle section along a frame direction:
// directional derivative of the coefficients plus the algebraic action of the
// identified direction.
ASection tractor_derivative(const FrameModel& m, int dir_frame, const ASection& s);

struct HolonomyResult {
  int dim = 0;
  std::vector<Vec> span_basis;              // g-coordinates
  std::vector<std::string> value_labels;    // labels of basis elements hit exactly
  bool closed_under_bracket = false;
  bool abelian = false;
  bool origin_span_equals_full = false;     // origin evaluations already saturate
  bool avoids_distribution_pairs = false;   // no Y[1|2], Y[1|3], Y[2|3] component
  int stop_order = 0;
};

// Span of all curvature values and their iterated covariant derivatives,
// evaluated at the origin and at sampled rational points, with a two-stable-
// orders stopping rule bounded by the modification exponents.
HolonomyResult infinitesimal_holonomy(const FrameModel& m, const Curvature& kappa,
                                      RationalSampler& rng);

struct LeadingTermReport {
  bool all_exact = false;          // each extraction equals the expected basis vector
  bool pure_grade_minus2 = false;  // no contamination in other grades
  std::vector<std::string> lines;
};

// For each modification entry with exponent m, differentiating the matching
// curvature value m-1 times along its source Y-direction and evaluating at
// the origin must isolate exactly the target basis vector.
LeadingTermReport leading_term_extraction(const FrameModel& m, const Curvature& kappa);

}  // namespace cartankit
