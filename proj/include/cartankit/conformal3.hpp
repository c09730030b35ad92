#pragma once

#include <array>
#include <vector>

#include "cartankit/flat_models.hpp"
#include "cartankit/poly.hpp"
#include "cartankit/rng.hpp"

namespace cartankit {

// Conformal structure attached to the rank-three distribution spanned by the
// unmodified n=3 frame.  A never-zero volume density sigma = s * (dual frame
// volume) determines a torsion-free partial connection on the distribution by
// a Levi-Civita-like solve; the transverse frame it generates carries an
// exact split-signature metric.
//
// Scalars live in the localisation at s: every quantity is a polynomial
// divided by a power of s, kept exact.

struct SLoc {
  Poly num;
  int spow = 0;  // value = num / s^spow

  bool is_zero() const { return num.is_zero(); }
};

SLoc sloc_from_poly(const Poly& p);
SLoc sloc_add(const SLoc& a, const SLoc& b, const Poly& s);
SLoc sloc_sub(const SLoc& a, const SLoc& b, const Poly& s);
SLoc sloc_neg(const SLoc& a);
SLoc sloc_mul(const SLoc& a, const SLoc& b);
SLoc sloc_scale(const SLoc& a, const ExactScalar& c);
// Derivative along a polynomial vector field (quotient rule, exact).
SLoc sloc_deriv(const SLoc& a, const PolyVF& dir, const Poly& s);
ExactScalar sloc_eval(const SLoc& a, const Vec& pt, const Poly& s);
bool sloc_equal(const SLoc& a, const SLoc& b, const Poly& s);

// nabla_(X_a) X_b = sum_e coeff[a][b][e] X_e
struct PartialConnection {
  std::array<std::array<std::array<SLoc, 3>, 3>, 3> coeff;

  const SLoc& gamma(int a, int b, int e) const { return coeff[a][b][e]; }
};

// Solves 3 sigma(nabla_A B, C, D) = A.sigma(B,C,D) + 2 B.sigma(A,C,D)
//   + C.sigma(A,B,D) - D.sigma(A,B,C) + (double-bracket correction terms)
// in the gauge where sigma is parallel.  Requires an n=3 unmodified model.
PartialConnection preferred_connection(const FrameModel& m, const Poly& sigma);

struct ConnectionChecks {
  bool torsion_identity = false;        // nabla_A B - nabla_B A - Pi([A,B]) = 0
  bool levi_compatibility = false;      // {nabla_A B,C} + {B,nabla_A C}
                                        //   - q([A,[B,C]]) + {A, nabla_B C - nabla_C B} = 0
  bool two_on_h_directions = false;     // nabla_A q(Z) - q([A,Z]) + {A, Pi(Z)} = 0, Z in H
  bool two_on_transverse_directions = false;  // same display, Z transverse
  bool volume_parallel = false;         // the solved connection annihilates sigma

  bool ok() const {
    return torsion_identity && levi_compatibility && two_on_h_directions &&
           two_on_transverse_directions && volume_parallel;
  }
};

ConnectionChecks run_connection_checks(const FrameModel& m, const Poly& sigma,
                                       const PartialConnection& conn);

// Adds a constant to one connection coefficient; the checks must then fail.
bool checks_detect_perturbation(const FrameModel& m, const Poly& sigma,
                                const PartialConnection& conn);

// Transverse frame U_(j|k) = [X_j, X_k] - nabla_j X_k + nabla_k X_j; h-parts
// are the H-corrections: Y_(j|k) = U_(j|k) + hpart(j,k).
std::array<SLoc, 3> transverse_hpart(const FrameModel& m, const PartialConnection& conn,
                                     int j, int k);

// 6x6 metric matrix over the coordinate frame (Y12, Y13, Y23, X1, X2, X3):
// cross block entries eps(j,k,l)/s, remaining blocks from the H-corrections.
std::vector<std::vector<SLoc>> metric_matrix(const FrameModel& m, const Poly& sigma,
                                             const PartialConnection& conn);

struct MetricReport {
  bool cross_block_exact = false;    // (Y,X)-block is eps/s entrywise
  bool yy_block_vanishes = false;    // no transverse-transverse component
  bool weyl_invariant = false;       // coordinate matrix unchanged under grade-one shifts
  bool scales_inversely = false;     // sigma -> 3 sigma divides the matrix by 3
  bool signature_split = false;      // signature (3,3) at every sample point
};

MetricReport run_metric_checks(const FrameModel& m, const Poly& sigma,
                               const PartialConnection& conn, RationalSampler& rng);

// Ten fixed rational sample points in the n=3 chart.
std::vector<Vec> standard_sample_points();

// A fixed non-constant density whose value is nonzero at every standard
// sample point.
Poly standard_sigma();

// Frame fields are pointwise independent from the transverse frame at the
// sample points (6x6 determinant nonzero).
bool frames_independent_at_samples(const FrameModel& m, const Poly& sigma,
                                   const PartialConnection& conn);

}  // namespace cartankit
