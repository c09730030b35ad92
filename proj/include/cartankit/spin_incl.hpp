#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cartankit/dense_matrix.hpp"

namespace cartankit {

// Low-rank isomorphisms realised on second exterior powers, plus the
// stabiliser computations that cut the 14-dimensional exceptional algebra
// and the 21-dimensional four-form stabiliser out of split orthogonal
// algebras.  Everything is a finite exact linear-algebra computation.

struct EmbeddingReport {
  int source_dim = 0;                      // expected 15
  int image_rank = 0;                      // rank of the image span
  bool injective = false;                  // image_rank == source_dim
  bool bracket_preserving = false;         // commutators map to commutators
  bool lands_in_orthogonal = false;        // images are skew for the form
  std::pair<int, int> target_signature{};  // signature of the invariant form
};

// sl(4) acting on Lambda^2 R^4 with the wedge pairing: a (3,3) form.
EmbeddingReport sl4_to_so33();

struct ConjugationReport {
  EmbeddingReport embedding;               // target signature (4,2)
  bool conjugation_squares_to_identity = false;
  int fixed_space_dim = 0;                 // 6
};

// su(2,2) acting on the real form of Lambda^2 C^4 fixed by the pairing
// conjugation: a (4,2) form.
ConjugationReport su22_to_so42();

struct FourFormStabiliserReport {
  int ambient_dim = 0;          // dim of the (4,4) orthogonal algebra = 28
  int dim = 0;                  // 21 for the calibration form, ambient for 0
  bool su22_image_contained = false;
};

// Stabiliser in so(4,4) of the four-form (real part of the complex volume
// form) minus (wedge square of the standard two-form); pass calibrated=false
// to run the zero-form control.
FourFormStabiliserReport four_form_stabiliser(bool calibrated = true);

struct ThetaStabiliserReport {
  std::pair<int, int> ambient_signature{}; // norm on imaginaries: (3,4)
  int ambient_dim = 0;                     // dim so(3,4) = 21
  int dim = 0;                             // 14
  bool equals_derivations_on_imaginaries = false;
};

// Stabiliser of the triple form N(xy, z) on imaginary split octonions inside
// so(3,4), compared as a subspace with the derivation algebra restricted to
// the imaginaries.
ThetaStabiliserReport theta_stabiliser();

struct InclusionReport {
  std::string name;
  int ambient_dim = 0;          // big orthogonal algebra
  int subalg_dim = 0;           // stabiliser g of the distinguished vector
  int parabolic_dim = 0;        // p-hat, stabiliser of the chosen null plane
  int intersection_dim = 0;     // dim (g cap p-hat)
  bool transverse = false;      // g + p-hat = ambient
  int parabolic_in_g_dim = -1;  // dim p (where the claim involves it)
  bool intersection_equals_p = false;
};

// Vector-stabiliser inclusion so(n+1,n) in so(n+1,n+1) together with
// compatible null-plane stabilisers; intersection must equal the smaller
// parabolic and the two sides must be transverse.  Valid for n in 2..5.
InclusionReport spinorial_inclusion(int n);

// so(4,2) in so(4,3): the intersection with the null-plane stabiliser has
// dimension 9 and the configuration is transverse.
InclusionReport cr_inclusion();

struct LagrangianReport {
  InclusionReport transverse_case;      // intersection 9, transverse
  InclusionReport nontransverse_case;   // intersection 12, not transverse
};

// so(3,3) in so(4,3) with two choices of null 3-plane, one transverse to the
// subalgebra's natural parabolic and one not.
LagrangianReport lagrangian_inclusion();

}  // namespace cartankit
