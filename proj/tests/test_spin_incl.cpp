#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cartankit/spin_incl.hpp"

using namespace cartankit;

TEST_CASE("sl4 realised on the wedge square is the split (3,3) algebra") {
  EmbeddingReport r = sl4_to_so33();
  CHECK(r.source_dim == 15);
  CHECK(r.image_rank == 15);
  CHECK(r.injective);
  CHECK(r.bracket_preserving);
  CHECK(r.lands_in_orthogonal);
  CHECK(r.target_signature == std::pair<int, int>(3, 3));
}

TEST_CASE("su(2,2) realised on the conjugation-fixed wedge square is the (4,2) algebra") {
  ConjugationReport r = su22_to_so42();
  CHECK(r.conjugation_squares_to_identity);
  CHECK(r.fixed_space_dim == 6);
  CHECK(r.embedding.source_dim == 15);
  CHECK(r.embedding.image_rank == 15);
  CHECK(r.embedding.injective);
  CHECK(r.embedding.bracket_preserving);
  CHECK(r.embedding.lands_in_orthogonal);
  CHECK(r.embedding.target_signature == std::pair<int, int>(4, 2));
}

TEST_CASE("four-form stabiliser in so(4,4) has dimension 21 and contains su(2,2)") {
  FourFormStabiliserReport r = four_form_stabiliser(true);
  CHECK(r.ambient_dim == 28);
  CHECK(r.dim == 21);
  CHECK(r.su22_image_contained);
}

TEST_CASE("zero-form control recovers the whole orthogonal algebra") {
  FourFormStabiliserReport r = four_form_stabiliser(false);
  CHECK(r.ambient_dim == 28);
  CHECK(r.dim == 28);
}

TEST_CASE("triple-form stabiliser matches the derivations on imaginaries") {
  ThetaStabiliserReport r = theta_stabiliser();
  CHECK(r.ambient_signature == std::pair<int, int>(3, 4));
  CHECK(r.ambient_dim == 21);
  CHECK(r.dim == 14);
  CHECK(r.equals_derivations_on_imaginaries);
}

TEST_CASE("vector stabiliser chains for ranks 2 through 5") {
  const int ambient[4] = {15, 28, 45, 66};
  const int sub[4] = {10, 21, 36, 55};
  const int phat[4] = {12, 22, 35, 51};
  const int inter[4] = {7, 15, 26, 40};
  for (int n = 2; n <= 5; ++n) {
    InclusionReport r = spinorial_inclusion(n);
    CAPTURE(n);
    CHECK(r.ambient_dim == ambient[n - 2]);
    CHECK(r.subalg_dim == sub[n - 2]);
    CHECK(r.parabolic_dim == phat[n - 2]);
    CHECK(r.intersection_dim == inter[n - 2]);
    CHECK(r.parabolic_in_g_dim == inter[n - 2]);
    CHECK(r.intersection_equals_p);
    CHECK(r.transverse);
  }
}

TEST_CASE("hypersurface-type chain (21, 15, 15, 10, 9)") {
  InclusionReport r = cr_inclusion();
  CHECK(r.ambient_dim == 21);
  CHECK(r.subalg_dim == 15);
  CHECK(r.parabolic_dim == 15);
  CHECK(r.parabolic_in_g_dim == 10);
  CHECK(r.intersection_dim == 9);
  CHECK_FALSE(r.intersection_equals_p);
  CHECK(r.transverse);
}

TEST_CASE("split-form pair: transverse and non-transverse null 3-planes") {
  LagrangianReport r = lagrangian_inclusion();

  CHECK(r.transverse_case.subalg_dim == 15);
  CHECK(r.transverse_case.intersection_dim == 9);
  CHECK(r.transverse_case.transverse);

  CHECK(r.nontransverse_case.subalg_dim == 15);
  CHECK(r.nontransverse_case.intersection_dim == 12);
  CHECK_FALSE(r.nontransverse_case.transverse);
}
