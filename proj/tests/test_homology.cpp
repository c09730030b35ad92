#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "cartankit/homology.hpp"

using namespace cartankit;

TEST_CASE("codifferential squares to zero on all basis chains") {
  for (int n : {2, 3, 4}) {
    for (int c : {2, 3}) {
      CHECK(codifferential_squares_to_zero(n, c));
    }
  }
}

TEST_CASE("codifferential respects homogeneity and torus weight") {
  ChainComplex cc(3);
  RationalSampler rng(17);
  for (int t = 0; t < 10; ++t) {
    // a random single basis chain has well-defined homogeneity and weight
    auto keys = cc.all_keys(2);
    const ChainKey& k = keys[static_cast<size_t>(rng.integer(0, static_cast<long>(keys.size()) - 1))];
    Chain c = cc.basis_chain(k.wedge, k.value);
    Chain dc = cc.codifferential(c);
    for (const auto& [key, coeff] : dc.terms) {
      (void)coeff;
      CHECK(cc.homogeneity(key) == cc.homogeneity(k));
      CHECK(cc.torus_weight(key) == cc.torus_weight(k));
    }
  }
}

TEST_CASE("degree-two homology: n=2 sits in homogeneity 3 with dimension 4") {
  HomologyResult r = homology_analysis(2);
  CHECK(r.image_contained_in_kernel);
  for (const auto& [h, d] : r.dim_by_homogeneity) {
    if (h == 3) {
      CHECK(d == 4);
    } else {
      CHECK(d == 0);
    }
  }
  CHECK(r.claimed_homogeneity == 3);
  CHECK(r.claimed_value_grade == 0);
  CHECK(r.value_grade_nonnegative);
  CHECK(r.representable_in_claimed_shape);
  for (const auto& block : r.nonzero_blocks) {
    CHECK(block.homogeneity == 3);
    for (const auto& shape : block.shapes) {
      CHECK(shape[0] + shape[1] + shape[2] == 3);
    }
  }
}

TEST_CASE("degree-two homology: n=3 sits in homogeneity 3 with dimension 27") {
  HomologyResult r = homology_analysis(3);
  CHECK(r.image_contained_in_kernel);
  for (const auto& [h, d] : r.dim_by_homogeneity) {
    if (h == 3) {
      CHECK(d == 27);
    } else {
      CHECK(d == 0);
    }
  }
  CHECK(r.claimed_homogeneity == 3);
  CHECK(r.claimed_value_grade == 0);
  CHECK(r.value_grade_nonnegative);
  CHECK(r.representable_in_claimed_shape);
}

TEST_CASE("degree-two homology: n=4 sits in homogeneity 1 with dimension 60") {
  HomologyResult r = homology_analysis(4);
  CHECK(r.image_contained_in_kernel);
  for (const auto& [h, d] : r.dim_by_homogeneity) {
    if (h == 1) {
      CHECK(d == 60);
    } else {
      CHECK(d == 0);
    }
  }
  CHECK(r.claimed_homogeneity == 1);
  CHECK(r.claimed_value_grade == -2);
  CHECK_FALSE(r.value_grade_nonnegative);
  CHECK(r.representable_in_claimed_shape);
}

TEST_CASE("degree-two homology: n=5 sits in homogeneity 1 with dimension 280") {
  HomologyResult r = homology_analysis(5);
  CHECK(r.image_contained_in_kernel);
  for (const auto& [h, d] : r.dim_by_homogeneity) {
    if (h == 1) {
      CHECK(d == 280);
    } else {
      CHECK(d == 0);
    }
  }
  CHECK(r.claimed_homogeneity == 1);
  CHECK(r.claimed_value_grade == -2);
  CHECK_FALSE(r.value_grade_nonnegative);
  CHECK(r.representable_in_claimed_shape);
}

TEST_CASE("nonzero blocks carry the mixed wedge shape") {
  // In every rank the surviving classes use one slot of each positive grade.
  for (int n : {2, 4}) {
    HomologyResult r = homology_analysis(n);
    bool found_mixed = false;
    for (const auto& block : r.nonzero_blocks) {
      for (const auto& shape : block.shapes) {
        if ((shape[0] == 1 && shape[1] == 2) || (shape[0] == 2 && shape[1] == 1))
          found_mixed = true;
      }
    }
    CHECK(found_mixed);
  }
}

TEST_CASE("chain arithmetic cancels exactly") {
  ChainComplex cc(2);
  auto keys = cc.all_keys(2);
  REQUIRE(!keys.empty());
  Chain a = cc.basis_chain(keys[0].wedge, keys[0].value);
  Chain b = cc.basis_chain(keys[0].wedge, keys[0].value);
  for (const auto& [k, c] : b.terms) a.add_term(k, -c);
  CHECK(a.is_zero());
}
