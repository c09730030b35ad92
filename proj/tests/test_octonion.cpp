#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cartankit/octonion_orbits.hpp"
#include "cartankit/zorn.hpp"

using namespace cartankit;

namespace {

ZornOct random_oct(RationalSampler& rng) {
  ZornOct x;
  x.a = rng.rational();
  x.b = rng.rational();
  for (int i = 0; i < 3; ++i) {
    x.v[static_cast<size_t>(i)] = rng.rational();
    x.w[static_cast<size_t>(i)] = rng.rational();
  }
  return x;
}

}  // namespace

TEST_CASE("norm is multiplicative") {
  RationalSampler rng(1);
  for (int t = 0; t < 200; ++t) {
    ZornOct x = random_oct(rng);
    ZornOct y = random_oct(rng);
    CHECK(norm_quad(zorn_mul(x, y)) == norm_quad(x) * norm_quad(y));
  }
}

TEST_CASE("conjugation reverses products and computes the norm") {
  RationalSampler rng(2);
  for (int t = 0; t < 50; ++t) {
    ZornOct x = random_oct(rng);
    ZornOct y = random_oct(rng);
    CHECK(zorn_mul(x, y).conj() == zorn_mul(y.conj(), x.conj()));
    ZornOct nx = zorn_mul(x, x.conj());
    CHECK(nx == ZornOct::diag(norm_quad(x), norm_quad(x)));
  }
}

TEST_CASE("associator is alternating (the algebra is alternative)") {
  RationalSampler rng(3);
  for (int t = 0; t < 80; ++t) {
    ZornOct x = random_oct(rng);
    ZornOct y = random_oct(rng);
    ZornOct z = random_oct(rng);
    CHECK(associator(x, x, y).is_zero());
    CHECK(associator(x, y, y).is_zero());
    CHECK(associator(x, y, x).is_zero());
    ZornOct s = associator(x, y, z) + associator(y, x, z);
    CHECK(s.is_zero());
  }
}

TEST_CASE("the cubic form is alternating on imaginaries and halves the commutator") {
  RationalSampler rng(4);
  for (int t = 0; t < 60; ++t) {
    ZornOct u = random_oct(rng);
    u.b = -u.a;  // make imaginary
    ZornOct v = random_oct(rng);
    v.b = -v.a;
    ZornOct w = random_oct(rng);
    w.b = -w.a;
    CHECK(triple_form(u, v, w) == -triple_form(v, u, w));
    CHECK(triple_form(u, v, w) == -triple_form(u, w, v));
    // N(uv, w) = N([u,v]/2, w) on imaginaries
    CHECK(norm_polar(zorn_mul(u, v), w) ==
          norm_polar(zorn_commutator(u, v) * rat(1, 2), w));
  }
}

TEST_CASE("coordinate charts round-trip") {
  RationalSampler rng(5);
  ZornOct x = random_oct(rng);
  CHECK(ZornOct::from_coords8(x.coords8()) == x);
  ZornOct im = random_oct(rng);
  im.b = -im.a;
  CHECK(ZornOct::from_im_coords7(im.im_coords7()) == im);
}

TEST_CASE("derivation algebra has dimension 14 with the expected properties") {
  DerivationAlgebra der = derivation_algebra();
  CHECK(der.dim == 14);
  CHECK(static_cast<int>(der.basis.size()) == 14);
  CHECK(der.annihilates_one);
  CHECK(der.preserves_imaginary);
  CHECK(der.norm_skew);
  CHECK(der.kills_triple_form);
}

TEST_CASE("derivations close under commutator") {
  DerivationAlgebra der = derivation_algebra();
  SpanAccumulator span(64);
  for (const DenseMatrix& d : der.basis) span.add(d.flatten());
  CHECK(span.dim() == 14);
  for (size_t i = 0; i < der.basis.size(); ++i) {
    for (size_t j = i + 1; j < der.basis.size(); ++j) {
      DenseMatrix c = der.basis[i] * der.basis[j] - der.basis[j] * der.basis[i];
      CHECK(span.contains(c.flatten()));
    }
  }
}

TEST_CASE("standard planes classify as open and closed") {
  ImPlane open = standard_open_plane();
  ImPlane closed = standard_closed_plane();
  REQUIRE(open.valid);
  REQUIRE(closed.valid);
  CHECK(classify_plane(open) == PlaneKind::Open);
  CHECK(classify_plane(closed) == PlaneKind::Closed);
  CHECK(multiplication_closed(closed));
  CHECK_FALSE(multiplication_closed(open));
}

TEST_CASE("two-sided kernels of isotropic elements are closed planes") {
  RationalSampler rng(6);
  for (int t = 0; t < 10; ++t) {
    ZornOct z = random_isotropic_imaginary(rng);
    CHECK(is_zero(norm_quad(z)));
    CHECK(z.is_imaginary());
    std::vector<ZornOct> ker = two_sided_kernel(z);
    REQUIRE(ker.size() == 3);
    ImPlane p = make_plane(ker[0], ker[1], ker[2]);
    REQUIRE(p.valid);
    CHECK(classify_plane(p) == PlaneKind::Closed);
  }
}

TEST_CASE("random plane samplers produce the advertised orbit") {
  RationalSampler rng(7);
  for (int t = 0; t < 10; ++t) {
    ImPlane open = random_open_plane(rng);
    REQUIRE(open.valid);
    CHECK(classify_plane(open) == PlaneKind::Open);
    ImPlane closed = random_closed_plane(rng);
    REQUIRE(closed.valid);
    CHECK(classify_plane(closed) == PlaneKind::Closed);
  }
}

TEST_CASE("normalised open triples reproduce the canonical multiplication table") {
  TripleTable expected = expected_triple_table();

  auto table_of = [](const ImPlane& p) {
    ImPlane norm = normalise_open_triple(p);
    auto table = triple_table(norm);
    REQUIRE(table.has_value());
    return *table;
  };

  CHECK(table_of(standard_open_plane()) == expected);

  RationalSampler rng(8);
  for (int t = 0; t < 3; ++t) {
    CHECK(table_of(random_open_plane(rng)) == expected);
  }
}

TEST_CASE("spot entries of the canonical table") {
  TripleTable tab = expected_triple_table();
  // rows and columns ordered (a, x, y, z, yz, zx, xy)
  CHECK(table_entry_text(tab.entry[1][4]) == "-1/2*1 - 1/2*a");  // x * yz
  CHECK(table_entry_text(tab.entry[4][1]) == "-1/2*1 + 1/2*a");  // yz * x
  CHECK(table_entry_text(tab.entry[0][1]) == "x");               // a * x
  CHECK(table_entry_text(tab.entry[1][2]) == "xy");              // x * y
  CHECK(table_entry_text(tab.entry[2][1]) == "-xy");             // y * x
  CHECK(table_entry_text(tab.entry[1][1]) == "0");               // x * x
}

TEST_CASE("plane stabilisers inside the derivations") {
  PlaneStabiliser open = plane_stabiliser(standard_open_plane());
  CHECK(open.dim == 8);
  CHECK(open.killing_rank == 8);
  CHECK(open.semisimple);

  PlaneStabiliser closed = plane_stabiliser(standard_closed_plane());
  CHECK(closed.dim == 9);
  CHECK(closed.killing_rank == 4);
  CHECK_FALSE(closed.semisimple);

  RationalSampler rng(9);
  for (int t = 0; t < 3; ++t) {
    CHECK(plane_stabiliser(random_open_plane(rng)).dim == 8);
    CHECK(plane_stabiliser(random_closed_plane(rng)).dim == 9);
  }
}
