#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cartankit/conformal3.hpp"

using namespace cartankit;

namespace {

FrameModel flat3() { return FrameModel{ModelSpec{}}; }

}  // namespace

TEST_CASE("localised scalar arithmetic matches pointwise evaluation") {
  const int nv = 6;
  Poly s = standard_sigma();
  Poly x0 = Poly::variable(nv, 0);
  Poly x1 = Poly::variable(nv, 1);

  SLoc a{x0 * x1 + Poly::constant(nv, rat(2)), 1};
  SLoc b{x1, 2};

  Vec pt{rat(1), rat(-2), rat(1, 2), rat(0), rat(3), rat(-1)};
  ExactScalar sv = s.eval(pt);
  REQUIRE(sv != 0);
  ExactScalar av = a.num.eval(pt) / sv;
  ExactScalar bv = b.num.eval(pt) / (sv * sv);

  CHECK(sloc_eval(sloc_add(a, b, s), pt, s) == av + bv);
  CHECK(sloc_eval(sloc_sub(a, b, s), pt, s) == av - bv);
  CHECK(sloc_eval(sloc_mul(a, b), pt, s) == av * bv);
  CHECK(sloc_eval(sloc_scale(a, rat(-7)), pt, s) == av * rat(-7));
  CHECK(sloc_eval(sloc_neg(b), pt, s) == -bv);
  CHECK(sloc_equal(sloc_add(a, b, s), sloc_add(b, a, s), s));

  // quotient rule along the first coordinate direction
  PolyVF dir = vf_zero(nv);
  dir[0] = Poly::constant(nv, rat(1));
  SLoc da = sloc_deriv(a, dir, s);
  ExactScalar expect =
      (a.num.derivative(0).eval(pt) * sv - a.num.eval(pt) * s.derivative(0).eval(pt)) /
      (sv * sv);
  CHECK(sloc_eval(da, pt, s) == expect);
}

TEST_CASE("constant scale yields the vanishing connection") {
  FrameModel m = flat3();
  Poly sigma = Poly::constant(m.nvars(), rat(1));
  PartialConnection conn = preferred_connection(m, sigma);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int e = 0; e < 3; ++e) CHECK(conn.gamma(a, b, e).is_zero());
}

TEST_CASE("preferred connection satisfies all defining identities") {
  FrameModel m = flat3();
  Poly sigma = standard_sigma();
  PartialConnection conn = preferred_connection(m, sigma);
  ConnectionChecks checks = run_connection_checks(m, sigma, conn);
  CHECK(checks.torsion_identity);
  CHECK(checks.levi_compatibility);
  CHECK(checks.two_on_h_directions);
  CHECK(checks.two_on_transverse_directions);
  CHECK(checks.volume_parallel);
  CHECK(checks.ok());
}

TEST_CASE("the identity battery detects a corrupted connection") {
  FrameModel m = flat3();
  Poly sigma = standard_sigma();
  PartialConnection conn = preferred_connection(m, sigma);
  CHECK(checks_detect_perturbation(m, sigma, conn));
}

TEST_CASE("frame fields stay independent at all sample points") {
  FrameModel m = flat3();
  Poly sigma = standard_sigma();
  PartialConnection conn = preferred_connection(m, sigma);
  CHECK(frames_independent_at_samples(m, sigma, conn));
}

TEST_CASE("induced metric: block structure, scaling, and signature") {
  FrameModel m = flat3();
  Poly sigma = standard_sigma();
  PartialConnection conn = preferred_connection(m, sigma);
  RationalSampler rng(77);
  MetricReport report = run_metric_checks(m, sigma, conn, rng);
  CHECK(report.cross_block_exact);
  CHECK(report.yy_block_vanishes);
  CHECK(report.weyl_invariant);
  CHECK(report.scales_inversely);
  CHECK(report.signature_split);
}

TEST_CASE("metric checks against a second scale choice") {
  FrameModel m = flat3();
  // a different admissible scale: nonvanishing at the sample points
  Poly sigma = Poly::constant(m.nvars(), rat(2)) + Poly::variable(m.nvars(), 3) * rat(1, 3) +
               Poly::variable(m.nvars(), 1) * Poly::variable(m.nvars(), 4) * rat(1, 7);
  for (const Vec& pt : standard_sample_points()) REQUIRE(sigma.eval(pt) != 0);

  PartialConnection conn = preferred_connection(m, sigma);
  CHECK(run_connection_checks(m, sigma, conn).ok());

  RationalSampler rng(78);
  MetricReport report = run_metric_checks(m, sigma, conn, rng);
  CHECK(report.cross_block_exact);
  CHECK(report.yy_block_vanishes);
  CHECK(report.signature_split);
}
