#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cartankit/flat_models.hpp"

using namespace cartankit;

TEST_CASE("polynomial arithmetic basics") {
  Poly x = Poly::variable(2, 0);
  Poly y = Poly::variable(2, 1);
  Poly p = x * x * rat(3) + x * y - Poly::constant(2, rat(5));
  CHECK(p.derivative(0) == x * rat(6) + y);
  CHECK(p.derivative(1) == x);
  CHECK(p.eval(Vec{rat(2), rat(-1)}) == rat(5));  // 12 - 2 - 5
  CHECK((p - p).is_zero());
  CHECK(p.degree() == 2);
}

TEST_CASE("vector field bracket satisfies Jacobi on polynomial fields") {
  const int nv = 3;
  RationalSampler rng(19);
  auto random_vf = [&]() {
    PolyVF f = vf_zero(nv);
    for (int c = 0; c < nv; ++c) {
      f[static_cast<size_t>(c)] = Poly::constant(nv, rng.rational()) +
                                  Poly::variable(nv, rng.integer(0, nv - 1)) * rng.rational() +
                                  Poly::variable(nv, 0) * Poly::variable(nv, 2) * rng.rational();
    }
    return f;
  };
  for (int t = 0; t < 5; ++t) {
    PolyVF a = random_vf(), b = random_vf(), c = random_vf();
    PolyVF jac = vf_add(vf_bracket(a, vf_bracket(b, c)),
                        vf_add(vf_bracket(b, vf_bracket(c, a)), vf_bracket(c, vf_bracket(a, b))));
    CHECK(vf_is_zero(jac));
  }
}

TEST_CASE("frame construction enforces the bracket relations") {
  for (const ModelSpec& spec :
       {ModelSpec{}, [] {
          ModelSpec s;
          s.n = 4;
          s.mod = Modification::SingleY34;
          s.beta[{3, 4}] = 1;
          return s;
        }(),
        saturated_general(4), saturated_general(5)}) {
    FrameModel m(spec);
    // the constructor throws if [X'_i, X'_j] != Y_(i|j); re-check one pair here
    PolyVF br = vf_bracket(m.frame(0), m.frame(1));
    CHECK(vf_is_zero(vf_sub(br, m.frame(m.frame_y(0, 1)))));
  }
}

TEST_CASE("unmodified frames are curvature-free") {
  FrameModel m{ModelSpec{}};
  Curvature kappa(m);
  CHECK(kappa.support().empty());
}

TEST_CASE("single-pair modification: curvature is the constant target section") {
  ModelSpec spec;
  spec.n = 4;
  spec.mod = Modification::SingleY34;
  spec.beta[{3, 4}] = 1;
  FrameModel m(spec);
  Curvature kappa(m);

  auto support = kappa.support();
  REQUIRE(support.size() == 1);
  CHECK(support[0] == std::make_pair(m.frame_x(0), m.frame_y(0, 1)));

  // kappa evaluated with the transverse slot first equals +Y[3|4]
  ASection val = kappa.eval_pair(m.frame_y(0, 1), m.frame_x(0));
  Vec origin(static_cast<size_t>(m.nvars()), ExactScalar(0));
  Vec coords = val.eval(m.basis(), origin);
  const int target = m.basis().index_m2(2, 3);
  for (int g = 0; g < m.basis().dim(); ++g) {
    CHECK(coords[static_cast<size_t>(g)] == ((g == target) ? rat(1) : rat(0)));
  }
}

TEST_CASE("curvature passes the normalisation condition for every model") {
  for (const ModelSpec& spec :
       {ModelSpec{}, [] {
          ModelSpec s;
          s.n = 4;
          s.mod = Modification::SingleY34;
          s.beta[{3, 4}] = 1;
          return s;
        }(),
        saturated_general(4), saturated_general(5)}) {
    FrameModel m(spec);
    Curvature kappa(m);
    NormalityReport norm = normality_check(m, kappa);
    CHECK(norm.ok);
    CHECK(norm.nonzero_at.empty());
  }
}

TEST_CASE("covariant derivative of a constant transverse section vanishes") {
  FrameModel m(saturated_general(4));
  ASection s;
  s.nvars = m.nvars();
  s.add(m.basis().index_m2(2, 3), Poly::constant(m.nvars(), rat(1)));
  for (int dir = 0; dir < m.frame_size(); ++dir) {
    CHECK(tractor_derivative(m, dir, s).is_zero());
  }
}

TEST_CASE("holonomy spans: none 0, single 1, saturated 3 and 7") {
  {
    FrameModel m{ModelSpec{}};
    Curvature kappa(m);
    RationalSampler rng(31);
    HolonomyResult h = infinitesimal_holonomy(m, kappa, rng);
    CHECK(h.dim == 0);
  }
  {
    ModelSpec spec;
    spec.n = 4;
    spec.mod = Modification::SingleY34;
    spec.beta[{3, 4}] = 1;
    FrameModel m(spec);
    Curvature kappa(m);
    RationalSampler rng(32);
    HolonomyResult h = infinitesimal_holonomy(m, kappa, rng);
    CHECK(h.dim == 1);
    REQUIRE(h.value_labels.size() == 1);
    CHECK(h.value_labels[0] == m.basis().label(m.basis().index_m2(2, 3)).text());
    CHECK(h.abelian);
    CHECK(h.closed_under_bracket);
    CHECK(h.origin_span_equals_full);
    CHECK(h.avoids_distribution_pairs);
  }
  {
    FrameModel m(saturated_general(4));
    Curvature kappa(m);
    RationalSampler rng(33);
    HolonomyResult h = infinitesimal_holonomy(m, kappa, rng);
    CHECK(h.dim == 3);
    CHECK(h.abelian);
    CHECK(h.origin_span_equals_full);
    CHECK(h.avoids_distribution_pairs);
  }
  {
    FrameModel m(saturated_general(5));
    Curvature kappa(m);
    RationalSampler rng(34);
    HolonomyResult h = infinitesimal_holonomy(m, kappa, rng);
    CHECK(h.dim == 7);
    CHECK(h.abelian);
    CHECK(h.closed_under_bracket);
    CHECK(h.origin_span_equals_full);
    CHECK(h.avoids_distribution_pairs);
  }
}

TEST_CASE("removing modification summands drops the holonomy dimension one-for-one") {
  ModelSpec full = saturated_general(4);  // three summands in total
  REQUIRE(full.beta.size() + full.gamma.size() + full.delta.size() == 3);

  ModelSpec minus1 = full;
  minus1.beta.clear();
  ModelSpec minus2 = minus1;
  minus2.gamma.clear();

  RationalSampler rng(35);
  {
    FrameModel m(minus1);
    Curvature kappa(m);
    CHECK(infinitesimal_holonomy(m, kappa, rng).dim == 2);
  }
  {
    FrameModel m(minus2);
    Curvature kappa(m);
    CHECK(infinitesimal_holonomy(m, kappa, rng).dim == 1);
  }
}

TEST_CASE("iterated derivatives at the origin isolate each summand target") {
  for (int n : {4, 5}) {
    FrameModel m(saturated_general(n));
    Curvature kappa(m);
    LeadingTermReport report = leading_term_extraction(m, kappa);
    CHECK(report.all_exact);
    CHECK(report.pure_grade_minus2);
    CHECK(report.lines.size() ==
          m.spec().beta.size() + m.spec().gamma.size() + m.spec().delta.size());
  }
}

TEST_CASE("model JSON parsing accepts the documented schema") {
  ModelSpec a = parse_model_json(R"({"n": 4, "modification": "single_y34"})");
  CHECK(a.n == 4);
  CHECK(a.mod == Modification::SingleY34);
  CHECK(a.beta.at({3, 4}) == 1);

  ModelSpec b = parse_model_json(
      R"({"n": 5, "modification": "general",
          "beta": [[3, 4, 1], [3, 5, 2], [4, 5, 3]],
          "gamma": [[4, 1], [5, 2]],
          "delta": [[4, 1], [5, 2]]})");
  CHECK(b.beta.size() == 3);
  CHECK(b.gamma.size() == 2);
  CHECK(b.delta.size() == 2);
  FrameModel m(b);
  CHECK(m.max_exponent() == 3);

  ModelSpec c = parse_model_json(R"({"n": 3, "modification": "none"})");
  CHECK(c.mod == Modification::None);
}

TEST_CASE("model JSON parsing rejects malformed and inconsistent input") {
  CHECK_THROWS_AS(parse_model_json("{ bad"), ModelParseError);
  CHECK_THROWS_AS(parse_model_json(R"({"modification": "none"})"), ModelParseError);
  CHECK_THROWS_AS(parse_model_json(R"({"n": 4, "modification": "wiggle"})"), ModelParseError);
  // single-pair modification needs rank at least 4
  CHECK_THROWS_AS(parse_model_json(R"({"n": 3, "modification": "single_y34"})"),
                  ModelParseError);
  // beta indices must satisfy 3 <= j < k <= n
  CHECK_THROWS_AS(parse_model_json(R"({"n": 4, "modification": "general",
                                       "beta": [[2, 3, 1]]})"),
                  ModelParseError);
  // exponents within a family must be distinct
  CHECK_THROWS_AS(parse_model_json(R"({"n": 5, "modification": "general",
                                       "beta": [[3, 4, 1], [3, 5, 1]]})"),
                  ModelParseError);
  // exponents must be positive
  CHECK_THROWS_AS(parse_model_json(R"({"n": 4, "modification": "general",
                                       "gamma": [[4, 0]]})"),
                  ModelParseError);
}
