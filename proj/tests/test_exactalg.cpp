#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cartankit/dense_matrix.hpp"
#include "cartankit/lie_so.hpp"
#include "cartankit/rng.hpp"

using namespace cartankit;

TEST_CASE("rank, determinant and kernel agree on a rational matrix") {
  DenseMatrix m(3, 4);
  m.at(0, 0) = rat(1, 2);
  m.at(0, 1) = rat(1);
  m.at(0, 3) = rat(-3);
  m.at(1, 0) = rat(1, 3);
  m.at(1, 2) = rat(2, 5);
  m.at(2, 0) = rat(5, 6);
  m.at(2, 1) = rat(1);
  m.at(2, 2) = rat(2, 5);
  m.at(2, 3) = rat(-3);  // row2 = row0 + row1

  CHECK(matrix_rank(m) == 2);
  auto ker = kernel_basis(m);
  CHECK(ker.size() == 2);
  for (const Vec& k : ker) {
    for (int i = 0; i < 3; ++i) {
      ExactScalar acc(0);
      for (int j = 0; j < 4; ++j) acc += m.at(i, j) * k[static_cast<size_t>(j)];
      CHECK(is_zero(acc));
    }
  }
}

TEST_CASE("determinant matches cofactor expansion on a 4x4") {
  RationalSampler rng(7);
  DenseMatrix m(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m.at(i, j) = rng.rational();
  // Laplace expansion along the first row, computed with 3x3 determinants.
  auto minor3 = [&](int skip_col) {
    DenseMatrix s(3, 3);
    for (int i = 1; i < 4; ++i) {
      int cc = 0;
      for (int j = 0; j < 4; ++j) {
        if (j == skip_col) continue;
        s.at(i - 1, cc++) = m.at(i, j);
      }
    }
    return determinant(s);
  };
  ExactScalar expect(0);
  for (int j = 0; j < 4; ++j) {
    ExactScalar term = m.at(0, j) * minor3(j);
    expect += (j % 2 == 0) ? term : -term;
  }
  CHECK(determinant(m) == expect);
}

TEST_CASE("solve_linear returns exact solutions and detects inconsistency") {
  DenseMatrix m(2, 2);
  m.at(0, 0) = rat(2);
  m.at(0, 1) = rat(1, 3);
  m.at(1, 0) = rat(-1);
  m.at(1, 1) = rat(4);
  Vec b{rat(1), rat(7, 2)};
  auto x = solve_linear(m, b);
  REQUIRE(x.has_value());
  CHECK(m.at(0, 0) * (*x)[0] + m.at(0, 1) * (*x)[1] == b[0]);
  CHECK(m.at(1, 0) * (*x)[0] + m.at(1, 1) * (*x)[1] == b[1]);

  DenseMatrix s(2, 1);
  s.at(0, 0) = rat(1);
  s.at(1, 0) = rat(2);
  CHECK_FALSE(solve_linear(s, Vec{rat(1), rat(3)}).has_value());
}

TEST_CASE("signature of a known symmetric form") {
  // diag(2, -3, 5, 0) after congruence mixing
  DenseMatrix d(4, 4);
  d.at(0, 0) = rat(2);
  d.at(1, 1) = rat(-3);
  d.at(2, 2) = rat(5);
  DenseMatrix p = DenseMatrix::identity(4);
  p.at(0, 1) = rat(7);
  p.at(2, 3) = rat(-2, 3);
  DenseMatrix g = p.transpose() * d * p;
  auto [pos, neg] = symmetric_signature(g);
  CHECK(pos == 2);
  CHECK(neg == 1);
}

TEST_CASE("inverse round-trips") {
  RationalSampler rng(3);
  DenseMatrix m(5, 5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) m.at(i, j) = rng.rational();
  auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK(m * *inv == DenseMatrix::identity(5));
}

TEST_CASE("span accumulator tracks membership exactly") {
  SpanAccumulator span(3);
  CHECK(span.add(Vec{rat(1), rat(2), rat(0)}));
  CHECK(span.add(Vec{rat(0), rat(1), rat(1)}));
  CHECK_FALSE(span.add(Vec{rat(2), rat(5), rat(1)}));  // sum of the two
  CHECK(span.dim() == 2);
  CHECK(span.contains(Vec{rat(1), rat(3), rat(1)}));
  CHECK_FALSE(span.contains(Vec{rat(0), rat(0), rat(1)}));
}

TEST_CASE("defining form and membership of the orthogonal algebra") {
  for (int n : {2, 3, 4}) {
    GradedBasis basis(n);
    DenseMatrix J = defining_form(n);
    RationalSampler rng(11 + n);
    LieElement x = basis.random_element(rng);
    DenseMatrix lhs = x.matrix().transpose() * J + J * x.matrix();
    CHECK(lhs.is_zero());
  }
}

TEST_CASE("graded basis coordinates are a bijection") {
  GradedBasis basis(3);
  CHECK(basis.dim() == 21);
  RationalSampler rng(5);
  LieElement x = basis.random_element(rng);
  Vec c = basis.coordinates(x);
  CHECK(basis.from_coordinates(c) == x);
  for (int f = 0; f < basis.dim(); ++f) {
    Vec unit = basis.coordinates(basis.element(f));
    for (int g = 0; g < basis.dim(); ++g) {
      CHECK(unit[static_cast<size_t>(g)] == ((f == g) ? rat(1) : rat(0)));
    }
  }
}

TEST_CASE("grading element measures the grade") {
  for (int n : {2, 3, 4, 5}) {
    GradedBasis basis(n);
    const LieElement& e0 = basis.grading_element();
    for (int f = 0; f < basis.dim(); ++f) {
      LieElement br = bracket(e0, basis.element(f));
      LieElement expect = basis.element(f) * rat(basis.grade_of(f));
      CHECK(br == expect);
    }
  }
}

TEST_CASE("bracket satisfies the Jacobi identity on random elements") {
  for (int n : {2, 3, 4, 5}) {
    GradedBasis basis(n);
    RationalSampler rng(97 + n);
    const int trials = 60;
    for (int t = 0; t < trials; ++t) {
      LieElement x = basis.random_element(rng);
      LieElement y = basis.random_element(rng);
      LieElement z = basis.random_element(rng);
      LieElement jac = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) +
                       bracket(z, bracket(x, y));
      CHECK(jac.is_zero());
    }
  }
}

TEST_CASE("bracket adds grades") {
  GradedBasis basis(4);
  for (int a = 0; a < basis.dim(); ++a) {
    for (int b = 0; b < basis.dim(); ++b) {
      LieElement br = bracket(basis.element(a), basis.element(b));
      if (br.is_zero()) continue;
      const int g = basis.grade_of(a) + basis.grade_of(b);
      if (g < -2 || g > 2) {
        CHECK(br.is_zero());
      } else {
        CHECK(br == br.graded_part(g));
      }
    }
  }
}

TEST_CASE("invariant form is associative for the bracket") {
  GradedBasis basis(3);
  RationalSampler rng(23);
  for (int t = 0; t < 40; ++t) {
    LieElement x = basis.random_element(rng);
    LieElement y = basis.random_element(rng);
    LieElement z = basis.random_element(rng);
    CHECK(invariant_form(bracket(x, y), z) == invariant_form(x, bracket(y, z)));
  }
}

TEST_CASE("dual basis pairs to the identity") {
  GradedBasis basis(3);
  const auto& dual = basis.dual_basis();
  for (int a = 0; a < basis.dim(); ++a) {
    for (int b = 0; b < basis.dim(); ++b) {
      ExactScalar expect = (a == b) ? rat(1) : rat(0);
      CHECK(invariant_form(dual[static_cast<size_t>(a)], basis.element(b)) == expect);
    }
  }
}

TEST_CASE("negative part is a step-two nilpotent orthocomplement") {
  for (int n : {2, 3, 4, 5}) {
    NilradicalReport report = nilradical_check(n);
    CHECK(report.bracket_into_subspace);
    CHECK(report.step_two_nilpotent);
    CHECK(report.is_orthocomplement);
  }
}

TEST_CASE("cyclic subspace of sl3 alternates with its transpose") {
  CyclicDistributionReport report = sl3_distribution_check();
  CHECK(report.dim_h == 3);
  CHECK(report.torus_preserves_h);
  CHECK(report.first_bracket_is_transpose);
  CHECK(report.second_bracket_recovers_h);
}

TEST_CASE("graded section dimensions") {
  for (int n : {2, 3, 4, 5}) {
    GradedBasis basis(n);
    CHECK(basis.dim() == n * (2 * n + 1));
    CHECK(basis.section_dim(-2) == n * (n - 1) / 2);
    CHECK(basis.section_dim(-1) == n);
    CHECK(basis.section_dim(0) == n * n);
    CHECK(basis.section_dim(1) == n);
    CHECK(basis.section_dim(2) == n * (n - 1) / 2);
  }
}
