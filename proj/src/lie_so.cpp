#include "cartankit/lie_so.hpp"

#include <stdexcept>

namespace cartankit {

DenseMatrix defining_form(int n) {
  DenseMatrix j(2 * n + 1, 2 * n + 1);
  for (int a = 0; a < n; ++a) {
    j.at(a, n + 1 + a) = 1;
    j.at(n + 1 + a, a) = 1;
  }
  j.at(n, n) = 1;
  return j;
}

LieElement LieElement::zero(int n) {
  LieElement x;
  x.n_ = n;
  x.m_ = DenseMatrix(2 * n + 1, 2 * n + 1);
  return x;
}

LieElement LieElement::from_blocks(int n, const DenseMatrix& A, const Vec& v,
                                   const DenseMatrix& B, const Vec& w, const DenseMatrix& C) {
  if (!(B == B.transpose() * ExactScalar(-1)) || !(C == C.transpose() * ExactScalar(-1)))
    throw std::invalid_argument("from_blocks: B and C must be skew-symmetric");
  LieElement x = zero(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      x.m_.at(a, b) = A.at(a, b);
      x.m_.at(n + 1 + a, n + 1 + b) = -A.at(b, a);
      x.m_.at(a, n + 1 + b) = B.at(a, b);
      x.m_.at(n + 1 + a, b) = C.at(a, b);
    }
  for (int i = 0; i < n; ++i) {
    x.m_.at(i, n) = v[i];
    x.m_.at(n, n + 1 + i) = -v[i];
    x.m_.at(n, i) = w[i];
    x.m_.at(n + 1 + i, n) = -w[i];
  }
  return x;
}

LieElement LieElement::from_embedded(int n, DenseMatrix m) {
  if (m.rows() != 2 * n + 1 || m.cols() != 2 * n + 1)
    throw std::invalid_argument("from_embedded: wrong size");
  DenseMatrix j = defining_form(n);
  if (!((m.transpose() * j + j * m).is_zero()))
    throw std::invalid_argument("from_embedded: X^t J + J X != 0");
  LieElement x;
  x.n_ = n;
  x.m_ = std::move(m);
  return x;
}

LieElement LieElement::operator+(const LieElement& rhs) const {
  LieElement x;
  x.n_ = n_;
  x.m_ = m_ + rhs.m_;
  return x;
}

LieElement LieElement::operator-(const LieElement& rhs) const {
  LieElement x;
  x.n_ = n_;
  x.m_ = m_ - rhs.m_;
  return x;
}

LieElement LieElement::operator*(const ExactScalar& c) const {
  LieElement x;
  x.n_ = n_;
  x.m_ = m_ * c;
  return x;
}

LieElement LieElement::graded_part(int grade) const {
  LieElement x = zero(n_);
  const int n = n_;
  switch (grade) {
    case -2:
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) x.m_.at(n + 1 + a, b) = m_.at(n + 1 + a, b);
      break;
    case -1:
      for (int i = 0; i < n; ++i) {
        x.m_.at(n, i) = m_.at(n, i);
        x.m_.at(n + 1 + i, n) = m_.at(n + 1 + i, n);
      }
      break;
    case 0:
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          x.m_.at(a, b) = m_.at(a, b);
          x.m_.at(n + 1 + a, n + 1 + b) = m_.at(n + 1 + a, n + 1 + b);
        }
      break;
    case 1:
      for (int i = 0; i < n; ++i) {
        x.m_.at(i, n) = m_.at(i, n);
        x.m_.at(n, n + 1 + i) = m_.at(n, n + 1 + i);
      }
      break;
    case 2:
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) x.m_.at(a, n + 1 + b) = m_.at(a, n + 1 + b);
      break;
    default:
      throw std::invalid_argument("graded_part: grade outside [-2, 2]");
  }
  return x;
}

LieElement bracket(const LieElement& x, const LieElement& y) {
  return LieElement::from_embedded(x.n(), x.matrix() * y.matrix() - y.matrix() * x.matrix());
}

ExactScalar invariant_form(const LieElement& x, const LieElement& y) {
  return (x.matrix() * y.matrix()).trace();
}

std::string BasisLabel::text() const {
  auto pair = [](const char* s, int a, int b) {
    return std::string(s) + "[" + std::to_string(a + 1) + "|" + std::to_string(b + 1) + "]";
  };
  switch (grade) {
    case -2: return pair("Y", i, j);
    case -1: return "X[" + std::to_string(i + 1) + "]";
    case 0: return pair("A", i, j);
    case 1: return "V[" + std::to_string(i + 1) + "]";
    case 2: return pair("Z", i, j);
  }
  return "?";
}

namespace {
DenseMatrix skew_pair(int n, int j, int k) {
  // E_{jk} - E_{kj}
  DenseMatrix b(n, n);
  b.at(j, k) = 1;
  b.at(k, j) = -1;
  return b;
}
}  // namespace

GradedBasis::GradedBasis(int n) : n_(n) {
  DenseMatrix zero_n(n, n);
  Vec zero_v(n, ExactScalar(0));

  // Grade -1 generators first (grade -2 elements are defined as their
  // brackets, fixing all signs consistently).
  std::vector<LieElement> xi;
  for (int i = 0; i < n; ++i) {
    Vec w = zero_v;
    w[i] = 1;
    xi.push_back(LieElement::from_blocks(n, zero_n, zero_v, zero_n, w, zero_n));
  }

  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      elements_.push_back(bracket(xi[j], xi[k]));
      labels_.push_back({-2, j, k});
    }
  for (int i = 0; i < n; ++i) {
    elements_.push_back(xi[i]);
    labels_.push_back({-1, i, 0});
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      DenseMatrix A(n, n);
      A.at(a, b) = 1;
      elements_.push_back(LieElement::from_blocks(n, A, zero_v, zero_n, zero_v, zero_n));
      labels_.push_back({0, a, b});
    }
  for (int i = 0; i < n; ++i) {
    Vec v = zero_v;
    v[i] = 1;
    elements_.push_back(LieElement::from_blocks(n, zero_n, v, zero_n, zero_v, zero_n));
    labels_.push_back({1, i, 0});
  }
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      elements_.push_back(
          LieElement::from_blocks(n, zero_n, zero_v, skew_pair(n, j, k), zero_v, zero_n));
      labels_.push_back({2, j, k});
    }

  eps0_ = LieElement::from_blocks(n, DenseMatrix::identity(n), zero_v, zero_n, zero_v, zero_n);
}

int GradedBasis::index_m2(int j, int k) const {
  // Pairs (j<k) in lexicographic order.
  return (j * (2 * n_ - j - 1)) / 2 + (k - j - 1);
}
int GradedBasis::index_m1(int i) const { return pair_count() + i; }
int GradedBasis::index_0(int a, int b) const { return pair_count() + n_ + a * n_ + b; }
int GradedBasis::index_p1(int i) const { return pair_count() + n_ + n_ * n_ + i; }
int GradedBasis::index_p2(int j, int k) const {
  return pair_count() + 2 * n_ + n_ * n_ + index_m2(j, k);
}

int GradedBasis::section_begin(int grade) const {
  switch (grade) {
    case -2: return 0;
    case -1: return pair_count();
    case 0: return pair_count() + n_;
    case 1: return pair_count() + n_ + n_ * n_;
    case 2: return pair_count() + 2 * n_ + n_ * n_;
  }
  throw std::invalid_argument("section_begin: bad grade");
}

int GradedBasis::section_dim(int grade) const {
  switch (grade) {
    case -2:
    case 2: return pair_count();
    case -1:
    case 1: return n_;
    case 0: return n_ * n_;
  }
  throw std::invalid_argument("section_dim: bad grade");
}

Vec GradedBasis::coordinates(const LieElement& x) const {
  // Each basis element occupies one matrix entry with coefficient 1 in the
  // block positions read below, so coordinates are direct entry reads.
  Vec c(dim(), ExactScalar(0));
  const int n = n_;
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) c[index_m2(j, k)] = x.matrix().at(n + 1 + k, j);
  for (int i = 0; i < n; ++i) c[index_m1(i)] = x.block_w(i);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) c[index_0(a, b)] = x.block_A(a, b);
  for (int i = 0; i < n; ++i) c[index_p1(i)] = x.block_v(i);
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) c[index_p2(j, k)] = x.block_B(j, k);
  return c;
}

LieElement GradedBasis::from_coordinates(const Vec& coords) const {
  LieElement x = LieElement::zero(n_);
  for (int f = 0; f < dim(); ++f)
    if (!is_zero(coords[f])) x = x + elements_[f] * coords[f];
  return x;
}

const std::vector<LieElement>& GradedBasis::dual_basis() const {
  if (!dual_.empty()) return dual_;
  const int d = dim();
  DenseMatrix gram(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) gram.at(i, j) = invariant_form(elements_[i], elements_[j]);
  auto inv = inverse(gram);
  if (!inv) throw std::runtime_error("invariant form is degenerate");
  for (int i = 0; i < d; ++i) {
    LieElement e = LieElement::zero(n_);
    for (int j = 0; j < d; ++j)
      if (!is_zero(inv->at(j, i))) e = e + elements_[j] * inv->at(j, i);
    dual_.push_back(e);
  }
  return dual_;
}

LieElement GradedBasis::random_element(RationalSampler& rng) const {
  Vec c(dim());
  for (auto& q : c) q = rng.rational();
  return from_coordinates(c);
}

NilradicalReport nilradical_check(int n) {
  GradedBasis basis(n);
  NilradicalReport rep;

  std::vector<int> p_idx, perp_idx;
  for (int f = 0; f < basis.dim(); ++f) {
    if (basis.grade_of(f) >= 0) p_idx.push_back(f);
    if (basis.grade_of(f) >= 1) perp_idx.push_back(f);
  }

  auto in_perp = [&](const LieElement& x) {
    Vec c = basis.coordinates(x);
    for (int f = 0; f < basis.dim(); ++f)
      if (basis.grade_of(f) < 1 && !is_zero(c[f])) return false;
    return true;
  };

  rep.bracket_into_subspace = true;
  for (int a : p_idx)
    for (int b : perp_idx)
      if (!in_perp(bracket(basis.element(a), basis.element(b))))
        rep.bracket_into_subspace = false;

  rep.step_two_nilpotent = true;
  for (int a : perp_idx)
    for (int b : perp_idx)
      for (int c : perp_idx) {
        LieElement inner = bracket(basis.element(b), basis.element(c));
        if (!bracket(basis.element(a), inner).is_zero()) rep.step_two_nilpotent = false;
      }

  // Orthocomplement of p under the invariant form, compared against the span
  // of the grade >= 1 sections.
  DenseMatrix pairing(static_cast<int>(p_idx.size()), basis.dim());
  for (int r = 0; r < static_cast<int>(p_idx.size()); ++r)
    for (int f = 0; f < basis.dim(); ++f)
      pairing.at(r, f) = invariant_form(basis.element(p_idx[r]), basis.element(f));
  SpanAccumulator ortho(basis.dim());
  for (auto& v : kernel_basis(pairing)) ortho.add(v);
  SpanAccumulator perp(basis.dim());
  for (int f : perp_idx) {
    Vec unit(basis.dim(), ExactScalar(0));
    unit[f] = 1;
    perp.add(unit);
  }
  rep.is_orthocomplement = ortho.same_span_as(perp);
  return rep;
}

CyclicDistributionReport sl3_distribution_check() {
  auto unit = [](int a, int b) {
    DenseMatrix e(3, 3);
    e.at(a, b) = 1;
    return e;
  };
  auto flat = [](const DenseMatrix& m) { return m.flatten(); };
  auto comm = [](const DenseMatrix& a, const DenseMatrix& b) { return a * b - b * a; };

  std::vector<DenseMatrix> h = {unit(0, 1), unit(1, 2), unit(2, 0)};
  std::vector<DenseMatrix> ht = {unit(1, 0), unit(2, 1), unit(0, 2)};
  std::vector<DenseMatrix> torus;
  {
    DenseMatrix t1(3, 3), t2(3, 3);
    t1.at(0, 0) = 1;
    t1.at(1, 1) = -1;
    t2.at(1, 1) = 1;
    t2.at(2, 2) = -1;
    torus = {t1, t2};
  }

  auto span_of = [&](const std::vector<DenseMatrix>& mats) {
    SpanAccumulator s(9);
    for (const auto& m : mats) s.add(m.flatten());
    return s;
  };
  SpanAccumulator span_h = span_of(h);
  SpanAccumulator span_ht = span_of(ht);

  CyclicDistributionReport rep;
  rep.dim_h = span_h.dim();

  rep.torus_preserves_h = true;
  for (const auto& x : h)
    for (const auto& t : torus)
      if (!span_h.contains(flat(comm(x, t)))) rep.torus_preserves_h = false;

  SpanAccumulator first(9), second(9);
  for (const auto& a : h)
    for (const auto& b : h) first.add(flat(comm(a, b)));
  rep.first_bracket_is_transpose = first.same_span_as(span_ht);

  for (const auto& a : ht)
    for (const auto& b : ht) second.add(flat(comm(a, b)));
  rep.second_bracket_recovers_h = second.same_span_as(span_h);
  return rep;
}

}  // namespace cartankit
