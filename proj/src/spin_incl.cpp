#include "cartankit/spin_incl.hpp"

#include <array>
#include <map>
#include <stdexcept>

#include "cartankit/octonion_orbits.hpp"
#include "cartankit/zorn.hpp"

namespace cartankit {

namespace {

// ----- small exact complex-rational helpers --------------------------------

struct CQ {
  ExactScalar re, im;
  CQ() : re(0), im(0) {}
  CQ(ExactScalar r) : re(std::move(r)), im(0) {}
  CQ(ExactScalar r, ExactScalar i) : re(std::move(r)), im(std::move(i)) {}
  CQ operator+(const CQ& o) const { return {re + o.re, im + o.im}; }
  CQ operator-(const CQ& o) const { return {re - o.re, im - o.im}; }
  CQ operator*(const CQ& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  CQ conj() const { return {re, -im}; }
  bool iszero() const { return sgn(re) == 0 && sgn(im) == 0; }
  CQ inv() const {
    ExactScalar d = re * re + im * im;
    return {re / d, -im / d};
  }
};

using CMat = std::vector<std::vector<CQ>>;

CMat cmat(int r, int c) { return CMat(r, std::vector<CQ>(c)); }

CMat cmul(const CMat& a, const CMat& b) {
  int r = static_cast<int>(a.size()), k = static_cast<int>(b.size()),
      c = static_cast<int>(b[0].size());
  CMat out = cmat(r, c);
  for (int i = 0; i < r; ++i)
    for (int t = 0; t < k; ++t) {
      if (a[i][t].iszero()) continue;
      for (int j = 0; j < c; ++j) out[i][j] = out[i][j] + a[i][t] * b[t][j];
    }
  return out;
}

CMat csub(const CMat& a, const CMat& b) {
  CMat out = a;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j) out[i][j] = a[i][j] - b[i][j];
  return out;
}

CQ cdet4(const CMat& m) {
  // Permutation expansion of a 4x4 determinant.
  static const int perms[24][4] = {
      {0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}, {0, 3, 2, 1},
      {1, 0, 2, 3}, {1, 0, 3, 2}, {1, 2, 0, 3}, {1, 2, 3, 0}, {1, 3, 0, 2}, {1, 3, 2, 0},
      {2, 0, 1, 3}, {2, 0, 3, 1}, {2, 1, 0, 3}, {2, 1, 3, 0}, {2, 3, 0, 1}, {2, 3, 1, 0},
      {3, 0, 1, 2}, {3, 0, 2, 1}, {3, 1, 0, 2}, {3, 1, 2, 0}, {3, 2, 0, 1}, {3, 2, 1, 0}};
  CQ det;
  for (const auto& p : perms) {
    int inv = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (p[i] > p[j]) ++inv;
    CQ term{ExactScalar(inv % 2 == 0 ? 1 : -1)};
    for (int i = 0; i < 4; ++i) term = term * m[i][p[i]];
    det = det + term;
  }
  return det;
}

int perm_sign(const std::vector<int>& p) {
  int inv = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

// ----- generic matrix-algebra helpers --------------------------------------

struct MatAlgebra {
  int D = 0;
  std::vector<DenseMatrix> basis;
  int dim() const { return static_cast<int>(basis.size()); }
};

// All D x D matrices M with M^t G + G M = 0.
MatAlgebra so_of_gram(const DenseMatrix& gram) {
  const int D = gram.rows();
  DenseMatrix sys(D * D, D * D);
  // Condition entry (i,j): sum_r M[r][i] G[r][j] + G[i][r] M[r][j] = 0.
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < D; ++j) {
      int row = i * D + j;
      for (int r = 0; r < D; ++r) {
        sys.at(row, r * D + i) += gram.at(r, j);
        sys.at(row, r * D + j) += gram.at(i, r);
      }
    }
  MatAlgebra alg;
  alg.D = D;
  for (const Vec& k : kernel_basis(sys)) {
    DenseMatrix m(D, D);
    for (int r = 0; r < D; ++r)
      for (int c = 0; c < D; ++c) m.at(r, c) = k[r * D + c];
    alg.basis.push_back(m);
  }
  return alg;
}

Vec apply_mat(const DenseMatrix& m, const Vec& v) {
  Vec out(m.rows(), ExactScalar(0));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (!is_zero(m.at(r, c))) out[r] += m.at(r, c) * v[c];
  return out;
}

// Subalgebra of amb whose elements map every listed vector into the span of
// the list (for a single vector with annihilate=true, kill it outright).
MatAlgebra stabilising_subalgebra(const MatAlgebra& amb, const std::vector<Vec>& span,
                                  bool annihilate) {
  std::vector<Vec> conds;  // rows over amb coefficient space
  std::vector<Vec> covectors;
  if (!annihilate) {
    covectors = kernel_basis(DenseMatrix::from_rows(span));
  } else {
    for (int j = 0; j < amb.D; ++j) {
      Vec phi(amb.D, ExactScalar(0));
      phi[j] = 1;
      covectors.push_back(phi);
    }
  }
  for (const Vec& v : span)
    for (const Vec& phi : covectors) {
      Vec row(amb.dim(), ExactScalar(0));
      for (int t = 0; t < amb.dim(); ++t) {
        Vec img = apply_mat(amb.basis[t], v);
        ExactScalar s = 0;
        for (int j = 0; j < amb.D; ++j) s += phi[j] * img[j];
        row[t] = s;
      }
      conds.push_back(row);
    }
  MatAlgebra out;
  out.D = amb.D;
  if (conds.empty()) {
    out.basis = amb.basis;
    return out;
  }
  for (const Vec& k : kernel_basis(DenseMatrix::from_rows(conds))) {
    DenseMatrix m(amb.D, amb.D);
    for (int t = 0; t < amb.dim(); ++t)
      if (!is_zero(k[t])) m = m + amb.basis[t] * k[t];
    out.basis.push_back(m);
  }
  return out;
}

SpanAccumulator flat_span(const MatAlgebra& alg) {
  SpanAccumulator s(alg.D * alg.D);
  for (const auto& m : alg.basis) s.add(m.flatten());
  return s;
}

// ----- su(2,2) -------------------------------------------------------------

const std::array<int, 4>& eps22() {
  static const std::array<int, 4> e = {1, 1, -1, -1};
  return e;
}

// Basis of {X in gl(4,C) : X^H eps + eps X = 0, tr X = 0} via a real kernel
// computation in the 32 real entry coordinates.
std::vector<CMat> su22_basis() {
  const auto& eps = eps22();
  std::vector<Vec> rows;
  auto unknown_re = [](int i, int j) { return 2 * (4 * i + j); };
  auto unknown_im = [](int i, int j) { return 2 * (4 * i + j) + 1; };
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      // conj(X[j][i]) eps[j] + eps[i] X[i][j] = 0, split into re and im.
      Vec re(32, ExactScalar(0)), im(32, ExactScalar(0));
      re[unknown_re(j, i)] += eps[j];
      re[unknown_re(i, j)] += eps[i];
      im[unknown_im(j, i)] -= eps[j];
      im[unknown_im(i, j)] += eps[i];
      rows.push_back(re);
      rows.push_back(im);
    }
  Vec tr_re(32, ExactScalar(0)), tr_im(32, ExactScalar(0));
  for (int i = 0; i < 4; ++i) {
    tr_re[unknown_re(i, i)] = 1;
    tr_im[unknown_im(i, i)] = 1;
  }
  rows.push_back(tr_re);
  rows.push_back(tr_im);

  std::vector<CMat> basis;
  for (const Vec& k : kernel_basis(DenseMatrix::from_rows(rows))) {
    CMat x = cmat(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) x[i][j] = CQ(k[unknown_re(i, j)], k[unknown_im(i, j)]);
    basis.push_back(x);
  }
  return basis;
}

// ----- Lambda^2 machinery --------------------------------------------------

const std::vector<std::pair<int, int>>& wedge_pairs() {
  static const std::vector<std::pair<int, int>> p = {{0, 1}, {0, 2}, {0, 3},
                                                     {1, 2}, {1, 3}, {2, 3}};
  return p;
}

// Wedge pairing into Lambda^4, normalised on the standard volume element.
DenseMatrix wedge_pairing_matrix() {
  const auto& pairs = wedge_pairs();
  DenseMatrix p(6, 6);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::vector<int> tup = {pairs[a].first, pairs[a].second, pairs[b].first, pairs[b].second};
      bool distinct = true;
      for (size_t i = 0; i < 4 && distinct; ++i)
        for (size_t j = i + 1; j < 4; ++j)
          if (tup[i] == tup[j]) {
            distinct = false;
            break;
          }
      if (distinct) p.at(a, b) = perm_sign(tup);
    }
  return p;
}

// Action of a real 4x4 matrix on Lambda^2 coordinates.
DenseMatrix wedge_action(const DenseMatrix& x) {
  const auto& pairs = wedge_pairs();
  DenseMatrix act(6, 6);
  for (int col = 0; col < 6; ++col) {
    auto [i, j] = pairs[col];
    auto put = [&](int r, int s, const ExactScalar& c) {
      if (r == s || is_zero(c)) return;
      for (int row = 0; row < 6; ++row) {
        if (pairs[row] == std::pair<int, int>{std::min(r, s), std::max(r, s)}) {
          act.at(row, col) += (r < s) ? c : -c;
        }
      }
    };
    for (int r = 0; r < 4; ++r) {
      put(r, j, x.at(r, i));
      put(i, r, x.at(r, j));
    }
  }
  return act;
}

// Complex version for su(2,2).
CMat wedge_action_c(const CMat& x) {
  const auto& pairs = wedge_pairs();
  CMat act = cmat(6, 6);
  for (int col = 0; col < 6; ++col) {
    auto [i, j] = pairs[col];
    auto put = [&](int r, int s, const CQ& c) {
      if (r == s || c.iszero()) return;
      for (int row = 0; row < 6; ++row) {
        if (pairs[row] == std::pair<int, int>{std::min(r, s), std::max(r, s)}) {
          CQ signed_c = (r < s) ? c : CQ(ExactScalar(0)) - c;
          act[row][col] = act[row][col] + signed_c;
        }
      }
    };
    for (int r = 0; r < 4; ++r) {
      put(r, j, x[r][i]);
      put(i, r, x[r][j]);
    }
  }
  return act;
}

EmbeddingReport embedding_report(const std::vector<DenseMatrix>& images,
                                 const std::vector<DenseMatrix>& image_of_brackets,
                                 const DenseMatrix& gram) {
  EmbeddingReport rep;
  rep.source_dim = static_cast<int>(images.size());
  std::vector<Vec> flat;
  for (const auto& m : images) flat.push_back(m.flatten());
  rep.image_rank = rank_of_vectors(flat);
  rep.injective = (rep.image_rank == rep.source_dim);
  rep.lands_in_orthogonal = true;
  for (const auto& m : images)
    if (!((m.transpose() * gram + gram * m).is_zero())) rep.lands_in_orthogonal = false;
  rep.bracket_preserving = true;
  size_t idx = 0;
  for (size_t a = 0; a < images.size(); ++a)
    for (size_t b = a + 1; b < images.size(); ++b, ++idx) {
      DenseMatrix comm = images[a] * images[b] - images[b] * images[a];
      if (!(comm == image_of_brackets[idx])) rep.bracket_preserving = false;
    }
  rep.target_signature = symmetric_signature(gram);
  return rep;
}

}  // namespace

EmbeddingReport sl4_to_so33() {
  // sl(4) basis: off-diagonal units then simple-root coweights.
  std::vector<DenseMatrix> sl4;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      if (a == b) continue;
      DenseMatrix e(4, 4);
      e.at(a, b) = 1;
      sl4.push_back(e);
    }
  for (int a = 0; a < 3; ++a) {
    DenseMatrix h(4, 4);
    h.at(a, a) = 1;
    h.at(a + 1, a + 1) = -1;
    sl4.push_back(h);
  }

  std::vector<DenseMatrix> images;
  for (const auto& x : sl4) images.push_back(wedge_action(x));
  std::vector<DenseMatrix> brackets;
  for (size_t a = 0; a < sl4.size(); ++a)
    for (size_t b = a + 1; b < sl4.size(); ++b)
      brackets.push_back(wedge_action(sl4[a] * sl4[b] - sl4[b] * sl4[a]));
  return embedding_report(images, brackets, wedge_pairing_matrix());
}

ConjugationReport su22_to_so42() {
  ConjugationReport out;
  const auto& pairs = wedge_pairs();
  const auto& eps = eps22();

  // h2 on basis wedges: h2(w_a, w_b) with h(e_p, e_q) = eps_p delta_pq, all
  // real for the standard basis.
  DenseMatrix h2(6, 6);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      auto [i, j] = pairs[a];
      auto [k, l] = pairs[b];
      ExactScalar v = 0;
      if (i == k && j == l) v += eps[i] * eps[j];
      if (i == l && j == k) v -= eps[i] * eps[j];
      h2.at(a, b) = v;
    }
  DenseMatrix p = wedge_pairing_matrix();
  auto pinv = inverse(p);
  if (!pinv) throw std::runtime_error("wedge pairing degenerate");

  // The conjugation R with P(R w, w') = h2(w, w'); real in this basis.
  DenseMatrix r = (*pinv) * h2;
  out.conjugation_squares_to_identity = (r * r == DenseMatrix::identity(6));

  // Fixed real form: ker(R - 1) really, ker(R + 1) imaginarily.
  std::vector<Vec> plus = kernel_basis(r - DenseMatrix::identity(6));
  std::vector<Vec> minus = kernel_basis(r + DenseMatrix::identity(6));
  std::vector<std::vector<CQ>> fixed;  // complex 6-columns
  for (const Vec& v : plus) {
    std::vector<CQ> col(6);
    for (int t = 0; t < 6; ++t) col[t] = CQ(v[t]);
    fixed.push_back(col);
  }
  for (const Vec& v : minus) {
    std::vector<CQ> col(6);
    for (int t = 0; t < 6; ++t) col[t] = CQ(ExactScalar(0), v[t]);
    fixed.push_back(col);
  }
  out.fixed_space_dim = static_cast<int>(fixed.size());
  if (out.fixed_space_dim != 6) return out;

  // Real metric: the wedge pairing restricted to the fixed space, negated so
  // that the positive cone dominates.
  DenseMatrix gram(6, 6);
  for (int s = 0; s < 6; ++s)
    for (int t = 0; t < 6; ++t) {
      CQ val;
      for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
          if (is_zero(p.at(a, b))) continue;
          val = val + fixed[s][a] * fixed[t][b] * CQ(p.at(a, b));
        }
      if (sgn(val.im) != 0) throw std::runtime_error("pairing not real on fixed space");
      gram.at(s, t) = -val.re;
    }

  // Express each su(2,2) action in the fixed basis over the reals.
  DenseMatrix fixed_cols(12, 6);
  for (int t = 0; t < 6; ++t)
    for (int a = 0; a < 6; ++a) {
      fixed_cols.at(a, t) = fixed[t][a].re;
      fixed_cols.at(6 + a, t) = fixed[t][a].im;
    }
  auto in_fixed_basis = [&](const CMat& act) {
    DenseMatrix m(6, 6);
    for (int t = 0; t < 6; ++t) {
      std::vector<CQ> img(6);
      for (int a = 0; a < 6; ++a) {
        CQ acc;
        for (int b = 0; b < 6; ++b)
          if (!act[a][b].iszero()) acc = acc + act[a][b] * fixed[t][b];
        img[a] = acc;
      }
      Vec rhs(12);
      for (int a = 0; a < 6; ++a) {
        rhs[a] = img[a].re;
        rhs[6 + a] = img[a].im;
      }
      auto sol = solve_linear(fixed_cols, rhs);
      if (!sol) throw std::runtime_error("action does not preserve the fixed space");
      for (int s = 0; s < 6; ++s) m.at(s, t) = (*sol)[s];
    }
    return m;
  };

  std::vector<CMat> su = su22_basis();
  std::vector<DenseMatrix> images;
  for (const auto& x : su) images.push_back(in_fixed_basis(wedge_action_c(x)));
  std::vector<DenseMatrix> brackets;
  for (size_t a = 0; a < su.size(); ++a)
    for (size_t b = a + 1; b < su.size(); ++b) {
      CMat comm = csub(cmul(su[a], su[b]), cmul(su[b], su[a]));
      brackets.push_back(in_fixed_basis(wedge_action_c(comm)));
    }
  out.embedding = embedding_report(images, brackets, gram);
  return out;
}

// ----- four-form stabiliser ------------------------------------------------

namespace {

struct FourForm {
  // Values on sorted index 4-tuples of R^8.
  std::map<std::array<int, 4>, ExactScalar> vals;
  ExactScalar eval(std::array<int, 4> t) const {
    std::vector<int> v(t.begin(), t.end());
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = i + 1; j < 4; ++j)
        if (v[i] == v[j]) return 0;
    std::array<int, 4> s = t;
    std::sort(s.begin(), s.end());
    int sign = perm_sign(v);
    auto it = vals.find(s);
    if (it == vals.end()) return 0;
    return it->second * sign;
  }
};

FourForm calibration_four_form() {
  const auto& eps = eps22();
  // mu(e_k, i e_k) = eps_k on the real coordinates (x_1..x_4, y_1..y_4).
  DenseMatrix mu(8, 8);
  for (int k = 0; k < 4; ++k) {
    mu.at(k, 4 + k) = eps[k];
    mu.at(4 + k, k) = -eps[k];
  }
  FourForm f;
  for (int a = 0; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b)
      for (int c = b + 1; c < 8; ++c)
        for (int d = c + 1; d < 8; ++d) {
          // Real part of the complex volume form on the complexified columns.
          CMat cols = cmat(4, 4);
          std::array<int, 4> tup = {a, b, c, d};
          for (int col = 0; col < 4; ++col) {
            int idx = tup[col];
            if (idx < 4)
              cols[idx][col] = CQ(ExactScalar(1));
            else
              cols[idx - 4][col] = CQ(ExactScalar(0), ExactScalar(1));
          }
          ExactScalar re_vol = cdet4(cols).re;
          // Three-term shuffle square of mu.
          ExactScalar musq = mu.at(a, b) * mu.at(c, d) - mu.at(a, c) * mu.at(b, d) +
                             mu.at(a, d) * mu.at(b, c);
          ExactScalar val = re_vol - musq;
          if (!is_zero(val)) f.vals[{a, b, c, d}] = val;
        }
  return f;
}

ExactScalar form_action(const DenseMatrix& m, const FourForm& f, std::array<int, 4> t) {
  // (M . f)(a,b,c,d) = -sum_slots f(..., M e_slot, ...).
  ExactScalar acc = 0;
  for (int slot = 0; slot < 4; ++slot) {
    for (int r = 0; r < 8; ++r) {
      const ExactScalar& c = m.at(r, t[slot]);
      if (is_zero(c)) continue;
      std::array<int, 4> u = t;
      u[slot] = r;
      ExactScalar fv = f.eval(u);
      if (!is_zero(fv)) acc -= c * fv;
    }
  }
  return acc;
}

DenseMatrix realify8(const CMat& x) {
  DenseMatrix m(8, 8);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      m.at(i, j) = x[i][j].re;
      m.at(i, 4 + j) = -x[i][j].im;
      m.at(4 + i, j) = x[i][j].im;
      m.at(4 + i, 4 + j) = x[i][j].re;
    }
  return m;
}

}  // namespace

FourFormStabiliserReport four_form_stabiliser(bool calibrated) {
  const auto& eps = eps22();
  DenseMatrix s8(8, 8);
  for (int k = 0; k < 4; ++k) {
    s8.at(k, k) = eps[k];
    s8.at(4 + k, 4 + k) = eps[k];
  }
  MatAlgebra so44 = so_of_gram(s8);

  FourFormStabiliserReport rep;
  rep.ambient_dim = so44.dim();

  FourForm f;
  if (calibrated) f = calibration_four_form();

  std::vector<Vec> rows;
  for (int a = 0; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b)
      for (int c = b + 1; c < 8; ++c)
        for (int d = c + 1; d < 8; ++d) {
          Vec row(so44.dim(), ExactScalar(0));
          bool nonzero = false;
          for (int t = 0; t < so44.dim(); ++t) {
            row[t] = form_action(so44.basis[t], f, {a, b, c, d});
            nonzero = nonzero || !is_zero(row[t]);
          }
          if (nonzero) rows.push_back(row);
        }
  if (rows.empty())
    rep.dim = so44.dim();
  else
    rep.dim = static_cast<int>(kernel_basis(DenseMatrix::from_rows(rows)).size());

  rep.su22_image_contained = true;
  for (const CMat& x : su22_basis()) {
    DenseMatrix m = realify8(x);
    if (!((m.transpose() * s8 + s8 * m).is_zero())) rep.su22_image_contained = false;
    for (int a = 0; a < 8 && rep.su22_image_contained; ++a)
      for (int b = a + 1; b < 8; ++b)
        for (int c = b + 1; c < 8; ++c)
          for (int d = c + 1; d < 8; ++d)
            if (!is_zero(form_action(m, f, {a, b, c, d}))) {
              rep.su22_image_contained = false;
              break;
            }
  }
  return rep;
}

// ----- triple-form stabiliser ----------------------------------------------

ThetaStabiliserReport theta_stabiliser() {
  std::array<ZornOct, 7> im = {ZornOct::diag(1, -1), ZornOct::vec_v(0), ZornOct::vec_v(1),
                               ZornOct::vec_v(2),    ZornOct::vec_w(0), ZornOct::vec_w(1),
                               ZornOct::vec_w(2)};
  DenseMatrix gram(7, 7);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) gram.at(i, j) = norm_polar(im[i], im[j]);

  ThetaStabiliserReport rep;
  rep.ambient_signature = symmetric_signature(gram);
  MatAlgebra so34 = so_of_gram(gram);
  rep.ambient_dim = so34.dim();

  // theta on sorted triples.
  std::map<std::array<int, 3>, ExactScalar> theta;
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j)
      for (int k = j + 1; k < 7; ++k) {
        ExactScalar v = triple_form(im[i], im[j], im[k]);
        if (!is_zero(v)) theta[{i, j, k}] = v;
      }
  auto theta_eval = [&](std::array<int, 3> t) -> ExactScalar {
    std::vector<int> v(t.begin(), t.end());
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = i + 1; j < 3; ++j)
        if (v[i] == v[j]) return 0;
    std::array<int, 3> s = t;
    std::sort(s.begin(), s.end());
    auto it = theta.find(s);
    if (it == theta.end()) return 0;
    return it->second * perm_sign(v);
  };

  std::vector<Vec> rows;
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j)
      for (int k = j + 1; k < 7; ++k) {
        Vec row(so34.dim(), ExactScalar(0));
        for (int t = 0; t < so34.dim(); ++t) {
          const DenseMatrix& m = so34.basis[t];
          ExactScalar acc = 0;
          std::array<int, 3> tup = {i, j, k};
          for (int slot = 0; slot < 3; ++slot)
            for (int r = 0; r < 7; ++r) {
              const ExactScalar& c = m.at(r, tup[slot]);
              if (is_zero(c)) continue;
              std::array<int, 3> u = tup;
              u[slot] = r;
              ExactScalar tv = theta_eval(u);
              if (!is_zero(tv)) acc -= c * tv;
            }
          row[t] = acc;
        }
        rows.push_back(row);
      }
  std::vector<Vec> stab_coeffs = kernel_basis(DenseMatrix::from_rows(rows));
  rep.dim = static_cast<int>(stab_coeffs.size());

  // Compare, as subspaces of gl(7), with the derivation algebra restricted to
  // the imaginaries.
  SpanAccumulator stab_span(49);
  for (const Vec& k : stab_coeffs) {
    DenseMatrix m(7, 7);
    for (int t = 0; t < so34.dim(); ++t)
      if (!is_zero(k[t])) m = m + so34.basis[t] * k[t];
    stab_span.add(m.flatten());
  }
  SpanAccumulator der_span(49);
  for (const DenseMatrix& d : derivation_algebra().basis) {
    DenseMatrix m7(7, 7);
    for (int c = 0; c < 7; ++c) {
      Vec img(8, ExactScalar(0));
      Vec cc = im[c].coords8();
      for (int r = 0; r < 8; ++r)
        for (int t = 0; t < 8; ++t)
          if (!is_zero(d.at(r, t))) img[r] += d.at(r, t) * cc[t];
      Vec im7 = ZornOct::from_coords8(img).im_coords7();
      for (int r = 0; r < 7; ++r) m7.at(r, c) = im7[r];
    }
    der_span.add(m7.flatten());
  }
  rep.equals_derivations_on_imaginaries =
      (stab_span.dim() == der_span.dim()) && stab_span.same_span_as(der_span);
  return rep;
}

// ----- dimension chains ----------------------------------------------------

namespace {

InclusionReport inclusion_from(const std::string& name, const MatAlgebra& amb,
                               const MatAlgebra& g, const MatAlgebra& phat) {
  InclusionReport rep;
  rep.name = name;
  rep.ambient_dim = amb.dim();
  rep.subalg_dim = g.dim();
  rep.parabolic_dim = phat.dim();
  SpanAccumulator u(amb.D * amb.D);
  for (const auto& m : g.basis) u.add(m.flatten());
  for (const auto& m : phat.basis) u.add(m.flatten());
  rep.intersection_dim = g.dim() + phat.dim() - u.dim();
  rep.transverse = (u.dim() == amb.dim());
  return rep;
}

}  // namespace

InclusionReport spinorial_inclusion(int n) {
  const int N = n + 1;
  const int D = 2 * N;
  DenseMatrix gram(D, D);
  for (int i = 0; i < N; ++i) {
    gram.at(i, N + i) = 1;
    gram.at(N + i, i) = 1;
  }
  MatAlgebra amb = so_of_gram(gram);

  Vec u(D, ExactScalar(0));
  u[N - 1] = 1;
  u[2 * N - 1] = -1;  // f_N - g_N
  MatAlgebra g = stabilising_subalgebra(amb, {u}, /*annihilate=*/true);

  std::vector<Vec> w;  // span(f_1..f_N)
  for (int i = 0; i < N; ++i) {
    Vec e(D, ExactScalar(0));
    e[i] = 1;
    w.push_back(e);
  }
  MatAlgebra phat = stabilising_subalgebra(amb, w, false);

  InclusionReport rep = inclusion_from("spinorial_n" + std::to_string(n), amb, g, phat);

  std::vector<Vec> v;  // span(f_1..f_{N-1})
  for (int i = 0; i + 1 < N; ++i) {
    Vec e(D, ExactScalar(0));
    e[i] = 1;
    v.push_back(e);
  }
  MatAlgebra p = stabilising_subalgebra(g, v, false);
  rep.parabolic_in_g_dim = p.dim();

  // g cap p-hat = p: dimensions agree and p sits inside both.
  SpanAccumulator phat_span = flat_span(phat);
  SpanAccumulator g_span = flat_span(g);
  bool contained = true;
  for (const auto& m : p.basis)
    if (!phat_span.contains(m.flatten()) || !g_span.contains(m.flatten())) contained = false;
  rep.intersection_equals_p = contained && (rep.intersection_dim == p.dim());
  return rep;
}

namespace {

MatAlgebra cr_ambient(DenseMatrix* gram_out) {
  // f_1 f_2 f_3 | e_0 | g_1 g_2 g_3 with <f_i, g_i> = 1 and <e_0, e_0> = 1.
  DenseMatrix gram(7, 7);
  for (int i = 0; i < 3; ++i) {
    gram.at(i, 4 + i) = 1;
    gram.at(4 + i, i) = 1;
  }
  gram.at(3, 3) = 1;
  if (gram_out) *gram_out = gram;
  return so_of_gram(gram);
}

}  // namespace

InclusionReport cr_inclusion() {
  MatAlgebra amb = cr_ambient(nullptr);

  Vec u(7, ExactScalar(0));
  u[2] = 1;
  u[6] = -1;  // f_3 - g_3
  MatAlgebra g = stabilising_subalgebra(amb, {u}, true);

  std::vector<Vec> w;
  for (int i = 0; i < 3; ++i) {
    Vec e(7, ExactScalar(0));
    e[i] = 1;
    w.push_back(e);
  }
  MatAlgebra phat = stabilising_subalgebra(amb, w, false);
  InclusionReport rep = inclusion_from("cr", amb, g, phat);

  std::vector<Vec> v;
  for (int i = 0; i < 2; ++i) {
    Vec e(7, ExactScalar(0));
    e[i] = 1;
    v.push_back(e);
  }
  rep.parabolic_in_g_dim = stabilising_subalgebra(g, v, false).dim();
  return rep;
}

LagrangianReport lagrangian_inclusion() {
  MatAlgebra amb = cr_ambient(nullptr);

  Vec u(7, ExactScalar(0));
  u[3] = 1;  // the positive-norm vector e_0
  MatAlgebra g = stabilising_subalgebra(amb, {u}, true);

  auto unit = [](int i) {
    Vec e(7, ExactScalar(0));
    e[i] = 1;
    return e;
  };

  LagrangianReport out;
  {
    std::vector<Vec> w = {unit(0), unit(1), unit(2)};
    MatAlgebra phat = stabilising_subalgebra(amb, w, false);
    out.nontransverse_case = inclusion_from("lagrangian_nontransverse", amb, g, phat);
  }
  {
    // f_1, f_2, e_0 + f_3 - g_3/2: still null, now transverse to g.
    Vec special(7, ExactScalar(0));
    special[3] = 1;
    special[2] = 1;
    special[6] = rat(-1, 2);
    std::vector<Vec> w = {unit(0), unit(1), special};
    MatAlgebra phat = stabilising_subalgebra(amb, w, false);
    out.transverse_case = inclusion_from("lagrangian_transverse", amb, g, phat);
  }
  return out;
}

}  // namespace cartankit
