#include "cartankit/octonion_orbits.hpp"

#include <sstream>
#include <stdexcept>

namespace cartankit {

namespace {
std::array<ExactScalar, 3> cross(const std::array<ExactScalar, 3>& u,
                                 const std::array<ExactScalar, 3>& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}
ExactScalar dot(const std::array<ExactScalar, 3>& u, const std::array<ExactScalar, 3>& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}
}  // namespace

ZornOct ZornOct::zero() { return ZornOct{}; }
ZornOct ZornOct::one() { return diag(1, 1); }
ZornOct ZornOct::diag(const ExactScalar& a, const ExactScalar& b) {
  ZornOct x;
  x.a = a;
  x.b = b;
  return x;
}
ZornOct ZornOct::vec_v(int i) {
  ZornOct x;
  x.v[i] = 1;
  return x;
}
ZornOct ZornOct::vec_w(int i) {
  ZornOct x;
  x.w[i] = 1;
  return x;
}

ZornOct ZornOct::operator+(const ZornOct& r) const {
  ZornOct x;
  x.a = a + r.a;
  x.b = b + r.b;
  for (int i = 0; i < 3; ++i) {
    x.v[i] = v[i] + r.v[i];
    x.w[i] = w[i] + r.w[i];
  }
  return x;
}

ZornOct ZornOct::operator-(const ZornOct& r) const { return *this + r * ExactScalar(-1); }

ZornOct ZornOct::operator*(const ExactScalar& c) const {
  ZornOct x;
  x.a = a * c;
  x.b = b * c;
  for (int i = 0; i < 3; ++i) {
    x.v[i] = v[i] * c;
    x.w[i] = w[i] * c;
  }
  return x;
}

bool ZornOct::operator==(const ZornOct& r) const {
  return a == r.a && b == r.b && v == r.v && w == r.w;
}

bool ZornOct::is_zero() const { return *this == ZornOct{}; }

ZornOct ZornOct::conj() const {
  ZornOct x;
  x.a = b;
  x.b = a;
  for (int i = 0; i < 3; ++i) {
    x.v[i] = -v[i];
    x.w[i] = -w[i];
  }
  return x;
}

Vec ZornOct::coords8() const {
  Vec c(8);
  c[0] = a;
  c[1] = b;
  for (int i = 0; i < 3; ++i) {
    c[2 + i] = v[i];
    c[5 + i] = w[i];
  }
  return c;
}

ZornOct ZornOct::from_coords8(const Vec& c) {
  ZornOct x;
  x.a = c[0];
  x.b = c[1];
  for (int i = 0; i < 3; ++i) {
    x.v[i] = c[2 + i];
    x.w[i] = c[5 + i];
  }
  return x;
}

Vec ZornOct::im_coords7() const {
  Vec c(7);
  c[0] = (a - b) / 2;
  for (int i = 0; i < 3; ++i) {
    c[1 + i] = v[i];
    c[4 + i] = w[i];
  }
  return c;
}

ZornOct ZornOct::from_im_coords7(const Vec& c) {
  ZornOct x;
  x.a = c[0];
  x.b = -c[0];
  for (int i = 0; i < 3; ++i) {
    x.v[i] = c[1 + i];
    x.w[i] = c[4 + i];
  }
  return x;
}

ZornOct zorn_mul(const ZornOct& x, const ZornOct& y) {
  ZornOct p;
  p.a = x.a * y.a + dot(x.v, y.w);
  p.b = x.b * y.b + dot(y.v, x.w);
  auto ww = cross(x.w, y.w);
  auto vv = cross(x.v, y.v);
  for (int i = 0; i < 3; ++i) {
    p.v[i] = x.a * y.v[i] + y.b * x.v[i] + ww[i];
    p.w[i] = y.a * x.w[i] + x.b * y.w[i] - vv[i];
  }
  return p;
}

ZornOct zorn_commutator(const ZornOct& x, const ZornOct& y) {
  return zorn_mul(x, y) - zorn_mul(y, x);
}

ExactScalar norm_quad(const ZornOct& x) { return x.a * x.b - dot(x.v, x.w); }

ExactScalar norm_polar(const ZornOct& x, const ZornOct& y) {
  return (norm_quad(x + y) - norm_quad(x) - norm_quad(y)) / 2;
}

ZornOct associator(const ZornOct& x, const ZornOct& y, const ZornOct& z) {
  return zorn_mul(zorn_mul(x, y), z) - zorn_mul(x, zorn_mul(y, z));
}

ExactScalar triple_form(const ZornOct& x, const ZornOct& y, const ZornOct& z) {
  return norm_polar(zorn_mul(x, y), z);
}

// --- derivations -----------------------------------------------------------

namespace {

std::array<ZornOct, 8> unit_octonions() {
  return {ZornOct::diag(1, 0), ZornOct::diag(0, 1), ZornOct::vec_v(0), ZornOct::vec_v(1),
          ZornOct::vec_v(2),   ZornOct::vec_w(0),  ZornOct::vec_w(1), ZornOct::vec_w(2)};
}

std::array<ZornOct, 7> imaginary_units() {
  return {ZornOct::diag(1, -1), ZornOct::vec_v(0), ZornOct::vec_v(1), ZornOct::vec_v(2),
          ZornOct::vec_w(0),    ZornOct::vec_w(1), ZornOct::vec_w(2)};
}

ZornOct apply(const DenseMatrix& d, const ZornOct& x) {
  Vec c = x.coords8();
  Vec out(8, ExactScalar(0));
  for (int r = 0; r < 8; ++r)
    for (int cidx = 0; cidx < 8; ++cidx)
      if (!is_zero(d.at(r, cidx))) out[r] += d.at(r, cidx) * c[cidx];
  return ZornOct::from_coords8(out);
}

}  // namespace

DerivationAlgebra derivation_algebra() {
  auto units = unit_octonions();
  // mt[i][j] = coordinates of e_i e_j.
  Vec mt[8][8];
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) mt[i][j] = zorn_mul(units[i], units[j]).coords8();

  // Unknowns: the 64 entries of the matrix D, flat index r * 8 + c.
  DenseMatrix sys(8 * 8 * 8, 64);
  int row = 0;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      for (int t = 0; t < 8; ++t, ++row) {
        // (D(e_i e_j))_t - (D(e_i) e_j)_t - (e_i D(e_j))_t = 0
        for (int c = 0; c < 8; ++c)
          if (!is_zero(mt[i][j][c])) sys.at(row, t * 8 + c) += mt[i][j][c];
        for (int r = 0; r < 8; ++r) {
          if (!is_zero(mt[r][j][t])) sys.at(row, r * 8 + i) -= mt[r][j][t];
          if (!is_zero(mt[i][r][t])) sys.at(row, r * 8 + j) -= mt[i][r][t];
        }
      }
    }

  DerivationAlgebra der;
  for (const Vec& k : kernel_basis(sys)) {
    DenseMatrix d(8, 8);
    for (int r = 0; r < 8; ++r)
      for (int c = 0; c < 8; ++c) d.at(r, c) = k[r * 8 + c];
    der.basis.push_back(d);
  }
  der.dim = static_cast<int>(der.basis.size());

  // Polarised norm Gram matrix on the 8-element basis.
  DenseMatrix ng(8, 8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) ng.at(i, j) = norm_polar(units[i], units[j]);

  auto im = imaginary_units();
  for (const DenseMatrix& d : der.basis) {
    if (!apply(d, ZornOct::one()).is_zero()) der.annihilates_one = false;
    for (const ZornOct& u : im)
      if (!apply(d, u).is_imaginary()) der.preserves_imaginary = false;
    if (!((d.transpose() * ng + ng * d).is_zero())) der.norm_skew = false;
    for (const ZornOct& u1 : im)
      for (const ZornOct& u2 : im)
        for (const ZornOct& u3 : im) {
          ExactScalar s = triple_form(apply(d, u1), u2, u3) + triple_form(u1, apply(d, u2), u3) +
                          triple_form(u1, u2, apply(d, u3));
          if (!is_zero(s)) der.kills_triple_form = false;
        }
  }
  return der;
}

namespace {
const DerivationAlgebra& cached_derivations() {
  static const DerivationAlgebra der = derivation_algebra();
  return der;
}
}  // namespace

// --- planes ----------------------------------------------------------------

ImPlane make_plane(const ZornOct& b1, const ZornOct& b2, const ZornOct& b3) {
  ImPlane p;
  p.basis = {b1, b2, b3};
  bool ok = true;
  for (const ZornOct& b : p.basis) ok = ok && b.is_imaginary();
  for (const ZornOct& x : p.basis)
    for (const ZornOct& y : p.basis) ok = ok && is_zero(norm_polar(x, y));
  ok = ok && rank_of_vectors({b1.coords8(), b2.coords8(), b3.coords8()}) == 3;
  p.valid = ok;
  return p;
}

PlaneKind classify_plane(const ImPlane& p) {
  if (!p.valid) throw std::invalid_argument("classify_plane: not an isotropic 3-plane");
  return is_zero(triple_form(p.basis[0], p.basis[1], p.basis[2])) ? PlaneKind::Closed
                                                                  : PlaneKind::Open;
}

ImPlane standard_open_plane() {
  return make_plane(ZornOct::vec_v(0), ZornOct::vec_v(1), ZornOct::vec_v(2));
}

ImPlane standard_closed_plane() {
  return make_plane(ZornOct::vec_v(0), ZornOct::vec_w(1), ZornOct::vec_w(2));
}

std::vector<ZornOct> two_sided_kernel(const ZornOct& z) {
  auto im = imaginary_units();
  DenseMatrix sys(16, 7);
  for (int c = 0; c < 7; ++c) {
    Vec left = zorn_mul(im[c], z).coords8();
    Vec right = zorn_mul(z, im[c]).coords8();
    for (int t = 0; t < 8; ++t) {
      sys.at(t, c) = left[t];
      sys.at(8 + t, c) = right[t];
    }
  }
  std::vector<ZornOct> out;
  for (const Vec& k : kernel_basis(sys)) {
    ZornOct u = ZornOct::zero();
    for (int c = 0; c < 7; ++c) u = u + im[c] * k[c];
    out.push_back(u);
  }
  return out;
}

ZornOct random_isotropic_imaginary(RationalSampler& rng) {
  for (;;) {
    ZornOct u;
    ExactScalar alpha = rng.rational(4, 2);
    u.a = alpha;
    u.b = -alpha;
    for (int i = 0; i < 3; ++i) u.v[i] = rng.rational(4, 2);
    if (is_zero(u.v[0])) continue;
    u.w[1] = rng.rational(4, 2);
    u.w[2] = rng.rational(4, 2);
    // Solve N(u) = -alpha^2 - v.w = 0 for the remaining slot.
    u.w[0] = (-alpha * alpha - u.v[1] * u.w[1] - u.v[2] * u.w[2]) / u.v[0];
    if (!u.is_zero()) return u;
  }
}

namespace {

// Completes a partial imaginary element (diagonal and v fixed, w unknown)
// to be isotropic and norm-orthogonal to the given elements, by solving a
// linear system in w; returns nullopt when the system is singular.
std::optional<ZornOct> complete_isotropic(RationalSampler& rng, const ExactScalar& alpha,
                                          const std::array<ExactScalar, 3>& v,
                                          const std::vector<ZornOct>& ortho_to) {
  // Unknown w: rows = self-isotropy + one orthogonality per listed element;
  // pad with random pin rows to reach a square system.
  std::vector<Vec> rows;
  Vec rhs_list;
  {
    // -alpha^2 - v.w = 0  <=>  v . w = -alpha^2
    Vec r = {v[0], v[1], v[2]};
    rows.push_back(r);
    rhs_list.push_back(-alpha * alpha);
  }
  for (const ZornOct& o : ortho_to) {
    // 2 N(u, o) = -2 alpha alpha_o - v.w_o - v_o.w
    Vec r = {o.v[0], o.v[1], o.v[2]};
    ExactScalar c = ExactScalar(-2) * alpha * o.a - dot(v, o.w);
    rows.push_back(r);
    rhs_list.push_back(c);
  }
  while (rows.size() < 3) {
    Vec pin(3, ExactScalar(0));
    pin[rng.integer(0, 2)] = 1;
    rows.push_back(pin);
    rhs_list.push_back(rng.rational(4, 2));
  }
  auto sol = solve_linear(DenseMatrix::from_rows(rows), rhs_list);
  if (!sol) return std::nullopt;
  ZornOct u;
  u.a = alpha;
  u.b = -alpha;
  u.v = v;
  u.w = {(*sol)[0], (*sol)[1], (*sol)[2]};
  return u;
}

}  // namespace

ImPlane random_open_plane(RationalSampler& rng) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    ZornOct b1 = random_isotropic_imaginary(rng);
    auto draw = [&](const std::vector<ZornOct>& prev) {
      ExactScalar alpha = rng.rational(4, 2);
      std::array<ExactScalar, 3> v = {rng.rational(4, 2), rng.rational(4, 2), rng.rational(4, 2)};
      return complete_isotropic(rng, alpha, v, prev);
    };
    auto b2 = draw({b1});
    if (!b2) continue;
    auto b3 = draw({b1, *b2});
    if (!b3) continue;
    ImPlane p = make_plane(b1, *b2, *b3);
    if (!p.valid) continue;
    if (classify_plane(p) == PlaneKind::Open) return p;
  }
  throw std::runtime_error("random_open_plane: sampling failed");
}

ImPlane random_closed_plane(RationalSampler& rng) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    ZornOct z = random_isotropic_imaginary(rng);
    std::vector<ZornOct> k = two_sided_kernel(z);
    if (k.size() != 3) continue;
    ImPlane p = make_plane(k[0], k[1], k[2]);
    if (!p.valid) continue;
    if (classify_plane(p) == PlaneKind::Closed) return p;
  }
  throw std::runtime_error("random_closed_plane: sampling failed");
}

ImPlane normalise_open_triple(const ImPlane& p) {
  ExactScalar t = triple_form(p.basis[0], p.basis[1], p.basis[2]);
  if (is_zero(t)) throw std::invalid_argument("normalise_open_triple: plane is closed");
  return make_plane(p.basis[0] * (ExactScalar(1) / (t * 2)), p.basis[1], p.basis[2]);
}

std::optional<TripleTable> triple_table(const ImPlane& open_plane) {
  ImPlane p = normalise_open_triple(open_plane);
  const ZornOct& x = p.basis[0];
  const ZornOct& y = p.basis[1];
  const ZornOct& z = p.basis[2];
  ZornOct yz = zorn_mul(y, z);
  ZornOct zx = zorn_mul(z, x);
  ZornOct xy = zorn_mul(x, y);
  ZornOct a = zorn_commutator(xy, z);

  std::array<ZornOct, 8> basis = {ZornOct::one(), a, x, y, z, yz, zx, xy};
  DenseMatrix bm(8, 8);
  for (int c = 0; c < 8; ++c) {
    Vec col = basis[c].coords8();
    for (int r = 0; r < 8; ++r) bm.at(r, c) = col[r];
  }
  auto binv = inverse(bm);
  if (!binv) return std::nullopt;

  TripleTable table;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      Vec prod = zorn_mul(basis[1 + i], basis[1 + j]).coords8();
      Vec coords(8, ExactScalar(0));
      for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c)
          if (!is_zero(binv->at(r, c))) coords[r] += binv->at(r, c) * prod[c];
      table.entry[i][j] = coords;
    }
  return table;
}

TripleTable expected_triple_table() {
  // Coordinates in the basis (1, a, x, y, z, yz, zx, xy); rows and columns
  // run over (a, x, y, z, yz, zx, xy).
  auto e = [](int idx, int num = 1, int den = 1) {
    Vec v(8, ExactScalar(0));
    v[idx] = rat(num, den);
    return v;
  };
  auto half = [](int s1, int sa) {
    Vec v(8, ExactScalar(0));
    v[0] = rat(s1, 2);
    v[1] = rat(sa, 2);
    return v;
  };
  Vec zero(8, ExactScalar(0));
  const int B1 = 0, BA = 1, BX = 2, BY = 3, BZ = 4, BYZ = 5, BZX = 6, BXY = 7;

  TripleTable t;
  // Row a.
  t.entry[0] = {e(B1), e(BX), e(BY), e(BZ), e(BYZ, -1), e(BZX, -1), e(BXY, -1)};
  // Row x.
  t.entry[1] = {e(BX, -1), zero, e(BXY), e(BZX, -1), half(-1, -1), zero, zero};
  // Row y.
  t.entry[2] = {e(BY, -1), e(BXY, -1), zero, e(BYZ), zero, half(-1, -1), zero};
  // Row z.
  t.entry[3] = {e(BZ, -1), e(BZX), e(BYZ, -1), zero, zero, zero, half(-1, -1)};
  // Row yz.
  t.entry[4] = {e(BYZ), half(-1, 1), zero, zero, zero, e(BZ), e(BY, -1)};
  // Row zx.
  t.entry[5] = {e(BZX), zero, half(-1, 1), zero, e(BZ, -1), zero, e(BX)};
  // Row xy.
  t.entry[6] = {e(BXY), zero, zero, half(-1, 1), e(BY), e(BX, -1), zero};
  return t;
}

std::string table_entry_text(const Vec& c) {
  static const char* names[8] = {"1", "a", "x", "y", "z", "yz", "zx", "xy"};
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < 8; ++i) {
    if (is_zero(c[i])) continue;
    ExactScalar q = c[i];
    if (first) {
      if (q == -1)
        os << "-";
      else if (q != 1)
        os << scalar_str(q) << "*";
    } else {
      os << (sgn(q) > 0 ? " + " : " - ");
      ExactScalar aq = abs(q);
      if (aq != 1) os << scalar_str(aq) << "*";
    }
    os << names[i];
    first = false;
  }
  return first ? "0" : os.str();
}

PlaneStabiliser plane_stabiliser(const ImPlane& p) {
  if (!p.valid) throw std::invalid_argument("plane_stabiliser: invalid plane");
  const DerivationAlgebra& der = cached_derivations();

  // Annihilator covectors of the plane in the 8-coordinate model.
  DenseMatrix span3(3, 8);
  for (int r = 0; r < 3; ++r) {
    Vec c = p.basis[r].coords8();
    for (int j = 0; j < 8; ++j) span3.at(r, j) = c[j];
  }
  std::vector<Vec> annihilators = kernel_basis(span3);  // phi with phi . b = 0

  // Conditions sum_m c_m phi(D_m b) = 0 over plane basis b and covectors phi.
  DenseMatrix cond(static_cast<int>(annihilators.size()) * 3, der.dim);
  int row = 0;
  for (const Vec& phi : annihilators)
    for (int bidx = 0; bidx < 3; ++bidx, ++row)
      for (int m = 0; m < der.dim; ++m) {
        Vec img = apply(der.basis[m], p.basis[bidx]).coords8();
        ExactScalar s = 0;
        for (int j = 0; j < 8; ++j) s += phi[j] * img[j];
        cond.at(row, m) = s;
      }

  std::vector<Vec> coeffs = kernel_basis(cond);
  PlaneStabiliser st;
  st.dim = static_cast<int>(coeffs.size());

  // Subalgebra basis as 8x8 matrices.
  std::vector<DenseMatrix> sub;
  for (const Vec& c : coeffs) {
    DenseMatrix s(8, 8);
    for (int m = 0; m < der.dim; ++m)
      if (!is_zero(c[m])) s = s + der.basis[m] * c[m];
    sub.push_back(s);
  }

  // Structure constants gamma via exact solves, then the Killing form.
  const int d = st.dim;
  DenseMatrix flat(64, d);
  for (int t = 0; t < d; ++t) {
    Vec f = sub[t].flatten();
    for (int r = 0; r < 64; ++r) flat.at(r, t) = f[r];
  }
  std::vector<std::vector<Vec>> gamma(d, std::vector<Vec>(d));
  for (int pp = 0; pp < d; ++pp)
    for (int q = 0; q < d; ++q) {
      DenseMatrix br = sub[pp] * sub[q] - sub[q] * sub[pp];
      auto sol = solve_linear(flat, br.flatten());
      if (!sol) throw std::runtime_error("plane stabiliser is not closed under bracket");
      gamma[pp][q] = *sol;
    }
  DenseMatrix killing(d, d);
  for (int pp = 0; pp < d; ++pp)
    for (int q = 0; q < d; ++q) {
      ExactScalar k = 0;
      for (int t = 0; t < d; ++t)
        for (int s = 0; s < d; ++s) k += gamma[pp][s][t] * gamma[q][t][s];
      killing.at(pp, q) = k;
    }
  st.killing_rank = matrix_rank(killing);
  st.semisimple = (st.killing_rank == st.dim);
  return st;
}

bool multiplication_closed(const ImPlane& p) {
  SpanAccumulator span(8);
  for (const ZornOct& b : p.basis) span.add(b.coords8());
  for (const ZornOct& x : p.basis)
    for (const ZornOct& y : p.basis)
      if (!span.contains(zorn_mul(x, y).coords8())) return false;
  return true;
}

}  // namespace cartankit
