#pragma once

#include <sstream>
#include <string>
#include <utility>

#include "cartankit/lie_so.hpp"

namespace cartankit {

// Pointwise standard-tractor calculus for the rank-n distribution geometry.
// A tractor fiber element carries three slots
//
//     (covector slot, scalar slot, vector slot)  in  R^n* + R + R^n,
//
// with metric h(t,t') = 1/2 ( v_1(X_2) + v_2(X_1) + tau_1 tau_2 ).  Splitting
// changes and covariant derivatives mix the slots through the graded algebra:
// the homogeneity-two component of a one-form acts by the g(2)/g(-1) bracket,
// and the transverse part of a direction acts by the g(-2)/g(1) bracket.
// Everything here is a fiberwise computation with free coefficient data; no
// differential equation is solved.

struct TractorVec {
  Vec vstar;        // covector slot, coordinates in the dual frame
  ExactScalar tau;  // scalar slot
  Vec x;            // vector slot, coordinates in the frame
};

struct UpsilonData {
  Vec ups1;          // one-form on the distribution
  DenseMatrix ups2;  // skew matrix: the homogeneity-two component
};

// Free coefficient data of a covariant derivative in one direction.
struct ConnectionData {
  Vec z_m1;           // grade -1 component of the direction
  DenseMatrix z_m2;   // grade -2 component of the direction (skew)
  Vec p1;             // rho-type one-form value in the direction
  DenseMatrix p2;     // rho-type two-form value in the direction (skew)
};

// Raw coordinate derivatives of the three slots of one tractor field.
struct SlotJet {
  Vec dv;
  ExactScalar dtau;
  Vec dx;
};

class TractorCalculus {
 public:
  explicit TractorCalculus(int n = 3) : n_(n) {}

  int n() const { return n_; }

  static ExactScalar dot(const Vec& a, const Vec& b) {
    ExactScalar s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
  }

  ExactScalar metric(const TractorVec& t1, const TractorVec& t2) const {
    return (dot(t1.vstar, t2.x) + dot(t2.vstar, t1.x) + t1.tau * t2.tau) * rat(1, 2);
  }

  // t-hat = ( v + tau Y_1 - {Y_2, X} - 1/2 Y_1(X) Y_1,  tau - Y_1(X),  X )
  TractorVec change_splitting(const TractorVec& t, const UpsilonData& u) const {
    TractorVec r;
    r.x = t.x;
    const ExactScalar ux = dot(u.ups1, t.x);
    r.tau = t.tau - ux;
    r.vstar = t.vstar;
    Vec act = bracket_p2_m1(u.ups2, t.x);
    for (size_t i = 0; i < r.vstar.size(); ++i) {
      r.vstar[i] += t.tau * u.ups1[i] - act[i] - ux * u.ups1[i] * rat(1, 2);
    }
    return r;
  }

  // D t = ( dv + tau P_1 - {P_2, X},  dtau - v(Z_-1) - P_1(X),
  //         dx + tau Z_-1 + {Z_-2, v} )
  TractorVec covariant_deriv(const ConnectionData& c, const SlotJet& jet,
                             const TractorVec& t) const {
    TractorVec r;
    r.vstar = jet.dv;
    Vec act = bracket_p2_m1(c.p2, t.x);
    for (size_t i = 0; i < r.vstar.size(); ++i) r.vstar[i] += t.tau * c.p1[i] - act[i];
    r.tau = jet.dtau - dot(t.vstar, c.z_m1) - dot(c.p1, t.x);
    r.x = jet.dx;
    Vec tr = bracket_m2_p1(c.z_m2, t.vstar);
    for (size_t i = 0; i < r.x.size(); ++i) r.x[i] += t.tau * c.z_m1[i] + tr[i];
    return r;
  }

  // Product-rule value the covariant derivative must reproduce on the metric.
  ExactScalar leibniz_rhs(const SlotJet& j1, const TractorVec& t1, const SlotJet& j2,
                          const TractorVec& t2) const {
    return (dot(j1.dv, t2.x) + dot(t1.vstar, j2.dx) + dot(j2.dv, t1.x) +
            dot(t2.vstar, j1.dx) + j1.dtau * t2.tau + t1.tau * j2.dtau) *
           rat(1, 2);
  }

  // Filtration projections: the jet projection keeps (scalar, vector); the
  // final projection keeps only the vector slot.
  std::pair<ExactScalar, Vec> project_jet(const TractorVec& t) const {
    return {t.tau, t.x};
  }
  Vec project_vector(const TractorVec& t) const { return t.x; }

  // Metric matrix over the slot basis (covector units, scalar unit, vector
  // units), size 2n+1.
  DenseMatrix gram() const {
    const int d = 2 * n_ + 1;
    DenseMatrix g(d, d);
    for (int i = 0; i < n_; ++i) {
      g.at(i, n_ + 1 + i) = rat(1, 2);
      g.at(n_ + 1 + i, i) = rat(1, 2);
    }
    g.at(n_, n_) = rat(1, 2);
    return g;
  }

  std::pair<int, int> gram_signature() const { return symmetric_signature(gram()); }

  std::string computed_signature_label() const {
    std::ostringstream out;
    auto [p, q] = gram_signature();
    out << "(" << p << "," << q << ")";
    return out.str();
  }

  // A label quoted in cross-references for this metric's signature; reports
  // compare it against the computed value without assuming either.
  static const char* quoted_signature_label() { return "(n+1,1)"; }

  TractorVec random_tractor(RationalSampler& rng) const {
    TractorVec t;
    for (int i = 0; i < n_; ++i) t.vstar.push_back(rng.rational());
    t.tau = rng.rational();
    for (int i = 0; i < n_; ++i) t.x.push_back(rng.rational());
    return t;
  }

  UpsilonData random_upsilon(RationalSampler& rng) const {
    UpsilonData u;
    for (int i = 0; i < n_; ++i) u.ups1.push_back(rng.rational());
    u.ups2 = random_skew(rng);
    return u;
  }

  ConnectionData random_connection(RationalSampler& rng) const {
    ConnectionData c;
    for (int i = 0; i < n_; ++i) c.z_m1.push_back(rng.rational());
    c.z_m2 = random_skew(rng);
    for (int i = 0; i < n_; ++i) c.p1.push_back(rng.rational());
    c.p2 = random_skew(rng);
    return c;
  }

  SlotJet random_jet(RationalSampler& rng) const {
    SlotJet j;
    for (int i = 0; i < n_; ++i) j.dv.push_back(rng.rational());
    j.dtau = rng.rational();
    for (int i = 0; i < n_; ++i) j.dx.push_back(rng.rational());
    return j;
  }

  DenseMatrix random_skew(RationalSampler& rng) const {
    DenseMatrix b(n_, n_);
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) {
        b.at(i, j) = rng.rational();
        b.at(j, i) = -b.at(i, j);
      }
    }
    return b;
  }

 private:
  // g(2) acting on g(-1): covector-slot coordinates of the bracket.
  Vec bracket_p2_m1(const DenseMatrix& B, const Vec& x) const {
    LieElement belt = LieElement::from_blocks(n_, DenseMatrix(n_, n_), Vec(n_, ExactScalar(0)),
                                              B, Vec(n_, ExactScalar(0)), DenseMatrix(n_, n_));
    LieElement welt = LieElement::from_blocks(n_, DenseMatrix(n_, n_), Vec(n_, ExactScalar(0)),
                                              DenseMatrix(n_, n_), x, DenseMatrix(n_, n_));
    LieElement br = bracket(belt, welt);
    Vec out;
    for (int i = 0; i < n_; ++i) out.push_back(br.block_v(i));
    return out;
  }

  // g(-2) acting on g(1): vector-slot coordinates of the bracket.
  Vec bracket_m2_p1(const DenseMatrix& C, const Vec& v) const {
    LieElement celt = LieElement::from_blocks(n_, DenseMatrix(n_, n_), Vec(n_, ExactScalar(0)),
                                              DenseMatrix(n_, n_), Vec(n_, ExactScalar(0)), C);
    LieElement velt = LieElement::from_blocks(n_, DenseMatrix(n_, n_), v, DenseMatrix(n_, n_),
                                              Vec(n_, ExactScalar(0)), DenseMatrix(n_, n_));
    LieElement br = bracket(celt, velt);
    Vec out;
    for (int i = 0; i < n_; ++i) out.push_back(br.block_w(i));
    return out;
  }

  int n_;
};

}  // namespace cartankit
