#pragma once

#include <array>

#include "cartankit/dense_matrix.hpp"

namespace cartankit {

// The split octonions as Zorn vector matrices
//
//   x = ( a  v )      a, b scalars, v, w in R^3,
//       ( w  b )
//
// with product
//   (a,v;w,b)(a',v';w',b') = ( aa' + v.w',  av' + b'v + w x w' ;
//                              a'w + bw' - v x v',  bb' + v'.w )
// and norm N(x) = ab - v.w, which is multiplicative for this product.
struct ZornOct {
  ExactScalar a;
  std::array<ExactScalar, 3> v{};
  std::array<ExactScalar, 3> w{};
  ExactScalar b;

  static ZornOct zero();
  static ZornOct one();
  static ZornOct diag(const ExactScalar& a, const ExactScalar& b);
  static ZornOct vec_v(int i);  // (0, e_i; 0, 0)
  static ZornOct vec_w(int i);  // (0, 0; e_i, 0)

  ZornOct operator+(const ZornOct& r) const;
  ZornOct operator-(const ZornOct& r) const;
  ZornOct operator*(const ExactScalar& c) const;
  bool operator==(const ZornOct& r) const;
  bool is_zero() const;

  // Conjugation x -> xbar: swap the diagonal, negate the vectors.
  ZornOct conj() const;
  bool is_imaginary() const { return a == -b; }

  // Coordinates in the fixed basis (diag(1,0), diag(0,1), v_1..v_3, w_1..w_3).
  Vec coords8() const;
  static ZornOct from_coords8(const Vec& c);
  // Imaginary part coordinates (a-b)/2, v, w (length 7).
  Vec im_coords7() const;
  static ZornOct from_im_coords7(const Vec& c);
};

ZornOct zorn_mul(const ZornOct& x, const ZornOct& y);
ZornOct zorn_commutator(const ZornOct& x, const ZornOct& y);

// Quadratic norm N and its polarisation N(x, y) = (N(x+y) - N(x) - N(y))/2.
ExactScalar norm_quad(const ZornOct& x);
ExactScalar norm_polar(const ZornOct& x, const ZornOct& y);

// Associator (xy)z - x(yz); alternativity makes it alternating.
ZornOct associator(const ZornOct& x, const ZornOct& y, const ZornOct& z);

// The cubic form N(xy, z) on imaginary arguments.
ExactScalar triple_form(const ZornOct& x, const ZornOct& y, const ZornOct& z);

}  // namespace cartankit
