#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cartankit/rng.hpp"
#include "cartankit/zorn.hpp"

namespace cartankit {

// Derivations of the split octonions: linear maps D with
// D(xy) = D(x) y + x D(y), computed as the kernel of an exact linear system
// in the 8x8 matrix entries.  The result is the split real form of the
// 14-dimensional exceptional algebra.
struct DerivationAlgebra {
  int dim = 0;
  std::vector<DenseMatrix> basis;        // 8x8 matrices acting on coords8
  bool annihilates_one = true;
  bool preserves_imaginary = true;
  bool norm_skew = true;                 // N(Dx, y) + N(x, Dy) = 0
  bool kills_triple_form = true;
};
DerivationAlgebra derivation_algebra();

// A 3-dimensional isotropic subspace of imaginary split octonions.
struct ImPlane {
  std::array<ZornOct, 3> basis;
  bool valid = false;  // dimension 3, imaginary, totally isotropic
};

enum class PlaneKind { Open, Closed };

// theta = N(b1 b2, b3) vanishes on every basis triple of a closed plane and
// is nonzero for an open one; on isotropic planes this is basis-independent
// up to scale.
PlaneKind classify_plane(const ImPlane& p);

ImPlane make_plane(const ZornOct& b1, const ZornOct& b2, const ZornOct& b3);

// Standard representatives.
ImPlane standard_open_plane();    // x = (0,e1;0,0), y = (0,e2;0,0), z = (0,e3;0,0)
ImPlane standard_closed_plane();  // z, (0,0;e2,0), (0,0;e3,0)

// {u imaginary : uz = 0 and zu = 0} for isotropic z: a closed plane.
std::vector<ZornOct> two_sided_kernel(const ZornOct& z);

// Random samplers (exact, seeded): isotropic imaginary elements via a linear
// correction of one coordinate; open planes by solving the isotropy and
// orthogonality conditions linearly slot by slot; closed planes as two-sided
// kernels of random isotropic elements.
ZornOct random_isotropic_imaginary(RationalSampler& rng);
ImPlane random_open_plane(RationalSampler& rng);
ImPlane random_closed_plane(RationalSampler& rng);

// Rescale the first basis vector so that theta = 1/2, as is always possible
// for an open plane.
ImPlane normalise_open_triple(const ImPlane& p);

// The 7x7 products of the ordered tuple (a, x, y, z, yz, zx, xy) attached to
// a normalised open triple, where yz, zx, xy are the pairwise products and
// a = [xy, z].  Entries are exact coordinate vectors in the 8-element basis
// (1, a, x, y, z, yz, zx, xy).
struct TripleTable {
  std::array<std::array<Vec, 7>, 7> entry;
  bool operator==(const TripleTable& o) const { return entry == o.entry; }
};
std::optional<TripleTable> triple_table(const ImPlane& open_plane);

// The canonical table, which every normalised open triple reproduces.
TripleTable expected_triple_table();
std::string table_entry_text(const Vec& coords8);

// Stabiliser of a plane inside the derivation algebra, with its Killing
// form rank (8 = semisimple for the open orbit, 4 for the closed one).
struct PlaneStabiliser {
  int dim = 0;
  int killing_rank = 0;
  bool semisimple = false;
};
PlaneStabiliser plane_stabiliser(const ImPlane& p);

// Closure of a closed plane under multiplication (open planes multiply to
// zero pairwise in the normalised basis instead).
bool multiplication_closed(const ImPlane& p);

}  // namespace cartankit
