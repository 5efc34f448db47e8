#pragma once

// Hom and Ext^1 dimensions between segments.
//
// The combinatorial route counts overlap maps: a nonzero map S_i[a] -> S_j[b]
// with image of length c exists exactly when the top c factors of the source
// coincide with the bottom c factors of the target, i.e. j = i + a - c mod r.
// Ext^1 then follows from the Euler form. The oracle route computes both
// numbers as exact ranks in the cyclic-quiver model. Segments in different
// tubes are Hom- and Ext-orthogonal.

#include <optional>
#include <vector>

#include "regulus/cyclic_rep.hpp"
#include "regulus/tube.hpp"

namespace regulus {

/// One basis map between segments, determined by its image length.
struct HomBasisMap {
  Segment source;
  Segment target;
  int overlap = 0;

  std::optional<Segment> kernel() const;
  Segment image() const;
  std::optional<Segment> cokernel() const;
};

/// All basis maps source -> target, ordered by overlap.
std::vector<HomBasisMap> overlap_maps(const Segment& source, const Segment& target);

int hom_dim(const Segment& x, const Segment& y);

/// <dim x, dim y> for the validated arrow orientation.
int euler_form(const Segment& x, const Segment& y);

/// hom_dim(x, y) - euler_form(x, y).
int ext_dim(const Segment& x, const Segment& y);

/// The orientation under which Ext^1(S_i, S_{i-1}) = 1 in the oracle model,
/// matching the AR formula with tau S_i = S_{i-1}. Selected once by a
/// self-test on a rank-3 tube; throws InvariantViolation if neither
/// orientation passes.
ArrowOrientation validated_orientation();

HomExtDims hom_ext_oracle(const Segment& x, const Segment& y, ArrowOrientation orientation);
int hom_dim_oracle(const Segment& x, const Segment& y);
int ext_dim_oracle(const Segment& x, const Segment& y);

/// True iff Ext^1(S[n], z) = 0 for all n >= 1, i.e. z lies in S[inf]^{perp_1}.
/// Decided at n = z.length, beyond which the overlap count is constant.
bool pruefer_perp1_member(const QuasiSimple& s, const Segment& z);

/// True iff Hom(x, S[n]) = 0 for all n >= 1; decided at n = x.length.
bool hom_to_ray_vanishes(const Segment& x, const QuasiSimple& s);

}  // namespace regulus
