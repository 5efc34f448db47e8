#include "regulus/homext.hpp"

#include <algorithm>

namespace regulus {

std::optional<Segment> HomBasisMap::kernel() const {
  if (overlap == source.length) return std::nullopt;
  return Segment{source.tube, source.rank, source.socle, source.length - overlap};
}

Segment HomBasisMap::image() const { return Segment{target.tube, target.rank, target.socle, overlap}; }

std::optional<Segment> HomBasisMap::cokernel() const {
  if (overlap == target.length) return std::nullopt;
  return Segment{target.tube, target.rank, reduce_index(target.socle + overlap, target.rank), target.length - overlap};
}

namespace {

// Overlap lengths c in [1, min(a, b)] with c = i + a - j (mod r).
template <typename F>
void for_each_overlap(const Segment& x, const Segment& y, F&& f) {
  if (!x.same_tube(y)) return;
  const int r = x.rank;
  const int limit = std::min(x.length, y.length);
  int c = reduce_index(x.socle + x.length - y.socle, r);  // in [1, r]
  for (; c <= limit; c += r) f(c);
}

}  // namespace

std::vector<HomBasisMap> overlap_maps(const Segment& source, const Segment& target) {
  std::vector<HomBasisMap> out;
  for_each_overlap(source, target, [&](int c) { out.push_back({source, target, c}); });
  return out;
}

int hom_dim(const Segment& x, const Segment& y) {
  int n = 0;
  for_each_overlap(x, y, [&](int) { ++n; });
  return n;
}

int euler_form(const Segment& x, const Segment& y) {
  if (!x.same_tube(y)) return 0;
  const auto dx = dim_vector(x);
  const auto dy = dim_vector(y);
  const int r = x.rank;
  const auto orientation = validated_orientation();
  int value = 0;
  for (int v = 1; v <= r; ++v) {
    const int t = orientation == ArrowOrientation::TowardPredecessor ? reduce_index(v - 1, r) : reduce_index(v + 1, r);
    value += dx[v - 1] * dy[v - 1] - dx[v - 1] * dy[t - 1];
  }
  return value;
}

int ext_dim(const Segment& x, const Segment& y) {
  if (!x.same_tube(y)) return 0;
  return hom_dim(x, y) - euler_form(x, y);
}

namespace {

ArrowOrientation select_orientation() {
  const TubeConfig probe({{"probe", 3}});
  const Segment s2 = make_segment(probe, "probe", 2, 1);
  const Segment s1 = make_segment(probe, "probe", 1, 1);
  for (auto o : {ArrowOrientation::TowardPredecessor, ArrowOrientation::TowardSuccessor}) {
    const auto forward = hom_ext_oracle(s2, s1, o);
    const auto backward = hom_ext_oracle(s1, s2, o);
    if (forward.ext == 1 && backward.ext == 0) return o;
  }
  throw InvariantViolation("no arrow orientation satisfies Ext^1(S_i, S_{i-1}) = 1");
}

}  // namespace

ArrowOrientation validated_orientation() {
  static const ArrowOrientation chosen = select_orientation();
  return chosen;
}

HomExtDims hom_ext_oracle(const Segment& x, const Segment& y, ArrowOrientation orientation) {
  if (!x.same_tube(y)) return {};
  return hom_ext_from_complex(as_cyclic_rep(x, orientation), as_cyclic_rep(y, orientation));
}

int hom_dim_oracle(const Segment& x, const Segment& y) { return hom_ext_oracle(x, y, validated_orientation()).hom; }

int ext_dim_oracle(const Segment& x, const Segment& y) { return hom_ext_oracle(x, y, validated_orientation()).ext; }

bool pruefer_perp1_member(const QuasiSimple& s, const Segment& z) {
  if (s.tube != z.tube) return true;
  return ext_dim(s.ray(z.length), z) == 0;
}

bool hom_to_ray_vanishes(const Segment& x, const QuasiSimple& s) {
  if (s.tube != x.tube) return true;
  return hom_dim(x, s.ray(x.length)) == 0;
}

}  // namespace regulus
