#pragma once

// Independent reference implementations used only by tests. They work on
// plain (socle, length) pairs and share no code with the library beyond the
// Segment type used at the boundary.

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "regulus/tube.hpp"

namespace oracle {

struct Seg {
  int socle;
  int length;
  auto operator<=>(const Seg&) const = default;
};

inline int wrap(int i, int r) { return ((i - 1) % r + r) % r + 1; }

inline std::vector<int> factors(int r, Seg s) {
  std::vector<int> f;
  for (int t = 0; t < s.length; ++t) f.push_back(wrap(s.socle + t, r));
  return f;
}

/// Counts c such that the top c factors of x agree, in order, with the
/// bottom c factors of y.
inline int hom(int r, Seg x, Seg y) {
  const auto fx = factors(r, x);
  const auto fy = factors(r, y);
  int n = 0;
  for (int c = 1; c <= std::min(x.length, y.length); ++c)
    if (std::equal(fx.end() - c, fx.end(), fy.begin())) ++n;
  return n;
}

/// Ext^1(x, y) = D Hom(y, tau x) with tau S_i = S_{i-1}.
inline int ext(int r, Seg x, Seg y) { return hom(r, y, Seg{wrap(x.socle - 1, r), x.length}); }

inline bool in_wing(int r, Seg root, Seg s) {
  for (int k = 0; k < root.length; ++k)
    if (wrap(root.socle + k, r) == s.socle && s.length <= root.length - k) return true;
  return false;
}

inline bool is_branch(int r, const std::vector<Seg>& y) {
  for (auto a : y) {
    if (a.length >= r) return false;
    for (auto b : y)
      if (ext(r, a, b) != 0) return false;
  }
  for (auto a : y) {
    int count = 0;
    for (auto b : y) count += in_wing(r, a, b);
    if (count != a.length) return false;
  }
  return true;
}

/// Every subset of {S_i[l] : l < r} passing is_branch, by bitmask.
inline std::vector<std::vector<Seg>> branch_modules(int r) {
  std::vector<Seg> segs;
  for (int i = 1; i <= r; ++i)
    for (int l = 1; l < r; ++l) segs.push_back({i, l});
  std::vector<std::vector<Seg>> out;
  for (unsigned long mask = 0; mask < (1ul << segs.size()); ++mask) {
    std::vector<Seg> y;
    for (std::size_t k = 0; k < segs.size(); ++k)
      if (mask >> k & 1) y.push_back(segs[k]);
    if (is_branch(r, y)) out.push_back(y);
  }
  return out;
}

/// Quasi-simples of the tube not occurring in tau^{-1} Y.
inline std::set<int> U(int r, const std::vector<Seg>& y) {
  std::set<int> u;
  for (int i = 1; i <= r; ++i) u.insert(i);
  for (auto a : y)
    for (int f : factors(r, Seg{wrap(a.socle + 1, r), a.length})) u.erase(f);
  return u;
}

inline Seg of(const regulus::Segment& s) { return {s.socle, s.length}; }

inline regulus::Segment to_segment(const std::string& tube, int r, Seg s) { return {tube, r, s.socle, s.length}; }

}  // namespace oracle
