#include "regulus/cyclic_rep.hpp"

#include <numeric>
#include <utility>

namespace regulus {

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  RationalMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const mpq_class& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        if (sgn(rhs(k, j)) != 0) out(i, j) += a * rhs(k, j);
    }
  return out;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && sgn(a(p, col)) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t c = col; c < a.cols(); ++c) std::swap(a(p, c), a(row, c));
    const mpq_class inv = 1 / a(row, col);
    for (std::size_t c = col; c < a.cols(); ++c)
      if (sgn(a(row, c)) != 0) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || sgn(a(r, col)) == 0) continue;
      const mpq_class f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        if (sgn(a(row, c)) != 0) a(r, c) -= f * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t RationalMatrix::rank() const {
  RationalMatrix copy = *this;
  return row_reduce(copy).size();
}

std::vector<std::vector<mpq_class>> RationalMatrix::nullspace() const {
  RationalMatrix r = *this;
  const auto pivots = row_reduce(r);
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<mpq_class>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<mpq_class> v(cols_);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

int CyclicRep::arrow_target(int v) const {
  return orientation == ArrowOrientation::TowardPredecessor ? reduce_index(v - 1, rank) : reduce_index(v + 1, rank);
}

CyclicRep as_cyclic_rep(const Segment& seg, ArrowOrientation orientation) {
  CyclicRep rep;
  rep.rank = seg.rank;
  rep.orientation = orientation;
  rep.dims = dim_vector(seg);

  // Position of e_t inside V_{socle+t}: the number of earlier chain vectors at
  // the same vertex.
  std::vector<int> slot(seg.length);
  std::vector<int> seen(seg.rank, 0);
  for (int t = 0; t < seg.length; ++t) slot[t] = seen[reduce_index(seg.socle + t, seg.rank) - 1]++;

  rep.arrows.reserve(seg.rank);
  for (int v = 1; v <= seg.rank; ++v)
    rep.arrows.emplace_back(rep.dims[rep.arrow_target(v) - 1], rep.dims[v - 1]);

  for (int t = 0; t + 1 < seg.length; ++t) {
    const int lower = reduce_index(seg.socle + t, seg.rank);
    const int upper = reduce_index(seg.socle + t + 1, seg.rank);
    if (orientation == ArrowOrientation::TowardPredecessor)
      rep.arrows[upper - 1](slot[t], slot[t + 1]) = 1;  // e_{t+1} -> e_t
    else
      rep.arrows[lower - 1](slot[t + 1], slot[t]) = 1;  // e_t -> e_{t+1}
  }
  return rep;
}

namespace {

struct BlockLayout {
  std::vector<std::size_t> offset;
  std::size_t total = 0;
};

BlockLayout vertex_blocks(const CyclicRep& m, const CyclicRep& n) {
  BlockLayout b;
  for (int v = 0; v < m.rank; ++v) {
    b.offset.push_back(b.total);
    b.total += static_cast<std::size_t>(m.dims[v]) * n.dims[v];
  }
  return b;
}

// The differential (f_v) |-> N_a f_s - f_t M_a, with f_v stored row-major as a
// dims_n[v] x dims_m[v] block.
RationalMatrix differential(const CyclicRep& m, const CyclicRep& n, const BlockLayout& cols) {
  BlockLayout rows;
  for (int v = 1; v <= m.rank; ++v) {
    rows.offset.push_back(rows.total);
    rows.total += static_cast<std::size_t>(m.dims[v - 1]) * n.dims[m.arrow_target(v) - 1];
  }
  RationalMatrix d(rows.total, cols.total);
  for (int s = 1; s <= m.rank; ++s) {
    const int t = m.arrow_target(s);
    const int ms = m.dims[s - 1], mt = m.dims[t - 1], ns = n.dims[s - 1], nt = n.dims[t - 1];
    const auto& ma = m.arrows[s - 1];  // mt x ms
    const auto& na = n.arrows[s - 1];  // nt x ns
    // Row (p, q) of the target block is entry (p, q) of an nt x ms matrix.
    for (int p = 0; p < nt; ++p)
      for (int q = 0; q < ms; ++q) {
        const std::size_t row = rows.offset[s - 1] + static_cast<std::size_t>(p) * ms + q;
        for (int k = 0; k < ns; ++k)
          if (sgn(na(p, k)) != 0) d(row, cols.offset[s - 1] + static_cast<std::size_t>(k) * ms + q) += na(p, k);
        for (int k = 0; k < mt; ++k)
          if (sgn(ma(k, q)) != 0) d(row, cols.offset[t - 1] + static_cast<std::size_t>(p) * mt + k) -= ma(k, q);
      }
  }
  return d;
}

}  // namespace

HomExtDims hom_ext_from_complex(const CyclicRep& m, const CyclicRep& n) {
  const auto cols = vertex_blocks(m, n);
  const auto d = differential(m, n, cols);
  const auto rk = static_cast<int>(d.rank());
  return {static_cast<int>(cols.total) - rk, static_cast<int>(d.rows()) - rk};
}

EndomorphismSummary endomorphism_summary(const CyclicRep& m) {
  const auto cols = vertex_blocks(m, m);
  const auto basis = differential(m, m, cols).nullspace();

  const int total = std::accumulate(m.dims.begin(), m.dims.end(), 0);
  std::vector<int> vertex_offset(m.rank, 0);
  for (int v = 1; v < m.rank; ++v) vertex_offset[v] = vertex_offset[v - 1] + m.dims[v - 1];

  auto assemble = [&](const std::vector<mpq_class>& x) {
    RationalMatrix f(total, total);
    for (int v = 0; v < m.rank; ++v)
      for (int p = 0; p < m.dims[v]; ++p)
        for (int q = 0; q < m.dims[v]; ++q)
          f(vertex_offset[v] + p, vertex_offset[v] + q) = x[cols.offset[v] + static_cast<std::size_t>(p) * m.dims[v] + q];
    return f;
  };

  // The chain generator is the basis vector not in the image of any arrow.
  std::size_t top = 0;
  {
    std::vector<bool> hit(total, false);
    for (int s = 1; s <= m.rank; ++s) {
      const int t = m.arrow_target(s);
      const auto& a = m.arrows[s - 1];
      for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
          if (sgn(a(r, c)) != 0) hit[vertex_offset[t - 1] + r] = true;
    }
    for (int i = 0; i < total; ++i)
      if (!hit[i]) top = i;
  }

  EndomorphismSummary out;
  out.dimension = static_cast<int>(basis.size());
  // Split the basis by the coefficient on the top vector: one element with
  // nonzero coefficient spans the complement, the rest are corrected into the
  // radical.
  std::vector<RationalMatrix> mats;
  for (const auto& b : basis) mats.push_back(assemble(b));
  int lead = -1;
  for (std::size_t i = 0; i < mats.size(); ++i)
    if (sgn(mats[i](top, top)) != 0) {
      lead = static_cast<int>(i);
      break;
    }
  for (std::size_t i = 0; i < mats.size(); ++i) {
    if (static_cast<int>(i) == lead) continue;
    RationalMatrix f = mats[i];
    if (lead >= 0 && sgn(f(top, top)) != 0) {
      const mpq_class c = f(top, top) / mats[lead](top, top);
      for (std::size_t r = 0; r < f.rows(); ++r)
        for (std::size_t col = 0; col < f.cols(); ++col) f(r, col) -= c * mats[lead](r, col);
    }
    ++out.radical_dimension;
    RationalMatrix power = f;
    for (int k = 1; k < total; ++k) power = power * f;
    if (total > 0 && !power.is_zero()) out.radical_nilpotent = false;
  }
  return out;
}

}  // namespace regulus
