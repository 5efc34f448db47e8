#pragma once

// Nilpotent representations of the cyclic quiver over Q, used as the exact
// linear-algebra oracle for Hom and Ext between segments.

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "regulus/tube.hpp"

namespace regulus {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  mpq_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpq_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix operator*(const RationalMatrix& rhs) const;
  bool is_zero() const;

  /// Exact rank by Gaussian elimination.
  std::size_t rank() const;
  /// Basis of the right kernel {x : A x = 0}, one column vector per entry.
  std::vector<std::vector<mpq_class>> nullspace() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpq_class> data_;
};

/// Which way the r arrows of the cyclic quiver point.
enum class ArrowOrientation {
  TowardPredecessor,  // v -> v-1
  TowardSuccessor,    // v -> v+1
};

/// Vector spaces at vertices 1..rank and one linear map per arrow. The arrow
/// leaving vertex v is stored at arrows[v-1] and maps V_v to V_{target(v)}.
struct CyclicRep {
  int rank = 1;
  ArrowOrientation orientation = ArrowOrientation::TowardPredecessor;
  std::vector<int> dims;
  std::vector<RationalMatrix> arrows;

  int arrow_target(int v) const;
};

/// A single uniserial chain of length seg.length whose basis vector e_t sits at
/// vertex socle + t. Under TowardPredecessor the arrows send e_{t+1} to e_t, so
/// e_0 spans the socle; under TowardSuccessor they send e_t to e_{t+1}.
CyclicRep as_cyclic_rep(const Segment& seg, ArrowOrientation orientation);

struct HomExtDims {
  int hom = 0;
  int ext = 0;
};

/// Ranks of the two-term complex
///   0 -> Hom(M,N) -> (+)_v Hom(M_v,N_v) -> (+)_arrows Hom(M_s,N_t) -> Ext^1(M,N) -> 0.
HomExtDims hom_ext_from_complex(const CyclicRep& m, const CyclicRep& n);

/// Endomorphisms of a uniserial chain rep; the radical is taken as the
/// endomorphisms acting by zero on the top basis vector.
struct EndomorphismSummary {
  int dimension = 0;
  int radical_dimension = 0;
  bool radical_nilpotent = true;

  bool local() const { return dimension - radical_dimension == 1 && radical_nilpotent; }
};
EndomorphismSummary endomorphism_summary(const CyclicRep& m);

}  // namespace regulus
