#pragma once

// The generator set Q of the wide subcategory M attached to a pair (Y, P),
// an exact finite description of M, filtration witnesses for S[r] in M, and
// the truncated check that Gen T equals the right Ext-perpendicular of M.
//
// M is described per tube by its relative simples: the semibrick B obtained
// from Q(lambda) by repeatedly replacing two members joined by a nonzero
// non-invertible map with kernel, image and cokernel. The indecomposables of
// M in that tube are exactly the segments admitting a filtration with
// consecutive factors in B.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regulus/tilting.hpp"
#include "regulus/tube.hpp"

namespace regulus {

/// Longest Y-summand on each ray starting in the wing's support.
std::vector<Segment> x_of_wing(const Wing& w, const BranchModule& y);
/// As x_of_wing, omitting the ray of the root's socle.
std::vector<Segment> x_tilde_of_wing(const Wing& w, const BranchModule& y);

/// One R_j per wing, in wing order. The gap after wing j runs up to the
/// socle of the next wing, cyclically.
std::vector<std::vector<Segment>> r_set_parts(int rank, const std::vector<Wing>& wings);
/// Union of r_set_parts, sorted.
std::vector<Segment> r_sets(int rank, const std::vector<Wing>& wings);

struct TubeQ {
  std::string tube;
  int rank = 1;
  bool in_P = false;
  bool whole_tube = false;  // tube in P without Y-summands
  std::vector<Wing> wings;
  std::vector<Segment> x_set;
  std::vector<Segment> r_set;
  std::vector<Segment> q_set;  // empty for whole tubes
};

struct QSet {
  std::vector<TubeQ> tubes;  // declared order; only tubes in Q or P

  /// Tubes meeting add Y.
  std::vector<std::string> q_tubes() const;
  const TubeQ* find(std::string_view tube) const;
  /// Membership of a segment in Q(lambda); every segment of a whole tube counts.
  bool is_generator(const Segment& s) const;
};

QSet q_set(const Pair& pair);

/// Kernel/image/cokernel reduction of a finite set of segments in one tube.
std::vector<Segment> semibrick_closure(std::vector<Segment> generators);

struct TubeWide {
  std::string tube;
  int rank = 1;
  bool whole_tube = false;
  std::vector<Segment> simples;  // relative simples of M in this tube
  /// Rays carrying arbitrarily long members.
  std::vector<QuasiSimple> full_rays;
  /// Bounded rays and the length of their longest member.
  std::vector<std::pair<QuasiSimple, int>> caps;

  bool contains(const Segment& s) const;
};

struct WideDescription {
  std::vector<TubeWide> tubes;

  const TubeWide* find(std::string_view tube) const;
  bool contains(const Segment& s) const;
  /// Members of length <= len_bound in the described tubes.
  std::vector<Segment> members(int len_bound) const;
};

/// Fills in full_rays and caps from `simples`.
void summarize(TubeWide& t);
WideDescription wide_description(const Pair& pair);
WideDescription wide_description(const QSet& qset);

enum class Provenance { Generator, PriorStep };

struct WitnessStep {
  Segment sub;
  Segment mid;
  Segment quot;
  Provenance sub_from = Provenance::Generator;
  Provenance quot_from = Provenance::Generator;
};

/// Short exact sequences 0 -> sub -> mid -> quot -> 0 ending in target.
struct FiltrationWitness {
  Segment target;
  std::vector<WitnessStep> steps;
};

class WitnessSearchFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shortest concatenation witness for S[r], S in U. Sub-intervals of S[r]
/// are assembled from generators, preferring fewest pieces and then the
/// earliest split. Throws WitnessSearchFailure if none exists.
FiltrationWitness prop6_witness(const QuasiSimple& s, const Pair& pair);
FiltrationWitness prop6_witness(const QuasiSimple& s, const QSet& qset);

/// The chain 0 -> S_{n_j}[n_{j+1}-n_j] -> S_{n_j}[r+n_1-n_j] ->
/// S_{n_{j+1}}[r+n_1-n_{j+1}] -> 0 for j = l-1, ..., 1, ending in S_{n_1}[r].
/// Requires the tube to be in Q and P.
FiltrationWitness case_i_chain(const TubeQ& tube);

struct WitnessCheck {
  bool ok = true;
  std::string diagnostic;

  explicit operator bool() const { return ok; }
};

WitnessCheck verify_witness(const FiltrationWitness& w, const QSet& qset);

/// Extends a witness for S[r] to S[nr] by 0 -> S[r(k-1)] -> S[kr] -> S[r] -> 0.
FiltrationWitness pruefer_chain(const FiltrationWitness& base, int n);

/// Ext^1(m, z) = 0 for every indecomposable m of M.
bool m_perp1_contains(const WideDescription& desc, const Segment& z);

struct Theorem8Mismatch {
  Segment z;
  bool genT = false;
  bool mperp = false;
};

struct Theorem8Report {
  std::size_t checked = 0;
  std::vector<Theorem8Mismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
};

/// Compares Gen T with M^{perp_1} on every segment of length <= len_bound in
/// the declared tubes. `desc` overrides the computed description.
Theorem8Report verify_theorem8(const Pair& pair, int len_bound,
                               const std::optional<WideDescription>& desc = std::nullopt);

/// Concatenations, kernels and cokernels of basis maps among members of
/// length <= len_bound, restricted to results of length <= len_bound.
std::vector<Segment> closure_step(const WideDescription& desc, int len_bound);

}  // namespace regulus
