#pragma once

// Combinatorics of stable tubes.
//
// A tube of rank r has quasi-simples S_1, ..., S_r. The segment S_i[l] is the
// indecomposable regular module with regular socle S_i and regular length l;
// its regular composition factors, read from socle to top, are
// S_i, S_{i+1}, ..., S_{i+l-1} with indices taken mod r in [1, r]. Rays fix the
// socle and grow the top, and tau^{-1} shifts every index by +1.

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace regulus {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an internal invariant that must hold for valid inputs fails.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Reduces an arbitrary integer index into [1, rank].
constexpr int reduce_index(int index, int rank) {
  int r = (index - 1) % rank;
  if (r < 0) r += rank;
  return r + 1;
}

struct TubeSpec {
  std::string id;
  int rank = 1;

  bool operator==(const TubeSpec&) const = default;
};

/// The finite set of declared tubes. Undeclared tubes are treated as
/// homogeneous and irrelevant.
class TubeConfig {
 public:
  TubeConfig() = default;
  explicit TubeConfig(std::vector<TubeSpec> tubes);

  const std::vector<TubeSpec>& tubes() const { return tubes_; }
  bool contains(std::string_view id) const;
  /// Throws ConfigError for unknown ids.
  int rank(std::string_view id) const;
  int max_rank() const;

  bool operator==(const TubeConfig&) const = default;

 private:
  std::vector<TubeSpec> tubes_;
};

struct Segment;

struct QuasiSimple {
  std::string tube;
  int rank = 1;
  int index = 1;

  Segment ray(int length) const;
  QuasiSimple tau(int power = 1) const;

  auto operator<=>(const QuasiSimple&) const = default;
};

struct Segment {
  std::string tube;
  int rank = 1;
  int socle = 1;
  int length = 1;

  /// Index of the regular top.
  int top() const { return reduce_index(socle + length - 1, rank); }
  QuasiSimple socle_simple() const { return {tube, rank, socle}; }
  QuasiSimple top_simple() const { return {tube, rank, top()}; }
  bool same_tube(const Segment& other) const { return tube == other.tube; }
  /// tau^power; negative powers apply tau^{-1}.
  Segment tau(int power = 1) const;

  auto operator<=>(const Segment&) const = default;
};

/// Builds a validated segment. Throws ConfigError for an unknown tube and
/// ValidationError for an out-of-range socle or length < 1.
Segment make_segment(const TubeConfig& config, std::string_view tube, int socle, int length);
QuasiSimple make_quasi_simple(const TubeConfig& config, std::string_view tube, int index);

/// All quasi-simples of one declared tube, in index order.
std::vector<QuasiSimple> quasi_simples(const TubeConfig& config, std::string_view tube);

/// Regular composition factors from socle to top, with multiplicity.
std::vector<int> comp_factors(const Segment& seg);

inline Segment tau(const Segment& seg, int power) { return seg.tau(power); }

using DimensionVector = std::vector<int>;

/// Entry v-1 holds the multiplicity of S_v in the segment.
DimensionVector dim_vector(const Segment& seg);

/// The wing rooted in a segment of length m < rank: the m(m+1)/2 segments
/// S_{i+k}[t] with 0 <= k < m and 1 <= t <= m - k.
class Wing {
 public:
  /// Throws ValidationError when root.length >= rank.
  explicit Wing(Segment root);

  const Segment& root() const { return root_; }
  int size() const { return root_.length; }
  bool contains(const Segment& seg) const;
  std::vector<Segment> members() const;
  /// Quasi-simples S_i, ..., S_{i+m-1} in the order they appear on the mouth.
  std::vector<QuasiSimple> support() const;

  bool operator==(const Wing&) const = default;

 private:
  Segment root_;
};

inline std::vector<Segment> wing_members(const Wing& w) { return w.members(); }

/// Text notation "<tube>:S<i>[<l>]", e.g. "t1:S3[5]".
std::string to_string(const Segment& seg);
/// Text notation "<tube>:S<i>".
std::string to_string(const QuasiSimple& qs);

Segment parse_segment(const TubeConfig& config, std::string_view text);
/// Accepts "t1:S2" and "t1:S2[1]".
QuasiSimple parse_quasi_simple(const TubeConfig& config, std::string_view text);

/// Infinite-dimensional modules carried only as formal symbols.
struct FormalModule {
  enum class Kind { Segment, Pruefer, Adic, Generic, LukasLocalized };

  Kind kind = Kind::Generic;
  std::optional<Segment> segment;         // Segment kind
  std::optional<QuasiSimple> quasi_simple;  // Pruefer and Adic
  std::vector<QuasiSimple> localized_at;  // LukasLocalized, sorted

  static FormalModule of(Segment seg);
  static FormalModule pruefer(QuasiSimple qs);
  static FormalModule adic(QuasiSimple qs);
  static FormalModule generic();
  static FormalModule lukas_localized(std::vector<QuasiSimple> v);

  bool operator==(const FormalModule&) const = default;
};

std::string to_string(const FormalModule& m);

}  // namespace regulus
