#pragma once

// Branch modules, the (Y, P) parametrization of large tilting and cotilting
// modules, and their minimality tests.
//
// A pair (Y, P) consists of a branch module Y and a set P of declared tubes.
// Both descriptors are normalized: summands sorted, quasi-simple sets sorted,
// so equality of descriptors is equality of their parts lists.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "regulus/tube.hpp"

namespace regulus {

/// A finite set of segments, kept sorted and duplicate-free once validated.
struct BranchModule {
  std::vector<Segment> summands;

  bool empty() const { return summands.empty(); }
  std::vector<Segment> in_tube(std::string_view tube) const;

  bool operator==(const BranchModule&) const = default;
};

struct BranchCheck {
  bool ok = true;
  std::string diagnostic;  // first violation, empty when ok

  explicit operator bool() const { return ok; }
};

bool is_exceptional(const std::vector<Segment>& y);

/// Definitional check: multiplicity-free, lengths below rank, exceptional and
/// the wing count. Summands are checked in sorted order.
BranchCheck check_branch_module(const std::vector<Segment>& y);
inline bool is_branch_module(const std::vector<Segment>& y) { return check_branch_module(y).ok; }

struct Pair {
  TubeConfig config;
  BranchModule Y;
  std::vector<std::string> P;  // sorted tube ids

  bool in_P(std::string_view tube) const;
};

/// Validates Y and P against the configuration and normalizes both.
/// Throws ConfigError for undeclared tubes, ValidationError if Y is not a
/// branch module.
Pair build_pair(TubeConfig config, std::vector<Segment> y, std::vector<std::string> p);

/// Maximal summands of Y in the tube, sorted by socle. Throws
/// InvariantViolation if two wings overlap.
std::vector<Wing> wings_of(const BranchModule& y, std::string_view tube);

std::vector<QuasiSimple> compute_V(const Pair& pair);
std::vector<QuasiSimple> compute_U(const Pair& pair);

struct TiltingDescriptor {
  BranchModule Y;
  std::vector<std::string> P;
  std::vector<QuasiSimple> V;
  std::vector<QuasiSimple> U;
  /// Y-summands, then L (x) R_V, then one Pruefer module per element of U.
  std::vector<FormalModule> parts;

  bool operator==(const TiltingDescriptor& o) const { return parts == o.parts; }
};

struct CotiltingDescriptor {
  BranchModule Y;
  std::vector<std::string> P;
  bool generic = true;
  std::vector<QuasiSimple> pruefer_set;
  std::vector<QuasiSimple> adic_set;
  /// Y-summands, G, Pruefer modules, adic modules.
  std::vector<FormalModule> parts;

  bool operator==(const CotiltingDescriptor& o) const { return parts == o.parts; }
};

TiltingDescriptor build_tilting(const Pair& pair);
CotiltingDescriptor build_cotilting(const Pair& pair);

bool is_minimal_tilting(const TiltingDescriptor& desc);
bool is_minimal_cotilting(const CotiltingDescriptor& desc);

/// Visits every branch module supported on the non-homogeneous tubes of the
/// configuration (or of `restrict_tubes` when given), in a fixed order.
void for_each_branch_module(const TubeConfig& config, const std::function<void(const BranchModule&)>& visit,
                            const std::optional<std::vector<std::string>>& restrict_tubes = std::nullopt);
std::vector<BranchModule> enumerate_branch_modules(
    const TubeConfig& config, const std::optional<std::vector<std::string>>& restrict_tubes = std::nullopt);

/// Z in Gen T: Z lies in S[inf]^{perp_1} for every S in U and in Y^{perp_1}.
bool genT_contains_regular(const TiltingDescriptor& desc, const Segment& z);

/// Regular part of the class S: rays starting in U and initial pieces of rays
/// ending at a Y-summand.
bool s_category_contains(const TiltingDescriptor& desc, const Segment& m);

}  // namespace regulus
