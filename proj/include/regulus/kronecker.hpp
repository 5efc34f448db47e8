#pragma once

// Epiclasses, bireflective subcategories and silting modules of the Kronecker
// algebra, with the rule table deciding whether T (x) S lies in Gen T.
//
// Vertex 2 is the sink: P_1 = (0,1) is simple projective, Q_1 = (1,0) simple
// injective, and the Euler form is <x, y> = x1 y1 + x2 y2 - 2 x1 y2.
// Finite Hom and Ext^1 values come from the Euler form together with the
// vanishing of maps against the direction of the AR quiver. Statements about
// infinite dimensional modules enter only as named axioms.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace regulus::kronecker {

class RuleMissing : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

using Dim = std::array<int, 2>;

int euler(const Dim& x, const Dim& y);

/// Finite dimensional indecomposables used by the rule table.
struct FiniteObject {
  enum class Kind { Pre, Inj, Reg };
  Kind kind = Kind::Pre;
  int index = 1;  // i for P_i and Q_i, regular length n for Reg
  std::string point;  // Reg only

  Dim dim() const;
};

FiniteObject pre(int i);
FiniteObject inj(int i);
FiniteObject reg(std::string point, int n);

int hom_dim(const FiniteObject& a, const FiniteObject& b);
int ext_dim(const FiniteObject& a, const FiniteObject& b);

/// Symbolic objects, finite and infinite dimensional.
struct KronObject {
  enum class Kind { Pre, Inj, Reg, Lukas, Generic, PrueferAt, AdicAt, Zero };
  Kind kind = Kind::Zero;
  int index = 0;
  std::string point;

  std::optional<Dim> dim() const;
  std::string name() const;
};

struct Bireflective {
  enum class Kind { Zero, All, AddInj, AddPre, RegPerp };
  Kind kind = Kind::All;
  int index = 0;  // AddInj(i), AddPre(i)
  std::vector<std::string> points;  // RegPerp(U), sorted

  std::string name() const;
  bool operator==(const Bireflective&) const = default;
};

struct EpiClass {
  enum class Kind { Zero, Identity, LocP, LocQ, LocReg };
  Kind kind = Kind::Identity;
  int index = 0;
  std::vector<std::string> points;  // LocReg, sorted and non-empty
  Bireflective bireflective;

  /// Surjective epimorphisms: R -> 0, id, and localization at P_1 or P_2.
  bool surjective() const;
  std::string name() const;
  bool operator==(const EpiClass&) const = default;
};

struct GenClass {
  enum class Kind { Zero, AddP1, AddQ1, PreGen, InjGen, RegPerp1, PerpZeroPre };
  Kind kind = Kind::Zero;
  int index = 0;  // PreGen(j): Hom(-, P_k) = 0 for k < j; InjGen(j): add(Q_1..Q_{j+1})
  std::vector<std::string> points;  // RegPerp1(V)

  std::string name() const;
  bool operator==(const GenClass&) const = default;
};

struct SiltingEntry {
  enum class Kind { Zero, SimpleProj, SimpleInj, PrePair, InjPair, RegLoc, Lukas };
  Kind kind = Kind::Zero;
  int index = 0;
  std::vector<std::string> points;
  GenClass gen_class;
  bool tilting = true;
  bool minimal = true;
  std::string note;

  std::string name() const;
  /// Indecomposable summands, or nullopt for entries with infinite summands.
  std::optional<std::vector<FiniteObject>> finite_summands() const;
  bool operator==(const SiltingEntry&) const = default;
};

/// Non-empty subsets of the points, ordered by size, then lexicographically.
std::vector<std::vector<std::string>> nonempty_subsets(std::vector<std::string> points);

/// LocP(i) for 1 <= i <= max_i + 1, LocQ(i) for 1 <= i <= max_i.
std::vector<EpiClass> epiclass_catalog(int max_i, const std::vector<std::string>& points);
/// PrePair(i), InjPair(i) for 1 <= i <= max_i.
std::vector<SiltingEntry> silting_catalog(int max_i, const std::vector<std::string>& points);

Bireflective bireflective_of(const EpiClass& e);

/// A decision together with the rule that produced it.
struct Decision {
  bool value = false;
  std::string rule;
};

/// Is there a nonzero map from T to some module of the class?
Decision hom_nonzero(const SiltingEntry& t, const Bireflective& x);

/// Relation between Gen T and a bireflective class.
enum class ClassRelation { Contained, Disjoint, Overlap };
struct RelationDecision {
  ClassRelation relation = ClassRelation::Overlap;
  std::string rule;
};
RelationDecision relation(const GenClass& g, const Bireflective& x);

/// Whether T (x)_R S lies in Gen T. Throws RuleMissing for combinations the
/// table does not decide.
Decision extension_check(const SiltingEntry& t, const EpiClass& e);

bool extends_along_all(const SiltingEntry& t, const std::vector<EpiClass>& catalog);

/// The silting module S (+) Coker(R -> S) attached to an epiclass.
SiltingEntry induced_silting(const EpiClass& e);

}  // namespace regulus::kronecker
