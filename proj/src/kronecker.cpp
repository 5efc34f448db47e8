#include "regulus/kronecker.hpp"

#include <algorithm>

namespace regulus::kronecker {

namespace {

// Facts about infinite dimensional modules, quoted from the classification
// rather than computed.
constexpr const char* kAxiomGenLukas = "axiom: Gen L = ^{perp_0}p, which contains every non-preprojective silting module";
constexpr const char* kAxiomRegPerpNoPre = "axiom: U^perp is contained in ^{perp_0}p";
constexpr const char* kAxiomRegPerpNoInj = "axiom: U^perp is contained in q^{perp_0}";
constexpr const char* kAxiomOtherPoints =
    "axiom: regular modules at points outside U lie in U^perp, since different tubes are Hom- and Ext-orthogonal";
constexpr const char* kAxiomLocalizedReflection =
    "axiom: R_V (x) S is an X-reflection of R_V, so Ext^1(V, R_V (x) S) = Ext^1(V, R_V) = 0 for V outside U";

std::string points_name(const std::vector<std::string>& pts) {
  std::string s = "{";
  for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? "," : "") + pts[i];
  return s + "}";
}

bool subset(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

int euler(const Dim& x, const Dim& y) { return x[0] * y[0] + x[1] * y[1] - 2 * x[0] * y[1]; }

Dim FiniteObject::dim() const {
  switch (kind) {
    case Kind::Pre:
      return {index - 1, index};
    case Kind::Inj:
      return {index, index - 1};
    case Kind::Reg:
      return {index, index};
  }
  return {0, 0};
}

FiniteObject pre(int i) { return {FiniteObject::Kind::Pre, i, {}}; }
FiniteObject inj(int i) { return {FiniteObject::Kind::Inj, i, {}}; }
FiniteObject reg(std::string point, int n) { return {FiniteObject::Kind::Reg, n, std::move(point)}; }

int hom_dim(const FiniteObject& a, const FiniteObject& b) {
  using K = FiniteObject::Kind;
  const int e = euler(a.dim(), b.dim());
  if (a.kind == K::Pre && b.kind == K::Pre) return std::max(0, e);
  if (a.kind == K::Inj && b.kind == K::Inj) return std::max(0, e);
  if (a.kind == K::Pre) return e;  // into Inj or Reg: no extensions
  if (a.kind == K::Reg && b.kind == K::Reg) return a.point == b.point ? std::min(a.index, b.index) : 0;
  if (a.kind == K::Reg && b.kind == K::Inj) return e;
  return 0;  // against the direction of the AR quiver
}

int ext_dim(const FiniteObject& a, const FiniteObject& b) { return hom_dim(a, b) - euler(a.dim(), b.dim()); }

std::optional<Dim> KronObject::dim() const {
  switch (kind) {
    case Kind::Pre:
      return pre(index).dim();
    case Kind::Inj:
      return inj(index).dim();
    case Kind::Reg:
      return reg(point, index).dim();
    case Kind::Zero:
      return Dim{0, 0};
    default:
      return std::nullopt;
  }
}

std::string KronObject::name() const {
  switch (kind) {
    case Kind::Pre:
      return "P" + std::to_string(index);
    case Kind::Inj:
      return "Q" + std::to_string(index);
    case Kind::Reg:
      return "R(" + point + "," + std::to_string(index) + ")";
    case Kind::Lukas:
      return "L";
    case Kind::Generic:
      return "G";
    case Kind::PrueferAt:
      return "S_" + point + "[inf]";
    case Kind::AdicAt:
      return "S_" + point + "[-inf]";
    case Kind::Zero:
      return "0";
  }
  return "?";
}

std::string Bireflective::name() const {
  switch (kind) {
    case Kind::Zero:
      return "0";
    case Kind::All:
      return "ModR";
    case Kind::AddInj:
      return "AddQ" + std::to_string(index);
    case Kind::AddPre:
      return "AddP" + std::to_string(index);
    case Kind::RegPerp:
      return points_name(points) + "^perp";
  }
  return "?";
}

bool EpiClass::surjective() const {
  return kind == Kind::Zero || kind == Kind::Identity || (kind == Kind::LocP && index <= 2);
}

std::string EpiClass::name() const {
  switch (kind) {
    case Kind::Zero:
      return "R->0";
    case Kind::Identity:
      return "id";
    case Kind::LocP:
      return "loc(P" + std::to_string(index) + ")";
    case Kind::LocQ:
      return "loc(Q" + std::to_string(index) + ")";
    case Kind::LocReg:
      return "loc" + points_name(points);
  }
  return "?";
}

std::string GenClass::name() const {
  switch (kind) {
    case Kind::Zero:
      return "0";
    case Kind::AddP1:
      return "AddP1";
    case Kind::AddQ1:
      return "AddQ1";
    case Kind::PreGen:
      return "Hom(-,P_k)=0,k<" + std::to_string(index);
    case Kind::InjGen:
      return "Add(Q1..Q" + std::to_string(index + 1) + ")";
    case Kind::RegPerp1:
      return points_name(points) + "^perp1";
    case Kind::PerpZeroPre:
      return "^perp0 p";
  }
  return "?";
}

std::string SiltingEntry::name() const {
  switch (kind) {
    case Kind::Zero:
      return "0";
    case Kind::SimpleProj:
      return "P1";
    case Kind::SimpleInj:
      return "Q1";
    case Kind::PrePair:
      return "P" + std::to_string(index) + "+P" + std::to_string(index + 1);
    case Kind::InjPair:
      return "Q" + std::to_string(index + 1) + "+Q" + std::to_string(index);
    case Kind::RegLoc:
      return "R_U+R_U/R" + points_name(points);
    case Kind::Lukas:
      return "L";
  }
  return "?";
}

std::optional<std::vector<FiniteObject>> SiltingEntry::finite_summands() const {
  switch (kind) {
    case Kind::Zero:
      return std::vector<FiniteObject>{};
    case Kind::SimpleProj:
      return std::vector<FiniteObject>{pre(1)};
    case Kind::SimpleInj:
      return std::vector<FiniteObject>{inj(1)};
    case Kind::PrePair:
      return std::vector<FiniteObject>{pre(index), pre(index + 1)};
    case Kind::InjPair:
      return std::vector<FiniteObject>{inj(index + 1), inj(index)};
    default:
      return std::nullopt;
  }
}

std::vector<std::vector<std::string>> nonempty_subsets(std::vector<std::string> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<std::vector<std::string>> out;
  const std::size_t n = points.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::string> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(points[i]);
    out.push_back(std::move(s));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

Bireflective bireflective_of(const EpiClass& e) {
  using B = Bireflective::Kind;
  switch (e.kind) {
    case EpiClass::Kind::Zero:
      return {B::Zero, 0, {}};
    case EpiClass::Kind::Identity:
      return {B::All, 0, {}};
    case EpiClass::Kind::LocP:
      return e.index == 1 ? Bireflective{B::AddInj, 1, {}} : Bireflective{B::AddPre, e.index - 1, {}};
    case EpiClass::Kind::LocQ:
      return {B::AddInj, e.index + 1, {}};
    case EpiClass::Kind::LocReg:
      return {B::RegPerp, 0, e.points};
  }
  return {};
}

std::vector<EpiClass> epiclass_catalog(int max_i, const std::vector<std::string>& points) {
  using K = EpiClass::Kind;
  std::vector<EpiClass> out;
  auto add = [&](K kind, int index, std::vector<std::string> pts) {
    EpiClass e{kind, index, std::move(pts), {}};
    e.bireflective = bireflective_of(e);
    out.push_back(std::move(e));
  };
  add(K::Zero, 0, {});
  add(K::Identity, 0, {});
  for (int i = 1; i <= max_i + 1; ++i) add(K::LocP, i, {});
  for (int i = 1; i <= max_i; ++i) add(K::LocQ, i, {});
  for (auto& u : nonempty_subsets(points)) add(K::LocReg, 0, std::move(u));
  return out;
}

std::vector<SiltingEntry> silting_catalog(int max_i, const std::vector<std::string>& points) {
  using K = SiltingEntry::Kind;
  using G = GenClass::Kind;
  std::vector<SiltingEntry> out;
  out.push_back({K::Zero, 0, {}, {G::Zero, 0, {}}, false, true, "not tilting"});
  out.push_back({K::SimpleProj, 0, {}, {G::AddP1, 0, {}}, false, true, "not tilting"});
  out.push_back({K::SimpleInj, 0, {}, {G::AddQ1, 0, {}}, false, true, "not tilting"});
  for (int i = 1; i <= max_i; ++i) out.push_back({K::PrePair, i, {}, {G::PreGen, i, {}}, true, true, ""});
  for (int i = 1; i <= max_i; ++i) out.push_back({K::InjPair, i, {}, {G::InjGen, i, {}}, true, true, ""});
  for (auto& v : nonempty_subsets(points)) out.push_back({K::RegLoc, 0, v, {G::RegPerp1, 0, v}, true, true, ""});
  out.push_back({K::Lukas, 0, {}, {G::PerpZeroPre, 0, {}}, true, false, "the unique non-minimal silting module"});
  return out;
}

RelationDecision relation(const GenClass& g, const Bireflective& x) {
  using B = Bireflective::Kind;
  using G = GenClass::Kind;
  using R = ClassRelation;
  if (x.kind == B::Zero) return {R::Contained, "the zero class lies in every class"};
  if (x.kind == B::All) {
    if (g.kind == G::PreGen && g.index == 1) return {R::Contained, "Gen R = Mod R"};
    return {R::Overlap, "Mod R versus a proper class"};
  }
  switch (g.kind) {
    case G::Zero:
      return {R::Disjoint, "Gen 0 = 0"};
    case G::AddP1:
      if (x.kind == B::AddPre) return {x.index == 1 ? R::Contained : R::Disjoint, "computed: compare with P1"};
      if (x.kind == B::AddInj) return {R::Disjoint, "computed: preinjectives are not P1"};
      return {R::Disjoint, "computed: Ext^1(S, P1) = -<dim S, dim P1> > 0 for S simple regular"};
    case G::AddQ1:
      if (x.kind == B::AddInj) return {x.index == 1 ? R::Contained : R::Disjoint, "computed: compare with Q1"};
      if (x.kind == B::AddPre) return {R::Disjoint, "computed: preprojectives are not Q1"};
      return {R::Disjoint, "computed: Hom(S, Q1) = <dim S, dim Q1> > 0 for S simple regular"};
    case G::PreGen: {
      if (x.kind == B::AddPre) {
        bool in = true;
        for (int k = 1; k < g.index; ++k) in = in && hom_dim(pre(x.index), pre(k)) == 0;
        return {in ? R::Contained : R::Disjoint, "computed: Hom(P_i, P_k) = 0 for all k < j"};
      }
      if (x.kind == B::AddInj) return {R::Contained, "computed: Hom(Q_i, P_k) = 0"};
      return {R::Contained, kAxiomRegPerpNoPre};
    }
    case G::InjGen: {
      if (x.kind == B::AddInj) {
        const bool in = ext_dim(inj(g.index), inj(x.index)) == 0 && ext_dim(inj(g.index + 1), inj(x.index)) == 0;
        return {in ? R::Contained : R::Disjoint, "computed: Ext^1(T, Q_i) via the Euler form"};
      }
      if (x.kind == B::AddPre) return {R::Disjoint, "computed: Ext^1(T, P_i) > 0"};
      return {R::Disjoint, kAxiomRegPerpNoInj};
    }
    case G::RegPerp1: {
      if (x.kind == B::AddPre) return {R::Disjoint, "computed: Ext^1(S, P_i) = -<dim S, dim P_i> > 0"};
      if (x.kind == B::AddInj) return {R::Contained, "computed: Ext^1(S, Q_i) = 0"};
      if (subset(g.points, x.points)) return {R::Contained, "V within U: U^perp lies in V^perp1"};
      return {R::Overlap, "V not within U"};
    }
    case G::PerpZeroPre:
      if (x.kind == B::AddPre) return {R::Disjoint, "identity of P_i"};
      if (x.kind == B::AddInj) return {R::Contained, "computed: Hom(Q_i, P_k) = 0"};
      return {R::Contained, kAxiomRegPerpNoPre};
  }
  throw RuleMissing("no relation rule for " + g.name() + " and " + x.name());
}

Decision hom_nonzero(const SiltingEntry& t, const Bireflective& x) {
  using B = Bireflective::Kind;
  if (t.kind == SiltingEntry::Kind::Zero) return {false, "T = 0"};
  if (x.kind == B::Zero) return {false, "the class is zero"};
  const auto rel = relation(t.gen_class, x);
  if (rel.relation == ClassRelation::Contained)
    return {true, "the class lies in Gen T and has nonzero modules (" + rel.rule + ")"};
  if (const auto summands = t.finite_summands()) {
    for (const auto& a : *summands) {
      if (x.kind == B::AddPre && hom_dim(a, pre(x.index)) > 0) return {true, "computed: Hom(T, P_i) != 0"};
      if (x.kind == B::AddInj && hom_dim(a, inj(x.index)) > 0) return {true, "computed: Hom(T, Q_i) != 0"};
      if (x.kind == B::RegPerp && a.kind == FiniteObject::Kind::Pre)
        return {hom_dim(a, reg("outside", 1)) > 0, std::string("computed: Hom(P_i, S) = 1; ") + kAxiomOtherPoints};
      if (x.kind == B::All) return {true, "identity"};
    }
    if (x.kind == B::RegPerp) return {false, kAxiomRegPerpNoInj};
    return {false, "computed: every summand has zero Hom into the class"};
  }
  if (x.kind == B::AddPre) return {false, kAxiomGenLukas};
  throw RuleMissing("no Hom rule for " + t.name() + " into " + x.name());
}

Decision extension_check(const SiltingEntry& t, const EpiClass& e) {
  if (e.surjective()) return {true, "surjective epimorphism: T (x) S is a quotient of T"};
  const auto x = e.bireflective;
  const auto rel = relation(t.gen_class, x);
  switch (rel.relation) {
    case ClassRelation::Contained:
      return {true, "the class lies in Gen T (" + rel.rule + ")"};
    case ClassRelation::Disjoint: {
      const auto h = hom_nonzero(t, x);
      return {!h.value, (h.value ? "nonzero reflection outside Gen T (" : "zero reflection (") + h.rule + ")"};
    }
    case ClassRelation::Overlap:
      if (t.kind == SiltingEntry::Kind::RegLoc && x.kind == Bireflective::Kind::RegPerp)
        return {true, kAxiomLocalizedReflection};
      break;
  }
  throw RuleMissing("no extension rule for " + t.name() + " along " + e.name());
}

bool extends_along_all(const SiltingEntry& t, const std::vector<EpiClass>& catalog) {
  return std::all_of(catalog.begin(), catalog.end(), [&](const EpiClass& e) { return extension_check(t, e).value; });
}

SiltingEntry induced_silting(const EpiClass& e) {
  using K = SiltingEntry::Kind;
  using G = GenClass::Kind;
  switch (e.kind) {
    case EpiClass::Kind::Zero:
      return {K::Zero, 0, {}, {G::Zero, 0, {}}, false, true, "not tilting"};
    case EpiClass::Kind::Identity:
      return {K::PrePair, 1, {}, {G::PreGen, 1, {}}, true, true, ""};
    case EpiClass::Kind::LocP:
      if (e.index == 1) return {K::SimpleInj, 0, {}, {G::AddQ1, 0, {}}, false, true, "not tilting"};
      if (e.index == 2) return {K::SimpleProj, 0, {}, {G::AddP1, 0, {}}, false, true, "not tilting"};
      return {K::PrePair, e.index - 1, {}, {G::PreGen, e.index - 1, {}}, true, true, ""};
    case EpiClass::Kind::LocQ:
      return {K::InjPair, e.index, {}, {G::InjGen, e.index, {}}, true, true, ""};
    case EpiClass::Kind::LocReg:
      return {K::RegLoc, 0, e.points, {G::RegPerp1, 0, e.points}, true, true, ""};
  }
  throw RuleMissing("unknown epiclass");
}

}  // namespace regulus::kronecker
