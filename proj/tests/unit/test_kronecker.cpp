#include <doctest.h>

#include "regulus/kronecker.hpp"

using namespace regulus::kronecker;

namespace {

using EK = EpiClass::Kind;
using SK = SiltingEntry::Kind;
using BK = Bireflective::Kind;

std::vector<std::string> pts(int n) {
  std::vector<std::string> all{"x", "y", "z"};
  return {all.begin(), all.begin() + n};
}

}  // namespace

TEST_CASE("Euler form on preprojectives and preinjectives") {
  CHECK(euler({0, 1}, {0, 1}) == 1);
  CHECK(euler({1, 0}, {0, 1}) == -2);
  for (int i = 1; i <= 10; ++i)
    for (int j = 1; j <= 10; ++j) {
      CHECK(hom_dim(pre(i), pre(j)) == (j >= i ? j - i + 1 : 0));
      CHECK(ext_dim(pre(i), pre(j)) == (j < i - 1 ? i - j - 1 : 0));
      CHECK(hom_dim(inj(i), inj(j)) == (i >= j ? i - j + 1 : 0));
      CHECK(hom_dim(inj(i), pre(j)) == 0);
      CHECK(ext_dim(pre(i), inj(j)) == 0);
      CHECK(hom_dim(pre(i), inj(j)) == i + j - 2);
    }
  CHECK(hom_dim(pre(1), pre(2)) == 2);
  CHECK(hom_dim(pre(1), reg("x", 1)) == 1);
  CHECK(hom_dim(reg("x", 2), reg("x", 1)) == 1);
  CHECK(hom_dim(reg("x", 1), reg("y", 1)) == 0);
  CHECK(ext_dim(reg("x", 1), reg("x", 1)) == 1);
  CHECK(hom_dim(reg("x", 1), inj(1)) == 1);
  CHECK(ext_dim(reg("x", 1), pre(1)) == 1);
}

TEST_CASE("dimension vectors of symbolic objects") {
  CHECK(*KronObject{KronObject::Kind::Pre, 3, ""}.dim() == Dim{2, 3});
  CHECK(*KronObject{KronObject::Kind::Inj, 3, ""}.dim() == Dim{3, 2});
  CHECK(*KronObject{KronObject::Kind::Reg, 4, "x"}.dim() == Dim{4, 4});
  CHECK_FALSE(KronObject{KronObject::Kind::Lukas, 0, ""}.dim());
  CHECK_FALSE(KronObject{KronObject::Kind::Generic, 0, ""}.dim());
  CHECK_FALSE(KronObject{KronObject::Kind::PrueferAt, 0, "x"}.dim());
  CHECK(KronObject{KronObject::Kind::AdicAt, 0, "x"}.name() == "S_x[-inf]");
}

TEST_CASE("epiclass catalog") {
  const auto c = epiclass_catalog(2, {"x"});
  std::vector<std::string> names;
  for (const auto& e : c) names.push_back(e.name() + " : " + e.bireflective.name());
  CHECK(names == std::vector<std::string>{"R->0 : 0", "id : ModR", "loc(P1) : AddQ1", "loc(P2) : AddP1",
                                          "loc(P3) : AddP2", "loc(Q1) : AddQ2", "loc(Q2) : AddQ3",
                                          "loc{x} : {x}^perp"});
  for (const auto& e : epiclass_catalog(3, {})) CHECK(e.kind != EK::LocReg);
  const auto big = epiclass_catalog(10, pts(3));
  CHECK(big.size() == 2 + 11 + 10 + 7);
  for (std::size_t a = 0; a < big.size(); ++a)
    for (std::size_t b = a + 1; b < big.size(); ++b) CHECK_FALSE(big[a] == big[b]);
  for (const auto& e : big) CHECK(e.bireflective == bireflective_of(e));
}

TEST_CASE("bireflective pairing") {
  CHECK(bireflective_of({EK::LocP, 1, {}, {}}) == Bireflective{BK::AddInj, 1, {}});
  for (int i = 1; i <= 10; ++i) {
    CHECK(bireflective_of({EK::LocP, i + 1, {}, {}}) == Bireflective{BK::AddPre, i, {}});
    CHECK(bireflective_of({EK::LocQ, i, {}, {}}) == Bireflective{BK::AddInj, i + 1, {}});
  }
  CHECK(bireflective_of({EK::LocReg, 0, {"x", "y"}, {}}) == Bireflective{BK::RegPerp, 0, {"x", "y"}});
  CHECK(bireflective_of({EK::Zero, 0, {}, {}}).kind == BK::Zero);
  CHECK(bireflective_of({EK::Identity, 0, {}, {}}).kind == BK::All);
}

TEST_CASE("surjective epimorphisms") {
  for (const auto& e : epiclass_catalog(5, {"x"})) {
    const bool expected = e.kind == EK::Zero || e.kind == EK::Identity || (e.kind == EK::LocP && e.index <= 2);
    CHECK(e.surjective() == expected);
  }
}

TEST_CASE("silting catalog") {
  const auto c = silting_catalog(2, {"x", "y"});
  std::vector<std::string> names;
  for (const auto& t : c) names.push_back(t.name());
  CHECK(names == std::vector<std::string>{"0", "P1", "Q1", "P1+P2", "P2+P3", "Q2+Q1", "Q3+Q2", "R_U+R_U/R{x}",
                                          "R_U+R_U/R{y}", "R_U+R_U/R{x,y}", "L"});
  for (const auto& t : c) {
    const bool small = t.kind == SK::Zero || t.kind == SK::SimpleProj || t.kind == SK::SimpleInj;
    CHECK(t.tilting == !small);
    CHECK(t.minimal == (t.kind != SK::Lukas));
  }
  CHECK(c.back().note == "the unique non-minimal silting module");
  CHECK(c.back().gen_class.kind == GenClass::Kind::PerpZeroPre);
  CHECK(c[7].gen_class == GenClass{GenClass::Kind::RegPerp1, 0, {"x"}});
  const auto one = silting_catalog(1, {});
  CHECK(one.size() == 6);
  CHECK(one[3].kind == SK::PrePair);
  CHECK(one[4].kind == SK::InjPair);
  CHECK(nonempty_subsets({"y", "x", "z"}) ==
        std::vector<std::vector<std::string>>{{"x"}, {"y"}, {"z"}, {"x", "y"}, {"x", "z"}, {"y", "z"}, {"x", "y", "z"}});
}

TEST_CASE("Hom into bireflective classes") {
  const auto c = silting_catalog(3, {"x"});
  const auto& p1 = c[1];
  const auto& q1 = c[2];
  CHECK(hom_nonzero(p1, {BK::RegPerp, 0, {"x"}}).value);
  for (int i = 1; i <= 3; ++i) CHECK_FALSE(hom_nonzero(q1, {BK::AddPre, i, {}}).value);
  for (const auto& t : c)
    if (t.kind == SK::PrePair) CHECK(hom_nonzero(t, {BK::AddPre, t.index, {}}).value);
  CHECK_FALSE(hom_nonzero(c[0], {BK::All, 0, {}}).value);
  CHECK_THROWS_AS(hom_nonzero(c.back(), {BK::All, 0, {}}), RuleMissing);
}

TEST_CASE("extension along single epimorphisms") {
  const auto epis = epiclass_catalog(4, {"x", "y"});
  const auto silt = silting_catalog(4, {"x", "y"});
  const EpiClass loc_x{EK::LocReg, 0, {"x"}, {BK::RegPerp, 0, {"x"}}};
  CHECK_FALSE(extension_check(silt[1], loc_x).value);
  for (const auto& e : epis) CHECK(extension_check(silt[2], e).value);
  for (const auto& t : silt) {
    CHECK(extension_check(t, epis[0]).value);
    CHECK(extension_check(t, epis[1]).value);
    CHECK_FALSE(extension_check(t, epis[0]).rule.empty());
  }
  for (const auto& e : epis) CHECK(extension_check(induced_silting(e), e).value);
}

TEST_CASE("induced silting modules") {
  CHECK(induced_silting({EK::LocP, 1, {}, {}}).kind == SK::SimpleInj);
  CHECK(induced_silting({EK::LocP, 2, {}, {}}).kind == SK::SimpleProj);
  CHECK(induced_silting({EK::LocP, 4, {}, {}}).kind == SK::PrePair);
  CHECK(induced_silting({EK::LocP, 4, {}, {}}).index == 3);
  CHECK(induced_silting({EK::LocQ, 2, {}, {}}).kind == SK::InjPair);
  CHECK(induced_silting({EK::Identity, 0, {}, {}}).name() == "P1+P2");
}

TEST_CASE("only the simple projective fails to extend") {
  for (int max_i = 1; max_i <= 10; ++max_i)
    for (int n = 0; n <= 3; ++n) {
      const auto epis = epiclass_catalog(max_i, pts(n));
      for (const auto& t : silting_catalog(max_i, pts(n))) CHECK(extends_along_all(t, epis) == (t.kind != SK::SimpleProj));
    }
}
