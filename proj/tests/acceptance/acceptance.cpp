// Acceptance run: one PASS/FAIL line per criterion with its time budget.
// Exit status is nonzero if any criterion fails or overruns.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "regulus/homext.hpp"
#include "regulus/kronecker.hpp"
#include "regulus/localization.hpp"
#include "regulus/suites.hpp"
#include "regulus/tilting.hpp"

using namespace regulus;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

Outcome from_suite(const SuiteResult& s) {
  std::string d = std::to_string(s.passed) + " checks";
  if (!s.ok()) d = std::to_string(s.failed) + " failures, first: " + (s.failures.empty() ? "" : s.failures.front());
  return {s.ok(), d};
}

Segment seg(const std::string& t, int r, int i, int l) { return {t, r, i, l}; }
QuasiSimple qs(const std::string& t, int r, int i) { return {t, r, i}; }

Outcome golden_a() {
  const auto p = build_pair(TubeConfig({{"t", 3}}), {seg("t", 3, 1, 1)}, {"t"});
  if (compute_U(p) != std::vector<QuasiSimple>{qs("t", 3, 1), qs("t", 3, 3)}) return fail("U differs");
  const auto q = q_set(p);
  if (q.tubes.size() != 1 || q.tubes[0].q_set != std::vector<Segment>{seg("t", 3, 1, 2), seg("t", 3, 1, 3), seg("t", 3, 3, 1)})
    return fail("Q differs");
  return {true, "U = {S1, S3}, Q = {S1[2], S1[3], S3}"};
}

Outcome golden_b() {
  for (int r = 2; r <= 6; ++r) {
    std::vector<Segment> y;
    for (int l = 1; l < r; ++l) y.push_back(seg("t", r, 1, l));
    const auto p = build_pair(TubeConfig({{"t", r}}), y, {"t"});
    if (compute_U(p) != std::vector<QuasiSimple>{qs("t", r, 1)}) return fail("U differs at rank " + std::to_string(r));
    const auto q = q_set(p);
    if (q.tubes.size() != 1 || q.tubes[0].q_set != std::vector<Segment>{seg("t", r, 1, r)})
      return fail("Q differs at rank " + std::to_string(r));
  }
  return {true, "ranks 2..6"};
}

Outcome golden_c() {
  const auto p = build_pair(TubeConfig({{"lambda", 4}, {"mu", 3}}),
                            {seg("lambda", 4, 1, 3), seg("lambda", 4, 2, 2), seg("lambda", 4, 2, 1), seg("mu", 3, 1, 2),
                             seg("mu", 3, 2, 1)},
                            {"lambda"});
  const auto q = q_set(p);
  if (q.q_tubes() != std::vector<std::string>{"lambda", "mu"}) return fail("Q tubes differ");
  const auto* l = q.find("lambda");
  const auto* m = q.find("mu");
  if (l->x_set != std::vector<Segment>{seg("lambda", 4, 2, 2)}) return fail("X(lambda) differs");
  if (m->x_set != std::vector<Segment>{seg("mu", 3, 1, 2), seg("mu", 3, 2, 1)}) return fail("X(mu) differs");
  if (l->r_set != std::vector<Segment>{seg("lambda", 4, 1, 4)}) return fail("R(lambda) differs");
  return {true, "Q = {lambda, mu}"};
}

Outcome figure_one() {
  const auto parts = r_set_parts(12, {Wing(seg("t", 12, 1, 3)), Wing(seg("t", 12, 7, 4))});
  if (parts.size() != 2) return fail("expected two R-sets");
  if (parts[0] != std::vector<Segment>{seg("t", 12, 1, 4), seg("t", 12, 1, 5), seg("t", 12, 1, 6), seg("t", 12, 5, 1),
                                       seg("t", 12, 6, 1)})
    return fail("R_1 differs");
  if (parts[1] != std::vector<Segment>{seg("t", 12, 7, 5), seg("t", 12, 7, 6), seg("t", 12, 12, 1)})
    return fail("R_2 differs");
  const BranchModule y{{seg("t", 12, 1, 2), seg("t", 12, 1, 3), seg("t", 12, 2, 1)}};
  const Wing w(seg("t", 12, 1, 3));
  if (x_tilde_of_wing(w, y) != std::vector<Segment>{seg("t", 12, 2, 1)}) return fail("X_1 in P differs");
  if (x_of_wing(w, y) != std::vector<Segment>{seg("t", 12, 1, 3), seg("t", 12, 2, 1)}) return fail("X_1 outside P differs");
  return {true, "R_1, R_2, X_1"};
}

Outcome homext() {
  const auto s = suite_homext(5, 12);
  if (!s.ok()) return from_suite(s);
  // Second opinion from the factor-sequence oracle over the same range.
  for (int r = 1; r <= 5; ++r)
    for (int i = 1; i <= r; ++i)
      for (int a = 1; a <= 12; ++a)
        for (int j = 1; j <= r; ++j)
          for (int b = 1; b <= 12; ++b)
            if (hom_dim(seg("t", r, i, a), seg("t", r, j, b)) != oracle::hom(r, {i, a}, {j, b}) ||
                ext_dim(seg("t", r, i, a), seg("t", r, j, b)) != oracle::ext(r, {i, a}, {j, b}))
              return fail("factor-sequence oracle disagrees");
  return from_suite(s);
}

Outcome prop6() {
  const auto s = suite_prop6({2, 3, 4});
  if (!s.ok()) return from_suite(s);
  const auto p = build_pair(TubeConfig({{"t", 12}}),
                            {seg("t", 12, 1, 3), seg("t", 12, 1, 2), seg("t", 12, 2, 1), seg("t", 12, 7, 4),
                             seg("t", 12, 7, 3), seg("t", 12, 7, 2), seg("t", 12, 7, 1)},
                            {"t"});
  const auto q = q_set(p);
  const auto chain = case_i_chain(q.tubes[0]);
  if (chain.steps.size() != 1 || chain.steps[0].sub != seg("t", 12, 1, 6) || chain.steps[0].mid != seg("t", 12, 1, 12) ||
      chain.steps[0].quot != seg("t", 12, 7, 6))
    return fail("case (i) chain differs");
  if (!verify_witness(chain, q)) return fail("case (i) chain rejected");
  const auto found = prop6_witness(qs("t", 12, 1), q);
  if (found.steps.size() != 1 || found.steps[0].mid != chain.steps[0].mid || found.steps[0].sub != chain.steps[0].sub)
    return fail("search does not reproduce the case (i) chain");
  auto out = from_suite(s);
  out.detail += ", case (i) chain reproduced";
  return out;
}

Outcome minimality() {
  const auto s = suite_minimality({1, 2, 3, 4});
  if (!s.ok()) return from_suite(s);
  for (int r = 1; r <= 4; ++r)
    for (bool in_p : {true, false})
      for (const auto& y : enumerate_branch_modules(TubeConfig({{"t", r}}))) {
        const auto p = build_pair(TubeConfig({{"t", r}}), y.summands, in_p ? std::vector<std::string>{"t"}
                                                                            : std::vector<std::string>{});
        const auto t = build_tilting(p);
        const auto c = build_cotilting(p);
        const bool adic = std::any_of(c.parts.begin(), c.parts.end(),
                                      [](const FormalModule& m) { return m.kind == FormalModule::Kind::Adic; });
        if (is_minimal_tilting(t) != in_p || t.U.empty() == in_p || is_minimal_cotilting(c) != adic)
          return fail("law broken at rank " + std::to_string(r));
      }
  return from_suite(s);
}

Outcome kronecker_matrix() {
  using namespace regulus::kronecker;
  const std::vector<std::string> points{"x", "y", "z"};
  const auto epis = epiclass_catalog(10, points);
  const auto silt = silting_catalog(10, points);
  for (const auto& t : silt)
    if (extends_along_all(t, epis) != (t.kind != SiltingEntry::Kind::SimpleProj)) return fail("row " + t.name());

  // Catalog shape, item by item.
  std::vector<std::string> expect_e{"R->0", "id"};
  for (int i = 1; i <= 11; ++i) expect_e.push_back("loc(P" + std::to_string(i) + ")");
  for (int i = 1; i <= 10; ++i) expect_e.push_back("loc(Q" + std::to_string(i) + ")");
  for (const auto* u : {"{x}", "{y}", "{z}", "{x,y}", "{x,z}", "{y,z}", "{x,y,z}"}) expect_e.push_back(std::string("loc") + u);
  std::vector<std::string> got_e;
  for (const auto& e : epis) got_e.push_back(e.name());
  if (got_e != expect_e) return fail("epiclass list differs");
  for (const auto& e : epis) {
    const auto& b = e.bireflective;
    bool ok = true;
    switch (e.kind) {
      case EpiClass::Kind::Zero: ok = b.kind == Bireflective::Kind::Zero; break;
      case EpiClass::Kind::Identity: ok = b.kind == Bireflective::Kind::All; break;
      case EpiClass::Kind::LocP:
        ok = e.index == 1 ? b == Bireflective{Bireflective::Kind::AddInj, 1, {}}
                          : b == Bireflective{Bireflective::Kind::AddPre, e.index - 1, {}};
        break;
      case EpiClass::Kind::LocQ: ok = b == Bireflective{Bireflective::Kind::AddInj, e.index + 1, {}}; break;
      case EpiClass::Kind::LocReg: ok = b == Bireflective{Bireflective::Kind::RegPerp, 0, e.points}; break;
    }
    if (!ok) return fail("bireflective class of " + e.name());
  }
  std::vector<std::string> expect_s{"0", "P1", "Q1"};
  for (int i = 1; i <= 10; ++i) expect_s.push_back("P" + std::to_string(i) + "+P" + std::to_string(i + 1));
  for (int i = 1; i <= 10; ++i) expect_s.push_back("Q" + std::to_string(i + 1) + "+Q" + std::to_string(i));
  for (const auto* u : {"{x}", "{y}", "{z}", "{x,y}", "{x,z}", "{y,z}", "{x,y,z}"}) expect_s.push_back(std::string("R_U+R_U/R") + u);
  expect_s.push_back("L");
  std::vector<std::string> got_s;
  for (const auto& t : silt) {
    got_s.push_back(t.name());
    const bool small = t.kind == SiltingEntry::Kind::Zero || t.kind == SiltingEntry::Kind::SimpleProj ||
                       t.kind == SiltingEntry::Kind::SimpleInj;
    if (t.tilting == small) return fail("tilting flag of " + t.name());
    if (t.minimal != (t.kind != SiltingEntry::Kind::Lukas)) return fail("minimal flag of " + t.name());
  }
  if (got_s != expect_s) return fail("silting list differs");
  return {true, std::to_string(silt.size()) + " x " + std::to_string(epis.size()) + " matrix"};
}

Outcome enumerator() {
  const auto s = suite_enumerator({1, 2, 3, 4});
  if (!s.ok()) return from_suite(s);
  for (int r = 1; r <= 4; ++r) {
    std::set<std::vector<Segment>> a, b;
    for (const auto& y : enumerate_branch_modules(TubeConfig({{"t", r}}))) a.insert(y.summands);
    for (const auto& y : oracle::branch_modules(r)) {
      std::vector<Segment> v;
      for (auto x : y) v.push_back(oracle::to_segment("t", r, x));
      std::sort(v.begin(), v.end());
      b.insert(v);
    }
    if (a != b) return fail("bitmask oracle disagrees at rank " + std::to_string(r));
  }
  return from_suite(s);
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<int> ranks{2, 3, 4};
  const std::vector<Criterion> criteria{
      {1, "golden example A (rank 3, Y = {S1})", 1.0, golden_a},
      {2, "golden example B (full ray, ranks 2..6)", 1.0, golden_b},
      {3, "golden example C (two tubes)", 1.0, golden_c},
      {4, "rank 12 figure: R-sets and X_1", 1.0, figure_one},
      {5, "Hom/Ext oracle equivalence, AR and Euler (rank <= 5, length <= 12)", 60.0, homext},
      {6, "Gen T = M^perp1 on all single-tube pairs, rank <= 4, length <= 3r", 300.0,
       [&] { return from_suite(suite_theorem8(ranks, 3)); }},
      {7, "S[r] witnesses for every S in U, rank <= 4", 120.0, prop6},
      {8, "closure stability up to length 3r, rank <= 4", 120.0, [&] { return from_suite(suite_closure(ranks, 3)); }},
      {9, "minimality laws, rank <= 4", 60.0, minimality},
      {10, "Kronecker matrix (max_i = 10, 3 points) and catalogs", 10.0, kronecker_matrix},
      {11, "enumerator against brute force, rank <= 4", 120.0, enumerator},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.budget_seconds;
    const bool pass = o.ok && in_time;
    failures += !pass;
    std::printf("[%s] %2d %s: %s (%.3f s, budget %.0f s%s)\n", pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), secs, c.budget_seconds, in_time ? "" : ", over budget");
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
