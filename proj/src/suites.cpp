#include "regulus/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "regulus/homext.hpp"
#include "regulus/localization.hpp"

namespace regulus {

namespace {

constexpr std::size_t kMaxFailures = 20;

// Outcome of one work item; merged in index order.
struct ItemResult {
  std::size_t passed = 0;
  std::vector<std::string> failures;

  void check(bool ok, const std::function<std::string()>& what) {
    if (ok)
      ++passed;
    else
      failures.push_back(what());
  }
};

SuiteResult run_items(std::string name, std::size_t n, const std::function<void(std::size_t, ItemResult&)>& item) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<ItemResult> results(n);
  parallel_for(n, [&](std::size_t i) { item(i, results[i]); });
  SuiteResult out;
  out.name = std::move(name);
  for (auto& r : results) {
    out.passed += r.passed;
    out.failed += r.failures.size();
    for (auto& f : r.failures)
      if (out.failures.size() < kMaxFailures) out.failures.push_back(std::move(f));
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::string describe(const Pair& p) {
  std::string s = "Y={";
  for (std::size_t i = 0; i < p.Y.summands.size(); ++i) s += (i ? "," : "") + to_string(p.Y.summands[i]);
  s += "} P={";
  for (std::size_t i = 0; i < p.P.size(); ++i) s += (i ? "," : "") + p.P[i];
  return s + "}";
}

std::vector<Pair> pairs_for(const std::vector<int>& ranks, bool with_empty_p) {
  std::vector<Pair> out;
  for (int r : ranks) {
    auto ps = single_tube_pairs(r, with_empty_p);
    out.insert(out.end(), std::make_move_iterator(ps.begin()), std::make_move_iterator(ps.end()));
  }
  return out;
}

}  // namespace

bool VerificationReport::ok() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.ok(); });
}

unsigned worker_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("REGULUS_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) n = static_cast<unsigned>(v);
  }
  return n;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min<std::size_t>(worker_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = n;
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::vector<Pair> single_tube_pairs(int rank, bool with_empty_p) {
  const TubeConfig config({{"t", rank}});
  std::vector<Pair> out;
  for (const auto& y : enumerate_branch_modules(config)) {
    out.push_back(build_pair(config, y.summands, {"t"}));
    if (with_empty_p) out.push_back(build_pair(config, y.summands, {}));
  }
  return out;
}

std::vector<BranchModule> brute_force_branch_modules(int rank) {
  std::vector<Segment> segs;
  for (int i = 1; i <= rank; ++i)
    for (int l = 1; l < rank; ++l) segs.push_back({"t", rank, i, l});
  std::vector<BranchModule> out;
  std::vector<Segment> cur;
  // Exceptionality passes to subsets, so branches violating it are cut early;
  // every surviving subset still goes through the full definitional check.
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == segs.size()) {
      if (check_branch_module(cur)) out.push_back(BranchModule{cur});
      return;
    }
    rec(k + 1);
    const Segment& s = segs[k];
    if (ext_dim(s, s) != 0) return;
    for (const auto& c : cur)
      if (ext_dim(s, c) != 0 || ext_dim(c, s) != 0) return;
    cur.push_back(s);
    rec(k + 1);
    cur.pop_back();
  };
  rec(0);
  for (auto& b : out) std::sort(b.summands.begin(), b.summands.end());
  std::sort(out.begin(), out.end(), [](const BranchModule& a, const BranchModule& b) { return a.summands < b.summands; });
  return out;
}

SuiteResult suite_homext(int max_rank, int max_length) {
  struct Job {
    Segment x;
    std::vector<Segment> ys;
  };
  std::vector<Job> jobs;
  for (int r = 1; r <= max_rank; ++r) {
    const std::string tube = "r" + std::to_string(r);
    std::vector<Segment> segs;
    for (int i = 1; i <= r; ++i)
      for (int l = 1; l <= max_length; ++l) segs.push_back({tube, r, i, l});
    for (const auto& x : segs) jobs.push_back({x, segs});
  }
  return run_items("homext", jobs.size(), [&](std::size_t k, ItemResult& res) {
    const auto& x = jobs[k].x;
    const auto orientation = validated_orientation();
    for (const auto& y : jobs[k].ys) {
      const auto oracle = hom_ext_oracle(x, y, orientation);
      const int h = hom_dim(x, y);
      const int e = ext_dim(x, y);
      auto tag = [&](const char* what) {
        return [=] { return std::string(what) + " at (" + to_string(x) + ", " + to_string(y) + ")"; };
      };
      res.check(h == oracle.hom, tag("hom differs from oracle"));
      res.check(e == oracle.ext, tag("ext differs from oracle"));
      res.check(e == hom_dim(y, x.tau()), tag("AR formula fails"));
      res.check(h - e == euler_form(x, y), tag("Euler identity fails"));
    }
  });
}

SuiteResult suite_theorem8(const std::vector<int>& ranks, int len_bound_mult) {
  const auto pairs = pairs_for(ranks, false);
  return run_items("theorem8", pairs.size(), [&](std::size_t k, ItemResult& res) {
    const auto& p = pairs[k];
    const int bound = len_bound_mult * p.config.max_rank();
    const auto report = verify_theorem8(p, bound);
    res.check(report.ok(), [&] {
      const auto& m = report.mismatches.front();
      return describe(p) + ": Gen T and M^perp1 differ at " + to_string(m.z);
    });
  });
}

SuiteResult suite_prop6(const std::vector<int>& ranks) {
  const auto pairs = pairs_for(ranks, false);
  return run_items("prop6", pairs.size(), [&](std::size_t k, ItemResult& res) {
    const auto& p = pairs[k];
    const auto q = q_set(p);
    for (const auto& s : compute_U(p)) {
      try {
        const auto w = prop6_witness(s, q);
        const auto check = verify_witness(w, q);
        res.check(check.ok, [&] { return describe(p) + ", " + to_string(s) + ": " + check.diagnostic; });
        const auto chain = pruefer_chain(w, 3);
        const auto chain_check = verify_witness(chain, q);
        res.check(chain_check.ok, [&] { return describe(p) + ", " + to_string(s) + "[3r]: " + chain_check.diagnostic; });
      } catch (const WitnessSearchFailure& e) {
        res.check(false, [&] { return describe(p) + ": " + e.what(); });
      }
    }
    const auto* t = q.find("t");
    if (t && !t->whole_tube && t->in_P) {
      const auto chain = case_i_chain(*t);
      const auto check = verify_witness(chain, q);
      res.check(check.ok, [&] { return describe(p) + ", case (i) chain: " + check.diagnostic; });
    }
  });
}

SuiteResult suite_closure(const std::vector<int>& ranks, int len_bound_mult) {
  const auto pairs = pairs_for(ranks, true);
  return run_items("closure", pairs.size(), [&](std::size_t k, ItemResult& res) {
    const auto& p = pairs[k];
    const auto desc = wide_description(p);
    const int bound = len_bound_mult * p.config.max_rank();
    for (const auto& s : closure_step(desc, bound))
      res.check(desc.contains(s), [&] { return describe(p) + ": closure leaves M at " + to_string(s); });
  });
}

SuiteResult suite_minimality(const std::vector<int>& ranks) {
  const auto pairs = pairs_for(ranks, true);
  return run_items("minimality", pairs.size(), [&](std::size_t k, ItemResult& res) {
    const auto& p = pairs[k];
    const auto tilt = build_tilting(p);
    const auto cotilt = build_cotilting(p);
    const bool has_adic = std::any_of(cotilt.parts.begin(), cotilt.parts.end(),
                                      [](const FormalModule& m) { return m.kind == FormalModule::Kind::Adic; });
    res.check(is_minimal_tilting(tilt) == !p.P.empty(), [&] { return describe(p) + ": tilting minimality"; });
    res.check(tilt.U.empty() == p.P.empty(), [&] { return describe(p) + ": U empty iff P empty fails"; });
    res.check(is_minimal_cotilting(cotilt) == has_adic, [&] { return describe(p) + ": cotilting minimality"; });
    res.check(is_minimal_cotilting(cotilt) == is_minimal_tilting(tilt),
              [&] { return describe(p) + ": minimality of T and C disagree"; });
  });
}

SuiteResult suite_enumerator(const std::vector<int>& ranks) {
  return run_items("enumerator", ranks.size(), [&](std::size_t k, ItemResult& res) {
    const int r = ranks[k];
    const auto listed = enumerate_branch_modules(TubeConfig({{"t", r}}));
    auto brute = brute_force_branch_modules(r);
    std::set<std::vector<Segment>> seen;
    bool sound = true;
    for (const auto& y : listed) {
      sound = sound && check_branch_module(y.summands).ok;
      seen.insert(y.summands);
    }
    res.check(sound, [&] { return "rank " + std::to_string(r) + ": enumerator emitted a non-branch module"; });
    res.check(seen.size() == listed.size(), [&] { return "rank " + std::to_string(r) + ": duplicates"; });
    std::set<std::vector<Segment>> expected;
    for (const auto& y : brute) expected.insert(y.summands);
    res.check(seen == expected, [&] {
      return "rank " + std::to_string(r) + ": enumerator lists " + std::to_string(seen.size()) +
             ", brute force finds " + std::to_string(expected.size());
    });
  });
}

SuiteResult suite_wide_consistency(const std::vector<int>& ranks, int len_bound_mult) {
  const auto pairs = pairs_for(ranks, true);
  return run_items("wide", pairs.size(), [&](std::size_t k, ItemResult& res) {
    const auto& p = pairs[k];
    const auto q = q_set(p);
    const auto desc = wide_description(q);
    const auto tilt = build_tilting(p);
    const int r = p.config.max_rank();
    const int bound = len_bound_mult * r;
    for (const auto& t : q.tubes)
      for (const auto& g : t.q_set) res.check(desc.contains(g), [&] { return describe(p) + ": generator outside M"; });
    const TubeWide* tw = desc.find("t");
    std::vector<QuasiSimple> rays = tw ? tw->full_rays : std::vector<QuasiSimple>{};
    res.check(rays == tilt.U, [&] { return describe(p) + ": unbounded rays differ from U"; });
    // Bounded rays end exactly at the X-set elements.
    const TubeQ* tq = q.find("t");
    std::map<int, int> x_len;
    if (tq)
      for (const auto& x : tq->x_set) x_len[x.socle] = x.length;
    std::map<int, int> caps;
    if (tw)
      for (const auto& [s, h] : tw->caps) caps[s.index] = h;
    res.check(caps == x_len, [&] { return describe(p) + ": caps differ from the X-set"; });
    for (const auto& m : desc.members(bound))
      res.check(s_category_contains(tilt, m), [&] { return describe(p) + ": " + to_string(m) + " outside S"; });
    // R(lambda)^perp within lengths <= r is the union of the wings.
    if (tq && tq->in_P && !tq->wings.empty()) {
      for (int i = 1; i <= r; ++i)
        for (int l = 1; l <= r; ++l) {
          const Segment z{"t", r, i, l};
          const bool perp = std::all_of(tq->r_set.begin(), tq->r_set.end(),
                                        [&](const Segment& x) { return hom_dim(x, z) == 0 && ext_dim(x, z) == 0; });
          const bool in_wing = std::any_of(tq->wings.begin(), tq->wings.end(),
                                           [&](const Wing& w) { return w.contains(z); });
          res.check(perp == in_wing, [&] { return describe(p) + ": R^perp differs from the wings at " + to_string(z); });
        }
    }
  });
}

std::vector<std::string> suite_names() {
  return {"closure", "enumerator", "homext", "minimality", "prop6", "theorem8", "wide"};
}

VerificationReport run_verification(const VerifyOptions& options) {
  const int max_rank = options.ranks.empty() ? 1 : *std::max_element(options.ranks.begin(), options.ranks.end());
  std::map<std::string, std::function<SuiteResult()>> table{
      {"closure", [&] { return suite_closure(options.ranks, options.len_bound_mult); }},
      {"enumerator", [&] { return suite_enumerator(options.ranks); }},
      {"homext", [&] { return suite_homext(max_rank, options.hom_max_length); }},
      {"minimality", [&] { return suite_minimality(options.ranks); }},
      {"prop6", [&] { return suite_prop6(options.ranks); }},
      {"theorem8", [&] { return suite_theorem8(options.ranks, options.len_bound_mult); }},
      {"wide", [&] { return suite_wide_consistency(options.ranks, options.len_bound_mult); }},
  };
  VerificationReport report;
  for (const auto& [name, run] : table) {
    if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), name) == options.only.end())
      continue;
    report.suites.push_back(run());
  }
  return report;
}

}  // namespace regulus
