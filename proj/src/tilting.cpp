#include "regulus/tilting.hpp"

#include <algorithm>
#include <set>

#include "regulus/homext.hpp"

namespace regulus {

std::vector<Segment> BranchModule::in_tube(std::string_view tube) const {
  std::vector<Segment> out;
  for (const auto& s : summands)
    if (s.tube == tube) out.push_back(s);
  return out;
}

bool is_exceptional(const std::vector<Segment>& y) {
  for (const auto& a : y)
    for (const auto& b : y)
      if (ext_dim(a, b) != 0) return false;
  return true;
}

BranchCheck check_branch_module(const std::vector<Segment>& y) {
  std::vector<Segment> sorted = y;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] == sorted[i - 1]) return {false, "summand " + to_string(sorted[i]) + " occurs more than once"};
  for (const auto& a : sorted)
    if (a.length >= a.rank)
      return {false, "summand " + to_string(a) + " has length >= rank " + std::to_string(a.rank)};
  for (const auto& a : sorted)
    for (const auto& b : sorted)
      if (ext_dim(a, b) != 0) return {false, "Ext^1(" + to_string(a) + ", " + to_string(b) + ") != 0"};
  for (const auto& a : sorted) {
    const Wing w(a);
    const auto count = std::count_if(sorted.begin(), sorted.end(), [&](const Segment& b) { return w.contains(b); });
    if (count != a.length)
      return {false, "wing of " + to_string(a) + " contains " + std::to_string(count) + " summands, needs " +
                         std::to_string(a.length)};
  }
  return {};
}

bool Pair::in_P(std::string_view tube) const { return std::binary_search(P.begin(), P.end(), tube); }

Pair build_pair(TubeConfig config, std::vector<Segment> y, std::vector<std::string> p) {
  for (const auto& s : y) {
    if (config.rank(s.tube) != s.rank)
      throw ValidationError("segment " + to_string(s) + " disagrees with the declared rank of its tube");
    if (s.socle < 1 || s.socle > s.rank || s.length < 1) throw ValidationError("invalid segment " + to_string(s));
  }
  for (const auto& t : p) config.rank(t);
  const auto check = check_branch_module(y);
  if (!check) throw ValidationError("not a branch module: " + check.diagnostic);
  std::sort(y.begin(), y.end());
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  return Pair{std::move(config), BranchModule{std::move(y)}, std::move(p)};
}

std::vector<Wing> wings_of(const BranchModule& y, std::string_view tube) {
  const auto here = y.in_tube(tube);
  std::vector<Wing> roots;
  for (const auto& a : here) {
    const bool maximal = std::none_of(here.begin(), here.end(), [&](const Segment& b) {
      return b != a && b.length < b.rank && Wing(b).contains(a);
    });
    if (maximal) roots.emplace_back(a);
  }
  std::sort(roots.begin(), roots.end(), [](const Wing& a, const Wing& b) { return a.root() < b.root(); });
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      for (const auto& m : roots[i].members())
        if (roots[j].contains(m))
          throw InvariantViolation("wings of " + to_string(roots[i].root()) + " and " + to_string(roots[j].root()) +
                                   " overlap");
  return roots;
}

namespace {

void sort_unique(std::vector<QuasiSimple>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<QuasiSimple> factor_simples(const Segment& s) {
  std::vector<QuasiSimple> out;
  for (int i : comp_factors(s)) out.push_back({s.tube, s.rank, i});
  return out;
}

}  // namespace

std::vector<QuasiSimple> compute_V(const Pair& pair) {
  std::vector<QuasiSimple> v;
  for (const auto& t : pair.P) {
    const auto all = quasi_simples(pair.config, t);
    v.insert(v.end(), all.begin(), all.end());
  }
  for (const auto& a : pair.Y.summands) {
    const auto f = factor_simples(a);
    v.insert(v.end(), f.begin(), f.end());
  }
  sort_unique(v);
  return v;
}

std::vector<QuasiSimple> compute_U(const Pair& pair) {
  std::set<QuasiSimple> excluded;
  for (const auto& a : pair.Y.summands)
    for (const auto& q : factor_simples(a.tau(-1))) excluded.insert(q);
  std::vector<QuasiSimple> u;
  for (const auto& t : pair.P)
    for (const auto& q : quasi_simples(pair.config, t))
      if (!excluded.count(q)) u.push_back(q);
  sort_unique(u);
  return u;
}

TiltingDescriptor build_tilting(const Pair& pair) {
  TiltingDescriptor d;
  d.Y = pair.Y;
  d.P = pair.P;
  d.V = compute_V(pair);
  d.U = compute_U(pair);
  for (const auto& a : d.Y.summands) d.parts.push_back(FormalModule::of(a));
  d.parts.push_back(FormalModule::lukas_localized(d.V));
  for (const auto& s : d.U) d.parts.push_back(FormalModule::pruefer(s));
  return d;
}

CotiltingDescriptor build_cotilting(const Pair& pair) {
  CotiltingDescriptor d;
  d.Y = pair.Y;
  d.P = pair.P;
  // Ext^1(S[n], A) = D Hom(A, (tau S)[n]).
  for (const auto& spec : pair.config.tubes()) {
    if (pair.in_P(spec.id)) continue;
    for (const auto& s : quasi_simples(pair.config, spec.id)) {
      const auto ts = s.tau();
      const bool perp = std::all_of(pair.Y.summands.begin(), pair.Y.summands.end(),
                                    [&](const Segment& a) { return hom_to_ray_vanishes(a, ts); });
      if (perp) d.pruefer_set.push_back(s);
    }
  }
  sort_unique(d.pruefer_set);
  d.adic_set = compute_U(pair);
  for (const auto& a : d.Y.summands) d.parts.push_back(FormalModule::of(a));
  d.parts.push_back(FormalModule::generic());
  for (const auto& s : d.pruefer_set) d.parts.push_back(FormalModule::pruefer(s));
  for (const auto& s : d.adic_set) d.parts.push_back(FormalModule::adic(s));
  return d;
}

bool is_minimal_tilting(const TiltingDescriptor& desc) { return !desc.P.empty(); }

bool is_minimal_cotilting(const CotiltingDescriptor& desc) { return !desc.adic_set.empty(); }

namespace {

using Branch = std::vector<Segment>;

// Branch modules filling the wing of S_socle[m] and containing its root.
// The root's wing minus the root splits at the first quasi-simple U_k left
// uncovered into a full branch of size k-2 over U_1 and one of size m+1-k
// over U_k.
std::vector<Branch> full_branches(const std::string& tube, int rank, int socle, int m) {
  if (m == 0) return {Branch{}};
  std::vector<Branch> out;
  const Segment root{tube, rank, socle, m};
  for (int k = 2; k <= m + 1; ++k) {
    const auto left = full_branches(tube, rank, socle, k - 2);
    const auto right = full_branches(tube, rank, reduce_index(socle + k - 1, rank), m + 1 - k);
    for (const auto& l : left)
      for (const auto& r : right) {
        Branch b{root};
        b.insert(b.end(), l.begin(), l.end());
        b.insert(b.end(), r.begin(), r.end());
        out.push_back(std::move(b));
      }
  }
  return out;
}

struct WingSlot {
  int socle;
  int size;
};

// Layouts of wings in one tube: every wing W_{S_n[m]} reserves positions
// n, ..., n+m, the last being the uncovered gap that exceptionality forces
// before the next wing.
void wing_layouts(int rank, int start, std::vector<bool>& used, std::vector<WingSlot>& cur,
                  std::vector<std::vector<WingSlot>>& out) {
  out.push_back(cur);
  for (int n = start; n <= rank; ++n)
    for (int m = 1; m < rank; ++m) {
      bool free = true;
      for (int t = 0; t <= m && free; ++t) free = !used[reduce_index(n + t, rank) - 1];
      if (!free) break;
      for (int t = 0; t <= m; ++t) used[reduce_index(n + t, rank) - 1] = true;
      cur.push_back({n, m});
      wing_layouts(rank, n + 1, used, cur, out);
      cur.pop_back();
      for (int t = 0; t <= m; ++t) used[reduce_index(n + t, rank) - 1] = false;
    }
}

std::vector<Branch> tube_branch_modules(const std::string& tube, int rank) {
  if (rank < 2) return {Branch{}};
  std::vector<std::vector<WingSlot>> layouts;
  std::vector<bool> used(rank, false);
  std::vector<WingSlot> cur;
  wing_layouts(rank, 1, used, cur, layouts);
  std::vector<Branch> out;
  for (const auto& layout : layouts) {
    std::vector<Branch> acc{Branch{}};
    for (const auto& w : layout) {
      const auto fills = full_branches(tube, rank, w.socle, w.size);
      std::vector<Branch> next;
      next.reserve(acc.size() * fills.size());
      for (const auto& a : acc)
        for (const auto& f : fills) {
          Branch b = a;
          b.insert(b.end(), f.begin(), f.end());
          next.push_back(std::move(b));
        }
      acc = std::move(next);
    }
    for (auto& b : acc) {
      std::sort(b.begin(), b.end());
      out.push_back(std::move(b));
    }
  }
  return out;
}

}  // namespace

void for_each_branch_module(const TubeConfig& config, const std::function<void(const BranchModule&)>& visit,
                            const std::optional<std::vector<std::string>>& restrict_tubes) {
  std::vector<std::vector<Branch>> per_tube;
  for (const auto& spec : config.tubes()) {
    if (restrict_tubes &&
        std::find(restrict_tubes->begin(), restrict_tubes->end(), spec.id) == restrict_tubes->end())
      continue;
    per_tube.push_back(tube_branch_modules(spec.id, spec.rank));
  }
  Branch cur;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == per_tube.size()) {
      BranchModule y{cur};
      std::sort(y.summands.begin(), y.summands.end());
      visit(y);
      return;
    }
    for (const auto& b : per_tube[i]) {
      const auto mark = cur.size();
      cur.insert(cur.end(), b.begin(), b.end());
      rec(i + 1);
      cur.resize(mark);
    }
  };
  rec(0);
}

std::vector<BranchModule> enumerate_branch_modules(const TubeConfig& config,
                                                   const std::optional<std::vector<std::string>>& restrict_tubes) {
  std::vector<BranchModule> out;
  for_each_branch_module(config, [&](const BranchModule& y) { out.push_back(y); }, restrict_tubes);
  return out;
}

bool genT_contains_regular(const TiltingDescriptor& desc, const Segment& z) {
  for (const auto& s : desc.U)
    if (!pruefer_perp1_member(s, z)) return false;
  for (const auto& a : desc.Y.summands)
    if (ext_dim(a, z) != 0) return false;
  return true;
}

bool s_category_contains(const TiltingDescriptor& desc, const Segment& m) {
  if (std::binary_search(desc.U.begin(), desc.U.end(), m.socle_simple())) return true;
  return std::any_of(desc.Y.summands.begin(), desc.Y.summands.end(), [&](const Segment& a) {
    return a.same_tube(m) && a.socle == m.socle && m.length <= a.length;
  });
}

}  // namespace regulus
