#include "regulus/localization.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <set>

#include "regulus/homext.hpp"

namespace regulus {

namespace {

std::vector<Segment> longest_per_ray(const Wing& w, const BranchModule& y, bool skip_root) {
  std::vector<Segment> out;
  const auto support = w.support();
  for (std::size_t k = skip_root ? 1 : 0; k < support.size(); ++k) {
    std::optional<Segment> best;
    for (const auto& a : y.summands)
      if (a.socle_simple() == support[k] && w.contains(a) && (!best || a.length > best->length)) best = a;
    if (best) out.push_back(*best);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void sort_unique(std::vector<Segment>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::vector<Segment> x_of_wing(const Wing& w, const BranchModule& y) { return longest_per_ray(w, y, false); }

std::vector<Segment> x_tilde_of_wing(const Wing& w, const BranchModule& y) { return longest_per_ray(w, y, true); }

std::vector<std::vector<Segment>> r_set_parts(int rank, const std::vector<Wing>& wings) {
  std::vector<std::vector<Segment>> parts;
  const std::size_t l = wings.size();
  for (std::size_t j = 0; j < l; ++j) {
    const Segment& root = wings[j].root();
    const int n = root.socle;
    const int m = root.length;
    const int next = wings[(j + 1) % l].root().socle + (j + 1 == l ? rank : 0);
    const int d = next - n;
    if (d <= m) throw InvariantViolation("wing " + to_string(root) + " leaves no gap before the next wing");
    std::vector<Segment> part;
    for (int k = m + 1; k <= d; ++k) part.push_back({root.tube, rank, n, k});
    for (int t = m + 1; t < d; ++t) part.push_back({root.tube, rank, reduce_index(n + t, rank), 1});
    std::sort(part.begin(), part.end());
    parts.push_back(std::move(part));
  }
  return parts;
}

std::vector<Segment> r_sets(int rank, const std::vector<Wing>& wings) {
  std::vector<Segment> out;
  for (const auto& p : r_set_parts(rank, wings)) out.insert(out.end(), p.begin(), p.end());
  sort_unique(out);
  return out;
}

std::vector<std::string> QSet::q_tubes() const {
  std::vector<std::string> out;
  for (const auto& t : tubes)
    if (!t.whole_tube) out.push_back(t.tube);
  return out;
}

const TubeQ* QSet::find(std::string_view tube) const {
  for (const auto& t : tubes)
    if (t.tube == tube) return &t;
  return nullptr;
}

bool QSet::is_generator(const Segment& s) const {
  const TubeQ* t = find(s.tube);
  if (!t) return false;
  if (t->whole_tube) return true;
  return std::binary_search(t->q_set.begin(), t->q_set.end(), s);
}

QSet q_set(const Pair& pair) {
  QSet q;
  for (const auto& spec : pair.config.tubes()) {
    const bool in_p = pair.in_P(spec.id);
    const bool has_y = !pair.Y.in_tube(spec.id).empty();
    if (!in_p && !has_y) continue;
    TubeQ t;
    t.tube = spec.id;
    t.rank = spec.rank;
    t.in_P = in_p;
    if (!has_y) {
      t.whole_tube = true;
      q.tubes.push_back(std::move(t));
      continue;
    }
    t.wings = wings_of(pair.Y, spec.id);
    for (const auto& w : t.wings) {
      const auto x = in_p ? x_tilde_of_wing(w, pair.Y) : x_of_wing(w, pair.Y);
      t.x_set.insert(t.x_set.end(), x.begin(), x.end());
    }
    sort_unique(t.x_set);
    if (in_p) t.r_set = r_sets(spec.rank, t.wings);
    t.q_set = t.x_set;
    t.q_set.insert(t.q_set.end(), t.r_set.begin(), t.r_set.end());
    sort_unique(t.q_set);
    q.tubes.push_back(std::move(t));
  }
  return q;
}

std::vector<Segment> semibrick_closure(std::vector<Segment> generators) {
  std::set<Segment> g(generators.begin(), generators.end());
  // Each replacement strictly decreases the multiset of lengths, so the loop
  // terminates; it ends when no nonzero non-invertible map remains.
  auto reducible = [&]() -> std::optional<HomBasisMap> {
    for (const auto& x : g)
      for (const auto& y : g)
        for (const auto& f : overlap_maps(x, y))
          if (x != y || f.overlap < x.length) return f;
    return std::nullopt;
  };
  while (const auto f = reducible()) {
    const Segment src = f->source;
    const Segment dst = f->target;
    std::vector<Segment> add;
    if (f->overlap == src.length) {
      g.erase(dst);
      if (auto c = f->cokernel()) add.push_back(*c);
    } else if (f->overlap == dst.length) {
      g.erase(src);
      if (auto k = f->kernel()) add.push_back(*k);
    } else {
      g.erase(src);
      g.erase(dst);
      add = {*f->kernel(), f->image(), *f->cokernel()};
    }
    g.insert(add.begin(), add.end());
  }
  return {g.begin(), g.end()};
}

bool TubeWide::contains(const Segment& s) const {
  if (s.tube != tube) return false;
  if (whole_tube) return true;
  std::vector<char> reach(s.length + 1, 0);
  reach[0] = 1;
  for (int p = 0; p < s.length; ++p) {
    if (!reach[p]) continue;
    const int idx = reduce_index(s.socle + p, rank);
    for (const auto& b : simples)
      if (b.socle == idx && p + b.length <= s.length) reach[p + b.length] = 1;
  }
  return reach[s.length] != 0;
}

void summarize(TubeWide& t) {
  t.full_rays.clear();
  t.caps.clear();
  const int r = t.rank;
  if (t.whole_tube) {
    for (int i = 1; i <= r; ++i) t.full_rays.push_back({t.tube, r, i});
    return;
  }
  // Filtrations of S_i[l] are walks i -> i + len(b) through relative simples b.
  std::vector<std::vector<std::pair<int, int>>> edges(r + 1);
  for (const auto& b : t.simples) edges[b.socle].push_back({reduce_index(b.socle + b.length, r), b.length});
  auto reachable = [&](int from) {
    std::vector<char> seen(r + 1, 0);
    std::vector<int> stack{from};
    seen[from] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (auto [w, len] : edges[v])
        if (!seen[w]) seen[w] = 1, stack.push_back(w);
    }
    return seen;
  };
  std::vector<char> on_cycle(r + 1, 0);
  for (int v = 1; v <= r; ++v)
    for (auto [w, len] : edges[v])
      if (reachable(w)[v]) on_cycle[v] = 1;
  std::vector<int> longest(r + 1, -1);
  std::function<int(int)> longest_from = [&](int v) {
    if (longest[v] >= 0) return longest[v];
    int best = 0;
    for (auto [w, len] : edges[v]) best = std::max(best, len + longest_from(w));
    return longest[v] = best;
  };
  for (int i = 1; i <= r; ++i) {
    if (edges[i].empty()) continue;
    const auto seen = reachable(i);
    bool unbounded = false;
    for (int v = 1; v <= r; ++v) unbounded = unbounded || (seen[v] && on_cycle[v]);
    if (unbounded)
      t.full_rays.push_back({t.tube, r, i});
    else
      t.caps.push_back({{t.tube, r, i}, longest_from(i)});
  }
}

const TubeWide* WideDescription::find(std::string_view tube) const {
  for (const auto& t : tubes)
    if (t.tube == tube) return &t;
  return nullptr;
}

bool WideDescription::contains(const Segment& s) const {
  const TubeWide* t = find(s.tube);
  return t && t->contains(s);
}

std::vector<Segment> WideDescription::members(int len_bound) const {
  std::vector<Segment> out;
  for (const auto& t : tubes)
    for (int i = 1; i <= t.rank; ++i)
      for (int l = 1; l <= len_bound; ++l) {
        const Segment s{t.tube, t.rank, i, l};
        if (t.contains(s)) out.push_back(s);
      }
  return out;
}

WideDescription wide_description(const QSet& qset) {
  WideDescription d;
  for (const auto& q : qset.tubes) {
    TubeWide t;
    t.tube = q.tube;
    t.rank = q.rank;
    t.whole_tube = q.whole_tube;
    if (q.whole_tube) {
      for (int i = 1; i <= q.rank; ++i) t.simples.push_back({q.tube, q.rank, i, 1});
    } else {
      t.simples = semibrick_closure(q.q_set);
    }
    summarize(t);
    d.tubes.push_back(std::move(t));
  }
  return d;
}

WideDescription wide_description(const Pair& pair) { return wide_description(q_set(pair)); }

FiltrationWitness prop6_witness(const QuasiSimple& s, const Pair& pair) { return prop6_witness(s, q_set(pair)); }

FiltrationWitness prop6_witness(const QuasiSimple& s, const QSet& qset) {
  const TubeQ* tube = qset.find(s.tube);
  if (!tube || !tube->in_P) throw WitnessSearchFailure("tube of " + to_string(s) + " is not in P");
  const int r = s.rank;
  FiltrationWitness w{s.ray(r), {}};
  if (qset.is_generator(w.target)) return w;

  // pieces[x][y]: fewest generators concatenating to the interval [x, y) of S[r].
  constexpr int kNone = INT_MAX / 4;
  std::vector<std::vector<int>> pieces(r + 1, std::vector<int>(r + 1, kNone));
  std::vector<std::vector<int>> split(r + 1, std::vector<int>(r + 1, -1));
  auto interval = [&](int x, int y) { return Segment{s.tube, r, reduce_index(s.index + x, r), y - x}; };
  for (int len = 1; len <= r; ++len)
    for (int x = 0; x + len <= r; ++x) {
      const int y = x + len;
      if (qset.is_generator(interval(x, y))) {
        pieces[x][y] = 1;
        continue;
      }
      for (int z = x + 1; z < y; ++z)
        if (pieces[x][z] + pieces[z][y] < pieces[x][y]) {
          pieces[x][y] = pieces[x][z] + pieces[z][y];
          split[x][y] = z;
        }
    }
  if (pieces[0][r] >= kNone)
    throw WitnessSearchFailure("no concatenation witness for " + to_string(w.target) + " from Q(" + s.tube + ")");

  std::function<Provenance(int, int)> emit = [&](int x, int y) {
    const int z = split[x][y];
    if (z < 0) return Provenance::Generator;
    const Provenance a = emit(x, z);
    const Provenance b = emit(z, y);
    w.steps.push_back({interval(x, z), interval(x, y), interval(z, y), a, b});
    return Provenance::PriorStep;
  };
  emit(0, r);
  return w;
}

FiltrationWitness case_i_chain(const TubeQ& tube) {
  if (tube.wings.empty() || !tube.in_P) throw ValidationError("case (i) chain needs a tube in Q and P");
  const int r = tube.rank;
  const auto& ws = tube.wings;
  const int n1 = ws.front().root().socle;
  auto seg = [&](int socle, int len) { return Segment{tube.tube, r, reduce_index(socle, r), len}; };
  FiltrationWitness w{seg(n1, r), {}};
  const std::size_t l = ws.size();
  for (std::size_t j = l - 1; j-- > 0;) {
    const int nj = ws[j].root().socle;
    const int nk = ws[j + 1].root().socle;
    w.steps.push_back({seg(nj, nk - nj), seg(nj, r + n1 - nj), seg(nk, r + n1 - nk), Provenance::Generator,
                       j + 2 == l ? Provenance::Generator : Provenance::PriorStep});
  }
  return w;
}

WitnessCheck verify_witness(const FiltrationWitness& w, const QSet& qset) {
  auto fail = [](std::string msg) { return WitnessCheck{false, std::move(msg)}; };
  if (w.steps.empty()) {
    if (!qset.is_generator(w.target)) return fail("zero-step witness but " + to_string(w.target) + " is no generator");
    return {};
  }
  std::vector<Segment> mids;
  auto certified = [&](const Segment& s, Provenance p) {
    if (p == Provenance::Generator) return qset.is_generator(s);
    return std::find(mids.begin(), mids.end(), s) != mids.end();
  };
  for (std::size_t k = 0; k < w.steps.size(); ++k) {
    const auto& st = w.steps[k];
    const std::string at = "step " + std::to_string(k + 1) + ": ";
    if (!st.sub.same_tube(st.mid) || !st.quot.same_tube(st.mid)) return fail(at + "segments in different tubes");
    if (st.mid.socle != st.sub.socle) return fail(at + "mid and sub have different socles");
    if (st.mid.length != st.sub.length + st.quot.length) return fail(at + "lengths do not add up");
    if (st.quot.socle != reduce_index(st.sub.socle + st.sub.length, st.sub.rank))
      return fail(at + "quot " + to_string(st.quot) + " does not start above sub " + to_string(st.sub));
    const auto ds = dim_vector(st.sub);
    const auto dq = dim_vector(st.quot);
    auto dm = dim_vector(st.mid);
    for (std::size_t v = 0; v < dm.size(); ++v)
      if (dm[v] != ds[v] + dq[v]) return fail(at + "dimension vectors do not add up");
    if (!certified(st.sub, st.sub_from)) return fail(at + "sub " + to_string(st.sub) + " is not certified");
    if (!certified(st.quot, st.quot_from)) return fail(at + "quot " + to_string(st.quot) + " is not certified");
    mids.push_back(st.mid);
  }
  if (w.steps.back().mid != w.target) return fail("final mid differs from target " + to_string(w.target));
  return {};
}

FiltrationWitness pruefer_chain(const FiltrationWitness& base, int n) {
  if (n < 1) throw ValidationError("pruefer_chain needs n >= 1");
  const Segment& sr = base.target;
  const Provenance base_from = base.steps.empty() ? Provenance::Generator : Provenance::PriorStep;
  FiltrationWitness w{sr.socle_simple().ray(n * sr.length), base.steps};
  const QuasiSimple s = sr.socle_simple();
  for (int k = 2; k <= n; ++k)
    w.steps.push_back({s.ray((k - 1) * sr.length), s.ray(k * sr.length), sr,
                       k == 2 ? base_from : Provenance::PriorStep, base_from});
  return w;
}

bool m_perp1_contains(const WideDescription& desc, const Segment& z) {
  const TubeWide* t = desc.find(z.tube);
  if (!t) return true;
  const int a = z.length;
  for (int i = 1; i <= t->rank; ++i) {
    const QuasiSimple s{t->tube, t->rank, i};
    const bool full = t->whole_tube || std::find(t->full_rays.begin(), t->full_rays.end(), s) != t->full_rays.end();
    int bound = 0;
    if (!full) {
      for (const auto& [q, h] : t->caps)
        if (q == s) bound = h;
      if (bound == 0) continue;
    }
    // Ext^1(S[l], Z) no longer depends on l once l >= Z.length, so on a full
    // ray the first member of length >= a settles all longer ones.
    for (int l = 1;; ++l) {
      if (!full && l > bound) break;
      const Segment m = s.ray(l);
      if (!t->contains(m)) continue;
      if (ext_dim(m, z) != 0) return false;
      if (full && l >= a) break;
    }
  }
  return true;
}

Theorem8Report verify_theorem8(const Pair& pair, int len_bound, const std::optional<WideDescription>& desc) {
  const auto tilt = build_tilting(pair);
  const auto wide = desc ? *desc : wide_description(pair);
  Theorem8Report report;
  for (const auto& spec : pair.config.tubes())
    for (int i = 1; i <= spec.rank; ++i)
      for (int l = 1; l <= len_bound; ++l) {
        const Segment z{spec.id, spec.rank, i, l};
        const bool g = genT_contains_regular(tilt, z);
        const bool m = m_perp1_contains(wide, z);
        ++report.checked;
        if (g != m) report.mismatches.push_back({z, g, m});
      }
  return report;
}

std::vector<Segment> closure_step(const WideDescription& desc, int len_bound) {
  std::vector<Segment> out;
  for (const auto& t : desc.tubes) {
    WideDescription one{{t}};
    const auto members = one.members(len_bound);
    for (const auto& x : members)
      for (const auto& y : members) {
        if (y.socle == reduce_index(x.socle + x.length, x.rank) && x.length + y.length <= len_bound)
          out.push_back({x.tube, x.rank, x.socle, x.length + y.length});
        for (const auto& f : overlap_maps(x, y)) {
          if (auto k = f.kernel()) out.push_back(*k);
          if (auto c = f.cokernel()) out.push_back(*c);
        }
      }
  }
  sort_unique(out);
  return out;
}

}  // namespace regulus
