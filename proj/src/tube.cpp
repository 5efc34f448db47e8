#include "regulus/tube.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace regulus {

TubeConfig::TubeConfig(std::vector<TubeSpec> tubes) : tubes_(std::move(tubes)) {
  std::set<std::string> seen;
  for (const auto& t : tubes_) {
    if (t.id.empty()) throw ConfigError("tube id must be non-empty");
    if (t.id.find(':') != std::string::npos) throw ConfigError("tube id must not contain ':': " + t.id);
    if (t.rank < 1) throw ConfigError("tube " + t.id + " has rank < 1");
    if (!seen.insert(t.id).second) throw ConfigError("duplicate tube id " + t.id);
  }
}

bool TubeConfig::contains(std::string_view id) const {
  return std::any_of(tubes_.begin(), tubes_.end(), [&](const TubeSpec& t) { return t.id == id; });
}

int TubeConfig::rank(std::string_view id) const {
  for (const auto& t : tubes_)
    if (t.id == id) return t.rank;
  throw ConfigError("unknown tube id '" + std::string(id) + "'");
}

int TubeConfig::max_rank() const {
  int r = 0;
  for (const auto& t : tubes_) r = std::max(r, t.rank);
  return r;
}

Segment QuasiSimple::ray(int length) const { return Segment{tube, rank, index, length}; }

QuasiSimple QuasiSimple::tau(int power) const { return {tube, rank, reduce_index(index - power, rank)}; }

Segment Segment::tau(int power) const { return {tube, rank, reduce_index(socle - power, rank), length}; }

Segment make_segment(const TubeConfig& config, std::string_view tube, int socle, int length) {
  const int r = config.rank(tube);
  if (socle < 1 || socle > r)
    throw ValidationError("socle " + std::to_string(socle) + " outside [1, " + std::to_string(r) + "] in tube " +
                          std::string(tube));
  if (length < 1) throw ValidationError("segment length must be >= 1");
  return Segment{std::string(tube), r, socle, length};
}

QuasiSimple make_quasi_simple(const TubeConfig& config, std::string_view tube, int index) {
  return make_segment(config, tube, index, 1).socle_simple();
}

std::vector<QuasiSimple> quasi_simples(const TubeConfig& config, std::string_view tube) {
  const int r = config.rank(tube);
  std::vector<QuasiSimple> out;
  out.reserve(r);
  for (int i = 1; i <= r; ++i) out.push_back({std::string(tube), r, i});
  return out;
}

std::vector<int> comp_factors(const Segment& seg) {
  std::vector<int> out;
  out.reserve(seg.length);
  for (int t = 0; t < seg.length; ++t) out.push_back(reduce_index(seg.socle + t, seg.rank));
  return out;
}

DimensionVector dim_vector(const Segment& seg) {
  DimensionVector d(seg.rank, 0);
  for (int v : comp_factors(seg)) ++d[v - 1];
  return d;
}

Wing::Wing(Segment root) : root_(std::move(root)) {
  if (root_.length >= root_.rank)
    throw ValidationError("wing root " + to_string(root_) + " must have length < rank " + std::to_string(root_.rank));
}

bool Wing::contains(const Segment& seg) const {
  if (!seg.same_tube(root_)) return false;
  const int k = reduce_index(seg.socle - root_.socle + 1, root_.rank) - 1;
  return k < root_.length && seg.length <= root_.length - k;
}

std::vector<Segment> Wing::members() const {
  std::vector<Segment> out;
  const int m = root_.length;
  for (int k = 0; k < m; ++k)
    for (int t = 1; t <= m - k; ++t)
      out.push_back({root_.tube, root_.rank, reduce_index(root_.socle + k, root_.rank), t});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<QuasiSimple> Wing::support() const {
  std::vector<QuasiSimple> out;
  for (int k = 0; k < root_.length; ++k)
    out.push_back({root_.tube, root_.rank, reduce_index(root_.socle + k, root_.rank)});
  return out;
}

std::string to_string(const Segment& seg) {
  return seg.tube + ":S" + std::to_string(seg.socle) + "[" + std::to_string(seg.length) + "]";
}

std::string to_string(const QuasiSimple& qs) { return qs.tube + ":S" + std::to_string(qs.index); }

namespace {

int parse_int(std::string_view text, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw ValidationError("malformed segment notation '" + std::string(whole) + "'");
  return value;
}

struct ParsedNotation {
  std::string_view tube;
  int index = 0;
  std::optional<int> length;
};

ParsedNotation split_notation(std::string_view text) {
  const auto colon = text.rfind(':');
  if (colon == std::string_view::npos || colon + 2 > text.size() || text[colon + 1] != 'S')
    throw ValidationError("malformed segment notation '" + std::string(text) + "'");
  ParsedNotation p;
  p.tube = text.substr(0, colon);
  std::string_view rest = text.substr(colon + 2);
  const auto open = rest.find('[');
  if (open == std::string_view::npos) {
    p.index = parse_int(rest, text);
    return p;
  }
  if (rest.back() != ']') throw ValidationError("malformed segment notation '" + std::string(text) + "'");
  p.index = parse_int(rest.substr(0, open), text);
  p.length = parse_int(rest.substr(open + 1, rest.size() - open - 2), text);
  return p;
}

}  // namespace

Segment parse_segment(const TubeConfig& config, std::string_view text) {
  const auto p = split_notation(text);
  if (!p.length) throw ValidationError("segment notation needs a length: '" + std::string(text) + "'");
  return make_segment(config, p.tube, p.index, *p.length);
}

QuasiSimple parse_quasi_simple(const TubeConfig& config, std::string_view text) {
  const auto p = split_notation(text);
  if (p.length && *p.length != 1) throw ValidationError("not a quasi-simple: '" + std::string(text) + "'");
  return make_quasi_simple(config, p.tube, p.index);
}

FormalModule FormalModule::of(Segment seg) {
  FormalModule m;
  m.kind = Kind::Segment;
  m.segment = std::move(seg);
  return m;
}

FormalModule FormalModule::pruefer(QuasiSimple qs) {
  FormalModule m;
  m.kind = Kind::Pruefer;
  m.quasi_simple = std::move(qs);
  return m;
}

FormalModule FormalModule::adic(QuasiSimple qs) {
  FormalModule m;
  m.kind = Kind::Adic;
  m.quasi_simple = std::move(qs);
  return m;
}

FormalModule FormalModule::generic() { return FormalModule{}; }

FormalModule FormalModule::lukas_localized(std::vector<QuasiSimple> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  FormalModule m;
  m.kind = Kind::LukasLocalized;
  m.localized_at = std::move(v);
  return m;
}

std::string to_string(const FormalModule& m) {
  switch (m.kind) {
    case FormalModule::Kind::Segment:
      return to_string(*m.segment);
    case FormalModule::Kind::Pruefer:
      return to_string(*m.quasi_simple) + "[inf]";
    case FormalModule::Kind::Adic:
      return to_string(*m.quasi_simple) + "[-inf]";
    case FormalModule::Kind::Generic:
      return "G";
    case FormalModule::Kind::LukasLocalized: {
      std::string s = "L(x)R_V{";
      for (std::size_t i = 0; i < m.localized_at.size(); ++i) {
        if (i) s += ",";
        s += to_string(m.localized_at[i]);
      }
      return s + "}";
    }
  }
  return "?";
}

}  // namespace regulus
