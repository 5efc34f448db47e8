#include "regulus/json_io.hpp"

#include <fstream>

namespace regulus::io {

namespace {

Json strings(const std::vector<Segment>& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(to_string(s));
  return a;
}

Json strings(const std::vector<QuasiSimple>& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(to_string(s));
  return a;
}

Json strings(const std::vector<FormalModule>& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(to_string(s));
  return a;
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

TubeConfig parse_tube_config(const Json& doc) {
  if (!doc.is_object() || !doc.contains("tubes") || !doc["tubes"].is_array())
    throw ConfigError("tube configuration needs a \"tubes\" array");
  std::vector<TubeSpec> specs;
  for (const auto& t : doc["tubes"]) {
    if (!t.is_object() || !t.contains("id") || !t.contains("rank") || !t["id"].is_string() ||
        !t["rank"].is_number_integer())
      throw ConfigError("each tube needs a string \"id\" and an integer \"rank\"");
    specs.push_back({t["id"].get<std::string>(), t["rank"].get<int>()});
  }
  return TubeConfig(std::move(specs));
}

Pair parse_pair(const Json& doc, const std::optional<TubeConfig>& fallback) {
  if (!doc.is_object()) throw ConfigError("pair document must be an object");
  TubeConfig config;
  if (doc.contains("tubes"))
    config = parse_tube_config(doc);
  else if (fallback)
    config = *fallback;
  else
    throw ConfigError("pair document has no \"tubes\" and no configuration was given");
  std::vector<Segment> y;
  std::vector<std::string> p;
  try {
    for (const auto& s : doc.value("Y", Json::array())) y.push_back(parse_segment(config, s.get<std::string>()));
    for (const auto& t : doc.value("P", Json::array())) p.push_back(t.get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed pair document: ") + e.what());
  }
  return build_pair(std::move(config), std::move(y), std::move(p));
}

Json to_json(const TubeConfig& c) {
  Json tubes = Json::array();
  for (const auto& t : c.tubes()) tubes.push_back({{"id", t.id}, {"rank", t.rank}});
  return Json{{"tubes", tubes}};
}

Json to_json(const Pair& p) {
  Json j = to_json(p.config);
  j["Y"] = strings(p.Y.summands);
  j["P"] = p.P;
  return j;
}

Json to_json(const TiltingDescriptor& d) {
  return Json{{"Y", strings(d.Y.summands)}, {"P", d.P},        {"V", strings(d.V)},
              {"U", strings(d.U)},          {"parts", strings(d.parts)}, {"minimal", is_minimal_tilting(d)}};
}

Json to_json(const CotiltingDescriptor& d) {
  return Json{{"Y", strings(d.Y.summands)},
              {"P", d.P},
              {"generic", d.generic},
              {"pruefer_set", strings(d.pruefer_set)},
              {"adic_set", strings(d.adic_set)},
              {"parts", strings(d.parts)},
              {"minimal", is_minimal_cotilting(d)}};
}

Json to_json(const QSet& q) {
  Json tubes = Json::array();
  for (const auto& t : q.tubes) {
    Json roots = Json::array();
    for (const auto& w : t.wings) roots.push_back(to_string(w.root()));
    Json r_parts = Json::array();
    if (t.in_P && !t.wings.empty())
      for (const auto& part : r_set_parts(t.rank, t.wings)) r_parts.push_back(strings(part));
    tubes.push_back({{"tube", t.tube},
                     {"rank", t.rank},
                     {"in_P", t.in_P},
                     {"whole_tube", t.whole_tube},
                     {"wings", roots},
                     {"X", strings(t.x_set)},
                     {"R", strings(t.r_set)},
                     {"R_parts", r_parts},
                     {"Q", strings(t.q_set)}});
  }
  return Json{{"Q", q.q_tubes()}, {"tubes", tubes}};
}

Json to_json(const WideDescription& d) {
  Json tubes = Json::array();
  for (const auto& t : d.tubes) {
    Json caps = Json::array();
    for (const auto& [s, h] : t.caps) caps.push_back({{"ray", to_string(s)}, {"max_length", h}});
    tubes.push_back({{"tube", t.tube},
                     {"rank", t.rank},
                     {"whole_tube", t.whole_tube},
                     {"simples", strings(t.simples)},
                     {"full_rays", strings(t.full_rays)},
                     {"caps", caps}});
  }
  return Json{{"tubes", tubes}};
}

Json to_json(const FiltrationWitness& w) {
  auto prov = [](Provenance p) { return p == Provenance::Generator ? "generator" : "prior_step"; };
  Json steps = Json::array();
  for (const auto& s : w.steps)
    steps.push_back({{"sub", to_string(s.sub)},
                     {"mid", to_string(s.mid)},
                     {"quot", to_string(s.quot)},
                     {"sub_from", prov(s.sub_from)},
                     {"quot_from", prov(s.quot_from)}});
  return Json{{"target", to_string(w.target)}, {"steps", steps}};
}

Json to_json(const Theorem8Report& r) {
  Json mism = Json::array();
  for (const auto& m : r.mismatches) mism.push_back({{"Z", to_string(m.z)}, {"genT", m.genT}, {"mperp", m.mperp}});
  return Json{{"checked", r.checked}, {"mismatches", mism}};
}

Json with_schema(Json body) {
  Json out{{"schema", kSchema}};
  for (auto it = body.begin(); it != body.end(); ++it) out[it.key()] = it.value();
  return out;
}

}  // namespace regulus::io
