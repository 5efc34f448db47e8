#pragma once

// JSON documents exchanged by the command line front end. Every emitted
// document carries "schema": "regulus/1"; keys keep insertion order so output
// is byte-stable.

#include <json.hpp>
#include <optional>
#include <string>

#include "regulus/kronecker.hpp"
#include "regulus/localization.hpp"
#include "regulus/tilting.hpp"

namespace regulus::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "regulus/1";

Json read_json_file(const std::string& path);

/// {"tubes": [{"id": "t1", "rank": 3}, ...]}
TubeConfig parse_tube_config(const Json& doc);

/// {"tubes": [...]?, "Y": ["t1:S1[1]", ...], "P": ["t1", ...]}. The tubes of
/// the document take precedence over `fallback`; one of them must exist.
Pair parse_pair(const Json& doc, const std::optional<TubeConfig>& fallback = std::nullopt);

Json to_json(const TubeConfig& c);
Json to_json(const Pair& p);
Json to_json(const TiltingDescriptor& d);
Json to_json(const CotiltingDescriptor& d);
Json to_json(const QSet& q);
Json to_json(const WideDescription& d);
Json to_json(const FiltrationWitness& w);
Json to_json(const Theorem8Report& r);

Json with_schema(Json body);

}  // namespace regulus::io
