#pragma once

// JSON views of the library results. Every constant carries its label and
// the direction in which it was rounded.

#include <json.hpp>

#include "gapkit/experiments.hpp"

namespace gapkit {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// {"schema": "gapkit", "version": 1, "command": ..., "result": ...}
Json envelope(const std::string& command, Json result);

Json to_json(const Bound& b);
Json to_json(const Interval& x);  // enclosure, tagged as such
Json to_json(const MinimalPair& p);
Json to_json(const PairReport& r);
Json to_json(const GapConstants& k);
Json to_json(const ThueSiegelParams& p);
Json to_json(const CountBound& c);
Json to_json(const Verdict& v);
Json to_json(const EnhancedAut& aut);
Json to_json(const OrbitPartition& o);
Json to_json(const C5Result& c);
Json to_json(const Census& c);
Json to_json(const SweepReport& r, bool with_records = false);

/// One "path = value" line per leaf.
std::string to_text(const Json& j);

}  // namespace gapkit
