#pragma once

#include <string>

#include "json.hpp"

#include "ietrel/aiet.hpp"
#include "ietrel/drift.hpp"
#include "ietrel/iet.hpp"
#include "ietrel/interval_set.hpp"
#include "ietrel/neighborhoods.hpp"
#include "ietrel/relation.hpp"
#include "ietrel/scalar.hpp"
#include "ietrel/word.hpp"

// Wire formats. Every decoder throws FormatError on malformed input.
//
//   scalar       {"Q": "3/10"} | {"Qa": ["1/2", "-1/2", "0"]}   (c0, c1, c2)
//   iet          {"lengths": [scalar, ...], "perm": [2, 1, 3]}
//   interval set [[scalar, scalar], ...]
//   word         [["t", 120], ["r", 1], ...]
//   aiet         {"pieces": [{"lo": "0", "hi": "1/5", "slope": "4", "offset": "0"}, ...]}
//   ping-pong    {"f": aiet, "g": aiet, "V": [["0", "1/5"]], "W": ..., "X": ..., "Y": ...}
//   certificate  see certificate_to_json

namespace ietrel::io {

using json = nlohmann::json;

json to_json(const Scalar& x);
Scalar scalar_from_json(const json& j);

json to_json(const Iet& t);
Iet iet_from_json(const json& j);

json to_json(const IntervalSet& s);
IntervalSet interval_set_from_json(const json& j);

json to_json(const PointSet& p);

json to_json(const Word& w);
Word word_from_json(const json& j);

json to_json(const DriftData& d);
DriftData drift_from_json(const json& j);

json to_json(const Schedule& s);
Schedule schedule_from_json(const json& j);

json to_json(const Certificate& c);
Certificate certificate_from_json(const json& j);

json to_json(const Aiet& f);
Aiet aiet_from_json(const json& j);

struct PingPongInput {
  Aiet f;
  Aiet g;
  PingPongSets sets;
};
json to_json(const PingPongInput& p);
PingPongInput pingpong_from_json(const json& j);

/// Reads and parses a JSON file; FormatError on I/O or syntax errors.
json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace ietrel::io
