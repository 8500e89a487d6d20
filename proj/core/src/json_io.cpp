#include "ietrel/json_io.hpp"

#include <fstream>
#include <sstream>

#include "ietrel/errors.hpp"

namespace ietrel::io {

namespace {

std::string q_str(const mpq_class& x) { return x.get_str(); }

mpq_class q_from(const json& j) {
  if (!j.is_string()) throw FormatError("expected a rational string, got " + j.dump());
  try {
    return Scalar::parse_rational(j.get<std::string>()).rational();
  } catch (const std::exception& e) {
    throw FormatError("bad rational " + j.dump() + ": " + e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw FormatError(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(std::string("missing field '") + key + "'");
  return *it;
}

const json& array_field(const json& j, const char* key) {
  const json& a = field(j, key);
  if (!a.is_array()) throw FormatError(std::string("field '") + key + "' must be an array");
  return a;
}

std::vector<Scalar> scalars_from(const json& a) {
  if (!a.is_array()) throw FormatError("expected an array of scalars");
  std::vector<Scalar> out;
  for (const auto& x : a) out.push_back(scalar_from_json(x));
  return out;
}

json scalars_to(const std::vector<Scalar>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(to_json(x));
  return a;
}

std::int64_t int_from(const json& j, const char* what) {
  if (!j.is_number_integer()) throw FormatError(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

// Domain errors raised while building a value from well-formed JSON still
// mean the input was malformed.
template <class F>
auto guarded(const char* what, F&& build) {
  try {
    return build();
  } catch (const FormatError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string(what) + ": " + e.what());
  } catch (const json::exception& e) {
    throw FormatError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

json to_json(const Scalar& x) {
  if (x.is_rational()) return {{"Q", q_str(x.c0())}};
  return {{"Qa", {q_str(x.c0()), q_str(x.c1()), q_str(x.c2())}}};
}

Scalar scalar_from_json(const json& j) {
  if (!j.is_object() || j.size() != 1) throw FormatError("scalar must be {\"Q\": ...} or {\"Qa\": [...]}: " + j.dump());
  if (j.contains("Q")) return Scalar(q_from(j["Q"]));
  if (j.contains("Qa")) {
    const json& c = j["Qa"];
    if (!c.is_array() || c.size() != 3) throw FormatError("\"Qa\" needs exactly three coefficients");
    return Scalar::cubic(q_from(c[0]), q_from(c[1]), q_from(c[2]));
  }
  throw FormatError("unknown scalar encoding: " + j.dump());
}

json to_json(const Iet& t) {
  json perm = json::array();
  for (int i = 1; i <= t.size(); ++i) perm.push_back(t.permutation()(i));
  return {{"lengths", scalars_to(t.lengths())}, {"perm", perm}};
}

Iet iet_from_json(const json& j) {
  return guarded("bad IET", [&] {
    auto lengths = scalars_from(array_field(j, "lengths"));
    std::vector<int> images;
    for (const auto& p : array_field(j, "perm")) images.push_back(static_cast<int>(int_from(p, "perm entry")));
    return Iet(std::move(lengths), Permutation(std::move(images)));
  });
}

json to_json(const IntervalSet& s) {
  json a = json::array();
  for (const auto& part : s.parts()) a.push_back({to_json(part.lo), to_json(part.hi)});
  return a;
}

IntervalSet interval_set_from_json(const json& j) {
  if (!j.is_array()) throw FormatError("interval set must be an array of [lo, hi] pairs");
  std::vector<Interval> parts;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2) throw FormatError("interval must be a [lo, hi] pair");
    parts.push_back({scalar_from_json(p[0]), scalar_from_json(p[1])});
  }
  return IntervalSet(std::move(parts));
}

json to_json(const PointSet& p) { return scalars_to(p.points()); }

json to_json(const Word& w) {
  json a = json::array();
  for (const auto& b : w.blocks()) a.push_back({std::string(1, static_cast<char>(b.letter)), b.exponent});
  return a;
}

Word word_from_json(const json& j) {
  if (!j.is_array()) throw FormatError("word must be an array of [letter, exponent] blocks");
  std::vector<Block> raw;
  for (const auto& b : j) {
    if (!b.is_array() || b.size() != 2 || !b[0].is_string()) throw FormatError("bad word block " + b.dump());
    const auto name = b[0].get<std::string>();
    if (name != "r" && name != "t") throw FormatError("word letters are r and t, got " + name);
    raw.push_back({name == "r" ? Letter::r : Letter::t, int_from(b[1], "exponent")});
  }
  return Word(raw);
}

json to_json(const DriftData& d) {
  return {{"direction", scalars_to(d.direction)}, {"vector", scalars_to(d.vector)}, {"ratio", to_json(d.ratio)}};
}

DriftData drift_from_json(const json& j) {
  return {scalars_from(array_field(j, "direction")), scalars_from(array_field(j, "vector")),
          scalar_from_json(field(j, "ratio"))};
}

json to_json(const Schedule& s) {
  return {{"delta", to_json(s.delta)}, {"eps", to_json(s.eps)}, {"eta", to_json(s.eta)},
          {"theta", to_json(s.theta)}, {"mu", to_json(s.mu)}};
}

Schedule schedule_from_json(const json& j) {
  return {scalar_from_json(field(j, "delta")), scalar_from_json(field(j, "eps")), scalar_from_json(field(j, "eta")),
          scalar_from_json(field(j, "theta")), scalar_from_json(field(j, "mu"))};
}

json to_json(const Certificate& c) {
  json checks = json::array();
  for (const auto& ch : c.checks) checks.push_back({{"name", ch.name}, {"passed", ch.passed}});
  return {{"q", c.q},           {"s", to_json(c.s)},         {"t0", to_json(c.t0)},
          {"t", to_json(c.t)},  {"params", to_json(c.params)}, {"drift", to_json(c.drift)},
          {"k", c.k},           {"word", to_json(c.word)},   {"commuting", c.commuting},
          {"checks", checks}};
}

Certificate certificate_from_json(const json& j) {
  return guarded("bad certificate", [&] {
    Certificate c;
    c.q = static_cast<long>(int_from(field(j, "q"), "q"));
    c.s = iet_from_json(field(j, "s"));
    c.t0 = iet_from_json(field(j, "t0"));
    c.t = iet_from_json(field(j, "t"));
    c.params = schedule_from_json(field(j, "params"));
    c.drift = drift_from_json(field(j, "drift"));
    c.k = int_from(field(j, "k"), "k");
    c.word = word_from_json(field(j, "word"));
    const json& commuting = field(j, "commuting");
    if (!commuting.is_boolean()) throw FormatError("'commuting' must be a boolean");
    c.commuting = commuting.get<bool>();
    for (const auto& ch : array_field(j, "checks")) {
      const json& passed = field(ch, "passed");
      const json& name = field(ch, "name");
      if (!passed.is_boolean() || !name.is_string()) throw FormatError("bad check entry " + ch.dump());
      c.checks.push_back({name.get<std::string>(), passed.get<bool>()});
    }
    return c;
  });
}

json to_json(const Aiet& f) {
  json pieces = json::array();
  for (const auto& p : f.pieces()) {
    pieces.push_back({{"lo", q_str(p.lo)}, {"hi", q_str(p.hi)}, {"slope", q_str(p.slope)}, {"offset", q_str(p.offset)}});
  }
  return {{"pieces", pieces}};
}

Aiet aiet_from_json(const json& j) {
  return guarded("bad AIET", [&] {
    std::vector<AffinePiece> pieces;
    for (const auto& p : array_field(j, "pieces")) {
      pieces.push_back({q_from(field(p, "lo")), q_from(field(p, "hi")), q_from(field(p, "slope")),
                        q_from(field(p, "offset"))});
    }
    return Aiet(std::move(pieces));
  });
}

namespace {

json rational_intervals(const IntervalSet& s) {
  json a = json::array();
  for (const auto& part : s.parts()) a.push_back({q_str(part.lo.rational()), q_str(part.hi.rational())});
  return a;
}

IntervalSet rational_intervals_from(const json& j) {
  if (!j.is_array()) throw FormatError("interval list must be an array of [lo, hi] pairs");
  std::vector<Interval> parts;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2) throw FormatError("interval must be a [lo, hi] pair");
    parts.push_back({Scalar(q_from(p[0])), Scalar(q_from(p[1]))});
  }
  return IntervalSet(std::move(parts));
}

}  // namespace

json to_json(const PingPongInput& p) {
  return {{"f", to_json(p.f)},
          {"g", to_json(p.g)},
          {"V", rational_intervals(p.sets.v)},
          {"W", rational_intervals(p.sets.w)},
          {"X", rational_intervals(p.sets.x)},
          {"Y", rational_intervals(p.sets.y)}};
}

PingPongInput pingpong_from_json(const json& j) {
  return guarded("bad ping-pong input", [&] {
    return PingPongInput{aiet_from_json(field(j, "f")), aiet_from_json(field(j, "g")),
                         PingPongSets{rational_intervals_from(field(j, "V")), rational_intervals_from(field(j, "W")),
                                      rational_intervals_from(field(j, "X")), rational_intervals_from(field(j, "Y"))}};
  });
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace ietrel::io
