#pragma once

#include <cstdint>
#include <iomanip>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "drgtk/feasibility.hpp"
#include "drgtk/koolen_park.hpp"
#include "drgtk/rational.hpp"
#include "drgtk/regularity.hpp"
#include "drgtk/terwilliger.hpp"

// JSON forms of the verdict records. Integers that fit in 64 bits are JSON
// numbers, larger ones decimal strings; rationals are {"num": .., "den": ..}.

namespace drgtk {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kToolName = "drgtk";
inline constexpr std::string_view kToolVersion = "1.0.0";

inline Json integer_to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

inline Integer integer_from_json(const Json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  throw std::invalid_argument("expected an integer");
}

inline Json rational_to_json(const Rational& q) {
  return Json{{"num", integer_to_json(numerator(q))}, {"den", integer_to_json(denominator(q))}};
}

inline Rational rational_from_json(const Json& j) {
  return Rational(integer_from_json(j.at("num")), integer_from_json(j.at("den")));
}

inline Json to_json(const IntersectionArray& a) {
  Json j{{"text", a.to_string()}, {"b", a.b()}, {"c", a.c()}, {"diameter", a.diameter()}};
  if (auto k = a.layer_sizes()) {
    j["layer_sizes"] = *k;
    j["v"] = *a.vertex_count();
  }
  return j;
}

inline Json to_json(const DistanceRegularityWitness& w) {
  return Json{{"u", w.u},
              {"w", w.w},
              {"distance", w.distance},
              {"expected_c", w.expected_c},
              {"found_c", w.found_c},
              {"expected_b", w.expected_b},
              {"found_b", w.found_b}};
}

inline Json to_json(const AmplyRegularParams& p) {
  return Json{{"v", p.v}, {"k", p.k}, {"lambda", p.lambda}, {"mu", p.mu}};
}

inline AmplyRegularParams amply_regular_from_json(const Json& j) {
  return AmplyRegularParams{j.at("v").get<std::int64_t>(), j.at("k").get<std::int64_t>(),
                            j.at("lambda").get<std::int64_t>(), j.at("mu").get<std::int64_t>()};
}

inline Json to_json(const TerwilligerVerdict& v) {
  Json j{{"is_terwilliger", v.is_terwilliger}, {"mu", v.mu ? Json(*v.mu) : Json(nullptr)}};
  if (v.witness) {
    const auto& w = *v.witness;
    if (w.kind == TerwilligerWitness::Kind::DeviantMu)
      j["witness"] = Json{{"kind", "deviant_mu"}, {"u", w.u}, {"w", w.w}, {"expected_mu", w.expected_mu}, {"found_mu", w.found_mu}};
    else
      j["witness"] = Json{{"kind", "non_clique_mu"}, {"u", w.u}, {"w", w.w}, {"y", w.y}, {"z", w.z}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

inline Json to_json(const KpReport& r) {
  Json j;
  j["params"] = to_json(r.params);
  j["c"] = r.c ? Json(*r.c) : Json(nullptr);
  j["c_undefined_at"] = r.complete_local_vertex ? Json(*r.complete_local_vertex) : Json(nullptr);
  j["per_vertex_c"] = r.per_vertex_c;
  Json values = Json::array();
  for (const auto& [cp, value] : r.bound_values) values.push_back(Json{{"c_prime", cp}, {"value", rational_to_json(value)}});
  j["bound_values"] = values;
  j["max_value"] = r.max_value ? rational_to_json(*r.max_value) : Json(nullptr);
  j["argmax_c_prime"] = r.argmax_cprime ? Json(*r.argmax_cprime) : Json(nullptr);
  j["mu_minus_1"] = r.mu_minus_1;
  j["bound_holds"] = r.bound_holds;
  j["equality"] = r.equality;
  j["terwilliger"] = r.terwilliger;
  j["cover_property"] = r.cover_property ? Json(*r.cover_property) : Json(nullptr);
  return j;
}

inline KpReport kp_report_from_json(const Json& j) {
  KpReport r;
  r.params = amply_regular_from_json(j.at("params"));
  if (!j.at("c").is_null()) r.c = j.at("c").get<std::int64_t>();
  if (!j.at("c_undefined_at").is_null()) r.complete_local_vertex = j.at("c_undefined_at").get<Vertex>();
  r.per_vertex_c = j.at("per_vertex_c").get<std::vector<std::int64_t>>();
  for (const auto& entry : j.at("bound_values"))
    r.bound_values.emplace(entry.at("c_prime").get<std::int64_t>(), rational_from_json(entry.at("value")));
  if (!j.at("max_value").is_null()) r.max_value = rational_from_json(j.at("max_value"));
  if (!j.at("argmax_c_prime").is_null()) r.argmax_cprime = j.at("argmax_c_prime").get<std::int64_t>();
  r.mu_minus_1 = j.at("mu_minus_1").get<std::int64_t>();
  r.bound_holds = j.at("bound_holds").get<bool>();
  r.equality = j.at("equality").get<bool>();
  r.terwilliger = j.at("terwilliger").get<bool>();
  if (!j.at("cover_property").is_null()) r.cover_property = j.at("cover_property").get<bool>();
  return r;
}

inline bool operator==(const KpReport& a, const KpReport& b) {
  return a.params == b.params && a.c == b.c && a.complete_local_vertex == b.complete_local_vertex &&
         a.per_vertex_c == b.per_vertex_c && a.bound_values == b.bound_values && a.max_value == b.max_value &&
         a.argmax_cprime == b.argmax_cprime && a.mu_minus_1 == b.mu_minus_1 && a.bound_holds == b.bound_holds &&
         a.equality == b.equality && a.terwilliger == b.terwilliger && a.cover_property == b.cover_property;
}

inline Json to_json(const SrgParams& p) {
  return Json{{"v", integer_to_json(p.v)}, {"k", integer_to_json(p.k)}, {"lambda", integer_to_json(p.lambda)},
              {"mu", integer_to_json(p.mu)}};
}

inline SrgParams srg_from_json(const Json& j) {
  return SrgParams{integer_from_json(j.at("v")), integer_from_json(j.at("k")), integer_from_json(j.at("lambda")),
                   integer_from_json(j.at("mu"))};
}

inline Json to_json(const HostParams& p) {
  return Json{{"k", integer_to_json(p.k)}, {"lambda", integer_to_json(p.lambda)}, {"mu", integer_to_json(p.mu)}};
}

inline Json to_json(const EigenvalueCheck& e) {
  Json j{{"discriminant", integer_to_json(e.discriminant)}};
  j["roots"] = e.roots ? Json::array({integer_to_json(e.roots->first), integer_to_json(e.roots->second)}) : Json(nullptr);
  j["integral"] = e.integral;
  j["conference"] = e.conference;
  j["feasible"] = e.feasible;
  return j;
}

inline Json to_json(const Tower& t) {
  Json levels = Json::array();
  for (const auto& level : t.levels)
    levels.push_back(Json{{"alpha", integer_to_json(level.alpha)}, {"params", to_json(level.quotient)}});
  Json roots = Json::array();
  for (const auto& c : t.c_roots) roots.push_back(integer_to_json(c));
  return Json{{"top", to_json(t.top)},
              {"levels", levels},
              {"root", Json{{"s", t.root.s}, {"r", t.root.r}}},
              {"height", t.height()},
              {"c_roots", roots},
              {"status", "parameter-feasible"}};
}

inline Tower tower_from_json(const Json& j) {
  Tower t;
  const auto& top = j.at("top");
  t.top = HostParams{integer_from_json(top.at("k")), integer_from_json(top.at("lambda")), integer_from_json(top.at("mu"))};
  for (const auto& level : j.at("levels"))
    t.levels.push_back(LocalQuotient{integer_from_json(level.at("alpha")), srg_from_json(level.at("params"))});
  t.root = FsrParams{j.at("root").at("s").get<std::int64_t>(), j.at("root").at("r").get<std::int64_t>()};
  for (const auto& c : j.at("c_roots")) t.c_roots.push_back(integer_from_json(c));
  return t;
}

/// FNV-1a, 64 bit, as 16 hex digits. Identifies input files in reports.
inline std::string fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

/// Top-level report. `verdicts` is byte-stable for identical input; timing is
/// kept in its own member and may be omitted.
struct ReportDocument {
  std::string command;
  std::string input_name;
  std::optional<std::string> input_hash;
  Json verdicts = Json::object();
  std::optional<double> seconds;

  Json to_json() const {
    Json j;
    j["tool"] = Json{{"name", kToolName}, {"version", kToolVersion}};
    j["command"] = command;
    j["input"] = Json{{"name", input_name}, {"fnv1a64", input_hash ? Json(*input_hash) : Json(nullptr)}};
    j["verdicts"] = verdicts;
    if (seconds) j["timing"] = Json{{"seconds", *seconds}};
    return j;
  }

  static ReportDocument from_json(const Json& j) {
    ReportDocument d;
    if (j.at("tool").at("name") != kToolName) throw std::invalid_argument("not a drgtk report");
    d.command = j.at("command").get<std::string>();
    d.input_name = j.at("input").at("name").get<std::string>();
    if (!j.at("input").at("fnv1a64").is_null()) d.input_hash = j.at("input").at("fnv1a64").get<std::string>();
    d.verdicts = j.at("verdicts");
    if (j.contains("timing")) d.seconds = j.at("timing").at("seconds").get<double>();
    return d;
  }

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

}  // namespace drgtk
