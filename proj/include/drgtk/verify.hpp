#pragma once

#include <string>
#include <vector>

#include "drgtk/bundled_data.hpp"
#include "drgtk/coclique.hpp"
#include "drgtk/constructions.hpp"
#include "drgtk/feasibility.hpp"
#include "drgtk/koolen_park.hpp"
#include "drgtk/regularity.hpp"
#include "drgtk/report.hpp"
#include "drgtk/terwilliger.hpp"

// Re-derives every row of the expected-results table from scratch and
// compares. The bundled graph data is treated as untrusted: each property is
// recomputed from the adjacency.

namespace drgtk {

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

inline Json expected_results() { return Json::parse(bundled::kExpectedResults); }

namespace detail {

inline std::string rational_text(const Rational& q) { return q.str(); }

inline void check_graph_row(const Json& row, std::vector<CheckLine>& out) {
  const std::string name = row.at("name");
  const Graph g = build(NamedGraph::parse(name));
  auto add = [&](const std::string& what, bool pass, std::string detail) {
    out.push_back({name + ": " + what, pass, std::move(detail)});
  };

  add("vertex count", g.order() == row.at("v").get<std::size_t>(), std::to_string(g.order()));

  const auto expected_array = IntersectionArray::parse(row.at("array").get<std::string>());
  const auto array = intersection_array(g);
  add("distance-regular", array && *array == expected_array,
      array ? array->to_string() : "witness (" + std::to_string(array.error().u) + "," + std::to_string(array.error().w) + ")");

  const auto tv = is_terwilliger(g);
  add("Terwilliger", tv.is_terwilliger == row.at("terwilliger").get<bool>() && tv.mu == row.at("mu").get<std::int64_t>(),
      "terwilliger=" + std::string(tv.is_terwilliger ? "true" : "false") + " mu=" + (tv.mu ? std::to_string(*tv.mu) : "undefined"));

  const Graph delta = build(NamedGraph::parse(row.at("locally").get<std::string>()));
  add("locally " + row.at("locally").get<std::string>(), is_locally(g, delta), "");

  const auto report = kp_check(g);
  if (!report) {
    add("coclique bound", false, "not amply regular: " + report.error().failure.describe());
    return;
  }
  const auto& r = *report;
  add("c", r.c == row.at("c").get<std::int64_t>(), r.c ? std::to_string(*r.c) : "undefined");
  const Rational expected_max = rational_from_json(row.at("max_value"));
  add("bound maximum", r.max_value == expected_max && r.argmax_cprime == row.at("argmax_c_prime").get<std::int64_t>(),
      r.max_value ? rational_text(*r.max_value) + " at c'=" + std::to_string(*r.argmax_cprime) : "undefined");
  add("equality", r.equality == row.at("equality").get<bool>() && r.bound_holds && Rational(r.mu_minus_1) == expected_max,
      "mu-1=" + std::to_string(r.mu_minus_1));
  add("equality cover property", !r.equality || r.cover_property.value_or(false), "");
}

}  // namespace detail

/// One line per checked claim.
inline std::vector<CheckLine> verify_expectations(const Json& table = expected_results()) {
  std::vector<CheckLine> out;
  for (const auto& row : table.at("graphs")) detail::check_graph_row(row, out);

  for (const auto& row : table.at("bounds")) {
    const auto b = kp_bound(row.at("k"), row.at("lambda"), row.at("c"));
    const Rational expected = rational_from_json(row.at("max_value"));
    out.push_back({"kp_bound(" + row.at("k").dump() + "," + row.at("lambda").dump() + "," + row.at("c").dump() + ")",
                   b.max_value == expected && b.argmax == row.at("argmax_c_prime").get<std::int64_t>(),
                   b.max_value.str() + " at c'=" + std::to_string(b.argmax)});
  }

  for (const auto& row : table.at("eigenvalues")) {
    const auto& p = row.at("params");
    const SrgParams params{integer_from_json(p[0]), integer_from_json(p[1]), integer_from_json(p[2]), integer_from_json(p[3])};
    const auto e = eigenvalue_feasible(params);
    bool pass = e.feasible == row.at("feasible").get<bool>() && e.discriminant == integer_from_json(row.at("discriminant"));
    if (row.contains("roots"))
      pass = pass && e.roots && e.roots->first == integer_from_json(row.at("roots")[0]) &&
             e.roots->second == integer_from_json(row.at("roots")[1]);
    out.push_back({"eigenvalues" + params.to_string(), pass,
                   "discriminant " + e.discriminant.str() + (e.feasible ? ", feasible" : ", infeasible")});
  }

  for (const auto& row : table.at("arrays")) {
    const auto a = IntersectionArray::parse(row.at("array").get<std::string>());
    const auto f = array_feasible(a);
    out.push_back({"array " + a.to_string(),
                   f.feasible == row.at("feasible").get<bool>() && f.vertices == row.at("v").get<std::int64_t>(),
                   f.vertices ? "v=" + std::to_string(*f.vertices) : "non-integral"});
  }

  for (const auto& row : table.at("cocliques")) {
    const Graph g = build(NamedGraph::parse(row.at("graph").get<std::string>()));
    const auto cert = max_coclique_containing(g, {});
    out.push_back({"max coclique of " + row.at("graph").get<std::string>(),
                   cert.check(g) && cert.size() == row.at("alpha").get<std::size_t>(), std::to_string(cert.size())});
  }

  const auto& scan_row = table.at("scan");
  const auto scan = tower_scan(scan_row.at("max_k").get<std::int64_t>());
  bool towers_match = scan.survivors.size() == scan_row.at("towers").size();
  for (std::size_t i = 0; towers_match && i < scan.survivors.size(); ++i) {
    const auto& t = scan.survivors[i];
    const auto& e = scan_row.at("towers")[i];
    towers_match = t.top == HostParams{integer_from_json(e.at("top")[0]), integer_from_json(e.at("top")[1]),
                                       integer_from_json(e.at("top")[2])} &&
                   t.root == FsrParams{e.at("root")[0].get<std::int64_t>(), e.at("root")[1].get<std::int64_t>()};
  }
  std::string survivors;
  for (const auto& t : scan.survivors) survivors += t.top.to_string() + "->F(" + std::to_string(t.root.s) + "," + std::to_string(t.root.r) + ") ";
  out.push_back({"tower_scan(" + scan_row.at("max_k").dump() + ") survivors", towers_match, survivors});
  for (const auto& top : scan_row.at("excluded_tops")) {
    const HostParams excluded{integer_from_json(top[0]), integer_from_json(top[1]), integer_from_json(top[2])};
    bool absent = true;
    for (const auto& t : scan.survivors) absent = absent && t.top != excluded;
    out.push_back({"tower_scan excludes " + excluded.to_string(), absent, ""});
  }
  return out;
}

}  // namespace drgtk
