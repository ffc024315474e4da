#pragma once

// JSON space documents:
//
//   {"lattice": {"n": 1},
//    "points": ["x", "y", "z"],
//    "lines": [{"name": "d1", "values": ["1", "a1", "0"]}, ...],
//    "meta": {...}}                                 // optional, free-form
//
// Unknown fields are rejected. Parse errors name the offending JSON path.

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "fls/enumerate.hpp"
#include "fls/lattice.hpp"
#include "fls/space.hpp"
#include "fls/theorems.hpp"

namespace fls {

struct SpaceDocument {
  FuzzyLinearSpace space;
  nlohmann::ordered_json meta;  // null when absent

  friend bool operator==(const SpaceDocument&, const SpaceDocument&) = default;
};

namespace detail {

using ojson = nlohmann::ordered_json;

[[noreturn]] inline void parse_fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

inline void only_fields(const ojson& obj, std::initializer_list<std::string_view> allowed, const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || key == a;
    if (!ok) parse_fail(where, "unknown field '" + key + "'");
  }
}

inline const ojson& required(const ojson& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) parse_fail(where, std::string("missing field '") + key + "'");
  return *it;
}

}  // namespace detail

inline SpaceDocument parse_space_document(std::string_view text) {
  using detail::ojson;
  using detail::parse_fail;

  ojson doc;
  try {
    doc = ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) parse_fail("$", "expected an object");
  detail::only_fields(doc, {"lattice", "points", "lines", "meta"}, "$");

  const auto& lat_json = detail::required(doc, "lattice", "$");
  if (!lat_json.is_object()) parse_fail("$.lattice", "expected an object");
  detail::only_fields(lat_json, {"n"}, "$.lattice");
  const auto& n_json = detail::required(lat_json, "n", "$.lattice");
  if (!n_json.is_number_unsigned()) parse_fail("$.lattice.n", "expected a nonnegative integer");
  const ChainLattice lat{n_json.get<unsigned>()};

  const auto& pts_json = detail::required(doc, "points", "$");
  if (!pts_json.is_array()) parse_fail("$.points", "expected an array");
  std::vector<std::string> points;
  for (std::size_t i = 0; i < pts_json.size(); ++i) {
    if (!pts_json[i].is_string()) parse_fail("$.points[" + std::to_string(i) + "]", "expected a string");
    points.push_back(pts_json[i].get<std::string>());
  }

  const auto& lines_json = detail::required(doc, "lines", "$");
  if (!lines_json.is_array()) parse_fail("$.lines", "expected an array");
  std::vector<FuzzyLine> lines;
  for (std::size_t j = 0; j < lines_json.size(); ++j) {
    const auto where = "$.lines[" + std::to_string(j) + "]";
    const auto& lj = lines_json[j];
    if (!lj.is_object()) parse_fail(where, "expected an object");
    detail::only_fields(lj, {"name", "values"}, where);
    const auto& name = detail::required(lj, "name", where);
    if (!name.is_string()) parse_fail(where + ".name", "expected a string");
    const auto& values = detail::required(lj, "values", where);
    if (!values.is_array()) parse_fail(where + ".values", "expected an array");
    if (values.size() != points.size()) {
      parse_fail(where + ".values", "has " + std::to_string(values.size()) + " entries for " +
                                        std::to_string(points.size()) + " points");
    }
    FuzzyLine d{name.get<std::string>(), {}};
    for (std::size_t i = 0; i < values.size(); ++i) {
      const auto vwhere = where + ".values[" + std::to_string(i) + "]";
      if (!values[i].is_string()) parse_fail(vwhere, "expected a token string");
      try {
        d.values.push_back(parse_token(values[i].get<std::string>(), lat));
      } catch (const ParseError& e) {
        parse_fail(vwhere, e.what());
      }
    }
    lines.push_back(std::move(d));
  }

  SpaceDocument out;
  try {
    out.space = FuzzyLinearSpace(std::move(points), lat, std::move(lines));
  } catch (const std::invalid_argument& e) {
    parse_fail("$", e.what());
  }
  if (auto it = doc.find("meta"); it != doc.end()) {
    if (!it->is_object()) parse_fail("$.meta", "expected an object");
    out.meta = *it;
  }
  return out;
}

inline FuzzyLinearSpace parse_space(std::string_view text) { return parse_space_document(text).space; }

inline nlohmann::ordered_json space_json(const FuzzyLinearSpace& space) {
  nlohmann::ordered_json j;
  j["lattice"] = {{"n", space.lattice().n()}};
  j["points"] = space.point_names();
  auto lines = nlohmann::ordered_json::array();
  for (const auto& d : space.lines()) {
    std::vector<std::string> tokens;
    tokens.reserve(d.values.size());
    for (const auto& e : d.values) tokens.push_back(format_token(e));
    lines.push_back({{"name", d.name}, {"values", tokens}});
  }
  j["lines"] = std::move(lines);
  return j;
}

inline std::string serialize_space(const SpaceDocument& doc, int indent = 2) {
  auto j = space_json(doc.space);
  if (!doc.meta.is_null()) j["meta"] = doc.meta;
  return j.dump(indent) + "\n";
}

inline std::string serialize_space(const FuzzyLinearSpace& space, int indent = 2) {
  return serialize_space(SpaceDocument{space, nullptr}, indent);
}

inline SpaceDocument load_space_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_space_document(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Reports

inline nlohmann::ordered_json census_json(const Census& census) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& e : census.entries) {
    nlohmann::ordered_json entry;
    entry["canonicalSpace"] = space_json(e.canonical_space);
    entry["automorphismCount"] = e.automorphism_count;
    entry["labeledCount"] = to_decimal(e.labeled_count);
    if (e.verdict) {
      entry["verdict"] = verdict_json(*e.verdict);
    } else {
      entry["verdict"] = nullptr;
      entry["excluded"] = e.excluded_reason;
    }
    const auto& l = e.labelings;
    nlohmann::ordered_json stats;
    stats["total"] = to_decimal(l.total);
    stats["checked"] = l.checked;
    stats["sampled"] = l.sampled;
    stats["clauseFailures"] = {{"c1", l.clause_failures[0]},
                               {"c2", l.clause_failures[1]},
                               {"c3", l.clause_failures[2]},
                               {"c4", l.clause_failures[3]}};
    stats["holding"] = l.holding;
    stats["clausesInvariant"] = l.clauses_invariant;
    entry["labelings"] = std::move(stats);
    j.push_back(std::move(entry));
  }
  return j;
}

inline nlohmann::ordered_json counterexample_json(const CounterexampleReport& report) {
  nlohmann::ordered_json j;
  j["clause"] = clause_name(report.clause);
  j["skeletonsChecked"] = report.skeletons_checked;
  j["skeletonsExcluded"] = report.skeletons_excluded;
  j["sampled"] = report.sampled;
  auto found = nlohmann::ordered_json::array();
  for (const auto& c : report.found) {
    found.push_back({{"skeleton", space_json(c.skeleton)},
                     {"space", space_json(c.space)},
                     {"verdict", verdict_json(c.verdict)},
                     {"labelingsChecked", c.labelings_checked},
                     {"labelingsFailing", c.labelings_failing}});
  }
  j["counterexamples"] = std::move(found);
  return j;
}

}  // namespace fls
