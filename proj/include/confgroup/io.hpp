#pragma once

#include <confgroup/configuration.hpp>
#include <confgroup/golden.hpp>
#include <confgroup/search.hpp>

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace confgroup {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolkitVersion = "0.1.0";

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail_input("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail_input("'" + path + "' is not valid JSON: " + e.what());
  }
}

namespace detail {

inline const Json& require(const Json& doc, const char* key, const std::string& what) {
  if (!doc.is_object() || !doc.contains(key)) fail_input(what + " is missing \"" + key + "\"");
  return doc.at(key);
}

inline std::size_t require_count(const Json& doc, const char* key, const std::string& what) {
  const auto& v = require(doc, key, what);
  if (!v.is_number_integer() || v.get<long long>() < 0) fail_input(what + ": \"" + key + "\" must be a nonnegative integer");
  return v.get<std::size_t>();
}

inline std::string as_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  fail_input("expected an element name or index, got " + v.dump());
}

/// Element of a finite table named by string, or by 0-based index.
inline ElementIndex table_element(const FiniteTable& t, const Json& v) {
  if (v.is_number_integer()) {
    auto i = v.get<long long>();
    if (i < 0 || static_cast<std::size_t>(i) >= t.size()) fail_input("element index " + std::to_string(i) + " out of range");
    return static_cast<ElementIndex>(i);
  }
  if (v.is_string()) return t.index_of(v.get<std::string>());
  fail_input("expected an element name or index, got " + v.dump());
}

}  // namespace detail

/**
 * Group description:
 *   {"kind": "finite-table", "elements": [...], "table": [[...]], "identity"?: name}
 *   {"kind": "permutation", "degree": d, "generators": ["(1,2)", ...]}
 *   {"kind": "free" | "free-abelian", "rank": n}
 *   {"kind": "product-zn-f", "rank": n, "finite": {group description}}
 *   {"kind": "dihedral-infinite"}
 * An optional "label" names the group in reports.
 */
inline Group group_from_json(const Json& doc) {
  const std::string what = "group description";
  const std::string kind = detail::require(doc, "kind", what).get<std::string>();
  auto label = [&](std::string fallback) { return doc.contains("label") ? doc.at("label").get<std::string>() : fallback; };
  if (kind == "finite-table") {
    const auto& elements = detail::require(doc, "elements", what);
    const auto& rows = detail::require(doc, "table", what);
    if (!elements.is_array() || !rows.is_array()) fail_input("invalid multiplication table: elements and table must be arrays");
    std::vector<std::string> names;
    for (const auto& e : elements) names.push_back(detail::as_text(e));
    const std::size_t n = names.size();
    if (rows.size() != n) fail_input("invalid multiplication table: expected " + std::to_string(n) + " rows");
    std::map<std::string, ElementIndex> by_name;
    for (std::size_t i = 0; i < n; ++i) by_name.emplace(names[i], static_cast<ElementIndex>(i));
    auto entry = [&](const Json& v) -> ElementIndex {
      if (v.is_number_integer()) {
        auto i = v.get<long long>();
        if (i < 0 || static_cast<std::size_t>(i) >= n) fail_input("invalid multiplication table: entry " + v.dump() + " out of range");
        return static_cast<ElementIndex>(i);
      }
      if (!v.is_string() || !by_name.count(v.get<std::string>())) fail_input("invalid multiplication table: unknown entry " + v.dump());
      return by_name.at(v.get<std::string>());
    };
    std::vector<ElementIndex> table;
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != n) fail_input("invalid multiplication table: every row needs " + std::to_string(n) + " entries");
      for (const auto& v : row) table.push_back(entry(v));
    }
    if (doc.contains("identity")) {
      auto id = entry(doc.at("identity"));
      return Group::from_table(FiniteTable(std::move(names), std::move(table), id), label("finite"));
    }
    const auto copy = table;
    return Group::from_table(FiniteTable::from_rule(std::move(names), [&](ElementIndex a, ElementIndex b) {
                               return copy[std::size_t{a} * n + b];
                             }),
                             label("finite"));
  }
  if (kind == "permutation") {
    const std::size_t degree = detail::require_count(doc, "degree", what);
    std::vector<Permutation> gens;
    for (const auto& g : detail::require(doc, "generators", what)) {
      if (g.is_string()) {
        gens.push_back(parse_cycles(g.get<std::string>(), degree));
      } else {
        // image list, 1-based
        Permutation p;
        for (const auto& v : g) p.push_back(v.get<std::uint32_t>() - 1);
        gens.push_back(std::move(p));
      }
    }
    return Group::from_permutations(degree, gens, label("permutation"));
  }
  if (kind == "free") return Group::free(detail::require_count(doc, "rank", what));
  if (kind == "free-abelian") return Group::free_abelian(detail::require_count(doc, "rank", what));
  if (kind == "product-zn-f") {
    return Group::product(detail::require_count(doc, "rank", what), group_from_json(detail::require(doc, "finite", what)));
  }
  if (kind == "dihedral-infinite") return Group::infinite_dihedral();
  fail_input("unknown group kind '" + kind + "'");
}

inline Group load_group(const std::string& path) { return group_from_json(read_json_file(path)); }

/**
 * Partition description:
 *   {"kind": "explicit-finite", "blocks": [[names or indices], ...]}
 *   {"kind": "builtin-symbolic", "name": "free-first-letter" | "dinf-five-block" | "znf-sign-atoms" | "trivial"}
 *   {"kind": "ball-explicit", "radius": r, "assignment": [[element, label], ...], "default"?: label}
 */
inline Partition partition_from_json(const Json& doc, const Group& group) {
  const std::string what = "partition description";
  const std::string kind = detail::require(doc, "kind", what).get<std::string>();
  if (kind == "explicit-finite") {
    if (!group.is_finite()) fail_input("explicit-finite partitions need a finite group");
    std::vector<std::vector<ElementIndex>> blocks;
    for (const auto& b : detail::require(doc, "blocks", what)) {
      std::vector<ElementIndex> block;
      for (const auto& v : b) block.push_back(detail::table_element(group.table(), v));
      blocks.push_back(std::move(block));
    }
    return Partition::from_blocks(group, blocks);
  }
  if (kind == "builtin-symbolic") {
    const std::string name = detail::require(doc, "name", what).get<std::string>();
    if (name == "trivial") return Partition::trivial(group);
    if (name == "free-first-letter") {
      if (group.kind() != Group::Kind::free) fail_input("free-first-letter needs a free group");
      return free_group_partition(group.rank()).part;
    }
    if (name == "dinf-five-block") {
      if (group.kind() != Group::Kind::dihedral_infinite) fail_input("dinf-five-block needs the infinite dihedral group");
      return dinf_partition().part;
    }
    if (name == "znf-sign-atoms") {
      if (group.kind() != Group::Kind::product_zn_f) fail_input("znf-sign-atoms needs a product-zn-f group");
      return znf_partition(group);
    }
    fail_input("unknown builtin partition '" + name + "'");
  }
  if (kind == "ball-explicit") {
    const std::size_t radius = detail::require_count(doc, "radius", what);
    std::vector<std::pair<GroupElement, Label>> assignment;
    for (const auto& item : detail::require(doc, "assignment", what)) {
      if (!item.is_array() || item.size() != 2) fail_input("ball-explicit assignment entries are [element, label]");
      assignment.emplace_back(group.parse(detail::as_text(item[0])), item[1].get<Label>());
    }
    std::optional<Label> fallback;
    if (doc.contains("default")) fallback = doc.at("default").get<Label>();
    return Partition::ball_explicit(group, radius, assignment, fallback);
  }
  fail_input("unknown partition kind '" + kind + "'");
}

inline Partition load_partition(const std::string& path, const Group& group) {
  return partition_from_json(read_json_file(path), group);
}

// ---- documents

inline Json configurations_json(const std::vector<Configuration>& cs) {
  Json out = Json::array();
  for (const auto& c : cs) out.push_back(c);
  return out;
}

inline Json exactness_json(Json& doc, const Exactness& ex) {
  if (ex.kind == Exactness::Kind::exact) {
    doc["exactness"] = "exact";
    doc["radius"] = nullptr;
    doc["saturated"] = nullptr;
  } else {
    doc["exactness"] = "ball-observed";
    doc["radius"] = ex.radius;
    doc["stable_since"] = ex.stable_since;
    doc["window"] = ex.window;
    doc["saturated"] = ex.saturated;
  }
  return doc;
}

inline Json partition_summary(const Partition& p) {
  Json out;
  switch (p.kind()) {
    case Partition::Kind::explicit_finite: {
      out["kind"] = "explicit-finite";
      Json blocks = Json::array();
      for (const auto& b : p.blocks()) {
        Json names = Json::array();
        for (auto x : b) names.push_back(p.group().table().name(x));
        blocks.push_back(std::move(names));
      }
      out["blocks"] = std::move(blocks);
      break;
    }
    case Partition::Kind::builtin_symbolic:
      out["kind"] = "builtin-symbolic";
      out["name"] = p.name();
      break;
    case Partition::Kind::ball_explicit:
      out["kind"] = "ball-explicit";
      out["radius"] = p.domain_radius();
      break;
  }
  out["m"] = p.block_count();
  return out;
}

inline Json config_set_json(const ConfigurationSet& cs, const OrderedGeneratingSet& gens, const Partition& part) {
  Json doc;
  doc["command"] = "con";
  doc["group"] = gens.group().label();
  doc["generators"] = gens.names();
  doc["partition"] = partition_summary(part);
  doc["n"] = cs.n();
  doc["m"] = cs.m();
  exactness_json(doc, cs.exactness());
  doc["configurations"] = configurations_json(cs.configurations());
  doc["toolkit_version"] = kToolkitVersion;
  return doc;
}

inline Json finite_pair_json(const Group& group, const FinitePair& p) {
  Json out;
  Json gens = Json::array();
  for (auto g : p.gens) gens.push_back(group.table().name(g));
  out["generators"] = std::move(gens);
  std::size_t m = 0;
  for (auto l : p.labels) m = std::max<std::size_t>(m, l);
  Json blocks = Json::array();
  for (Label l = 1; l <= m; ++l) {
    Json block = Json::array();
    for (ElementIndex x = 0; x < p.labels.size(); ++x)
      if (p.labels[x] == l) block.push_back(group.table().name(x));
    blocks.push_back(std::move(block));
  }
  out["blocks"] = std::move(blocks);
  return out;
}

inline FinitePair finite_pair_from_json(const Group& group, const Json& doc) {
  FinitePair p;
  for (const auto& g : detail::require(doc, "generators", "pair")) p.gens.push_back(detail::table_element(group.table(), g));
  p.labels.assign(group.order(), 0);
  Label l = 0;
  for (const auto& block : detail::require(doc, "blocks", "pair")) {
    ++l;
    for (const auto& v : block) {
      auto x = detail::table_element(group.table(), v);
      if (p.labels[x] != 0) fail_input("certificate blocks overlap");
      p.labels[x] = l;
    }
  }
  for (auto x : p.labels)
    if (x == 0) fail_input("certificate blocks do not cover the group");
  return p;
}

inline const char* to_string(Certificate::Verdict v) {
  return v == Certificate::Verdict::contained ? "contained-within-bounds" : "not-contained";
}

inline Json certificate_json(const Certificate& cert, const Group& g, const Group& h) {
  Json doc;
  doc["command"] = cert.mode == Certificate::Mode::configuration ? "contain" : "strong";
  doc["G"] = g.label();
  doc["H"] = h.label();
  doc["verdict"] = to_string(cert.verdict);
  doc["bounds"] = {{"max_n", cert.max_n}, {"max_m", cert.max_m}};
  doc["pairs_examined"] = cert.pairs_examined;
  if (cert.witness) {
    Json w = finite_pair_json(g, *cert.witness);
    w["configurations"] = configurations_json(cert.witness_configurations);
    doc["witness"] = std::move(w);
  } else {
    doc["witness"] = nullptr;
  }
  Json matches = Json::array();
  for (const auto& m : cert.matches) {
    matches.push_back({{"source", finite_pair_json(g, m.source)}, {"image", finite_pair_json(h, m.image)}});
  }
  doc["matches"] = std::move(matches);
  doc["toolkit_version"] = kToolkitVersion;
  return doc;
}

inline Certificate certificate_from_json(const Json& doc, const Group& g, const Group& h) {
  Certificate cert;
  const std::string command = detail::require(doc, "command", "certificate").get<std::string>();
  if (command != "contain" && command != "strong") fail_input("document is not a containment certificate");
  cert.mode = command == "contain" ? Certificate::Mode::configuration : Certificate::Mode::strong;
  const std::string verdict = detail::require(doc, "verdict", "certificate").get<std::string>();
  if (verdict == "not-contained") {
    cert.verdict = Certificate::Verdict::not_contained;
  } else if (verdict == "contained-within-bounds") {
    cert.verdict = Certificate::Verdict::contained;
  } else {
    fail_input("unknown verdict '" + verdict + "'");
  }
  const auto& bounds = detail::require(doc, "bounds", "certificate");
  cert.max_n = detail::require_count(bounds, "max_n", "bounds");
  cert.max_m = detail::require_count(bounds, "max_m", "bounds");
  if (doc.contains("pairs_examined")) cert.pairs_examined = detail::require_count(doc, "pairs_examined", "certificate");
  if (doc.contains("witness") && !doc.at("witness").is_null()) {
    cert.witness = finite_pair_from_json(g, doc.at("witness"));
    for (const auto& c : detail::require(doc.at("witness"), "configurations", "witness"))
      cert.witness_configurations.push_back(c.get<Configuration>());
  }
  for (const auto& m : detail::require(doc, "matches", "certificate")) {
    cert.matches.push_back({finite_pair_from_json(g, detail::require(m, "source", "match")),
                            finite_pair_from_json(h, detail::require(m, "image", "match"))});
  }
  return cert;
}

inline Json golden_report_json(const GoldenReport& r) {
  Json doc;
  doc["check"] = r.check;
  doc["family"] = r.family;
  Json params = Json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  doc["params"] = std::move(params);
  doc["bounds"] = {{"max_len", r.max_len}, {"radius", r.radius}};
  doc["checked"] = r.checked;
  doc["violation_count"] = r.violation_count;
  doc["passed"] = r.passed();
  Json list = Json::array();
  for (const auto& v : r.violations) {
    list.push_back({{"relation", v.check},
                    {"pair", v.pair},
                    {"value", v.value},
                    {"rival_value", v.rival},
                    {"element", v.element},
                    {"image", v.image}});
  }
  doc["violations"] = std::move(list);
  return doc;
}

inline Json error_json(const Error& e) {
  Json doc;
  doc["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
  doc["toolkit_version"] = kToolkitVersion;
  return doc;
}

}  // namespace confgroup
