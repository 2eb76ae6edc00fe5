#pragma once

#include <confgroup/corpus.hpp>
#include <confgroup/derivation_form.hpp>
#include <confgroup/derived.hpp>
#include <confgroup/golden.hpp>
#include <confgroup/io.hpp>
#include <confgroup/isomorphism.hpp>
#include <confgroup/law.hpp>
#include <confgroup/localhom.hpp>
#include <confgroup/search.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace confgroup::cli {

/// Flags shared by every subcommand.
struct GlobalOptions {
  unsigned threads = 1;
  std::uint64_t seed = 1;
  double budget = 5e8;
};

enum ExitCode : int { exit_ok = 0, exit_input = 1, exit_budget = 2, exit_assert = 3 };

struct CommandResult {
  Json doc;
  /// Positive or negative verdict, for --assert; empty when the command has none.
  std::optional<bool> verdict;
  std::vector<std::string> inputs;  // files read
  int status = exit_ok;
};

// ---- argument bundles

struct ConArgs {
  std::string group;
  std::string partition;
  std::vector<std::string> gens;
  std::optional<std::size_t> radius;
  std::size_t window = 2;
};

struct ContainArgs {
  std::string group_g;
  std::string group_h;
  std::size_t max_n = 1;
  std::size_t max_m = 2;
  std::string verify;  // certificate file to re-check instead of searching
};

struct StrongArgs {
  std::string group_g;
  std::string group_h;
  std::vector<std::string> gens_g;
  std::vector<std::string> gens_h;  // empty: image of gens_g under the first isomorphism
  std::size_t max_m = 2;
  std::string verify;
};

struct GoldenArgs {
  std::string family;
  std::size_t rank = 2;
  std::string finite;  // znf: group file of F; default Z2
  std::vector<std::string> checks;
  std::size_t max_len = 6;
  std::size_t radius = 6;
  std::size_t window = 2;
  bool corrupt = false;  // negative control: swap the first two non-identity labels
  std::string rival_group;
  std::string rival_partition;
  std::vector<std::string> rival_gens;
  Label rival_identity_label = 1;
};

struct WordsArgs {
  std::string op;
  std::vector<std::string> pairs;
  std::string group;
  std::vector<std::string> gens;
  std::optional<std::size_t> n;
};

struct DerivedArgs {
  std::string op;
  std::size_t n = 2;
  std::size_t k = 1;
  std::size_t budget = 10;
  std::size_t start = 0;
  std::string group;
  std::vector<std::string> gens;
};

struct LawArgs {
  std::string group;
  std::string law = "abelian";
  std::size_t vars = 0;  // for a custom word; 0 infers from the word
  std::string mode = "all";
  std::size_t radius = 3;
  std::size_t samples = 1000;
};

struct LocalhomArgs {
  std::string op;
  std::string group_g;
  std::string group_h;
  std::vector<std::string> gens_g;
  std::vector<std::string> gens_h;
  std::size_t max_len = 2;
  std::size_t n = 1;
  std::size_t n0 = 1;
  std::string base = "all";
  std::string p1;
  std::string p2;
};

namespace detail {

inline OrderedGeneratingSet generators_or_standard(const Group& g, const std::vector<std::string>& names) {
  return names.empty() ? OrderedGeneratingSet::standard(g) : OrderedGeneratingSet::parse(g, names);
}

inline std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

inline std::size_t max_index(const std::vector<std::string>& texts) {
  std::size_t n = 1;
  for (const auto& t : texts) {
    std::istringstream in(t);
    std::string token;
    while (in >> token) {
      if (token.size() > 1) n = std::max<std::size_t>(n, std::stoul(token.substr(1)));
    }
  }
  return n;
}

inline Json pair_json(const RepresentativePair& p) {
  return {{"pair", format_pair(p)}, {"J", p.J()}, {"rho", p.rho()}};
}

inline Json names_json(const Group& g, const std::vector<GroupElement>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(g.format(x));
  return out;
}

}  // namespace detail

// ---- con

inline CommandResult run_con(const ConArgs& a, const GlobalOptions&) {
  CommandResult r;
  r.inputs = {a.group, a.partition};
  const Group g = load_group(a.group);
  const Partition part = load_partition(a.partition, g);
  const auto gens = detail::generators_or_standard(g, a.gens);
  if (g.is_finite()) {
    if (a.radius) fail_input("--radius applies to infinite engines only");
    r.doc = config_set_json(configuration_set_finite(gens, part), gens, part);
  } else {
    if (!a.radius) fail_input("infinite engine '" + g.label() + "' needs --radius");
    r.doc = config_set_json(configuration_set_ball(gens, part, *a.radius, a.window), gens, part);
  }
  return r;
}

// ---- contain / equiv / strong

inline Json check_json(const CertificateCheck& c) {
  Json doc;
  doc["command"] = "verify";
  doc["valid"] = c.valid;
  doc["problems"] = c.problems;
  doc["toolkit_version"] = kToolkitVersion;
  return doc;
}

inline CommandResult run_contain(const ContainArgs& a, const GlobalOptions& o) {
  CommandResult r;
  r.inputs = {a.group_g, a.group_h};
  const Group g = load_group(a.group_g);
  const Group h = load_group(a.group_h);
  if (!g.is_finite() || !h.is_finite()) fail_input("contain needs finite groups");
  if (!a.verify.empty()) {
    r.inputs.push_back(a.verify);
    auto check = verify_certificate(certificate_from_json(read_json_file(a.verify), g, h), g, h);
    r.doc = check_json(check);
    r.verdict = check.valid;
    return r;
  }
  auto cert = configuration_contained(g, h, a.max_n, a.max_m, SearchOptions{o.threads, o.budget});
  r.doc = certificate_json(cert, g, h);
  r.verdict = cert.verdict == Certificate::Verdict::contained;
  return r;
}

inline CommandResult run_equiv(const ContainArgs& a, const GlobalOptions& o) {
  CommandResult r;
  r.inputs = {a.group_g, a.group_h};
  const Group g = load_group(a.group_g);
  const Group h = load_group(a.group_h);
  if (!g.is_finite() || !h.is_finite()) fail_input("equiv needs finite groups");
  const SearchOptions opts{o.threads, o.budget};
  auto forward = configuration_contained(g, h, a.max_n, a.max_m, opts);
  auto backward = configuration_contained(h, g, a.max_n, a.max_m, opts);
  const bool equivalent = forward.verdict == Certificate::Verdict::contained &&
                          backward.verdict == Certificate::Verdict::contained;
  r.doc["command"] = "equiv";
  r.doc["G"] = g.label();
  r.doc["H"] = h.label();
  r.doc["verdict"] = equivalent ? "equivalent-within-bounds" : "not-equivalent";
  r.doc["bounds"] = {{"max_n", a.max_n}, {"max_m", a.max_m}};
  r.doc["forward"] = certificate_json(forward, g, h);
  r.doc["backward"] = certificate_json(backward, h, g);
  r.doc["toolkit_version"] = kToolkitVersion;
  r.verdict = equivalent;
  return r;
}

inline CommandResult run_strong(const StrongArgs& a, const GlobalOptions& o) {
  CommandResult r;
  r.inputs = {a.group_g, a.group_h};
  const Group g = load_group(a.group_g);
  const Group h = load_group(a.group_h);
  if (!g.is_finite() || !h.is_finite()) fail_input("strong needs finite groups");
  if (!a.verify.empty()) {
    r.inputs.push_back(a.verify);
    auto check = verify_certificate(certificate_from_json(read_json_file(a.verify), g, h), g, h);
    r.doc = check_json(check);
    r.verdict = check.valid;
    return r;
  }
  const auto gens_g = detail::generators_or_standard(g, a.gens_g);
  std::string source = "given";
  std::vector<GroupElement> image;
  if (a.gens_h.empty()) {
    auto iso = find_isomorphism(g, h);
    if (!iso) fail_input("no --gens-h given and the groups are not isomorphic");
    for (auto x : gens_g.indices()) image.push_back(h.element((*iso)[x]));
    source = "isomorphism";
  } else {
    for (const auto& s : a.gens_h) image.push_back(h.parse(s));
  }
  const OrderedGeneratingSet gens_h(h, std::move(image));
  auto cert = strong_contained_finite(gens_g, gens_h, a.max_m, SearchOptions{o.threads, o.budget});
  r.doc = certificate_json(cert, g, h);
  r.doc["generators_h_source"] = source;
  r.verdict = cert.verdict == Certificate::Verdict::contained;
  return r;
}

// ---- golden

inline Json observed_json(const GoldenCandidate& c, std::size_t radius, std::size_t window) {
  auto cs = configuration_set_ball(c.gens, c.part, radius, window);
  Configuration at_identity = configuration_of(c.group().identity(), c.gens, c.part);
  Json doc;
  doc["check"] = "configurations";
  doc["family"] = family_name(c.family);
  doc["n"] = cs.n();
  doc["m"] = cs.m();
  exactness_json(doc, cs.exactness());
  doc["identity_configuration"] = at_identity;
  doc["contains_identity_configuration"] = cs.contains(at_identity);
  doc["configurations"] = configurations_json(cs.configurations());
  doc["passed"] = cs.exactness().saturated && cs.contains(at_identity);
  return doc;
}

inline CommandResult run_golden(const GoldenArgs& a, const GlobalOptions&) {
  CommandResult r;
  GoldenCandidate c = [&] {
    if (a.family == "free" || a.family == "free-first-letter") return free_group_partition(a.rank);
    if (a.family == "dinf" || a.family == "dinf-five") return dinf_partition();
    if (a.family == "znf" || a.family == "znf-sign") {
      Group f = corpus::cyclic(2);
      if (!a.finite.empty()) {
        r.inputs.push_back(a.finite);
        f = load_group(a.finite);
      }
      if (!f.is_finite()) fail_input("znf family needs a finite group F");
      return znf_sigma_candidate(a.rank, f);
    }
    fail_input("unknown golden family '" + a.family + "' (free, dinf, znf)");
  }();
  if (a.corrupt) {
    std::vector<Label> swap(c.part.block_count());
    for (std::size_t i = 0; i < swap.size(); ++i) swap[i] = static_cast<Label>(i + 1);
    if (swap.size() < 3) fail_input("cannot corrupt a partition with fewer than three blocks");
    std::swap(swap[1], swap[2]);
    c.part = c.part.relabeled(swap);
    c.params.emplace_back("corrupted", "swap-2-3");
  }
  std::vector<std::string> checks = a.checks;
  if (checks.empty()) {
    if (c.family == GoldenCandidate::Family::free_first_letter) checks = {"translation", "absorption", "coverage", "implication"};
    if (c.family == GoldenCandidate::Family::dinf_five) checks = {"coverage", "implication", "configurations"};
    if (c.family == GoldenCandidate::Family::znf_sign) checks = {"coverage", "implication"};
  }
  Json reports = Json::array();
  bool passed = true;
  for (const auto& check : checks) {
    Json rep;
    if (check == "translation") {
      rep = golden_report_json(verify_translation_relations(c, a.radius));
    } else if (check == "absorption") {
      if (c.family != GoldenCandidate::Family::free_first_letter) fail_input("absorption applies to the free family");
      rep = golden_report_json(free_block_absorption_check(c.group().rank(), a.max_len));
    } else if (check == "coverage") {
      rep = golden_report_json(partition_coverage_check(c, a.radius));
    } else if (check == "implication") {
      if (a.rival_partition.empty()) {
        rep = golden_report_json(verify_golden_implication(c, c.gens, c.part, a.max_len, a.radius));
        rep["rival"] = "self";
      } else {
        Group rival = c.group();
        if (!a.rival_group.empty()) {
          r.inputs.push_back(a.rival_group);
          rival = load_group(a.rival_group);
        }
        r.inputs.push_back(a.rival_partition);
        auto rival_part = load_partition(a.rival_partition, rival);
        auto rival_gens = detail::generators_or_standard(rival, a.rival_gens);
        GoldenCandidate shifted = c;
        shifted.identity_label = a.rival_identity_label;
        rep = golden_report_json(verify_golden_implication(shifted, rival_gens, rival_part, a.max_len, a.radius));
        rep["rival"] = a.rival_partition;
      }
    } else if (check == "configurations") {
      rep = observed_json(c, a.radius, a.window);
    } else {
      fail_input("unknown golden check '" + check + "'");
    }
    passed = passed && rep["passed"].get<bool>();
    reports.push_back(std::move(rep));
  }
  r.doc["command"] = "golden";
  r.doc["family"] = family_name(c.family);
  Json params = Json::object();
  for (const auto& [k, v] : c.params) params[k] = v;
  r.doc["params"] = std::move(params);
  r.doc["generators"] = c.gens.names();
  r.doc["blocks"] = c.part.block_count();
  r.doc["bounds"] = {{"max_len", a.max_len}, {"radius", a.radius}, {"window", a.window}};
  r.doc["reports"] = std::move(reports);
  r.doc["passed"] = passed;
  r.doc["toolkit_version"] = kToolkitVersion;
  r.verdict = passed;
  return r;
}

// ---- words

inline CommandResult run_words(const WordsArgs& a, const GlobalOptions&) {
  CommandResult r;
  std::optional<Group> group;
  std::optional<OrderedGeneratingSet> gens;
  if (!a.group.empty()) {
    r.inputs.push_back(a.group);
    group = load_group(a.group);
    gens = detail::generators_or_standard(*group, a.gens);
  }
  const std::size_t n = a.n ? *a.n : gens ? gens->size() : detail::max_index(a.pairs);
  std::vector<RepresentativePair> pairs;
  for (const auto& t : a.pairs) pairs.push_back(parse_pair(t, n));
  auto need = [&](std::size_t k) {
    if (pairs.size() != k) fail_input("words " + a.op + " takes " + std::to_string(k) + " pair(s)");
  };
  r.doc["command"] = "words";
  r.doc["op"] = a.op;
  r.doc["n"] = n;
  Json in = Json::array();
  for (const auto& p : pairs) in.push_back(detail::pair_json(p));
  r.doc["inputs"] = std::move(in);
  std::optional<RepresentativePair> result;
  if (a.op == "eval") {
    need(1);
    if (!gens) fail_input("words eval needs --group");
    result = pairs[0];
  } else if (a.op == "concat") {
    need(2);
    result = concat(pairs[0], pairs[1]);
  } else if (a.op == "inverse") {
    need(1);
    result = inverse_pair(pairs[0]);
  } else if (a.op == "commutator") {
    need(2);
    result = commutator_pair(pairs[0], pairs[1]);
  } else if (a.op == "reduce") {
    need(1);
    result = free_reduce(pairs[0]);
  } else if (a.op == "is-reduced") {
    need(1);
    r.doc["value"] = is_reduced(pairs[0]);
  } else if (a.op == "first-derivation") {
    need(1);
    r.doc["value"] = is_first_derivation_form(pairs[0]);
  } else {
    fail_input("unknown words op '" + a.op + "' (eval, concat, inverse, commutator, reduce, is-reduced, first-derivation)");
  }
  if (result) {
    if (a.op != "eval") r.doc["result"] = detail::pair_json(*result);
    if (gens) {
      r.doc["group"] = group->label();
      r.doc["generators"] = gens->names();
      r.doc["value"] = group->format(evaluate(*result, *gens));
    }
  }
  r.doc["toolkit_version"] = kToolkitVersion;
  return r;
}

// ---- derived

inline CommandResult run_derived(const DerivedArgs& a, const GlobalOptions&) {
  CommandResult r;
  r.doc["command"] = "derived";
  r.doc["op"] = a.op;
  std::optional<Group> group;
  if (!a.group.empty()) {
    r.inputs.push_back(a.group);
    group = load_group(a.group);
  }
  if (a.op == "gen") {
    if (a.n == 0 || a.k == 0 || a.budget == 0) fail_input("derived gen needs n, k, budget >= 1");
    auto pairs = derivation_form_pairs(a.n, a.k, a.budget, a.start);
    std::optional<OrderedGeneratingSet> gens;
    std::optional<DerivedSeriesReport> series;
    if (group) {
      gens = detail::generators_or_standard(*group, a.gens);
      if (gens->size() != a.n) fail_input("generator count does not match n");
      if (group->is_finite()) series = derived_series(*group, a.k);
    }
    r.doc["n"] = a.n;
    r.doc["k"] = a.k;
    r.doc["budget"] = a.budget;
    r.doc["start"] = a.start;
    Json list = Json::array();
    bool all_members = true;
    for (const auto& p : pairs) {
      Json item = detail::pair_json(p);
      item["length"] = p.size();
      if (a.k == 1) item["first_derivation_form"] = is_first_derivation_form(p);
      if (gens) {
        auto v = evaluate(p, *gens);
        item["value"] = group->format(v);
        if (series) {
          const bool in = series->contains(a.k, group->index(v));
          item["in_derived_level"] = in;
          all_members = all_members && in;
        }
      }
      list.push_back(std::move(item));
    }
    r.doc["count"] = pairs.size();
    r.doc["pairs"] = std::move(list);
    if (series) {
      r.doc["all_in_derived_level"] = all_members;
      r.verdict = all_members;
    }
  } else if (a.op == "series") {
    if (!group) fail_input("derived series needs --group");
    auto series = derived_series(*group, a.k);
    r.doc["group"] = group->label();
    r.doc["k"] = a.k;
    r.doc["cardinalities"] = series.cardinalities();
    Json levels = Json::array();
    for (std::size_t j = 0; j < series.levels.size(); ++j) {
      Json names = Json::array();
      for (auto x : series.levels[j]) names.push_back(group->table().name(x));
      levels.push_back({{"level", j}, {"order", series.levels[j].size()}, {"elements", std::move(names)}});
    }
    r.doc["levels"] = std::move(levels);
  } else if (a.op == "inn") {
    if (!group) fail_input("derived inn needs --group");
    r.doc["group"] = group->label();
    r.doc["order"] = group->order();
    r.doc["center_order"] = center(*group).size();
    r.doc["inn_order"] = inn_order(*group);
  } else {
    fail_input("unknown derived op '" + a.op + "' (gen, series, inn)");
  }
  r.doc["toolkit_version"] = kToolkitVersion;
  return r;
}

// ---- law

inline GroupLaw parse_law(const std::string& text, std::size_t vars) {
  if (text == "abelian") return GroupLaw::abelian();
  if (text == "metabelian") return GroupLaw::metabelian();
  if (text.rfind("exponent:", 0) == 0) {
    const auto k = std::stoul(text.substr(9));
    if (k == 0) fail_input("exponent law needs k >= 1");
    return GroupLaw::exponent(k);
  }
  return GroupLaw::parse(text, vars ? vars : detail::max_index({text}));
}

inline CommandResult run_law(const LawArgs& a, const GlobalOptions& o) {
  CommandResult r;
  r.inputs = {a.group};
  const Group g = load_group(a.group);
  const GroupLaw law = parse_law(a.law, a.vars);
  LawDomain domain;
  if (a.mode == "all") {
    domain = LawDomain::all();
  } else if (a.mode == "ball") {
    domain = LawDomain::ball(a.radius);
  } else if (a.mode == "sample") {
    domain = LawDomain::sample(a.samples, o.seed, a.radius);
  } else {
    fail_input("unknown law mode '" + a.mode + "' (all, ball, sample)");
  }
  auto res = check_group_law(g, law, domain);
  r.doc["command"] = "law";
  r.doc["group"] = g.label();
  r.doc["law"] = law.name;
  r.doc["word"] = format_pair(law.word);
  r.doc["variables"] = law.variables();
  Json d = {{"mode", to_string(domain.mode)}};
  if (domain.mode != LawDomain::Mode::all) d["radius"] = domain.radius;
  if (domain.mode == LawDomain::Mode::sample) {
    d["samples"] = domain.samples;
    d["seed"] = domain.seed;
  }
  r.doc["domain"] = std::move(d);
  r.doc["holds"] = res.holds;
  r.doc["tuples_checked"] = res.tuples_checked;
  r.doc["witness"] = res.witness ? detail::names_json(g, *res.witness) : Json(nullptr);
  r.doc["value"] = res.value ? Json(g.format(*res.value)) : Json(nullptr);
  r.doc["toolkit_version"] = kToolkitVersion;
  r.verdict = res.holds;
  return r;
}

// ---- localhom

inline CommandResult run_localhom(const LocalhomArgs& a, const GlobalOptions& o) {
  CommandResult r;
  r.doc["command"] = "localhom";
  r.doc["op"] = a.op;
  if (a.op == "pairsets") {
    auto sets = build_pair_sets(a.n, a.n0, o.budget);
    r.doc["n"] = a.n;
    r.doc["n0"] = a.n0;
    r.doc["sizes"] = {{"S0", sets.s0_size()}, {"S1", sets.s1_size()}, {"S2", sets.s2_size()}};
    r.doc["max_lengths"] = {{"S0", 3 * a.n0}, {"S1", 2 * a.n0}, {"S2", a.n0}};
    Json s2 = Json::array();
    for (const auto& p : sets.s2()) s2.push_back(format_pair(p));
    r.doc["S2"] = std::move(s2);
    r.doc["toolkit_version"] = kToolkitVersion;
    return r;
  }
  r.inputs.push_back(a.group_g);
  const Group g = load_group(a.group_g);
  const auto gens_g = detail::generators_or_standard(g, a.gens_g);
  r.doc["G"] = g.label();
  r.doc["generators_g"] = gens_g.names();
  if (a.op == "separate") {
    auto p1 = parse_pair(a.p1, gens_g.size());
    auto p2 = parse_pair(a.p2, gens_g.size());
    auto w = inner_separation_witness(gens_g, p1, p2, a.max_len);
    r.doc["p1"] = format_pair(p1);
    r.doc["p2"] = format_pair(p2);
    r.doc["max_len"] = a.max_len;
    r.doc["separated"] = w.has_value();
    r.doc["witness"] = w ? detail::pair_json(*w) : Json(nullptr);
    r.doc["toolkit_version"] = kToolkitVersion;
    r.verdict = w.has_value();
    return r;
  }
  if (a.group_h.empty()) fail_input("localhom " + a.op + " needs --group-h");
  r.inputs.push_back(a.group_h);
  const Group h = load_group(a.group_h);
  const auto gens_h = detail::generators_or_standard(h, a.gens_h);
  r.doc["H"] = h.label();
  r.doc["generators_h"] = gens_h.names();
  r.doc["max_len"] = a.max_len;
  if (a.op == "epi") {
    auto res = is_bounded_epimorphism(gens_g, gens_h, a.max_len);
    r.doc["holds"] = res.holds;
    r.doc["states"] = res.states;
    r.doc["witness"] = res.witness ? detail::pair_json(*res.witness) : Json(nullptr);
    r.verdict = res.holds;
  } else if (a.op == "tau" || a.op == "check") {
    std::vector<RepresentativePair> pairs;
    for_each_pair(gens_g.size(), a.max_len, false, false, [&](const RepresentativePair& p) {
      pairs.push_back(p);
      return true;
    });
    auto rel = tau_relation(gens_g, gens_h, pairs);
    auto entry_json = [&](std::size_t i) {
      return Json{{"pair", format_pair(rel.pairs[i])},
                  {"g", g.format(rel.entries[i].first)},
                  {"h", h.format(rel.entries[i].second)}};
    };
    if (a.op == "tau") {
      Json entries = Json::array();
      for (std::size_t i = 0; i < rel.entries.size(); ++i) entries.push_back(entry_json(i));
      auto conflict = functional_conflict(rel);
      r.doc["entries"] = std::move(entries);
      r.doc["functional"] = !conflict.has_value();
      r.doc["conflict"] = conflict ? Json::array({entry_json(conflict->first), entry_json(conflict->second)}) : Json(nullptr);
      r.verdict = !conflict.has_value();
    } else {
      std::vector<GroupElement> base;
      if (a.base == "all") {
        base = g.enumerate_all();
      } else if (a.base.rfind("ball:", 0) == 0) {
        base = ball(gens_g, std::stoul(a.base.substr(5)));
      } else {
        for (const auto& s : detail::split(a.base, ';')) base.push_back(g.parse(s));
      }
      auto res = is_local_homomorphism(rel, base);
      r.doc["base"] = detail::names_json(g, base);
      r.doc["verdict"] = to_string(res.verdict);
      r.doc["pairs_checked"] = res.pairs_checked;
      r.doc["conflict"] = res.conflict ? Json::array({entry_json(res.conflict->first), entry_json(res.conflict->second)})
                                       : Json(nullptr);
      r.doc["x"] = res.x ? Json(g.format(*res.x)) : Json(nullptr);
      r.doc["y"] = res.y ? Json(g.format(*res.y)) : Json(nullptr);
      r.doc["missing"] = res.missing ? Json(g.format(*res.missing)) : Json(nullptr);
      r.verdict = res.verdict == LocalHomResult::Verdict::holds;
    }
  } else {
    fail_input("unknown localhom op '" + a.op + "' (pairsets, tau, check, epi, separate)");
  }
  r.doc["toolkit_version"] = kToolkitVersion;
  return r;
}

/// Runs a command, turning library errors into an error document and exit status.
template <typename Args, typename Run>
CommandResult guarded(Run&& run, const Args& args, const GlobalOptions& o) {
  try {
    return run(args, o);
  } catch (const Error& e) {
    CommandResult r;
    r.doc = error_json(e);
    r.status = e.kind() == ErrorKind::budget ? exit_budget : exit_input;
    return r;
  } catch (const nlohmann::json::exception& e) {
    CommandResult r;
    r.doc = error_json(Error(ErrorKind::input, std::string("malformed document: ") + e.what()));
    r.status = exit_input;
    return r;
  } catch (const std::logic_error& e) {
    CommandResult r;
    r.doc = error_json(Error(ErrorKind::input, e.what()));
    r.status = exit_input;
    return r;
  }
}

}  // namespace confgroup::cli
