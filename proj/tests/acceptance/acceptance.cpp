// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <confgroup/commands.hpp>
#include <confgroup/translation.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

using namespace confgroup;
using namespace confgroup::cli;

namespace {

// Runtime limits, seconds.
constexpr double kExactSetsLimit = 1.0;
constexpr double kContainLimit = 300.0;
constexpr double kIsomorphismLimit = 120.0;
constexpr double kGoldenLimit = 10.0;

std::string data(const std::string& rel) { return std::string(CONFGROUP_DATA_DIR) + "/" + rel; }

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit > 0 && secs > limit) out.require(false, "runtime " + std::to_string(secs) + " s over limit");
  if (!out.ok) ++failures;
  std::printf("criterion %2d: %s  %s (%.2f s)%s%s\n", id, out.ok ? "PASS" : "FAIL", title.c_str(), secs,
              out.detail.empty() ? "" : "  -- ", out.detail.c_str());
  std::fflush(stdout);
}

/// Labelled Con of a finite table pair, computed directly from the table.
std::set<Configuration> table_con(const FiniteTable& t, const std::vector<ElementIndex>& gens,
                                  const std::vector<Label>& labels) {
  std::set<Configuration> out;
  for (ElementIndex x = 0; x < t.size(); ++x) {
    Configuration c{labels[x]};
    for (auto g : gens) c.push_back(labels[t.product(g, x)]);
    out.insert(c);
  }
  return out;
}

/// Exhaustive oracle: does H carry any (n-tuple, m-labelling) with Con equal to
/// `target` up to a label bijection? Labellings are all surjections onto 1..m.
bool brute_force_match(const std::vector<Configuration>& target, std::size_t n, std::size_t m, const Group& h) {
  const auto& t = h.table();
  const std::size_t size = t.size();
  std::vector<std::vector<Label>> perms;
  std::vector<Label> perm(m);
  for (std::size_t i = 0; i < m; ++i) perm[i] = static_cast<Label>(i + 1);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  std::set<std::set<Configuration>> targets;
  for (const auto& p : perms) {
    std::set<Configuration> s;
    for (auto c : target) {
      for (auto& l : c) l = p[l - 1];
      s.insert(c);
    }
    targets.insert(s);
  }
  std::vector<ElementIndex> tuple(n, 0);
  while (true) {
    // Generation by closure under left multiplication.
    std::vector<char> seen(size, 0);
    std::vector<ElementIndex> stack{t.identity()};
    seen[t.identity()] = 1;
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      for (auto g : tuple) {
        auto y = t.product(g, x);
        if (!seen[y]) seen[y] = 1, stack.push_back(y);
      }
    }
    if (std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; })) {
      std::vector<Label> labels(size, 1);
      while (true) {
        std::set<Label> used(labels.begin(), labels.end());
        if (used.size() == m && targets.count(table_con(t, tuple, labels))) return true;
        std::size_t pos = size;
        while (pos > 0 && ++labels[pos - 1] > m) labels[--pos] = 1;
        if (pos == 0) break;
      }
    }
    std::size_t pos = n;
    while (pos > 0 && ++tuple[pos - 1] == size) tuple[--pos] = 0;
    if (pos == 0) break;
  }
  return false;
}

Outcome contain_case(const std::string& g_file, const std::string& h_file, std::size_t max_n, std::size_t max_m,
                     unsigned threads, Json* doc_out) {
  Outcome out;
  GlobalOptions o;
  o.threads = threads;
  const auto r = run_contain(ContainArgs{data(g_file), data(h_file), max_n, max_m, ""}, o);
  if (doc_out) *doc_out = r.doc;
  out.require(r.doc["verdict"] == "not-contained", g_file + " vs " + h_file + " verdict " + r.doc["verdict"].dump());
  if (!out.ok) return out;
  const Group g = load_group(data(g_file)), h = load_group(data(h_file));
  const auto cert = certificate_from_json(r.doc, g, h);
  out.require(verify_certificate(cert, g, h).valid, "certificate does not re-verify");
  const std::size_t m = *std::max_element(cert.witness->labels.begin(), cert.witness->labels.end());
  out.require(!brute_force_match(cert.witness_configurations, cert.witness->gens.size(), m, h),
              "exhaustive oracle found a match for the witness");
  return out;
}

std::vector<Configuration> to_vector(const std::set<Configuration>& s) { return {s.begin(), s.end()}; }

}  // namespace

int main() {
  // Matches found in criterion 3, reused by criterion 6.
  struct StrongMatch {
    OrderedGeneratingSet gens_g, gens_h;
    Certificate::Match match;
  };
  std::vector<StrongMatch> strong_matches;

  criterion(1, "exact small configuration sets", kExactSetsLimit, [] {
    Outcome out;
    const GlobalOptions o;
    const auto z2 = run_con(ConArgs{data("groups/z2.json"), data("partitions/z2_singletons.json"), {"1"}, {}, 2}, o);
    const auto z4 = run_con(ConArgs{data("groups/z4.json"), data("partitions/z4_zero_rest.json"), {"1"}, {}, 2}, o);
    // Oracle: (x + 1) mod n over every base point.
    const auto expect2 = to_vector(table_con(corpus::cyclic_table(2), {1}, {1, 2}));
    const auto expect4 = to_vector(table_con(corpus::cyclic_table(4), {1}, {1, 2, 2, 2}));
    out.require(z2.doc["configurations"].get<std::vector<Configuration>>() == expect2, "Z2 set " + z2.doc["configurations"].dump());
    out.require(z4.doc["configurations"].get<std::vector<Configuration>>() == expect4, "Z4 set " + z4.doc["configurations"].dump());
    out.require(expect2 == std::vector<Configuration>{{1, 2}, {2, 1}}, "Z2 oracle");
    out.require(expect4 == std::vector<Configuration>{{1, 2}, {2, 1}, {2, 2}}, "Z4 oracle");
    out.require(z2.doc["exactness"] == "exact" && z4.doc["exactness"] == "exact", "exactness flag");
    return out;
  });

  criterion(2, "Z4 vs Z2xZ2 (n<=2, m<=4) and S3 vs Z6 (n<=2, m<=3) not contained", 2 * kContainLimit, [] {
    Outcome out;
    for (auto [g, h, n, m] : {std::tuple{"groups/z4.json", "groups/v4.json", 2, 4}, std::tuple{"groups/s3_table.json", "groups/z6.json", 2, 3}}) {
      const auto start = std::chrono::steady_clock::now();
      auto r = contain_case(g, h, n, m, 1, nullptr);
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      out.require(r.ok, r.detail);
      out.require(secs <= kContainLimit, std::string(g) + " took too long");
    }
    return out;
  });

  criterion(3, "S3 table vs S3 permutations, strong containment for every partition m<=4", kIsomorphismLimit, [&] {
    Outcome out;
    const Group g = load_group(data("groups/s3_table.json"));
    const Group h = load_group(data("groups/s3_perm.json"));
    const auto iso = find_isomorphism(g, h);
    out.require(iso.has_value(), "no isomorphism found");
    if (!iso) return out;
    std::size_t tuples = 0;
    for (const auto& tuple : generating_tuples(g.table(), 2)) {
      ++tuples;
      std::vector<ElementIndex> image;
      for (auto x : tuple) image.push_back((*iso)[x]);
      const auto gens_g = OrderedGeneratingSet::of_indices(g, tuple);
      const auto gens_h = OrderedGeneratingSet::of_indices(h, image);
      const auto cert = strong_contained_finite(gens_g, gens_h, 4);
      out.require(cert.verdict == Certificate::Verdict::contained, "tuple " + std::to_string(tuples) + " not contained");
      out.require(cert.matches.size() == 1 + 31 + 90 + 65, "wrong number of partitions examined");
      out.require(verify_certificate(cert, g, h).valid, "certificate does not re-verify");
      for (const auto& m : cert.matches) {
        // Oracle: the partition pushed through the isomorphism realises the same labelled set.
        const auto pushed = push_labels(m.source.labels, *iso);
        if (table_con(h.table(), image, pushed) != table_con(g.table(), tuple, m.source.labels)) {
          out.require(false, "pushed partition disagrees");
        }
        strong_matches.push_back({gens_g, gens_h, m});
      }
    }
    out.require(tuples == 18, "expected 18 generating pairs of S3, saw " + std::to_string(tuples));
    return out;
  });

  criterion(4, "word-calculus laws on 1000 seeded pairs per engine", 0, [] {
    Outcome out;
    std::vector<OrderedGeneratingSet> engines{
        OrderedGeneratingSet::standard(corpus::symmetric3_table()),
        OrderedGeneratingSet::standard(corpus::symmetric(4)),
        OrderedGeneratingSet::standard(Group::free(2)),
        OrderedGeneratingSet::standard(Group::free_abelian(3)),
        OrderedGeneratingSet::standard(Group::product(2, corpus::cyclic(3))),
        OrderedGeneratingSet::standard(Group::infinite_dihedral()),
    };
    std::mt19937_64 rng(2024);
    auto random_pair = [&](std::size_t n) {
      std::vector<Letter> letters(rng() % 11);
      for (auto& l : letters) l = Letter{static_cast<std::uint32_t>(rng() % n + 1), rng() % 2 ? 1 : -1};
      return RepresentativePair(n, letters);
    };
    for (const auto& gens : engines) {
      const Group& g = gens.group();
      std::size_t bad = 0;
      for (int i = 0; i < 1000; ++i) {
        const auto p = random_pair(gens.size()), q = random_pair(gens.size());
        if (evaluate(concat(p, q), gens) != g.multiply(evaluate(p, gens), evaluate(q, gens))) ++bad;
        if (evaluate(inverse_pair(p), gens) != g.invert(evaluate(p, gens))) ++bad;
      }
      out.require(bad == 0, g.label() + ": " + std::to_string(bad) + " failures");
    }
    return out;
  });

  criterion(5, "coarsening commutes with Con on 200 seeded instances", 0, [] {
    Outcome out;
    std::mt19937_64 rng(77);
    const auto groups = corpus::small_groups(12);
    std::size_t bad = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const Group& g = groups[rng() % groups.size()];
      auto tuples = generating_tuples(g.table(), 2);
      if (tuples.empty()) tuples = generating_tuples(g.table(), 3);
      const auto& tuple = tuples[rng() % tuples.size()];
      const std::size_t s = 1 + rng() % g.order();
      std::vector<Label> labels(g.order());
      for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = static_cast<Label>(i < s ? i + 1 : rng() % s + 1);
      std::shuffle(labels.begin(), labels.end(), rng);
      const std::size_t r = 1 + rng() % s;
      std::vector<Label> targets(s);
      for (std::size_t i = 0; i < s; ++i) targets[i] = static_cast<Label>(i < r ? i + 1 : rng() % r + 1);
      std::shuffle(targets.begin(), targets.end(), rng);
      const BlockMergeMap map(targets);
      const auto gens = OrderedGeneratingSet::of_indices(g, tuple);
      const auto fine = Partition::from_labels(g, labels);
      const auto lhs = coarsen_config_set(configuration_set_finite(gens, fine), map);
      std::vector<Label> coarse_labels;
      for (auto l : labels) coarse_labels.push_back(targets[l - 1]);
      // Oracle: Con of the coarse labelling straight from the table.
      if (lhs.configurations() != to_vector(table_con(g.table(), tuple, coarse_labels))) ++bad;
      if (!lhs.same_configurations(configuration_set_finite(gens, coarsen(fine, map)))) ++bad;
    }
    out.require(bad == 0, std::to_string(bad) + " mismatches");
    return out;
  });

  criterion(6, "translation implications on every criterion-3 match", 0, [&] {
    Outcome out;
    out.require(!strong_matches.empty(), "no matches from criterion 3");
    std::size_t violations = 0, checked = 0;
    for (const auto& sm : strong_matches) {
      const auto report = check_translation_implications(sm.gens_g, Partition::from_labels(sm.gens_g.group(), sm.match.source.labels),
                                                  sm.gens_h, Partition::from_labels(sm.gens_h.group(), sm.match.image.labels));
      violations += report.violations.size();
      checked += report.checked;
    }
    out.require(violations == 0, std::to_string(violations) + " violations");
    out.detail = out.ok ? std::to_string(checked) + " implications checked" : out.detail;
    return out;
  });

  criterion(7, "golden families: free relations, absorption, D-infinity blocks", kGoldenLimit, [] {
    Outcome out;
    for (std::size_t n : {2u, 3u}) {
      const auto rep = verify_translation_relations(free_group_partition(n), 8);
      out.require(rep.passed() && rep.checked > 0, "free n=" + std::to_string(n) + " translation relations");
    }
    const auto absorb = free_block_absorption_check(2, 6);
    out.require(absorb.passed() && absorb.checked == 1456, "absorption n=2 len 6");
    const auto d = dinf_partition();
    out.require(partition_coverage_check(d, 10).passed(), "D-infinity blocks on ball(10)");
    const auto cs = configuration_set_ball(d.gens, d.part, 8, 2);
    out.require(cs.exactness().saturated && cs.exactness().radius <= 8, "D-infinity saturation");
    out.require(cs.contains({1, 2, 3}), "D-infinity set lacks (1,2,3)");
    return out;
  });

  criterion(8, "derivation forms land in the derived series of S4", 0, [] {
    Outcome out;
    const Group s4 = load_group(data("groups/s4_perm.json"));
    const auto gens = OrderedGeneratingSet::parse(s4, {"(1,2)", "(1,2,3,4)"});
    for (auto [k, count] : {std::pair<std::size_t, std::size_t>{1, 100}, {2, 20}}) {
      const auto series = derived_series(s4, k);
      const auto pairs = derivation_form_pairs(2, k, count, 0);
      out.require(pairs.size() == count, "stream produced too few pairs");
      std::size_t inside = 0;
      for (const auto& p : pairs) inside += series.contains(k, s4.index(evaluate(p, gens))) ? 1 : 0;
      out.require(inside == count, "k=" + std::to_string(k) + ": " + std::to_string(inside) + "/" + std::to_string(count));
    }
    const auto z2 = OrderedGeneratingSet::standard(Group::free_abelian(2));
    std::size_t disagree = 0;
    for_each_pair(2, 6, false, false, [&](const RepresentativePair& p) {
      if (is_first_derivation_form(p) != z2.group().is_identity(evaluate(p, z2))) ++disagree;
      return true;
    });
    out.require(disagree == 0, std::to_string(disagree) + " first-form disagreements");
    return out;
  });

  criterion(9, "abelian law and Inn orders", 0, [] {
    Outcome out;
    const GlobalOptions o;
    LawArgs z6{data("groups/z6.json")}, s3{data("groups/s3_perm.json")};
    const auto a = run_law(z6, o);
    const auto b = run_law(s3, o);
    out.require(a.doc["holds"] == true, "abelian law fails on Z6");
    out.require(b.doc["holds"] == false, "abelian law holds on S3");
    const Group g = load_group(data("groups/s3_perm.json"));
    if (b.doc["witness"].is_array()) {
      const auto x = g.parse(b.doc["witness"][0].get<std::string>());
      const auto y = g.parse(b.doc["witness"][1].get<std::string>());
      out.require(g.multiply(x, y) != g.multiply(y, x), "witness commutes");
    } else {
      out.require(false, "no witness");
    }
    // Oracle: |Inn G| = |G| / |Z(G)| with the centre found by brute force.
    auto centre_oracle = [](const Group& grp) {
      std::size_t z = 0;
      for (const auto& x : grp.enumerate_all()) {
        bool central = true;
        for (const auto& y : grp.enumerate_all()) central = central && grp.multiply(x, y) == grp.multiply(y, x);
        z += central ? 1 : 0;
      }
      return grp.order() / z;
    };
    for (auto [file, expect] : {std::pair{"groups/z4.json", 1u}, {"groups/s3_perm.json", 6u}, {"groups/d4_perm.json", 4u}}) {
      const Group grp = load_group(data(file));
      DerivedArgs d;
      d.op = "inn";
      d.group = data(file);
      const auto r = run_derived(d, o);
      out.require(r.doc["inn_order"] == expect && centre_oracle(grp) == expect, std::string("inn order of ") + file);
    }
    return out;
  });

  criterion(10, "criteria 1-2 documents identical with 1 and 8 threads", 0, [] {
    Outcome out;
    for (auto [g, p] : {std::pair{"groups/z2.json", "partitions/z2_singletons.json"}, {"groups/z4.json", "partitions/z4_zero_rest.json"}}) {
      GlobalOptions one, eight;
      eight.threads = 8;
      const ConArgs a{data(g), data(p), {"1"}, {}, 2};
      out.require(run_con(a, one).doc.dump() == run_con(a, eight).doc.dump(), std::string("con ") + g);
    }
    for (auto [g, h, n, m] : {std::tuple{"groups/z4.json", "groups/v4.json", 2, 4}, std::tuple{"groups/s3_table.json", "groups/z6.json", 2, 3}}) {
      Json one, eight;
      contain_case(g, h, n, m, 1, &one);
      contain_case(g, h, n, m, 8, &eight);
      out.require(one.dump() == eight.dump(), std::string("contain ") + g + " vs " + h);
    }
    return out;
  });

  std::printf("%s: %d criterion(s) failed\n", failures ? "FAILED" : "ALL PASSED", failures);
  return failures ? 1 : 0;
}
