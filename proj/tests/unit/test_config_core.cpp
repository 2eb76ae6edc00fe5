#include "oracles.hpp"

#include <confgroup/corpus.hpp>
#include <confgroup/golden.hpp>
#include <confgroup/isomorphism.hpp>
#include <confgroup/search.hpp>
#include <confgroup/translation.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace confgroup;

namespace {

std::vector<Configuration> con(const Group& g, const std::vector<std::string>& gens, const std::vector<Label>& labels) {
  return configuration_set_finite(OrderedGeneratingSet::parse(g, gens), Partition::from_labels(g, labels)).configurations();
}

std::set<std::vector<unsigned>> as_set(const std::vector<Configuration>& cs) {
  std::set<std::vector<unsigned>> out;
  for (const auto& c : cs) out.emplace(c.begin(), c.end());
  return out;
}

}  // namespace

TEST(ConfigurationSet, SmallCyclicExamples) {
  const Group z2 = corpus::cyclic(2), z4 = corpus::cyclic(4);
  EXPECT_EQ(con(z2, {"1"}, {1, 2}), (std::vector<Configuration>{{1, 2}, {2, 1}}));
  EXPECT_EQ(con(z4, {"1"}, {1, 2, 2, 2}), (std::vector<Configuration>{{1, 2}, {2, 1}, {2, 2}}));
  EXPECT_EQ(con(z4, {"1"}, {1, 1, 1, 1}), (std::vector<Configuration>{{1, 1}}));
}

TEST(ConfigurationSet, CyclicAgreesWithModularOracle) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const unsigned n = 2 + rng() % 9;
    const Group g = corpus::cyclic(n);
    const std::size_t m = 1 + rng() % n;
    auto labels = oracle::random_labels(rng, n, m);
    std::vector<unsigned> gens{1};
    gens.push_back(static_cast<unsigned>(rng() % n));
    std::vector<std::string> names{"1", std::to_string(gens[1])};
    const auto got = con(g, names, std::vector<Label>(labels.begin(), labels.end()));
    EXPECT_EQ(as_set(got), oracle::cyclic_con(n, gens, labels));
  }
}

TEST(ConfigurationSet, PermutationAgreesWithExplicitAction) {
  const Group s3 = corpus::symmetric(3);
  const auto elements = s3.enumerate_all();
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    auto labels = oracle::random_labels(rng, 6, 1 + rng() % 6);
    std::set<std::vector<unsigned>> expect;
    const std::vector<std::string> gens{"(1,2)", "(1,2,3)"};
    for (const auto& x : elements) {
      const auto px = parse_cycles(s3.format(x), 3);
      std::vector<unsigned> c{labels[s3.index(x)]};
      for (const auto& name : gens) {
        const auto pg = parse_cycles(name, 3);
        Permutation y(3);
        for (unsigned i = 0; i < 3; ++i) y[i] = pg[px[i]];
        c.push_back(labels[s3.index(s3.parse(format_cycles(y)))]);
      }
      expect.insert(c);
    }
    EXPECT_EQ(as_set(con(s3, gens, std::vector<Label>(labels.begin(), labels.end()))), expect);
  }
}

TEST(ConfigurationSet, BallObservedGrowsMonotonically) {
  const auto c = dinf_partition();
  std::vector<Configuration> previous;
  for (std::size_t r = 0; r <= 8; ++r) {
    const auto cs = configuration_set_ball(c.gens, c.part, r, 100);
    EXPECT_FALSE(cs.is_exact());
    EXPECT_TRUE(std::includes(cs.configurations().begin(), cs.configurations().end(), previous.begin(), previous.end()));
    previous = cs.configurations();
  }
}

TEST(ConfigurationSet, TrivialPartitionSaturatesAtRadiusZero) {
  const Group f2 = Group::free(2);
  const auto cs = configuration_set_ball(OrderedGeneratingSet::standard(f2), Partition::trivial(f2), 6, 2);
  EXPECT_EQ(cs.configurations(), (std::vector<Configuration>{{1, 1, 1}}));
  EXPECT_TRUE(cs.exactness().saturated);
  EXPECT_EQ(cs.exactness().stable_since, 0u);
  EXPECT_EQ(cs.exactness().radius, 2u);
}

TEST(ConfigurationSet, FreeGroupAtIdentity) {
  const auto c = free_group_partition(2);
  EXPECT_EQ(configuration_of(c.group().identity(), c.gens, c.part), (Configuration{1, 2, 3}));
}

TEST(ConfigurationSet, BallExplicitPartitionNeedsCoverage) {
  const Group f2 = Group::free(2);
  const auto p = Partition::ball_explicit(f2, 3, {{f2.identity(), 1}}, Label{2});
  EXPECT_THROW(configuration_set_ball(OrderedGeneratingSet::standard(f2), p, 3, 2), Error);
  EXPECT_NO_THROW(configuration_set_ball(OrderedGeneratingSet::standard(f2), p, 2, 2));
}

TEST(Coarsening, ImageOfFineSetIsCoarseSet) {
  std::mt19937_64 rng(21);
  const auto groups = corpus::small_groups(12);
  for (int trial = 0; trial < 200; ++trial) {
    const Group& g = groups[rng() % groups.size()];
    auto tuples = generating_tuples(g.table(), 2);
    if (tuples.empty()) tuples = generating_tuples(g.table(), 3);
    ASSERT_FALSE(tuples.empty()) << g.label();
    const auto gens = OrderedGeneratingSet::of_indices(g, tuples[rng() % tuples.size()]);
    const std::size_t s = 1 + rng() % g.order();
    auto labels = oracle::random_labels(rng, g.order(), s);
    const auto fine = Partition::from_labels(g, std::vector<Label>(labels.begin(), labels.end()));
    auto targets = oracle::random_labels(rng, s, 1 + rng() % s);
    const BlockMergeMap map(std::vector<Label>(targets.begin(), targets.end()));
    const auto lhs = coarsen_config_set(configuration_set_finite(gens, fine), map);
    const auto rhs = configuration_set_finite(gens, coarsen(fine, map));
    EXPECT_TRUE(lhs.same_configurations(rhs)) << g.label();
  }
}

TEST(Relabel, SetsEqualUpToRelabel) {
  const ConfigurationSet a(1, 2, {{1, 2}, {2, 1}});
  const ConfigurationSet b(1, 2, {{2, 1}, {1, 2}});
  EXPECT_EQ(sets_equal_up_to_relabel(a, b), (std::vector<Label>{1, 2}));
  const ConfigurationSet c(1, 2, {{1, 2}, {2, 2}, {2, 1}});
  const ConfigurationSet d(1, 2, {{2, 1}, {1, 1}, {1, 2}});
  const auto perm = sets_equal_up_to_relabel(c, d);
  ASSERT_TRUE(perm);
  EXPECT_EQ(*perm, (std::vector<Label>{2, 1}));
  EXPECT_EQ(relabel(c.configurations(), *perm), d.configurations());
  const ConfigurationSet e(1, 2, {{1, 1}, {2, 2}});
  EXPECT_FALSE(sets_equal_up_to_relabel(c, e));
  EXPECT_FALSE(sets_equal_up_to_relabel(a, ConfigurationSet(1, 3, {{1, 2}, {2, 3}})));
  EXPECT_THROW(sets_equal_up_to_relabel(a, ConfigurationSet(2, 2, {{1, 2, 1}})), Error);
}

TEST(Relabel, CanonicalFormIsClassInvariant) {
  std::mt19937_64 rng(4);
  const Group s3 = corpus::symmetric(3);
  for (int trial = 0; trial < 50; ++trial) {
    auto labels = oracle::random_labels(rng, 6, 3);
    const auto cs = con(s3, {"(1,2)", "(1,2,3)"}, std::vector<Label>(labels.begin(), labels.end()));
    std::vector<Label> perm{1, 2, 3};
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(canonical_form(cs, 3), canonical_form(relabel(cs, perm), 3));
  }
}

TEST(Search, NoMatchForZ2TargetInZ3) {
  const auto target = con(corpus::cyclic(2), {"1"}, {1, 2});
  EXPECT_FALSE(search_matching_pair(target, 1, 2, corpus::cyclic(3)));
}

TEST(Search, MatchReproducesTarget) {
  const auto target = con(corpus::cyclic(4), {"1"}, {1, 2, 2, 2});
  const auto hit = search_matching_pair(target, 1, 2, corpus::cyclic(4));
  ASSERT_TRUE(hit);
  EXPECT_EQ(finite_configurations(corpus::cyclic(4).table(), hit->gens, hit->labels), target);
  EXPECT_FALSE(search_matching_pair(target, 1, 2, corpus::klein_four()));
}

TEST(Search, BudgetIsEnforced) {
  const auto target = con(corpus::cyclic(4), {"1"}, {1, 2, 2, 2});
  try {
    search_matching_pair(target, 1, 2, corpus::cyclic(8), SearchOptions{1, 10});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::budget);
  }
}

TEST(Containment, DistinguishesNonIsomorphicGroups) {
  const auto z4_v4 = configuration_contained(corpus::cyclic(4), corpus::klein_four(), 2, 4);
  EXPECT_EQ(z4_v4.verdict, Certificate::Verdict::not_contained);
  const auto s3_z6 = configuration_contained(corpus::symmetric(3), corpus::cyclic(6), 2, 3);
  EXPECT_EQ(s3_z6.verdict, Certificate::Verdict::not_contained);
  ASSERT_TRUE(s3_z6.witness);
  EXPECT_FALSE(search_matching_pair(s3_z6.witness_configurations, s3_z6.witness->gens.size(),
                                    *std::max_element(s3_z6.witness->labels.begin(), s3_z6.witness->labels.end()),
                                    corpus::cyclic(6)));
  EXPECT_TRUE(verify_certificate(s3_z6, corpus::symmetric(3), corpus::cyclic(6)).valid);
}

TEST(Containment, IsomorphicGroupsContainEachOther) {
  const auto cert = configuration_contained(corpus::symmetric3_table(), corpus::symmetric(3), 2, 3);
  EXPECT_EQ(cert.verdict, Certificate::Verdict::contained);
  EXPECT_TRUE(verify_certificate(cert, corpus::symmetric3_table(), corpus::symmetric(3)).valid);
}

TEST(Containment, MemoisedResultEqualsUncached) {
  // m = 6 bypasses the memo; compare against the memoised run on the same prefix.
  const Group z6 = corpus::cyclic(6);
  const auto cached = configuration_contained(z6, z6, 1, 3);
  for (const auto& match : cached.matches) {
    const auto target = finite_configurations(z6.table(), match.source.gens, match.source.labels);
    const std::size_t m = *std::max_element(match.source.labels.begin(), match.source.labels.end());
    const auto direct = search_matching_pair(target, 1, m, z6);
    ASSERT_TRUE(direct);
    EXPECT_EQ(*direct, match.image);
  }
}

TEST(Containment, ThreadCountDoesNotChangeCertificate) {
  const auto one = configuration_contained(corpus::symmetric(3), corpus::cyclic(6), 2, 3, SearchOptions{1, 5e8});
  const auto eight = configuration_contained(corpus::symmetric(3), corpus::cyclic(6), 2, 3, SearchOptions{8, 5e8});
  EXPECT_EQ(one.witness, eight.witness);
  EXPECT_EQ(one.pairs_examined, eight.pairs_examined);
  const auto a = configuration_contained(corpus::dihedral(4), corpus::quaternion(), 2, 2, SearchOptions{1, 5e8});
  const auto b = configuration_contained(corpus::dihedral(4), corpus::quaternion(), 2, 2, SearchOptions{8, 5e8});
  ASSERT_EQ(a.matches.size(), b.matches.size());
  for (std::size_t i = 0; i < a.matches.size(); ++i) EXPECT_EQ(a.matches[i].image, b.matches[i].image);
}

TEST(Certificate, TamperedMatchIsRejected) {
  auto cert = configuration_contained(corpus::cyclic(4), corpus::cyclic(4), 1, 2);
  ASSERT_EQ(cert.verdict, Certificate::Verdict::contained);
  auto it = std::find_if(cert.matches.begin(), cert.matches.end(), [](const Certificate::Match& m) {
    return m.source.labels == std::vector<Label>{1, 2, 2, 2};
  });
  ASSERT_NE(it, cert.matches.end());
  for (auto& l : it->image.labels) l = 3 - l;
  const auto check = verify_certificate(cert, corpus::cyclic(4), corpus::cyclic(4));
  EXPECT_FALSE(check.valid);
}

TEST(Strong, IsomorphicPresentationsMatchEveryPartition) {
  const Group g = corpus::symmetric3_table(), h = corpus::symmetric(3);
  const auto iso = find_isomorphism(g, h);
  ASSERT_TRUE(iso);
  const auto gens_g = OrderedGeneratingSet::parse(g, {"a", "b"});
  std::vector<ElementIndex> image;
  for (auto x : gens_g.indices()) image.push_back((*iso)[x]);
  const auto gens_h = OrderedGeneratingSet::of_indices(h, image);
  const auto cert = strong_contained_finite(gens_g, gens_h, 3);
  EXPECT_EQ(cert.verdict, Certificate::Verdict::contained);
  EXPECT_EQ(cert.matches.size(), 1u + 31u + 90u);
  for (const auto& m : cert.matches) {
    // The pushed partition is an independent match with identical labels.
    const auto pushed = push_labels(m.source.labels, *iso);
    EXPECT_EQ(finite_configurations(h.table(), image, pushed), finite_configurations(g.table(), m.source.gens, m.source.labels));
  }
}

TEST(Strong, NonIsomorphicImageFails) {
  const Group z4 = corpus::cyclic(4);
  const auto gens_g = OrderedGeneratingSet::parse(z4, {"1"});
  const auto gens_h = OrderedGeneratingSet::parse(z4, {"1"});
  EXPECT_EQ(strong_contained_finite(gens_g, gens_h, 4).verdict, Certificate::Verdict::contained);
  const auto s3 = corpus::symmetric(3);
  const auto cyc = OrderedGeneratingSet::parse(s3, {"(1,2)", "(1,2,3)"});
  const auto swapped = OrderedGeneratingSet::parse(s3, {"(1,2,3)", "(1,2)"});
  EXPECT_EQ(strong_contained_finite(cyc, swapped, 2).verdict, Certificate::Verdict::not_contained);
}

TEST(Translation, HoldsOnMatchedPairs) {
  const auto cert = configuration_contained(corpus::symmetric3_table(), corpus::symmetric(3), 2, 3);
  for (const auto& m : cert.matches) {
    const auto report = check_translation_implications(
        OrderedGeneratingSet::of_indices(corpus::symmetric3_table(), m.source.gens),
        Partition::from_labels(corpus::symmetric3_table(), m.source.labels),
        OrderedGeneratingSet::of_indices(corpus::symmetric(3), m.image.gens),
        Partition::from_labels(corpus::symmetric(3), m.image.labels));
    EXPECT_TRUE(report.passed());
  }
}

TEST(Translation, DetectsUnrelatedPairs) {
  // Same block counts, different Con: the check must find a violation.
  const Group z4 = corpus::cyclic(4);
  const auto gens = OrderedGeneratingSet::parse(z4, {"1"});
  const auto report = check_translation_implications(gens, Partition::from_labels(z4, {1, 2, 1, 2}), gens,
                                              Partition::from_labels(z4, {1, 1, 2, 2}));
  EXPECT_FALSE(report.passed());
}
