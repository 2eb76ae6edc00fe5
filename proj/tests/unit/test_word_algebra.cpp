#include "oracles.hpp"

#include <confgroup/corpus.hpp>
#include <confgroup/derivation_form.hpp>
#include <confgroup/derived.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace confgroup;

namespace {

RepresentativePair random_pair(std::mt19937_64& rng, std::size_t n, std::size_t max_len) {
  std::vector<Letter> letters(rng() % (max_len + 1));
  for (auto& l : letters) l = Letter{static_cast<std::uint32_t>(rng() % n + 1), rng() % 2 ? 1 : -1};
  return RepresentativePair(n, letters);
}

/// Word laws on one engine; returns the number of failures.
int word_law_failures(const OrderedGeneratingSet& gens, std::uint64_t seed, int trials) {
  std::mt19937_64 rng(seed);
  const Group& g = gens.group();
  int failures = 0;
  for (int i = 0; i < trials; ++i) {
    const auto p = random_pair(rng, gens.size(), 10);
    const auto q = random_pair(rng, gens.size(), 10);
    if (evaluate(concat(p, q), gens) != g.multiply(evaluate(p, gens), evaluate(q, gens))) ++failures;
    if (evaluate(inverse_pair(p), gens) != g.invert(evaluate(p, gens))) ++failures;
  }
  return failures;
}

}  // namespace

TEST(Pair, FormatAndParse) {
  const auto p = RepresentativePair::from_tuples(2, {1, 2, 1}, {1, -1, -1});
  EXPECT_EQ(format_pair(p), "+1 -2 -1");
  EXPECT_EQ(parse_pair("+1 -2 -1", 2), p);
  EXPECT_THROW(parse_pair("+3", 2), Error);
  EXPECT_THROW(RepresentativePair::from_tuples(2, {1}, {2}), Error);
}

TEST(Pair, EvaluateOnCyclicAndFree) {
  const auto z6 = OrderedGeneratingSet::parse(corpus::cyclic(6), {"1", "2"});
  const auto p = parse_pair("+1 +2 +2 -1", 2);
  EXPECT_EQ(z6.group().format(evaluate(p, z6)), "4");
  const auto f2 = OrderedGeneratingSet::standard(Group::free(2));
  EXPECT_EQ(f2.group().format(evaluate(parse_pair("+1 -2", 2), f2)), "f1 f2^-1");
  EXPECT_TRUE(f2.group().is_identity(evaluate(RepresentativePair::empty(2), f2)));
}

TEST(Pair, InverseAndCommutatorShape) {
  const auto p = parse_pair("+1 -2", 2);
  const auto q = parse_pair("+2", 2);
  EXPECT_EQ(format_pair(inverse_pair(p)), "+2 -1");
  // [p, q] = p^-1 q^-1 p q
  EXPECT_EQ(format_pair(commutator_pair(p, q)), "+2 -1 -2 +1 -2 +2");
  EXPECT_EQ(format_pair(free_reduce(commutator_pair(p, q))), "+2 -1 -2 +1");
}

TEST(Pair, ReducedAndFreeReduce) {
  EXPECT_TRUE(is_reduced(parse_pair("+1 +1 -2", 2)));
  EXPECT_FALSE(is_reduced(parse_pair("+1 -1", 1)));
  EXPECT_TRUE(free_reduce(parse_pair("+1 +2 -2 -1", 2)).is_empty());
}

TEST(Pair, FreeReduceAgreesWithSanovImage) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    const auto p = random_pair(rng, 2, 12);
    std::vector<int> raw, reduced;
    for (const auto& l : p.letters()) raw.push_back(static_cast<int>(l.index) * l.sign);
    const auto r = free_reduce(p);
    EXPECT_TRUE(is_reduced(r));
    for (const auto& l : r.letters()) reduced.push_back(static_cast<int>(l.index) * l.sign);
    EXPECT_EQ(oracle::sanov(raw), oracle::sanov(reduced));
  }
}

TEST(WordLaws, HoldOnEveryEngine) {
  std::vector<OrderedGeneratingSet> engines{
      OrderedGeneratingSet::standard(corpus::symmetric(4)),
      OrderedGeneratingSet::standard(corpus::symmetric3_table()),
      OrderedGeneratingSet::standard(Group::free(3)),
      OrderedGeneratingSet::standard(Group::free_abelian(2)),
      OrderedGeneratingSet::standard(Group::product(2, corpus::symmetric(3))),
      OrderedGeneratingSet::standard(Group::infinite_dihedral()),
  };
  std::uint64_t seed = 100;
  for (const auto& gens : engines) EXPECT_EQ(word_law_failures(gens, seed++, 1000), 0) << gens.group().label();
}

TEST(Enumeration, ShortlexCountsAndOrder) {
  std::vector<std::string> first;
  std::size_t all = 0, reduced = 0;
  for_each_pair(2, 3, false, false, [&](const RepresentativePair& p) {
    if (first.size() < 6) first.push_back(format_pair(p));
    ++all;
    return true;
  });
  for_each_pair(2, 3, false, true, [&](const RepresentativePair&) {
    ++reduced;
    return true;
  });
  EXPECT_EQ(all, 4u + 16u + 64u);
  EXPECT_EQ(reduced, 4u + 12u + 36u);
  EXPECT_EQ(first, (std::vector<std::string>{"+1", "-1", "+2", "-2", "+1 +1", "+1 -1"}));
}

TEST(DerivationForm, FirstFormAgreesWithAbelianisation) {
  // Z^2 with its standard basis is the abelianisation of F_2.
  const auto z2 = OrderedGeneratingSet::standard(Group::free_abelian(2));
  std::size_t checked = 0;
  for_each_pair(2, 6, false, false, [&](const RepresentativePair& p) {
    EXPECT_EQ(is_first_derivation_form(p), z2.group().is_identity(evaluate(p, z2))) << format_pair(p);
    ++checked;
    return true;
  });
  EXPECT_EQ(checked, 5460u);
}

TEST(DerivationForm, StreamLandsInDerivedSubgroups) {
  const Group s4 = corpus::symmetric(4);
  const auto gens = OrderedGeneratingSet::parse(s4, {"(1,2)", "(1,2,3,4)"});
  const auto series = derived_series(s4, 2);
  EXPECT_EQ(series.cardinalities(), (std::vector<std::size_t>{24, 12, 4}));
  for (std::size_t k : {1u, 2u}) {
    DerivationFormStream stream(2, k);
    const std::size_t count = k == 1 ? 100 : 20;
    for (std::size_t i = 0; i < count; ++i) {
      const auto& p = stream.at(i);
      EXPECT_FALSE(p.is_empty());
      EXPECT_TRUE(series.contains(k, s4.index(evaluate(p, gens)))) << k << " " << format_pair(p);
      if (k == 1) {
        EXPECT_TRUE(is_first_derivation_form(p));
      }
    }
  }
}

TEST(DerivationForm, StreamIsRestartableAndDuplicateFree) {
  DerivationFormStream a(2, 2), b(2, 2);
  std::set<RepresentativePair> seen;
  for (std::size_t i = 0; i < 20; ++i) {
    EXPECT_EQ(a.at(i), b.at(i));
    EXPECT_TRUE(seen.insert(a.at(i)).second);
    EXPECT_TRUE(is_reduced(a.at(i)));
  }
  EXPECT_EQ(a.at(3), b.at(3));
}

TEST(DerivationForm, SingleGeneratorIsExhausted) {
  DerivationFormStream s(1, 1);
  EXPECT_TRUE(s.exhausted());
  EXPECT_THROW(s.at(0), Error);
  EXPECT_THROW(DerivationFormStream(2, 0), Error);
}

TEST(DerivationForm, SecondFormIsTrivialInMetabelianGroup) {
  // S3 has derived length 2, so second derivation forms evaluate to e.
  const auto gens = OrderedGeneratingSet::parse(corpus::symmetric(3), {"(1,2)", "(1,2,3)"});
  DerivationFormStream s(2, 2);
  for (std::size_t i = 0; i < 20; ++i) EXPECT_TRUE(gens.group().is_identity(evaluate(s.at(i), gens)));
}
