#pragma once

#include <confgroup/word.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace confgroup {

/// A word mu(x_1, ..., x_n) in n variables; G satisfies the law when mu = e everywhere.
struct GroupLaw {
  std::string name;
  RepresentativePair word;

  std::size_t variables() const noexcept { return word.n(); }

  static GroupLaw parse(const std::string& text, std::size_t variables, std::string name = "custom") {
    return GroupLaw{std::move(name), parse_pair(text, variables)};
  }

  /// x1^-1 x2^-1 x1 x2
  static GroupLaw abelian() { return {"abelian", RepresentativePair::from_tuples(2, {1, 2, 1, 2}, {-1, -1, 1, 1})}; }

  /// x1^k
  static GroupLaw exponent(std::size_t k) {
    return {"exponent-" + std::to_string(k),
            RepresentativePair::from_tuples(1, std::vector<std::uint32_t>(k, 1), std::vector<int>(k, 1))};
  }

  /// [[x1, x2], [x3, x4]]
  static GroupLaw metabelian() {
    auto x = [](std::uint32_t i) { return RepresentativePair::from_tuples(4, {i}, {1}); };
    return {"metabelian", commutator_pair(commutator_pair(x(1), x(2)), commutator_pair(x(3), x(4)))};
  }
};

struct LawDomain {
  enum class Mode { all, ball, sample };
  Mode mode = Mode::all;
  std::size_t radius = 3;     // ball mode; sample pool on infinite engines
  std::size_t samples = 1000;
  std::uint64_t seed = 1;

  static LawDomain all() { return {}; }
  static LawDomain ball(std::size_t r) { return {Mode::ball, r, 0, 0}; }
  static LawDomain sample(std::size_t k, std::uint64_t seed, std::size_t pool_radius = 3) {
    return {Mode::sample, pool_radius, k, seed};
  }
};

inline const char* to_string(LawDomain::Mode m) {
  switch (m) {
    case LawDomain::Mode::all:
      return "all";
    case LawDomain::Mode::ball:
      return "ball";
    case LawDomain::Mode::sample:
      return "sample";
  }
  return "unknown";
}

struct LawResult {
  bool holds = true;
  std::size_t tuples_checked = 0;
  std::optional<std::vector<GroupElement>> witness;  // first tuple with mu != e
  std::optional<GroupElement> value;                 // mu at the witness
};

/**
 * Evaluates the law on variable tuples drawn from the domain: every tuple of
 * the group (all), of ball(r) of the standard generators (ball, odometer
 * order, first variable slowest), or k seeded uniform draws (sample; from
 * the group when finite, else from ball(radius)).
 */
inline LawResult check_group_law(const Group& group, const GroupLaw& law, const LawDomain& domain) {
  const std::size_t n = law.variables();
  std::vector<GroupElement> pool;
  switch (domain.mode) {
    case LawDomain::Mode::all:
      if (!group.is_finite()) fail_domain("law check over all tuples needs a finite group");
      pool = group.enumerate_all();
      break;
    case LawDomain::Mode::ball:
      pool = ball(OrderedGeneratingSet::standard(group), domain.radius);
      break;
    case LawDomain::Mode::sample:
      pool = group.is_finite() ? group.enumerate_all() : ball(OrderedGeneratingSet::standard(group), domain.radius);
      break;
  }
  LawResult result;
  auto test = [&](const std::vector<GroupElement>& values) {
    ++result.tuples_checked;
    auto v = evaluate_on(law.word, group, values);
    if (group.is_identity(v)) return true;
    result.holds = false;
    result.witness = values;
    result.value = std::move(v);
    return false;
  };
  std::vector<GroupElement> values(n);
  if (domain.mode == LawDomain::Mode::sample) {
    std::mt19937_64 rng(domain.seed);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (std::size_t s = 0; s < domain.samples; ++s) {
      for (auto& v : values) v = pool[pick(rng)];
      if (!test(values)) return result;
    }
    return result;
  }
  std::vector<std::size_t> odometer(n, 0);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) values[i] = pool[odometer[i]];
    if (!test(values)) return result;
    std::size_t pos = n;
    while (pos > 0 && ++odometer[pos - 1] == pool.size()) odometer[--pos] = 0;
    if (pos == 0) break;
  }
  return result;
}

}  // namespace confgroup
