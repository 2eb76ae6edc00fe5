#pragma once

#include <confgroup/group.hpp>

#include <algorithm>
#include <set>
#include <vector>

namespace confgroup {

/// Derived series G = G^(0) >= G^(1) >= ... >= G^(k) of a finite group.
struct DerivedSeriesReport {
  std::size_t depth = 0;
  /// levels[j] lists the members of G^(j) in table order; levels[0] is G.
  std::vector<std::vector<ElementIndex>> levels;

  std::vector<std::size_t> cardinalities() const {
    std::vector<std::size_t> out;
    for (const auto& l : levels) out.push_back(l.size());
    return out;
  }

  bool contains(std::size_t level, ElementIndex x) const {
    const auto& l = levels.at(level);
    return std::binary_search(l.begin(), l.end(), x);
  }
};

/// [x, y] = x^-1 y^-1 x y.
inline ElementIndex commutator(const FiniteTable& t, ElementIndex x, ElementIndex y) {
  return t.product(t.product(t.inverse(x), t.inverse(y)), t.product(x, y));
}

inline DerivedSeriesReport derived_series(const Group& group, std::size_t k) {
  if (!group.is_finite()) fail_domain("derived_series requires a finite group");
  if (k == 0) fail_input("derivation depth must be positive");
  const auto& t = group.table();
  DerivedSeriesReport report;
  report.depth = k;
  std::vector<ElementIndex> level;
  for (ElementIndex i = 0; i < t.size(); ++i) level.push_back(i);
  report.levels.push_back(level);
  for (std::size_t j = 1; j <= k; ++j) {
    std::set<ElementIndex> commutators;
    for (auto x : level)
      for (auto y : level) commutators.insert(commutator(t, x, y));
    auto mask = subgroup_closure(t, std::vector<ElementIndex>(commutators.begin(), commutators.end()));
    level.clear();
    for (ElementIndex i = 0; i < t.size(); ++i)
      if (mask[i]) level.push_back(i);
    report.levels.push_back(level);
  }
  return report;
}

inline std::vector<ElementIndex> center(const Group& group) {
  if (!group.is_finite()) fail_domain("center requires a finite group");
  const auto& t = group.table();
  std::vector<ElementIndex> out;
  for (ElementIndex z = 0; z < t.size(); ++z) {
    bool central = true;
    for (ElementIndex x = 0; x < t.size() && central; ++x) central = t.product(z, x) == t.product(x, z);
    if (central) out.push_back(z);
  }
  return out;
}

/// Number of distinct maps x -> g x g^-1.
inline std::size_t inn_order(const Group& group) {
  if (!group.is_finite()) fail_domain("inn_order requires a finite group");
  const auto& t = group.table();
  std::set<std::vector<ElementIndex>> maps;
  for (ElementIndex g = 0; g < t.size(); ++g) {
    std::vector<ElementIndex> image(t.size());
    for (ElementIndex x = 0; x < t.size(); ++x) image[x] = t.product(t.product(g, x), t.inverse(g));
    maps.insert(std::move(image));
  }
  return maps.size();
}

}  // namespace confgroup
