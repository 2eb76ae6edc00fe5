#pragma once

#include <confgroup/group.hpp>
#include <confgroup/search.hpp>

#include <optional>
#include <vector>

namespace confgroup {

namespace detail {

/// Extends s_i -> t_i to a map on all of G by breadth-first words; none if inconsistent.
inline std::optional<std::vector<ElementIndex>> extend_to_homomorphism(const FiniteTable& g, const FiniteTable& h,
                                                                       const std::vector<ElementIndex>& src,
                                                                       const std::vector<ElementIndex>& dst) {
  constexpr auto unset = static_cast<ElementIndex>(-1);
  std::vector<ElementIndex> map(g.size(), unset);
  map[g.identity()] = h.identity();
  std::vector<ElementIndex> frontier{g.identity()};
  while (!frontier.empty()) {
    std::vector<ElementIndex> next;
    for (auto x : frontier) {
      for (std::size_t i = 0; i < src.size(); ++i) {
        auto y = g.product(src[i], x);
        auto image = h.product(dst[i], map[x]);
        if (map[y] == unset) {
          map[y] = image;
          next.push_back(y);
        } else if (map[y] != image) {
          return std::nullopt;
        }
      }
    }
    frontier = std::move(next);
  }
  for (ElementIndex a = 0; a < g.size(); ++a)
    for (ElementIndex b = 0; b < g.size(); ++b)
      if (map[g.product(a, b)] != h.product(map[a], map[b])) return std::nullopt;
  return map;
}

}  // namespace detail

/// First isomorphism G -> H (element index map), by brute force over images of a shortest generating tuple.
inline std::optional<std::vector<ElementIndex>> find_isomorphism(const Group& g, const Group& h) {
  if (!g.is_finite() || !h.is_finite()) fail_domain("find_isomorphism needs finite groups");
  if (g.order() != h.order()) return std::nullopt;
  const auto& gt = g.table();
  const auto& ht = h.table();
  std::vector<ElementIndex> src;
  for (std::size_t n = 1; src.empty(); ++n) {
    auto tuples = generating_tuples(gt, n);
    if (!tuples.empty()) src = tuples.front();
  }
  std::vector<ElementIndex> dst(src.size(), 0);
  const auto size = static_cast<ElementIndex>(ht.size());
  while (true) {
    if (auto map = detail::extend_to_homomorphism(gt, ht, src, dst)) {
      std::vector<char> hit(ht.size(), 0);
      bool bijective = true;
      for (auto y : *map) {
        if (hit[y]) bijective = false;
        hit[y] = 1;
      }
      if (bijective) return map;
    }
    std::size_t pos = dst.size();
    while (pos > 0 && ++dst[pos - 1] == size) dst[--pos] = 0;
    if (pos == 0) break;
  }
  return std::nullopt;
}

/// Labels of the image partition: element iso[x] of H gets the label of x.
inline std::vector<Label> push_labels(const std::vector<Label>& labels, const std::vector<ElementIndex>& iso) {
  std::vector<Label> out(labels.size());
  for (std::size_t x = 0; x < labels.size(); ++x) out[iso[x]] = labels[x];
  return out;
}

}  // namespace confgroup
