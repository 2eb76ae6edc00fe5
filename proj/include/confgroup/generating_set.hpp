#pragma once

#include <confgroup/error.hpp>
#include <confgroup/group.hpp>

#include <algorithm>
#include <unordered_set>
#include <vector>

namespace confgroup {

/**
 * Ordered tuple (g_1, ..., g_n) that generates its group.
 *
 * Finite engines are verified by breadth-first closure. Infinite engines
 * are accepted when every standard generator occurs among the components
 * up to inversion, which certifies generation without a word-problem search.
 * Repeated components and the identity are allowed.
 */
class OrderedGeneratingSet {
 public:
  OrderedGeneratingSet(Group group, std::vector<GroupElement> elements)
      : group_(std::move(group)), elements_(std::move(elements)) {
    for (const auto& g : elements_) group_.check_member(g);
    if (group_.is_finite()) {
      std::vector<ElementIndex> idx;
      for (const auto& g : elements_) idx.push_back(group_.index(g));
      if (!confgroup::generates(group_.table(), idx)) {
        fail_input("ordered tuple does not generate group '" + group_.label() + "'");
      }
    } else {
      for (const auto& s : group_.standard_generators()) {
        auto inv = group_.invert(s);
        bool present = std::any_of(elements_.begin(), elements_.end(),
                                   [&](const GroupElement& g) { return g == s || g == inv; });
        if (!present) {
          fail_input("cannot certify that the tuple generates '" + group_.label() +
                     "': missing standard generator " + group_.format(s));
        }
      }
    }
  }

  static OrderedGeneratingSet standard(const Group& group) {
    return OrderedGeneratingSet(group, group.standard_generators());
  }

  /// Finite engines: tuple given by element indices.
  static OrderedGeneratingSet of_indices(const Group& group, const std::vector<ElementIndex>& indices) {
    std::vector<GroupElement> els;
    for (auto i : indices) els.push_back(group.element(i));
    return OrderedGeneratingSet(group, std::move(els));
  }

  static OrderedGeneratingSet parse(const Group& group, const std::vector<std::string>& names) {
    std::vector<GroupElement> els;
    for (const auto& n : names) els.push_back(group.parse(n));
    return OrderedGeneratingSet(group, std::move(els));
  }

  const Group& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const GroupElement& operator[](std::size_t i) const { return elements_.at(i); }
  const std::vector<GroupElement>& elements() const noexcept { return elements_; }

  std::vector<ElementIndex> indices() const {
    std::vector<ElementIndex> out;
    for (const auto& g : elements_) out.push_back(group_.index(g));
    return out;
  }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    for (const auto& g : elements_) out.push_back(group_.format(g));
    return out;
  }

 private:
  Group group_;
  std::vector<GroupElement> elements_;
};

/// Spheres 0..radius of the Cayley graph: products of exactly r letters
/// (generators and inverses) not already reached at a smaller radius.
inline std::vector<std::vector<GroupElement>> ball_spheres(const OrderedGeneratingSet& gens,
                                                           std::size_t radius) {
  const Group& group = gens.group();
  std::vector<GroupElement> letters;
  for (const auto& g : gens.elements()) {
    letters.push_back(g);
    letters.push_back(group.invert(g));
  }
  std::unordered_set<GroupElement, ElementHash> seen{group.identity()};
  std::vector<std::vector<GroupElement>> spheres{{group.identity()}};
  for (std::size_t r = 0; r < radius; ++r) {
    std::vector<GroupElement> next;
    for (const auto& x : spheres.back()) {
      for (const auto& s : letters) {
        auto y = group.multiply(s, x);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    spheres.push_back(std::move(next));
  }
  return spheres;
}

/// All products of at most `radius` letters, in breadth-first order.
inline std::vector<GroupElement> ball(const OrderedGeneratingSet& gens, std::size_t radius) {
  std::vector<GroupElement> out;
  for (auto& sphere : ball_spheres(gens, radius))
    for (auto& g : sphere) out.push_back(std::move(g));
  return out;
}

}  // namespace confgroup
