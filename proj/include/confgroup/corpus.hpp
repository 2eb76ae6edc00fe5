#pragma once

#include <confgroup/finite_table.hpp>
#include <confgroup/group.hpp>
#include <confgroup/permutation.hpp>

#include <string>
#include <vector>

// Bundled small groups used by tests, the acceptance suite and the CLI.
namespace confgroup::corpus {

inline FiniteTable cyclic_table(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return FiniteTable::from_rule(std::move(names), [n](ElementIndex a, ElementIndex b) {
    return static_cast<ElementIndex>((a + b) % n);
  });
}

inline Group cyclic(std::size_t n) { return Group::from_table(cyclic_table(n), "Z" + std::to_string(n)); }

inline Group trivial() { return cyclic(1); }

inline Group klein_four() {
  return Group::from_table(direct_product(cyclic_table(2), cyclic_table(2)), "Z2xZ2");
}

inline Group cyclic_product(std::size_t a, std::size_t b) {
  return Group::from_table(direct_product(cyclic_table(a), cyclic_table(b)),
                           "Z" + std::to_string(a) + "xZ" + std::to_string(b));
}

/// S_n as permutations generated by (1,2) and (1,2,...,n).
inline Group symmetric(std::size_t n) {
  Permutation swap = identity_permutation(n);
  std::swap(swap[0], swap[1]);
  Permutation cycle(n);
  for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<std::uint32_t>((i + 1) % n);
  return Group::from_permutations(n, {swap, cycle}, "S" + std::to_string(n));
}

inline Group alternating4() {
  return Group::from_permutations(4, {parse_cycles("(1,2,3)", 4), parse_cycles("(2,3,4)", 4)}, "A4");
}

/// Dihedral group of order 2k acting on a k-gon.
inline Group dihedral(std::size_t k) {
  Permutation rotation(k), reflection(k);
  for (std::size_t i = 0; i < k; ++i) {
    rotation[i] = static_cast<std::uint32_t>((i + 1) % k);
    reflection[i] = static_cast<std::uint32_t>((k - i) % k);
  }
  return Group::from_permutations(k, {rotation, reflection}, "D" + std::to_string(k));
}

/// Quaternion group Q8 from its multiplication rule on {+-1, +-i, +-j, +-k}.
inline Group quaternion() {
  // Units 1,i,j,k with unit products u*v = sign * w.
  static constexpr int unit_product[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int unit_sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<std::string> names = {"1", "i", "j", "k", "-1", "-i", "-j", "-k"};
  return Group::from_table(FiniteTable::from_rule(std::move(names),
                                                  [](ElementIndex a, ElementIndex b) {
                                                    int ua = a % 4, ub = b % 4;
                                                    int sign = (a < 4 ? 1 : -1) * (b < 4 ? 1 : -1) *
                                                               unit_sign[ua][ub];
                                                    int w = unit_product[ua][ub];
                                                    return static_cast<ElementIndex>(w + (sign < 0 ? 4 : 0));
                                                  }),
                           "Q8");
}

/// S3 as an explicit Cayley table (elements e, a, a^2, b, ab, a^2 b with a^3 = b^2 = e, ba = a^2 b).
inline Group symmetric3_table() {
  std::vector<std::string> names = {"e", "a", "a2", "b", "ab", "a2b"};
  // a^s b^t has index s + 3t.
  return Group::from_table(FiniteTable::from_rule(std::move(names),
                                                  [](ElementIndex x, ElementIndex y) {
                                                    int s1 = x % 3, t1 = x / 3, s2 = y % 3, t2 = y / 3;
                                                    // a^s1 b^t1 a^s2 b^t2 = a^(s1 + (-1)^t1 s2) b^(t1+t2)
                                                    int s = (s1 + (t1 ? 3 - s2 : s2)) % 3;
                                                    int t = (t1 + t2) % 2;
                                                    return static_cast<ElementIndex>(s + 3 * t);
                                                  }),
                           "S3-table");
}

/// Every bundled group of order at most `max_order`.
inline std::vector<Group> small_groups(std::size_t max_order = 12) {
  std::vector<Group> all;
  for (std::size_t n = 1; n <= 12; ++n) all.push_back(cyclic(n));
  all.push_back(klein_four());
  all.push_back(cyclic_product(2, 4));
  all.push_back(Group::from_table(direct_product(klein_four().table(), cyclic_table(2)), "Z2xZ2xZ2"));
  all.push_back(cyclic_product(2, 6));
  all.push_back(symmetric(3));
  all.push_back(symmetric3_table());
  all.push_back(dihedral(4));
  all.push_back(quaternion());
  all.push_back(dihedral(5));
  all.push_back(dihedral(6));
  all.push_back(alternating4());
  std::vector<Group> out;
  for (auto& g : all)
    if (g.order() <= max_order) out.push_back(g);
  return out;
}

}  // namespace confgroup::corpus
