#pragma once

#include <confgroup/error.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

namespace confgroup {

using ElementIndex = std::uint32_t;

/**
 * Cayley table of a finite group.
 *
 * Elements are the indices 0..N-1; `product(a, b)` is the index of ab.
 * The constructor validates the Latin-square property and the identity.
 * Associativity is checked exhaustively only for N <= kAssociativityLimit;
 * larger tables are accepted with `associativity_verified() == false`.
 */
class FiniteTable {
 public:
  static constexpr std::size_t kAssociativityLimit = 64;

  FiniteTable(std::vector<std::string> names, std::vector<ElementIndex> table,
              ElementIndex identity)
      : names_(std::move(names)), table_(std::move(table)), identity_(identity) {
    validate();
  }

  /// Builds a table from a product rule on 0..size-1.
  template <typename Product>
  static FiniteTable from_rule(std::vector<std::string> names, Product&& product) {
    const auto n = static_cast<ElementIndex>(names.size());
    std::vector<ElementIndex> table(std::size_t{n} * n);
    ElementIndex identity = n;
    for (ElementIndex a = 0; a < n; ++a) {
      for (ElementIndex b = 0; b < n; ++b) {
        table[std::size_t{a} * n + b] = product(a, b);
      }
    }
    for (ElementIndex e = 0; e < n && identity == n; ++e) {
      bool neutral = true;
      for (ElementIndex a = 0; a < n && neutral; ++a) {
        neutral = table[std::size_t{e} * n + a] == a && table[std::size_t{a} * n + e] == a;
      }
      if (neutral) identity = e;
    }
    if (identity == n) fail_input("invalid multiplication table: no identity element");
    return FiniteTable(std::move(names), std::move(table), identity);
  }

  std::size_t size() const noexcept { return names_.size(); }
  ElementIndex identity() const noexcept { return identity_; }
  bool associativity_verified() const noexcept { return associativity_verified_; }

  ElementIndex product(ElementIndex a, ElementIndex b) const {
    return table_[std::size_t{a} * size() + b];
  }
  ElementIndex inverse(ElementIndex a) const { return inverses_[a]; }

  const std::string& name(ElementIndex a) const { return names_[a]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<ElementIndex>& raw() const noexcept { return table_; }

  /// Index of the element with the given name; throws if unknown.
  ElementIndex index_of(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) fail_input("unknown element name '" + name + "'");
    return it->second;
  }

  bool has_name(const std::string& name) const { return by_name_.count(name) != 0; }

 private:
  void validate() {
    const std::size_t n = names_.size();
    if (n == 0) fail_input("invalid multiplication table: empty group");
    if (table_.size() != n * n) fail_input("invalid multiplication table: table is not N x N");
    if (identity_ >= n) fail_input("invalid multiplication table: identity index out of range");
    for (std::size_t i = 0; i < n; ++i) {
      if (!by_name_.emplace(names_[i], static_cast<ElementIndex>(i)).second) {
        fail_input("invalid multiplication table: duplicate element name '" + names_[i] + "'");
      }
    }
    std::vector<char> seen(n);
    for (std::size_t r = 0; r < n; ++r) {
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t c = 0; c < n; ++c) {
        auto v = table_[r * n + c];
        if (v >= n || seen[v]) fail_input("invalid multiplication table: row " + std::to_string(r) + " is not a permutation");
        seen[v] = 1;
      }
    }
    for (std::size_t c = 0; c < n; ++c) {
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t r = 0; r < n; ++r) {
        auto v = table_[r * n + c];
        if (seen[v]) fail_input("invalid multiplication table: column " + std::to_string(c) + " is not a permutation");
        seen[v] = 1;
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (table_[identity_ * n + a] != a || table_[a * n + identity_] != a) {
        fail_input("invalid multiplication table: identity is not neutral");
      }
    }
    if (n <= kAssociativityLimit) {
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          const auto ab = table_[a * n + b];
          for (std::size_t c = 0; c < n; ++c) {
            if (table_[ab * n + c] != table_[a * n + table_[b * n + c]]) {
              fail_input("invalid multiplication table: not associative");
            }
          }
        }
      associativity_verified_ = true;
    }
    inverses_.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (table_[a * n + b] == identity_) {
          inverses_[a] = static_cast<ElementIndex>(b);
          break;
        }
      }
    }
  }

  std::vector<std::string> names_;
  std::vector<ElementIndex> table_;
  ElementIndex identity_;
  std::vector<ElementIndex> inverses_;
  std::unordered_map<std::string, ElementIndex> by_name_;
  bool associativity_verified_ = false;
};

/// Subgroup generated by `generators`, as a membership mask (breadth-first closure).
inline std::vector<char> subgroup_closure(const FiniteTable& table,
                                          const std::vector<ElementIndex>& generators) {
  std::vector<char> member(table.size(), 0);
  std::vector<ElementIndex> frontier{table.identity()};
  member[table.identity()] = 1;
  std::vector<ElementIndex> steps;
  for (auto g : generators) {
    steps.push_back(g);
    steps.push_back(table.inverse(g));
  }
  while (!frontier.empty()) {
    std::vector<ElementIndex> next;
    for (auto x : frontier) {
      for (auto s : steps) {
        auto y = table.product(s, x);
        if (!member[y]) {
          member[y] = 1;
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  return member;
}

inline bool generates(const FiniteTable& table, const std::vector<ElementIndex>& generators) {
  auto member = subgroup_closure(table, generators);
  return std::all_of(member.begin(), member.end(), [](char c) { return c != 0; });
}

/// Direct product table; element (a, b) has index a * |right| + b.
inline FiniteTable direct_product(const FiniteTable& left, const FiniteTable& right) {
  const auto nr = static_cast<ElementIndex>(right.size());
  std::vector<std::string> names;
  for (ElementIndex a = 0; a < left.size(); ++a)
    for (ElementIndex b = 0; b < nr; ++b) names.push_back("(" + left.name(a) + "," + right.name(b) + ")");
  return FiniteTable::from_rule(std::move(names), [&](ElementIndex x, ElementIndex y) {
    return left.product(x / nr, y / nr) * nr + right.product(x % nr, y % nr);
  });
}

}  // namespace confgroup
