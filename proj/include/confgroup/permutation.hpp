#pragma once

#include <confgroup/error.hpp>
#include <confgroup/finite_table.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace confgroup {

/// Image array on points 0..degree-1.
using Permutation = std::vector<std::uint32_t>;

/// (a * b)(i) = a(b(i)): b acts first.
inline Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
  return out;
}

inline Permutation identity_permutation(std::size_t degree) {
  Permutation p(degree);
  for (std::size_t i = 0; i < degree; ++i) p[i] = static_cast<std::uint32_t>(i);
  return p;
}

/// Cycle notation on 1-based points, e.g. "(1,2,3)(4,5)"; identity is "()".
inline std::string format_cycles(const Permutation& p) {
  std::string out;
  std::vector<char> done(p.size(), 0);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (done[start] || p[start] == start) continue;
    out += '(';
    std::size_t i = start;
    bool first = true;
    while (!done[i]) {
      done[i] = 1;
      if (!first) out += ',';
      out += std::to_string(i + 1);
      first = false;
      i = p[i];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

inline Permutation parse_cycles(const std::string& text, std::size_t degree) {
  Permutation p = identity_permutation(degree);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') fail_input("bad cycle notation '" + text + "'");
    ++pos;
    std::vector<std::uint32_t> cycle;
    while (true) {
      skip_space();
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t end = pos;
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
      if (end == pos) fail_input("bad cycle notation '" + text + "'");
      auto point = std::stoul(text.substr(pos, end - pos));
      if (point < 1 || point > degree) fail_input("cycle point out of range in '" + text + "'");
      cycle.push_back(static_cast<std::uint32_t>(point - 1));
      pos = end;
      skip_space();
      if (pos < text.size() && text[pos] == ',') ++pos;
    }
    std::set<std::uint32_t> distinct(cycle.begin(), cycle.end());
    if (distinct.size() != cycle.size()) fail_input("repeated point in cycle '" + text + "'");
    // Cycles compose right-to-left, matching compose().
    Permutation c = identity_permutation(degree);
    for (std::size_t i = 0; i < cycle.size(); ++i) c[cycle[i]] = cycle[(i + 1) % cycle.size()];
    p = compose(p, c);
    skip_space();
  }
  return p;
}

/// Closure of the generators, sorted lexicographically by image array
/// (so the identity comes first), together with its Cayley table.
struct PermutationGroupData {
  std::size_t degree = 0;
  std::vector<Permutation> elements;
  FiniteTable table;
};

inline PermutationGroupData build_permutation_group(std::size_t degree,
                                                    const std::vector<Permutation>& generators) {
  for (const auto& g : generators) {
    if (g.size() != degree) fail_input("generator degree mismatch");
    std::vector<char> hit(degree, 0);
    for (auto v : g) {
      if (v >= degree || hit[v]) fail_input("generator is not a permutation");
      hit[v] = 1;
    }
  }
  std::set<Permutation> seen{identity_permutation(degree)};
  std::vector<Permutation> frontier{identity_permutation(degree)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier) {
      for (const auto& g : generators) {
        auto y = compose(g, x);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Permutation> elements(seen.begin(), seen.end());
  std::map<Permutation, ElementIndex> index;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    index.emplace(elements[i], static_cast<ElementIndex>(i));
    names.push_back(format_cycles(elements[i]));
  }
  auto table = FiniteTable::from_rule(std::move(names), [&](ElementIndex a, ElementIndex b) {
    return index.at(compose(elements[a], elements[b]));
  });
  return PermutationGroupData{degree, std::move(elements), std::move(table)};
}

}  // namespace confgroup
