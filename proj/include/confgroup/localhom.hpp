#pragma once

#include <confgroup/word.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace confgroup {

/// Number of pairs over n slots with 1 <= |J| <= max_len: sum of (2n)^p.
inline double pair_count(std::size_t n, std::size_t max_len) {
  double total = 0, term = 1;
  for (std::size_t p = 1; p <= max_len; ++p) {
    term *= static_cast<double>(2 * n);
    total += term;
  }
  return total;
}

/**
 * All pairs with |J| <= 3 n0, 2 n0 and n0 (every sign pattern), shortlex.
 * The smaller tiers are prefixes of the largest one.
 */
class PairSets {
 public:
  PairSets(std::size_t n, std::size_t n0, std::vector<RepresentativePair> all)
      : n_(n), n0_(n0), all_(std::move(all)) {
    s1_count_ = static_cast<std::size_t>(pair_count(n, 2 * n0));
    s2_count_ = static_cast<std::size_t>(pair_count(n, n0));
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t n0() const noexcept { return n0_; }
  std::vector<RepresentativePair> s0() const { return all_; }
  std::vector<RepresentativePair> s1() const { return {all_.begin(), all_.begin() + static_cast<std::ptrdiff_t>(s1_count_)}; }
  std::vector<RepresentativePair> s2() const { return {all_.begin(), all_.begin() + static_cast<std::ptrdiff_t>(s2_count_)}; }
  std::size_t s0_size() const noexcept { return all_.size(); }
  std::size_t s1_size() const noexcept { return s1_count_; }
  std::size_t s2_size() const noexcept { return s2_count_; }

 private:
  std::size_t n_, n0_;
  std::vector<RepresentativePair> all_;
  std::size_t s1_count_ = 0, s2_count_ = 0;
};

inline PairSets build_pair_sets(std::size_t n, std::size_t n0, double budget = 1e6) {
  if (n == 0 || n0 == 0) fail_input("pair sets need n >= 1 and n0 >= 1");
  if (budget <= 0) fail_input("pair-set budget must be positive");
  const double total = pair_count(n, 3 * n0);
  if (total > budget) {
    fail_budget("pair set S0 has " + std::to_string(static_cast<long long>(total)) + " pairs, over the budget");
  }
  std::vector<RepresentativePair> all;
  all.reserve(static_cast<std::size_t>(total));
  for_each_pair(n, 3 * n0, false, false, [&](const RepresentativePair& p) {
    all.push_back(p);
    return true;
  });
  return PairSets(n, n0, std::move(all));
}

/// Entries (W(p; g), W(p; h)) for every listed pair p: the g-word maps to the h-word.
struct TauRelation {
  OrderedGeneratingSet gens_g;
  OrderedGeneratingSet gens_h;
  std::vector<RepresentativePair> pairs;
  std::vector<std::pair<GroupElement, GroupElement>> entries;
};

inline TauRelation tau_relation(const OrderedGeneratingSet& gens_g, const OrderedGeneratingSet& gens_h,
                                const std::vector<RepresentativePair>& pairs) {
  if (gens_g.size() != gens_h.size()) fail_input("tau relation needs generating tuples of equal length");
  TauRelation rel{gens_g, gens_h, pairs, {}};
  rel.entries.reserve(pairs.size());
  for (const auto& p : pairs) rel.entries.emplace_back(evaluate(p, gens_g), evaluate(p, gens_h));
  return rel;
}

/// Two entries with one G-value and different H-values.
struct TauConflict {
  std::size_t first = 0;   // entry indices
  std::size_t second = 0;
};

/// First conflict in entry order, restricted to G-values accepted by `relevant`.
template <typename Relevant>
std::optional<TauConflict> functional_conflict(const TauRelation& rel, Relevant&& relevant) {
  std::map<GroupElement, std::size_t> first_entry;
  for (std::size_t i = 0; i < rel.entries.size(); ++i) {
    const auto& [g, h] = rel.entries[i];
    if (!relevant(g)) continue;
    auto [it, inserted] = first_entry.emplace(g, i);
    if (!inserted && rel.entries[it->second].second != h) return TauConflict{it->second, i};
  }
  return std::nullopt;
}

inline std::optional<TauConflict> functional_conflict(const TauRelation& rel) {
  return functional_conflict(rel, [](const GroupElement&) { return true; });
}

struct LocalHomResult {
  enum class Verdict { holds, not_functional, violation, undefined };
  Verdict verdict = Verdict::holds;
  std::optional<TauConflict> conflict;     // not_functional
  std::optional<GroupElement> x, y;        // violation or undefined: the offending base elements
  std::optional<GroupElement> missing;     // undefined: element outside the relation's domain
  std::size_t pairs_checked = 0;
};

inline const char* to_string(LocalHomResult::Verdict v) {
  switch (v) {
    case LocalHomResult::Verdict::holds:
      return "holds";
    case LocalHomResult::Verdict::not_functional:
      return "not-functional";
    case LocalHomResult::Verdict::violation:
      return "violation";
    case LocalHomResult::Verdict::undefined:
      return "undefined";
  }
  return "unknown";
}

/**
 * phi(x y^-1) = phi(x) phi(y)^-1 for all x, y in base, with phi read off the
 * relation. Functionality on base and base.base^-1 is checked first.
 */
inline LocalHomResult is_local_homomorphism(const TauRelation& rel, const std::vector<GroupElement>& base) {
  const Group& g = rel.gens_g.group();
  const Group& h = rel.gens_h.group();
  std::map<GroupElement, char> relevant;
  for (const auto& x : base) {
    g.check_member(x);
    relevant.emplace(x, 1);
    for (const auto& y : base) relevant.emplace(g.multiply(x, g.invert(y)), 1);
  }
  LocalHomResult result;
  if (auto c = functional_conflict(rel, [&](const GroupElement& e) { return relevant.count(e) > 0; })) {
    result.verdict = LocalHomResult::Verdict::not_functional;
    result.conflict = c;
    return result;
  }
  std::map<GroupElement, GroupElement> phi;
  for (const auto& [a, b] : rel.entries) phi.emplace(a, b);
  for (const auto& x : base) {
    for (const auto& y : base) {
      ++result.pairs_checked;
      const auto xy = g.multiply(x, g.invert(y));
      for (const auto* e : {&x, &y, &xy}) {
        if (!phi.count(*e)) {
          result.verdict = LocalHomResult::Verdict::undefined;
          result.x = x;
          result.y = y;
          result.missing = *e;
          return result;
        }
      }
      if (phi.at(xy) != h.multiply(phi.at(x), h.invert(phi.at(y)))) {
        result.verdict = LocalHomResult::Verdict::violation;
        result.x = x;
        result.y = y;
        return result;
      }
    }
  }
  return result;
}

struct EpimorphismResult {
  bool holds = true;
  std::optional<RepresentativePair> witness;  // shortlex-first pair with W(g) = e, W(h) != e
  std::size_t states = 0;                     // distinct (W(g), W(h)) reached
};

/**
 * W(J, rho; g) = e implies W(J, rho; h) = e for every pair with |J| <= max_len.
 * Breadth-first over the reachable (W(g), W(h)) states, letters in rank
 * order, so the first bad state found carries the shortlex-first witness.
 */
inline EpimorphismResult is_bounded_epimorphism(const OrderedGeneratingSet& gens_g, const OrderedGeneratingSet& gens_h,
                                                std::size_t max_len) {
  if (gens_g.size() != gens_h.size()) fail_input("generating tuples must have equal length");
  const Group& g = gens_g.group();
  const Group& h = gens_h.group();
  const std::size_t n = gens_g.size();
  std::vector<GroupElement> lg, lh;
  for (std::size_t r = 0; r < 2 * n; ++r) {
    const auto l = letter_of_rank(r);
    lg.push_back(l.sign > 0 ? gens_g[l.index - 1] : g.invert(gens_g[l.index - 1]));
    lh.push_back(l.sign > 0 ? gens_h[l.index - 1] : h.invert(gens_h[l.index - 1]));
  }
  struct Node {
    GroupElement a, b;
    std::size_t parent;
    std::size_t rank;
    std::size_t depth;
  };
  std::vector<Node> nodes{{g.identity(), h.identity(), 0, 0, 0}};
  std::map<std::pair<GroupElement, GroupElement>, std::size_t> seen{{{g.identity(), h.identity()}, 0}};
  EpimorphismResult result;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].depth == max_len) continue;
    for (std::size_t r = 0; r < 2 * n; ++r) {
      auto a = g.multiply(nodes[i].a, lg[r]);
      auto b = h.multiply(nodes[i].b, lh[r]);
      if (!seen.emplace(std::make_pair(a, b), nodes.size()).second) continue;
      const bool bad = g.is_identity(a) && !h.is_identity(b);
      nodes.push_back({std::move(a), std::move(b), i, r, nodes[i].depth + 1});
      if (bad) {
        std::vector<Letter> letters;
        for (std::size_t k = nodes.size() - 1; k != 0; k = nodes[k].parent) letters.push_back(letter_of_rank(nodes[k].rank));
        std::reverse(letters.begin(), letters.end());
        result.holds = false;
        result.witness = RepresentativePair(n, std::move(letters));
        result.states = nodes.size();
        return result;
      }
    }
  }
  result.states = nodes.size();
  return result;
}

/**
 * A pair (I, delta), |I| <= max_len, separating the conjugations by W(p1) and
 * W(p2): W(p1 + I + p1^-1) != W(p2 + I + p2^-1). Shortlex, so single letters
 * come first.
 */
inline std::optional<RepresentativePair> inner_separation_witness(const OrderedGeneratingSet& gens,
                                                                  const RepresentativePair& p1,
                                                                  const RepresentativePair& p2, std::size_t max_len) {
  if (p1.n() != gens.size() || p2.n() != gens.size()) fail_input("pairs do not match the generating set");
  const auto inv1 = inverse_pair(p1);
  const auto inv2 = inverse_pair(p2);
  std::optional<RepresentativePair> found;
  for_each_pair(gens.size(), max_len, false, false, [&](const RepresentativePair& i) {
    if (evaluate(concat(concat(p1, i), inv1), gens) != evaluate(concat(concat(p2, i), inv2), gens)) {
      found = i;
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace confgroup
