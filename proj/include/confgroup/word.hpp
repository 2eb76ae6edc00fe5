#pragma once

#include <confgroup/error.hpp>
#include <confgroup/generating_set.hpp>
#include <confgroup/group.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace confgroup {

/// One position of a representative pair: generator index J(i) (1-based) and sign rho(i).
struct Letter {
  std::uint32_t index = 1;
  int sign = 1;

  auto operator<=>(const Letter&) const = default;

  Letter inverse() const { return Letter{index, -sign}; }
};

/// Enumeration order of letters: (1,+1) < (1,-1) < (2,+1) < ...
inline std::size_t letter_rank(const Letter& l) { return 2 * (l.index - 1) + (l.sign < 0 ? 1 : 0); }

inline Letter letter_of_rank(std::size_t rank) {
  return Letter{static_cast<std::uint32_t>(rank / 2 + 1), rank % 2 == 0 ? 1 : -1};
}

/**
 * Symbolic word (J, rho) over n generator slots. Evaluating it against an
 * ordered generating set g gives the product of g_{J(i)}^{rho(i)}.
 */
class RepresentativePair {
 public:
  RepresentativePair() = default;

  RepresentativePair(std::size_t n, std::vector<Letter> letters) : n_(n), letters_(std::move(letters)) {
    if (n_ == 0) fail_input("representative pair needs at least one generator slot");
    for (const auto& l : letters_) {
      if (l.index < 1 || l.index > n_) fail_input("pair index " + std::to_string(l.index) + " outside 1.." + std::to_string(n_));
      if (l.sign != 1 && l.sign != -1) fail_input("pair sign must be +1 or -1");
    }
  }

  static RepresentativePair from_tuples(std::size_t n, const std::vector<std::uint32_t>& J, const std::vector<int>& rho) {
    if (J.size() != rho.size()) fail_input("J and rho must have the same number of components");
    std::vector<Letter> letters;
    for (std::size_t i = 0; i < J.size(); ++i) letters.push_back(Letter{J[i], rho[i]});
    return RepresentativePair(n, std::move(letters));
  }

  static RepresentativePair empty(std::size_t n) { return RepresentativePair(n, {}); }

  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool is_empty() const noexcept { return letters_.empty(); }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  const Letter& operator[](std::size_t i) const { return letters_.at(i); }

  std::vector<std::uint32_t> J() const {
    std::vector<std::uint32_t> out;
    for (const auto& l : letters_) out.push_back(l.index);
    return out;
  }

  std::vector<int> rho() const {
    std::vector<int> out;
    for (const auto& l : letters_) out.push_back(l.sign);
    return out;
  }

  auto operator<=>(const RepresentativePair&) const = default;

 private:
  std::size_t n_ = 1;
  std::vector<Letter> letters_;
};

/// "+1 -2 +1" means J = (1,2,1), rho = (+1,-1,+1). The empty pair prints as "".
inline std::string format_pair(const RepresentativePair& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ' ';
    out += (p[i].sign > 0 ? '+' : '-');
    out += std::to_string(p[i].index);
  }
  return out;
}

inline RepresentativePair parse_pair(const std::string& text, std::size_t n) {
  std::istringstream in(text);
  std::string token;
  std::vector<Letter> letters;
  while (in >> token) {
    if (token.size() < 2 || (token[0] != '+' && token[0] != '-')) fail_input("bad signed index '" + token + "' (expected e.g. +1 or -2)");
    std::uint32_t index = 0;
    for (std::size_t i = 1; i < token.size(); ++i) {
      if (token[i] < '0' || token[i] > '9') fail_input("bad signed index '" + token + "'");
      index = index * 10 + static_cast<std::uint32_t>(token[i] - '0');
    }
    letters.push_back(Letter{index, token[0] == '+' ? 1 : -1});
  }
  return RepresentativePair(n, std::move(letters));
}

/// Substitutes values[i-1] for slot i; the values need not generate.
inline GroupElement evaluate_on(const RepresentativePair& p, const Group& group, const std::vector<GroupElement>& values) {
  if (p.n() != values.size()) {
    fail_input("pair has " + std::to_string(p.n()) + " slots but " + std::to_string(values.size()) + " values were given");
  }
  GroupElement out = group.identity();
  for (const auto& l : p.letters()) {
    const auto& g = values[l.index - 1];
    out = group.multiply(out, l.sign > 0 ? g : group.invert(g));
  }
  return out;
}

inline GroupElement evaluate(const RepresentativePair& p, const OrderedGeneratingSet& gens) {
  if (p.n() != gens.size()) {
    fail_input("pair has " + std::to_string(p.n()) + " slots but the generating set has " + std::to_string(gens.size()));
  }
  return evaluate_on(p, gens.group(), gens.elements());
}

/// Index-level evaluation for finite engines (no GroupElement allocation).
inline ElementIndex evaluate_index(const RepresentativePair& p, const FiniteTable& table,
                                   const std::vector<ElementIndex>& gens) {
  ElementIndex out = table.identity();
  for (const auto& l : p.letters()) {
    auto g = gens.at(l.index - 1);
    out = table.product(out, l.sign > 0 ? g : table.inverse(g));
  }
  return out;
}

inline RepresentativePair concat(const RepresentativePair& a, const RepresentativePair& b) {
  if (a.n() != b.n()) fail_input("concat: pairs have different ambient generator counts");
  auto letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return RepresentativePair(a.n(), std::move(letters));
}

/// (J^-1, rho^-1): reversed indices, reversed and negated signs.
inline RepresentativePair inverse_pair(const RepresentativePair& p) {
  std::vector<Letter> letters;
  for (auto it = p.letters().rbegin(); it != p.letters().rend(); ++it) letters.push_back(it->inverse());
  return RepresentativePair(p.n(), std::move(letters));
}

/// ([J,I], [rho,delta]) = J^-1 + I^-1 + J + I, evaluating to [x, y] = x^-1 y^-1 x y.
inline RepresentativePair commutator_pair(const RepresentativePair& p, const RepresentativePair& q) {
  return concat(concat(inverse_pair(p), inverse_pair(q)), concat(p, q));
}

/// No adjacent positions with equal index and opposite sign.
inline bool is_reduced(const RepresentativePair& p) {
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (p[i].index == p[i - 1].index && p[i].sign != p[i - 1].sign) return false;
  }
  return true;
}

inline RepresentativePair free_reduce(const RepresentativePair& p) {
  std::vector<Letter> stack;
  for (const auto& l : p.letters()) {
    if (!stack.empty() && stack.back() == l.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return RepresentativePair(p.n(), std::move(stack));
}

/// Membership of the free-group word in [F_n, F_n]: every exponent sum vanishes.
inline bool is_first_derivation_form(const RepresentativePair& p) {
  std::vector<long> sums(p.n() + 1, 0);
  for (const auto& l : p.letters()) sums[l.index] += l.sign;
  for (auto s : sums)
    if (s != 0) return false;
  return true;
}

/**
 * Visits every pair over n slots with 1 <= length <= max_len (length 0 too when
 * `include_empty`), shortlex in letter_rank order. The visitor returns false to stop.
 * With `reduced_only`, pairs containing a cancelling adjacent letter are skipped.
 */
inline void for_each_pair(std::size_t n, std::size_t max_len, bool include_empty, bool reduced_only,
                          const std::function<bool(const RepresentativePair&)>& visit) {
  if (include_empty && !visit(RepresentativePair::empty(n))) return;
  const std::size_t alphabet = 2 * n;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::size_t> ranks(len, 0);
    while (true) {
      bool ok = true;
      if (reduced_only) {
        for (std::size_t i = 1; i < len && ok; ++i) ok = (ranks[i] ^ 1) != ranks[i - 1];
      }
      if (ok) {
        std::vector<Letter> letters;
        letters.reserve(len);
        for (auto r : ranks) letters.push_back(letter_of_rank(r));
        if (!visit(RepresentativePair(n, std::move(letters)))) return;
      }
      std::size_t pos = len;
      while (pos > 0 && ++ranks[pos - 1] == alphabet) ranks[--pos] = 0;
      if (pos == 0) break;
    }
  }
}

}  // namespace confgroup
