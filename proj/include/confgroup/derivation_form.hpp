#pragma once

#include <confgroup/word.hpp>

#include <memory>
#include <set>
#include <vector>

namespace confgroup {

/**
 * Deterministic stream of representative pairs in kth derivation form.
 *
 * Level 0 is every nonempty reduced pair in shortlex order. Level j is
 * built from level j-1 by taking commutator_pair(a_i, a_t) over index pairs
 * i < t ordered by i + t, then i; each result is freely reduced and kept if
 * nontrivial and not seen before. Every level-k item evaluates into G^(k)
 * for any generating set of any group.
 */
class DerivationFormStream {
 public:
  DerivationFormStream(std::size_t n, std::size_t k) : n_(n), k_(k) {
    if (n == 0 || k == 0) fail_input("derivation_form_pairs needs n >= 1 and k >= 1");
    levels_.resize(k + 1);
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t depth() const noexcept { return k_; }

  /// F_1 is abelian, so for n = 1 every derivation-form word is trivial and nothing is emitted.
  bool exhausted() const noexcept { return n_ == 1; }

  /// The i-th emitted pair; computes lazily. Restartable: at(i) is stable.
  const RepresentativePair& at(std::size_t i) {
    if (exhausted()) fail_input("no nontrivial derivation-form pairs over a single generator");
    return item(k_, i);
  }

 private:
  struct Level {
    std::vector<RepresentativePair> items;
    std::set<RepresentativePair> seen;
    // Diagonal cursor for levels >= 1.
    std::size_t sum = 1;
    std::size_t first = 0;
    // Shortlex cursor for level 0.
    std::size_t length = 1;
    std::vector<std::size_t> ranks{0};
  };

  const RepresentativePair& item(std::size_t level, std::size_t i) {
    auto& l = levels_[level];
    while (l.items.size() <= i) {
      if (level == 0) {
        advance_base(l);
      } else {
        advance_commutators(level);
      }
    }
    return l.items[i];
  }

  void advance_base(Level& l) {
    while (true) {
      bool reduced = true;
      for (std::size_t t = 1; t < l.ranks.size() && reduced; ++t) reduced = (l.ranks[t] ^ 1) != l.ranks[t - 1];
      std::vector<Letter> letters;
      for (auto r : l.ranks) letters.push_back(letter_of_rank(r));
      step_ranks(l);
      if (reduced) {
        l.items.emplace_back(n_, std::move(letters));
        return;
      }
    }
  }

  void step_ranks(Level& l) {
    std::size_t pos = l.ranks.size();
    while (pos > 0 && ++l.ranks[pos - 1] == 2 * n_) l.ranks[--pos] = 0;
    if (pos == 0) {
      ++l.length;
      l.ranks.assign(l.length, 0);
    }
  }

  void advance_commutators(std::size_t level) {
    while (true) {
      auto& l = levels_[level];
      const std::size_t i = l.first;
      const std::size_t t = l.sum - l.first;
      if (i >= t) {
        ++l.sum;
        l.first = 0;
        continue;
      }
      ++l.first;
      // Copies: item() may grow the lower level's vector.
      RepresentativePair a = item(level - 1, i);
      RepresentativePair b = item(level - 1, t);
      auto c = free_reduce(commutator_pair(a, b));
      auto& cur = levels_[level];
      if (c.is_empty() || !cur.seen.insert(c).second) continue;
      cur.items.push_back(std::move(c));
      return;
    }
  }

  std::size_t n_;
  std::size_t k_;
  std::vector<Level> levels_;
};

/// Pairs start .. start+budget-1 of the level-k stream.
inline std::vector<RepresentativePair> derivation_form_pairs(std::size_t n, std::size_t k, std::size_t budget,
                                                             std::size_t start = 0) {
  if (budget == 0) fail_input("derivation_form_pairs needs budget >= 1");
  DerivationFormStream stream(n, k);
  std::vector<RepresentativePair> out;
  if (stream.exhausted()) return out;
  for (std::size_t i = 0; i < budget; ++i) out.push_back(stream.at(start + i));
  return out;
}

}  // namespace confgroup
