#pragma once

#include <confgroup/partition.hpp>
#include <confgroup/word.hpp>

#include <functional>
#include <string>
#include <vector>

namespace confgroup {

/// A configuration pair proposed as golden, with {e} as one of its blocks.
struct GoldenCandidate {
  enum class Family { free_first_letter, znf_sign, dinf_five, user_supplied };

  Family family = Family::user_supplied;
  OrderedGeneratingSet gens;
  Partition part;
  Label identity_label = 1;
  std::vector<std::pair<std::string, std::string>> params;

  const Group& group() const { return gens.group(); }
};

inline const char* family_name(GoldenCandidate::Family f) {
  switch (f) {
    case GoldenCandidate::Family::free_first_letter:
      return "free-first-letter";
    case GoldenCandidate::Family::znf_sign:
      return "znf-sign";
    case GoldenCandidate::Family::dinf_five:
      return "dinf-five";
    case GoldenCandidate::Family::user_supplied:
      return "user-supplied";
  }
  return "unknown";
}

struct GoldenViolation {
  std::string check;   // which relation or implication failed
  std::string pair;    // signed-index text, when a pair is involved
  std::string value;   // evaluation under the candidate's generators
  std::string rival;   // evaluation under the rival generators
  std::string element; // element where the failure shows
  std::string image;   // its image
};

struct GoldenReport {
  std::string family;
  std::vector<std::pair<std::string, std::string>> params;
  std::string check;
  std::size_t checked = 0;
  std::size_t max_len = 0;
  std::size_t radius = 0;
  std::size_t violation_count = 0;
  std::vector<GoldenViolation> violations;  // first kMaxListed are listed

  static constexpr std::size_t kMaxListed = 50;

  bool passed() const noexcept { return violation_count == 0; }

  void record(GoldenViolation v) {
    ++violation_count;
    if (violations.size() < kMaxListed) violations.push_back(std::move(v));
  }
};

// --- free group F_n: E_0 = {e}, E_k / E_-k = reduced words starting with f_k / f_k^-1.
// Labels: E_0 -> 1, E_k -> 1 + k, E_-k -> 1 + n + k.

inline Label free_block_label(std::size_t n, int first_letter) {
  if (first_letter == 0) return 1;
  return first_letter > 0 ? static_cast<Label>(1 + first_letter) : static_cast<Label>(1 + n - first_letter);
}

inline GoldenCandidate free_group_partition(std::size_t n) {
  if (n < 2) fail_input("free-group golden partition needs rank n >= 2");
  Group f = Group::free(n);
  auto part = Partition::symbolic(f, "free-first-letter", {{"rank", std::to_string(n)}}, 2 * n + 1,
                                  [n](const GroupElement& g) {
                                    const auto& w = g.as<FreeWord>().letters;
                                    return free_block_label(n, w.empty() ? 0 : w.front());
                                  });
  return GoldenCandidate{GoldenCandidate::Family::free_first_letter, OrderedGeneratingSet::standard(f), part, 1,
                         {{"rank", std::to_string(n)}}};
}

// --- D_inf = <x, y | x^2 = y^2 = 1>: E1 = {e}, E2 = {x}, E3 = {y},
// E4 / E5 = alternating words of length > 1 starting with x / y.

inline GoldenCandidate dinf_partition() {
  Group d = Group::infinite_dihedral();
  auto part = Partition::symbolic(d, "dinf-five-block", {}, 5, [](const GroupElement& g) -> Label {
    const auto& w = g.as<DihedralWord>().letters;
    if (w.empty()) return 1;
    if (w.size() == 1) return w[0] == 'x' ? 2 : 3;
    return w[0] == 'x' ? 4 : 5;
  });
  return GoldenCandidate{GoldenCandidate::Family::dinf_five, OrderedGeneratingSet::standard(d), part, 1, {}};
}

// --- Z^n x F: atoms of the sigma-algebra generated by {g_i}, {g_i g_j} (1 <= i, j <= n)
// and E(tau, j) = tau(1)N x ... x tau(n)N x {x_j}, with N = {1, 2, ...}.

/// Atom layout of the Z^n x F candidate.
class ZnfAtoms {
 public:
  ZnfAtoms(std::size_t n, const FiniteTable& f) : n_(n), f_size_(f.size()), identity_(f.identity()) {
    // F listed as x_0 = e_F, then the remaining elements in table order.
    order_.push_back(identity_);
    for (ElementIndex i = 0; i < f.size(); ++i)
      if (i != identity_) order_.push_back(i);
    position_.resize(f.size());
    for (std::size_t j = 0; j < order_.size(); ++j) position_[order_[j]] = j;
    std::size_t tau_count = 1;
    for (std::size_t i = 0; i < n; ++i) tau_count *= 3;
    tau_count_ = tau_count;
  }

  std::size_t n() const noexcept { return n_; }
  const std::vector<ElementIndex>& finite_order() const noexcept { return order_; }

  /// 1 (identity) + n singletons {g_i} + n(n+1)/2 singletons {g_i g_j} + remainders of E(tau, j).
  std::size_t atom_count() const noexcept { return 1 + n_ + n_ * (n_ + 1) / 2 + tau_count_ * f_size_ - 1; }

  Label classify(const ProductElement& p) const {
    const auto& v = p.coords;
    if (p.finite == identity_) {
      std::size_t nonzero = 0, sum = 0;
      std::vector<std::size_t> ones;
      bool small_positive = true;
      for (std::size_t i = 0; i < n_; ++i) {
        if (v[i] != 0) ++nonzero;
        if (v[i] < 0 || v[i] > 2) small_positive = false;
        if (v[i] > 0) sum += static_cast<std::size_t>(v[i]);
        for (std::int64_t c = 0; c < v[i] && c < 2; ++c) ones.push_back(i);
      }
      if (nonzero == 0) return 1;
      if (small_positive && sum == 1) return static_cast<Label>(2 + ones[0]);
      if (small_positive && sum == 2) return static_cast<Label>(2 + n_ + pair_index(ones[0], ones[1]));
    }
    // tau in {-1,0,1}^n, read as a base-3 number with digit tau(i)+1, most significant first.
    std::size_t tau = 0;
    for (std::size_t i = 0; i < n_; ++i) tau = tau * 3 + static_cast<std::size_t>((v[i] > 0) - (v[i] < 0) + 1);
    std::size_t slot = tau * f_size_ + position_[p.finite];
    std::size_t zero_slot = zero_tau() * f_size_;  // E(0, 0) = {identity}, handled above
    if (slot > zero_slot) --slot;
    return static_cast<Label>(2 + n_ + n_ * (n_ + 1) / 2 + slot);
  }

 private:
  std::size_t zero_tau() const {
    std::size_t t = 0;
    for (std::size_t i = 0; i < n_; ++i) t = t * 3 + 1;
    return t;
  }

  /// Index of {i, j}, i <= j, in lexicographic order.
  std::size_t pair_index(std::size_t i, std::size_t j) const {
    std::size_t idx = 0;
    for (std::size_t a = 0; a < i; ++a) idx += n_ - a;
    return idx + (j - i);
  }

  std::size_t n_;
  std::size_t f_size_;
  ElementIndex identity_;
  std::size_t tau_count_ = 1;
  std::vector<ElementIndex> order_;
  std::vector<std::size_t> position_;
};

/// Sign-pattern atoms over an existing product group Z^n x F.
inline Partition znf_partition(const Group& g) {
  if (g.kind() != Group::Kind::product_zn_f) fail_input("znf atoms need a product-zn-f group");
  ZnfAtoms atoms(g.rank(), g.table());
  Partition::Params params{{"rank", std::to_string(g.rank())}, {"finite_order", std::to_string(g.table().size())}};
  return Partition::symbolic(g, "znf-sign-atoms", params, atoms.atom_count(),
                             [atoms](const GroupElement& e) { return atoms.classify(e.as<ProductElement>()); });
}

/// Generators (e_i, e_F) for i = 1..n, then (0, x_j) for the non-identity x_j.
inline OrderedGeneratingSet znf_generators(const Group& g) {
  ZnfAtoms atoms(g.rank(), g.table());
  std::vector<GroupElement> gens;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    ProductElement e{std::vector<std::int64_t>(g.rank(), 0), g.table().identity()};
    e.coords[i] = 1;
    gens.push_back(e);
  }
  for (std::size_t j = 1; j < atoms.finite_order().size(); ++j) {
    gens.push_back(ProductElement{std::vector<std::int64_t>(g.rank(), 0), atoms.finite_order()[j]});
  }
  return OrderedGeneratingSet(g, std::move(gens));
}

inline GoldenCandidate znf_sigma_candidate(std::size_t n, const Group& finite) {
  if (n == 0) fail_input("znf candidate needs n >= 1");
  Group g = Group::product(n, finite);
  auto part = znf_partition(g);
  return GoldenCandidate{GoldenCandidate::Family::znf_sign, znf_generators(g), part, 1,
                         {{"rank", std::to_string(n)}, {"finite", finite.label()}}};
}

/// Calls visit(word) for every reduced word of F_n of length <= radius (depth first).
inline void for_each_free_word(std::size_t n, std::size_t radius, const std::function<void(const FreeWord&)>& visit) {
  FreeWord w;
  std::function<void()> rec = [&] {
    visit(w);
    if (w.letters.size() == radius) return;
    for (int k = 1; k <= static_cast<int>(n); ++k) {
      for (int l : {k, -k}) {
        if (!w.letters.empty() && w.letters.back() == -l) continue;
        w.letters.push_back(l);
        rec();
        w.letters.pop_back();
      }
    }
  };
  rec();
}

/**
 * Checks f_k(F_n \ E_-k) = E_k and f_k E_-k = F_n \ E_k on ball(radius):
 * both images of every w in the ball, and both preimages of every u in the
 * ball, must fall on the correct side. Elements the partition cannot
 * classify are skipped.
 */
inline GoldenReport verify_translation_relations(const GoldenCandidate& c, std::size_t radius) {
  if (c.family != GoldenCandidate::Family::free_first_letter) fail_input("translation relations are defined for the free-group family");
  const std::size_t n = c.group().rank();
  GoldenReport report;
  report.family = family_name(c.family);
  report.params = c.params;
  report.check = "translation-relations";
  report.radius = radius;
  const Group& group = c.group();
  for_each_free_word(n, radius, [&](const FreeWord& word) {
    const GroupElement w = word;
    auto lw = c.part.try_classify(w);
    if (!lw) return;
    for (int k = 1; k <= static_cast<int>(n); ++k) {
      const Label plus = free_block_label(n, k), minus = free_block_label(n, -k);
      const GroupElement fk = FreeWord{{k}};
      ++report.checked;
      // Forward: w in F \ E_-k  <=>  f_k w in E_k.
      auto image = group.multiply(fk, w);
      if (auto li = c.part.try_classify(image)) {
        bool in_minus = *lw == minus, lands_plus = *li == plus;
        if (in_minus == lands_plus) {
          report.record({in_minus ? "f_k E_-k = F \\ E_k" : "f_k (F \\ E_-k) = E_k", "", "f" + std::to_string(k), "",
                         group.format(w), group.format(image)});
        }
      }
      // Reverse: u in E_k  <=>  f_k^-1 u not in E_-k.
      auto pre = group.multiply(group.invert(fk), w);
      if (auto lp = c.part.try_classify(pre)) {
        bool in_plus = *lw == plus, from_minus = *lp == minus;
        if (in_plus == from_minus) {
          report.record({in_plus ? "f_k (F \\ E_-k) = E_k" : "f_k E_-k = F \\ E_k", "", "f" + std::to_string(k), "",
                         group.format(w), group.format(pre)});
        }
      }
    }
  });
  return report;
}

/**
 * For every reduced pair with 1 <= |J| <= max_len and W(J, rho; g) != e,
 * checks W(J, rho; g') E' and E' are disjoint inside ball(radius), where E'
 * is the rival block carrying the candidate's identity label.
 */
inline GoldenReport verify_golden_implication(const GoldenCandidate& c, const OrderedGeneratingSet& rival_gens,
                                              const Partition& rival_part, std::size_t max_len, std::size_t radius) {
  if (rival_gens.size() != c.gens.size()) fail_input("rival generating set has a different length");
  if (c.identity_label > rival_part.block_count()) fail_input("rival partition has no block corresponding to {e}");
  const Group& group = c.group();
  const Group& rival = rival_gens.group();
  GoldenReport report;
  report.family = family_name(c.family);
  report.params = c.params;
  report.check = "golden-implication";
  report.max_len = max_len;
  report.radius = radius;
  std::vector<GroupElement> identity_block;
  for (const auto& x : ball(OrderedGeneratingSet::standard(rival), radius)) {
    if (rival_part.try_classify(x) == c.identity_label) identity_block.push_back(x);
  }
  for_each_pair(c.gens.size(), max_len, false, true, [&](const RepresentativePair& p) {
    auto w = evaluate(p, c.gens);
    if (group.is_identity(w)) return true;
    ++report.checked;
    auto wr = evaluate(p, rival_gens);
    for (const auto& x : identity_block) {
      auto y = rival.multiply(wr, x);
      if (rival_part.try_classify(y) == c.identity_label) {
        report.record({"W(J,rho;g') E' meets E'", format_pair(p), group.format(w), rival.format(wr), rival.format(x),
                       rival.format(y)});
        break;
      }
    }
    return true;
  });
  return report;
}

/// Every nonempty reduced pair evaluates in F_n into E_{rho(1) J(1)}.
inline GoldenReport free_block_absorption_check(std::size_t n, std::size_t max_len) {
  auto c = free_group_partition(n);
  GoldenReport report;
  report.family = family_name(c.family);
  report.params = c.params;
  report.check = "block-absorption";
  report.max_len = max_len;
  for_each_pair(n, max_len, false, true, [&](const RepresentativePair& p) {
    ++report.checked;
    auto w = evaluate(p, c.gens);
    const int first = static_cast<int>(p[0].index) * p[0].sign;
    const Label expected = free_block_label(n, first);
    const Label got = c.part.classify(w);
    if (got != expected) {
      report.record({"W(J,rho;f) F_0 in F_rho(1)J(1)", format_pair(p), c.group().format(w), "", "e",
                     "block " + std::to_string(got) + " instead of " + std::to_string(expected)});
    }
    return true;
  });
  return report;
}

/**
 * Block membership from first principles, independent of the classifiers:
 * predicates[l-1](g) says whether g lies in block l.
 */
inline std::vector<std::function<bool(const GroupElement&)>> block_predicates(const GoldenCandidate& c) {
  using Pred = std::function<bool(const GroupElement&)>;
  std::vector<Pred> preds;
  switch (c.family) {
    case GoldenCandidate::Family::free_first_letter: {
      const int n = static_cast<int>(c.group().rank());
      preds.push_back([](const GroupElement& g) { return g.as<FreeWord>().letters.empty(); });
      for (int sign : {1, -1})
        for (int k = 1; k <= n; ++k)
          preds.push_back([k, sign](const GroupElement& g) {
            const auto& w = g.as<FreeWord>().letters;
            return !w.empty() && w.front() == sign * k;
          });
      break;
    }
    case GoldenCandidate::Family::dinf_five: {
      preds.push_back([](const GroupElement& g) { return g.as<DihedralWord>().letters.empty(); });
      preds.push_back([](const GroupElement& g) { return g.as<DihedralWord>().letters == "x"; });
      preds.push_back([](const GroupElement& g) { return g.as<DihedralWord>().letters == "y"; });
      for (char start : {'x', 'y'})
        preds.push_back([start](const GroupElement& g) {
          const auto& w = g.as<DihedralWord>().letters;
          return w.size() > 1 && w[0] == start;
        });
      break;
    }
    case GoldenCandidate::Family::znf_sign: {
      const Group& group = c.group();
      const std::size_t n = group.rank();
      // Singletons {e}, {g_i}, {g_i g_j}; then E(tau, j) minus those singletons.
      std::vector<GroupElement> singletons{group.identity()};
      for (std::size_t i = 0; i < n; ++i) singletons.push_back(c.gens[i]);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) singletons.push_back(group.multiply(c.gens[i], c.gens[j]));
      for (const auto& s : singletons) preds.push_back([s](const GroupElement& g) { return g == s; });
      ZnfAtoms layout(n, group.table());
      std::vector<int> tau(n, -1);
      while (true) {
        for (auto x : layout.finite_order()) {
          bool zero = std::all_of(tau.begin(), tau.end(), [](int t) { return t == 0; });
          if (zero && x == group.table().identity()) continue;
          preds.push_back([tau, x, singletons](const GroupElement& g) {
            const auto& p = g.as<ProductElement>();
            if (p.finite != x) return false;
            for (std::size_t i = 0; i < tau.size(); ++i) {
              if ((p.coords[i] > 0 ? 1 : p.coords[i] < 0 ? -1 : 0) != tau[i]) return false;
            }
            return std::find(singletons.begin(), singletons.end(), g) == singletons.end();
          });
        }
        std::size_t pos = n;
        while (pos > 0 && ++tau[pos - 1] == 2) tau[--pos] = -1;
        if (pos == 0) break;
      }
      break;
    }
    case GoldenCandidate::Family::user_supplied:
      fail_input("no first-principles block predicates for user-supplied candidates");
  }
  return preds;
}

/**
 * Checks on ball(radius) that the first-principles blocks are pairwise
 * disjoint, jointly cover the ball, and agree with the classifier.
 */
inline GoldenReport partition_coverage_check(const GoldenCandidate& c, std::size_t radius) {
  GoldenReport report;
  report.family = family_name(c.family);
  report.params = c.params;
  report.check = "partition-coverage";
  report.radius = radius;
  auto preds = block_predicates(c);
  if (preds.size() != c.part.block_count()) {
    report.record({"block count", "", std::to_string(preds.size()), std::to_string(c.part.block_count()), "", ""});
  }
  for (const auto& g : ball(OrderedGeneratingSet::standard(c.group()), radius)) {
    ++report.checked;
    std::vector<Label> hits;
    for (std::size_t l = 0; l < preds.size(); ++l)
      if (preds[l](g)) hits.push_back(static_cast<Label>(l + 1));
    const Label got = c.part.classify(g);
    if (hits.size() != 1) {
      report.record({hits.empty() ? "not covered" : "blocks overlap", "", "", "", c.group().format(g),
                     std::to_string(hits.size()) + " blocks"});
    } else if (hits[0] != got) {
      report.record({"classifier disagrees", "", "", "", c.group().format(g),
                     "block " + std::to_string(got) + " instead of " + std::to_string(hits[0])});
    }
  }
  return report;
}

}  // namespace confgroup
