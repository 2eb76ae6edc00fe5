#pragma once

#include <confgroup/error.hpp>
#include <confgroup/generating_set.hpp>
#include <confgroup/group.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace confgroup {

/// Block label, 1-based.
using Label = std::uint32_t;

/// Surjection from fine labels 1..s onto coarse labels 1..r.
class BlockMergeMap {
 public:
  BlockMergeMap() = default;

  /// targets[l-1] is the coarse label of fine label l.
  explicit BlockMergeMap(std::vector<Label> targets) : targets_(std::move(targets)) {
    if (targets_.empty()) fail_input("block merge map must have a nonempty domain");
    coarse_ = *std::max_element(targets_.begin(), targets_.end());
    std::vector<char> hit(coarse_ + 1, 0);
    for (auto t : targets_) {
      if (t == 0) fail_input("block merge map labels are 1-based");
      hit[t] = 1;
    }
    for (Label c = 1; c <= coarse_; ++c)
      if (!hit[c]) fail_input("block merge map is not surjective: coarse label " + std::to_string(c) + " has no preimage");
  }

  static BlockMergeMap identity(std::size_t m) {
    std::vector<Label> t(m);
    for (std::size_t i = 0; i < m; ++i) t[i] = static_cast<Label>(i + 1);
    return BlockMergeMap(std::move(t));
  }

  std::size_t fine_count() const noexcept { return targets_.size(); }
  std::size_t coarse_count() const noexcept { return coarse_; }
  Label operator()(Label fine) const { return targets_.at(fine - 1); }
  const std::vector<Label>& targets() const noexcept { return targets_; }

  /// (outer . inner)(l) = outer(inner(l)).
  friend BlockMergeMap compose(const BlockMergeMap& outer, const BlockMergeMap& inner) {
    if (inner.coarse_count() != outer.fine_count()) fail_input("merge maps are not composable");
    std::vector<Label> t;
    for (auto l : inner.targets_) t.push_back(outer(l));
    return BlockMergeMap(std::move(t));
  }

  bool operator==(const BlockMergeMap&) const = default;

 private:
  std::vector<Label> targets_;
  std::size_t coarse_ = 0;
};

/**
 * Finite partition {E_1, ..., E_m} of a group, labels 1..m.
 *
 * explicit-finite: a label per element of a finite group.
 * builtin-symbolic: a named total classifier over an infinite engine.
 * ball-explicit: labels on an explicit domain (a ball); classify() outside
 * the domain is a domain error.
 */
class Partition {
 public:
  enum class Kind { explicit_finite, builtin_symbolic, ball_explicit };
  using Classifier = std::function<Label(const GroupElement&)>;
  using Params = std::vector<std::pair<std::string, std::string>>;

  /// labels[i] is the block of element index i; every label in 1..m must occur.
  static Partition from_labels(const Group& group, std::vector<Label> labels) {
    if (!group.is_finite()) fail_input("explicit-finite partitions need a finite group");
    if (labels.size() != group.order()) fail_input("partition must label every element exactly once");
    auto impl = std::make_shared<Impl>(group);
    impl->kind = Kind::explicit_finite;
    impl->m = check_labels(labels);
    impl->labels = std::move(labels);
    return Partition(std::move(impl));
  }

  static Partition from_blocks(const Group& group, const std::vector<std::vector<ElementIndex>>& blocks) {
    if (!group.is_finite()) fail_input("explicit-finite partitions need a finite group");
    std::vector<Label> labels(group.order(), 0);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].empty()) fail_input("partition blocks must be nonempty");
      for (auto x : blocks[b]) {
        if (x >= labels.size()) fail_input("partition element index out of range");
        if (labels[x] != 0) fail_input("partition blocks overlap at element '" + group.table().name(x) + "'");
        labels[x] = static_cast<Label>(b + 1);
      }
    }
    for (std::size_t x = 0; x < labels.size(); ++x)
      if (labels[x] == 0) fail_input("partition blocks do not cover element '" + group.table().name(static_cast<ElementIndex>(x)) + "'");
    return from_labels(group, std::move(labels));
  }

  static Partition trivial(const Group& group) {
    if (group.is_finite()) return from_labels(group, std::vector<Label>(group.order(), 1));
    return symbolic(group, "trivial", {}, 1, [](const GroupElement&) { return Label{1}; });
  }

  static Partition symbolic(const Group& group, std::string name, Params params, std::size_t m, Classifier classify) {
    if (m == 0) fail_input("partition needs at least one block");
    auto impl = std::make_shared<Impl>(group);
    impl->kind = Kind::builtin_symbolic;
    impl->name = std::move(name);
    impl->params = std::move(params);
    impl->m = m;
    impl->classifier = std::move(classify);
    return Partition(std::move(impl));
  }

  /**
   * Labels on ball(radius) of the standard generators. Elements not listed in
   * `assignment` take `fallback` (or are an error when there is none).
   */
  static Partition ball_explicit(const Group& group, std::size_t radius,
                                 const std::vector<std::pair<GroupElement, Label>>& assignment,
                                 std::optional<Label> fallback = std::nullopt) {
    auto impl = std::make_shared<Impl>(group);
    impl->kind = Kind::ball_explicit;
    impl->radius = radius;
    for (const auto& g : ball(OrderedGeneratingSet::standard(group), radius)) impl->domain.emplace(g, 0);
    for (const auto& [g, l] : assignment) {
      auto it = impl->domain.find(g);
      if (it == impl->domain.end()) fail_input("assigned element '" + group.format(g) + "' lies outside the ball domain");
      if (l == 0) fail_input("partition labels are 1-based");
      it->second = l;
    }
    std::vector<Label> labels;
    for (auto& [g, l] : impl->domain) {
      if (l == 0) {
        if (!fallback) fail_input("ball element '" + group.format(g) + "' has no label");
        l = *fallback;
      }
      labels.push_back(l);
    }
    impl->m = check_labels(labels);
    return Partition(std::move(impl));
  }

  Kind kind() const noexcept { return impl_->kind; }
  const Group& group() const noexcept { return impl_->group; }
  std::size_t block_count() const noexcept { return impl_->m; }
  const std::string& name() const noexcept { return impl_->name; }
  const Params& params() const noexcept { return impl_->params; }
  std::size_t domain_radius() const noexcept { return impl_->radius; }
  bool same_as(const Partition& other) const noexcept { return impl_ == other.impl_; }

  /// Per-element labels of an explicit-finite partition.
  const std::vector<Label>& labels() const {
    if (kind() != Kind::explicit_finite) fail_domain("labels() needs an explicit-finite partition");
    return impl_->labels;
  }

  Label label_of(ElementIndex x) const { return labels().at(x); }

  std::vector<std::vector<ElementIndex>> blocks() const {
    const auto& l = labels();
    std::vector<std::vector<ElementIndex>> out(block_count());
    for (ElementIndex x = 0; x < l.size(); ++x) out[l[x] - 1].push_back(x);
    return out;
  }

  /// Domain of a ball-explicit partition with labels.
  const std::map<GroupElement, Label>& domain() const {
    if (kind() != Kind::ball_explicit) fail_domain("domain() needs a ball-explicit partition");
    return impl_->domain;
  }

  std::optional<Label> try_classify(const GroupElement& g) const {
    switch (kind()) {
      case Kind::explicit_finite:
        return impl_->labels.at(group().index(g));
      case Kind::builtin_symbolic:
        return impl_->classifier(g);
      case Kind::ball_explicit: {
        auto it = impl_->domain.find(g);
        if (it == impl_->domain.end()) return std::nullopt;
        return it->second;
      }
    }
    return std::nullopt;
  }

  Label classify(const GroupElement& g) const {
    auto l = try_classify(g);
    if (!l) fail_domain("element '" + group().format(g) + "' lies outside the partition domain");
    return *l;
  }

  /// Same blocks, label l renamed to perm[l-1]; perm must be a bijection of 1..m.
  Partition relabeled(const std::vector<Label>& perm) const {
    if (perm.size() != block_count()) fail_input("relabeling has wrong size");
    std::vector<char> hit(perm.size() + 1, 0);
    for (auto p : perm) {
      if (p == 0 || p > perm.size() || hit[p]) fail_input("relabeling is not a bijection");
      hit[p] = 1;
    }
    return map_labels(BlockMergeMap(perm), "relabeled");
  }

  /// Coarse partition whose block c is the union of fine blocks l with map(l) = c.
  Partition map_labels(const BlockMergeMap& map, const std::string& how = "coarsened") const {
    if (map.fine_count() != block_count()) fail_input("merge map domain does not match the block count");
    switch (kind()) {
      case Kind::explicit_finite: {
        std::vector<Label> l;
        for (auto x : impl_->labels) l.push_back(map(x));
        return from_labels(group(), std::move(l));
      }
      case Kind::builtin_symbolic: {
        auto fine = impl_;
        auto p = symbolic(group(), how + ":" + name(), params(), map.coarse_count(),
                          [fine, map](const GroupElement& g) { return map(fine->classifier(g)); });
        auto impl = std::const_pointer_cast<Impl>(p.impl_);
        impl->parent = fine;
        impl->parent_map = map;
        return p;
      }
      case Kind::ball_explicit: {
        auto impl = std::make_shared<Impl>(*impl_);
        for (auto& [g, l] : impl->domain) l = map(l);
        impl->m = map.coarse_count();
        return Partition(std::move(impl));
      }
    }
    return *this;
  }

 private:
  struct Impl {
    explicit Impl(Group g) : group(std::move(g)) {}
    Group group;
    Kind kind = Kind::explicit_finite;
    std::size_t m = 0;
    std::vector<Label> labels;
    std::string name;
    Params params;
    Classifier classifier;
    std::size_t radius = 0;
    std::map<GroupElement, Label> domain;
    std::shared_ptr<const Impl> parent;
    BlockMergeMap parent_map;
  };

  explicit Partition(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  static std::size_t check_labels(const std::vector<Label>& labels) {
    if (labels.empty()) fail_input("partition of an empty domain");
    Label m = *std::max_element(labels.begin(), labels.end());
    std::vector<char> hit(m + 1, 0);
    for (auto l : labels) {
      if (l == 0) fail_input("partition labels are 1-based");
      hit[l] = 1;
    }
    for (Label l = 1; l <= m; ++l)
      if (!hit[l]) fail_input("partition block " + std::to_string(l) + " is empty");
    return m;
  }

  friend std::optional<BlockMergeMap> is_refinement(const Partition& fine, const Partition& coarse);

  std::shared_ptr<const Impl> impl_;
};

inline Partition coarsen(const Partition& fine, const BlockMergeMap& map) { return fine.map_labels(map); }

/// The merge map if every block of `fine` lies inside one block of `coarse`.
inline std::optional<BlockMergeMap> is_refinement(const Partition& fine, const Partition& coarse) {
  auto from_pairs = [&](auto&& each_pair) -> std::optional<BlockMergeMap> {
    std::vector<Label> targets(fine.block_count(), 0);
    bool ok = true;
    each_pair([&](Label f, Label c) {
      if (targets[f - 1] == 0) {
        targets[f - 1] = c;
      } else if (targets[f - 1] != c) {
        ok = false;
      }
    });
    if (!ok) return std::nullopt;
    return BlockMergeMap(std::move(targets));
  };
  if (fine.kind() == Partition::Kind::explicit_finite && coarse.kind() == Partition::Kind::explicit_finite) {
    if (fine.labels().size() != coarse.labels().size()) fail_domain("refinement check across different groups");
    return from_pairs([&](auto&& add) {
      for (std::size_t x = 0; x < fine.labels().size(); ++x) add(fine.labels()[x], coarse.labels()[x]);
    });
  }
  if (fine.kind() == Partition::Kind::ball_explicit && coarse.kind() == Partition::Kind::ball_explicit) {
    if (fine.domain().size() != coarse.domain().size()) fail_domain("ball-explicit partitions have different domains");
    return from_pairs([&](auto&& add) {
      for (const auto& [g, l] : fine.domain()) add(l, coarse.classify(g));
    });
  }
  if (fine.kind() == Partition::Kind::builtin_symbolic && coarse.kind() == Partition::Kind::builtin_symbolic) {
    if (fine.same_as(coarse)) return BlockMergeMap::identity(fine.block_count());
    if (coarse.impl_->parent == fine.impl_) return coarse.impl_->parent_map;
    if (fine.impl_->parent == coarse.impl_) {
      // fine was derived from coarse; only a relabeling is a refinement here.
      const auto& t = fine.impl_->parent_map.targets();
      std::vector<Label> inv(t.size(), 0);
      if (fine.block_count() != coarse.block_count()) return std::nullopt;
      for (std::size_t i = 0; i < t.size(); ++i) inv[t[i] - 1] = static_cast<Label>(i + 1);
      return BlockMergeMap(std::move(inv));
    }
    fail_domain("refinement between unrelated symbolic partitions is not decidable here");
  }
  fail_domain("refinement check between partitions of different kinds");
}

/// ((fineG, coarseG) ~ (fineH, coarseH)): both refinements induce the same merge map.
inline bool is_similar(const Partition& fine_g, const Partition& coarse_g, const Partition& fine_h,
                       const Partition& coarse_h) {
  auto map_g = is_refinement(fine_g, coarse_g);
  auto map_h = is_refinement(fine_h, coarse_h);
  if (!map_g || !map_h) fail_input("is_similar: refinement precondition fails");
  if (fine_g.block_count() != fine_h.block_count() || coarse_g.block_count() != coarse_h.block_count()) return false;
  return *map_g == *map_h;
}

}  // namespace confgroup
