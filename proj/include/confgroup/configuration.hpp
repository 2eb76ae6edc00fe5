#pragma once

#include <confgroup/generating_set.hpp>
#include <confgroup/partition.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

namespace confgroup {

/// (c_0, ..., c_n): labels of x_0 and of g_k x_0.
using Configuration = std::vector<Label>;

/// How a configuration set was obtained.
struct Exactness {
  enum class Kind { exact, ball_observed };
  Kind kind = Kind::exact;
  std::size_t radius = 0;        // largest base-point radius explored
  std::size_t stable_since = 0;  // last radius that contributed a new configuration
  std::size_t window = 0;
  bool saturated = false;

  bool operator==(const Exactness&) const = default;
};

/// Con(g, E): sorted, duplicate-free configurations over n generators and m labels.
class ConfigurationSet {
 public:
  ConfigurationSet(std::size_t n, std::size_t m, std::vector<Configuration> configurations, Exactness exactness = {})
      : n_(n), m_(m), configurations_(std::move(configurations)), exactness_(exactness) {
    for (const auto& c : configurations_) {
      if (c.size() != n_ + 1) fail_input("configuration has length " + std::to_string(c.size()) + ", expected " + std::to_string(n_ + 1));
      for (auto l : c)
        if (l < 1 || l > m_) fail_input("configuration label out of range 1.." + std::to_string(m_));
    }
    std::sort(configurations_.begin(), configurations_.end());
    configurations_.erase(std::unique(configurations_.begin(), configurations_.end()), configurations_.end());
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return m_; }
  std::size_t size() const noexcept { return configurations_.size(); }
  const std::vector<Configuration>& configurations() const noexcept { return configurations_; }
  const Exactness& exactness() const noexcept { return exactness_; }
  bool is_exact() const noexcept { return exactness_.kind == Exactness::Kind::exact; }

  bool contains(const Configuration& c) const {
    return std::binary_search(configurations_.begin(), configurations_.end(), c);
  }

  bool includes(const ConfigurationSet& other) const {
    return std::includes(configurations_.begin(), configurations_.end(), other.configurations_.begin(),
                         other.configurations_.end());
  }

  /// Same labelled configurations (exactness metadata ignored).
  bool same_configurations(const ConfigurationSet& other) const {
    return n_ == other.n_ && m_ == other.m_ && configurations_ == other.configurations_;
  }

 private:
  std::size_t n_;
  std::size_t m_;
  std::vector<Configuration> configurations_;
  Exactness exactness_;
};

inline Configuration configuration_of(const GroupElement& x0, const OrderedGeneratingSet& gens, const Partition& part) {
  const Group& group = gens.group();
  Configuration c;
  c.reserve(gens.size() + 1);
  c.push_back(part.classify(x0));
  for (const auto& g : gens.elements()) c.push_back(part.classify(group.multiply(g, x0)));
  return c;
}

/// Index-level Con for finite tables; the hot path of every search.
inline std::vector<Configuration> finite_configurations(const FiniteTable& table, const std::vector<ElementIndex>& gens,
                                                        const std::vector<Label>& labels) {
  std::vector<Configuration> out;
  out.reserve(table.size());
  for (ElementIndex x = 0; x < table.size(); ++x) {
    Configuration c(gens.size() + 1);
    c[0] = labels[x];
    for (std::size_t k = 0; k < gens.size(); ++k) c[k + 1] = labels[table.product(gens[k], x)];
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline ConfigurationSet configuration_set_finite(const OrderedGeneratingSet& gens, const Partition& part) {
  const Group& group = gens.group();
  if (!group.is_finite()) fail_domain("configuration_set_finite needs a finite group");
  if (part.kind() != Partition::Kind::explicit_finite) fail_input("configuration_set_finite needs an explicit-finite partition");
  if (part.labels().size() != group.order()) fail_domain("partition belongs to a different group");
  return ConfigurationSet(gens.size(), part.block_count(),
                          finite_configurations(group.table(), gens.indices(), part.labels()));
}

/**
 * Observed Con over base points in balls of growing radius (standard
 * generators of the engine). Stops once `window` consecutive radii added
 * nothing new, or at `max_radius`. The result is a subset of the true Con.
 */
inline ConfigurationSet configuration_set_ball(const OrderedGeneratingSet& gens, const Partition& part,
                                               std::size_t max_radius, std::size_t window) {
  if (window == 0) fail_input("stability window must be at least 1");
  const Group& group = gens.group();
  if (part.kind() == Partition::Kind::ball_explicit && part.domain_radius() < max_radius + 1) {
    fail_domain("ball-explicit partition domain radius " + std::to_string(part.domain_radius()) +
                " does not cover ball(" + std::to_string(max_radius + 1) + ")");
  }
  if (part.kind() == Partition::Kind::explicit_finite && !group.is_finite()) fail_domain("explicit-finite partition on infinite group");

  auto spheres = ball_spheres(OrderedGeneratingSet::standard(group), max_radius);
  std::vector<Configuration> seen;
  auto insert = [&seen](Configuration c) {
    auto it = std::lower_bound(seen.begin(), seen.end(), c);
    if (it != seen.end() && *it == c) return false;
    seen.insert(it, std::move(c));
    return true;
  };
  Exactness ex;
  ex.kind = Exactness::Kind::ball_observed;
  ex.window = window;
  for (std::size_t r = 0; r < spheres.size(); ++r) {
    bool grew = false;
    for (const auto& x0 : spheres[r]) {
      Configuration c;
      auto l0 = part.try_classify(x0);
      if (!l0) continue;
      c.push_back(*l0);
      bool inside = true;
      for (const auto& g : gens.elements()) {
        auto l = part.try_classify(group.multiply(g, x0));
        if (!l) {
          inside = false;
          break;
        }
        c.push_back(*l);
      }
      if (inside && insert(std::move(c))) grew = true;
    }
    if (grew) ex.stable_since = r;
    ex.radius = r;
    if (r - ex.stable_since >= window) {
      ex.saturated = true;
      break;
    }
  }
  return ConfigurationSet(gens.size(), part.block_count(), std::move(seen), ex);
}

inline ConfigurationSet coarsen_config_set(const ConfigurationSet& cs, const BlockMergeMap& map) {
  if (map.fine_count() != cs.m()) fail_input("merge map arity does not match the configuration set");
  std::vector<Configuration> out;
  for (auto c : cs.configurations()) {
    for (auto& l : c) l = map(l);
    out.push_back(std::move(c));
  }
  return ConfigurationSet(cs.n(), map.coarse_count(), std::move(out), cs.exactness());
}

/// Applies perm (label l -> perm[l-1]) to every configuration.
inline std::vector<Configuration> relabel(const std::vector<Configuration>& cs, const std::vector<Label>& perm) {
  std::vector<Configuration> out;
  out.reserve(cs.size());
  for (auto c : cs) {
    for (auto& l : c) l = perm[l - 1];
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

/// counts[l-1][i]: how many configurations carry label l at position i.
inline std::vector<std::vector<std::size_t>> label_fingerprints(const std::vector<Configuration>& cs, std::size_t m,
                                                                std::size_t width) {
  std::vector<std::vector<std::size_t>> f(m, std::vector<std::size_t>(width, 0));
  for (const auto& c : cs)
    for (std::size_t i = 0; i < c.size(); ++i) ++f[c[i] - 1][i];
  return f;
}

}  // namespace detail

/**
 * First bijection perm (lexicographic over perm) with relabel(a, perm) == b.
 * Candidates are pruned by per-label positional occurrence counts.
 */
inline std::optional<std::vector<Label>> relabel_match(const std::vector<Configuration>& a,
                                                       const std::vector<Configuration>& b, std::size_t n, std::size_t m) {
  if (a.size() != b.size()) return std::nullopt;
  const auto fa = detail::label_fingerprints(a, m, n + 1);
  const auto fb = detail::label_fingerprints(b, m, n + 1);
  {
    auto sa = fa, sb = fb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  std::vector<Label> perm(m, 0);
  std::vector<char> used(m + 1, 0);
  std::function<bool(std::size_t)> assign = [&](std::size_t l) -> bool {
    if (l == m) return relabel(a, perm) == b;
    for (Label t = 1; t <= m; ++t) {
      if (used[t] || fa[l] != fb[t - 1]) continue;
      used[t] = 1;
      perm[l] = t;
      if (assign(l + 1)) return true;
      used[t] = 0;
    }
    return false;
  };
  if (assign(0)) return perm;
  return std::nullopt;
}

/// A bijection pi on 1..m with pi(a) = b, if one exists.
inline std::optional<std::vector<Label>> sets_equal_up_to_relabel(const ConfigurationSet& a, const ConfigurationSet& b) {
  if (a.n() != b.n()) fail_input("configuration sets have different generator counts");
  if (a.m() != b.m()) return std::nullopt;
  return relabel_match(a.configurations(), b.configurations(), a.n(), a.m());
}

/// Lexicographically minimal relabeling of a configuration set (the canonical
/// representative of its label-bijection class).
inline std::vector<Configuration> canonical_form(const std::vector<Configuration>& cs, std::size_t m) {
  std::vector<Label> perm(m);
  for (std::size_t i = 0; i < m; ++i) perm[i] = static_cast<Label>(i + 1);
  std::vector<Configuration> best = relabel(cs, perm);
  while (std::next_permutation(perm.begin(), perm.end())) {
    auto candidate = relabel(cs, perm);
    if (candidate < best) best = std::move(candidate);
  }
  return best;
}

}  // namespace confgroup
