#pragma once

#include <confgroup/configuration.hpp>
#include <confgroup/parallel.hpp>
#include <confgroup/set_partitions.hpp>

#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace confgroup {

struct SearchOptions {
  unsigned threads = 1;
  /// Upper bound on (generating tuple, partition) candidates examined per H-search.
  double budget = 5e8;
};

/// Generating n-tuples of a finite group, repetition allowed, lexicographic in index order.
inline std::vector<std::vector<ElementIndex>> generating_tuples(const FiniteTable& table, std::size_t n) {
  std::vector<std::vector<ElementIndex>> out;
  std::vector<ElementIndex> t(n, 0);
  const auto size = static_cast<ElementIndex>(table.size());
  while (true) {
    if (generates(table, t)) out.push_back(t);
    std::size_t pos = n;
    while (pos > 0 && ++t[pos - 1] == size) t[--pos] = 0;
    if (pos == 0) break;
  }
  return out;
}

/// Stirling number of the second kind S(size, blocks), as a double to avoid overflow.
inline double stirling2(std::size_t size, std::size_t blocks) {
  std::vector<double> row(blocks + 1, 0.0);
  row[0] = 1.0;
  for (std::size_t i = 1; i <= size; ++i) {
    for (std::size_t k = std::min(i, blocks); k >= 1; --k) row[k] = k * row[k] + row[k - 1];
    row[0] = 0.0;
  }
  return row[blocks];
}

/// A configuration pair of a finite group in index form.
struct FinitePair {
  std::vector<ElementIndex> gens;
  std::vector<Label> labels;  // per element index

  bool operator==(const FinitePair&) const = default;
};

inline std::vector<Label> rgs_to_labels(const std::vector<std::uint32_t>& rgs) {
  std::vector<Label> out(rgs.size());
  for (std::size_t i = 0; i < rgs.size(); ++i) out[i] = rgs[i] + 1;
  return out;
}

/// Relabels blocks in order of first occurrence (the restricted-growth form, 1-based).
inline std::vector<Label> normalize_labels(const std::vector<Label>& labels) {
  std::map<Label, Label> rename;
  std::vector<Label> out;
  out.reserve(labels.size());
  for (auto l : labels) {
    auto it = rename.emplace(l, static_cast<Label>(rename.size() + 1)).first;
    out.push_back(it->second);
  }
  return out;
}

namespace detail {

/// Searches partitions of H (into exactly target_m blocks) for a fixed tuple;
/// returns labels with Con exactly equal to the target.
inline std::optional<std::vector<Label>> match_partition(const FiniteTable& h, const std::vector<ElementIndex>& gens,
                                                         const std::vector<Configuration>& target, std::size_t m) {
  std::optional<std::vector<Label>> found;
  for_each_set_partition(h.size(), m, [&](const std::vector<std::uint32_t>& rgs) {
    auto labels = rgs_to_labels(rgs);
    auto con = finite_configurations(h, gens, labels);
    if (con.size() != target.size()) return true;
    auto perm = relabel_match(con, target, gens.size(), m);
    if (!perm) return true;
    for (auto& l : labels) l = (*perm)[l - 1];
    found = std::move(labels);
    return false;
  });
  return found;
}

}  // namespace detail

/**
 * First (tuple, partition) of H, in lexicographic tuple order then
 * restricted-growth order, whose Con equals `target` as a labelled set.
 */
inline std::optional<FinitePair> search_matching_pair(const std::vector<Configuration>& target, std::size_t n,
                                                      std::size_t m, const Group& h,
                                                      const SearchOptions& options = {}) {
  if (!h.is_finite()) fail_domain("search_matching_pair needs a finite group H");
  const auto& table = h.table();
  if (m > table.size() || target.empty()) return std::nullopt;
  auto tuples = generating_tuples(table, n);
  if (static_cast<double>(tuples.size()) * stirling2(table.size(), m) > options.budget) {
    fail_budget("matching search over " + h.label() + " exceeds the candidate budget");
  }
  auto hit = first_hit(tuples.size(), options.threads, [&](std::size_t i) -> std::optional<std::vector<Label>> {
    return detail::match_partition(table, tuples[i], target, m);
  });
  if (!hit) return std::nullopt;
  return FinitePair{tuples[hit->first], std::move(hit->second)};
}

inline std::optional<std::pair<OrderedGeneratingSet, Partition>> search_matching_pair(const ConfigurationSet& target,
                                                                                      const Group& h,
                                                                                      const SearchOptions& options = {}) {
  auto found = search_matching_pair(target.configurations(), target.n(), target.m(), h, options);
  if (!found) return std::nullopt;
  return std::make_pair(OrderedGeneratingSet::of_indices(h, found->gens), Partition::from_labels(h, found->labels));
}

/// Result of a bounded containment search.
struct Certificate {
  enum class Verdict { contained, not_contained };
  enum class Mode { configuration, strong };

  struct Match {
    FinitePair source;  // configuration pair of G
    FinitePair image;   // pair of H with the same Con
  };

  Mode mode = Mode::configuration;
  Verdict verdict = Verdict::contained;
  std::size_t max_n = 0;
  std::size_t max_m = 0;
  std::vector<Match> matches;          // contained: one per configuration pair of G examined
  std::optional<FinitePair> witness;   // not_contained: pair of G with no match in H
  std::vector<Configuration> witness_configurations;
  std::size_t pairs_examined = 0;
};

/**
 * Decides Con(G) <= Con(H) restricted to n <= max_n generators and m <= max_m
 * blocks. Configuration pairs of G are visited by n, tuple, m, then
 * restricted-growth partition; the first one with no match in H is the witness.
 */
inline Certificate configuration_contained(const Group& g, const Group& h, std::size_t max_n, std::size_t max_m,
                                           const SearchOptions& options = {}) {
  if (!g.is_finite() || !h.is_finite()) fail_domain("configuration_contained needs finite groups");
  if (max_n == 0 || max_m == 0) fail_input("containment bounds must be at least 1");
  Certificate cert;
  cert.mode = Certificate::Mode::configuration;
  cert.max_n = max_n;
  cert.max_m = max_m;
  const auto& gt = g.table();
  // Memo keyed by the canonical form of the target: H-searches depend only on the label class.
  std::map<std::pair<std::size_t, std::vector<Configuration>>, std::optional<FinitePair>> memo;
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (const auto& tuple : generating_tuples(gt, n)) {
      for (std::size_t m = 1; m <= std::min(max_m, gt.size()); ++m) {
        bool stop = false;
        for_each_set_partition(gt.size(), m, [&](const std::vector<std::uint32_t>& rgs) {
          ++cert.pairs_examined;
          FinitePair source{tuple, rgs_to_labels(rgs)};
          auto target = finite_configurations(gt, tuple, source.labels);
          std::optional<FinitePair> found;
          if (m <= 5) {
            auto key = std::make_pair(n, canonical_form(target, m));
            auto it = memo.find(key);
            if (it == memo.end()) {
              it = memo.emplace(key, search_matching_pair(target, n, m, h, options)).first;
            }
            found = it->second;
            if (found) {
              // Re-align the cached pair's labels with this target, as an uncached search would.
              found->labels = normalize_labels(found->labels);
              auto con = finite_configurations(h.table(), found->gens, found->labels);
              auto perm = relabel_match(con, target, n, m);
              for (auto& l : found->labels) l = (*perm)[l - 1];
            }
          } else {
            found = search_matching_pair(target, n, m, h, options);
          }
          if (!found) {
            cert.verdict = Certificate::Verdict::not_contained;
            cert.witness = std::move(source);
            cert.witness_configurations = std::move(target);
            cert.matches.clear();
            stop = true;
            return false;
          }
          cert.matches.push_back({std::move(source), std::move(*found)});
          return true;
        });
        if (stop) return cert;
      }
    }
  }
  return cert;
}

/**
 * Strong containment with fixed tuples: every partition of G into at most
 * max_m blocks must be matched by some partition of H under gens_h.
 */
inline Certificate strong_contained_finite(const OrderedGeneratingSet& gens_g, const OrderedGeneratingSet& gens_h,
                                           std::size_t max_m, const SearchOptions& options = {}) {
  const Group& g = gens_g.group();
  const Group& h = gens_h.group();
  if (!g.is_finite() || !h.is_finite()) fail_domain("strong_contained_finite needs finite groups");
  if (gens_g.size() != gens_h.size()) fail_input("generating tuples must have equal length");
  if (max_m == 0) fail_input("containment bounds must be at least 1");
  Certificate cert;
  cert.mode = Certificate::Mode::strong;
  cert.max_n = gens_g.size();
  cert.max_m = max_m;
  const auto& gt = g.table();
  const auto& ht = h.table();
  const auto tg = gens_g.indices();
  const auto th = gens_h.indices();
  const std::size_t n = tg.size();
  for (std::size_t m = 1; m <= std::min(max_m, gt.size()); ++m) {
    if (stirling2(ht.size(), m) > options.budget) fail_budget("strong search over " + h.label() + " exceeds the candidate budget");
    std::vector<std::vector<Label>> h_partitions;
    for_each_set_partition(ht.size(), m, [&](const std::vector<std::uint32_t>& rgs) {
      h_partitions.push_back(rgs_to_labels(rgs));
      return true;
    });
    bool stop = false;
    for_each_set_partition(gt.size(), m, [&](const std::vector<std::uint32_t>& rgs) {
      ++cert.pairs_examined;
      FinitePair source{tg, rgs_to_labels(rgs)};
      auto target = finite_configurations(gt, tg, source.labels);
      auto hit = first_hit(h_partitions.size(), options.threads, [&](std::size_t i) -> std::optional<std::vector<Label>> {
        auto con = finite_configurations(ht, th, h_partitions[i]);
        auto perm = relabel_match(con, target, n, m);
        if (!perm) return std::nullopt;
        auto labels = h_partitions[i];
        for (auto& l : labels) l = (*perm)[l - 1];
        return labels;
      });
      if (!hit) {
        cert.verdict = Certificate::Verdict::not_contained;
        cert.witness = std::move(source);
        cert.witness_configurations = std::move(target);
        cert.matches.clear();
        stop = true;
        return false;
      }
      cert.matches.push_back({std::move(source), FinitePair{th, std::move(hit->second)}});
      return true;
    });
    if (stop) return cert;
  }
  return cert;
}

/// Outcome of re-checking a certificate against the definitions (no search).
struct CertificateCheck {
  bool valid = true;
  std::vector<std::string> problems;
};

/**
 * Re-validates a certificate: tuples generate, partitions are well formed,
 * every recorded match has equal labelled Con, and a not-contained witness
 * reproduces its recorded Con. Non-existence of a match is the searched
 * claim and is not re-derived.
 */
inline CertificateCheck verify_certificate(const Certificate& cert, const Group& g, const Group& h) {
  CertificateCheck check;
  auto problem = [&](std::string s) {
    check.valid = false;
    check.problems.push_back(std::move(s));
  };
  auto con_of = [&](const Group& group, const FinitePair& p) -> std::optional<std::vector<Configuration>> {
    try {
      auto gens = OrderedGeneratingSet::of_indices(group, p.gens);
      auto part = Partition::from_labels(group, p.labels);
      return configuration_set_finite(gens, part).configurations();
    } catch (const Error& e) {
      problem(e.what());
      return std::nullopt;
    }
  };
  if (cert.verdict == Certificate::Verdict::not_contained) {
    if (!cert.witness) {
      problem("not-contained certificate has no witness");
      return check;
    }
    auto con = con_of(g, *cert.witness);
    if (con && *con != cert.witness_configurations) problem("witness does not reproduce its configuration set");
    if (cert.witness->gens.size() > cert.max_n) problem("witness exceeds the generator bound");
    return check;
  }
  for (std::size_t i = 0; i < cert.matches.size(); ++i) {
    const auto& match = cert.matches[i];
    auto a = con_of(g, match.source);
    auto b = con_of(h, match.image);
    if (a && b && *a != *b) problem("match " + std::to_string(i) + " has different configuration sets");
    if (cert.mode == Certificate::Mode::strong && i > 0) {
      if (match.source.gens != cert.matches[0].source.gens || match.image.gens != cert.matches[0].image.gens) {
        problem("strong certificate changes generating tuples at match " + std::to_string(i));
      }
    }
  }
  return check;
}

}  // namespace confgroup
