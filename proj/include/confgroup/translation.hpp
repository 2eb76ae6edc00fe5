#pragma once

#include <confgroup/configuration.hpp>
#include <confgroup/sigma_algebra.hpp>

#include <string>
#include <vector>

namespace confgroup {

struct TranslationViolation {
  std::size_t generator = 0;  // r, 1-based
  AtomSet a1 = 0, a2 = 0;     // members over the first partition's blocks
  bool equality = false;      // which variant failed
};

struct TranslationReport {
  std::size_t checked = 0;
  std::vector<TranslationViolation> violations;
  bool passed() const noexcept { return violations.empty(); }
};

/**
 * For configuration pairs (g, E) and (h, F) with equal labelled Con, where
 * block l of E corresponds to block l of F: every member A of the
 * sigma-algebra of E corresponds to the member B of F with the same atoms.
 * Checks g_r A1 <= A2 => h_r B1 <= B2 and g_r A1 = A2 => h_r B1 = B2 for
 * all r and all member pairs.
 */
inline TranslationReport check_translation_implications(const OrderedGeneratingSet& gens_g, const Partition& part_e,
                                                 const OrderedGeneratingSet& gens_h, const Partition& part_f) {
  if (gens_g.size() != gens_h.size()) fail_input("generating tuples must have equal length");
  if (part_e.block_count() != part_f.block_count()) fail_input("partitions have different block counts");
  const SigmaAlgebra se(part_e), sf(part_f);
  const auto& tg = gens_g.group().table();
  const auto& th = gens_h.group().table();
  const auto ig = gens_g.indices();
  const auto ih = gens_h.indices();
  // image[r][A]: atoms met by g_r A, and whether g_r A is itself a member.
  auto images = [](const SigmaAlgebra& sa, const FiniteTable& t, ElementIndex s) {
    std::vector<std::pair<AtomSet, bool>> out;
    for (AtomSet a = 0; a <= sa.whole(); ++a) {
      std::vector<ElementIndex> moved;
      for (auto x : sa.member(a)) moved.push_back(t.product(s, x));
      AtomSet met = 0;
      for (auto y : moved) met |= AtomSet{1} << (sa.atoms().label_of(y) - 1);
      out.emplace_back(met, sa.find_member(moved).has_value());
    }
    return out;
  };
  TranslationReport report;
  for (std::size_t r = 0; r < ig.size(); ++r) {
    const auto ge = images(se, tg, ig[r]);
    const auto hf = images(sf, th, ih[r]);
    for (AtomSet a1 = 0; a1 <= se.whole(); ++a1) {
      for (AtomSet a2 = 0; a2 <= se.whole(); ++a2) {
        ++report.checked;
        const bool g_sub = (ge[a1].first & ~a2) == 0;
        const bool h_sub = (hf[a1].first & ~a2) == 0;
        const bool g_eq = ge[a1].second && ge[a1].first == a2;
        const bool h_eq = hf[a1].second && hf[a1].first == a2;
        if (g_sub && !h_sub) report.violations.push_back({r + 1, a1, a2, false});
        if (g_eq && !h_eq) report.violations.push_back({r + 1, a1, a2, true});
      }
    }
  }
  return report;
}

}  // namespace confgroup
