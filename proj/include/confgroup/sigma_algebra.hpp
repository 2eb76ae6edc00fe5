#pragma once

#include <confgroup/partition.hpp>

#include <map>
#include <optional>
#include <vector>

namespace confgroup {

/// Member of a finite sigma-algebra: bit i set iff atom i+1 is included.
using AtomSet = std::uint64_t;

/**
 * Finite sigma-algebra on a finite group, stored as its atoms. Members are
 * exactly the unions of atoms, so the algebra is free over them.
 */
class SigmaAlgebra {
 public:
  static constexpr std::size_t kMaxAtoms = 64;

  explicit SigmaAlgebra(Partition atoms) : atoms_(std::move(atoms)) {
    if (atoms_.kind() != Partition::Kind::explicit_finite) fail_input("sigma-algebras are built over finite groups");
    if (atoms_.block_count() > kMaxAtoms) fail_budget("sigma-algebra has more than 64 atoms");
  }

  const Partition& atoms() const noexcept { return atoms_; }
  std::size_t atom_count() const noexcept { return atoms_.block_count(); }

  std::vector<ElementIndex> member(AtomSet set) const {
    std::vector<ElementIndex> out;
    const auto& l = atoms_.labels();
    for (ElementIndex x = 0; x < l.size(); ++x)
      if (set >> (l[x] - 1) & 1U) out.push_back(x);
    return out;
  }

  /// The atom set of `elements` if it is a union of atoms.
  std::optional<AtomSet> find_member(const std::vector<ElementIndex>& elements) const {
    AtomSet set = 0;
    std::vector<char> in(atoms_.labels().size(), 0);
    for (auto x : elements) {
      in.at(x) = 1;
      set |= AtomSet{1} << (atoms_.label_of(x) - 1);
    }
    for (ElementIndex x = 0; x < in.size(); ++x) {
      if (!in[x] && (set >> (atoms_.label_of(x) - 1) & 1U)) return std::nullopt;
    }
    return set;
  }

  AtomSet whole() const {
    return atom_count() == 64 ? ~AtomSet{0} : (AtomSet{1} << atom_count()) - 1;
  }
  AtomSet complement(AtomSet a) const { return whole() & ~a; }

 private:
  Partition atoms_;
};

/// Atoms are the nonempty cells of the common refinement of all sets and their
/// complements, labelled in order of first element index.
inline SigmaAlgebra generated_sigma_algebra(const std::vector<std::vector<ElementIndex>>& sets, const Group& group) {
  if (!group.is_finite()) fail_domain("generated_sigma_algebra needs a finite group");
  const std::size_t n = group.order();
  std::vector<std::vector<char>> signature(n, std::vector<char>(sets.size(), 0));
  for (std::size_t s = 0; s < sets.size(); ++s) {
    for (auto x : sets[s]) {
      if (x >= n) fail_input("sigma-algebra generator contains an element outside the group");
      signature[x][s] = 1;
    }
  }
  std::map<std::vector<char>, Label> atom_of;
  std::vector<Label> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    auto [it, inserted] = atom_of.emplace(signature[x], static_cast<Label>(atom_of.size() + 1));
    labels[x] = it->second;
  }
  return SigmaAlgebra(Partition::from_labels(group, std::move(labels)));
}

inline const Partition& atoms(const SigmaAlgebra& sa) { return sa.atoms(); }

}  // namespace confgroup
