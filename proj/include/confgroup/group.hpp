#pragma once

#include <confgroup/error.hpp>
#include <confgroup/finite_table.hpp>
#include <confgroup/permutation.hpp>

#include <cctype>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

namespace confgroup {

/// Index into a finite group's table.
struct FiniteElement {
  ElementIndex index = 0;
  auto operator<=>(const FiniteElement&) const = default;
};

/// Freely reduced word; letter +k is f_k, -k is f_k^-1.
struct FreeWord {
  std::vector<int> letters;
  auto operator<=>(const FreeWord&) const = default;
};

/// Element of Z^n.
struct LatticeVector {
  std::vector<std::int64_t> coords;
  auto operator<=>(const LatticeVector&) const = default;
};

/// Element of Z^n x F.
struct ProductElement {
  std::vector<std::int64_t> coords;
  ElementIndex finite = 0;
  auto operator<=>(const ProductElement&) const = default;
};

/// Alternating word over {x, y}; empty is the identity of D_inf.
struct DihedralWord {
  std::string letters;
  auto operator<=>(const DihedralWord&) const = default;
};

/// Engine-tagged canonical payload. Equal iff structurally equal.
class GroupElement {
 public:
  using Payload = std::variant<FiniteElement, FreeWord, LatticeVector, ProductElement, DihedralWord>;

  GroupElement() = default;
  template <typename T>
    requires std::is_constructible_v<Payload, T&&> && (!std::is_same_v<std::remove_cvref_t<T>, GroupElement>)
  GroupElement(T&& payload) : payload_(std::forward<T>(payload)) {}  // NOLINT(google-explicit-constructor)

  const Payload& payload() const noexcept { return payload_; }

  template <typename T>
  const T& as() const {
    if (auto p = std::get_if<T>(&payload_)) return *p;
    fail_domain("engine mismatch: element belongs to a different engine");
  }

  auto operator<=>(const GroupElement&) const = default;
  bool operator==(const GroupElement&) const = default;

 private:
  Payload payload_;
};

struct ElementHash {
  std::size_t operator()(const GroupElement& g) const noexcept {
    std::size_t h = g.payload().index() * 0x9e3779b97f4a7c15ULL;
    auto mix = [&h](std::uint64_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    std::visit(
        [&](const auto& p) {
          using T = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<T, FiniteElement>) {
            mix(p.index);
          } else if constexpr (std::is_same_v<T, FreeWord>) {
            for (int l : p.letters) mix(static_cast<std::uint64_t>(l));
          } else if constexpr (std::is_same_v<T, LatticeVector>) {
            for (auto c : p.coords) mix(static_cast<std::uint64_t>(c));
          } else if constexpr (std::is_same_v<T, ProductElement>) {
            for (auto c : p.coords) mix(static_cast<std::uint64_t>(c));
            mix(p.finite);
          } else {
            for (char c : p.letters) mix(static_cast<std::uint64_t>(c));
          }
        },
        g.payload());
    return h;
  }
};

/**
 * A group engine: a finite table (possibly built from permutations) or one
 * of the curated infinite groups F_n, Z^n, Z^n x F and D_inf.
 *
 * Group values are cheap to copy; the underlying data is shared and immutable.
 */
class Group {
 public:
  enum class Kind { finite_table, permutation, free, free_abelian, product_zn_f, dihedral_infinite };

  static Group from_table(FiniteTable table, std::string label = "finite") {
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::finite_table;
    impl->label = std::move(label);
    impl->table = std::make_shared<const FiniteTable>(std::move(table));
    return Group(std::move(impl));
  }

  static Group from_permutations(std::size_t degree, const std::vector<Permutation>& generators,
                                 std::string label = "permutation") {
    auto data = build_permutation_group(degree, generators);
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::permutation;
    impl->label = std::move(label);
    impl->degree = degree;
    impl->permutations = std::move(data.elements);
    impl->table = std::make_shared<const FiniteTable>(std::move(data.table));
    return Group(std::move(impl));
  }

  static Group free(std::size_t rank) {
    if (rank == 0) fail_input("free group rank must be positive");
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::free;
    impl->label = "F" + std::to_string(rank);
    impl->rank = rank;
    return Group(std::move(impl));
  }

  static Group free_abelian(std::size_t rank) {
    if (rank == 0) fail_input("free abelian rank must be positive");
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::free_abelian;
    impl->label = "Z^" + std::to_string(rank);
    impl->rank = rank;
    return Group(std::move(impl));
  }

  static Group product(std::size_t rank, const Group& finite) {
    if (rank == 0) fail_input("product rank must be positive");
    if (!finite.is_finite()) fail_input("product factor must be a finite group");
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::product_zn_f;
    impl->label = "Z^" + std::to_string(rank) + "x" + finite.label();
    impl->rank = rank;
    impl->table = finite.impl_->table;
    return Group(std::move(impl));
  }

  static Group infinite_dihedral() {
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::dihedral_infinite;
    impl->label = "Dinf";
    return Group(std::move(impl));
  }

  Kind kind() const noexcept { return impl_->kind; }
  const std::string& label() const noexcept { return impl_->label; }
  bool is_finite() const noexcept {
    return kind() == Kind::finite_table || kind() == Kind::permutation;
  }
  std::size_t rank() const noexcept { return impl_->rank; }
  std::size_t degree() const noexcept { return impl_->degree; }

  bool same_engine(const Group& other) const noexcept { return impl_ == other.impl_; }

  /// Cayley table of a finite group, or of the finite factor of Z^n x F.
  const FiniteTable& table() const {
    if (!impl_->table) fail_domain("group '" + label() + "' has no finite table");
    return *impl_->table;
  }

  std::size_t order() const {
    if (!is_finite()) fail_domain("order requested for infinite group '" + label() + "'");
    return table().size();
  }

  const Permutation& permutation(ElementIndex i) const {
    if (kind() != Kind::permutation) fail_domain("not a permutation group");
    return impl_->permutations.at(i);
  }

  GroupElement identity() const {
    switch (kind()) {
      case Kind::finite_table:
      case Kind::permutation:
        return FiniteElement{table().identity()};
      case Kind::free:
        return FreeWord{};
      case Kind::free_abelian:
        return LatticeVector{std::vector<std::int64_t>(rank(), 0)};
      case Kind::product_zn_f:
        return ProductElement{std::vector<std::int64_t>(rank(), 0), table().identity()};
      case Kind::dihedral_infinite:
        return DihedralWord{};
    }
    return {};
  }

  GroupElement multiply(const GroupElement& a, const GroupElement& b) const {
    check_member(a);
    check_member(b);
    switch (kind()) {
      case Kind::finite_table:
      case Kind::permutation:
        return FiniteElement{table().product(a.as<FiniteElement>().index, b.as<FiniteElement>().index)};
      case Kind::free: {
        FreeWord out = a.as<FreeWord>();
        for (int l : b.as<FreeWord>().letters) {
          if (!out.letters.empty() && out.letters.back() == -l) {
            out.letters.pop_back();
          } else {
            out.letters.push_back(l);
          }
        }
        return out;
      }
      case Kind::free_abelian: {
        LatticeVector out = a.as<LatticeVector>();
        const auto& y = b.as<LatticeVector>().coords;
        for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += y[i];
        return out;
      }
      case Kind::product_zn_f: {
        ProductElement out = a.as<ProductElement>();
        const auto& y = b.as<ProductElement>();
        for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += y.coords[i];
        out.finite = table().product(out.finite, y.finite);
        return out;
      }
      case Kind::dihedral_infinite: {
        // x^2 = y^2 = e: cancel equal adjacent letters.
        DihedralWord out = a.as<DihedralWord>();
        for (char l : b.as<DihedralWord>().letters) {
          if (!out.letters.empty() && out.letters.back() == l) {
            out.letters.pop_back();
          } else {
            out.letters.push_back(l);
          }
        }
        return out;
      }
    }
    return {};
  }

  GroupElement invert(const GroupElement& a) const {
    check_member(a);
    switch (kind()) {
      case Kind::finite_table:
      case Kind::permutation:
        return FiniteElement{table().inverse(a.as<FiniteElement>().index)};
      case Kind::free: {
        const auto& w = a.as<FreeWord>().letters;
        FreeWord out;
        for (auto it = w.rbegin(); it != w.rend(); ++it) out.letters.push_back(-*it);
        return out;
      }
      case Kind::free_abelian: {
        LatticeVector out = a.as<LatticeVector>();
        for (auto& c : out.coords) c = -c;
        return out;
      }
      case Kind::product_zn_f: {
        ProductElement out = a.as<ProductElement>();
        for (auto& c : out.coords) c = -c;
        out.finite = table().inverse(out.finite);
        return out;
      }
      case Kind::dihedral_infinite: {
        const auto& w = a.as<DihedralWord>().letters;
        return DihedralWord{std::string(w.rbegin(), w.rend())};
      }
    }
    return {};
  }

  bool is_identity(const GroupElement& a) const { return a == identity(); }

  /// Throws a domain error unless `a` is a canonical element of this engine.
  void check_member(const GroupElement& a) const {
    switch (kind()) {
      case Kind::finite_table:
      case Kind::permutation:
        if (a.as<FiniteElement>().index >= table().size()) fail_domain("finite element index out of range");
        return;
      case Kind::free: {
        const auto& w = a.as<FreeWord>().letters;
        for (std::size_t i = 0; i < w.size(); ++i) {
          if (w[i] == 0 || static_cast<std::size_t>(std::abs(w[i])) > rank()) fail_domain("free letter out of range");
          if (i > 0 && w[i] == -w[i - 1]) fail_domain("free word is not reduced");
        }
        return;
      }
      case Kind::free_abelian:
        if (a.as<LatticeVector>().coords.size() != rank()) fail_domain("engine mismatch: lattice dimension");
        return;
      case Kind::product_zn_f: {
        const auto& p = a.as<ProductElement>();
        if (p.coords.size() != rank() || p.finite >= table().size()) fail_domain("engine mismatch: product element");
        return;
      }
      case Kind::dihedral_infinite: {
        const auto& w = a.as<DihedralWord>().letters;
        for (std::size_t i = 0; i < w.size(); ++i) {
          if (w[i] != 'x' && w[i] != 'y') fail_domain("dihedral letter must be x or y");
          if (i > 0 && w[i] == w[i - 1]) fail_domain("dihedral word is not alternating");
        }
        return;
      }
    }
  }

  /// All elements in table order.
  std::vector<GroupElement> enumerate_all() const {
    if (!is_finite()) fail_domain("enumerate_all called on infinite group '" + label() + "'");
    std::vector<GroupElement> out;
    out.reserve(table().size());
    for (ElementIndex i = 0; i < table().size(); ++i) out.push_back(FiniteElement{i});
    return out;
  }

  GroupElement element(ElementIndex i) const {
    if (!is_finite() || i >= table().size()) fail_domain("element index out of range");
    return FiniteElement{i};
  }

  ElementIndex index(const GroupElement& a) const {
    if (!is_finite()) fail_domain("index requested in infinite group");
    check_member(a);
    return a.as<FiniteElement>().index;
  }

  /// Free letters f_k, basis vectors, (e_i, e) then (0, x_j), or (x, y).
  std::vector<GroupElement> standard_generators() const {
    std::vector<GroupElement> out;
    switch (kind()) {
      case Kind::finite_table:
      case Kind::permutation:
        for (ElementIndex i = 0; i < table().size(); ++i)
          if (i != table().identity()) out.push_back(FiniteElement{i});
        break;
      case Kind::free:
        for (std::size_t k = 1; k <= rank(); ++k) out.push_back(FreeWord{{static_cast<int>(k)}});
        break;
      case Kind::free_abelian:
        for (std::size_t k = 0; k < rank(); ++k) {
          LatticeVector v{std::vector<std::int64_t>(rank(), 0)};
          v.coords[k] = 1;
          out.push_back(v);
        }
        break;
      case Kind::product_zn_f:
        for (std::size_t k = 0; k < rank(); ++k) {
          ProductElement v{std::vector<std::int64_t>(rank(), 0), table().identity()};
          v.coords[k] = 1;
          out.push_back(v);
        }
        for (ElementIndex j = 0; j < table().size(); ++j)
          if (j != table().identity()) out.push_back(ProductElement{std::vector<std::int64_t>(rank(), 0), j});
        break;
      case Kind::dihedral_infinite:
        out.push_back(DihedralWord{"x"});
        out.push_back(DihedralWord{"y"});
        break;
    }
    return out;
  }

  std::string format(const GroupElement& a) const {
    check_member(a);
    switch (kind()) {
      case Kind::finite_table:
      case Kind::permutation:
        return table().name(a.as<FiniteElement>().index);
      case Kind::free: {
        const auto& w = a.as<FreeWord>().letters;
        if (w.empty()) return "e";
        std::string out;
        for (std::size_t i = 0; i < w.size(); ++i) {
          if (i) out += ' ';
          out += "f" + std::to_string(std::abs(w[i]));
          if (w[i] < 0) out += "^-1";
        }
        return out;
      }
      case Kind::free_abelian:
        return format_coords(a.as<LatticeVector>().coords);
      case Kind::product_zn_f: {
        const auto& p = a.as<ProductElement>();
        return "(" + format_coords(p.coords) + "," + table().name(p.finite) + ")";
      }
      case Kind::dihedral_infinite: {
        const auto& w = a.as<DihedralWord>().letters;
        return w.empty() ? "e" : w;
      }
    }
    return {};
  }

  /// Inverse of format(); free words also accept exponents ("f1^2 f2^-3").
  GroupElement parse(const std::string& raw) const {
    const std::string text = trim(raw);
    switch (kind()) {
      case Kind::finite_table:
      case Kind::permutation: {
        if (table().has_name(text)) return FiniteElement{table().index_of(text)};
        if (kind() == Kind::permutation) {
          auto p = parse_cycles(text, degree());
          for (ElementIndex i = 0; i < impl_->permutations.size(); ++i)
            if (impl_->permutations[i] == p) return FiniteElement{i};
          fail_input("permutation '" + text + "' is not in the group");
        }
        return FiniteElement{table().index_of(text)};
      }
      case Kind::free: {
        GroupElement out = identity();
        std::istringstream in(text);
        std::string token;
        while (in >> token) {
          if (token == "e") continue;
          if (token.size() < 2 || token[0] != 'f') fail_input("bad free-group letter '" + token + "'");
          auto caret = token.find('^');
          long k = parse_int(token.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
          long power = caret == std::string::npos ? 1 : parse_int(token.substr(caret + 1));
          if (k < 1 || static_cast<std::size_t>(k) > rank()) fail_input("free letter out of range in '" + token + "'");
          GroupElement letter = FreeWord{{static_cast<int>(power < 0 ? -k : k)}};
          for (long i = 0; i < std::abs(power); ++i) out = multiply(out, letter);
        }
        return out;
      }
      case Kind::free_abelian: {
        auto coords = parse_coords(text);
        if (coords.size() != rank()) fail_input("lattice vector '" + text + "' has wrong dimension");
        return LatticeVector{std::move(coords)};
      }
      case Kind::product_zn_f: {
        // ((c1,...,cn),name)
        if (text.size() < 2 || text.front() != '(' || text.back() != ')') fail_input("bad product element '" + text + "'");
        auto close = text.find(')');
        if (close == std::string::npos || close + 1 >= text.size() || text[close + 1] != ',')
          fail_input("bad product element '" + text + "'");
        auto coords = parse_coords(text.substr(1, close));
        if (coords.size() != rank()) fail_input("product element '" + text + "' has wrong dimension");
        auto name = trim(text.substr(close + 2, text.size() - close - 3));
        return ProductElement{std::move(coords), table().index_of(name)};
      }
      case Kind::dihedral_infinite: {
        if (text.empty() || text == "e") return DihedralWord{};
        GroupElement out = identity();
        for (char c : text) {
          if (c != 'x' && c != 'y') fail_input("bad dihedral word '" + text + "'");
          out = multiply(out, DihedralWord{std::string(1, c)});
        }
        return out;
      }
    }
    return {};
  }

  static const char* kind_name(Kind kind) {
    switch (kind) {
      case Kind::finite_table:
        return "finite-table";
      case Kind::permutation:
        return "permutation";
      case Kind::free:
        return "free";
      case Kind::free_abelian:
        return "free-abelian";
      case Kind::product_zn_f:
        return "product-zn-f";
      case Kind::dihedral_infinite:
        return "dihedral-infinite";
    }
    return "unknown";
  }

 private:
  struct Impl {
    Kind kind = Kind::finite_table;
    std::string label;
    std::size_t rank = 0;
    std::size_t degree = 0;
    std::shared_ptr<const FiniteTable> table;
    std::vector<Permutation> permutations;
  };

  explicit Group(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  static std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
  }

  static long parse_int(const std::string& s) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(s, &used);
    } catch (const std::exception&) {
      fail_input("expected an integer, got '" + s + "'");
    }
    if (used != s.size()) fail_input("expected an integer, got '" + s + "'");
    return v;
  }

  static std::string format_coords(const std::vector<std::int64_t>& coords) {
    std::string out = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(coords[i]);
    }
    return out + ")";
  }

  static std::vector<std::int64_t> parse_coords(const std::string& raw) {
    std::string text = trim(raw);
    if (text.size() < 2 || text.front() != '(' || text.back() != ')') fail_input("bad vector '" + raw + "'");
    std::vector<std::int64_t> out;
    std::stringstream in(text.substr(1, text.size() - 2));
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(parse_int(trim(item)));
    return out;
  }

  std::shared_ptr<const Impl> impl_;
};

}  // namespace confgroup
