#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace twinv {

// r^k (refl == false) or r^k s (refl == true), with 0 <= k < l.
struct DihedralElement {
  std::int64_t k = 0;
  bool refl = false;

  friend bool operator==(const DihedralElement&, const DihedralElement&) = default;
  // Canonical order: every rotation precedes every reflection, then by k.
  friend std::strong_ordering operator<=>(const DihedralElement& x, const DihedralElement& y) {
    if (x.refl != y.refl) return x.refl ? std::strong_ordering::greater : std::strong_ordering::less;
    return x.k <=> y.k;
  }
};

struct CyclicElement {
  std::int64_t residue = 0;
  friend auto operator<=>(const CyclicElement&, const CyclicElement&) = default;
};

struct PairElement {
  std::int64_t first = 0;
  std::int64_t second = 0;
  friend auto operator<=>(const PairElement&, const PairElement&) = default;
};

using Element = std::variant<DihedralElement, CyclicElement, PairElement>;

enum class GroupKind { Dihedral, Cyclic, TwoCyclic };

// One of the finite groups D_l (l >= 3), Z_n, Z_m x Z_n.
//
// Elements are enumerated in a fixed canonical order and every element has
// a stable index in [0, order()). Dihedral: r^0..r^{l-1}, then s..r^{l-1}s.
// Cyclic: residues ascending. TwoCyclic: pairs in lexicographic order.
class Group {
 public:
  static Group dihedral(std::int64_t l);
  static Group cyclic(std::int64_t n);
  static Group two_cyclic(std::int64_t m, std::int64_t n);

  // Parses "D:<l>", "Z:<n>" or "Z:<m>xZ:<n>".
  static Group parse(std::string_view literal);

  GroupKind kind() const noexcept { return kind_; }
  // l for D_l, n for Z_n, m for Z_m x Z_n.
  std::int64_t first() const noexcept { return first_; }
  // n for Z_m x Z_n, zero otherwise.
  std::int64_t second() const noexcept { return second_; }
  std::int64_t order() const noexcept;
  bool is_abelian() const noexcept { return kind_ != GroupKind::Dihedral; }

  std::string name() const;

  Element identity() const;
  bool contains(const Element& x) const noexcept;

  Element mul(const Element& x, const Element& y) const;
  Element inv(const Element& x) const;
  Element pow(const Element& x, std::int64_t e) const;
  std::int64_t element_order(const Element& x) const;

  std::vector<Element> elements() const;
  std::size_t index_of(const Element& x) const;
  Element element_at(std::size_t index) const;

  friend bool operator==(const Group&, const Group&) = default;

 private:
  Group(GroupKind kind, std::int64_t first, std::int64_t second)
      : kind_(kind), first_(first), second_(second) {}

  void require_member(const Element& x) const;

  GroupKind kind_;
  std::int64_t first_;
  std::int64_t second_;
};

// Partition of the group under x -> y x y^-1. Each class is sorted in
// canonical order and classes are sorted by their first element.
// Costs O(|G|^2) group operations.
std::vector<std::vector<Element>> conjugacy_classes(const Group& g);

// "e", "r", "r^2", "s", "rs", "r^3s"; "4"; "(1,2)".
std::string to_string(const Element& x);

}  // namespace twinv
