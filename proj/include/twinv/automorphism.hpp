#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "twinv/group.hpp"

namespace twinv {

// The automorphism r -> r^u, s -> r^v s of D_l, with gcd(u, l) = 1 and
// 0 <= v < l. Identity is (1, 0).
//
// Convention: u multiplies rotation exponents and v shifts reflections, so
// r^k s -> r^{uk+v} s. Some texts write the same map as f_{v,u}.
struct DihedralAut {
  std::int64_t l = 3;
  std::int64_t u = 1;
  std::int64_t v = 0;

  // Validates and canonicalizes (u, v) modulo l.
  static DihedralAut make(std::int64_t l, std::int64_t u, std::int64_t v);
  static DihedralAut identity(std::int64_t l) { return make(l, 1, 0); }

  friend auto operator<=>(const DihedralAut&, const DihedralAut&) = default;
};

// x -> w x on Z_n, gcd(w, n) = 1.
struct CyclicAut {
  std::int64_t n = 1;
  std::int64_t w = 1;

  static CyclicAut make(std::int64_t n, std::int64_t w);
  friend auto operator<=>(const CyclicAut&, const CyclicAut&) = default;
};

// (x, y) -> (a x + b y, c x + d y) on Z_n x Z_n, det a unit mod n.
// Entries stored row-major as {a, b, c, d}.
struct MatrixAut {
  std::int64_t n = 1;
  std::array<std::int64_t, 4> entries{1, 0, 0, 1};

  static MatrixAut make(std::int64_t n, std::array<std::int64_t, 4> entries);
  std::int64_t det() const;
  friend auto operator<=>(const MatrixAut&, const MatrixAut&) = default;
};

using AbelianAut = std::variant<CyclicAut, MatrixAut>;
using Automorphism = std::variant<DihedralAut, CyclicAut, MatrixAut>;

DihedralElement apply(const DihedralAut& aut, const DihedralElement& x);

// a1 after a2: (u1 u2, u1 v2 + v1).
DihedralAut compose(const DihedralAut& a1, const DihedralAut& a2);

// All l * phi(l) automorphisms of D_l sorted by (u, v).
std::vector<DihedralAut> enumerate_dihedral_auts(std::int64_t l);

// Units mod n for Z_n; invertible 2x2 matrices for Z_n x Z_n (n <= 31).
std::vector<AbelianAut> enumerate_abelian_auts(const Group& g);

// Either of the above, lifted to Automorphism.
std::vector<Automorphism> enumerate_automorphisms(const Group& g);

Automorphism identity_automorphism(const Group& g);

bool acts_on(const Automorphism& aut, const Group& g) noexcept;

// Throws UsageError when aut is not an automorphism of g or x is not in g.
Element apply(const Group& g, const Automorphism& aut, const Element& x);

Automorphism compose(const Automorphism& a1, const Automorphism& a2);
bool is_identity(const Automorphism& aut);
// aut o aut == identity
bool is_involutive(const Automorphism& aut);

// "u,v" for dihedral, "w" for cyclic, "a,b,c,d" for matrices.
std::string to_string(const Automorphism& aut);

// Inverse of to_string for the given group.
Automorphism parse_automorphism(const Group& g, std::string_view literal);

// Image index for each element index.
using ElementMap = std::vector<std::size_t>;

ElementMap as_element_map(const Group& g, const Automorphism& aut);

// Every bijective homomorphism g -> g, found by assigning images to a fixed
// generating set and extending along the Cayley graph. Requires |g| <= 200.
// Sorted lexicographically.
std::vector<ElementMap> brute_force_auts(const Group& g);

}  // namespace twinv
