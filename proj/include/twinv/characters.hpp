#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "twinv/automorphism.hpp"
#include "twinv/group.hpp"

namespace twinv {

// Residual allowed between a floating-point sum and the integer it must be.
inline constexpr double kIntegralityTolerance = 1e-6;

// Irreducible complex characters of a supported group, indexed
// [irreducible][conjugacy class].
//
// Dihedral irreducibles come first as linear characters, then the
// two-dimensional rho_j with rho_j(r^m) = 2 cos(2 pi j m / l) and
// rho_j(r^m s) = 0. Abelian characters are x -> exp(2 pi i <j, x> / n).
struct CharacterTable {
  Group group;
  std::vector<std::vector<Element>> classes;
  std::vector<std::size_t> class_of;  // element index -> class index
  std::vector<std::string> labels;
  std::vector<std::int64_t> degrees;
  std::vector<std::vector<std::complex<double>>> values;

  std::size_t size() const noexcept { return labels.size(); }
  std::complex<double> value(std::size_t irrep, const Element& x) const;
};

CharacterTable dihedral_character_table(std::int64_t l);
CharacterTable character_table(const Group& g);

// Sum of irreducible degrees: l + 2 (l even) or l + 1 (l odd) for D_l,
// |G| for abelian groups.
std::int64_t degree_sum(const Group& g);

// max |<chi_i, chi_j> - delta_ij| over all pairs.
double orthogonality_defect(const CharacterTable& table);

// (1/|G|) sum_g chi(g^2), rounded. Throws NumericalIntegrityError when the
// raw sum is not within kIntegralityTolerance of -1, 0 or 1.
int fs_indicator(const CharacterTable& table, std::size_t irrep);

struct TwistedIndicator {
  std::complex<double> raw;
  bool integral = false;  // aut is involutive and raw rounded cleanly
  int value = 0;          // meaningful only when integral
};

// (1/|G|) sum_g chi(g sigma(g)). Rounded to {-1, 0, 1} when sigma^2 = id;
// otherwise the raw value is returned as a diagnostic.
TwistedIndicator twisted_fs_indicator(const CharacterTable& table, std::size_t irrep, const Automorphism& sigma);

struct RealDegreeCheck {
  std::int64_t real_degree_sum = 0;  // sum of degrees with indicator 1
  std::int64_t involution_count = 0;  // 1 + #{x : ord(x) = 2}
};

RealDegreeCheck real_degree_sum_check(const Group& g);
RealDegreeCheck real_degree_sum_check(const CharacterTable& table);

}  // namespace twinv
