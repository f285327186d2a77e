#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twinv/automorphism.hpp"
#include "twinv/group.hpp"

namespace twinv {

// S_sigma = { x : sigma(x) = x^-1 } in canonical element order, by
// exhaustive search over the group.
std::vector<Element> twisted_involution_set(const Group& g, const Automorphism& sigma);
std::int64_t twisted_involution_count(const Group& g, const Automorphism& sigma);

// Closed-form |S_sigma| for sigma = (u, v) on D_l.
//
// A rotation r^k is twisted-involutive iff (u + 1) k = 0 (mod l), which has
// gcd(u + 1, l) solutions. A reflection r^k s is iff (u - 1) k = -v (mod l),
// which has gcd(u - 1, l) solutions when that gcd divides v and none
// otherwise (gcd(0, l) = l covers u = 1).
struct ClosedFormCount {
  std::int64_t total = 0;
  std::int64_t rotations = 0;
  std::int64_t reflections = 0;

  friend bool operator==(const ClosedFormCount&, const ClosedFormCount&) = default;
};

ClosedFormCount count_closed_form(std::int64_t l, std::int64_t u, std::int64_t v);
ClosedFormCount count_closed_form(const DihedralAut& aut);

// l + 2 for even l, l + 1 for odd l.
std::int64_t identity_involution_count(std::int64_t l);

// max over all (u, v) of count_closed_form(l, u, v).total.
std::int64_t max_twisted_count(std::int64_t l);

struct InvolutionRecord {
  std::string group;
  Automorphism aut;
  std::string label;                       // optional row name, e.g. "sigma_3"
  std::optional<std::int64_t> m_brute;     // exhaustive |S_sigma|
  std::optional<ClosedFormCount> closed;   // dihedral only
  std::int64_t degree_sum = 0;             // T(G)
  std::int64_t identity_count = 0;         // m_e
  std::vector<std::string> members;        // S_sigma, when requested

  // Brute-force count when present, closed form otherwise.
  std::int64_t m() const;
  bool inequality_holds() const { return m() <= degree_sum; }
  bool equality() const { return m() == degree_sum; }
  // False only when both counts exist and differ.
  bool counts_agree() const;
};

struct RecordOptions {
  bool brute_force = false;
  bool closed_form = true;     // ignored for abelian groups
  bool list_members = false;   // implies brute_force
};

InvolutionRecord make_record(const Group& g, const Automorphism& sigma, RecordOptions options = {});

}  // namespace twinv
