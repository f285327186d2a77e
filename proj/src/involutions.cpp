#include "twinv/involutions.hpp"

#include <algorithm>

#include "twinv/characters.hpp"
#include "twinv/errors.hpp"
#include "twinv/number_theory.hpp"

namespace twinv {

std::vector<Element> twisted_involution_set(const Group& g, const Automorphism& sigma) {
  std::vector<Element> out;
  for (const Element& x : g.elements()) {
    if (apply(g, sigma, x) == g.inv(x)) out.push_back(x);
  }
  return out;
}

std::int64_t twisted_involution_count(const Group& g, const Automorphism& sigma) {
  std::int64_t count = 0;
  for (const Element& x : g.elements()) {
    if (apply(g, sigma, x) == g.inv(x)) ++count;
  }
  return count;
}

ClosedFormCount count_closed_form(std::int64_t l, std::int64_t u, std::int64_t v) {
  if (l < 3) throw UnsupportedGroupError("closed form needs l >= 3, got l = " + std::to_string(l));
  if (gcd(u, l) != 1) {
    throw UsageError("u = " + std::to_string(u) + " is not coprime to l = " + std::to_string(l));
  }
  ClosedFormCount out;
  out.rotations = gcd(u + 1, l);
  const std::int64_t d = gcd(u - 1, l);
  out.reflections = mod(v, l) % d == 0 ? d : 0;
  out.total = out.rotations + out.reflections;
  return out;
}

ClosedFormCount count_closed_form(const DihedralAut& aut) { return count_closed_form(aut.l, aut.u, aut.v); }

std::int64_t identity_involution_count(std::int64_t l) {
  if (l < 3) throw UnsupportedGroupError("D_l needs l >= 3, got l = " + std::to_string(l));
  return l % 2 == 0 ? l + 2 : l + 1;
}

std::int64_t max_twisted_count(std::int64_t l) {
  std::int64_t best = 0;
  for (std::int64_t u = 1; u < l; ++u) {
    if (gcd(u, l) != 1) continue;
    // v = 0 maximizes the reflection term for every u.
    best = std::max(best, count_closed_form(l, u, 0).total);
  }
  return best;
}

std::int64_t InvolutionRecord::m() const {
  if (m_brute) return *m_brute;
  if (closed) return closed->total;
  throw std::logic_error("involution record has no count");
}

bool InvolutionRecord::counts_agree() const {
  return !m_brute || !closed || *m_brute == closed->total;
}

InvolutionRecord make_record(const Group& g, const Automorphism& sigma, RecordOptions options) {
  if (!acts_on(sigma, g)) throw UsageError("automorphism " + to_string(sigma) + " does not act on " + g.name());
  InvolutionRecord rec{g.name(), sigma, {}, {}, {}, degree_sum(g), 0, {}};
  const bool dihedral = g.kind() == GroupKind::Dihedral;

  if (dihedral && options.closed_form) rec.closed = count_closed_form(std::get<DihedralAut>(sigma));
  if (options.list_members) {
    const auto set = twisted_involution_set(g, sigma);
    rec.m_brute = static_cast<std::int64_t>(set.size());
    for (const Element& x : set) rec.members.push_back(to_string(x));
  } else if (options.brute_force || !rec.closed) {
    rec.m_brute = twisted_involution_count(g, sigma);
  }

  if (dihedral) {
    rec.identity_count = identity_involution_count(g.first());
  } else {
    for (const Element& x : g.elements()) {
      if (g.element_order(x) <= 2) ++rec.identity_count;
    }
  }
  return rec;
}

}  // namespace twinv
