#include "twinv/characters.hpp"

#include <cmath>
#include <numbers>

#include "twinv/errors.hpp"
#include "twinv/number_theory.hpp"

namespace twinv {

namespace {

using cplx = std::complex<double>;

cplx root_of_unity(std::int64_t numerator, std::int64_t denominator) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(mod(numerator, denominator)) /
                       static_cast<double>(denominator);
  return std::polar(1.0, angle);
}

void attach_classes(CharacterTable& table) {
  table.classes = conjugacy_classes(table.group);
  table.class_of.assign(static_cast<std::size_t>(table.group.order()), 0);
  for (std::size_t c = 0; c < table.classes.size(); ++c) {
    for (const Element& x : table.classes[c]) table.class_of[table.group.index_of(x)] = c;
  }
}

void fill_values(CharacterTable& table, const auto& character) {
  table.values.assign(table.size(), std::vector<cplx>(table.classes.size()));
  for (std::size_t i = 0; i < table.size(); ++i) {
    for (std::size_t c = 0; c < table.classes.size(); ++c) {
      table.values[i][c] = character(i, table.classes[c].front());
    }
  }
}

int round_checked(cplx raw, const std::string& what) {
  const double nearest = std::round(raw.real());
  if (std::abs(raw.real() - nearest) >= kIntegralityTolerance || std::abs(raw.imag()) >= kIntegralityTolerance ||
      std::abs(nearest) > 1.0) {
    throw NumericalIntegrityError(what + " = " + std::to_string(raw.real()) + (raw.imag() < 0 ? "" : "+") +
                                  std::to_string(raw.imag()) + "i is not in {-1, 0, 1}");
  }
  return static_cast<int>(nearest);
}

}  // namespace

cplx CharacterTable::value(std::size_t irrep, const Element& x) const {
  return values.at(irrep)[class_of[group.index_of(x)]];
}

CharacterTable dihedral_character_table(std::int64_t l) {
  CharacterTable t{Group::dihedral(l), {}, {}, {}, {}, {}};
  attach_classes(t);

  const bool even = l % 2 == 0;
  const std::int64_t linear = even ? 4 : 2;
  const std::int64_t planar = even ? l / 2 - 1 : (l - 1) / 2;
  t.labels = {"trivial", "sign"};
  if (even) {
    t.labels.emplace_back("eps_s");   // r -> -1, s -> 1
    t.labels.emplace_back("eps_rs");  // r -> -1, s -> -1
  }
  for (std::int64_t j = 1; j <= planar; ++j) t.labels.push_back("rho_" + std::to_string(j));
  t.degrees.assign(static_cast<std::size_t>(linear), 1);
  t.degrees.insert(t.degrees.end(), static_cast<std::size_t>(planar), 2);

  fill_values(t, [&](std::size_t i, const Element& x) -> cplx {
    const auto& d = std::get<DihedralElement>(x);
    const double alt = d.k % 2 == 0 ? 1.0 : -1.0;
    if (i >= static_cast<std::size_t>(linear)) {
      if (d.refl) return 0.0;
      const auto j = static_cast<std::int64_t>(i) - linear + 1;
      return 2.0 * std::cos(2.0 * std::numbers::pi * static_cast<double>(mul_mod(j, d.k, l)) / static_cast<double>(l));
    }
    switch (i) {
      case 0: return 1.0;
      case 1: return d.refl ? -1.0 : 1.0;
      case 2: return alt;
      default: return d.refl ? -alt : alt;
    }
  });
  return t;
}

CharacterTable character_table(const Group& g) {
  if (g.kind() == GroupKind::Dihedral) return dihedral_character_table(g.first());

  CharacterTable t{g, {}, {}, {}, {}, {}};
  attach_classes(t);
  const std::int64_t m = g.first();
  const std::int64_t n = g.kind() == GroupKind::TwoCyclic ? g.second() : 1;
  // Character j is indexed like the element with the same index.
  for (std::size_t i = 0; i < static_cast<std::size_t>(g.order()); ++i) {
    t.labels.push_back("chi_" + to_string(g.element_at(i)));
    t.degrees.push_back(1);
  }
  fill_values(t, [&](std::size_t i, const Element& x) -> cplx {
    if (g.kind() == GroupKind::Cyclic) {
      return root_of_unity(mul_mod(static_cast<std::int64_t>(i), std::get<CyclicElement>(x).residue, m), m);
    }
    const auto j = std::get<PairElement>(g.element_at(i));
    const auto& p = std::get<PairElement>(x);
    return root_of_unity(mul_mod(j.first, p.first, m), m) * root_of_unity(mul_mod(j.second, p.second, n), n);
  });
  return t;
}

std::int64_t degree_sum(const Group& g) {
  if (g.kind() == GroupKind::Dihedral) return g.first() % 2 == 0 ? g.first() + 2 : g.first() + 1;
  return g.order();
}

double orthogonality_defect(const CharacterTable& table) {
  const auto order = static_cast<double>(table.group.order());
  double worst = 0.0;
  for (std::size_t i = 0; i < table.size(); ++i) {
    for (std::size_t j = 0; j < table.size(); ++j) {
      cplx inner = 0.0;
      for (std::size_t c = 0; c < table.classes.size(); ++c) {
        inner += static_cast<double>(table.classes[c].size()) * table.values[i][c] * std::conj(table.values[j][c]);
      }
      inner /= order;
      worst = std::max(worst, std::abs(inner - (i == j ? 1.0 : 0.0)));
    }
  }
  return worst;
}

int fs_indicator(const CharacterTable& table, std::size_t irrep) {
  const Group& g = table.group;
  cplx sum = 0.0;
  for (const Element& x : g.elements()) sum += table.value(irrep, g.mul(x, x));
  return round_checked(sum / static_cast<double>(g.order()),
                       "Frobenius-Schur indicator of " + table.labels.at(irrep) + " in " + g.name());
}

TwistedIndicator twisted_fs_indicator(const CharacterTable& table, std::size_t irrep, const Automorphism& sigma) {
  const Group& g = table.group;
  if (!acts_on(sigma, g)) throw UsageError("automorphism " + to_string(sigma) + " does not act on " + g.name());
  cplx sum = 0.0;
  for (const Element& x : g.elements()) sum += table.value(irrep, g.mul(x, apply(g, sigma, x)));
  TwistedIndicator out{sum / static_cast<double>(g.order()), false, 0};
  if (is_involutive(sigma)) {
    out.value = round_checked(out.raw, "twisted indicator of " + table.labels.at(irrep) + " in " + g.name() +
                                           " under " + to_string(sigma));
    out.integral = true;
  }
  return out;
}

RealDegreeCheck real_degree_sum_check(const CharacterTable& table) {
  RealDegreeCheck out;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (fs_indicator(table, i) == 1) out.real_degree_sum += table.degrees[i];
  }
  const Group& g = table.group;
  for (const Element& x : g.elements()) {
    if (g.element_order(x) <= 2) ++out.involution_count;
  }
  return out;
}

RealDegreeCheck real_degree_sum_check(const Group& g) { return real_degree_sum_check(character_table(g)); }

}  // namespace twinv
