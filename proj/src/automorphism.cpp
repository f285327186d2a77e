#include "twinv/automorphism.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <optional>

#include "twinv/errors.hpp"
#include "twinv/number_theory.hpp"

namespace twinv {

namespace {

constexpr std::int64_t kMaxMatrixModulus = 31;
constexpr std::int64_t kMaxBruteForceOrder = 200;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::vector<std::int64_t> parse_integer_list(std::string_view literal) {
  std::vector<std::int64_t> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = literal.find(',', start);
    const std::string_view token =
        literal.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    std::int64_t value = 0;
    const char* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), last, value);
    if (token.empty() || ec != std::errc{} || ptr != last) {
      throw UsageError("bad automorphism literal '" + std::string(literal) + "': '" + std::string(token) +
                       "' is not an integer");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

const char* kind_name(const Automorphism& aut) {
  return std::visit(Overloaded{[](const DihedralAut&) { return "dihedral"; },
                               [](const CyclicAut&) { return "cyclic"; },
                               [](const MatrixAut&) { return "matrix"; }},
                    aut);
}

}  // namespace

DihedralAut DihedralAut::make(std::int64_t l, std::int64_t u, std::int64_t v) {
  if (l < 3) throw UnsupportedGroupError("automorphisms of D_l need l >= 3, got l = " + std::to_string(l));
  const std::int64_t uu = mod(u, l);
  if (gcd(uu, l) != 1) {
    throw UsageError("u = " + std::to_string(u) + " is not coprime to l = " + std::to_string(l));
  }
  return DihedralAut{l, uu, mod(v, l)};
}

CyclicAut CyclicAut::make(std::int64_t n, std::int64_t w) {
  if (n < 1) throw UsageError("cyclic modulus must be >= 1");
  const std::int64_t ww = mod(w, n);
  if (gcd(ww, n) != 1) {
    throw UsageError("w = " + std::to_string(w) + " is not a unit modulo " + std::to_string(n));
  }
  return CyclicAut{n, ww};
}

MatrixAut MatrixAut::make(std::int64_t n, std::array<std::int64_t, 4> entries) {
  if (n < 1) throw UsageError("matrix modulus must be >= 1");
  for (auto& e : entries) e = mod(e, n);
  MatrixAut m{n, entries};
  if (gcd(m.det(), n) != 1) throw UsageError("matrix " + to_string(Automorphism{m}) + " is not invertible mod " + std::to_string(n));
  return m;
}

std::int64_t MatrixAut::det() const {
  const auto& [a, b, c, d] = entries;
  return mod(mul_mod(a, d, n) - mul_mod(b, c, n), n);
}

DihedralElement apply(const DihedralAut& aut, const DihedralElement& x) {
  if (x.k < 0 || x.k >= aut.l) throw UsageError("element exponent out of range for D_" + std::to_string(aut.l));
  const std::int64_t k = mul_mod(aut.u, x.k, aut.l);
  return DihedralElement{x.refl ? mod(k + aut.v, aut.l) : k, x.refl};
}

DihedralAut compose(const DihedralAut& a1, const DihedralAut& a2) {
  if (a1.l != a2.l) throw UsageError("cannot compose automorphisms of D_" + std::to_string(a1.l) + " and D_" + std::to_string(a2.l));
  return DihedralAut{a1.l, mul_mod(a1.u, a2.u, a1.l), mod(mul_mod(a1.u, a2.v, a1.l) + a1.v, a1.l)};
}

std::vector<DihedralAut> enumerate_dihedral_auts(std::int64_t l) {
  if (l < 3) throw UnsupportedGroupError("automorphisms of D_l need l >= 3, got l = " + std::to_string(l));
  std::vector<DihedralAut> out;
  out.reserve(static_cast<std::size_t>(l * euler_phi(l)));
  for (std::int64_t u = 1; u < l; ++u) {
    if (gcd(u, l) != 1) continue;
    for (std::int64_t v = 0; v < l; ++v) out.push_back(DihedralAut{l, u, v});
  }
  return out;
}

std::vector<AbelianAut> enumerate_abelian_auts(const Group& g) {
  std::vector<AbelianAut> out;
  switch (g.kind()) {
    case GroupKind::Cyclic: {
      const std::int64_t n = g.first();
      if (n == 1) {
        out.emplace_back(CyclicAut{1, 0});
        break;
      }
      for (std::int64_t w = 1; w < n; ++w) {
        if (gcd(w, n) == 1) out.emplace_back(CyclicAut{n, w});
      }
      break;
    }
    case GroupKind::TwoCyclic: {
      const std::int64_t n = g.first();
      if (g.second() != n) {
        throw UnsupportedGroupError("matrix automorphisms need equal factors, got " + g.name());
      }
      if (n > kMaxMatrixModulus) {
        throw UnsupportedGroupError("matrix automorphism enumeration is capped at n <= 31, got " + g.name());
      }
      for (std::int64_t a = 0; a < n; ++a)
        for (std::int64_t b = 0; b < n; ++b)
          for (std::int64_t c = 0; c < n; ++c)
            for (std::int64_t d = 0; d < n; ++d) {
              MatrixAut m{n, {a, b, c, d}};
              if (gcd(m.det(), n) == 1) out.emplace_back(m);
            }
      break;
    }
    case GroupKind::Dihedral:
      throw UnsupportedGroupError(g.name() + " is not abelian");
  }
  return out;
}

std::vector<Automorphism> enumerate_automorphisms(const Group& g) {
  std::vector<Automorphism> out;
  if (g.kind() == GroupKind::Dihedral) {
    for (const auto& a : enumerate_dihedral_auts(g.first())) out.emplace_back(a);
  } else {
    for (const auto& a : enumerate_abelian_auts(g)) {
      std::visit([&](const auto& alt) { out.emplace_back(alt); }, a);
    }
  }
  return out;
}

Automorphism identity_automorphism(const Group& g) {
  switch (g.kind()) {
    case GroupKind::Dihedral: return DihedralAut::identity(g.first());
    case GroupKind::Cyclic: return CyclicAut{g.first(), g.first() == 1 ? 0 : 1};
    case GroupKind::TwoCyclic:
      if (g.first() != g.second()) {
        throw UnsupportedGroupError("matrix automorphisms need equal factors, got " + g.name());
      }
      return MatrixAut::make(g.first(), {1, 0, 0, 1});
  }
  return {};
}

bool acts_on(const Automorphism& aut, const Group& g) noexcept {
  return std::visit(
      Overloaded{[&](const DihedralAut& a) { return g.kind() == GroupKind::Dihedral && g.first() == a.l; },
                 [&](const CyclicAut& a) { return g.kind() == GroupKind::Cyclic && g.first() == a.n; },
                 [&](const MatrixAut& a) {
                   return g.kind() == GroupKind::TwoCyclic && g.first() == a.n && g.second() == a.n;
                 }},
      aut);
}

Element apply(const Group& g, const Automorphism& aut, const Element& x) {
  if (!acts_on(aut, g)) {
    throw UsageError(std::string(kind_name(aut)) + " automorphism " + to_string(aut) + " does not act on " + g.name());
  }
  if (!g.contains(x)) throw UsageError("element " + to_string(x) + " does not belong to " + g.name());
  return std::visit(
      Overloaded{[&](const DihedralAut& a) -> Element { return apply(a, std::get<DihedralElement>(x)); },
                 [&](const CyclicAut& a) -> Element {
                   return CyclicElement{mul_mod(a.w, std::get<CyclicElement>(x).residue, a.n)};
                 },
                 [&](const MatrixAut& a) -> Element {
                   const auto& p = std::get<PairElement>(x);
                   const auto& [m00, m01, m10, m11] = a.entries;
                   return PairElement{mod(mul_mod(m00, p.first, a.n) + mul_mod(m01, p.second, a.n), a.n),
                                      mod(mul_mod(m10, p.first, a.n) + mul_mod(m11, p.second, a.n), a.n)};
                 }},
      aut);
}

Automorphism compose(const Automorphism& a1, const Automorphism& a2) {
  if (a1.index() != a2.index()) throw UsageError("cannot compose automorphisms of different group kinds");
  return std::visit(
      Overloaded{[&](const DihedralAut& x) -> Automorphism { return compose(x, std::get<DihedralAut>(a2)); },
                 [&](const CyclicAut& x) -> Automorphism {
                   const auto& y = std::get<CyclicAut>(a2);
                   if (x.n != y.n) throw UsageError("cannot compose automorphisms of different cyclic groups");
                   return CyclicAut{x.n, mul_mod(x.w, y.w, x.n)};
                 },
                 [&](const MatrixAut& x) -> Automorphism {
                   const auto& y = std::get<MatrixAut>(a2);
                   if (x.n != y.n) throw UsageError("cannot compose automorphisms over different moduli");
                   const auto& p = x.entries;
                   const auto& q = y.entries;
                   const std::int64_t n = x.n;
                   auto dot = [n](std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
                     return mod(mul_mod(a, b, n) + mul_mod(c, d, n), n);
                   };
                   return MatrixAut{n,
                                    {dot(p[0], q[0], p[1], q[2]), dot(p[0], q[1], p[1], q[3]),
                                     dot(p[2], q[0], p[3], q[2]), dot(p[2], q[1], p[3], q[3])}};
                 }},
      a1);
}

bool is_identity(const Automorphism& aut) {
  return std::visit(Overloaded{[](const DihedralAut& a) { return a.u == 1 && a.v == 0; },
                               [](const CyclicAut& a) { return a.w == mod(1, a.n); },
                               [](const MatrixAut& a) {
                                 return a.entries == std::array<std::int64_t, 4>{mod(1, a.n), 0, 0, mod(1, a.n)};
                               }},
                    aut);
}

bool is_involutive(const Automorphism& aut) { return is_identity(compose(aut, aut)); }

std::string to_string(const Automorphism& aut) {
  return std::visit(
      Overloaded{[](const DihedralAut& a) { return std::to_string(a.u) + "," + std::to_string(a.v); },
                 [](const CyclicAut& a) { return std::to_string(a.w); },
                 [](const MatrixAut& a) {
                   const auto& e = a.entries;
                   return std::to_string(e[0]) + "," + std::to_string(e[1]) + "," + std::to_string(e[2]) + "," +
                          std::to_string(e[3]);
                 }},
      aut);
}

Automorphism parse_automorphism(const Group& g, std::string_view literal) {
  const std::vector<std::int64_t> xs = parse_integer_list(literal);
  auto expect = [&](std::size_t count, const char* shape) {
    if (xs.size() != count) {
      throw UsageError("bad automorphism literal '" + std::string(literal) + "' for " + g.name() + ": expected " +
                       shape);
    }
  };
  switch (g.kind()) {
    case GroupKind::Dihedral:
      expect(2, "u,v");
      return DihedralAut::make(g.first(), xs[0], xs[1]);
    case GroupKind::Cyclic:
      expect(1, "w");
      if (g.first() == 1) return CyclicAut{1, 0};
      return CyclicAut::make(g.first(), xs[0]);
    case GroupKind::TwoCyclic:
      expect(4, "a,b,c,d");
      if (g.first() != g.second()) {
        throw UnsupportedGroupError("matrix automorphisms need equal factors, got " + g.name());
      }
      return MatrixAut::make(g.first(), {xs[0], xs[1], xs[2], xs[3]});
  }
  return {};
}

ElementMap as_element_map(const Group& g, const Automorphism& aut) {
  const auto n = static_cast<std::size_t>(g.order());
  ElementMap map(n);
  for (std::size_t i = 0; i < n; ++i) map[i] = g.index_of(apply(g, aut, g.element_at(i)));
  return map;
}

namespace {

std::vector<Element> generators(const Group& g) {
  switch (g.kind()) {
    case GroupKind::Dihedral: return {DihedralElement{1, false}, DihedralElement{0, true}};
    case GroupKind::Cyclic: return {CyclicElement{mod(1, g.first())}};
    case GroupKind::TwoCyclic: return {PairElement{mod(1, g.first()), 0}, PairElement{0, mod(1, g.second())}};
  }
  return {};
}

// Extends generator images to a map on all of g. Returns nothing when the
// assignment is not a well-defined homomorphism or is not bijective.
std::optional<ElementMap> extend(const Group& g, const std::vector<Element>& gens,
                                 const std::vector<Element>& images) {
  const auto n = static_cast<std::size_t>(g.order());
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  ElementMap map(n, kUnset);
  const std::size_t e = g.index_of(g.identity());
  map[e] = e;
  std::deque<std::size_t> frontier{e};
  while (!frontier.empty()) {
    const std::size_t i = frontier.front();
    frontier.pop_front();
    const Element x = g.element_at(i);
    const Element fx = g.element_at(map[i]);
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const std::size_t target = g.index_of(g.mul(x, gens[j]));
      const std::size_t image = g.index_of(g.mul(fx, images[j]));
      if (map[target] == kUnset) {
        map[target] = image;
        frontier.push_back(target);
      } else if (map[target] != image) {
        return std::nullopt;
      }
    }
  }
  std::vector<bool> hit(n, false);
  for (std::size_t i : map) {
    if (i == kUnset || hit[i]) return std::nullopt;
    hit[i] = true;
  }
  return map;
}

}  // namespace

std::vector<ElementMap> brute_force_auts(const Group& g) {
  if (g.order() > kMaxBruteForceOrder) {
    throw UsageError("brute-force automorphism search is limited to order <= 200, got " + g.name());
  }
  const std::vector<Element> gens = generators(g);
  const std::vector<Element> all = g.elements();

  // An automorphism preserves element orders, so only same-order images can work.
  std::vector<std::vector<Element>> candidates(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    const std::int64_t ord = g.element_order(gens[j]);
    for (const Element& y : all) {
      if (g.element_order(y) == ord) candidates[j].push_back(y);
    }
  }

  std::vector<ElementMap> out;
  std::vector<std::size_t> choice(gens.size(), 0);
  std::vector<Element> images(gens.size());
  while (true) {
    for (std::size_t j = 0; j < gens.size(); ++j) images[j] = candidates[j][choice[j]];
    if (auto map = extend(g, gens, images)) out.push_back(std::move(*map));
    std::size_t j = 0;
    for (; j < gens.size(); ++j) {
      if (++choice[j] < candidates[j].size()) break;
      choice[j] = 0;
    }
    if (j == gens.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace twinv
