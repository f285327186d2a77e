#include "twinv/group.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "twinv/errors.hpp"
#include "twinv/number_theory.hpp"

namespace twinv {

namespace {

constexpr std::int64_t kMaxParameter = 1'000'000;

void check_parameter(std::int64_t value, std::int64_t lo, const char* what) {
  if (value < lo || value > kMaxParameter) {
    throw UsageError(std::string(what) + " must lie in [" + std::to_string(lo) + ", " +
                     std::to_string(kMaxParameter) + "], got " + std::to_string(value));
  }
}

std::int64_t parse_positive(std::string_view token, std::string_view literal) {
  std::int64_t value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc{} || ptr != last) {
    throw UsageError("bad group literal '" + std::string(literal) + "': '" + std::string(token) +
                     "' is not an integer");
  }
  return value;
}

}  // namespace

Group Group::dihedral(std::int64_t l) {
  if (l < 3) {
    throw UnsupportedGroupError("D:" + std::to_string(l) + " is not supported; dihedral groups need l >= 3");
  }
  check_parameter(l, 3, "dihedral parameter l");
  return Group(GroupKind::Dihedral, l, 0);
}

Group Group::cyclic(std::int64_t n) {
  check_parameter(n, 1, "cyclic order n");
  return Group(GroupKind::Cyclic, n, 0);
}

Group Group::two_cyclic(std::int64_t m, std::int64_t n) {
  check_parameter(m, 1, "first cyclic factor m");
  check_parameter(n, 1, "second cyclic factor n");
  return Group(GroupKind::TwoCyclic, m, n);
}

Group Group::parse(std::string_view literal) {
  if (literal.starts_with("D:")) return dihedral(parse_positive(literal.substr(2), literal));
  if (literal.starts_with("Z:")) {
    const std::string_view rest = literal.substr(2);
    const auto x = rest.find("xZ:");
    if (x == std::string_view::npos) return cyclic(parse_positive(rest, literal));
    return two_cyclic(parse_positive(rest.substr(0, x), literal), parse_positive(rest.substr(x + 3), literal));
  }
  throw UsageError("unknown group kind in '" + std::string(literal) + "' (expected D:<l>, Z:<n> or Z:<m>xZ:<n>)");
}

std::int64_t Group::order() const noexcept {
  switch (kind_) {
    case GroupKind::Dihedral: return 2 * first_;
    case GroupKind::Cyclic: return first_;
    case GroupKind::TwoCyclic: return first_ * second_;
  }
  return 0;
}

std::string Group::name() const {
  switch (kind_) {
    case GroupKind::Dihedral: return "D:" + std::to_string(first_);
    case GroupKind::Cyclic: return "Z:" + std::to_string(first_);
    case GroupKind::TwoCyclic: return "Z:" + std::to_string(first_) + "xZ:" + std::to_string(second_);
  }
  return {};
}

Element Group::identity() const {
  switch (kind_) {
    case GroupKind::Dihedral: return DihedralElement{};
    case GroupKind::Cyclic: return CyclicElement{};
    case GroupKind::TwoCyclic: return PairElement{};
  }
  return {};
}

bool Group::contains(const Element& x) const noexcept {
  switch (kind_) {
    case GroupKind::Dihedral: {
      const auto* d = std::get_if<DihedralElement>(&x);
      return d != nullptr && d->k >= 0 && d->k < first_;
    }
    case GroupKind::Cyclic: {
      const auto* c = std::get_if<CyclicElement>(&x);
      return c != nullptr && c->residue >= 0 && c->residue < first_;
    }
    case GroupKind::TwoCyclic: {
      const auto* p = std::get_if<PairElement>(&x);
      return p != nullptr && p->first >= 0 && p->first < first_ && p->second >= 0 && p->second < second_;
    }
  }
  return false;
}

void Group::require_member(const Element& x) const {
  if (!contains(x)) throw UsageError("element " + to_string(x) + " does not belong to " + name());
}

Element Group::mul(const Element& x, const Element& y) const {
  require_member(x);
  require_member(y);
  switch (kind_) {
    case GroupKind::Dihedral: {
      const auto& a = std::get<DihedralElement>(x);
      const auto& b = std::get<DihedralElement>(y);
      // s r^j = r^{-j} s
      const std::int64_t k = a.refl ? a.k - b.k : a.k + b.k;
      return DihedralElement{mod(k, first_), a.refl != b.refl};
    }
    case GroupKind::Cyclic: {
      const auto& a = std::get<CyclicElement>(x);
      const auto& b = std::get<CyclicElement>(y);
      return CyclicElement{mod(a.residue + b.residue, first_)};
    }
    case GroupKind::TwoCyclic: {
      const auto& a = std::get<PairElement>(x);
      const auto& b = std::get<PairElement>(y);
      return PairElement{mod(a.first + b.first, first_), mod(a.second + b.second, second_)};
    }
  }
  return {};
}

Element Group::inv(const Element& x) const {
  require_member(x);
  switch (kind_) {
    case GroupKind::Dihedral: {
      const auto& a = std::get<DihedralElement>(x);
      if (a.refl) return a;
      return DihedralElement{mod(-a.k, first_), false};
    }
    case GroupKind::Cyclic:
      return CyclicElement{mod(-std::get<CyclicElement>(x).residue, first_)};
    case GroupKind::TwoCyclic: {
      const auto& a = std::get<PairElement>(x);
      return PairElement{mod(-a.first, first_), mod(-a.second, second_)};
    }
  }
  return {};
}

Element Group::pow(const Element& x, std::int64_t e) const {
  Element base = e < 0 ? inv(x) : x;
  std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
  Element acc = identity();
  while (n > 0) {
    if (n & 1U) acc = mul(acc, base);
    base = mul(base, base);
    n >>= 1U;
  }
  return acc;
}

std::int64_t Group::element_order(const Element& x) const {
  require_member(x);
  switch (kind_) {
    case GroupKind::Dihedral: {
      const auto& a = std::get<DihedralElement>(x);
      if (a.refl) return 2;
      return first_ / gcd(a.k, first_);
    }
    case GroupKind::Cyclic:
      return first_ / gcd(std::get<CyclicElement>(x).residue, first_);
    case GroupKind::TwoCyclic: {
      const auto& a = std::get<PairElement>(x);
      return std::lcm(first_ / gcd(a.first, first_), second_ / gcd(a.second, second_));
    }
  }
  return 0;
}

std::vector<Element> Group::elements() const {
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(order()));
  for (std::size_t i = 0; i < static_cast<std::size_t>(order()); ++i) out.push_back(element_at(i));
  return out;
}

std::size_t Group::index_of(const Element& x) const {
  require_member(x);
  switch (kind_) {
    case GroupKind::Dihedral: {
      const auto& a = std::get<DihedralElement>(x);
      return static_cast<std::size_t>(a.refl ? first_ + a.k : a.k);
    }
    case GroupKind::Cyclic:
      return static_cast<std::size_t>(std::get<CyclicElement>(x).residue);
    case GroupKind::TwoCyclic: {
      const auto& a = std::get<PairElement>(x);
      return static_cast<std::size_t>(a.first * second_ + a.second);
    }
  }
  return 0;
}

Element Group::element_at(std::size_t index) const {
  const auto i = static_cast<std::int64_t>(index);
  if (i >= order()) {
    throw UsageError("element index " + std::to_string(index) + " out of range for " + name());
  }
  switch (kind_) {
    case GroupKind::Dihedral:
      return i < first_ ? DihedralElement{i, false} : DihedralElement{i - first_, true};
    case GroupKind::Cyclic: return CyclicElement{i};
    case GroupKind::TwoCyclic: return PairElement{i / second_, i % second_};
  }
  return {};
}

std::vector<std::vector<Element>> conjugacy_classes(const Group& g) {
  const auto n = static_cast<std::size_t>(g.order());
  const std::vector<Element> all = g.elements();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Element>> classes;
  // Scanning in canonical order makes each class's first member its minimum,
  // so the classes come out already sorted.
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> members;
    for (const Element& y : all) {
      const std::size_t j = g.index_of(g.mul(g.mul(y, all[i]), g.inv(y)));
      if (!seen[j]) {
        seen[j] = true;
        members.push_back(j);
      }
    }
    std::sort(members.begin(), members.end());
    std::vector<Element> cls;
    cls.reserve(members.size());
    for (std::size_t j : members) cls.push_back(all[j]);
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::string to_string(const Element& x) {
  struct Visitor {
    std::string operator()(const DihedralElement& d) const {
      std::string out;
      if (d.k == 1) out = "r";
      else if (d.k > 1) out = "r^" + std::to_string(d.k);
      if (d.refl) out += "s";
      return out.empty() ? "e" : out;
    }
    std::string operator()(const CyclicElement& c) const { return std::to_string(c.residue); }
    std::string operator()(const PairElement& p) const {
      return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
    }
  };
  return std::visit(Visitor{}, x);
}

}  // namespace twinv
