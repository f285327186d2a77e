#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "twinv/automorphism.hpp"
#include "twinv/errors.hpp"
#include "twinv/number_theory.hpp"

using namespace twinv;

namespace {

DihedralElement rot(std::int64_t k) { return {k, false}; }
DihedralElement ref(std::int64_t k) { return {k, true}; }

// Reads (u, v) back from the images of r and s.
DihedralAut read_off(std::int64_t l, const auto& map) {
  return DihedralAut{l, map(rot(1)).k, map(ref(0)).k};
}

}  // namespace

TEST_CASE("enumerate_dihedral_auts") {
  const auto d3 = enumerate_dihedral_auts(3);
  REQUIRE(d3.size() == 6);
  const std::vector<std::pair<std::int64_t, std::int64_t>> expect{{1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}, {2, 2}};
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(d3[i].u == expect[i].first);
    CHECK(d3[i].v == expect[i].second);
  }
  const auto d4 = enumerate_dihedral_auts(4);
  CHECK(d4.size() == 8);
  for (const auto& a : d4) CHECK((a.u == 1 || a.u == 3));
  CHECK(enumerate_dihedral_auts(6).size() == 12);

  for (std::int64_t l = 3; l <= 40; ++l) {
    const auto auts = enumerate_dihedral_auts(l);
    CHECK(static_cast<std::int64_t>(auts.size()) == l * euler_phi(l));
    CHECK(std::is_sorted(auts.begin(), auts.end()));
    CHECK(std::adjacent_find(auts.begin(), auts.end()) == auts.end());
  }
  CHECK_THROWS_AS(enumerate_dihedral_auts(2), UnsupportedGroupError);
}

TEST_CASE("apply examples") {
  CHECK(apply(DihedralAut::make(3, 2, 0), rot(1)) == rot(2));
  CHECK(apply(DihedralAut::make(3, 1, 1), ref(0)) == ref(1));
  for (std::int64_t l : {3, 8, 15}) {
    const auto id = DihedralAut::identity(l);
    for (std::int64_t k = 0; k < l; ++k) {
      CHECK(apply(id, rot(k)) == rot(k));
      CHECK(apply(id, ref(k)) == ref(k));
    }
  }
  CHECK_THROWS_AS(apply(DihedralAut::make(3, 1, 0), rot(3)), UsageError);
}

TEST_CASE("DihedralAut validation") {
  CHECK_THROWS_AS(DihedralAut::make(6, 2, 0), UsageError);
  CHECK_THROWS_AS(DihedralAut::make(6, 0, 0), UsageError);
  CHECK_THROWS_AS(DihedralAut::make(2, 1, 0), UnsupportedGroupError);
  const auto a = DihedralAut::make(5, -1, 7);
  CHECK(a.u == 4);
  CHECK(a.v == 2);
}

TEST_CASE("compose") {
  // (2,0) applied twice sends r -> r^4 = r and s -> s.
  const auto sq = DihedralAut::make(3, 2, 0);
  const auto twice = [&](const DihedralElement& x) { return apply(sq, apply(sq, x)); };
  REQUIRE(read_off(3, twice) == DihedralAut{3, 1, 0});
  CHECK(compose(sq, sq) == DihedralAut{3, 1, 0});

  CHECK(compose(DihedralAut::make(7, 1, 3), DihedralAut::make(7, 1, 5)) == DihedralAut{7, 1, 1});
  CHECK(compose(DihedralAut::make(7, 3, 4), DihedralAut::identity(7)) == DihedralAut{7, 3, 4});
  CHECK_THROWS_AS(compose(DihedralAut::identity(3), DihedralAut::identity(4)), UsageError);

  for (std::int64_t l = 3; l <= 12; ++l) {
    const auto auts = enumerate_dihedral_auts(l);
    for (const auto& a1 : auts) {
      for (const auto& a2 : auts) {
        const auto c = compose(a1, a2);
        REQUIRE(gcd(c.u, l) == 1);
        for (std::int64_t k = 0; k < l; ++k) {
          REQUIRE(apply(c, rot(k)) == apply(a1, apply(a2, rot(k))));
          REQUIRE(apply(c, ref(k)) == apply(a1, apply(a2, ref(k))));
        }
      }
    }
  }
}

TEST_CASE("enumerated automorphisms are bijective homomorphisms") {
  std::mt19937_64 rng(11);
  std::vector<Group> groups;
  for (std::int64_t l : {3, 4, 6, 9, 10}) groups.push_back(Group::dihedral(l));
  for (std::int64_t n : {1, 7, 12}) groups.push_back(Group::cyclic(n));
  for (std::int64_t n : {2, 3, 4}) groups.push_back(Group::two_cyclic(n, n));
  for (const Group& g : groups) {
    std::uniform_int_distribution<std::size_t> pick(0, static_cast<std::size_t>(g.order() - 1));
    for (const Automorphism& sigma : enumerate_automorphisms(g)) {
      for (int t = 0; t < 30; ++t) {
        const Element x = g.element_at(pick(rng));
        const Element y = g.element_at(pick(rng));
        REQUIRE(apply(g, sigma, g.mul(x, y)) == g.mul(apply(g, sigma, x), apply(g, sigma, y)));
      }
      const ElementMap map = as_element_map(g, sigma);
      CHECK(std::set<std::size_t>(map.begin(), map.end()).size() == map.size());
    }
  }
}

TEST_CASE("brute force automorphisms") {
  CHECK(brute_force_auts(Group::dihedral(3)).size() == 6);
  CHECK(brute_force_auts(Group::cyclic(8)).size() == 4);

  // |GL(2,3)| = (9 - 1)(9 - 3) by counting unit-determinant matrices.
  REQUIRE(oracle::invertible_matrix_count(3) == 48);
  CHECK(brute_force_auts(Group::two_cyclic(3, 3)).size() == 48);
  CHECK(brute_force_auts(Group::two_cyclic(2, 3)).size() == 2);  // Z_6
  CHECK_THROWS_AS(brute_force_auts(Group::cyclic(201)), UsageError);
}

TEST_CASE("parametrized automorphisms coincide with the brute-force set") {
  for (std::int64_t l = 3; l <= 30; ++l) {
    const Group g = Group::dihedral(l);
    std::vector<ElementMap> maps;
    for (const auto& a : enumerate_dihedral_auts(l)) maps.push_back(as_element_map(g, a));
    std::sort(maps.begin(), maps.end());
    REQUIRE(maps == brute_force_auts(g));
  }
  for (const Group& g : {Group::cyclic(12), Group::two_cyclic(2, 2), Group::two_cyclic(5, 5)}) {
    std::vector<ElementMap> maps;
    for (const auto& a : enumerate_automorphisms(g)) maps.push_back(as_element_map(g, a));
    std::sort(maps.begin(), maps.end());
    REQUIRE(maps == brute_force_auts(g));
  }
}

TEST_CASE("abelian automorphisms") {
  const auto z3 = enumerate_abelian_auts(Group::cyclic(3));
  REQUIRE(z3.size() == 2);
  CHECK(std::get<CyclicAut>(z3[0]).w == 1);
  CHECK(std::get<CyclicAut>(z3[1]).w == 2);
  CHECK(enumerate_abelian_auts(Group::cyclic(7)).size() == 6);

  REQUIRE(oracle::invertible_matrix_count(2) == 6);
  CHECK(enumerate_abelian_auts(Group::two_cyclic(2, 2)).size() == 6);
  for (std::int64_t p : {3, 5, 7}) {
    CHECK(static_cast<std::int64_t>(enumerate_abelian_auts(Group::two_cyclic(p, p)).size()) ==
          (p * p - 1) * (p * p - p));
  }
  CHECK_THROWS_AS(enumerate_abelian_auts(Group::two_cyclic(2, 3)), UnsupportedGroupError);
  CHECK_THROWS_AS(enumerate_abelian_auts(Group::two_cyclic(37, 37)), UnsupportedGroupError);
  CHECK_THROWS_AS(enumerate_abelian_auts(Group::dihedral(3)), UnsupportedGroupError);
}

TEST_CASE("automorphism literals") {
  const Group d6 = Group::dihedral(6);
  CHECK(std::get<DihedralAut>(parse_automorphism(d6, "5,0")) == DihedralAut{6, 5, 0});
  CHECK(to_string(parse_automorphism(d6, "5,3")) == "5,3");
  CHECK(std::get<CyclicAut>(parse_automorphism(Group::cyclic(8), "3")).w == 3);
  CHECK(to_string(parse_automorphism(Group::two_cyclic(3, 3), "1,1,0,1")) == "1,1,0,1");

  CHECK_THROWS_AS(parse_automorphism(d6, "2,0"), UsageError);
  CHECK_THROWS_AS(parse_automorphism(d6, "5"), UsageError);
  CHECK_THROWS_AS(parse_automorphism(d6, "5,x"), UsageError);
  CHECK_THROWS_AS(parse_automorphism(Group::cyclic(8), "2"), UsageError);
  CHECK_THROWS_AS(parse_automorphism(Group::two_cyclic(3, 3), "1,1,1,1"), UsageError);
}

TEST_CASE("involutive automorphisms") {
  CHECK(is_involutive(DihedralAut::make(3, 2, 0)));
  CHECK(is_involutive(DihedralAut::identity(5)));
  CHECK_FALSE(is_involutive(DihedralAut::make(5, 1, 1)));
  CHECK(is_involutive(CyclicAut::make(8, 7)));
  CHECK_FALSE(is_involutive(CyclicAut::make(7, 3)));
  CHECK(is_involutive(MatrixAut::make(3, {0, 1, 1, 0})));
}

TEST_CASE("mismatched automorphism and group") {
  CHECK_THROWS_AS(apply(Group::dihedral(4), DihedralAut::identity(3), DihedralElement{}), UsageError);
  CHECK_THROWS_AS(apply(Group::cyclic(4), DihedralAut::identity(4), CyclicElement{}), UsageError);
  CHECK_FALSE(acts_on(CyclicAut{5, 1}, Group::cyclic(6)));
}
