#include "doctest.h"
#include "oracles.hpp"
#include "twinv/characters.hpp"
#include "twinv/errors.hpp"
#include "twinv/involutions.hpp"

using namespace twinv;

TEST_CASE("twisted involution set examples") {
  const Group d3 = Group::dihedral(3);
  // Identity: e plus the three reflections.
  const auto s_id = twisted_involution_set(d3, DihedralAut::identity(3));
  CHECK(s_id == std::vector<Element>{DihedralElement{0, false}, DihedralElement{0, true}, DihedralElement{1, true},
                                     DihedralElement{2, true}});
  // (1,1): no reflection qualifies and r^k -> r^k is inverse only for e.
  const auto s_shift = twisted_involution_set(d3, DihedralAut::make(3, 1, 1));
  CHECK(s_shift.size() == 1);
  // (2,0): all rotations plus s.
  const auto s_inv = twisted_involution_set(d3, DihedralAut::make(3, 2, 0));
  CHECK(s_inv == std::vector<Element>{DihedralElement{0, false}, DihedralElement{1, false}, DihedralElement{2, false},
                                      DihedralElement{0, true}});

  // Abelian, sigma = id: exactly the elements of order <= 2.
  CHECK(twisted_involution_count(Group::cyclic(8), identity_automorphism(Group::cyclic(8))) == 2);
  CHECK(twisted_involution_count(Group::two_cyclic(2, 2), identity_automorphism(Group::two_cyclic(2, 2))) == 4);
  // Inversion on an abelian group fixes every element's inverse relation.
  CHECK(twisted_involution_count(Group::cyclic(7), CyclicAut::make(7, 6)) == 7);
}

TEST_CASE("closed form examples") {
  CHECK(count_closed_form(3, 1, 0) == ClosedFormCount{4, 1, 3});
  CHECK(count_closed_form(3, 2, 0) == ClosedFormCount{4, 3, 1});
  CHECK(count_closed_form(4, 3, 1) == ClosedFormCount{4, 4, 0});
  CHECK(count_closed_form(6, 5, 0) == ClosedFormCount{8, 6, 2});
  for (auto [l, u, v] : {std::tuple{3, 1, 0}, {3, 2, 0}, {4, 3, 1}, {6, 5, 0}}) {
    CHECK(oracle::twisted_count(l, u, v) == count_closed_form(l, u, v).total);
  }
  CHECK(count_closed_form(DihedralAut::make(6, 5, 0)) == count_closed_form(6, 5, 0));
  CHECK_THROWS_AS(count_closed_form(6, 2, 0), UsageError);
}

TEST_CASE("closed form agrees with the permutation oracle and with brute force") {
  for (int l = 3; l <= 30; ++l) {
    const Group g = Group::dihedral(l);
    for (const auto& a : enumerate_dihedral_auts(l)) {
      const auto cf = count_closed_form(a);
      REQUIRE(cf.total == cf.rotations + cf.reflections);
      REQUIRE(cf.total == oracle::twisted_count(l, a.u, a.v));
      REQUIRE(cf.total == twisted_involution_count(g, a));
    }
  }
}

TEST_CASE("identity and maximum counts") {
  CHECK(identity_involution_count(3) == 4);
  CHECK(identity_involution_count(4) == 6);
  CHECK(identity_involution_count(7) == 8);
  CHECK(max_twisted_count(3) == 4);
  CHECK(max_twisted_count(4) == 6);
  CHECK(max_twisted_count(5) == 6);
  for (int l = 3; l <= 60; ++l) {
    std::int64_t best = 0;
    for (const auto& a : enumerate_dihedral_auts(l)) best = std::max(best, oracle::twisted_count(l, a.u, a.v));
    REQUIRE(max_twisted_count(l) == best);
    REQUIRE(identity_involution_count(l) == oracle::twisted_count(l, 1, 0));
  }
}

TEST_CASE("bounds on every count") {
  for (std::int64_t l = 3; l <= 200; ++l) {
    const std::int64_t t = degree_sum(Group::dihedral(l));
    REQUIRE(t == identity_involution_count(l));
    for (const auto& a : enumerate_dihedral_auts(l)) {
      const auto cf = count_closed_form(a);
      REQUIRE(cf.total >= 1);
      REQUIRE(cf.total <= t);
      REQUIRE(cf.total <= 2 * l);
    }
  }
}

TEST_CASE("identity element is always twisted-involutive") {
  for (const Group& g : {Group::dihedral(5), Group::cyclic(9), Group::two_cyclic(3, 3)}) {
    for (const Automorphism& a : enumerate_automorphisms(g)) {
      const auto s = twisted_involution_set(g, a);
      CHECK(std::find(s.begin(), s.end(), g.identity()) != s.end());
    }
  }
}

TEST_CASE("records") {
  const Group d6 = Group::dihedral(6);
  const auto rec = make_record(d6, DihedralAut::make(6, 5, 0), {.brute_force = true, .list_members = true});
  CHECK(rec.group == "D:6");
  REQUIRE(rec.m_brute.has_value());
  REQUIRE(rec.closed.has_value());
  CHECK(*rec.m_brute == 8);
  CHECK(rec.m() == 8);
  CHECK(rec.degree_sum == 8);
  CHECK(rec.identity_count == 8);
  CHECK(rec.equality());
  CHECK(rec.inequality_holds());
  CHECK(rec.counts_agree());
  CHECK(rec.members == std::vector<std::string>{"e", "r", "r^2", "r^3", "r^4", "r^5", "s", "r^3s"});

  const auto fast = make_record(d6, DihedralAut::make(6, 1, 1));
  CHECK_FALSE(fast.m_brute.has_value());
  CHECK(fast.m() == 2);  // rot gcd(2,6) = 2, refl gcd(0,6) = 6 does not divide 1
  CHECK_FALSE(fast.equality());

  const Group z4 = Group::cyclic(4);
  const auto ab = make_record(z4, CyclicAut::make(4, 3));
  CHECK_FALSE(ab.closed.has_value());
  CHECK(ab.m() == 4);
  CHECK(ab.degree_sum == 4);
  CHECK(ab.equality());
}
