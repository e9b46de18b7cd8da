#include <doctest.h>

#include "hcell/cohomology.hpp"

using namespace hcell;

TEST_CASE("subgroup enumeration") {
  CHECK(subgroups(GroupData::cyclic(2)).all.size() == 2);
  CHECK(subgroups(GroupData::klein4()).all.size() == 5);
  CHECK(subgroups(GroupData::symmetric3()).all.size() == 6);
  // conjugacy classes of S_3 subgroups: 1, <r>, three conjugate <s>, S_3
  CHECK(subgroups(GroupData::symmetric3()).conjugacy_reps.size() == 4);
  GroupData big = GroupData::product(GroupData::cyclic(4), GroupData::cyclic(5));
  CHECK_THROWS_AS(subgroups(big, 16), Error);
}

TEST_CASE("bar H^3 against the abelian closed-form oracle, orders <= 8") {
  std::vector<GroupData> groups;
  for (int n = 1; n <= 8; ++n) groups.push_back(GroupData::cyclic(n));
  groups.push_back(GroupData::klein4());
  groups.push_back(GroupData::product(GroupData::cyclic(2), GroupData::cyclic(4)));
  groups.push_back(
      GroupData::product(GroupData::cyclic(2), GroupData::product(GroupData::cyclic(2), GroupData::cyclic(2))));
  groups.push_back(GroupData::product(GroupData::cyclic(2), GroupData::cyclic(3)));
  for (auto& g : groups) {
    AbelianInvariants bar = bar_h3_integral(g);
    AbelianInvariants oracle = abelian_multiplier_formula(g);
    INFO("group of order ", g.n());
    CHECK(bar == oracle);
  }
  // specific values
  CHECK(bar_h3_integral(GroupData::cyclic(6)).divisors.empty());
  auto k4 = bar_h3_integral(GroupData::klein4());
  REQUIRE(k4.divisors.size() == 1);
  CHECK(k4.divisors[0] == 2);
  auto e8 = bar_h3_integral(
      GroupData::product(GroupData::cyclic(2), GroupData::product(GroupData::cyclic(2), GroupData::cyclic(2))));
  REQUIRE(e8.divisors.size() == 3);  // (Z/2)^3 has multiplier (Z/2)^3
  CHECK(e8.divisors[0] == 2);
}

TEST_CASE("abelian formula instances") {
  CHECK(abelian_multiplier_formula({mpz_class(6)}).divisors.empty());
  auto z2z2 = abelian_multiplier_formula({mpz_class(2), mpz_class(2)});
  REQUIRE(z2z2.divisors.size() == 1);
  CHECK(z2z2.divisors[0] == 2);
  auto z4z6 = abelian_multiplier_formula({mpz_class(4), mpz_class(6)});
  REQUIRE(z4z6.divisors.size() == 1);
  CHECK(z4z6.divisors[0] == 2);
  CHECK_THROWS_AS(abelian_multiplier_formula(GroupData::symmetric3()), Error);
}

TEST_CASE("S_3 Schur multiplier is trivial, cross-checked mod |K|") {
  GroupData s3 = GroupData::symmetric3();
  AbelianInvariants h3 = bar_h3_integral(s3);
  CHECK(h3.divisors.empty());
  auto cc = h2_mod_m_cross_check(s3, mpz_class(6), h3);
  INFO("computed ", cc.computed.get_str(), " predicted ", cc.predicted.get_str());
  CHECK(cc.ok());
  CHECK(cc.computed == 2);  // H^2(S_3, Z/6) ≅ S_3^ab = Z/2
}

TEST_CASE("H^2 mod m cross-check on abelian groups") {
  for (auto& g : {GroupData::cyclic(4), GroupData::klein4(),
                  GroupData::product(GroupData::cyclic(2), GroupData::cyclic(4))}) {
    AbelianInvariants h3 = bar_h3_integral(g);
    auto cc = h2_mod_m_cross_check(g, mpz_class(g.n()), h3);
    INFO("order ", g.n(), ": computed ", cc.computed.get_str(), " predicted ",
         cc.predicted.get_str());
    CHECK(cc.ok());
  }
}

TEST_CASE("classification counts") {
  // trivial group: exactly 2 entries (J_1 + the trivial subgroup)
  Classification t = classify(GroupData::trivial());
  CHECK(t.entries.size() == 2);
  CHECK(t.total == 2);

  // Z/2: J_0 entries (1, triv), (Z/2, triv): total 3
  Classification z2 = classify(GroupData::cyclic(2));
  CHECK(z2.total == 3);

  // Klein four: five subgroups, |H^2| = 1,1,1,1,2: six J_0 classes
  Classification k4 = classify(GroupData::klein4());
  mpz_class j0 = k4.total - 1;
  CHECK(j0 == 6);
  CHECK(k4.entries.size() == 6);  // J_1 + five subgroups

  // S_3: subgroup count 6, all multipliers trivial: 6 J_0 classes, 4 up to conjugacy
  Classification s3 = classify(GroupData::symmetric3());
  CHECK(s3.total - 1 == 6);
  CHECK(s3.total_up_to_conjugacy - 1 == 4);
}
