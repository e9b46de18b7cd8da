#include <doctest.h>

#include "fixtures_common.hpp"
#include "hcell/decompose.hpp"
#include "hcell/equivariant.hpp"

using namespace hcell;
using namespace hcell::testing;

TEST_CASE("primitive idempotents of small group algebras") {
  Field f = Field::fp(257);
  auto kz2 = AssocAlgebra::group_algebra(GroupData::cyclic(2), f);
  auto idems = primitive_idempotents(kz2);
  CHECK(idems.size() == 2);

  Field f7 = Field::fp(7);
  auto kz3 = AssocAlgebra::group_algebra(GroupData::cyclic(3), f7);
  CHECK(primitive_idempotents(kz3).size() == 3);

  // k[S_3] over F_7: blocks k, k, M_2(k): four primitive idempotents
  auto ks3 = AssocAlgebra::group_algebra(GroupData::symmetric3(), f7);
  auto ps3 = primitive_idempotents(ks3);
  CHECK(ps3.size() == 4);

  // radical of a semisimple group algebra is zero
  CHECK(trace_radical(kz2).empty());
  CHECK(trace_radical(ks3).empty());

  // CharTooSmall guard
  Field f2 = Field::fp(2);
  auto bad = AssocAlgebra::group_algebra(GroupData::cyclic(3), f2);
  CHECK_THROWS_AS(primitive_idempotents(bad), Error);

  // over Q, Z/3 does not split: k ⊕ Q(ω)
  auto kz3q = AssocAlgebra::group_algebra(GroupData::cyclic(3), Field::rationals());
  CHECK(primitive_idempotents(kz3q).size() == 2);
}

TEST_CASE("decompose: regular bimodule of sweedler is indecomposable") {
  auto alg = build_algebra(sweedler_pres());
  Bimodule a = Bimodule::regular(alg);
  auto dec = decompose(a);
  CHECK(dec.summands.size() == 1);
  CHECK(dec.summands[0].multiplicity == 1);
  CHECK(dec.summands[0].mod.dim == 4);
}

TEST_CASE("decompose: A ⊕ A = 2·A for local-End A") {
  auto alg = build_algebra(sweedler_pres());
  Bimodule a = Bimodule::regular(alg);
  auto dec = decompose(Bimodule::direct_sum({a, a}));
  REQUIRE(dec.summands.size() == 1);
  CHECK(dec.summands[0].multiplicity == 2);
  CHECK(dec.summands[0].mod.dim == 4);
  auto iso = find_iso(dec.summands[0].mod, a);
  CHECK(iso.has_value());
}

TEST_CASE("decompose: A ⊗_k A splits into the four projectives") {
  auto alg = build_algebra(sweedler_pres());
  Bimodule aa = Bimodule::tensor_k(Bimodule::regular(alg), Bimodule::regular(alg));
  auto dec = decompose(aa);
  // ⊕_{g,h} Ae_g ⊗ e_hA: four pairwise non-isomorphic summands of dim 4
  CHECK(dec.summands.size() == 4);
  for (auto& s : dec.summands) {
    CHECK(s.multiplicity == 1);
    CHECK(s.mod.dim == 4);
  }
  // re-summing: total matches and each summand is one of the projectives
  int found = 0;
  for (int g = 0; g < 2; ++g)
    for (int h = 0; h < 2; ++h) {
      Bimodule p = Bimodule::proj(alg, g, h);
      for (auto& s : dec.summands)
        if (find_iso(s.mod, p)) {
          ++found;
          break;
        }
    }
  CHECK(found == 4);
}

TEST_CASE("bimodules_isomorphic ladder") {
  auto alg = build_algebra(sweedler_pres());
  Bimodule a = Bimodule::regular(alg);
  Bimodule p00 = Bimodule::proj(alg, 0, 0), p11 = Bimodule::proj(alg, 1, 1);
  CHECK(bimodules_isomorphic(a, a));
  CHECK(!bimodules_isomorphic(a, p00));
  CHECK(!bimodules_isomorphic(p00, p11));
  CHECK(bimodules_isomorphic(Bimodule::direct_sum({p00, p11}), Bimodule::direct_sum({p11, p00})));
}

TEST_CASE("equivariant structure: regular bimodule via automorphisms") {
  auto alg = build_algebra(sweedler_pres());
  auto act = sweedler_action(alg);
  Bimodule a = Bimodule::regular(alg);
  auto es = regular_equivariant(alg, act);
  auto rep = verify_equivariant(a, act, es);
  for (auto& e : rep.entries) {
    INFO(e.check, " ", e.witness);
    CHECK(e.ok);
  }
}

TEST_CASE("equivariant structure search") {
  auto alg = build_algebra(sweedler_pres());
  auto act = sweedler_action(alg);
  Bimodule a = Bimodule::regular(alg);
  auto found = equivariant_structure(a, act);
  REQUIRE(found.found);
  CHECK(verify_equivariant(a, act, found.structure).all_ok());

  // Ae_1 ⊗ e_1A with |G| = 2 is not equivariant (proper stabilizer)
  auto none = equivariant_structure(Bimodule::proj(alg, 0, 0), act);
  CHECK(!none.found);
  CHECK(!none.indeterminate);
  CHECK(none.certificate.find("not isomorphic") != std::string::npos);

  // the orbit sum Ae_1⊗e_1A ⊕ Ae_w⊗e_wA admits a structure
  Bimodule orbit = Bimodule::direct_sum({Bimodule::proj(alg, 0, 0), Bimodule::proj(alg, 1, 1)});
  auto orb = equivariant_structure(orbit, act);
  REQUIRE(orb.found);
  CHECK(verify_equivariant(orbit, act, orb.structure).all_ok());
}

TEST_CASE("equivariant search on taft3") {
  auto alg = build_algebra(taft3_pres(97));
  auto act = taft3_action(alg);
  Bimodule a = Bimodule::regular(alg);
  auto found = equivariant_structure(a, act);
  REQUIRE(found.found);
  CHECK(verify_equivariant(a, act, found.structure).all_ok());
}
