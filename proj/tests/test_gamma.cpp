#include <doctest.h>

#include "fixtures_common.hpp"
#include "hcell/homspace.hpp"

using namespace hcell;
using namespace hcell::testing;

TEST_CASE("gamma monoidal verification: sweedler") {
  auto fx = sweedler_hopf();
  auto rep = verify_gamma_monoidal(fx.build.hd);
  for (auto& e : rep.entries) {
    INFO(e.check, " ", e.witness);
    CHECK(e.ok);
  }
}

TEST_CASE("gamma monoidal verification: group algebra kZ/2") {
  auto fx = group_algebra_hopf(GroupData::cyclic(2), 257);
  auto rep = verify_gamma_monoidal(fx.build.hd);
  for (auto& e : rep.entries) {
    INFO(e.check, " ", e.witness);
    CHECK(e.ok);
  }
}

TEST_CASE("gamma monoidal verification: trivial Hopf algebra") {
  auto fx = group_algebra_hopf(GroupData::trivial(), 257);
  auto rep = verify_gamma_monoidal(fx.build.hd);
  for (auto& e : rep.entries) {
    INFO(e.check, " ", e.witness);
    CHECK(e.ok);
  }
}

TEST_CASE("gamma adjunction identities: sweedler") {
  auto fx = sweedler_hopf();
  auto rep = verify_gamma_adjunction(fx.build.hd);
  for (auto& e : rep.entries) {
    INFO(e.check, " ", e.witness);
    CHECK(e.ok);
  }
}

TEST_CASE("equivariant structure on Γ(Ae_g) and Γ(L_1)") {
  auto fx = sweedler_hopf();
  const HopfData& hd = fx.build.hd;
  auto act = sweedler_action(fx.alg);

  for (int v = 0; v < 2; ++v) {
    GammaResult gcol = gamma_functor(hd, LeftModule::column(fx.alg, v));
    EquivariantStructure es = gamma_column_equivariant(hd, act, v, gcol);
    auto rep = verify_equivariant(gcol.mod, act, es);
    for (auto& e : rep.entries) {
      INFO("v=", v, " ", e.check, " ", e.witness);
      CHECK(e.ok);
    }
  }

  // Γ(ρ) is equivariant for every ρ: Ae_g -> Ae_{g'}
  {
    LeftModule c0 = LeftModule::column(fx.alg, 0), c1 = LeftModule::column(fx.alg, 1);
    GammaResult g0 = gamma_functor(hd, c0), g1 = gamma_functor(hd, c1);
    EquivariantStructure a0 = gamma_column_equivariant(hd, act, 0, g0);
    EquivariantStructure a1 = gamma_column_equivariant(hd, act, 1, g1);
    for (auto& rho : hom_space_left(c0, c1)) {
      Matrix grho = gamma_of_map(g0, g1, rho);
      for (int g = 0; g < 2; ++g) {
        CHECK(a1.alpha[g] * grho == grho * a0.alpha[g]);
      }
    }
  }

  // cokernel transport for L_1: the result is A with the automorphism structure
  LeftModule l1 = trivial_module(hd);
  EquivariantGamma eg = equivariant_gamma(hd, act, l1);
  for (auto& e : eg.report.entries) {
    INFO(e.check, " ", e.witness);
    CHECK(e.ok);
  }
  Matrix z = zeta_map(hd, eg.gm);
  Matrix zi = *z.inverse();
  for (int g = 0; g < 2; ++g) {
    Matrix transported = z * eg.es.alpha[g] * zi;
    CHECK(transported == act.mat(g));
  }

  // zero module edge case
  EquivariantGamma ez = equivariant_gamma(hd, act, LeftModule::zero(fx.alg));
  CHECK(ez.report.all_ok());
}

TEST_CASE("equivariant gamma on a non-projective module") {
  auto fx = sweedler_hopf();
  const HopfData& hd = fx.build.hd;
  auto act = sweedler_action(fx.alg);
  // the simple at the non-identity vertex
  LeftModule s;
  s.A = fx.alg;
  s.dim = 1;
  for (int i = 0; i < fx.alg->dim(); ++i) {
    SparseMat sm(1, 1);
    if (i == fx.alg->idempotent[1]) sm.set_col(0, {{0, Scalar::one(fx.alg->field)}});
    s.act.push_back(sm);
  }
  EquivariantGamma eg = equivariant_gamma(hd, act, s);
  for (auto& e : eg.report.entries) {
    INFO(e.check, " ", e.witness);
    CHECK(e.ok);
  }
}
