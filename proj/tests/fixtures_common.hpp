#pragma once

// Shared programmatic fixtures for the test suites.

#include <memory>

#include "hcell/algebra.hpp"
#include "hcell/fp_poly.hpp"
#include "hcell/group.hpp"
#include "hcell/hopf.hpp"

namespace hcell::testing {

inline Relation monomial(std::vector<int> arrows, const Field& f) {
  return {PathTerm{Scalar::one(f), std::move(arrows)}};
}

// Cyclic 2-quiver with rad^2 = 0 (the 4-dimensional algebra underlying the
// smallest noncommutative noncocommutative Hopf algebra).
inline AlgebraPresentation sweedler_pres(std::uint64_t p = 257) {
  AlgebraPresentation pres;
  pres.field = Field::fp(p);
  pres.quiver.vertices = {"1", "w"};
  pres.quiver.arrows = {{"a", 0, 1}, {"b", 1, 0}};
  pres.relations = {monomial({0, 1}, pres.field), monomial({1, 0}, pres.field)};
  pres.nilpotency_bound = 2;
  pres.group = std::make_shared<GroupData>(GroupData::cyclic(2));
  return pres;
}

// Cyclic 3-quiver with rad^3 = 0 (Taft-type at n = 3). Arrows are labelled by
// the group element g of a_{1,g}: a1: 1 -> w, aw: w2 -> 1, aw2: w -> w2.
inline AlgebraPresentation taft3_pres(std::uint64_t p = 7) {
  AlgebraPresentation pres;
  pres.field = Field::fp(p);
  pres.quiver.vertices = {"1", "w", "w2"};
  pres.quiver.arrows = {{"a1", 0, 1}, {"aw", 2, 0}, {"aw2", 1, 2}};
  // all paths of length 3
  pres.relations = {monomial({0, 2, 1}, pres.field), monomial({2, 1, 0}, pres.field),
                    monomial({1, 0, 2}, pres.field)};
  pres.nilpotency_bound = 3;
  pres.group = std::make_shared<GroupData>(GroupData::cyclic(3));
  return pres;
}

// Function algebra on G: covering quiver with no arrows.
inline AlgebraPresentation group_algebra_pres(const GroupData& g, std::uint64_t p) {
  AlgebraPresentation pres;
  pres.field = Field::fp(p);
  pres.quiver.vertices = g.elements;
  pres.nilpotency_bound = 2;
  pres.group = std::make_shared<GroupData>(g);
  return pres;
}

inline AlgebraPresentation trivial_pres(std::uint64_t p = 257) {
  return group_algebra_pres(GroupData::trivial(), p);
}

// A_2 quiver, not self-injective.
inline AlgebraPresentation a2_pres(std::uint64_t p = 257) {
  AlgebraPresentation pres;
  pres.field = Field::fp(p);
  pres.quiver.vertices = {"1", "2"};
  pres.quiver.arrows = {{"a", 0, 1}};
  pres.nilpotency_bound = 2;
  return pres;
}

// One vertex, one loop, x^2 = 0.
inline AlgebraPresentation loop_pres(std::uint64_t p = 257) {
  AlgebraPresentation pres;
  pres.field = Field::fp(p);
  pres.quiver.vertices = {"1"};
  pres.quiver.arrows = {{"x", 0, 0}};
  pres.relations = {monomial({0, 0}, pres.field)};
  pres.nilpotency_bound = 2;
  pres.group = std::make_shared<GroupData>(GroupData::trivial());
  return pres;
}

// Allowable bimodule structure on the cyclic covering quiver with one weight:
// h·a_{1,g} = a_{1,hg} and a_{1,g}·w^u = ω^{-u}·a_{1,g·w^u} for a primitive
// n-th root of unity ω. For n = 2 this is the sign structure (ω = -1).
inline std::shared_ptr<const WeightData> taft_weight_data(
    const std::shared_ptr<const GroupData>& grp, const Field& f) {
  const int n = grp->n();
  auto wd = std::make_shared<WeightData>();
  wd->grp = grp;
  wd->weights = {1 % n == 0 ? 0 : 1};  // the generator w (identity for n = 1)
  std::uint64_t omega = fp_root_of_unity(static_cast<std::uint64_t>(n), f.p);
  for (int h = 0; h < n; ++h) {
    Matrix l(n, n, f), r(n, n, f);
    std::uint64_t oinv = fp_pow(fp_inv(omega, f.p), static_cast<std::uint64_t>(h), f.p);
    for (int g = 0; g < n; ++g) {
      l.at(grp->mul(h, g), g) = Scalar::one(f);
      r.at(grp->mul(g, h), g) = Scalar::from_int(static_cast<long long>(oinv), f);
    }
    wd->left.push_back(std::move(l));
    wd->right.push_back(std::move(r));
  }
  return wd;
}

inline std::shared_ptr<const WeightData> empty_weight_data(
    const std::shared_ptr<const GroupData>& grp) {
  auto wd = std::make_shared<WeightData>();
  wd->grp = grp;
  for (int h = 0; h < grp->n(); ++h) {
    wd->left.push_back(Matrix(0, 0, Field::rationals()));
    wd->right.push_back(Matrix(0, 0, Field::rationals()));
  }
  return wd;
}

struct HopfFixture {
  AlgebraPtr alg;
  std::shared_ptr<const WeightData> wd;
  HopfBuild build;
  std::vector<Relation> relations;
};

inline HopfFixture sweedler_hopf(std::uint64_t p = 257) {
  HopfFixture fx;
  auto pres = sweedler_pres(p);
  fx.alg = build_algebra(pres);
  fx.wd = taft_weight_data(pres.group, pres.field);
  fx.relations = pres.relations;
  fx.build = hopf_structure(fx.alg, fx.wd, fx.relations);
  return fx;
}

inline HopfFixture taft3_hopf(std::uint64_t p = 7) {
  HopfFixture fx;
  auto pres = taft3_pres(p);
  fx.alg = build_algebra(pres);
  fx.wd = taft_weight_data(pres.group, pres.field);
  fx.relations = pres.relations;
  fx.build = hopf_structure(fx.alg, fx.wd, fx.relations);
  return fx;
}

inline HopfFixture group_algebra_hopf(const GroupData& g, std::uint64_t p) {
  HopfFixture fx;
  auto pres = group_algebra_pres(g, p);
  fx.alg = build_algebra(pres);
  auto wd = empty_weight_data(pres.group);
  for (auto& m : const_cast<WeightData&>(*wd).left) m = Matrix(0, 0, pres.field);
  for (auto& m : const_cast<WeightData&>(*wd).right) m = Matrix(0, 0, pres.field);
  fx.wd = wd;
  fx.build = hopf_structure(fx.alg, fx.wd, fx.relations);
  return fx;
}

// Left action of Z/2 on the Sweedler algebra: w·a = b, w·b = a.
inline AlgebraAction sweedler_action(const AlgebraPtr& alg) {
  auto grp = alg->group ? alg->group : std::make_shared<const GroupData>(GroupData::cyclic(2));
  const Field& f = alg->field;
  std::vector<std::vector<int>> vperm = {{0, 1}, {1, 0}};
  Matrix id2 = Matrix::identity(2, f);
  Matrix swap(2, 2, f);
  swap.at(0, 1) = Scalar::one(f);
  swap.at(1, 0) = Scalar::one(f);
  return action_from_generators(alg, grp, vperm, {id2, swap});
}

// Left action of Z/3 on the Taft-3 algebra: h·a_{1,g} = a_{1,hg}.
inline AlgebraAction taft3_action(const AlgebraPtr& alg) {
  auto grp = alg->group;
  const Field& f = alg->field;
  // vertices 1,w,w2; w·vertex v: h(e_g) = e_{gh^-1}
  std::vector<std::vector<int>> vperm(3, std::vector<int>(3));
  for (int h = 0; h < 3; ++h)
    for (int v = 0; v < 3; ++v) vperm[h][v] = (v - h + 3) % 3;  // g·h^{-1} in Z/3
  // arrows indexed a1<->g=0, aw<->g=1, aw2<->g=2; h·a_g = a_{h+g}
  std::vector<Matrix> amats;
  for (int h = 0; h < 3; ++h) {
    Matrix m(3, 3, f);
    for (int g = 0; g < 3; ++g) m.at((g + h) % 3, g) = Scalar::one(f);
    amats.push_back(m);
  }
  return action_from_generators(alg, grp, vperm, amats);
}

}  // namespace hcell::testing
