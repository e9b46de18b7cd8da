#pragma once

#include "hcell/decompose.hpp"
#include "hcell/equivariant.hpp"
#include "hcell/hopf.hpp"
#include "hcell/tensor.hpp"

namespace hcell {

// Morphism of the skew category: a tuple of bimodule maps M -> N^g, stored
// sparsely by group element. Composition is the graded convolution
// (ψ∘φ)_s = Σ_{hg=s} ψ_h·φ_g (twisting keeps matrices).
struct SkewHom {
  std::map<int, Matrix> comp;

  bool has(int g) const { return comp.count(g) > 0; }
  const Matrix& at(int g) const { return comp.at(g); }
  SkewHom& set(int g, Matrix m);
};

SkewHom skew_identity(int dim, const Field& f, const GroupData& grp);
SkewHom skew_compose(const GroupData& grp, const SkewHom& psi, const SkewHom& phi);
SkewHom skew_add(const SkewHom& a, const SkewHom& b);
SkewHom skew_scale(const SkewHom& a, const Scalar& c);
bool skew_equal(const SkewHom& a, const SkewHom& b);
// validity: each component a bimodule map M -> N^g
bool is_skew_hom(const Bimodule& m, const Bimodule& n, const AlgebraAction& act, const SkewHom& f);

// basis of ⊕_g Hom(M, N^g)
std::vector<std::pair<int, Matrix>> skew_hom_basis(const Bimodule& m, const Bimodule& n,
                                                   const AlgebraAction& act);

struct SkewObject {
  Bimodule carrier;
  SkewHom idem;
};

// stabiliser subgroup G_M = {g : M ≅ M^g}, with witnesses where found
struct Stabilizer {
  std::vector<int> elements;
  std::map<int, Matrix> witness;  // g -> isomorphism M -> M^g
};
Stabilizer stabilizer(const Bimodule& m, const AlgebraAction& act);

struct GroupIdempotent {
  int label;                      // 0 = trivial character π_1
  std::vector<Scalar> coeffs;     // coefficients λ(g)/|G_M| on G_M elements
  SkewHom hom;                    // the induced idempotent endomorphism
};

// Complete orthogonal primitive idempotents of k[G_M] realized as skew
// endomorphisms of M through a multiplicative family beta_g: M -> M^g.
// Throws Error("NonSplitField") if k[G_M] does not split.
std::vector<GroupIdempotent> group_idempotents(const Bimodule& m, const AlgebraAction& act,
                                               const std::vector<int>& gm,
                                               const std::map<int, Matrix>& beta);
// convenience: computes stabiliser and an equivariant family first
std::vector<GroupIdempotent> group_idempotents(const Bimodule& m, const AlgebraAction& act);

// M ⊗^G N = ⊕_g (M^g ⊗_A N), with the summand coequalizers recorded.
struct TensorG {
  Bimodule carrier;
  std::vector<Coeq> summand;   // per g
  std::vector<int> offset;     // carrier offsets per g
};
TensorG tensor_G(const Bimodule& m, const Bimodule& n, const AlgebraAction& act);

// (φ ⊗^G ψ) as a skew hom between the carriers.
SkewHom tensor_G_hom(const TensorG& src, const TensorG& dst, const AlgebraAction& act,
                     const SkewHom& phi, const SkewHom& psi);

SkewObject tensor_G_object(const SkewObject& x, const SkewObject& y, const AlgebraAction& act,
                           TensorG* structure = nullptr);

// unit object (A, π_1)
SkewObject unit_object(const AlgebraPtr& a, const AlgebraAction& act);

// the explicit unitor maps of the one-object bicategory and their composites
ValidationReport verify_unitors(const Bimodule& m, const AlgebraAction& act,
                                const GroupIdempotent& eps, const std::vector<int>& gm,
                                const std::map<int, Matrix>& beta);

// Θ(M) = ⊕_g M^g with Θ(f) block (h,g) = f_{h g^-1}
struct ThetaResult {
  Bimodule total;               // ⊕_g M^g
  Bimodule image;               // Θ(e)-cut when an idempotent is given
  Matrix incl, proj;            // image ↔ total
  std::vector<int> offset;
};
ThetaResult theta(const SkewObject& x, const AlgebraAction& act);
Matrix theta_hom(const GroupData& grp, const SkewHom& f, int dim_m, int dim_n);

// the canonical relabelling equivariant structure on ⊕_g M^g
EquivariantStructure theta_equivariant(const Bimodule& m, const AlgebraAction& act);

// J_{M,N}: Θ(M) ⊗_A Θ(N) -> Θ(M ⊗^G N)
struct ThetaMonoidal {
  Matrix j;
  ValidationReport report;
};
ThetaMonoidal theta_monoidal(const Bimodule& m, const Bimodule& n, const AlgebraAction& act);

// End_{X_A}(M)/Rad ≅ k[G_M] as algebras
ValidationReport check_end_mod_rad(const Bimodule& m, const AlgebraAction& act);

// §-style 1-fullness: Γ-image indecomposables coincide with Θ-image
// indecomposables up to bimodule isomorphism, through explicit witnesses.
ValidationReport check_1_full_embedding(const HopfData& hd, const AlgebraAction& act);

}  // namespace hcell
