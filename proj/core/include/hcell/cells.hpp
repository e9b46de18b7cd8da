#pragma once

#include "hcell/skew.hpp"

namespace hcell {

// Symbolic class of an indecomposable 1-morphism. Sides: 1 = the algebra A,
// 0 = the vertex algebra A_0 (only in the tilde configuration).
struct SymClass {
  enum Kind { Identity, Proj } kind = Identity;
  int side_left = 1, side_right = 1;
  int g = 0;

  bool operator==(const SymClass&) const = default;
  bool operator<(const SymClass& o) const {
    return std::tie(kind, side_left, side_right, g) <
           std::tie(o.kind, o.side_left, o.side_right, o.g);
  }
  std::string str(const GroupData& grp) const;
};

struct FormalMorph {
  std::map<SymClass, int> terms;
  void add(const SymClass& c, int mult);
};

// decategorified product on classes; multiplicities read from dim(e_k·A·e_h)
FormalMorph tensor_symbolic(const SymClass& a, const SymClass& b, const Algebra& alg,
                            const GroupData& grp);

struct CellStructure {
  std::vector<SymClass> classes;
  std::vector<int> left_cell, right_cell, two_sided_cell, h_cell;  // per class
  int n_left = 0, n_right = 0, n_two_sided = 0, n_h = 0;
  // strict order on two-sided cells: true when a < b
  std::vector<std::vector<bool>> j_less;

  int class_index(const SymClass& c) const;
};

enum class CellConfig { Plain, Tilde };
CellStructure cell_structure(CellConfig config, const Algebra& alg, const GroupData& grp);

// right adjoints per the Nakayama data (alg must be self-injective)
SymClass right_adjoint(const SymClass& x, const Algebra& alg, const GroupData& grp);

// decategorified action of x on a left cell
Matrix cell_module_matrix(const CellStructure& cs, int left_cell_id, const SymClass& x,
                          const Algebra& alg, const GroupData& grp, const Field& f);

// ---- the concrete tilde algebra Â = A × A_0 -------------------------------

struct TildeContext {
  AlgebraPtr base;   // A itself (carries the group labels)
  AlgebraPtr ahat;   // A × A_0
  AlgebraAction act;
  std::shared_ptr<const GroupData> grp;
  std::vector<int> vert_a, vert_a0;  // group index -> vertex of Â

  // carrier bimodules of the S_{ij}(g) classes (right index normalized to 1)
  Bimodule class_carrier(const SymClass& c) const;
  // the A-block of the regular Â-bimodule (the identity 1-morphism on •)
  Bimodule identity_carrier() const;
};
TildeContext build_tilde(const AlgebraPtr& a, const AlgebraAction& act);

// ---- verification suites ---------------------------------------------------

// oracle agreement: symbolic products vs decomposition of the ⊗^G carriers
ValidationReport check_symbolic_oracle(CellConfig config, const TildeContext& tc,
                                       bool structured_only = false);

// ℋ_0-simplicity at the bimodule level, sandwiching every nonzero 2-morphism
// between Θ-generators with id_{A⊗A} on both sides
ValidationReport check_h0_simplicity(const HopfData& hd, const AlgebraAction& act);

// fusion of the ℋ_00 part: table equals the group table, all End spaces are
// one-dimensional
ValidationReport check_vec_g(const TildeContext& tc);

// adjunction dimension identity on sampled pairs
ValidationReport check_adjunctions(const TildeContext& tc, const Algebra& base_alg,
                                   int samples, std::uint64_t seed);

}  // namespace hcell
