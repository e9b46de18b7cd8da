#pragma once

#include "hcell/homspace.hpp"
#include "hcell/module.hpp"

namespace hcell {

// Abstract finite-dimensional associative algebra by structure constants.
struct AssocAlgebra {
  Field f;
  int n = 0;
  std::vector<std::vector<std::vector<Scalar>>> sc;  // sc[i][j] = coords of b_i·b_j
  std::vector<Scalar> unit;

  std::vector<Scalar> mul(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;
  Matrix left_mult_of(const std::vector<Scalar>& x) const;
  static AssocAlgebra from_matrices(const std::vector<Matrix>& basis, const Field& f);
  static AssocAlgebra group_algebra(const GroupData& g, const Field& f);
};

// Radical via the trace form of the regular representation (valid for
// char 0 or char > dim). The caller guards the characteristic.
std::vector<std::vector<Scalar>> trace_radical(const AssocAlgebra& a);

// Complete orthogonal set of primitive idempotents. Throws
// Error("CharTooSmall"), Error("NonSplitField") or
// Error("IndeterminateDecomposition").
std::vector<std::vector<Scalar>> primitive_idempotents(const AssocAlgebra& a);

struct Summand {
  Bimodule mod;
  Matrix incl, proj;   // of the first copy
  int multiplicity;
};

struct Decomposition {
  std::vector<Summand> summands;              // pairwise non-isomorphic
  std::vector<Matrix> idempotents;            // complete orthogonal primitive set
  std::vector<int> block_of;                  // idempotent -> summand class
};

// Krull–Schmidt decomposition via idempotent lifting in End(M).
Decomposition decompose(const Bimodule& m);

// ---- structured decomposition of direct sums of Ae_u ⊗ e_vA ---------------

// Splits a bimodule known to be a direct sum of projective classes
// Ae_u ⊗ e_vA by lifting a basis of top(Z); the assembled comparison map is
// verified invertible. Valid in any characteristic.
struct ProjSumDecomp {
  struct Piece {
    int u, v;        // block label
    int offset, dim;  // inside the comparison coordinates
  };
  std::vector<Piece> pieces;
  Matrix phi;      // ⊕ P(u,v) -> Z, invertible
  Matrix phi_inv;
};
ProjSumDecomp proj_sum_decompose(const Bimodule& z);

// multiplicity table by class labels (u, v)
std::map<std::pair<int, int>, int> proj_sum_multiplicities(const Bimodule& z);

// Certified isomorphism test ladder: invariants, structured projective-sum
// comparison, explicit search, then decomposition matching. Throws
// IndeterminateIso when undecidable at the current characteristic.
bool bimodules_isomorphic(const Bimodule& m, const Bimodule& n);

}  // namespace hcell
