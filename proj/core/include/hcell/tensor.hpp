#pragma once

#include "hcell/module.hpp"

namespace hcell {

// Coequalizer quotient of M ⊗_k N by the span of {m·a ⊗ n − m ⊗ a·n}.
// T-coordinates run (i, j) -> i·dimN + j. proj∘sect = id.
struct Coeq {
  int dim = 0;
  int dim_m = 0, dim_n = 0;
  Field field;
  SparseMat proj;  // dim × (dim_m·dim_n), stored column-major
  SparseMat sect;  // (dim_m·dim_n) × dim
};

// Generic coequalizer: `right_m` is the right action on the first factor,
// `left_n` the left action on the second (one matrix per algebra basis
// element). Only idempotent and arrow relations are imposed; these generate.
Coeq coequalize(const Algebra& A, int dim_m, const std::vector<SparseMat>& right_m, int dim_n,
                const std::vector<SparseMat>& left_n);

struct BimoduleTensor {
  Bimodule mod;
  Coeq q;
};
// M ⊗_A N with outer actions.
BimoduleTensor tensor_over_A(const Bimodule& m, const Bimodule& n);

// f ⊗ g transported between coequalizers: dst.proj ∘ (f ⊗ g) ∘ src.sect.
SparseMat coeq_transport(const Coeq& src, const Coeq& dst, const SparseMat& f, const SparseMat& g);

// Applies P∘big∘S where `big` maps T_src -> T_dst coordinates.
SparseMat coeq_conjugate(const Coeq& src, const Coeq& dst,
                         const std::function<SparseVec(const SparseVec&)>& big);

// λ_M: A ⊗_A M → M, a⊗m -> a·m (on the quotient).
Matrix left_unitor(const Bimodule& m, const Coeq& q_am);
// ρ_M: M ⊗_A A → M.
Matrix right_unitor(const Bimodule& m, const Coeq& q_ma);

// associator ((M⊗N)⊗K → M⊗(N⊗K)) from the four quotient structures.
Matrix associator(const Coeq& q_mn, const Coeq& q_mn_k, const Coeq& q_nk, const Coeq& q_m_nk);

// embeds a pure tensor m⊗n into T coordinates
SparseVec tensor_coords(const SparseVec& m, const SparseVec& n, int dim_n);

}  // namespace hcell
