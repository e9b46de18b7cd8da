#pragma once

#include "hcell/module.hpp"

namespace hcell {

// Basis of Hom_{A-A}(M, N): all T with T·L_M(x) = L_N(x)·T and
// T·R_M(x) = R_N(x)·T. Solved blockwise over the idempotent decomposition
// with arrow constraints only (generators suffice).
std::vector<Matrix> hom_space(const Bimodule& m, const Bimodule& n);
int hom_dim(const Bimodule& m, const Bimodule& n);

std::vector<Matrix> hom_space_left(const LeftModule& m, const LeftModule& n);
int hom_dim_left(const LeftModule& m, const LeftModule& n);

// Deterministic search for an isomorphism within a hom space; returns an
// invertible T or nullopt. Exact when the space is one matrix; otherwise a
// bounded structured search (certain over large fields, see decompose for
// the summand-matching alternative).
std::optional<Matrix> find_iso(const Bimodule& m, const Bimodule& n);
std::optional<Matrix> find_iso_in(const std::vector<Matrix>& homs, const Field& f, int dim);

}  // namespace hcell
