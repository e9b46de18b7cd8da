#pragma once

#include "hcell/decompose.hpp"
#include "hcell/module.hpp"

namespace hcell {

// Family of isomorphisms α_g: M -> M^g with (α_h)^g ∘ α_g = α_{hg}, i.e.
// Mat(α_h)·Mat(α_g) = Mat(α_{hg}) since twisting a morphism keeps its matrix.
struct EquivariantStructure {
  std::vector<Matrix> alpha;  // indexed by group element
};

ValidationReport verify_equivariant(const Bimodule& m, const AlgebraAction& act,
                                    const EquivariantStructure& es);

struct EquivariantSearch {
  bool found = false;
  bool indeterminate = false;
  EquivariantStructure structure;
  std::string certificate;  // failure witness or indeterminacy note
};

// Searches for a G-equivariant structure: isomorphisms M ≅ M^g first, then a
// scalar 2-cocycle correction modulo the radical of End(M), then linear
// lifting along radical powers.
EquivariantSearch equivariant_structure(const Bimodule& m, const AlgebraAction& act);

// The automorphism action on the regular bimodule is an equivariant
// structure (α_g = matrix of g).
EquivariantStructure regular_equivariant(const AlgebraPtr& a, const AlgebraAction& act);

}  // namespace hcell
