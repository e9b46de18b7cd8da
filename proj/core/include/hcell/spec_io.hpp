#pragma once

#include <string>

#include "hcell/hopf.hpp"

namespace hcell {

// Parsed and validated input file. A spec either carries a full algebra
// block (quiver/relations or a hopf block generating them) or is group-only
// (classification commands).
struct SpecFile {
  std::string name;
  Field field;
  std::shared_ptr<const GroupData> group;
  bool has_algebra = false;
  AlgebraPresentation pres;
  bool has_hopf = false;
  std::shared_ptr<const WeightData> weights;
  bool has_action = false;
  std::vector<std::vector<int>> vertex_perm;  // per group element
  std::vector<Matrix> arrow_mats;
};

// throws Error("SchemaError", path-to-key) or Error("SemanticError", ...)
SpecFile parse_spec(const std::string& path);
SpecFile parse_spec_text(const std::string& text, const std::string& origin);

// Built artifacts for the pipelines.
struct LoadedSpec {
  SpecFile spec;
  AlgebraPtr alg;
  AlgebraAction act;
  bool has_hopf = false;
  HopfBuild hopf;
};

// builds the algebra, the action (explicit block or the multiplicative
// extension of the hopf left action) and, when present, the Hopf structure
LoadedSpec load_spec(const std::string& path);
LoadedSpec build_spec(const SpecFile& sf);

}  // namespace hcell
