#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hcell/group.hpp"
#include "hcell/matrix.hpp"
#include "hcell/scalar.hpp"

namespace hcell {

struct Quiver {
  struct Arrow {
    std::string name;
    int source;
    int target;
  };
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  int n_vertices() const { return static_cast<int>(vertices.size()); }
  int n_arrows() const { return static_cast<int>(arrows.size()); }
  int vertex_index(const std::string& name) const;
  int arrow_index(const std::string& name) const;
  void validate() const;
};

// One term of a relation: coeff * (arrow path in traversal order, i.e.
// path[0] is traversed first).
struct PathTerm {
  Scalar coeff;
  std::vector<int> arrows;
};
using Relation = std::vector<PathTerm>;

struct AlgebraPresentation {
  Quiver quiver;
  std::vector<Relation> relations;
  int nilpotency_bound = 2;
  Field field;
  // optional: label vertices by group elements (names must match bijectively)
  std::shared_ptr<const GroupData> group;
};

// Basic algebra kQ/I with a monomial basis of reduced paths.
//
// Convention: paths multiply like functions. For a path q: u -> v and
// p: v -> z the product p·q is "first q, then p", a path u -> z. Hence
// e_{target(p)} · p · e_{source(p)} = p, A·e_v is spanned by paths starting
// at v, and e_v·A by paths ending at v.
class Algebra {
 public:
  struct BasisElem {
    std::vector<int> arrows;  // traversal order
    int source;
    int target;
    int length() const { return static_cast<int>(arrows.size()); }
  };

  Field field;
  Quiver quiver;
  std::vector<BasisElem> basis;
  std::vector<int> idempotent;            // vertex -> basis index of e_v
  std::vector<std::vector<SparseVec>> mult;  // mult[i][j] = basis_i · basis_j

  // Optional labelling of vertices by group elements (covering quivers,
  // §-style idempotent actions). vertex_group[v] = group element index.
  std::shared_ptr<const GroupData> group;
  std::vector<int> vertex_group;
  std::vector<int> group_vertex;  // inverse map

  int dim() const { return static_cast<int>(basis.size()); }
  int arrow_basis_index(int arrow) const;  // basis index of an arrow
  std::vector<Scalar> one() const;
  std::vector<Scalar> unit_vec(int i) const;

  SparseVec mul_basis(int i, int j) const { return mult[i][j]; }
  std::vector<Scalar> mul(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const;
  SparseVec mul_sparse(const SparseVec& a, const SparseVec& b) const;

  Matrix left_mult(int i) const;   // x -> basis_i · x
  Matrix right_mult(int i) const;  // x -> x · basis_i
  Matrix left_mult_vec(const std::vector<Scalar>& a) const;
  Matrix right_mult_vec(const std::vector<Scalar>& a) const;

  int vertex_of_group(int g) const;
  int group_of_vertex(int v) const;

  // Exhaustive sanity checks (associativity, idempotent axioms).
  void verify_axioms() const;

  std::string basis_name(int i) const;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

// Builds kQ/I. Throws NonAdmissibleIdeal / InconsistentBound.
AlgebraPtr build_algebra(const AlgebraPresentation& pres);

// Finite group acting on A by algebra automorphisms, left action
// convention: matrix(g)·matrix(h) = matrix(gh).
struct AlgebraAction {
  std::shared_ptr<const GroupData> grp;
  std::vector<Matrix> mats;  // per group element, dim x dim

  const Matrix& mat(int g) const { return mats[g]; }
  // image of algebra element under g
  std::vector<Scalar> apply(int g, const std::vector<Scalar>& a) const { return mats[g].apply(a); }
};

struct ValidationReport {
  struct Entry {
    std::string check;
    bool ok;
    std::string witness;  // empty when ok
  };
  std::vector<Entry> entries;

  bool all_ok() const;
  void add(const std::string& check, bool ok, const std::string& witness = "");
  std::vector<Entry> failures() const;
};

// Validates the action axioms; failures become report entries. When
// `require_regular` also checks the induced action on idempotent labels is
// free and transitive.
ValidationReport check_action(const Algebra& alg, const GroupData& grp, const AlgebraAction& act,
                              bool require_regular = false);

// Multiplicative extension of an action given on vertices (as a permutation)
// and arrows (as coefficient matrices: image of arrow j = sum_i coeff[i][j]·arrow_i).
AlgebraAction action_from_generators(const AlgebraPtr& alg,
                                     const std::shared_ptr<const GroupData>& grp,
                                     const std::vector<std::vector<int>>& vertex_perm,
                                     const std::vector<Matrix>& arrow_mats);

struct SelfInjectivity {
  bool self_injective = false;
  std::vector<int> nu;  // vertex permutation when self-injective
  std::string witness;  // failing idempotent otherwise
};

// Simple-socle + permutation test on both sides.
SelfInjectivity is_self_injective(const Algebra& alg);

// Nakayama permutation on vertex indices: soc(e_g A) ≃ top(A e_{nu(g)}).
// Throws NotSelfInjective. When the idempotent action is regular also checks
// nu(g) = nu(1)·g on group labels.
std::vector<int> nakayama_permutation(const Algebra& alg);

// Socle of the right projective e_v·A: basis vectors (in algebra coords).
Matrix right_socle(const Algebra& alg, int v);
// Socle of the left projective A·e_v.
Matrix left_socle(const Algebra& alg, int v);

}  // namespace hcell
