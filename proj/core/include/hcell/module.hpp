#pragma once

#include "hcell/algebra.hpp"
#include "hcell/matrix.hpp"

namespace hcell {

SparseMat sparse_identity(int n);
SparseMat sparse_compose(const SparseMat& a, const SparseMat& b);  // a after b
SparseMat sparse_add_mat(const SparseMat& a, const SparseMat& b);
SparseMat sparse_scale_mat(const SparseMat& a, const Scalar& c);
bool sparse_equal(const SparseMat& a, const SparseMat& b);

// Expresses vectors in terms of a fixed independent spanning set, via an
// augmented echelon. Ambient coordinates first, tail records combinations.
class SubspaceBasis {
 public:
  SubspaceBasis(int ambient_dim, const Field& f)
      : ambient_(ambient_dim), field_(f), ech_(2 * ambient_dim, f) {}

  // Returns false if v is dependent on the current basis (not inserted).
  bool insert(const SparseVec& v);
  int size() const { return count_; }
  const SparseVec& vec(int k) const { return vecs_[k]; }
  const std::vector<SparseVec>& vecs() const { return vecs_; }

  // coordinates of v in the basis; throws if v is outside the span
  SparseVec coords(const SparseVec& v) const;
  bool contains(const SparseVec& v) const;

 private:
  int ambient_;
  Field field_;
  int count_ = 0;
  Echelon ech_;
  std::vector<SparseVec> vecs_;
};

// Finite-dimensional left module: one action matrix per algebra basis element.
struct LeftModule {
  AlgebraPtr A;
  int dim = 0;
  std::vector<SparseMat> act;

  static LeftModule zero(AlgebraPtr a);
  static LeftModule regular(AlgebraPtr a);
  static LeftModule column(AlgebraPtr a, int vertex);  // A·e_v
  static LeftModule direct_sum(const std::vector<LeftModule>& parts);

  Matrix act_dense(int i) const { return act[i].to_dense(A->field); }
  SparseMat act_vec(const std::vector<Scalar>& a) const;  // action of Σ a_i basis_i
  void validate() const;  // throws Error("BadModule", ...)
};

// A-A-bimodule; `right[i]` is the action of basis_i from the right, so
// right[x]∘right[y] = right[y·x].
struct Bimodule {
  AlgebraPtr A;
  int dim = 0;
  std::vector<SparseMat> left, right;

  static Bimodule zero(AlgebraPtr a);
  static Bimodule regular(AlgebraPtr a);
  // A·e_g ⊗_k e_h·A
  static Bimodule proj(AlgebraPtr a, int vertex_g, int vertex_h);
  static Bimodule direct_sum(const std::vector<Bimodule>& parts);
  // outer actions on M ⊗_k N
  static Bimodule tensor_k(const Bimodule& m, const Bimodule& n);

  Matrix left_dense(int i) const { return left[i].to_dense(A->field); }
  Matrix right_dense(int i) const { return right[i].to_dense(A->field); }
  SparseMat left_vec(const std::vector<Scalar>& a) const;
  SparseMat right_vec(const std::vector<Scalar>& a) const;

  LeftModule forget_right() const;  // underlying left module
  void validate() const;
};

// M^g: actions precomposed with the automorphism g (left action convention,
// a·m·b = g(a) m g(b)).
Bimodule twist(const Bimodule& m, int g, const AlgebraAction& act);
// twisting is strict: twist(twist(M,g),h) == twist(M, gh)

bool is_module_map(const LeftModule& m, const LeftModule& n, const Matrix& t);
bool is_bimodule_map(const Bimodule& m, const Bimodule& n, const Matrix& t);

// generators = lifts of a basis of M/rad·M, with their vertices
struct ModuleGenerators {
  std::vector<std::vector<Scalar>> gens;
  std::vector<int> vertices;
};
ModuleGenerators minimal_generators(const LeftModule& m);

// P1 --f--> P0 --pi--> M -> 0 with projective (column) or free covers.
struct ModulePresentation {
  LeftModule p1, p0;
  Matrix f;   // p0.dim x p1.dim
  Matrix pi;  // m.dim x p0.dim
  std::vector<int> p0_vertices, p1_vertices;  // summand vertices; -1 for a free summand A
};
ModulePresentation presentation(const LeftModule& m, bool free_cover);

Bimodule image_bimodule(const Bimodule& m, const Matrix& idem,
                        Matrix* incl = nullptr, Matrix* proj = nullptr);

}  // namespace hcell
