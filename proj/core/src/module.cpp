#include "hcell/module.hpp"

namespace hcell {

SparseMat sparse_identity(int n) {
  SparseMat m(n, n);
  for (int i = 0; i < n; ++i) m.set_col(i, {{i, Scalar::integer(1)}});
  return m;
}

SparseMat sparse_compose(const SparseMat& a, const SparseMat& b) {
  SparseMat c(a.rows(), b.cols());
  for (int j = 0; j < b.cols(); ++j) c.set_col(j, a.apply(b.col(j)));
  return c;
}

SparseMat sparse_add_mat(const SparseMat& a, const SparseMat& b) {
  SparseMat c(a.rows(), a.cols());
  for (int j = 0; j < a.cols(); ++j) c.set_col(j, sparse_add(a.col(j), b.col(j)));
  return c;
}

SparseMat sparse_scale_mat(const SparseMat& a, const Scalar& s) {
  SparseMat c(a.rows(), a.cols());
  for (int j = 0; j < a.cols(); ++j) c.set_col(j, sparse_scale(a.col(j), s));
  return c;
}

bool sparse_equal(const SparseMat& a, const SparseMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int j = 0; j < a.cols(); ++j) {
    SparseVec d =
        sparse_add(a.col(j), sparse_scale(b.col(j), Scalar::integer(-1)));
    if (!d.empty()) return false;
  }
  return true;
}

bool SubspaceBasis::insert(const SparseVec& v) {
  SparseVec norm = sparse_normalize(v);
  if (norm.empty()) return false;
  // non-destructive dependence check on the ambient part
  SparseVec red = ech_.reduce(norm);
  bool dependent = true;
  for (auto& [i, c] : red)
    if (i < ambient_) dependent = false;
  if (dependent) return false;
  SparseVec aug = norm;
  aug.emplace_back(ambient_ + count_, Scalar::one(field_));
  ech_.insert(aug);
  vecs_.push_back(std::move(norm));
  ++count_;
  return true;
}

SparseVec SubspaceBasis::coords(const SparseVec& v) const {
  SparseVec red = ech_.reduce(v);
  SparseVec out;
  for (auto& [i, c] : red) {
    if (i < ambient_) throw Error("NotInSpan", "vector outside subspace");
    out.emplace_back(i - ambient_, -c);
  }
  return out;
}

bool SubspaceBasis::contains(const SparseVec& v) const {
  SparseVec red = ech_.reduce(v);
  for (auto& [i, c] : red)
    if (i < ambient_) return false;
  return true;
}

LeftModule LeftModule::zero(AlgebraPtr a) {
  LeftModule m;
  m.A = std::move(a);
  m.dim = 0;
  m.act.assign(m.A->dim(), SparseMat(0, 0));
  return m;
}

LeftModule LeftModule::regular(AlgebraPtr a) {
  LeftModule m;
  m.A = std::move(a);
  m.dim = m.A->dim();
  for (int i = 0; i < m.A->dim(); ++i) m.act.push_back(SparseMat::from_dense(m.A->left_mult(i)));
  return m;
}

LeftModule LeftModule::column(AlgebraPtr a, int vertex) {
  LeftModule reg = regular(a);
  std::vector<int> memb;
  for (int i = 0; i < reg.A->dim(); ++i)
    if (reg.A->basis[i].source == vertex) memb.push_back(i);
  std::vector<int> pos(reg.A->dim(), -1);
  for (size_t k = 0; k < memb.size(); ++k) pos[memb[k]] = static_cast<int>(k);
  LeftModule m;
  m.A = reg.A;
  m.dim = static_cast<int>(memb.size());
  for (int x = 0; x < reg.A->dim(); ++x) {
    SparseMat sm(m.dim, m.dim);
    for (int c = 0; c < m.dim; ++c) {
      SparseVec img = reg.act[x].col(memb[c]);
      SparseVec out;
      for (auto& [i, s] : img) out.emplace_back(pos[i], s);
      sm.set_col(c, sparse_normalize(out));
    }
    m.act.push_back(std::move(sm));
  }
  return m;
}

LeftModule LeftModule::direct_sum(const std::vector<LeftModule>& parts) {
  if (parts.empty()) throw Error("BadModule", "empty direct sum needs an algebra");
  LeftModule m;
  m.A = parts[0].A;
  for (auto& p : parts) m.dim += p.dim;
  for (int x = 0; x < m.A->dim(); ++x) {
    SparseMat sm(m.dim, m.dim);
    int off = 0;
    for (auto& p : parts) {
      for (int c = 0; c < p.dim; ++c) {
        SparseVec col = p.act[x].col(c);
        SparseVec out;
        for (auto& [i, s] : col) out.emplace_back(i + off, s);
        sm.set_col(c + off, out);
      }
      off += p.dim;
    }
    m.act.push_back(std::move(sm));
  }
  return m;
}

SparseMat LeftModule::act_vec(const std::vector<Scalar>& a) const {
  SparseMat r(dim, dim);
  for (int i = 0; i < A->dim(); ++i)
    if (!a[i].is_zero()) r = sparse_add_mat(r, sparse_scale_mat(act[i], a[i]));
  return r;
}

void LeftModule::validate() const {
  const auto& alg = *A;
  std::vector<Scalar> one = alg.one();
  if (!sparse_equal(act_vec(one), sparse_identity(dim)))
    throw Error("BadModule", "action(1) is not the identity");
  for (int i = 0; i < alg.dim(); ++i)
    for (int j = 0; j < alg.dim(); ++j) {
      SparseMat lhs = sparse_compose(act[i], act[j]);
      SparseMat rhs(dim, dim);
      for (auto& [k, c] : alg.mult[i][j]) rhs = sparse_add_mat(rhs, sparse_scale_mat(act[k], c));
      if (!sparse_equal(lhs, rhs))
        throw Error("BadModule", "action violates multiplication at (" + alg.basis_name(i) + "," +
                                     alg.basis_name(j) + ")");
    }
}

Bimodule Bimodule::zero(AlgebraPtr a) {
  Bimodule m;
  m.A = std::move(a);
  m.dim = 0;
  m.left.assign(m.A->dim(), SparseMat(0, 0));
  m.right.assign(m.A->dim(), SparseMat(0, 0));
  return m;
}

Bimodule Bimodule::regular(AlgebraPtr a) {
  Bimodule m;
  m.A = std::move(a);
  m.dim = m.A->dim();
  for (int i = 0; i < m.A->dim(); ++i) {
    m.left.push_back(SparseMat::from_dense(m.A->left_mult(i)));
    m.right.push_back(SparseMat::from_dense(m.A->right_mult(i)));
  }
  return m;
}

Bimodule Bimodule::proj(AlgebraPtr a, int vertex_g, int vertex_h) {
  Bimodule m;
  m.A = a;
  std::vector<int> us, vs;
  for (int i = 0; i < a->dim(); ++i) {
    if (a->basis[i].source == vertex_g) us.push_back(i);
    if (a->basis[i].target == vertex_h) vs.push_back(i);
  }
  std::vector<int> upos(a->dim(), -1), vpos(a->dim(), -1);
  for (size_t k = 0; k < us.size(); ++k) upos[us[k]] = static_cast<int>(k);
  for (size_t k = 0; k < vs.size(); ++k) vpos[vs[k]] = static_cast<int>(k);
  int du = static_cast<int>(us.size()), dv = static_cast<int>(vs.size());
  m.dim = du * dv;
  for (int x = 0; x < a->dim(); ++x) {
    SparseMat L(m.dim, m.dim), R(m.dim, m.dim);
    Matrix lm = a->left_mult(x), rm = a->right_mult(x);
    for (int cu = 0; cu < du; ++cu)
      for (int cv = 0; cv < dv; ++cv) {
        SparseVec lcol, rcol;
        for (int i = 0; i < a->dim(); ++i) {
          if (upos[i] >= 0 && !lm.at(i, us[cu]).is_zero())
            lcol.emplace_back(upos[i] * dv + cv, lm.at(i, us[cu]));
          if (vpos[i] >= 0 && !rm.at(i, vs[cv]).is_zero())
            rcol.emplace_back(cu * dv + vpos[i], rm.at(i, vs[cv]));
        }
        L.set_col(cu * dv + cv, sparse_normalize(lcol));
        R.set_col(cu * dv + cv, sparse_normalize(rcol));
      }
    m.left.push_back(std::move(L));
    m.right.push_back(std::move(R));
  }
  return m;
}

Bimodule Bimodule::direct_sum(const std::vector<Bimodule>& parts) {
  if (parts.empty()) throw Error("BadModule", "empty direct sum needs an algebra");
  Bimodule m;
  m.A = parts[0].A;
  for (auto& p : parts) m.dim += p.dim;
  for (int x = 0; x < m.A->dim(); ++x) {
    SparseMat L(m.dim, m.dim), R(m.dim, m.dim);
    int off = 0;
    for (auto& p : parts) {
      for (int c = 0; c < p.dim; ++c) {
        SparseVec lc = p.left[x].col(c), rc = p.right[x].col(c), lo, ro;
        for (auto& [i, s] : lc) lo.emplace_back(i + off, s);
        for (auto& [i, s] : rc) ro.emplace_back(i + off, s);
        L.set_col(c + off, lo);
        R.set_col(c + off, ro);
      }
      off += p.dim;
    }
    m.left.push_back(std::move(L));
    m.right.push_back(std::move(R));
  }
  return m;
}

Bimodule Bimodule::tensor_k(const Bimodule& a, const Bimodule& b) {
  Bimodule m;
  m.A = a.A;
  m.dim = a.dim * b.dim;
  for (int x = 0; x < m.A->dim(); ++x) {
    SparseMat L(m.dim, m.dim), R(m.dim, m.dim);
    for (int i = 0; i < a.dim; ++i)
      for (int j = 0; j < b.dim; ++j) {
        SparseVec lc, rc;
        for (auto& [k, c] : a.left[x].col(i)) lc.emplace_back(k * b.dim + j, c);
        for (auto& [k, c] : b.right[x].col(j)) rc.emplace_back(i * b.dim + k, c);
        L.set_col(i * b.dim + j, lc);
        R.set_col(i * b.dim + j, rc);
      }
    m.left.push_back(std::move(L));
    m.right.push_back(std::move(R));
  }
  return m;
}

SparseMat Bimodule::left_vec(const std::vector<Scalar>& a) const {
  SparseMat r(dim, dim);
  for (int i = 0; i < A->dim(); ++i)
    if (!a[i].is_zero()) r = sparse_add_mat(r, sparse_scale_mat(left[i], a[i]));
  return r;
}

SparseMat Bimodule::right_vec(const std::vector<Scalar>& a) const {
  SparseMat r(dim, dim);
  for (int i = 0; i < A->dim(); ++i)
    if (!a[i].is_zero()) r = sparse_add_mat(r, sparse_scale_mat(right[i], a[i]));
  return r;
}

LeftModule Bimodule::forget_right() const {
  LeftModule m;
  m.A = A;
  m.dim = dim;
  m.act = left;
  return m;
}

void Bimodule::validate() const {
  forget_right().validate();
  const auto& alg = *A;
  std::vector<Scalar> one = alg.one();
  if (!sparse_equal(right_vec(one), sparse_identity(dim)))
    throw Error("BadModule", "right action of 1 is not the identity");
  for (int i = 0; i < alg.dim(); ++i)
    for (int j = 0; j < alg.dim(); ++j) {
      SparseMat lhs = sparse_compose(right[j], right[i]);  // (m·i)·j = m·(i·j)
      SparseMat rhs(dim, dim);
      for (auto& [k, c] : alg.mult[i][j]) rhs = sparse_add_mat(rhs, sparse_scale_mat(right[k], c));
      if (!sparse_equal(lhs, rhs))
        throw Error("BadModule", "right action violates multiplication at (" + alg.basis_name(i) +
                                     "," + alg.basis_name(j) + ")");
    }
  for (int i = 0; i < alg.dim(); ++i)
    for (int j = 0; j < alg.dim(); ++j)
      if (!sparse_equal(sparse_compose(left[i], right[j]), sparse_compose(right[j], left[i])))
        throw Error("BadModule", "left and right actions do not commute at (" + alg.basis_name(i) +
                                     "," + alg.basis_name(j) + ")");
}

Bimodule twist(const Bimodule& m, int g, const AlgebraAction& act) {
  const Algebra& A = *m.A;
  Bimodule t;
  t.A = m.A;
  t.dim = m.dim;
  const Matrix& ag = act.mat(g);
  for (int i = 0; i < A.dim(); ++i) {
    SparseMat L(m.dim, m.dim), R(m.dim, m.dim);
    for (int k = 0; k < A.dim(); ++k) {
      if (!ag.at(k, i).is_zero()) {
        L = sparse_add_mat(L, sparse_scale_mat(m.left[k], ag.at(k, i)));
        R = sparse_add_mat(R, sparse_scale_mat(m.right[k], ag.at(k, i)));
      }
    }
    t.left.push_back(std::move(L));
    t.right.push_back(std::move(R));
  }
  return t;
}

namespace {

bool check_generator_commute(const Bimodule& m, const Bimodule& n, const SparseMat& t,
                             bool left_side) {
  const Algebra& A = *m.A;
  std::vector<int> gens;
  for (int e : A.idempotent) gens.push_back(e);
  for (int a = 0; a < A.quiver.n_arrows(); ++a) gens.push_back(A.arrow_basis_index(a));
  for (int x : gens) {
    const SparseMat& mm = left_side ? m.left[x] : m.right[x];
    const SparseMat& nn = left_side ? n.left[x] : n.right[x];
    if (!sparse_equal(sparse_compose(t, mm), sparse_compose(nn, t))) return false;
  }
  return true;
}

}  // namespace

bool is_module_map(const LeftModule& m, const LeftModule& n, const Matrix& t) {
  if (t.rows() != n.dim || t.cols() != m.dim) return false;
  SparseMat ts = SparseMat::from_dense(t);
  const Algebra& A = *m.A;
  std::vector<int> gens;
  for (int e : A.idempotent) gens.push_back(e);
  for (int a = 0; a < A.quiver.n_arrows(); ++a) gens.push_back(A.arrow_basis_index(a));
  for (int x : gens)
    if (!sparse_equal(sparse_compose(ts, m.act[x]), sparse_compose(n.act[x], ts))) return false;
  return true;
}

bool is_bimodule_map(const Bimodule& m, const Bimodule& n, const Matrix& t) {
  if (t.rows() != n.dim || t.cols() != m.dim) return false;
  SparseMat ts = SparseMat::from_dense(t);
  return check_generator_commute(m, n, ts, true) && check_generator_commute(m, n, ts, false);
}

ModuleGenerators minimal_generators(const LeftModule& m) {
  const Algebra& A = *m.A;
  const Field& f = A.field;
  SubspaceBasis span(m.dim, f);
  for (int a = 0; a < A.quiver.n_arrows(); ++a) {
    int ab = A.arrow_basis_index(a);
    for (int c = 0; c < m.dim; ++c) span.insert(m.act[ab].col(c));
  }
  ModuleGenerators out;
  for (int v = 0; v < A.quiver.n_vertices(); ++v) {
    int ev = A.idempotent[v];
    for (int c = 0; c < m.dim; ++c) {
      SparseVec cand = m.act[ev].col(c);
      if (span.insert(cand)) {
        std::vector<Scalar> g(m.dim, Scalar::zero(f));
        for (auto& [i, s] : cand) g[i] = s;
        out.gens.push_back(g);
        out.vertices.push_back(v);
      }
    }
  }
  return out;
}

ModulePresentation presentation(const LeftModule& m, bool free_cover) {
  const Algebra& A = *m.A;
  const Field& f = A.field;
  ModuleGenerators gen = minimal_generators(m);

  auto cover = [&](const LeftModule& target, const ModuleGenerators& gens)
      -> std::tuple<LeftModule, Matrix, std::vector<int>> {
    std::vector<LeftModule> parts;
    std::vector<int> verts;
    for (size_t i = 0; i < gens.gens.size(); ++i) {
      if (free_cover) {
        parts.push_back(LeftModule::regular(m.A));
        verts.push_back(-1);
      } else {
        parts.push_back(LeftModule::column(m.A, gens.vertices[i]));
        verts.push_back(gens.vertices[i]);
      }
    }
    LeftModule p = parts.empty() ? LeftModule::zero(m.A) : LeftModule::direct_sum(parts);
    Matrix pi(target.dim, p.dim, f);
    int off = 0;
    for (size_t i = 0; i < gens.gens.size(); ++i) {
      std::vector<int> alg_basis;
      for (int b = 0; b < A.dim(); ++b)
        if (free_cover || A.basis[b].source == gens.vertices[i]) alg_basis.push_back(b);
      for (size_t c = 0; c < alg_basis.size(); ++c) {
        std::vector<Scalar> img = target.act[alg_basis[c]].apply_dense(gens.gens[i], f);
        for (int r = 0; r < target.dim; ++r) pi.at(r, off + static_cast<int>(c)) = img[r];
      }
      off += parts[i].dim;
    }
    return {p, pi, verts};
  };

  auto [p0, pi, verts0] = cover(m, gen);

  Matrix ker = pi.nullspace();
  LeftModule kmod;
  kmod.A = m.A;
  kmod.dim = ker.cols();
  SubspaceBasis kbasis(p0.dim, f);
  for (int c = 0; c < ker.cols(); ++c) {
    SparseVec v;
    for (int r = 0; r < ker.rows(); ++r)
      if (!ker.at(r, c).is_zero()) v.emplace_back(r, ker.at(r, c));
    kbasis.insert(v);
  }
  for (int x = 0; x < A.dim(); ++x) {
    SparseMat sm(kmod.dim, kmod.dim);
    for (int c = 0; c < kmod.dim; ++c) sm.set_col(c, kbasis.coords(p0.act[x].apply(kbasis.vec(c))));
    kmod.act.push_back(std::move(sm));
  }
  ModuleGenerators kgen = minimal_generators(kmod);
  ModuleGenerators kgen_p0;
  kgen_p0.vertices = kgen.vertices;
  for (auto& g : kgen.gens) {
    std::vector<Scalar> gp(p0.dim, Scalar::zero(f));
    for (int k = 0; k < kmod.dim; ++k) {
      if (g[k].is_zero()) continue;
      for (auto& [i, s] : kbasis.vec(k)) gp[i] += s * g[k];
    }
    kgen_p0.gens.push_back(gp);
  }
  auto [p1, fmap, verts1] = cover(p0, kgen_p0);

  ModulePresentation pr;
  pr.p0 = std::move(p0);
  pr.p1 = std::move(p1);
  pr.f = std::move(fmap);
  pr.pi = std::move(pi);
  pr.p0_vertices = verts0;
  pr.p1_vertices = verts1;
  return pr;
}

Bimodule image_bimodule(const Bimodule& m, const Matrix& idem, Matrix* incl, Matrix* proj) {
  auto [basis, pivots] = idem.column_space();
  (void)pivots;
  auto x = basis.solve(idem);
  if (!x) throw Error("Internal", "idempotent image factorization failed");
  Bimodule img;
  img.A = m.A;
  img.dim = basis.cols();
  SparseMat bs = SparseMat::from_dense(basis), xs = SparseMat::from_dense(*x);
  for (int i = 0; i < m.A->dim(); ++i) {
    img.left.push_back(sparse_compose(xs, sparse_compose(m.left[i], bs)));
    img.right.push_back(sparse_compose(xs, sparse_compose(m.right[i], bs)));
  }
  if (incl) *incl = basis;
  if (proj) *proj = *x;
  return img;
}

}  // namespace hcell
