#include "hcell/tensor.hpp"

#include <functional>

namespace hcell {

SparseVec tensor_coords(const SparseVec& m, const SparseVec& n, int dim_n) {
  SparseVec out;
  for (auto& [i, a] : m)
    for (auto& [j, b] : n) out.emplace_back(i * dim_n + j, a * b);
  return sparse_normalize(out);
}

Coeq coequalize(const Algebra& A, int dim_m, const std::vector<SparseMat>& right_m, int dim_n,
                const std::vector<SparseMat>& left_n) {
  const Field& f = A.field;
  const int nv = A.quiver.n_vertices();
  Coeq q;
  q.field = f;
  q.dim_m = dim_m;
  q.dim_n = dim_n;

  if (dim_m == 0 || dim_n == 0) {
    q.dim = 0;
    q.proj = SparseMat(0, dim_m * dim_n);
    q.sect = SparseMat(dim_m * dim_n, 0);
    return q;
  }

  // per-vertex column bases of M·e_v and e_v·N
  std::vector<SubspaceBasis> bm, bn;
  for (int v = 0; v < nv; ++v) {
    int ev = A.idempotent[v];
    SubspaceBasis sm(dim_m, f), sn(dim_n, f);
    for (int c = 0; c < dim_m; ++c) sm.insert(right_m[ev].col(c));
    for (int c = 0; c < dim_n; ++c) sn.insert(left_n[ev].col(c));
    bm.push_back(std::move(sm));
    bn.push_back(std::move(sn));
  }
  std::vector<int> offset(nv + 1, 0);
  for (int v = 0; v < nv; ++v) offset[v + 1] = offset[v] + bm[v].size() * bn[v].size();
  const int udim = offset[nv];

  // π(x ⊗ y) = Σ_v coords_v(x·e_v) ⊗ coords_v(e_v·y) in U coordinates
  auto pi_pure = [&](const SparseVec& x, const SparseVec& y) {
    SparseVec out;
    for (int v = 0; v < nv; ++v) {
      int ev = A.idempotent[v];
      SparseVec xv = bm[v].coords(right_m[ev].apply(x));
      if (xv.empty()) continue;
      SparseVec yv = bn[v].coords(left_n[ev].apply(y));
      if (yv.empty()) continue;
      for (auto& [a, ca] : xv)
        for (auto& [b, cb] : yv)
          out.emplace_back(offset[v] + a * bn[v].size() + b, ca * cb);
    }
    return sparse_normalize(out);
  };

  // arrow relations (m·a) ⊗ n − m ⊗ (a·n), m ∈ basis of M·e_{t(a)},
  // n ∈ basis of e_{s(a)}·N
  Echelon rel(udim, f);
  for (int ar = 0; ar < A.quiver.n_arrows(); ++ar) {
    int ab = A.arrow_basis_index(ar);
    int vt = A.quiver.arrows[ar].target, vs = A.quiver.arrows[ar].source;
    for (int im = 0; im < bm[vt].size(); ++im) {
      SparseVec ma = right_m[ab].apply(bm[vt].vec(im));
      for (int in = 0; in < bn[vs].size(); ++in) {
        const SparseVec& n_vec = bn[vs].vec(in);
        SparseVec r1 = pi_pure(ma, n_vec);
        SparseVec an = left_n[ab].apply(n_vec);
        SparseVec r2 = pi_pure(bm[vt].vec(im), an);
        rel.insert(sparse_add(r1, sparse_scale(r2, Scalar::integer(-1))));
      }
    }
  }

  std::vector<int> free = rel.free_coordinates();
  std::vector<int> coord_pos(udim, -1);
  for (size_t k = 0; k < free.size(); ++k) coord_pos[free[k]] = static_cast<int>(k);
  q.dim = static_cast<int>(free.size());

  auto to_quotient = [&](const SparseVec& u) {
    SparseVec red = rel.reduce(u);
    SparseVec out;
    for (auto& [i, c] : red) out.emplace_back(coord_pos[i], c);
    return sparse_normalize(out);
  };

  q.proj = SparseMat(q.dim, dim_m * dim_n);
  for (int i = 0; i < dim_m; ++i)
    for (int j = 0; j < dim_n; ++j) {
      SparseVec u = pi_pure({{i, Scalar::one(f)}}, {{j, Scalar::one(f)}});
      q.proj.set_col(i * dim_n + j, to_quotient(u));
    }

  q.sect = SparseMat(dim_m * dim_n, q.dim);
  for (int k = 0; k < q.dim; ++k) {
    int u = free[k];
    int v = 0;
    while (offset[v + 1] <= u) ++v;
    int local = u - offset[v];
    int a = local / bn[v].size(), b = local % bn[v].size();
    q.sect.set_col(k, tensor_coords(bm[v].vec(a), bn[v].vec(b), dim_n));
  }
  return q;
}

BimoduleTensor tensor_over_A(const Bimodule& m, const Bimodule& n) {
  BimoduleTensor t;
  t.q = coequalize(*m.A, m.dim, m.right, n.dim, n.left);
  t.mod.A = m.A;
  t.mod.dim = t.q.dim;
  const int dn = n.dim;
  for (int x = 0; x < m.A->dim(); ++x) {
    // outer left action via M's left action, outer right via N's right
    SparseMat L(t.q.dim, t.q.dim), R(t.q.dim, t.q.dim);
    for (int k = 0; k < t.q.dim; ++k) {
      SparseVec rep = t.q.sect.col(k);
      SparseVec lacc, racc;
      for (auto& [ij, c] : rep) {
        int i = ij / dn, j = ij % dn;
        for (auto& [i2, lc] : m.left[x].col(i)) lacc.emplace_back(i2 * dn + j, lc * c);
        for (auto& [j2, rc] : n.right[x].col(j)) racc.emplace_back(i * dn + j2, rc * c);
      }
      L.set_col(k, t.q.proj.apply(sparse_normalize(lacc)));
      R.set_col(k, t.q.proj.apply(sparse_normalize(racc)));
    }
    t.mod.left.push_back(std::move(L));
    t.mod.right.push_back(std::move(R));
  }
  return t;
}

SparseMat coeq_transport(const Coeq& src, const Coeq& dst, const SparseMat& f, const SparseMat& g) {
  SparseMat out(dst.dim, src.dim);
  const int dn_src = src.dim_n, dn_dst = dst.dim_n;
  (void)dn_src;
  for (int k = 0; k < src.dim; ++k) {
    SparseVec rep = src.sect.col(k);
    SparseVec acc;
    for (auto& [ij, c] : rep) {
      int i = ij / src.dim_n, j = ij % src.dim_n;
      SparseVec fi = f.col(i), gj = g.col(j);
      for (auto& [i2, a] : fi)
        for (auto& [j2, b] : gj) acc.emplace_back(i2 * dn_dst + j2, a * b * c);
    }
    out.set_col(k, dst.proj.apply(sparse_normalize(acc)));
  }
  return out;
}

SparseMat coeq_conjugate(const Coeq& src, const Coeq& dst,
                         const std::function<SparseVec(const SparseVec&)>& big) {
  SparseMat out(dst.dim, src.dim);
  for (int k = 0; k < src.dim; ++k) out.set_col(k, dst.proj.apply(big(src.sect.col(k))));
  return out;
}

Matrix left_unitor(const Bimodule& m, const Coeq& q_am) {
  const Field& f = m.A->field;
  Matrix u(m.dim, q_am.dim, f);
  for (int k = 0; k < q_am.dim; ++k) {
    SparseVec rep = q_am.sect.col(k);
    std::vector<Scalar> acc(m.dim, Scalar::zero(f));
    for (auto& [ij, c] : rep) {
      int i = ij / q_am.dim_n, j = ij % q_am.dim_n;  // i: algebra basis, j: M basis
      for (auto& [r, lc] : m.left[i].col(j)) acc[r] += lc * c;
    }
    for (int r = 0; r < m.dim; ++r) u.at(r, k) = acc[r];
  }
  return u;
}

Matrix right_unitor(const Bimodule& m, const Coeq& q_ma) {
  const Field& f = m.A->field;
  Matrix u(m.dim, q_ma.dim, f);
  for (int k = 0; k < q_ma.dim; ++k) {
    SparseVec rep = q_ma.sect.col(k);
    std::vector<Scalar> acc(m.dim, Scalar::zero(f));
    for (auto& [ij, c] : rep) {
      int i = ij / q_ma.dim_n, j = ij % q_ma.dim_n;  // i: M basis, j: algebra basis
      for (auto& [r, rc] : m.right[j].col(i)) acc[r] += rc * c;
    }
    for (int r = 0; r < m.dim; ++r) u.at(r, k) = acc[r];
  }
  return u;
}

Matrix associator(const Coeq& q_mn, const Coeq& q_mn_k, const Coeq& q_nk, const Coeq& q_m_nk) {
  // q_mn:  M⊗N -> MN        q_mn_k: MN⊗K -> (MN)K
  // q_nk:  N⊗K -> NK        q_m_nk: M⊗NK -> M(NK)
  const int dim_n = q_nk.dim_m, dim_k = q_nk.dim_n;
  SparseMat out(q_m_nk.dim, q_mn_k.dim);
  for (int c = 0; c < q_mn_k.dim; ++c) {
    SparseVec rep = q_mn_k.sect.col(c);  // over (MN)⊗K
    SparseVec acc;                       // over M⊗(NK)
    for (auto& [uk, s] : rep) {
      int u = uk / q_mn_k.dim_n, k = uk % q_mn_k.dim_n;
      SparseVec mn = q_mn.sect.col(u);  // over M⊗N
      for (auto& [ij, t] : mn) {
        int i = ij / dim_n, j = ij % dim_n;
        // n_j ⊗ k -> NK coordinates
        SparseVec nk = q_nk.proj.col(j * dim_k + k);
        for (auto& [w, r] : nk) acc.emplace_back(i * q_m_nk.dim_n + w, s * t * r);
      }
    }
    out.set_col(c, q_m_nk.proj.apply(sparse_normalize(acc)));
  }
  return out.to_dense(q_mn.field);
}

}  // namespace hcell
