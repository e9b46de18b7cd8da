#include "hcell/homspace.hpp"

#include <algorithm>

namespace hcell {

namespace {

struct BlockData {
  // per (v,w) block: bases of e_v·M·e_w and e_v·N·e_w
  std::vector<SubspaceBasis> bm, bn;  // indexed v*nv + w
  std::vector<int> offset;            // unknown offsets per block
  int nv = 0;
  int total = 0;
};

SparseVec project_block(const Bimodule& m, int v, int w, const SparseVec& x) {
  const Algebra& A = *m.A;
  return m.right[A.idempotent[w]].apply(m.left[A.idempotent[v]].apply(x));
}

BlockData block_data(const Bimodule& m, const Bimodule& n) {
  const Algebra& A = *m.A;
  const Field& f = A.field;
  const int nv = A.quiver.n_vertices();
  BlockData d;
  d.nv = nv;
  for (int v = 0; v < nv; ++v)
    for (int w = 0; w < nv; ++w) {
      SubspaceBasis sm(m.dim, f), sn(n.dim, f);
      for (int c = 0; c < m.dim; ++c) sm.insert(project_block(m, v, w, {{c, Scalar::one(f)}}));
      for (int c = 0; c < n.dim; ++c) sn.insert(project_block(n, v, w, {{c, Scalar::one(f)}}));
      d.bm.push_back(std::move(sm));
      d.bn.push_back(std::move(sn));
    }
  d.offset.assign(nv * nv + 1, 0);
  for (int b = 0; b < nv * nv; ++b)
    d.offset[b + 1] = d.offset[b] + d.bn[b].size() * d.bm[b].size();
  d.total = d.offset[nv * nv];
  return d;
}

// restriction of an action generator to block bases:
// cols = basis of src block, rows = coords in dst block
std::vector<SparseVec> restrict_action(const SparseMat& action, const SubspaceBasis& src,
                                       const SubspaceBasis& dst) {
  std::vector<SparseVec> cols;
  for (int c = 0; c < src.size(); ++c) cols.push_back(dst.coords(action.apply(src.vec(c))));
  return cols;
}

std::vector<Matrix> solve_blocks(const Bimodule& m, const Bimodule& n, bool right_too) {
  const Algebra& A = *m.A;
  const Field& f = A.field;
  const int nv = A.quiver.n_vertices();
  BlockData d = block_data(m, n);
  if (d.total == 0) return {};

  // unknown layout inside block (v,w): t[r][c] at offset + r*|bm| + c
  auto unk = [&](int blk, int r, int c) { return d.offset[blk] + r * d.bm[blk].size() + c; };

  Echelon sys(d.total, f);
  auto add_constraints = [&](bool left_side, int arrow) {
    int ab = A.arrow_basis_index(arrow);
    int vs = A.quiver.arrows[arrow].source, vt = A.quiver.arrows[arrow].target;
    for (int other = 0; other < nv; ++other) {
      // LEFT: block (vs, w) -> (vt, w); RIGHT: block (v, vt) -> (v, vs)
      int src_blk = left_side ? vs * nv + other : other * nv + vt;
      int dst_blk = left_side ? vt * nv + other : other * nv + vs;
      const auto& act_m = left_side ? m.left[ab] : m.right[ab];
      const auto& act_n = left_side ? n.left[ab] : n.right[ab];
      auto am = restrict_action(act_m, d.bm[src_blk], d.bm[dst_blk]);
      auto an = restrict_action(act_n, d.bn[src_blk], d.bn[dst_blk]);
      // T_dst · A_M − A_N · T_src = 0, entries (r over bn[dst], c over bm[src])
      for (int r = 0; r < d.bn[dst_blk].size(); ++r)
        for (int c = 0; c < d.bm[src_blk].size(); ++c) {
          SparseVec eq;
          for (auto& [k, s] : am[c]) eq.emplace_back(unk(dst_blk, r, k), s);
          for (int l = 0; l < d.bn[src_blk].size(); ++l) {
            Scalar coef = Scalar::zero(f);
            for (auto& [rr, s] : an[l])
              if (rr == r) coef = s;
            if (!coef.is_zero()) eq.emplace_back(unk(src_blk, l, c), -coef);
          }
          sys.insert(sparse_normalize(eq));
        }
    }
  };
  for (int a = 0; a < A.quiver.n_arrows(); ++a) {
    add_constraints(true, a);
    if (right_too) add_constraints(false, a);
  }

  // assemble solutions: for each block, X_blk (basis of the N-block as
  // columns) and C_blk (coordinates of the M-block projection), then
  // T = Σ X_blk · t_blk · C_blk.
  std::vector<Matrix> cms(nv * nv), xns(nv * nv);
  for (int blk = 0; blk < nv * nv; ++blk) {
    int v = blk / nv, w = blk % nv;
    Matrix cm(d.bm[blk].size(), m.dim, f);
    for (int i = 0; i < m.dim; ++i) {
      SparseVec coords = d.bm[blk].coords(project_block(m, v, w, {{i, Scalar::one(f)}}));
      for (auto& [r, s] : coords) cm.at(r, i) = s;
    }
    cms[blk] = std::move(cm);
    Matrix xn(n.dim, d.bn[blk].size(), f);
    for (int c = 0; c < d.bn[blk].size(); ++c)
      for (auto& [r, s] : d.bn[blk].vec(c)) xn.at(r, c) = s;
    xns[blk] = std::move(xn);
  }
  std::vector<Matrix> basis;
  for (int fc : sys.free_coordinates()) {
    std::vector<Scalar> x(d.total, Scalar::zero(f));
    x[fc] = Scalar::one(f);
    for (auto& row : sys.rows()) {
      Scalar val = Scalar::zero(f);
      for (size_t i = 1; i < row.size(); ++i)
        if (row[i].first == fc) val = row[i].second;
      if (!val.is_zero()) x[row[0].first] = -val;
    }
    Matrix t(n.dim, m.dim, f);
    for (int blk = 0; blk < nv * nv; ++blk) {
      int bmn = d.bm[blk].size(), bnn = d.bn[blk].size();
      if (bmn == 0 || bnn == 0) continue;
      Matrix tb(bnn, bmn, f);
      bool nonzero = false;
      for (int r = 0; r < bnn; ++r)
        for (int c = 0; c < bmn; ++c) {
          tb.at(r, c) = x[unk(blk, r, c)];
          nonzero = nonzero || !tb.at(r, c).is_zero();
        }
      if (nonzero) t = t + xns[blk] * tb * cms[blk];
    }
    basis.push_back(std::move(t));
  }
  return basis;
}

}  // namespace

std::vector<Matrix> hom_space(const Bimodule& m, const Bimodule& n) {
  return solve_blocks(m, n, true);
}

int hom_dim(const Bimodule& m, const Bimodule& n) {
  return static_cast<int>(hom_space(m, n).size());
}

std::vector<Matrix> hom_space_left(const LeftModule& m, const LeftModule& n) {
  // reuse the bimodule solver with a trivial right action? Left modules have
  // no right structure; solve directly with row blocks only.
  const Algebra& A = *m.A;
  const Field& f = A.field;
  const int nv = A.quiver.n_vertices();
  std::vector<SubspaceBasis> bm, bn;
  for (int v = 0; v < nv; ++v) {
    int ev = A.idempotent[v];
    SubspaceBasis sm(m.dim, f), sn(n.dim, f);
    for (int c = 0; c < m.dim; ++c) sm.insert(m.act[ev].col(c));
    for (int c = 0; c < n.dim; ++c) sn.insert(n.act[ev].col(c));
    bm.push_back(std::move(sm));
    bn.push_back(std::move(sn));
  }
  std::vector<int> offset(nv + 1, 0);
  for (int v = 0; v < nv; ++v) offset[v + 1] = offset[v] + bn[v].size() * bm[v].size();
  int total = offset[nv];
  if (total == 0) return {};
  auto unk = [&](int v, int r, int c) { return offset[v] + r * bm[v].size() + c; };

  Echelon sys(total, f);
  for (int a = 0; a < A.quiver.n_arrows(); ++a) {
    int ab = A.arrow_basis_index(a);
    int vs = A.quiver.arrows[a].source, vt = A.quiver.arrows[a].target;
    std::vector<SparseVec> am, an;
    for (int c = 0; c < bm[vs].size(); ++c) am.push_back(bm[vt].coords(m.act[ab].apply(bm[vs].vec(c))));
    for (int c = 0; c < bn[vs].size(); ++c) an.push_back(bn[vt].coords(n.act[ab].apply(bn[vs].vec(c))));
    for (int r = 0; r < bn[vt].size(); ++r)
      for (int c = 0; c < bm[vs].size(); ++c) {
        SparseVec eq;
        for (auto& [k, s] : am[c]) eq.emplace_back(unk(vt, r, k), s);
        for (int l = 0; l < bn[vs].size(); ++l) {
          Scalar coef = Scalar::zero(f);
          for (auto& [rr, s] : an[l])
            if (rr == r) coef = s;
          if (!coef.is_zero()) eq.emplace_back(unk(vs, l, c), -coef);
        }
        sys.insert(sparse_normalize(eq));
      }
  }

  std::vector<Matrix> cms(nv), xns(nv);
  for (int v = 0; v < nv; ++v) {
    int ev = A.idempotent[v];
    Matrix cm(bm[v].size(), m.dim, f);
    for (int i = 0; i < m.dim; ++i) {
      SparseVec coords = bm[v].coords(m.act[ev].col(i));
      for (auto& [r, s] : coords) cm.at(r, i) = s;
    }
    cms[v] = std::move(cm);
    Matrix xn(n.dim, bn[v].size(), f);
    for (int c = 0; c < bn[v].size(); ++c)
      for (auto& [r, s] : bn[v].vec(c)) xn.at(r, c) = s;
    xns[v] = std::move(xn);
  }

  std::vector<Matrix> basis;
  for (int fc : sys.free_coordinates()) {
    std::vector<Scalar> x(total, Scalar::zero(f));
    x[fc] = Scalar::one(f);
    for (auto& row : sys.rows()) {
      Scalar val = Scalar::zero(f);
      for (size_t i = 1; i < row.size(); ++i)
        if (row[i].first == fc) val = row[i].second;
      if (!val.is_zero()) x[row[0].first] = -val;
    }
    Matrix t(n.dim, m.dim, f);
    for (int v = 0; v < nv; ++v) {
      int bmn = bm[v].size(), bnn = bn[v].size();
      if (bmn == 0 || bnn == 0) continue;
      Matrix tb(bnn, bmn, f);
      bool nonzero = false;
      for (int r = 0; r < bnn; ++r)
        for (int c = 0; c < bmn; ++c) {
          tb.at(r, c) = x[unk(v, r, c)];
          nonzero = nonzero || !tb.at(r, c).is_zero();
        }
      if (nonzero) t = t + xns[v] * tb * cms[v];
    }
    basis.push_back(std::move(t));
  }
  return basis;
}

int hom_dim_left(const LeftModule& m, const LeftModule& n) {
  return static_cast<int>(hom_space_left(m, n).size());
}

std::optional<Matrix> find_iso_in(const std::vector<Matrix>& homs, const Field& f, int dim) {
  if (dim == 0) return Matrix(0, 0, f);
  for (auto& h : homs)
    if (h.rows() == h.cols() && h.invertible()) return h;
  // structured deterministic sweep over small combinations
  std::uint64_t seed = 0x9e3779b97f4a7c15ull;
  int attempts = std::max<int>(64, 4 * dim);
  for (int t = 0; t < attempts; ++t) {
    Matrix cand(homs[0].rows(), homs[0].cols(), f);
    for (size_t i = 0; i < homs.size(); ++i) {
      seed = seed * 6364136223846793005ull + 1442695040888963407ull;
      long long c = static_cast<long long>((seed >> 33) % 1021);
      if (c) cand = cand + homs[i].scaled(Scalar::from_int(c, f));
    }
    if (cand.rows() == cand.cols() && cand.invertible()) return cand;
  }
  return std::nullopt;
}

std::optional<Matrix> find_iso(const Bimodule& m, const Bimodule& n) {
  if (m.dim != n.dim) return std::nullopt;
  if (m.dim == 0) return Matrix(0, 0, m.A->field);
  auto homs = hom_space(m, n);
  if (homs.empty()) return std::nullopt;
  return find_iso_in(homs, m.A->field, m.dim);
}

}  // namespace hcell
