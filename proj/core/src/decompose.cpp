#include "hcell/decompose.hpp"

#include <algorithm>
#include <tuple>

#include "hcell/fp_poly.hpp"

namespace hcell {

std::vector<Scalar> AssocAlgebra::mul(const std::vector<Scalar>& x,
                                      const std::vector<Scalar>& y) const {
  std::vector<Scalar> r(n, Scalar::zero(f));
  for (int i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      for (int k = 0; k < n; ++k)
        if (!sc[i][j][k].is_zero()) r[k] += x[i] * y[j] * sc[i][j][k];
    }
  }
  return r;
}

Matrix AssocAlgebra::left_mult_of(const std::vector<Scalar>& x) const {
  Matrix m(n, n, f);
  for (int j = 0; j < n; ++j) {
    std::vector<Scalar> ej(n, Scalar::zero(f));
    ej[j] = Scalar::one(f);
    std::vector<Scalar> img = mul(x, ej);
    for (int i = 0; i < n; ++i) m.at(i, j) = img[i];
  }
  return m;
}

AssocAlgebra AssocAlgebra::from_matrices(const std::vector<Matrix>& basis, const Field& f) {
  AssocAlgebra a;
  a.f = f;
  a.n = static_cast<int>(basis.size());
  if (a.n == 0) return a;
  const int d = basis[0].rows();
  SubspaceBasis coords(d * d, f);
  auto flat = [&](const Matrix& m) {
    SparseVec v;
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        if (!m.at(i, j).is_zero()) v.emplace_back(i * d + j, m.at(i, j));
    return v;
  };
  std::vector<SparseMat> sb;
  for (auto& b : basis) {
    if (!coords.insert(flat(b))) throw Error("Internal", "dependent end-algebra basis");
    sb.push_back(SparseMat::from_dense(b));
  }
  a.sc.assign(a.n, std::vector<std::vector<Scalar>>(a.n));
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j) {
      SparseMat prod = sparse_compose(sb[i], sb[j]);
      SparseVec v;
      for (int c = 0; c < prod.cols(); ++c)
        for (auto& [r, s] : prod.col(c)) v.emplace_back(r * d + c, s);
      SparseVec cc = coords.coords(sparse_normalize(v));
      std::vector<Scalar> dense(a.n, Scalar::zero(f));
      for (auto& [k, s] : cc) dense[k] = s;
      a.sc[i][j] = std::move(dense);
    }
  SparseVec idv;
  for (int i = 0; i < d; ++i) idv.emplace_back(i * d + i, Scalar::one(f));
  SparseVec uc = coords.coords(idv);
  a.unit.assign(a.n, Scalar::zero(f));
  for (auto& [k, s] : uc) a.unit[k] = s;
  return a;
}

AssocAlgebra AssocAlgebra::group_algebra(const GroupData& g, const Field& f) {
  AssocAlgebra a;
  a.f = f;
  a.n = g.n();
  a.sc.assign(a.n, std::vector<std::vector<Scalar>>(a.n));
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j) {
      std::vector<Scalar> v(a.n, Scalar::zero(f));
      v[g.mul(i, j)] = Scalar::one(f);
      a.sc[i][j] = std::move(v);
    }
  a.unit.assign(a.n, Scalar::zero(f));
  a.unit[g.identity] = Scalar::one(f);
  return a;
}

std::vector<std::vector<Scalar>> trace_radical(const AssocAlgebra& a) {
  const Field& f = a.f;
  std::vector<Scalar> trL(a.n, Scalar::zero(f));
  for (int m = 0; m < a.n; ++m) {
    Scalar t = Scalar::zero(f);
    for (int k = 0; k < a.n; ++k) t += a.sc[m][k][k];
    trL[m] = t;
  }
  Matrix gram(a.n, a.n, f);
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j) {
      Scalar s = Scalar::zero(f);
      for (int m = 0; m < a.n; ++m)
        if (!a.sc[i][j][m].is_zero()) s += a.sc[i][j][m] * trL[m];
      gram.at(i, j) = s;
    }
  Matrix null = gram.transpose().nullspace();
  std::vector<std::vector<Scalar>> rad;
  for (int c = 0; c < null.cols(); ++c) rad.push_back(null.column(c));
  return rad;
}

namespace {

using SPoly = std::vector<Scalar>;

void strim(SPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

SPoly smul(const SPoly& a, const SPoly& b, const Field& f) {
  if (a.empty() || b.empty()) return {};
  SPoly r(a.size() + b.size() - 1, Scalar::zero(f));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  strim(r);
  return r;
}

std::pair<SPoly, SPoly> sdivmod(SPoly a, const SPoly& b, const Field& f) {
  SPoly q(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Scalar::zero(f));
  while (a.size() >= b.size() && !a.empty()) {
    Scalar c = a.back() / b.back();
    size_t shift = a.size() - b.size();
    q[shift] += c;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    strim(a);
  }
  strim(q);
  return {q, a};
}

std::tuple<SPoly, SPoly> sxgcd_bezout_first(SPoly a, SPoly b, const Field& f) {
  // returns (g, s) with s·a ≡ g mod b, g monic gcd
  SPoly s0{Scalar::one(f)}, s1{};
  while (!b.empty()) {
    auto [q, r] = sdivmod(a, b, f);
    a = b;
    b = r;
    SPoly qs = smul(q, s1, f);
    SPoly ns = s0;
    ns.resize(std::max(ns.size(), qs.size()), Scalar::zero(f));
    for (size_t i = 0; i < qs.size(); ++i) ns[i] -= qs[i];
    strim(ns);
    s0 = s1;
    s1 = ns;
  }
  if (!a.empty() && !a.back().is_one()) {
    Scalar inv = a.back().inv();
    for (auto& c : a) c *= inv;
    for (auto& c : s0) c *= inv;
  }
  return {a, s0};
}

std::vector<std::pair<SPoly, int>> sfactor(const SPoly& p, const Field& f) {
  std::vector<std::pair<SPoly, int>> out;
  if (f.is_fp()) {
    FpPoly fp{f.p, {}};
    for (auto& c : p) fp.c.push_back(c.is_zero() ? 0 : c.fp_value());
    fp.trim();
    for (auto& [irr, mult] : poly_factor(fp)) {
      SPoly sp;
      for (auto c : irr.c) sp.push_back(Scalar::from_int(static_cast<long long>(c), f));
      out.emplace_back(sp, mult);
    }
    return out;
  }
  // rationals: strip rational linear factors, keep the rest whole
  auto eval = [&](const SPoly& q, const Scalar& x) {
    Scalar acc = Scalar::zero(f);
    for (size_t i = q.size(); i-- > 0;) acc = acc * x + q[i];
    return acc;
  };
  SPoly rest = p;
  std::vector<std::pair<Scalar, int>> roots;
  bool progress = true;
  while (progress && rest.size() > 1) {
    progress = false;
    std::vector<mpq_class> cands = {0, 1, -1, 2, -2, 3, -3};
    if (!rest.front().is_zero()) {
      mpz_class num = abs(rest.front().rat_value().get_num() * rest.back().rat_value().get_den());
      mpz_class den = abs(rest.front().rat_value().get_den() * rest.back().rat_value().get_num());
      for (mpz_class d1 = 1; d1 * d1 <= num * num && d1 <= 5000; ++d1) {
        if (num % d1 != 0) continue;
        for (mpz_class d2 = 1; d2 <= den && d2 <= 200; ++d2) {
          if (den % d2 != 0) continue;
          cands.push_back(mpq_class(d1) / mpq_class(d2));
          cands.push_back(-mpq_class(d1) / mpq_class(d2));
          cands.push_back(mpq_class(num / d1) / mpq_class(d2));
          cands.push_back(-mpq_class(num / d1) / mpq_class(d2));
        }
      }
    }
    for (auto& r : cands) {
      mpq_class rc = r;
      rc.canonicalize();
      Scalar root = Scalar::from_mpq(rc);
      if (eval(rest, root).is_zero()) {
        SPoly lin{-root, Scalar::one(f)};
        rest = sdivmod(rest, lin, f).first;
        bool seen = false;
        for (auto& [rr, m] : roots)
          if (rr == root) {
            ++m;
            seen = true;
          }
        if (!seen) roots.emplace_back(root, 1);
        progress = true;
        break;
      }
    }
  }
  for (auto& [root, mult] : roots) out.emplace_back(SPoly{-root, Scalar::one(f)}, mult);
  if (rest.size() > 1) {
    Scalar inv = rest.back().inv();
    for (auto& c : rest) c *= inv;
    out.emplace_back(rest, 1);
  }
  return out;
}

SPoly spow_poly(const SPoly& a, int e, const Field& f) {
  SPoly r{Scalar::one(f)};
  for (int i = 0; i < e; ++i) r = smul(r, a, f);
  return r;
}

struct Corner {
  const AssocAlgebra* amb;
  std::vector<Scalar> u;
  std::vector<std::vector<Scalar>> basis;
  SubspaceBasis coords;

  Corner(const AssocAlgebra& a, std::vector<Scalar> idem)
      : amb(&a), u(std::move(idem)), coords(a.n, a.f) {
    const Field& f = a.f;
    for (int j = 0; j < a.n; ++j) {
      std::vector<Scalar> ej(a.n, Scalar::zero(f));
      ej[j] = Scalar::one(f);
      std::vector<Scalar> v = a.mul(a.mul(u, ej), u);
      SparseVec sv;
      for (int i = 0; i < a.n; ++i)
        if (!v[i].is_zero()) sv.emplace_back(i, v[i]);
      if (coords.insert(sv)) basis.push_back(v);
    }
  }

  int dim() const { return static_cast<int>(basis.size()); }

  std::vector<Scalar> eval_poly(const SPoly& p, const std::vector<Scalar>& x) const {
    std::vector<Scalar> acc(amb->n, Scalar::zero(amb->f));
    std::vector<Scalar> pw = u;
    for (size_t i = 0; i < p.size(); ++i) {
      if (!p[i].is_zero())
        for (int k = 0; k < amb->n; ++k) acc[k] += p[i] * pw[k];
      if (i + 1 < p.size()) pw = amb->mul(pw, x);
    }
    return acc;
  }

  SPoly min_poly(const std::vector<Scalar>& x) const {
    const Field& f = amb->f;
    SubspaceBasis pows(amb->n, f);
    std::vector<std::vector<Scalar>> plist;
    std::vector<Scalar> pw = u;
    for (;;) {
      SparseVec sv;
      for (int i = 0; i < amb->n; ++i)
        if (!pw[i].is_zero()) sv.emplace_back(i, pw[i]);
      if (!pows.insert(sv)) {
        SparseVec cc = pows.coords(sv);
        SPoly mp(plist.size() + 1, Scalar::zero(f));
        mp[plist.size()] = Scalar::one(f);
        for (auto& [k, s] : cc) mp[k] = -s;
        return mp;
      }
      plist.push_back(pw);
      pw = amb->mul(pw, x);
    }
  }

  // corner as its own abstract algebra (unit = u)
  AssocAlgebra as_algebra() const {
    AssocAlgebra a;
    a.f = amb->f;
    a.n = dim();
    a.sc.assign(a.n, std::vector<std::vector<Scalar>>(a.n));
    auto local = [&](const std::vector<Scalar>& v) {
      SparseVec sv;
      for (int i = 0; i < amb->n; ++i)
        if (!v[i].is_zero()) sv.emplace_back(i, v[i]);
      SparseVec c = coords.coords(sv);
      std::vector<Scalar> out(a.n, Scalar::zero(a.f));
      for (auto& [k, s] : c) out[k] = s;
      return out;
    };
    for (int i = 0; i < a.n; ++i)
      for (int j = 0; j < a.n; ++j) a.sc[i][j] = local(amb->mul(basis[i], basis[j]));
    a.unit = local(u);
    return a;
  }
};

bool try_split(const AssocAlgebra& a, const Corner& c, std::vector<std::vector<Scalar>>& parts) {
  const Field& f = a.f;
  std::vector<std::vector<Scalar>> candidates = c.basis;
  for (size_t i = 0; i < c.basis.size(); ++i)
    for (size_t j = i + 1; j < c.basis.size() && candidates.size() < 500; ++j) {
      std::vector<Scalar> s(a.n, Scalar::zero(f));
      for (int k = 0; k < a.n; ++k) s[k] = c.basis[i][k] + c.basis[j][k];
      candidates.push_back(std::move(s));
    }
  for (auto& x : candidates) {
    SPoly mp = c.min_poly(x);
    auto facs = sfactor(mp, f);
    if (facs.size() < 2) continue;
    std::vector<SPoly> powers;
    for (auto& [fi, ei] : facs) powers.push_back(spow_poly(fi, ei, f));
    std::vector<std::vector<Scalar>> new_parts;
    for (size_t i = 0; i < facs.size(); ++i) {
      SPoly h{Scalar::one(f)};
      for (size_t j = 0; j < facs.size(); ++j)
        if (j != i) h = smul(h, powers[j], f);
      auto [g, s] = sxgcd_bezout_first(h, powers[i], f);
      if (g.size() != 1) throw Error("Internal", "CRT factors not coprime");
      Scalar ginv = g[0].inv();
      for (auto& cs : s) cs *= ginv;
      SPoly hi = smul(h, s, f);
      hi = sdivmod(hi, mp, f).second;  // reduce mod the minimal polynomial
      std::vector<Scalar> idem = c.eval_poly(hi, x);
      // idempotent-cleaning iteration (exact already for CRT elements)
      for (int it = 0; it < 64; ++it) {
        auto sq = a.mul(idem, idem);
        if (sq == idem) break;
        // e <- 3e^2 - 2e^3
        auto cu = a.mul(sq, idem);
        for (int k = 0; k < a.n; ++k)
          idem[k] = Scalar::from_int(3, f) * sq[k] - Scalar::from_int(2, f) * cu[k];
      }
      if (a.mul(idem, idem) != idem) throw Error("Internal", "idempotent iteration diverged");
      new_parts.push_back(std::move(idem));
    }
    parts = std::move(new_parts);
    return true;
  }
  return false;
}

bool corner_is_field(const AssocAlgebra& a, const Corner& c) {
  const Field& f = a.f;
  for (size_t i = 0; i < c.basis.size(); ++i)
    for (size_t j = i + 1; j < c.basis.size(); ++j)
      if (a.mul(c.basis[i], c.basis[j]) != a.mul(c.basis[j], c.basis[i])) return false;
  for (auto& x : c.basis) {
    SPoly mp = c.min_poly(x);
    if (static_cast<int>(mp.size()) - 1 == c.dim()) {
      auto facs = sfactor(mp, f);
      if (facs.size() == 1 && facs[0].second == 1) return true;
    }
  }
  return false;
}

}  // namespace

std::vector<std::vector<Scalar>> primitive_idempotents(const AssocAlgebra& a) {
  const Field& f = a.f;
  if (f.is_fp() && static_cast<int>(f.p) <= a.n)
    throw Error("CharTooSmall", "characteristic " + std::to_string(f.p) +
                                    " <= algebra dimension " + std::to_string(a.n));
  std::vector<std::vector<Scalar>> done;
  std::vector<std::vector<Scalar>> work{a.unit};
  int guard = 0;
  while (!work.empty()) {
    if (++guard > 16 * (a.n + 1)) throw Error("IndeterminateDecomposition", "splitting loop bound");
    std::vector<Scalar> u = work.back();
    work.pop_back();
    bool zero = true;
    for (auto& s : u) zero = zero && s.is_zero();
    if (zero) continue;
    Corner c(a, u);
    if (c.dim() == 1) {
      done.push_back(u);
      continue;
    }
    std::vector<std::vector<Scalar>> parts;
    if (try_split(a, c, parts)) {
      for (auto& p : parts) work.push_back(p);
      continue;
    }
    AssocAlgebra corner_alg = c.as_algebra();
    auto rad = trace_radical(corner_alg);
    if (static_cast<int>(rad.size()) == c.dim() - 1) {
      done.push_back(u);  // local: corner/rad is one-dimensional
      continue;
    }
    if (corner_is_field(corner_alg, Corner(corner_alg, corner_alg.unit))) {
      done.push_back(u);  // non-split local corner
      continue;
    }
    throw Error("IndeterminateDecomposition",
                "no splitting element found in a corner of dimension " + std::to_string(c.dim()));
  }
  return done;
}

Decomposition decompose(const Bimodule& m) {
  const Field& f = m.A->field;
  Decomposition dec;
  if (m.dim == 0) return dec;
  std::vector<Matrix> homs = hom_space(m, m);
  int b = static_cast<int>(homs.size());
  if (f.is_fp() && static_cast<int>(f.p) <= b)
    throw Error("CharTooSmall",
                "p = " + std::to_string(f.p) + " <= dim End(M) = " + std::to_string(b));
  AssocAlgebra E = AssocAlgebra::from_matrices(homs, f);
  std::vector<std::vector<Scalar>> idems = primitive_idempotents(E);

  auto realize = [&](const std::vector<Scalar>& coords) {
    Matrix t(m.dim, m.dim, f);
    for (int i = 0; i < b; ++i)
      if (!coords[i].is_zero()) t = t + homs[i].scaled(coords[i]);
    return t;
  };

  {
    std::vector<Scalar> total(E.n, Scalar::zero(f));
    for (auto& e : idems) {
      if (E.mul(e, e) != e) throw Error("Internal", "non-idempotent in primitive set");
      for (int i = 0; i < E.n; ++i) total[i] += e[i];
    }
    if (total != E.unit) throw Error("Internal", "idempotents do not sum to 1");
    for (size_t i = 0; i < idems.size(); ++i)
      for (size_t j = 0; j < idems.size(); ++j) {
        if (i == j) continue;
        for (auto& s : E.mul(idems[i], idems[j]))
          if (!s.is_zero()) throw Error("Internal", "idempotents not orthogonal");
      }
  }

  std::vector<Bimodule> mods;
  std::vector<Matrix> incls, projs;
  for (auto& e : idems) {
    Matrix em = realize(e);
    dec.idempotents.push_back(em);
    Matrix incl, proj;
    mods.push_back(image_bimodule(m, em, &incl, &proj));
    incls.push_back(incl);
    projs.push_back(proj);
  }
  dec.block_of.assign(idems.size(), -1);
  for (size_t i = 0; i < idems.size(); ++i) {
    if (dec.block_of[i] >= 0) continue;
    int cls = static_cast<int>(dec.summands.size());
    dec.block_of[i] = cls;
    Summand s;
    s.mod = mods[i];
    s.incl = incls[i];
    s.proj = projs[i];
    s.multiplicity = 1;
    for (size_t j = i + 1; j < idems.size(); ++j) {
      if (dec.block_of[j] >= 0 || mods[j].dim != mods[i].dim) continue;
      if (find_iso(mods[i], mods[j])) {
        dec.block_of[j] = cls;
        ++s.multiplicity;
      }
    }
    dec.summands.push_back(std::move(s));
  }
  int total = 0;
  for (auto& s : dec.summands) total += s.multiplicity * s.mod.dim;
  if (total != m.dim) throw Error("Internal", "summand dimensions do not add up");
  return dec;
}

ProjSumDecomp proj_sum_decompose(const Bimodule& z) {
  const Algebra& A = *z.A;
  const Field& f = A.field;
  ProjSumDecomp out;
  // radical span: images of all arrow actions on either side
  SubspaceBasis radspan(z.dim, f);
  for (int a = 0; a < A.quiver.n_arrows(); ++a) {
    int ab = A.arrow_basis_index(a);
    for (int c = 0; c < z.dim; ++c) {
      radspan.insert(z.left[ab].col(c));
      radspan.insert(z.right[ab].col(c));
    }
  }
  // lift top generators blockwise
  std::vector<std::vector<Scalar>> gens;
  std::vector<std::pair<int, int>> labels;
  {
    SubspaceBasis span(z.dim, f);
    for (auto& v : radspan.vecs()) span.insert(v);
    for (int u = 0; u < A.quiver.n_vertices(); ++u)
      for (int v = 0; v < A.quiver.n_vertices(); ++v) {
        SparseMat blockproj = sparse_compose(z.left[A.idempotent[u]], z.right[A.idempotent[v]]);
        for (int c = 0; c < z.dim; ++c) {
          SparseVec cand = blockproj.col(c);
          if (span.insert(cand)) {
            std::vector<Scalar> g(z.dim, Scalar::zero(f));
            for (auto& [i, s] : cand) g[i] = s;
            gens.push_back(std::move(g));
            labels.push_back({u, v});
          }
        }
      }
  }
  // comparison map ⊕ P(u,v) -> Z
  int total = 0;
  std::vector<Matrix> cols;
  for (size_t i = 0; i < gens.size(); ++i) {
    auto [u, v] = labels[i];
    std::vector<int> us, vs;
    for (int b = 0; b < A.dim(); ++b) {
      if (A.basis[b].source == u) us.push_back(b);
      if (A.basis[b].target == v) vs.push_back(b);
    }
    ProjSumDecomp::Piece piece;
    piece.u = u;
    piece.v = v;
    piece.offset = total;
    piece.dim = static_cast<int>(us.size() * vs.size());
    out.pieces.push_back(piece);
    Matrix m(z.dim, piece.dim, f);
    int col = 0;
    for (int x : us)
      for (int y : vs) {
        std::vector<Scalar> img =
            z.left[x].apply_dense(z.right[y].apply_dense(gens[i], f), f);
        for (int r = 0; r < z.dim; ++r) m.at(r, col) = img[r];
        ++col;
      }
    cols.push_back(std::move(m));
    total += piece.dim;
  }
  if (total != z.dim) throw Error("NotProjSum", "top lifting does not exhaust the bimodule");
  Matrix phi(z.dim, total, f);
  for (size_t i = 0; i < cols.size(); ++i) phi.set_block(0, out.pieces[i].offset, cols[i]);
  auto inv = phi.inverse();
  if (!inv) throw Error("NotProjSum", "comparison map not invertible");
  out.phi = std::move(phi);
  out.phi_inv = std::move(*inv);
  return out;
}

std::map<std::pair<int, int>, int> proj_sum_multiplicities(const Bimodule& z) {
  std::map<std::pair<int, int>, int> out;
  for (auto& p : proj_sum_decompose(z).pieces) out[{p.u, p.v}]++;
  return out;
}

bool bimodules_isomorphic(const Bimodule& m, const Bimodule& n) {
  if (m.dim != n.dim) return false;
  if (m.dim == 0) return true;
  const Algebra& A = *m.A;
  const Field& f = A.field;
  for (int v = 0; v < A.quiver.n_vertices(); ++v)
    for (int w = 0; w < A.quiver.n_vertices(); ++w) {
      SparseMat pm = sparse_compose(m.left[A.idempotent[v]], m.right[A.idempotent[w]]);
      SparseMat pn = sparse_compose(n.left[A.idempotent[v]], n.right[A.idempotent[w]]);
      if (pm.to_dense(f).rank() != pn.to_dense(f).rank()) return false;
    }
  // direct sums of projective classes compare exactly by label multisets,
  // independent of the characteristic
  try {
    auto ma = proj_sum_multiplicities(m);
    auto mb = proj_sum_multiplicities(n);
    return ma == mb;
  } catch (const Error& e) {
    if (e.code != "NotProjSum") throw;
  }
  if (find_iso(m, n)) return true;
  Decomposition dm = decompose(m), dn = decompose(n);
  if (dm.summands.size() != dn.summands.size()) return false;
  std::vector<bool> used(dn.summands.size(), false);
  for (auto& sm : dm.summands) {
    bool matched = false;
    for (size_t j = 0; j < dn.summands.size(); ++j) {
      if (used[j] || dn.summands[j].multiplicity != sm.multiplicity ||
          dn.summands[j].mod.dim != sm.mod.dim)
        continue;
      if (find_iso(sm.mod, dn.summands[j].mod)) {
        used[j] = true;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace hcell
