#include "hcell/algebra.hpp"

#include <algorithm>
#include <set>

namespace hcell {

int Quiver::vertex_index(const std::string& name) const {
  for (int i = 0; i < n_vertices(); ++i)
    if (vertices[i] == name) return i;
  throw Error("UnknownVertex", "vertex '" + name + "'");
}

int Quiver::arrow_index(const std::string& name) const {
  for (int i = 0; i < n_arrows(); ++i)
    if (arrows[i].name == name) return i;
  throw Error("UnknownArrow", "arrow '" + name + "'");
}

void Quiver::validate() const {
  std::set<std::string> names(vertices.begin(), vertices.end());
  if (names.size() != vertices.size()) throw Error("BadQuiver", "duplicate vertex names");
  std::set<std::string> anames;
  for (auto& a : arrows) {
    if (!anames.insert(a.name).second) throw Error("BadQuiver", "duplicate arrow name " + a.name);
    if (a.source < 0 || a.source >= n_vertices() || a.target < 0 || a.target >= n_vertices())
      throw Error("BadQuiver", "arrow " + a.name + " endpoints out of range");
  }
}

bool ValidationReport::all_ok() const {
  for (auto& e : entries)
    if (!e.ok) return false;
  return true;
}

void ValidationReport::add(const std::string& check, bool ok, const std::string& witness) {
  entries.push_back({check, ok, ok ? "" : witness});
}

std::vector<ValidationReport::Entry> ValidationReport::failures() const {
  std::vector<Entry> f;
  for (auto& e : entries)
    if (!e.ok) f.push_back(e);
  return f;
}

namespace {

struct Path {
  std::vector<int> arrows;  // traversal order
  int source;
  int target;
  int length() const { return static_cast<int>(arrows.size()); }
};

// all paths of length <= maxlen, ordered by (length, lex on arrow names)
std::vector<Path> enumerate_paths(const Quiver& q, int maxlen) {
  std::vector<int> name_rank(q.n_arrows());
  {
    std::vector<int> order(q.n_arrows());
    for (int i = 0; i < q.n_arrows(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return q.arrows[a].name < q.arrows[b].name; });
    for (int r = 0; r < q.n_arrows(); ++r) name_rank[order[r]] = r;
  }
  std::vector<Path> all;
  for (int v = 0; v < q.n_vertices(); ++v) all.push_back({{}, v, v});
  std::vector<Path> layer = all;
  for (int len = 1; len <= maxlen; ++len) {
    std::vector<Path> next;
    for (auto& p : layer)
      for (int a = 0; a < q.n_arrows(); ++a)
        if (q.arrows[a].source == p.target) {
          Path np = p;
          np.arrows.push_back(a);
          np.target = q.arrows[a].target;
          next.push_back(np);
        }
    auto ranked = [&](const Path& p) {
      std::vector<int> r;
      for (int a : p.arrows) r.push_back(name_rank[a]);
      return r;
    };
    std::sort(next.begin(), next.end(),
              [&](const Path& a, const Path& b) { return ranked(a) < ranked(b); });
    all.insert(all.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return all;
}

}  // namespace

int Algebra::arrow_basis_index(int arrow) const {
  for (int i = 0; i < dim(); ++i)
    if (basis[i].length() == 1 && basis[i].arrows[0] == arrow) return i;
  throw Error("Internal", "arrow not in basis");
}

std::vector<Scalar> Algebra::one() const {
  std::vector<Scalar> v(dim(), Scalar::zero(field));
  for (int e : idempotent) v[e] = Scalar::one(field);
  return v;
}

std::vector<Scalar> Algebra::unit_vec(int i) const {
  std::vector<Scalar> v(dim(), Scalar::zero(field));
  v[i] = Scalar::one(field);
  return v;
}

std::vector<Scalar> Algebra::mul(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const {
  std::vector<Scalar> r(dim(), Scalar::zero(field));
  for (int i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < dim(); ++j) {
      if (b[j].is_zero()) continue;
      for (auto& [k, c] : mult[i][j]) r[k] += a[i] * b[j] * c;
    }
  }
  return r;
}

SparseVec Algebra::mul_sparse(const SparseVec& a, const SparseVec& b) const {
  SparseVec r;
  for (auto& [i, ca] : a)
    for (auto& [j, cb] : b) r = sparse_add(r, sparse_scale(mult[i][j], ca * cb));
  return r;
}

Matrix Algebra::left_mult(int i) const {
  Matrix m(dim(), dim(), field);
  for (int j = 0; j < dim(); ++j)
    for (auto& [k, c] : mult[i][j]) m.at(k, j) = c;
  return m;
}

Matrix Algebra::right_mult(int i) const {
  Matrix m(dim(), dim(), field);
  for (int j = 0; j < dim(); ++j)
    for (auto& [k, c] : mult[j][i]) m.at(k, j) = c;
  return m;
}

Matrix Algebra::left_mult_vec(const std::vector<Scalar>& a) const {
  Matrix m(dim(), dim(), field);
  for (int i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < dim(); ++j)
      for (auto& [k, c] : mult[i][j]) m.at(k, j) += a[i] * c;
  }
  return m;
}

Matrix Algebra::right_mult_vec(const std::vector<Scalar>& a) const {
  Matrix m(dim(), dim(), field);
  for (int i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < dim(); ++j)
      for (auto& [k, c] : mult[j][i]) m.at(k, j) += a[i] * c;
  }
  return m;
}

int Algebra::vertex_of_group(int g) const {
  if (group_vertex.empty()) throw Error("NoGroupLabels", "algebra vertices not group-labelled");
  return group_vertex[g];
}

int Algebra::group_of_vertex(int v) const {
  if (vertex_group.empty()) throw Error("NoGroupLabels", "algebra vertices not group-labelled");
  return vertex_group[v];
}

std::string Algebra::basis_name(int i) const {
  const auto& b = basis[i];
  if (b.arrows.empty()) return "e_" + quiver.vertices[b.source];
  std::string s;
  for (size_t k = 0; k < b.arrows.size(); ++k)
    s += (k ? "*" : "") + quiver.arrows[b.arrows[k]].name;
  return s;
}

void Algebra::verify_axioms() const {
  const int d = dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        SparseVec ij = mult[i][j];
        SparseVec left;  // (i·j)·k
        for (auto& [m, c] : ij) left = sparse_add(left, sparse_scale(mult[m][k], c));
        SparseVec jk = mult[j][k];
        SparseVec right;
        for (auto& [m, c] : jk) right = sparse_add(right, sparse_scale(mult[i][m], c));
        if (left != right)
          throw Error("NotAssociative", "at basis triple (" + basis_name(i) + "," +
                                            basis_name(j) + "," + basis_name(k) + ")");
      }
  // idempotent axioms
  for (int v = 0; v < quiver.n_vertices(); ++v)
    for (int w = 0; w < quiver.n_vertices(); ++w) {
      SparseVec p = mult[idempotent[v]][idempotent[w]];
      bool ok = v == w ? (p.size() == 1 && p[0].first == idempotent[v] && p[0].second.is_one())
                       : p.empty();
      if (!ok) throw Error("BadIdempotents", "e_" + quiver.vertices[v] + "·e_" + quiver.vertices[w]);
    }
}

AlgebraPtr build_algebra(const AlgebraPresentation& pres) {
  pres.quiver.validate();
  const Quiver& q = pres.quiver;
  const int N = pres.nilpotency_bound;
  if (N < 2) throw Error("NonAdmissibleIdeal", "nilpotency bound must be >= 2");

  // admissibility of the relations
  for (size_t r = 0; r < pres.relations.size(); ++r) {
    if (pres.relations[r].empty()) throw Error("NonAdmissibleIdeal", "empty relation");
    int src = -1, tgt = -1;
    for (auto& term : pres.relations[r]) {
      if (term.arrows.size() < 2)
        throw Error("NonAdmissibleIdeal",
                    "relation " + std::to_string(r) + " involves a path of length < 2");
      int s = q.arrows[term.arrows.front()].source;
      int t = q.arrows[term.arrows.back()].target;
      for (size_t i = 0; i + 1 < term.arrows.size(); ++i)
        if (q.arrows[term.arrows[i]].target != q.arrows[term.arrows[i + 1]].source)
          throw Error("NonAdmissibleIdeal", "non-composable path in relation " + std::to_string(r));
      if (src == -1) { src = s; tgt = t; }
      if (s != src || t != tgt)
        throw Error("NonAdmissibleIdeal",
                    "relation " + std::to_string(r) + " mixes sources/targets");
    }
  }

  // Work inside kQ/rad^{N+1}; the extra degree detects an inconsistent bound.
  const int L = N;  // keep paths of length <= N (length N must die in the quotient)
  std::vector<Path> paths = enumerate_paths(q, L);
  const int P = static_cast<int>(paths.size());
  std::map<std::vector<int>, int> path_index;  // by (length-prefixed) arrows + source for len 0
  // trivial paths need the source to disambiguate
  auto key_of = [&](const Path& p) {
    std::vector<int> k;
    k.push_back(p.arrows.empty() ? -1 - p.source : 0);
    for (int a : p.arrows) k.push_back(a);
    return k;
  };
  for (int i = 0; i < P; ++i) path_index[key_of(paths[i])] = i;

  // ideal span within the truncation: seed with relations (terms of length
  // > L drop), then close under multiplication by arrows on both sides
  Echelon ideal(P, pres.field);
  std::vector<SparseVec> worklist;
  auto path_id = [&](const std::vector<int>& arrows, int source) {
    Path p;
    p.arrows = arrows;
    p.source = source;
    auto it = path_index.find(key_of(p));
    return it == path_index.end() ? -1 : it->second;
  };
  for (auto& rel : pres.relations) {
    SparseVec v;
    for (auto& term : rel) {
      if (static_cast<int>(term.arrows.size()) > L) continue;
      int id = path_id(term.arrows, q.arrows[term.arrows.front()].source);
      if (id < 0) throw Error("Internal", "relation path not enumerated");
      v = sparse_add(v, SparseVec{{id, term.coeff}});
    }
    if (ideal.insert(v)) worklist.push_back(ideal.rows().back());
  }
  // all paths of length >= N+1 would be killed anyway; within length <= N we
  // must close the ideal under arrow multiplication
  while (!worklist.empty()) {
    SparseVec v = worklist.back();
    worklist.pop_back();
    for (int a = 0; a < q.n_arrows(); ++a) {
      // left multiply by arrow a: a·p = extend p at its target
      SparseVec lv, rv;
      for (auto& [i, c] : v) {
        const Path& p = paths[i];
        if (p.target == q.arrows[a].source && p.length() + 1 <= L) {
          std::vector<int> arr = p.arrows;
          arr.push_back(a);
          int id = path_id(arr, p.source);
          if (id >= 0) lv = sparse_add(lv, SparseVec{{id, c}});
        }
        if (q.arrows[a].target == p.source && p.length() + 1 <= L) {
          std::vector<int> arr;
          arr.push_back(a);
          arr.insert(arr.end(), p.arrows.begin(), p.arrows.end());
          int id = path_id(arr, q.arrows[a].source);
          if (id >= 0) rv = sparse_add(rv, SparseVec{{id, c}});
        }
      }
      if (!lv.empty() && ideal.insert(lv)) worklist.push_back(ideal.rows().back());
      if (!rv.empty() && ideal.insert(rv)) worklist.push_back(ideal.rows().back());
    }
  }

  // every path of length exactly N must be in the ideal, else the bound lies
  for (int i = 0; i < P; ++i) {
    if (paths[i].length() != N) continue;
    SparseVec v{{i, Scalar::one(pres.field)}};
    if (!ideal.reduce(v).empty())
      throw Error("InconsistentBound",
                  "path of length N survives modulo the relation ideal (N = " + std::to_string(N) + ")");
  }

  auto alg = std::make_shared<Algebra>();
  alg->field = pres.field;
  alg->quiver = q;
  if (pres.group) {
    if (pres.group->n() != q.n_vertices())
      throw Error("BadGroupLabels", "vertex count differs from group order");
    alg->group = pres.group;
    alg->vertex_group.assign(q.n_vertices(), -1);
    alg->group_vertex.assign(pres.group->n(), -1);
    for (int v = 0; v < q.n_vertices(); ++v) {
      int g = pres.group->index_of(q.vertices[v]);
      alg->vertex_group[v] = g;
      alg->group_vertex[g] = v;
    }
  }
  std::vector<int> basis_paths;  // non-pivot coordinates of length < N
  std::vector<int> quotient_coord(P, -1);
  for (int i = 0; i < P; ++i) {
    if (paths[i].length() >= N) continue;
    if (!ideal.is_pivot(i)) {
      quotient_coord[i] = static_cast<int>(basis_paths.size());
      basis_paths.push_back(i);
    }
  }
  for (int i : basis_paths)
    alg->basis.push_back({paths[i].arrows, paths[i].source, paths[i].target});
  alg->idempotent.assign(q.n_vertices(), -1);
  for (int b = 0; b < alg->dim(); ++b)
    if (alg->basis[b].length() == 0) alg->idempotent[alg->basis[b].source] = b;
  for (int v = 0; v < q.n_vertices(); ++v)
    if (alg->idempotent[v] < 0) throw Error("Internal", "trivial path eliminated");

  // reduce an arbitrary path-supported vector to the monomial basis
  auto reduce_to_basis = [&](const SparseVec& pv) {
    SparseVec red = ideal.reduce(pv);
    SparseVec out;
    for (auto& [i, c] : red) {
      if (paths[i].length() >= N) continue;  // only reachable if bound check passed -> zero
      out.emplace_back(quotient_coord[i], c);
    }
    return sparse_normalize(out);
  };

  const int d = alg->dim();
  alg->mult.assign(d, std::vector<SparseVec>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const auto& bi = alg->basis[i];
      const auto& bj = alg->basis[j];
      // product basis_i · basis_j = "first j, then i"
      if (bj.target != bi.source) continue;
      if (bi.length() + bj.length() >= N) continue;  // rad^N = 0
      std::vector<int> arr = bj.arrows;
      arr.insert(arr.end(), bi.arrows.begin(), bi.arrows.end());
      int id = path_id(arr, bj.source);
      if (id < 0) continue;
      alg->mult[i][j] = reduce_to_basis({{id, Scalar::one(pres.field)}});
    }

  alg->verify_axioms();
  return alg;
}

ValidationReport check_action(const Algebra& alg, const GroupData& grp, const AlgebraAction& act,
                              bool require_regular) {
  ValidationReport rep;
  const int d = alg.dim();
  bool sizes_ok = static_cast<int>(act.mats.size()) == grp.n();
  for (auto& m : act.mats) sizes_ok = sizes_ok && m.rows() == d && m.cols() == d;
  rep.add("matrix sizes", sizes_ok);
  if (!sizes_ok) return rep;

  std::vector<Scalar> one = alg.one();
  bool unit_ok = true;
  std::string uwit;
  for (int g = 0; g < grp.n(); ++g) {
    if (act.mats[g].apply(one) != one) {
      unit_ok = false;
      uwit = "fails for g = " + grp.elements[g];
      break;
    }
  }
  rep.add("g(1) = 1", unit_ok, uwit);

  bool automorphism = true;
  std::string wit;
  for (int g = 0; g < grp.n() && automorphism; ++g) {
    for (int i = 0; i < d && automorphism; ++i)
      for (int j = 0; j < d; ++j) {
        std::vector<Scalar> lhs = act.mats[g].apply(alg.mul(alg.unit_vec(i), alg.unit_vec(j)));
        std::vector<Scalar> rhs =
            alg.mul(act.mats[g].apply(alg.unit_vec(i)), act.mats[g].apply(alg.unit_vec(j)));
        if (lhs != rhs) {
          automorphism = false;
          wit = "automorphism violated at (" + alg.basis_name(i) + "," + alg.basis_name(j) +
                ") for g = " + grp.elements[g];
          break;
        }
      }
  }
  rep.add("g(xy) = g(x)g(y)", automorphism, wit);

  bool comp = true;
  std::string cwit;
  for (int g = 0; g < grp.n() && comp; ++g)
    for (int h = 0; h < grp.n(); ++h) {
      if (act.mats[g] * act.mats[h] != act.mats[grp.mul(g, h)]) {
        comp = false;
        cwit = "matrix(g)matrix(h) != matrix(gh) at (" + grp.elements[g] + "," + grp.elements[h] + ")";
        break;
      }
    }
  rep.add("composition matches group table", comp, cwit);

  bool invertible = true;
  for (int g = 0; g < grp.n(); ++g)
    if (!act.mats[g].invertible()) {
      invertible = false;
      rep.add("matrices invertible", false, "singular matrix for g = " + grp.elements[g]);
      break;
    }
  if (invertible) rep.add("matrices invertible", true);

  // idempotent rule h(e_g) = e_{g·h^{-1}} when vertices are group-labelled
  if (!alg.vertex_group.empty()) {
    bool idem_ok = true;
    std::string iwit;
    for (int h = 0; h < grp.n() && idem_ok; ++h)
      for (int v = 0; v < alg.quiver.n_vertices(); ++v) {
        int g = alg.group_of_vertex(v);
        int target_vertex = alg.vertex_of_group(grp.mul(g, grp.inv(h)));
        std::vector<Scalar> img = act.mats[h].apply(alg.unit_vec(alg.idempotent[v]));
        if (img != alg.unit_vec(alg.idempotent[target_vertex])) {
          idem_ok = false;
          iwit = "h(e_g) != e_{gh^-1} at h = " + grp.elements[h] + ", g = " + grp.elements[g];
          break;
        }
      }
    rep.add("h(e_g) = e_{gh^-1}", idem_ok, iwit);
    if (require_regular) {
      bool regular = static_cast<int>(alg.quiver.vertices.size()) == grp.n();
      rep.add("idempotent action regular", regular,
              regular ? "" : "vertex count differs from group order");
    }
  } else if (require_regular) {
    rep.add("idempotent action regular", false, "vertices not group-labelled");
  }
  return rep;
}

AlgebraAction action_from_generators(const AlgebraPtr& alg,
                                     const std::shared_ptr<const GroupData>& grp,
                                     const std::vector<std::vector<int>>& vertex_perm,
                                     const std::vector<Matrix>& arrow_mats) {
  AlgebraAction act;
  act.grp = grp;
  const int d = alg->dim();
  for (int g = 0; g < grp->n(); ++g) {
    Matrix m(d, d, alg->field);
    for (int b = 0; b < d; ++b) {
      const auto& be = alg->basis[b];
      if (be.length() == 0) {
        int tv = vertex_perm[g][be.source];
        m.at(alg->idempotent[tv], b) = Scalar::one(alg->field);
        continue;
      }
      // multiplicative extension over the traversal factors; the algebra
      // product runs opposite to traversal order
      SparseVec acc;  // image as algebra element
      for (size_t k = 0; k < be.arrows.size(); ++k) {
        SparseVec img;
        int a = be.arrows[k];
        for (int a2 = 0; a2 < alg->quiver.n_arrows(); ++a2) {
          const Scalar& c = arrow_mats[g].at(a2, a);
          if (!c.is_zero()) img.emplace_back(alg->arrow_basis_index(a2), c);
        }
        acc = k == 0 ? img : alg->mul_sparse(img, acc);
      }
      for (auto& [i, c] : acc) m.at(i, b) = c;
    }
    act.mats.push_back(std::move(m));
  }
  return act;
}

Matrix right_socle(const Algebra& alg, int v) {
  // right module e_v·A = span of basis with target v; socle kills all arrows
  const Field& f = alg.field;
  std::vector<int> memb;
  for (int i = 0; i < alg.dim(); ++i)
    if (alg.basis[i].target == v) memb.push_back(i);
  int k = static_cast<int>(memb.size());
  // stack right-multiplication by every arrow restricted to the span
  Matrix sys(0, k, f);
  for (int a = 0; a < alg.quiver.n_arrows(); ++a) {
    int ab = alg.arrow_basis_index(a);
    Matrix ra = alg.right_mult(ab);
    Matrix blk(alg.dim(), k, f);
    for (int c = 0; c < k; ++c)
      for (int r = 0; r < alg.dim(); ++r) blk.at(r, c) = ra.at(r, memb[c]);
    sys = sys.rows() == 0 ? blk : Matrix::vcat(sys, blk);
  }
  if (sys.rows() == 0) sys = Matrix::zeros(1, k, f);
  Matrix null = sys.nullspace();
  // lift back into algebra coordinates
  Matrix out(alg.dim(), null.cols(), f);
  for (int c = 0; c < null.cols(); ++c)
    for (int r = 0; r < k; ++r) out.at(memb[r], c) = null.at(r, c);
  return out;
}

Matrix left_socle(const Algebra& alg, int v) {
  const Field& f = alg.field;
  std::vector<int> memb;
  for (int i = 0; i < alg.dim(); ++i)
    if (alg.basis[i].source == v) memb.push_back(i);
  int k = static_cast<int>(memb.size());
  Matrix sys(0, k, f);
  for (int a = 0; a < alg.quiver.n_arrows(); ++a) {
    int ab = alg.arrow_basis_index(a);
    Matrix la = alg.left_mult(ab);
    Matrix blk(alg.dim(), k, f);
    for (int c = 0; c < k; ++c)
      for (int r = 0; r < alg.dim(); ++r) blk.at(r, c) = la.at(r, memb[c]);
    sys = sys.rows() == 0 ? blk : Matrix::vcat(sys, blk);
  }
  if (sys.rows() == 0) sys = Matrix::zeros(1, k, f);
  Matrix null = sys.nullspace();
  Matrix out(alg.dim(), null.cols(), f);
  for (int c = 0; c < null.cols(); ++c)
    for (int r = 0; r < k; ++r) out.at(memb[r], c) = null.at(r, c);
  return out;
}

SelfInjectivity is_self_injective(const Algebra& alg) {
  SelfInjectivity res;
  const int nv = alg.quiver.n_vertices();
  std::vector<int> nu(nv, -1), nu_left(nv, -1);
  for (int v = 0; v < nv; ++v) {
    Matrix soc = right_socle(alg, v);
    if (soc.cols() != 1) {
      res.witness = "soc(e_" + alg.quiver.vertices[v] + "·A) has dimension " +
                    std::to_string(soc.cols());
      return res;
    }
    int src = -1;
    for (int i = 0; i < alg.dim(); ++i)
      if (!soc.at(i, 0).is_zero()) {
        if (src >= 0 && src != alg.basis[i].source) {
          res.witness = "socle of e_" + alg.quiver.vertices[v] + "·A not homogeneous";
          return res;
        }
        src = alg.basis[i].source;
      }
    nu[v] = src;
  }
  for (int v = 0; v < nv; ++v) {
    Matrix soc = left_socle(alg, v);
    if (soc.cols() != 1) {
      res.witness = "soc(A·e_" + alg.quiver.vertices[v] + ") has dimension " +
                    std::to_string(soc.cols());
      return res;
    }
    int tgt = -1;
    for (int i = 0; i < alg.dim(); ++i)
      if (!soc.at(i, 0).is_zero()) tgt = alg.basis[i].target;
    nu_left[v] = tgt;
  }
  std::set<int> image(nu.begin(), nu.end());
  if (static_cast<int>(image.size()) != nv) {
    res.witness = "socle assignment not a bijection";
    return res;
  }
  std::set<int> image_l(nu_left.begin(), nu_left.end());
  if (static_cast<int>(image_l.size()) != nv) {
    res.witness = "left socle assignment not a bijection";
    return res;
  }
  res.self_injective = true;
  res.nu = nu;
  return res;
}

std::vector<int> nakayama_permutation(const Algebra& alg) {
  SelfInjectivity si = is_self_injective(alg);
  if (!si.self_injective) throw Error("NotSelfInjective", si.witness);
  // group-label compatibility nu(g) = nu(1)·g under a regular labelling
  if (!alg.vertex_group.empty() && alg.group) {
    const GroupData& G = *alg.group;
    int nu1 = alg.group_of_vertex(si.nu[alg.vertex_of_group(G.identity)]);
    for (int g = 0; g < G.n(); ++g) {
      int lhs = alg.group_of_vertex(si.nu[alg.vertex_of_group(g)]);
      if (lhs != G.mul(nu1, g))
        throw Error("NakayamaMismatch", "nu(g) != nu(1)·g at g = " + G.elements[g]);
    }
  }
  return si.nu;
}

}  // namespace hcell
