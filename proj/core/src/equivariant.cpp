#include "hcell/equivariant.hpp"

#include "hcell/fp_poly.hpp"
#include "hcell/smith.hpp"

namespace hcell {

ValidationReport verify_equivariant(const Bimodule& m, const AlgebraAction& act,
                                    const EquivariantStructure& es) {
  ValidationReport rep;
  const GroupData& G = *act.grp;
  bool maps_ok = true, inv_ok = true;
  std::string wit_map, wit_inv;
  for (int g = 0; g < G.n(); ++g) {
    Bimodule tw = twist(m, g, act);
    if (!is_bimodule_map(m, tw, es.alpha[g])) {
      maps_ok = false;
      wit_map = "alpha_" + G.elements[g] + " is not a map M -> M^g";
      break;
    }
    if (!es.alpha[g].invertible()) {
      inv_ok = false;
      wit_inv = "alpha_" + G.elements[g] + " not invertible";
      break;
    }
  }
  rep.add("alpha_g: M -> M^g bimodule maps", maps_ok, wit_map);
  rep.add("alpha_g invertible", inv_ok, wit_inv);
  bool cocycle = true;
  std::string wit;
  for (int g = 0; g < G.n() && cocycle; ++g)
    for (int h = 0; h < G.n(); ++h) {
      if (es.alpha[h] * es.alpha[g] != es.alpha[G.mul(h, g)]) {
        cocycle = false;
        wit = "square fails at (g,h) = (" + G.elements[g] + "," + G.elements[h] + ")";
        break;
      }
    }
  rep.add("cocycle square (alpha_h)^g ∘ alpha_g = alpha_{hg}", cocycle, wit);
  return rep;
}

EquivariantStructure regular_equivariant(const AlgebraPtr& a, const AlgebraAction& act) {
  (void)a;
  EquivariantStructure es;
  es.alpha = act.mats;
  return es;
}

namespace {

// Multiplicative 2-coboundary solve in (k^×)^r with G permuting the r
// components: find mu(g) ∈ (k^×)^r with
//   lambda(g,h)_i = mu(hg)_i / (mu(g)_i · mu(h)_{perm_g^{-1}(i)}).
// Over F_p via discrete logs and an integer solve mod p-1; over Q via
// exponent vectors on the occurring primes plus a sign component.
bool solve_coboundary(const GroupData& G, int r,
                      const std::vector<std::vector<std::vector<Scalar>>>& lambda,
                      const std::vector<std::vector<int>>& perm_inv,
                      std::vector<std::vector<Scalar>>* mu_out, const Field& f) {
  const int n = G.n();
  const int nunk = n * r;
  auto unk = [&](int g, int i) { return g * r + i; };
  if (f.is_fp()) {
    const std::uint64_t p = f.p;
    std::uint64_t gen = fp_primitive_root(p);
    mpz_class mod(static_cast<unsigned long>(p - 1));
    const int neq = n * n * r;
    IntMat aug(neq, nunk + neq);
    IntMat rhs(neq, 1);
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h)
        for (int i = 0; i < r; ++i) {
          auto dl = fp_dlog(gen, lambda[g][h][i].fp_value(), p);
          if (!dl) return false;
          int row = (g * n + h) * r + i;
          aug.at(row, unk(G.mul(h, g), i)) += 1;
          aug.at(row, unk(g, i)) -= 1;
          aug.at(row, unk(h, perm_inv[g][i])) -= 1;
          aug.at(row, nunk + row) = mod;
          rhs.at(row, 0) = static_cast<long>(*dl);
        }
    auto sol = integer_solve(aug, rhs);
    if (!sol) return false;
    mu_out->assign(n, std::vector<Scalar>(r, Scalar::one(f)));
    for (int g = 0; g < n; ++g)
      for (int i = 0; i < r; ++i) {
        mpz_class e = sol->at(unk(g, i), 0) % mod;
        if (e < 0) e += mod;
        (*mu_out)[g][i] =
            Scalar::from_int(static_cast<long long>(fp_pow(gen, e.get_ui(), p)), f);
      }
    return true;
  }
  // rationals
  std::vector<mpz_class> primes;
  auto add_primes = [&](mpz_class v) {
    v = abs(v);
    for (mpz_class d = 2; d * d <= v; ++d)
      while (v % d == 0) {
        if (std::find(primes.begin(), primes.end(), d) == primes.end()) primes.push_back(d);
        v /= d;
      }
    if (v > 1 && std::find(primes.begin(), primes.end(), v) == primes.end()) primes.push_back(v);
  };
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int i = 0; i < r; ++i) {
        add_primes(lambda[g][h][i].rat_value().get_num());
        add_primes(lambda[g][h][i].rat_value().get_den());
      }
  const int np = static_cast<int>(primes.size());
  const int per_unk = np + 1;  // exponents + sign
  const int neq = n * n * r * per_unk;
  IntMat sys(neq, nunk * per_unk + n * n * r);
  IntMat rhs(neq, 1);
  auto val_exp = [&](const mpq_class& q, const mpz_class& pr) {
    int e = 0;
    mpz_class num = q.get_num(), den = q.get_den();
    while (num % pr == 0) { num /= pr; ++e; }
    while (den % pr == 0) { den /= pr; --e; }
    return e;
  };
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int i = 0; i < r; ++i) {
        const mpq_class& q = lambda[g][h][i].rat_value();
        int base = ((g * n + h) * r + i) * per_unk;
        for (int pi = 0; pi < np; ++pi) {
          int row = base + pi;
          sys.at(row, unk(G.mul(h, g), i) * per_unk + pi) += 1;
          sys.at(row, unk(g, i) * per_unk + pi) -= 1;
          sys.at(row, unk(h, perm_inv[g][i]) * per_unk + pi) -= 1;
          rhs.at(row, 0) = val_exp(q, primes[pi]);
        }
        int row = base + np;
        sys.at(row, unk(G.mul(h, g), i) * per_unk + np) += 1;
        sys.at(row, unk(g, i) * per_unk + np) -= 1;
        sys.at(row, unk(h, perm_inv[g][i]) * per_unk + np) -= 1;
        sys.at(row, nunk * per_unk + (g * n + h) * r + i) = 2;
        rhs.at(row, 0) = q < 0 ? 1 : 0;
      }
  auto sol = integer_solve(sys, rhs);
  if (!sol) return false;
  mu_out->assign(n, std::vector<Scalar>(r, Scalar::one(f)));
  for (int g = 0; g < n; ++g)
    for (int i = 0; i < r; ++i) {
      mpq_class v(1);
      for (int pi = 0; pi < np; ++pi) {
        mpz_class e = sol->at(unk(g, i) * per_unk + pi, 0);
        long ee = e.get_si();
        mpz_class pw;
        mpz_pow_ui(pw.get_mpz_t(), primes[pi].get_mpz_t(),
                   static_cast<unsigned long>(ee < 0 ? -ee : ee));
        if (ee >= 0)
          v *= mpq_class(pw);
        else
          v /= mpq_class(pw);
      }
      mpz_class se = sol->at(unk(g, i) * per_unk + np, 0) % 2;
      if (se < 0) se += 2;
      if (se == 1) v = -v;
      (*mu_out)[g][i] = Scalar::from_mpq(v);
    }
  return true;
}

}  // namespace

EquivariantSearch equivariant_structure(const Bimodule& m, const AlgebraAction& act) {
  EquivariantSearch res;
  const GroupData& G = *act.grp;
  const Field& f = m.A->field;
  if (m.dim == 0) {
    res.found = true;
    res.structure.alpha.assign(G.n(), Matrix(0, 0, f));
    return res;
  }

  // step 1: isomorphisms beta_g: M -> M^g
  std::vector<Matrix> beta(G.n(), Matrix(0, 0, f));
  std::vector<Bimodule> twists;
  for (int g = 0; g < G.n(); ++g) twists.push_back(twist(m, g, act));
  beta[G.identity] = Matrix::identity(m.dim, f);
  for (int g = 0; g < G.n(); ++g) {
    if (g == G.identity) continue;
    auto homs = hom_space(m, twists[g]);
    if (homs.empty()) {
      res.certificate = "M is not isomorphic to M^g for g = " + G.elements[g] + " (empty hom space)";
      return res;
    }
    auto iso = find_iso_in(homs, f, m.dim);
    if (!iso) {
      // decide exactly: compare decomposition-level invariants
      if (!bimodules_isomorphic(m, twists[g])) {
        res.certificate = "M is not isomorphic to M^g for g = " + G.elements[g];
        return res;
      }
      res.indeterminate = true;
      res.certificate = "isomorphism M ≅ M^g exists but no invertible hom located (g = " +
                        G.elements[g] + ")";
      return res;
    }
    beta[g] = *iso;
  }

  // endomorphism algebra data
  std::vector<Matrix> homs = hom_space(m, m);
  AssocAlgebra E = AssocAlgebra::from_matrices(homs, f);
  if (f.is_fp() && static_cast<int>(f.p) <= E.n) {
    res.indeterminate = true;
    res.certificate = "characteristic too small for the radical computation";
    return res;
  }
  auto rad = trace_radical(E);
  SubspaceBasis flat_homs(m.dim * m.dim, f);
  auto flatten = [&](const Matrix& t) {
    SparseVec v;
    for (int i = 0; i < t.rows(); ++i)
      for (int j = 0; j < t.cols(); ++j)
        if (!t.at(i, j).is_zero()) v.emplace_back(i * t.cols() + j, t.at(i, j));
    return v;
  };
  for (auto& h : homs) flat_homs.insert(flatten(h));
  auto realize = [&](const std::vector<Scalar>& coords) {
    Matrix t(m.dim, m.dim, f);
    for (size_t i = 0; i < coords.size(); ++i)
      if (!coords[i].is_zero()) t = t + homs[i].scaled(coords[i]);
    return t;
  };
  auto to_coords = [&](const Matrix& t) {
    SparseVec c = flat_homs.coords(flatten(t));
    std::vector<Scalar> out(homs.size(), Scalar::zero(f));
    for (auto& [k, s] : c) out[k] = s;
    return out;
  };

  auto defect = [&](const std::vector<Matrix>& alpha, int g, int h) {
    Matrix bhg_inv = *alpha[G.mul(h, g)].inverse();
    return bhg_inv * alpha[h] * alpha[g];
  };

  // step 2: cocycle correction modulo the radical. End/Rad must be split
  // commutative: the defects then act by a unit scalar on each Wedderburn
  // component and the correction is a coboundary solve in (k^×)^r with G
  // permuting components.
  {
    Echelon radspan(static_cast<int>(homs.size()), f);
    for (auto& rv : rad) {
      SparseVec sv;
      for (size_t i = 0; i < rv.size(); ++i)
        if (!rv[i].is_zero()) sv.emplace_back(static_cast<int>(i), rv[i]);
      radspan.insert(sv);
    }
    auto residue = [&](const Matrix& t) {
      std::vector<Scalar> c = to_coords(t);
      SparseVec sv;
      for (size_t i = 0; i < c.size(); ++i)
        if (!c[i].is_zero()) sv.emplace_back(static_cast<int>(i), c[i]);
      return radspan.reduce(sv);
    };
    std::vector<std::vector<Scalar>> idem_coords;
    try {
      idem_coords = primitive_idempotents(E);
    } catch (const Error& err) {
      res.indeterminate = true;
      res.certificate = std::string("End(M) idempotent analysis failed: ") + err.what();
      return res;
    }
    const int r = static_cast<int>(idem_coords.size());
    std::vector<Matrix> idem_mats;
    std::vector<SparseVec> idem_res;
    for (auto& ic : idem_coords) {
      idem_mats.push_back(realize(ic));
      idem_res.push_back(residue(idem_mats.back()));
      if (idem_res.back().empty()) throw Error("Internal", "primitive idempotent in the radical");
    }
    // scalar of t on corner i: t·e_i ≡ s·e_i mod Rad; empty optional if not
    auto corner_scalar = [&](const Matrix& t, int i) -> std::optional<Scalar> {
      SparseVec tr = residue(t * idem_mats[i]);
      const SparseVec& er = idem_res[i];
      if (tr.empty()) return Scalar::zero(f);
      if (tr.size() != er.size()) return std::nullopt;
      Scalar s = Scalar::zero(f);
      for (size_t k = 0; k < tr.size(); ++k) {
        if (tr[k].first != er[k].first) return std::nullopt;
        Scalar ratio = tr[k].second / er[k].second;
        if (k == 0)
          s = ratio;
        else if (ratio != s)
          return std::nullopt;
      }
      return s;
    };
    // permutation of corners under conjugation by beta_g
    std::vector<std::vector<int>> perm(G.n(), std::vector<int>(r, -1));
    std::vector<std::vector<int>> perm_inv(G.n(), std::vector<int>(r, -1));
    bool commutative_ok = true;
    for (int g = 0; g < G.n() && commutative_ok; ++g) {
      Matrix bg_inv = *beta[g].inverse();
      for (int i = 0; i < r; ++i) {
        Matrix conj = bg_inv * idem_mats[i] * beta[g];
        int target = -1;
        for (int j = 0; j < r; ++j) {
          auto s = corner_scalar(conj, j);
          if (s && !s->is_zero()) {
            if (target != -1) { target = -2; break; }
            target = j;
          }
        }
        if (target < 0) { commutative_ok = false; break; }
        // conj(e_i) ≡ e_target mod Rad
        perm[g][i] = target;
      }
    }
    for (int g = 0; g < G.n() && commutative_ok; ++g) {
      for (int i = 0; i < r; ++i) {
        if (perm[g][i] < 0) { commutative_ok = false; break; }
        perm_inv[g][perm[g][i]] = i;
      }
      for (int i = 0; i < r; ++i) commutative_ok = commutative_ok && perm_inv[g][i] >= 0;
    }
    std::vector<std::vector<std::vector<Scalar>>> lambda(
        G.n(), std::vector<std::vector<Scalar>>(G.n(), std::vector<Scalar>(r, Scalar::one(f))));
    for (int g = 0; g < G.n() && commutative_ok; ++g)
      for (int h = 0; h < G.n() && commutative_ok; ++h) {
        Matrix d = defect(beta, g, h);
        for (int i = 0; i < r; ++i) {
          auto s = corner_scalar(d, i);
          if (!s || s->is_zero()) { commutative_ok = false; break; }
          lambda[g][h][i] = *s;
        }
      }
    if (!commutative_ok) {
      res.indeterminate = true;
      res.certificate = "End(M)/Rad is not split commutative; generic descent not attempted";
      return res;
    }
    bool trivial = true;
    for (int g = 0; g < G.n(); ++g)
      for (int h = 0; h < G.n(); ++h)
        for (int i = 0; i < r; ++i) trivial = trivial && lambda[g][h][i].is_one();
    if (!trivial) {
      std::vector<std::vector<Scalar>> mu;
      if (!solve_coboundary(G, r, lambda, perm_inv, &mu, f)) {
        res.certificate = "2-cocycle obstruction nonzero in H^2(G, units of End/Rad)";
        return res;
      }
      for (int g = 0; g < G.n(); ++g) {
        Matrix u(m.dim, m.dim, f);
        for (int i = 0; i < r; ++i) u = u + idem_mats[i].scaled(mu[g][i]);
        beta[g] = beta[g] * u;
      }
    }
  }

  // step 3: radical lifting, one radical layer at a time
  for (int rounds = 0; rounds < 2 * m.dim + 4; ++rounds) {
    bool exact = true;
    for (int g = 0; g < G.n() && exact; ++g)
      for (int h = 0; h < G.n(); ++h)
        if (beta[h] * beta[g] != beta[G.mul(h, g)]) {
          exact = false;
          break;
        }
    if (exact) {
      res.found = true;
      res.structure.alpha = beta;
      auto rep = verify_equivariant(m, act, res.structure);
      if (!rep.all_ok()) throw Error("Internal", "equivariant verification failed after search");
      return res;
    }
    // linear correction: beta_g (I + X_g) with X_g in the radical span;
    // equations X_g + B_g^{-1} X_h B_g − X_{hg} = −E(g,h)
    const int rdim = static_cast<int>(rad.size());
    if (rdim == 0) {
      res.certificate = "cocycle defect nonzero with semisimple End(M)";
      return res;
    }
    std::vector<Matrix> rad_mats;
    for (auto& rv : rad) rad_mats.push_back(realize(rv));
    const int unknowns = G.n() * rdim;
    // flatten equations over matrix entries
    std::vector<SparseVec> rows;
    std::vector<Scalar> rhs_vals;
    Matrix id = Matrix::identity(m.dim, f);
    std::vector<Matrix> binv(G.n(), Matrix(0, 0, f));
    for (int g = 0; g < G.n(); ++g) binv[g] = *beta[g].inverse();
    // linear map coefficients: for unknown (g, k): contribution patterns
    // eq(g,h) = X_g + conj_g(X_h) − X_{hg} + E(g,h) = 0, E = defect − I
    Echelon sys(unknowns + 1, f);  // last coordinate carries the rhs
    for (int g = 0; g < G.n(); ++g)
      for (int h = 0; h < G.n(); ++h) {
        Matrix e = defect(beta, g, h) - id;
        // coefficient matrices per unknown basis element
        // entry-wise equations; build dense rows over the unknowns + rhs
        std::vector<Matrix> conj_h(rdim, Matrix(0, 0, f));
        for (int k = 0; k < rdim; ++k) conj_h[k] = binv[g] * rad_mats[k] * beta[g];
        for (int rr = 0; rr < m.dim; ++rr)
          for (int cc = 0; cc < m.dim; ++cc) {
            SparseVec row;
            for (int k = 0; k < rdim; ++k) {
              Scalar cg = rad_mats[k].at(rr, cc);       // X_g term
              Scalar ch = conj_h[k].at(rr, cc);          // B_g^{-1} X_h B_g term
              if (!cg.is_zero()) row.emplace_back(g * rdim + k, cg);
              if (!ch.is_zero()) row.emplace_back(h * rdim + k, ch);
              if (!cg.is_zero()) row.emplace_back(G.mul(h, g) * rdim + k, -cg);
            }
            Scalar ev = e.at(rr, cc);
            if (!ev.is_zero()) row.emplace_back(unknowns, ev);
            sys.insert(sparse_normalize(row));
          }
      }
    // solvability: the rhs coordinate must not be a pivot
    if (sys.is_pivot(unknowns)) {
      res.certificate = "radical lifting obstruction nonzero";
      return res;
    }
    // particular solution: set free unknowns to zero, rhs coord to 1, solve pivots
    std::vector<Scalar> x(unknowns, Scalar::zero(f));
    for (auto& rowv : sys.rows()) {
      Scalar val = Scalar::zero(f);
      for (size_t i = 1; i < rowv.size(); ++i)
        if (rowv[i].first == unknowns) val = rowv[i].second;
      if (!val.is_zero() && rowv[0].first < unknowns) x[rowv[0].first] = -val;
    }
    for (int g = 0; g < G.n(); ++g) {
      Matrix xg(m.dim, m.dim, f);
      for (int k = 0; k < rdim; ++k)
        if (!x[g * rdim + k].is_zero()) xg = xg + rad_mats[k].scaled(x[g * rdim + k]);
      beta[g] = beta[g] * (id + xg);
    }
  }
  res.certificate = "radical lifting did not converge";
  return res;
}

}  // namespace hcell
