#include "hcell/smith.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hcell {

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::mul(const IntMat& o) const {
  IntMat r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const mpz_class& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols; ++j)
        if (o.at(k, j) != 0) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

bool IntMat::is_zero() const {
  for (auto& x : a)
    if (x != 0) return false;
  return true;
}

namespace {

void swap_rows(IntMat& m, int i, int j, IntMat* u) {
  if (i == j) return;
  for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
  if (u)
    for (int c = 0; c < u->cols; ++c) std::swap(u->at(i, c), u->at(j, c));
}

void swap_cols(IntMat& m, int i, int j, IntMat* v) {
  if (i == j) return;
  for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
  if (v)
    for (int r = 0; r < v->rows; ++r) std::swap(v->at(r, i), v->at(r, j));
}

// row_i -= q * row_j
void row_axpy(IntMat& m, int i, int j, const mpz_class& q, IntMat* u, int from_col) {
  if (q == 0) return;
  for (int c = from_col; c < m.cols; ++c)
    if (m.at(j, c) != 0) m.at(i, c) -= q * m.at(j, c);
  if (u)
    for (int c = 0; c < u->cols; ++c)
      if (u->at(j, c) != 0) u->at(i, c) -= q * u->at(j, c);
}

void col_axpy(IntMat& m, int i, int j, const mpz_class& q, IntMat* v, int from_row) {
  if (q == 0) return;
  for (int r = from_row; r < m.rows; ++r)
    if (m.at(r, j) != 0) m.at(r, i) -= q * m.at(r, j);
  if (v)
    for (int r = 0; r < v->rows; ++r)
      if (v->at(r, j) != 0) v->at(r, i) -= q * v->at(r, j);
}

}  // namespace

SmithResult smith_normal_form(IntMat m, IntMat* u, IntMat* v) {
  if (u) *u = IntMat::identity(m.rows);
  if (v) *v = IntMat::identity(m.cols);

  int t = 0;
  const int tmax = std::min(m.rows, m.cols);
  while (t < tmax) {
    // locate a minimal-absolute-value nonzero pivot in the active block
    int pi = -1, pj = -1;
    mpz_class best;
    for (int i = t; i < m.rows; ++i)
      for (int j = t; j < m.cols; ++j) {
        const mpz_class& x = m.at(i, j);
        if (x == 0) continue;
        mpz_class ax = abs(x);
        if (pi < 0 || ax < best) {
          best = ax;
          pi = i; pj = j;
          if (best == 1) goto found;
        }
      }
    if (pi < 0) break;  // active block zero
  found:
    swap_rows(m, t, pi, u);
    swap_cols(m, t, pj, v);

    // clear row and column t; restart if a remainder smaller than the pivot
    // appears (guarantees termination and keeps entries small)
    for (;;) {
      bool restart = false;
      for (int i = t + 1; i < m.rows && !restart; ++i) {
        if (m.at(i, t) == 0) continue;
        mpz_class q = m.at(i, t) / m.at(t, t);
        row_axpy(m, i, t, q, u, 0);
        if (m.at(i, t) != 0) {
          swap_rows(m, t, i, u);
          restart = true;
        }
      }
      if (restart) continue;
      for (int j = t + 1; j < m.cols && !restart; ++j) {
        if (m.at(t, j) == 0) continue;
        mpz_class q = m.at(t, j) / m.at(t, t);
        col_axpy(m, j, t, q, v, 0);
        if (m.at(t, j) != 0) {
          swap_cols(m, t, j, v);
          restart = true;
        }
      }
      if (!restart) break;
    }

    // ensure the pivot divides every remaining entry
    bool divides_all = true;
    for (int i = t + 1; i < m.rows && divides_all; ++i)
      for (int j = t + 1; j < m.cols; ++j) {
        if (m.at(i, j) % m.at(t, t) != 0) {
          // fold that row into column t and redo this pivot
          row_axpy(m, t, i, mpz_class(-1), u, 0);
          divides_all = false;
          break;
        }
      }
    if (!divides_all) continue;

    if (m.at(t, t) < 0) {
      for (int j = t; j < m.cols; ++j) m.at(t, j) = -m.at(t, j);
      if (u)
        for (int c = 0; c < u->cols; ++c) u->at(t, c) = -u->at(t, c);
    }
    ++t;
  }

  SmithResult res;
  res.rank = t;
  res.d = m;
  for (int i = 0; i < t; ++i) res.divisors.push_back(m.at(i, i));
  return res;
}

IntMat integer_kernel(const IntMat& m) {
  IntMat v;
  SmithResult s = smith_normal_form(m, nullptr, &v);
  int n = m.cols;
  IntMat k(n, n - s.rank);
  for (int j = s.rank; j < n; ++j)
    for (int i = 0; i < n; ++i) k.at(i, j - s.rank) = v.at(i, j);
  return k;
}

std::optional<IntMat> integer_solve(const IntMat& m, const IntMat& b) {
  IntMat u, v;
  SmithResult s = smith_normal_form(m, &u, &v);
  IntMat ub = u.mul(b);
  IntMat y(m.cols, b.cols);
  for (int j = 0; j < b.cols; ++j) {
    for (int i = 0; i < m.rows; ++i) {
      if (i < s.rank) {
        if (ub.at(i, j) % s.divisors[i] != 0) return std::nullopt;
        if (i < m.cols) y.at(i, j) = ub.at(i, j) / s.divisors[i];
      } else if (ub.at(i, j) != 0) {
        return std::nullopt;
      }
    }
  }
  return v.mul(y);
}

std::vector<mpz_class> elementary_divisor_chain(const std::vector<mpz_class>& moduli) {
  // collect prime-power contributions
  std::map<mpz_class, std::vector<int>> exps;  // prime -> exponents (one per modulus)
  for (mpz_class m : moduli) {
    if (m <= 0) throw std::invalid_argument("elementary_divisor_chain: modulus must be positive");
    if (m == 1) continue;
    for (mpz_class d = 2; d * d <= m; ++d) {
      if (m % d == 0) {
        int e = 0;
        while (m % d == 0) { m /= d; ++e; }
        exps[d].push_back(e);
      }
    }
    if (m > 1) exps[m].push_back(1);
  }
  size_t levels = 0;
  for (auto& [p, es] : exps) {
    std::sort(es.begin(), es.end(), std::greater<int>());
    levels = std::max(levels, es.size());
  }
  std::vector<mpz_class> chain(levels, 1);
  for (auto& [p, es] : exps) {
    for (size_t i = 0; i < es.size(); ++i) {
      mpz_class pe;
      mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(es[i]));
      chain[i] *= pe;  // largest exponents into the largest invariant factor
    }
  }
  std::sort(chain.begin(), chain.end());
  return chain;
}

}  // namespace hcell
