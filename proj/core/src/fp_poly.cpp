#include "hcell/fp_poly.hpp"

#include <algorithm>
#include <map>

namespace hcell {

void FpPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

FpPoly poly_add(const FpPoly& a, const FpPoly& b) {
  FpPoly r{a.p, {}};
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < r.c.size(); ++i) {
    std::uint64_t x = i < a.c.size() ? a.c[i] : 0;
    std::uint64_t y = i < b.c.size() ? b.c[i] : 0;
    r.c[i] = (x + y) % a.p;
  }
  r.trim();
  return r;
}

FpPoly poly_sub(const FpPoly& a, const FpPoly& b) {
  FpPoly nb = b;
  for (auto& x : nb.c) x = x == 0 ? 0 : a.p - x;
  nb.p = a.p;
  return poly_add(a, nb);
}

FpPoly poly_mul(const FpPoly& a, const FpPoly& b) {
  if (a.is_zero() || b.is_zero()) return FpPoly::zero(a.p);
  FpPoly r{a.p, std::vector<std::uint64_t>(a.c.size() + b.c.size() - 1, 0)};
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = (r.c[i + j] + a.c[i] * b.c[j]) % a.p;
  }
  r.trim();
  return r;
}

std::pair<FpPoly, FpPoly> poly_divmod(const FpPoly& a, const FpPoly& b) {
  if (b.is_zero()) throw Error("DivisionByZero", "polynomial division by zero");
  FpPoly r = a, q = FpPoly::zero(a.p);
  q.c.assign(a.c.size() > b.c.size() ? a.c.size() - b.c.size() + 1 : 1, 0);
  std::uint64_t lead_inv = fp_inv(b.c.back(), a.p);
  while (!r.is_zero() && r.deg() >= b.deg()) {
    int shift = r.deg() - b.deg();
    std::uint64_t coef = r.c.back() * lead_inv % a.p;
    q.c[shift] = (q.c[shift] + coef) % a.p;
    for (size_t i = 0; i < b.c.size(); ++i) {
      std::uint64_t sub = coef * b.c[i] % a.p;
      std::uint64_t& t = r.c[shift + i];
      t = (t + a.p - sub) % a.p;
    }
    r.trim();
  }
  q.trim();
  return {q, r};
}

FpPoly poly_mod(const FpPoly& a, const FpPoly& b) { return poly_divmod(a, b).second; }

FpPoly poly_monic(FpPoly a) {
  if (a.is_zero()) return a;
  std::uint64_t inv = fp_inv(a.c.back(), a.p);
  for (auto& x : a.c) x = x * inv % a.p;
  return a;
}

FpPoly poly_gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = poly_mod(a, b);
    a = b;
    b = r;
  }
  return poly_monic(a);
}

FpPoly poly_powmod(FpPoly base, mpz_class e, const FpPoly& mod) {
  FpPoly r = FpPoly::one(base.p);
  base = poly_mod(base, mod);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = poly_mod(poly_mul(r, base), mod);
    base = poly_mod(poly_mul(base, base), mod);
    e >>= 1;
  }
  return r;
}

FpPoly poly_derivative(const FpPoly& a) {
  FpPoly r{a.p, {}};
  for (size_t i = 1; i < a.c.size(); ++i) r.c.push_back(a.c[i] * (i % a.p) % a.p);
  r.trim();
  return r;
}

std::uint64_t poly_eval(const FpPoly& a, std::uint64_t x) {
  std::uint64_t r = 0;
  for (size_t i = a.c.size(); i-- > 0;) r = (r * x + a.c[i]) % a.p;
  return r;
}

namespace {

// Equal-degree splitting of a squarefree product of degree-d irreducibles.
// Deterministic sweep over shift elements.
void equal_degree_split(const FpPoly& f, int d, std::vector<FpPoly>& out) {
  if (f.deg() == d) {
    out.push_back(poly_monic(f));
    return;
  }
  const std::uint64_t p = f.p;
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
  mpz_class e = (q - 1) / 2;
  for (std::uint64_t attempt = 0;; ++attempt) {
    int base_deg = 1 + static_cast<int>(attempt / p);
    std::uint64_t shift = attempt % p;
    FpPoly base{p, std::vector<std::uint64_t>(base_deg + 1, 0)};
    base.c[0] = shift;
    base.c[base_deg] = 1 % p;
    base.trim();
    FpPoly g;
    if (p == 2) {
      // trace map splitting in characteristic 2
      FpPoly acc = base, cur = base;
      for (int i = 1; i < d; ++i) {
        cur = poly_mod(poly_mul(cur, cur), f);
        acc = poly_add(acc, cur);
      }
      g = poly_gcd(f, acc);
    } else {
      FpPoly h = poly_powmod(base, e, f);
      h = poly_sub(h, FpPoly::one(p));
      g = poly_gcd(f, h);
    }
    if (g.deg() > 0 && g.deg() < f.deg()) {
      equal_degree_split(g, d, out);
      equal_degree_split(poly_divmod(f, g).first, d, out);
      return;
    }
    if (attempt > 8 * p + 64) throw Error("FactorFailure", "equal-degree split did not converge");
  }
}

}  // namespace

namespace {

// Squarefree decomposition over F_p (standard gcd ladder; the derivative-zero
// part is a polynomial in x^p and is handled by substitution and recursion).
void squarefree_decompose(const FpPoly& f0, int mult, std::vector<std::pair<FpPoly, int>>& out) {
  const std::uint64_t p = f0.p;
  FpPoly f = poly_monic(f0);
  if (f.deg() <= 0) return;
  FpPoly d = poly_derivative(f);
  if (d.is_zero()) {
    FpPoly g{p, {}};
    for (size_t i = 0; i < f.c.size(); i += p) g.c.push_back(f.c[i]);
    g.trim();
    squarefree_decompose(g, mult * static_cast<int>(p), out);
    return;
  }
  FpPoly c = poly_gcd(f, d);
  FpPoly w = poly_divmod(f, c).first;
  int i = 1;
  while (w.deg() > 0) {
    FpPoly y = poly_gcd(w, c);
    FpPoly fac = poly_divmod(w, y).first;
    if (fac.deg() > 0) out.emplace_back(poly_monic(fac), mult * i);
    w = y;
    c = poly_divmod(c, y).first;
    ++i;
  }
  if (c.deg() > 0) {
    // remaining multiplicities divisible by p
    FpPoly g{p, {}};
    for (size_t k = 0; k < c.c.size(); k += p) g.c.push_back(c.c[k]);
    g.trim();
    squarefree_decompose(g, mult * static_cast<int>(p), out);
  }
}

}  // namespace

std::vector<std::pair<FpPoly, int>> poly_factor(const FpPoly& f0) {
  const std::uint64_t p = f0.p;
  std::vector<std::pair<FpPoly, int>> sqfree;
  squarefree_decompose(f0, 1, sqfree);

  std::vector<std::pair<FpPoly, int>> result;
  for (auto& [sf, mult] : sqfree) {
    // distinct-degree factorization of the squarefree polynomial sf
    FpPoly h = FpPoly::x(p), v = sf;
    for (int d = 1; v.deg() > 0 && d <= v.deg(); ++d) {
      h = poly_powmod(h, mpz_class(static_cast<unsigned long>(p)), v);
      FpPoly g = poly_gcd(poly_sub(h, FpPoly::x(p)), v);
      if (g.deg() > 0) {
        std::vector<FpPoly> parts;
        equal_degree_split(g, d, parts);
        for (auto& irr : parts) result.emplace_back(irr, mult);
        v = poly_divmod(v, g).first;
      }
    }
    if (v.deg() > 0) result.emplace_back(poly_monic(v), mult);
  }
  std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
    if (a.first.deg() != b.first.deg()) return a.first.deg() < b.first.deg();
    return a.first.c < b.first.c;
  });
  return result;
}

std::vector<std::uint64_t> poly_roots(const FpPoly& f) {
  std::vector<std::uint64_t> roots;
  for (auto& [irr, mult] : poly_factor(f)) {
    (void)mult;
    if (irr.deg() == 1) {
      // x + c -> root -c
      std::uint64_t c = irr.c[0];
      roots.push_back(c == 0 ? 0 : f.p - c);
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::optional<std::uint64_t> fp_dlog(std::uint64_t g, std::uint64_t h, std::uint64_t p) {
  g %= p; h %= p;
  std::uint64_t m = 1;
  while (m * m < p) ++m;  // ceil(sqrt(p))
  std::map<std::uint64_t, std::uint64_t> baby;
  std::uint64_t cur = 1 % p;
  for (std::uint64_t j = 0; j < m; ++j) {
    baby.emplace(cur, j);
    cur = cur * g % p;
  }
  std::uint64_t ginv_m = fp_pow(fp_inv(g, p), m, p);
  std::uint64_t gamma = h;
  for (std::uint64_t i = 0; i < m + 1; ++i) {
    auto it = baby.find(gamma);
    if (it != baby.end()) return i * m + it->second;
    gamma = gamma * ginv_m % p;
  }
  return std::nullopt;
}

std::uint64_t fp_primitive_root(std::uint64_t p) {
  if (p == 2) return 1;
  std::uint64_t n = p - 1;
  std::vector<std::uint64_t> primes;
  std::uint64_t m = n;
  for (std::uint64_t d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      primes.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) primes.push_back(m);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (std::uint64_t q : primes)
      if (fp_pow(g, n / q, p) == 1) { ok = false; break; }
    if (ok) return g;
  }
  throw Error("Internal", "no primitive root found");
}

std::uint64_t fp_root_of_unity(std::uint64_t n, std::uint64_t p) {
  if ((p - 1) % n != 0) throw Error("NonSplitField", "no primitive " + std::to_string(n) + "-th root of unity mod " + std::to_string(p));
  std::uint64_t g = fp_primitive_root(p);
  return fp_pow(g, (p - 1) / n, p);
}

}  // namespace hcell
