#include "hcell/cohomology.hpp"

#include <algorithm>
#include <set>

namespace hcell {

mpz_class AbelianInvariants::order() const {
  mpz_class o = 1;
  for (auto& d : divisors) o *= d;
  return o;
}

std::string AbelianInvariants::str() const {
  if (divisors.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < divisors.size(); ++i)
    s += (i ? " + " : "") + std::string("Z/") + divisors[i].get_str();
  return s;
}

SubgroupList subgroups(const GroupData& grp, int bound) {
  if (grp.n() > bound)
    throw Error("GroupTooLarge", "subgroup enumeration bound " + std::to_string(bound) +
                                     " exceeded (|G| = " + std::to_string(grp.n()) + ")");
  std::set<std::vector<int>> found;
  found.insert(grp.closure({}));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> cur(found.begin(), found.end());
    for (auto& h : cur)
      for (int x = 0; x < grp.n(); ++x) {
        if (std::binary_search(h.begin(), h.end(), x)) continue;
        std::vector<int> gens = h;
        gens.push_back(x);
        if (found.insert(grp.closure(gens)).second) grew = true;
      }
  }
  SubgroupList out;
  out.all.assign(found.begin(), found.end());
  std::sort(out.all.begin(), out.all.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::set<std::vector<int>> seen;
  for (auto& h : out.all) {
    bool is_new = true;
    for (int g = 0; g < grp.n() && is_new; ++g)
      if (seen.count(grp.conjugate_subgroup(h, g))) is_new = false;
    if (is_new) {
      out.conjugacy_reps.push_back(h);
      seen.insert(h);
    }
  }
  return out;
}

namespace {

// bar cochain differential δ^n: C^n -> C^{n+1} with trivial coefficients,
// rows indexed by (n+1)-times, columns by n-tuples
IntMat bar_differential(const GroupData& k, int n) {
  const int kn = k.n();
  auto pow = [&](int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= kn;
    return r;
  };
  const long long rows = pow(n + 1), cols = pow(n);
  IntMat d(static_cast<int>(rows), static_cast<int>(cols));
  std::vector<int> tup(n + 1, 0);
  for (long long r = 0; r < rows; ++r) {
    // decode tuple (g_1, ..., g_{n+1})
    long long t = r;
    for (int i = n; i >= 0; --i) {
      tup[i] = static_cast<int>(t % kn);
      t /= kn;
    }
    // (δf)(g_1..g_{n+1}) = f(g_2..g_{n+1}) + Σ (-1)^i f(..g_i g_{i+1}..)
    //                      + (-1)^{n+1} f(g_1..g_n)
    auto encode = [&](const std::vector<int>& q) {
      long long c = 0;
      for (int x : q) c = c * kn + x;
      return c;
    };
    {
      std::vector<int> q(tup.begin() + 1, tup.end());
      d.at(static_cast<int>(r), static_cast<int>(encode(q))) += 1;
    }
    int sign = -1;
    for (int i = 0; i < n; ++i) {
      std::vector<int> q;
      for (int j = 0; j <= n; ++j) {
        if (j == i) {
          q.push_back(k.mul(tup[i], tup[i + 1]));
          ++j;
        } else {
          q.push_back(tup[j]);
        }
      }
      d.at(static_cast<int>(r), static_cast<int>(encode(q))) += sign;
      sign = -sign;
    }
    {
      std::vector<int> q(tup.begin(), tup.end() - 1);
      d.at(static_cast<int>(r), static_cast<int>(encode(q))) += sign;
    }
  }
  return d;
}

}  // namespace

AbelianInvariants bar_h3_integral(const GroupData& k, int bound) {
  if (k.n() > bound)
    throw Error("SizeBound", "bar complex bound " + std::to_string(bound) +
                                 " exceeded (|K| = " + std::to_string(k.n()) + ")");
  if (k.n() == 1) return {};
  IntMat d3 = bar_differential(k, 3);
  IntMat d2 = bar_differential(k, 2);
  // complex property
  if (!d3.mul(d2).is_zero()) throw Error("Internal", "bar differentials do not compose to zero");
  IntMat ker = integer_kernel(d3);
  // express the image of d2 in kernel coordinates
  auto x = integer_solve(ker, d2);
  if (!x) throw Error("Internal", "im d2 not contained in ker d3");
  SmithResult s = smith_normal_form(*x);
  // free rank must vanish for a finite group
  if (s.rank != ker.cols) throw Error("Internal", "H^3 has unexpected free rank");
  std::vector<mpz_class> moduli;
  for (auto& d : s.divisors)
    if (d > 1) moduli.push_back(d);
  AbelianInvariants inv;
  inv.divisors = elementary_divisor_chain(moduli);
  return inv;
}

AbelianInvariants abelian_multiplier_formula(const std::vector<mpz_class>& invariants) {
  std::vector<mpz_class> moduli;
  for (size_t i = 0; i < invariants.size(); ++i)
    for (size_t j = i + 1; j < invariants.size(); ++j) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), invariants[i].get_mpz_t(), invariants[j].get_mpz_t());
      if (g > 1) moduli.push_back(g);
    }
  AbelianInvariants inv;
  inv.divisors = elementary_divisor_chain(moduli);
  return inv;
}

AbelianInvariants abelian_multiplier_formula(const GroupData& k) {
  return abelian_multiplier_formula(k.abelian_invariants());
}

namespace {

// |ker(D mod m)| for the Smith divisors of an integer matrix with n columns
mpz_class kernel_size_mod_m(const SmithResult& s, int cols, const mpz_class& m) {
  mpz_class size = 1;
  for (auto& d : s.divisors) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t());
    size *= g;
  }
  for (int i = s.rank; i < cols; ++i) size *= m;
  return size;
}

}  // namespace

H2CrossCheck h2_mod_m_cross_check(const GroupData& k, const mpz_class& m,
                                  const AbelianInvariants& h3) {
  H2CrossCheck out;
  IntMat d2 = bar_differential(k, 2);
  IntMat d1 = bar_differential(k, 1);
  SmithResult s2 = smith_normal_form(d2);
  SmithResult s1 = smith_normal_form(d1);
  // |H^2(K, Z/m)| = |ker(d2 mod m)| / |im(d1 mod m)|,
  // |im(d1 mod m)| = m^{cols(d1)} / |ker(d1 mod m)|
  mpz_class ker2 = kernel_size_mod_m(s2, d2.cols, m);
  mpz_class ker1 = kernel_size_mod_m(s1, d1.cols, m);
  mpz_class mc1 = 1;
  for (int i = 0; i < d1.cols; ++i) mc1 *= m;
  out.computed = ker2 * ker1 / mc1;
  // predicted: |K^ab ⊗ Z/m| · |Tor(H^3, Z/m)|
  mpz_class pred = 1;
  GroupData ab = k.abelianization();
  for (auto& d : ab.abelian_invariants()) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t());
    pred *= g;
  }
  for (auto& d : h3.divisors) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t());
    pred *= g;
  }
  out.predicted = pred;
  return out;
}

Classification classify(const GroupData& grp, int subgroup_bound, int h3_bound) {
  Classification out;
  ClassificationEntry triv;
  triv.apex = "J_1";
  triv.class_count = 1;
  out.entries.push_back(triv);
  out.total = 1;
  out.total_up_to_conjugacy = 1;
  SubgroupList subs = subgroups(grp, subgroup_bound);
  std::set<std::vector<int>> reps(subs.conjugacy_reps.begin(), subs.conjugacy_reps.end());
  for (auto& h : subs.all) {
    GroupData k = grp.subgroup(h);
    ClassificationEntry e;
    e.apex = "J_0";
    e.subgroup = h;
    e.h2 = k.is_abelian() && k.n() > h3_bound ? abelian_multiplier_formula(k)
                                              : bar_h3_integral(k, h3_bound);
    e.class_count = e.h2.order();
    out.total += e.class_count;
    if (reps.count(h)) out.total_up_to_conjugacy += e.class_count;
    out.entries.push_back(std::move(e));
  }
  return out;
}

}  // namespace hcell
