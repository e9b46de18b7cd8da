#include "hcell/group.hpp"

#include <algorithm>
#include <map>
#include <array>
#include <numeric>
#include <set>

#include "hcell/smith.hpp"

namespace hcell {

int GroupData::inv(int i) const {
  for (int j = 0; j < n(); ++j)
    if (mul(i, j) == identity) return j;
  throw Error("BadGroup", "element " + elements[i] + " has no inverse");
}

int GroupData::index_of(const std::string& name) const {
  for (int i = 0; i < n(); ++i)
    if (elements[i] == name) return i;
  throw Error("UnknownElement", "group element '" + name + "'");
}

void GroupData::validate() const {
  if (elements.empty()) throw Error("BadGroup", "empty group rejected");
  if (static_cast<int>(table.size()) != n()) throw Error("BadGroup", "table row count");
  std::set<std::string> names(elements.begin(), elements.end());
  if (static_cast<int>(names.size()) != n()) throw Error("BadGroup", "duplicate element names");
  for (int i = 0; i < n(); ++i) {
    if (static_cast<int>(table[i].size()) != n()) throw Error("BadGroup", "table column count");
    for (int j = 0; j < n(); ++j)
      if (table[i][j] < 0 || table[i][j] >= n())
        throw Error("BadGroup", "table entry out of range at (" + elements[i] + "," + elements[j] + ")");
  }
  if (identity < 0 || identity >= n()) throw Error("BadGroup", "identity index out of range");
  for (int i = 0; i < n(); ++i)
    if (mul(identity, i) != i || mul(i, identity) != i)
      throw Error("BadGroup", "identity axiom fails at " + elements[i]);
  for (int i = 0; i < n(); ++i) {
    bool has_inv = false;
    for (int j = 0; j < n(); ++j)
      if (mul(i, j) == identity && mul(j, i) == identity) has_inv = true;
    if (!has_inv) throw Error("BadGroup", "no inverse for " + elements[i]);
  }
  for (int i = 0; i < n(); ++i)
    for (int j = 0; j < n(); ++j)
      for (int k = 0; k < n(); ++k)
        if (mul(mul(i, j), k) != mul(i, mul(j, k)))
          throw Error("BadGroup", "associativity fails at (" + elements[i] + "," + elements[j] +
                                      "," + elements[k] + ")");
}

int GroupData::order_of(int i) const {
  int o = 1, cur = i;
  while (cur != identity) {
    cur = mul(cur, i);
    ++o;
  }
  return o;
}

int GroupData::exponent() const {
  long long e = 1;
  for (int i = 0; i < n(); ++i) e = std::lcm(e, static_cast<long long>(order_of(i)));
  return static_cast<int>(e);
}

bool GroupData::is_abelian() const {
  for (int i = 0; i < n(); ++i)
    for (int j = i + 1; j < n(); ++j)
      if (mul(i, j) != mul(j, i)) return false;
  return true;
}

std::vector<int> GroupData::closure(std::vector<int> gens) const {
  std::set<int> s(gens.begin(), gens.end());
  s.insert(identity);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(s.begin(), s.end());
    for (int a : cur)
      for (int b : cur)
        if (s.insert(mul(a, b)).second) grew = true;
  }
  return {s.begin(), s.end()};
}

GroupData GroupData::subgroup(const std::vector<int>& elems) const {
  std::map<int, int> reindex;
  for (size_t i = 0; i < elems.size(); ++i) reindex[elems[i]] = static_cast<int>(i);
  GroupData h;
  for (int e : elems) h.elements.push_back(elements[e]);
  h.table.assign(elems.size(), std::vector<int>(elems.size()));
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = 0; j < elems.size(); ++j) {
      auto it = reindex.find(mul(elems[i], elems[j]));
      if (it == reindex.end()) throw Error("BadGroup", "subset not closed");
      h.table[i][j] = it->second;
    }
  h.identity = reindex.at(identity);
  return h;
}

std::vector<int> GroupData::conjugate_subgroup(const std::vector<int>& h, int g) const {
  std::vector<int> out;
  int gi = inv(g);
  for (int x : h) out.push_back(mul(mul(g, x), gi));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> GroupData::generating_set() const {
  std::vector<int> gens;
  std::vector<int> gen = closure({});
  while (static_cast<int>(gen.size()) < n()) {
    int pick = -1;
    for (int i = 0; i < n(); ++i)
      if (!std::binary_search(gen.begin(), gen.end(), i)) { pick = i; break; }
    gens.push_back(pick);
    gen = closure(gens);
  }
  return gens;
}

std::vector<mpz_class> GroupData::abelian_invariants() const {
  if (!is_abelian()) throw Error("NotAbelian", "abelian invariants of a nonabelian group");
  if (n() == 1) return {};
  std::vector<int> gens = generating_set();
  int k = static_cast<int>(gens.size());
  std::vector<int> orders(k);
  for (int i = 0; i < k; ++i) orders[i] = order_of(gens[i]);

  // relation lattice: all exponent vectors in the box mapping to the identity
  std::vector<std::vector<int>> relations;
  for (int i = 0; i < k; ++i) {
    std::vector<int> r(k, 0);
    r[i] = orders[i];
    relations.push_back(r);
  }
  std::vector<int> idx(k, 0);
  for (;;) {
    int g = identity;
    for (int i = 0; i < k; ++i)
      for (int t = 0; t < idx[i]; ++t) g = mul(g, gens[i]);
    bool nonzero = std::any_of(idx.begin(), idx.end(), [](int x) { return x != 0; });
    if (nonzero && g == identity) relations.push_back(idx);
    int pos = 0;
    while (pos < k && ++idx[pos] >= orders[pos]) idx[pos++] = 0;
    if (pos == k) break;
  }

  IntMat rel(k, static_cast<int>(relations.size()));
  for (size_t j = 0; j < relations.size(); ++j)
    for (int i = 0; i < k; ++i) rel.at(i, static_cast<int>(j)) = relations[j][i];
  SmithResult s = smith_normal_form(rel);
  std::vector<mpz_class> moduli;
  for (auto& d : s.divisors)
    if (d > 1) moduli.push_back(d);
  return elementary_divisor_chain(moduli);
}

std::vector<int> GroupData::commutator_subgroup() const {
  std::vector<int> comms;
  for (int a = 0; a < n(); ++a)
    for (int b = 0; b < n(); ++b)
      comms.push_back(mul(mul(inv(a), inv(b)), mul(a, b)));
  std::vector<int> h = closure(comms);
  // normal closure
  bool grew = true;
  while (grew) {
    grew = false;
    std::set<int> s(h.begin(), h.end());
    for (int g = 0; g < n(); ++g)
      for (int x : h)
        if (s.insert(mul(mul(g, x), inv(g))).second) grew = true;
    std::vector<int> nh = closure({s.begin(), s.end()});
    if (nh.size() != h.size()) grew = true;
    h = nh;
  }
  return h;
}

GroupData GroupData::abelianization() const {
  std::vector<int> cm = commutator_subgroup();
  // cosets of [G,G]
  std::set<int> placed;
  std::vector<std::vector<int>> cosets;
  for (int g = 0; g < n(); ++g) {
    if (placed.count(g)) continue;
    std::vector<int> coset;
    for (int x : cm) coset.push_back(mul(g, x));
    std::sort(coset.begin(), coset.end());
    for (int y : coset) placed.insert(y);
    cosets.push_back(coset);
  }
  std::map<int, int> coset_of;
  for (size_t c = 0; c < cosets.size(); ++c)
    for (int y : cosets[c]) coset_of[y] = static_cast<int>(c);
  GroupData q;
  for (size_t c = 0; c < cosets.size(); ++c) q.elements.push_back("c" + std::to_string(c));
  q.table.assign(cosets.size(), std::vector<int>(cosets.size()));
  for (size_t a = 0; a < cosets.size(); ++a)
    for (size_t b = 0; b < cosets.size(); ++b)
      q.table[a][b] = coset_of.at(mul(cosets[a][0], cosets[b][0]));
  q.identity = coset_of.at(identity);
  return q;
}

GroupData GroupData::trivial() {
  GroupData g;
  g.elements = {"1"};
  g.table = {{0}};
  g.identity = 0;
  return g;
}

GroupData GroupData::cyclic(int n) {
  GroupData g;
  for (int i = 0; i < n; ++i) g.elements.push_back(i == 0 ? "1" : (i == 1 ? "w" : "w" + std::to_string(i)));
  g.table.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.table[i][j] = (i + j) % n;
  g.identity = 0;
  return g;
}

GroupData GroupData::product(const GroupData& a, const GroupData& b) {
  GroupData g;
  int nb = b.n();
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < nb; ++j) g.elements.push_back(a.elements[i] + "." + b.elements[j]);
  g.table.assign(a.n() * nb, std::vector<int>(a.n() * nb));
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < nb; ++j)
      for (int k = 0; k < a.n(); ++k)
        for (int l = 0; l < nb; ++l)
          g.table[i * nb + j][k * nb + l] = a.table[i][k] * nb + b.table[j][l];
  g.identity = a.identity * nb + b.identity;
  return g;
}

GroupData GroupData::symmetric3() {
  // permutations of {0,1,2} in one-line notation
  std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                           {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
  std::vector<std::string> names = {"e", "r", "r2", "s", "sr", "sr2"};
  GroupData g;
  g.elements = names;
  g.table.assign(6, std::vector<int>(6));
  auto compose = [&](int i, int j) {
    std::array<int, 3> c{};
    for (int x = 0; x < 3; ++x) c[x] = perms[i][perms[j][x]];
    for (size_t k = 0; k < perms.size(); ++k)
      if (perms[k] == c) return static_cast<int>(k);
    return -1;
  };
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) g.table[i][j] = compose(i, j);
  g.identity = 0;
  return g;
}

}  // namespace hcell
