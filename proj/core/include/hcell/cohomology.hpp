#pragma once

#include "hcell/group.hpp"
#include "hcell/smith.hpp"

namespace hcell {

// Elementary divisors d_1 | d_2 | ... (each > 1); trivial group = empty.
struct AbelianInvariants {
  std::vector<mpz_class> divisors;

  mpz_class order() const;
  std::string str() const;
  bool operator==(const AbelianInvariants&) const = default;
};

struct SubgroupList {
  std::vector<std::vector<int>> all;              // sorted element lists, deterministic order
  std::vector<std::vector<int>> conjugacy_reps;   // one representative per conjugacy class
};

// All subgroups by closure of element subsets. Throws Error("GroupTooLarge")
// beyond the bound.
SubgroupList subgroups(const GroupData& grp, int bound = 16);

// H^3(K, Z) of the bar complex with integer coefficients via Smith normal
// form. Throws Error("SizeBound") when |K| exceeds the bound.
AbelianInvariants bar_h3_integral(const GroupData& k, int bound = 8);

// closed-form oracle for abelian K with cyclic decomposition n_1, ..., n_r:
// ⊕_{i<j} Z/gcd(n_i, n_j). Throws Error("NotAbelian").
AbelianInvariants abelian_multiplier_formula(const GroupData& k);
AbelianInvariants abelian_multiplier_formula(const std::vector<mpz_class>& invariants);

// independent cross-check: |H^2(K, Z/m)| computed from the integer bar
// complex, compared with |K^ab ⊗ Z/m| · |Tor(H^3(K,Z), Z/m)|
struct H2CrossCheck {
  mpz_class computed;   // |H^2(K, Z/m)|
  mpz_class predicted;  // from the universal coefficient identity
  bool ok() const { return computed == predicted; }
};
H2CrossCheck h2_mod_m_cross_check(const GroupData& k, const mpz_class& m,
                                  const AbelianInvariants& h3);

struct ClassificationEntry {
  std::string apex;            // "J_1" or "J_0"
  std::vector<int> subgroup;   // element indices (empty for the J_1 entry)
  AbelianInvariants h2;        // H^2(K, k*) ≅ H^3(K, Z)
  mpz_class class_count;       // |H^2|
};

struct Classification {
  std::vector<ClassificationEntry> entries;  // one per (K, ω-group); J_1 first
  mpz_class total;                           // 1 + Σ_K |H^2(K, k*)|
  mpz_class total_up_to_conjugacy;           // same sum over conjugacy reps
};

// the classification data: one J_1 entry plus, for each subgroup K, the
// group H^2(K, k*) and its order as the count of classes with apex J_0
Classification classify(const GroupData& grp, int subgroup_bound = 16, int h3_bound = 8);

}  // namespace hcell
