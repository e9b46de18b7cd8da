#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "hcell/scalar.hpp"

namespace hcell {

// Finite group given by its full multiplication table.
// table[i][j] is the index of elements[i] * elements[j].
struct GroupData {
  std::vector<std::string> elements;
  std::vector<std::vector<int>> table;
  int identity = 0;

  int n() const { return static_cast<int>(elements.size()); }
  int mul(int i, int j) const { return table[i][j]; }
  int inv(int i) const;
  int index_of(const std::string& name) const;

  // Throws Error("BadGroup", ...) naming the offending triple/element.
  void validate() const;

  int order_of(int i) const;
  int exponent() const;
  bool is_abelian() const;

  // Subgroup closure of a set of element indices; sorted indices.
  std::vector<int> closure(std::vector<int> gens) const;

  // The subgroup on the given (sorted) element indices as its own GroupData;
  // names are inherited.
  GroupData subgroup(const std::vector<int>& elems) const;

  // g H g^-1 as a sorted index list.
  std::vector<int> conjugate_subgroup(const std::vector<int>& h, int g) const;

  // Minimal-ish generating set found by greedy closure (deterministic).
  std::vector<int> generating_set() const;

  // Invariant factors d_1 | d_2 | ... (each > 1) when the group is abelian.
  std::vector<mpz_class> abelian_invariants() const;

  // Normal closure of all commutators; sorted indices.
  std::vector<int> commutator_subgroup() const;

  // Abelianization G/[G,G] as a GroupData.
  GroupData abelianization() const;

  static GroupData trivial();
  static GroupData cyclic(int n);
  static GroupData product(const GroupData& a, const GroupData& b);
  static GroupData klein4() { return product(cyclic(2), cyclic(2)); }
  static GroupData symmetric3();
};

}  // namespace hcell
