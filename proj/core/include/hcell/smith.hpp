#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

namespace hcell {

// Dense integer matrix, row-major.
struct IntMat {
  int rows = 0, cols = 0;
  std::vector<mpz_class> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  mpz_class& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const mpz_class& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static IntMat identity(int n);
  IntMat mul(const IntMat& o) const;
  bool is_zero() const;
  bool operator==(const IntMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

struct SmithResult {
  std::vector<mpz_class> divisors;  // nonzero diagonal d_1 | d_2 | ... | d_r
  int rank = 0;
  IntMat d;  // full diagonal matrix, same shape as input
};

// Smith normal form with minimal-absolute-value pivoting. When `u`/`v` are
// non-null they receive unimodular transforms with u * input * v = d.
SmithResult smith_normal_form(IntMat m, IntMat* u = nullptr, IntMat* v = nullptr);

// Basis of the integer kernel lattice {x : m x = 0}, as columns.
IntMat integer_kernel(const IntMat& m);

// One integer solution of m x = b (columns of b independently); nullopt if
// some column has no integral solution.
std::optional<IntMat> integer_solve(const IntMat& m, const IntMat& b);

// Elementary-divisor chain (each > 1, ascending, d_i | d_{i+1}) of the
// abelian group ⊕ Z/m_i given arbitrary moduli m_i (entries <= 0 rejected).
std::vector<mpz_class> elementary_divisor_chain(const std::vector<mpz_class>& moduli);

}  // namespace hcell
