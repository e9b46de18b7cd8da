#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hcell/scalar.hpp"

namespace hcell {

// Univariate polynomials over F_p, coefficient vector with c[i] the
// coefficient of x^i, no trailing zeros.
struct FpPoly {
  std::uint64_t p;
  std::vector<std::uint64_t> c;

  int deg() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  static FpPoly zero(std::uint64_t p) { return {p, {}}; }
  static FpPoly one(std::uint64_t p) { return {p, {1 % p}}; }
  static FpPoly x(std::uint64_t p) { return {p, {0, 1 % p}}; }
  void trim();
};

FpPoly poly_add(const FpPoly& a, const FpPoly& b);
FpPoly poly_sub(const FpPoly& a, const FpPoly& b);
FpPoly poly_mul(const FpPoly& a, const FpPoly& b);
// division with remainder: a = q*b + r
std::pair<FpPoly, FpPoly> poly_divmod(const FpPoly& a, const FpPoly& b);
FpPoly poly_mod(const FpPoly& a, const FpPoly& b);
FpPoly poly_gcd(FpPoly a, FpPoly b);  // monic gcd
FpPoly poly_monic(FpPoly a);
FpPoly poly_powmod(FpPoly base, mpz_class e, const FpPoly& mod);
FpPoly poly_derivative(const FpPoly& a);
std::uint64_t poly_eval(const FpPoly& a, std::uint64_t x);

// Full factorization into monic irreducibles with multiplicities.
std::vector<std::pair<FpPoly, int>> poly_factor(const FpPoly& f);

// Roots in F_p (with multiplicity collapsed), sorted.
std::vector<std::uint64_t> poly_roots(const FpPoly& f);

// Discrete logarithm base g in F_p^* (baby-step giant-step); nullopt if none.
std::optional<std::uint64_t> fp_dlog(std::uint64_t g, std::uint64_t h, std::uint64_t p);

// A primitive root mod p (smallest).
std::uint64_t fp_primitive_root(std::uint64_t p);

// Element of multiplicative order n in F_p^* (requires n | p-1).
std::uint64_t fp_root_of_unity(std::uint64_t n, std::uint64_t p);

}  // namespace hcell
