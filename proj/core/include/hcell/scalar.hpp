#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace hcell {

struct Error : std::runtime_error {
  std::string code;
  Error(std::string c, const std::string& what)
      : std::runtime_error(c + ": " + what), code(std::move(c)) {}
};

// Field of scalars: a prime field F_p (p < 2^31) or the rationals (p == 0).
struct Field {
  std::uint64_t p = 0;

  bool is_fp() const { return p != 0; }
  bool is_rational() const { return p == 0; }
  bool operator==(const Field&) const = default;

  static Field rationals() { return Field{0}; }
  static Field fp(std::uint64_t p);

  // Smallest prime q with q ≡ 1 (mod m) and q > bound.
  static std::uint64_t smallest_prime_1_mod(std::uint64_t m, std::uint64_t bound);

  std::string str() const;
};

// Exact field element. An element is either an F_p residue tagged with its
// modulus, or an arbitrary-precision rational. Default construction yields a
// field-agnostic integer zero that coerces into either representation.
class Scalar {
 public:
  struct Fp {
    std::uint64_t v;
    std::uint64_t p;  // p == 0: field-agnostic small integer (stored signed in v)
  };

  Scalar() : rep_(Fp{0, 0}) {}

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar from_int(long long n, const Field& f);
  // field-agnostic small integer; coerces on first contact with a typed scalar
  static Scalar integer(long long n) { return make_fp(static_cast<std::uint64_t>(n), 0); }
  static Scalar from_mpq(const mpq_class& q);  // rational field
  // Parses "-3", "2/5"; residues reduced mod p for prime fields.
  static Scalar parse(const std::string& s, const Field& f);

  bool is_fp() const { return std::holds_alternative<Fp>(rep_) && std::get<Fp>(rep_).p != 0; }
  bool is_untyped() const { return std::holds_alternative<Fp>(rep_) && std::get<Fp>(rep_).p == 0; }
  bool is_rational() const { return std::holds_alternative<mpq_class>(rep_); }

  std::uint64_t fp_value() const { return std::get<Fp>(rep_).v; }
  std::uint64_t fp_mod() const { return std::get<Fp>(rep_).p; }
  const mpq_class& rat_value() const { return std::get<mpq_class>(rep_); }

  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inv() const;

  Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
  Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
  Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

 private:
  static Scalar make_fp(std::uint64_t v, std::uint64_t p) { Scalar s; s.rep_ = Fp{v, p}; return s; }
  static Scalar make_rat(mpq_class q) { Scalar s; s.rep_ = std::move(q); return s; }

  // Coerces the untyped integer zero/value into the other operand's field.
  static void align(Scalar& a, Scalar& b);

  std::variant<Fp, mpq_class> rep_;
};

std::uint64_t fp_pow(std::uint64_t base, std::uint64_t e, std::uint64_t p);
std::uint64_t fp_inv(std::uint64_t v, std::uint64_t p);
bool is_prime_u64(std::uint64_t n);

}  // namespace hcell
