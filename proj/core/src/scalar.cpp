#include "hcell/scalar.hpp"

namespace hcell {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::fp(std::uint64_t p) {
  if (p >= (1ull << 31)) throw Error("FieldTooLarge", "prime must be < 2^31");
  if (!is_prime_u64(p)) throw Error("NotPrime", std::to_string(p) + " is not prime");
  return Field{p};
}

std::uint64_t Field::smallest_prime_1_mod(std::uint64_t m, std::uint64_t bound) {
  if (m == 0) m = 1;
  std::uint64_t q = bound + 1;
  if (q < 3) q = 3;
  while (!(is_prime_u64(q) && q % m == 1)) ++q;
  return q;
}

std::string Field::str() const {
  return is_fp() ? "F_" + std::to_string(p) : "Q";
}

std::uint64_t fp_pow(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p, b = base % p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t fp_inv(std::uint64_t v, std::uint64_t p) {
  if (v % p == 0) throw Error("DivisionByZero", "inverse of 0 mod " + std::to_string(p));
  // extended Euclid
  long long a = static_cast<long long>(v % p), m = static_cast<long long>(p);
  long long x0 = 0, x1 = 1, b = m;
  while (a > 1) {
    long long q = a / b;
    long long t = b; b = a % b; a = t;
    t = x0; x0 = x1 - q * x0; x1 = t;
  }
  long long r = x1 % m;
  if (r < 0) r += m;
  // a == gcd; for prime p and v != 0 it is 1
  return static_cast<std::uint64_t>(r);
}

Scalar Scalar::zero(const Field& f) {
  return f.is_fp() ? make_fp(0, f.p) : make_rat(mpq_class(0));
}

Scalar Scalar::one(const Field& f) {
  return f.is_fp() ? make_fp(1 % f.p, f.p) : make_rat(mpq_class(1));
}

Scalar Scalar::from_int(long long n, const Field& f) {
  if (f.is_fp()) {
    long long r = n % static_cast<long long>(f.p);
    if (r < 0) r += static_cast<long long>(f.p);
    return make_fp(static_cast<std::uint64_t>(r), f.p);
  }
  return make_rat(mpq_class(static_cast<long>(n)));
}

Scalar Scalar::from_mpq(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return make_rat(c);
}

Scalar Scalar::parse(const std::string& s, const Field& f) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw Error("BadScalar", "cannot parse scalar '" + s + "'");
  q.canonicalize();
  if (f.is_rational()) return make_rat(q);
  mpz_class num = q.get_num(), den = q.get_den();
  mpz_class pz(static_cast<unsigned long>(f.p));
  mpz_class nr = num % pz; if (nr < 0) nr += pz;
  mpz_class dr = den % pz;
  if (dr == 0) throw Error("BadScalar", "denominator divisible by p in '" + s + "'");
  std::uint64_t n64 = nr.get_ui();
  std::uint64_t d64 = dr.get_ui();
  return make_fp(n64 * fp_inv(d64, f.p) % f.p, f.p);
}

bool Scalar::is_zero() const {
  if (auto* e = std::get_if<Fp>(&rep_)) return e->v == 0;
  return std::get<mpq_class>(rep_) == 0;
}

bool Scalar::is_one() const {
  if (auto* e = std::get_if<Fp>(&rep_)) return e->p == 0 ? e->v == 1 : e->v == 1 % e->p;
  return std::get<mpq_class>(rep_) == 1;
}

void Scalar::align(Scalar& a, Scalar& b) {
  if (a.is_untyped() && !b.is_untyped()) {
    long long v = static_cast<long long>(std::get<Fp>(a.rep_).v);
    a = b.is_rational() ? make_rat(mpq_class(static_cast<long>(v)))
                        : from_int(v, Field{b.fp_mod()});
  } else if (b.is_untyped() && !a.is_untyped()) {
    align(b, a);
  }
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar a = *this, b = o;
  align(a, b);
  if (auto* x = std::get_if<Fp>(&a.rep_)) {
    const auto& y = std::get<Fp>(b.rep_);
    if (x->p == 0) return make_fp(x->v + y.v, 0);
    return make_fp((x->v + y.v) % x->p, x->p);
  }
  return make_rat(std::get<mpq_class>(a.rep_) + std::get<mpq_class>(b.rep_));
}

Scalar Scalar::operator-() const {
  if (auto* x = std::get_if<Fp>(&rep_)) {
    if (x->p == 0) return make_fp(static_cast<std::uint64_t>(-static_cast<long long>(x->v)), 0);
    return make_fp(x->v == 0 ? 0 : x->p - x->v, x->p);
  }
  return make_rat(-std::get<mpq_class>(rep_));
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar a = *this, b = o;
  align(a, b);
  if (auto* x = std::get_if<Fp>(&a.rep_)) {
    const auto& y = std::get<Fp>(b.rep_);
    if (x->p == 0)
      return make_fp(static_cast<std::uint64_t>(static_cast<long long>(x->v) *
                                                static_cast<long long>(y.v)),
                     0);
    return make_fp(x->v * y.v % x->p, x->p);
  }
  return make_rat(std::get<mpq_class>(a.rep_) * std::get<mpq_class>(b.rep_));
}

Scalar Scalar::inv() const {
  if (auto* x = std::get_if<Fp>(&rep_)) {
    if (x->p == 0) {
      if (x->v == 1) return *this;
      if (static_cast<long long>(x->v) == -1) return *this;
      throw Error("DivisionByZero", "inverse of untyped integer");
    }
    return make_fp(fp_inv(x->v, x->p), x->p);
  }
  const auto& q = std::get<mpq_class>(rep_);
  if (q == 0) throw Error("DivisionByZero", "inverse of rational 0");
  return make_rat(1 / q);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

bool Scalar::operator==(const Scalar& o) const {
  Scalar a = *this, b = o;
  align(a, b);
  if (auto* x = std::get_if<Fp>(&a.rep_)) {
    const auto& y = std::get<Fp>(b.rep_);
    return x->v == y.v;  // aligned: same modulus
  }
  return std::get<mpq_class>(a.rep_) == std::get<mpq_class>(b.rep_);
}

std::string Scalar::str() const {
  if (auto* x = std::get_if<Fp>(&rep_)) {
    if (x->p == 0) return std::to_string(static_cast<long long>(x->v));
    return std::to_string(x->v);
  }
  return std::get<mpq_class>(rep_).get_str();
}

}  // namespace hcell
