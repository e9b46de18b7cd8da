#include <doctest.h>

#include "hcell/fp_poly.hpp"
#include "hcell/matrix.hpp"
#include "hcell/scalar.hpp"

using namespace hcell;

TEST_CASE("prime field arithmetic") {
  Field f = Field::fp(257);
  Scalar a = Scalar::from_int(200, f), b = Scalar::from_int(100, f);
  CHECK((a + b).fp_value() == 43);
  CHECK((a * b).fp_value() == 200 * 100 % 257);
  CHECK((a * a.inv()).is_one());
  CHECK((-a + a).is_zero());
  CHECK(Scalar::parse("-1", f).fp_value() == 256);
  CHECK(Scalar::parse("1/2", f) * Scalar::from_int(2, f) == Scalar::one(f));
  CHECK_THROWS_AS(Field::fp(256), Error);
}

TEST_CASE("rational arithmetic") {
  Field f = Field::rationals();
  Scalar a = Scalar::parse("2/3", f), b = Scalar::parse("-1/6", f);
  CHECK((a + b).str() == "1/2");
  CHECK((a * b).str() == "-1/9");
  CHECK((a / b).str() == "-4");
  // untyped zero coerces into either field
  Scalar z;
  CHECK((z + a) == a);
  CHECK((z * a).is_zero());
}

TEST_CASE("rref rank inverse nullspace over F_p and Q") {
  for (Field f : {Field::fp(13), Field::rationals()}) {
    Matrix m(3, 3, f);
    int vals[3][3] = {{2, 1, 0}, {0, 1, 1}, {2, 2, 1}};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m.at(i, j) = Scalar::from_int(vals[i][j], f);
    CHECK(m.rank() == 2);
    Matrix ns = m.nullspace();
    CHECK(ns.cols() == 1);
    CHECK((m * ns).is_zero());

    Matrix inv_in(2, 2, f);
    inv_in.at(0, 0) = Scalar::from_int(1, f);
    inv_in.at(0, 1) = Scalar::from_int(2, f);
    inv_in.at(1, 0) = Scalar::from_int(3, f);
    inv_in.at(1, 1) = Scalar::from_int(4, f);
    auto inv = inv_in.inverse();
    REQUIRE(inv.has_value());
    CHECK((*inv * inv_in).is_identity());

    auto sol = m.solve(m.block(0, 0, 3, 1));
    REQUIRE(sol.has_value());
    CHECK(m * *sol == m.block(0, 0, 3, 1));
  }
}

TEST_CASE("kronecker product shape and values") {
  Field f = Field::fp(7);
  Matrix a = Matrix::identity(2, f);
  a.at(0, 1) = Scalar::from_int(3, f);
  Matrix b(2, 2, f);
  b.at(0, 0) = Scalar::from_int(2, f);
  b.at(1, 1) = Scalar::from_int(5, f);
  Matrix k = Matrix::kron(a, b);
  CHECK(k.rows() == 4);
  CHECK(k.at(0, 2).fp_value() == 6);  // a(0,1)*b(0,0)
  CHECK(k.at(1, 3).fp_value() == 15 % 7);
}

TEST_CASE("echelon quotient bookkeeping") {
  Field f = Field::fp(101);
  Echelon e(4, f);
  CHECK(e.insert({{0, Scalar::one(f)}, {1, Scalar::from_int(2, f)}}));
  CHECK(e.insert({{2, Scalar::one(f)}, {3, Scalar::one(f)}}));
  CHECK_FALSE(e.insert({{0, Scalar::from_int(3, f)}, {1, Scalar::from_int(6, f)}}));
  CHECK(e.rank() == 2);
  auto frees = e.free_coordinates();
  CHECK(frees == std::vector<int>{1, 3});
  auto red = e.reduce({{0, Scalar::one(f)}});
  REQUIRE(red.size() == 1);
  CHECK(red[0].first == 1);
}

TEST_CASE("fp polynomial factorization") {
  // x^2+1 splits over F_13 (roots 5, 8) but is irreducible over F_7
  FpPoly f13{13, {1, 0, 1}};
  auto roots = poly_roots(f13);
  CHECK(roots == std::vector<std::uint64_t>{5, 8});
  FpPoly f7{7, {1, 0, 1}};
  auto fac = poly_factor(f7);
  REQUIRE(fac.size() == 1);
  CHECK(fac[0].first.deg() == 2);

  // (x-1)^2 (x-2) over F_97
  FpPoly g{97, {0, 0, 0, 1}};  // placeholder, build product
  FpPoly x1{97, {96, 1}}, x2{97, {95, 1}};
  g = poly_mul(poly_mul(x1, x1), x2);
  auto gf = poly_factor(g);
  REQUIRE(gf.size() == 2);
  CHECK(gf[0].first.deg() == 1);
  CHECK(((gf[0].second == 2 && gf[1].second == 1) || (gf[0].second == 1 && gf[1].second == 2)));
}

TEST_CASE("discrete log and roots of unity") {
  std::uint64_t p = 257;
  std::uint64_t g = fp_primitive_root(p);
  auto d = fp_dlog(g, fp_pow(g, 123, p), p);
  REQUIRE(d.has_value());
  CHECK(*d % (p - 1) == 123);
  std::uint64_t w = fp_root_of_unity(2, 257);
  CHECK(w == 256);
  std::uint64_t w3 = fp_root_of_unity(3, 7);
  CHECK(fp_pow(w3, 3, 7) == 1);
  CHECK(w3 != 1);
}
