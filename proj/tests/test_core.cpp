#include <doctest.h>

#include <random>

#include "maxgenus/errors.hpp"
#include "maxgenus/field.hpp"
#include "maxgenus/tparam_poly.hpp"

using namespace maxgenus;

TEST_CASE("prime field inverses") {
  auto f5 = Field::prime(5);
  auto f7 = Field::prime(7);
  CHECK(f5.inv(f5.one()) == f5.one());
  CHECK(f5.residue(f5.inv(f5.from_int(2))) == 3);
  CHECK(f7.residue(f7.inv(f7.from_int(3))) == 5);
  auto q = Field::rationals();
  CHECK(q.inv(q.one()) == q.one());
  CHECK(q.to_string(q.inv(q.from_fraction(-3, 4))) == "-4/3");
}

TEST_CASE("inverse of zero and composite moduli are rejected") {
  auto f5 = Field::prime(5);
  CHECK_THROWS_AS(f5.inv(f5.zero()), DivisionByZero);
  CHECK_THROWS_AS(Field::rationals().inv(Field::rationals().zero()), DivisionByZero);
  CHECK_THROWS_AS(Field::prime(15), InvalidField);
  CHECK_THROWS_AS(Field::prime(1), InvalidField);
  CHECK_THROWS_AS(Field::prime(2147483659ULL), InvalidField);  // prime but too large
  CHECK_THROWS_AS(f5.from_fraction(1, 5), DivisionByZero);
}

TEST_CASE("canonical representatives") {
  auto f7 = Field::prime(7);
  CHECK(f7.residue(f7.from_int(-1)) == 6);
  CHECK(f7.residue(f7.from_int(15)) == 1);
  CHECK(f7.residue(f7.from_fraction(1, 2)) == 4);
  CHECK(f7.from_int(8) == f7.one());
  auto q = Field::rationals();
  auto half = q.from_fraction(2, -4);
  CHECK(q.rational(half) == mpq_class(-1, 2));
  CHECK(q.rational(half).get_den() == 2);
  CHECK(q.to_string(q.parse("6/4")) == "3/2");
  CHECK(q.to_string(q.parse("-10")) == "-10");
  CHECK(f7.to_string(f7.parse("-3")) == "4");
  CHECK_THROWS_AS(q.parse("1/0"), DivisionByZero);
  CHECK_THROWS_AS(q.parse("abc"), ParseError);
}

TEST_CASE("property: x * inverse(x) = 1 over many primes") {
  std::mt19937_64 rng(7);
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 101u, 32003u, 65521u, 1000003u, 2147483647u}) {
    auto f = Field::prime(p);
    std::uniform_int_distribution<std::uint32_t> dist(1, p - 1);
    for (int i = 0; i < 200; ++i) {
      auto x = f.from_residue(dist(rng));
      CHECK(f.is_one(f.mul(x, f.inv(x))));
    }
  }
  auto q = Field::rationals();
  std::uniform_int_distribution<int> num(-1000, 1000), den(1, 1000);
  for (int i = 0; i < 200; ++i) {
    int n = num(rng);
    if (n == 0) continue;
    auto x = q.from_fraction(n, den(rng));
    CHECK(q.is_one(q.mul(x, q.inv(x))));
  }
}

TEST_CASE("tpoly_mul examples") {
  auto q = Field::rationals();
  TParamPoly one_plus_t(q, {q.one(), q.one()});
  TParamPoly one_minus_t(q, {q.one(), q.from_int(-1)});
  CHECK(tpoly_mul(one_plus_t, one_minus_t) == TParamPoly(q, {q.one(), q.zero(), q.from_int(-1)}));
  CHECK(tpoly_mul(one_plus_t, TParamPoly(q)).is_zero());

  auto f5 = Field::prime(5);
  TParamPoly a(f5, {f5.from_int(2), f5.one()}), b(f5, {f5.from_int(3), f5.one()});
  auto c = tpoly_mul(a, b);
  CHECK(c == TParamPoly(f5, {f5.one(), f5.zero(), f5.one()}));
  CHECK(c.degree() == 2);
  CHECK(c.to_string() == "1 + t^2");
}

TEST_CASE("tparam polys strip trailing zeros and reject mixed fields") {
  auto f5 = Field::prime(5);
  TParamPoly p(f5, {f5.one(), f5.zero(), f5.zero()});
  CHECK(p.degree() == 0);
  CHECK(TParamPoly(f5, {f5.zero()}).coefficients().empty());
  TParamPoly r(Field::rationals(), {Field::rationals().one()});
  CHECK_THROWS_AS(p * r, FieldMismatch);
  CHECK_THROWS_AS(p + r, FieldMismatch);
}

TEST_CASE("property: tparam polys form a commutative ring") {
  auto f = Field::prime(32003);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::uint32_t> coeff(0, 32002);
  std::uniform_int_distribution<int> len(0, 6);
  auto random_poly = [&] {
    std::vector<FieldElement> c(static_cast<std::size_t>(len(rng)));
    for (auto& x : c) x = f.from_residue(coeff(rng));
    return TParamPoly(f, c);
  };
  for (int i = 0; i < 300; ++i) {
    auto a = random_poly(), b = random_poly(), c = random_poly();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a - a == TParamPoly(f));
    if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() == a.degree() + b.degree());
    auto t = f.from_residue(coeff(rng));
    CHECK((a * b).evaluate(t) == f.mul(a.evaluate(t), b.evaluate(t)));
  }
}
