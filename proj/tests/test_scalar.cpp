#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "homleib/scalar.hpp"

using namespace homleib;

TEST_CASE("field construction validates the modulus") {
  CHECK_NOTHROW(Field::prime(3));
  CHECK_NOTHROW(Field::prime(7919));
  CHECK_THROWS_AS(Field::prime(2), PreconditionError);  // characteristic 2 rejected
  CHECK_THROWS_AS(Field::prime(4), PreconditionError);
  CHECK_THROWS_AS(Field::prime(1), PreconditionError);
  CHECK_THROWS_AS(Field::prime(-5), PreconditionError);
}

TEST_CASE("rational scalars stay reduced with positive denominator") {
  auto q = Field::rationals();
  Scalar a = Scalar::parse(q, "6/4");
  CHECK(a.to_string() == "3/2");
  Scalar b = Scalar::parse(q, "-6/4");
  CHECK(b.to_string() == "-3/2");
  CHECK((a + b).is_zero());
  CHECK((a / b).to_string() == "-1");
  CHECK(Scalar::parse(q, "0/17").is_zero());
}

TEST_CASE("parse rejects garbage") {
  auto q = Field::rationals();
  CHECK_THROWS_AS(Scalar::parse(q, ""), ParseError);
  CHECK_THROWS_AS(Scalar::parse(q, "x"), ParseError);
  CHECK_THROWS_AS(Scalar::parse(Field::prime(5), "2x"), ParseError);
}

TEST_CASE("mod-p arithmetic") {
  auto f5 = Field::prime(5);
  Scalar a = Scalar::from_int(f5, 7);
  CHECK(a.residue() == 2);
  CHECK((-a).residue() == 3);
  CHECK((a.inverse() * a).is_one());
  CHECK(Scalar::parse(f5, "3/4").residue() == 2);  // 3 * 4^{-1} = 3*4 = 12 = 2
  CHECK_THROWS_AS(Scalar::zero(f5).inverse(), PreconditionError);
}

TEST_CASE("mixed-field arithmetic is rejected") {
  Scalar a = Scalar::from_int(Field::rationals(), 1);
  Scalar b = Scalar::from_int(Field::prime(3), 1);
  CHECK_THROWS_AS(a + b, FieldMismatchError);
  CHECK_THROWS_AS(a == b, FieldMismatchError);
}

TEST_CASE("field axioms on random samples") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 20);
  auto q = Field::rationals();
  for (int iter = 0; iter < 200; ++iter) {
    Scalar a = Scalar::from_int(q, num(rng)) / Scalar::from_int(q, den(rng));
    Scalar b = Scalar::from_int(q, num(rng)) / Scalar::from_int(q, den(rng));
    Scalar c = Scalar::from_int(q, num(rng)) / Scalar::from_int(q, den(rng));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK((a - b) + b == a);
    if (!a.is_zero()) CHECK((b / a) * a == b);
  }
  for (std::int64_t p : {3, 5, 7}) {
    auto fp = Field::prime(p);
    for (int iter = 0; iter < 100; ++iter) {
      Scalar a = Scalar::from_int(fp, num(rng));
      Scalar b = Scalar::from_int(fp, num(rng));
      CHECK(a + b == b + a);
      if (!a.is_zero()) CHECK((b / a) * a == b);
    }
  }
}

TEST_CASE("string round-trip") {
  auto q = Field::rationals();
  for (const char* s : {"0", "1", "-1", "3/4", "-22/7", "123456789123456789"}) {
    CHECK(Scalar::parse(q, s).to_string() == s);
  }
}

TEST_CASE("pow") {
  auto q = Field::rationals();
  Scalar two = Scalar::from_int(q, 2);
  CHECK(two.pow(0).is_one());
  CHECK(two.pow(10) == Scalar::from_int(q, 1024));
  CHECK(two.pow(-2) == Scalar::parse(q, "1/4"));
}
