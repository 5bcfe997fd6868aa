#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dynbase/error.hpp"
#include "dynbase/scalar.hpp"

using namespace dynbase;

TEST_CASE("rational arithmetic is exact and canonical") {
  const Field q = Field::rationals();
  Scalar a = Scalar::of_fraction(1, 3, q);
  Scalar b = Scalar::of_fraction(1, 6, q);
  CHECK((a + b).to_string() == "1/2");
  CHECK((a - b).to_string() == "1/6");
  CHECK((a * b).to_string() == "1/18");
  CHECK((a / b).to_string() == "2");
  CHECK((-a).to_string() == "-1/3");
  CHECK(Scalar::of_fraction(2, -4, q).to_string() == "-1/2"); // positive denominator
  CHECK(Scalar::of_fraction(6, 3, q).to_string() == "2");     // reduced
  CHECK(Scalar::zero(q).is_zero());
  CHECK(Scalar::one(q).is_one());
}

TEST_CASE("rational parse/print round trip") {
  const Field q = Field::rationals();
  for (const char* text : {"0", "1", "-1", "7/3", "-22/7", "1000000000000000000000/7"}) {
    Scalar s = Scalar::parse(text, q);
    CHECK(s.to_string() == text);
    CHECK(Scalar::parse(s.to_string(), q) == s);
  }
  CHECK(Scalar::parse("4/6", q).to_string() == "2/3");
  CHECK_THROWS_AS(Scalar::parse("", q), error);
  CHECK_THROWS_AS(Scalar::parse("x", q), error);
  CHECK_THROWS_AS(Scalar::parse("1/0", q), error);
}

TEST_CASE("division by zero is rejected") {
  const Field q = Field::rationals();
  CHECK_THROWS_AS(Scalar::one(q) / Scalar::zero(q), error);
}

TEST_CASE("prime field arithmetic") {
  const Field f5 = Field::prime(5);
  Scalar a = Scalar::of_int(7, f5); // 2
  CHECK(a.to_string() == "2");
  CHECK((a + a).to_string() == "4");
  CHECK((a * a).to_string() == "4");
  CHECK((a + Scalar::of_int(3, f5)).is_zero());
  CHECK((Scalar::of_int(1, f5) / a).to_string() == "3"); // 2·3 = 6 = 1
  CHECK(Scalar::of_int(-1, f5).to_string() == "4");      // canonical representative
  CHECK(Scalar::of_fraction(1, 2, f5).to_string() == "3");
}

TEST_CASE("field constructors validate the characteristic") {
  CHECK_THROWS_AS(Field::prime(1), error);
  CHECK_THROWS_AS(Field::prime(4), error);
  CHECK_THROWS_AS(Field::prime(91), error); // 7·13
  CHECK(Field::prime(2).p == 2);
  CHECK(Field::prime(97).p == 97);
}

TEST_CASE("field parse") {
  CHECK(Field::parse("rational").is_rational());
  CHECK(Field::parse("prime:7").p == 7);
  CHECK_THROWS_AS(Field::parse("real"), error);
  CHECK_THROWS_AS(Field::parse("prime:6"), error);
}

TEST_CASE("mixing fields throws") {
  Scalar a = Scalar::one(Field::rationals());
  Scalar b = Scalar::one(Field::prime(3));
  CHECK_THROWS_AS(a + b, error);
}
