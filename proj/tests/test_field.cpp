#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "arknit/field.hpp"

#include "arknit/errors.hpp"
#include "doctest.h"

using namespace arknit;

TEST_CASE("arithmetic modulo 5") {
  PrimeField F(5);
  CHECK(F.p() == 5);
  CHECK(F.valid());
  CHECK(F.add(3, 4) == 2);
  CHECK(F.sub(1, 3) == 3);
  CHECK(F.neg(2) == 3);
  CHECK(F.neg(0) == 0);
  CHECK(F.mul(3, 4) == 2);
  CHECK(F.inv(2) == 3);
  CHECK(F.inv(4) == 4);
  CHECK(F.pow(2, 10) == 4);
  CHECK(F.pow(3, 0) == 1);
  CHECK(F.reduce(-1) == 4);
  CHECK(F.reduce(12) == 2);
  CHECK(F.reduce(-10) == 0);
}

TEST_CASE("small characteristics") {
  PrimeField F2(2);
  CHECK(F2.add(1, 1) == 0);
  CHECK(F2.inv(1) == 1);
  PrimeField F3(3);
  CHECK(F3.mul(2, 2) == 1);
  CHECK(F3.inv(2) == 2);
}

TEST_CASE("invalid modulus is rejected") {
  CHECK_THROWS_AS(PrimeField(1), InputError);
  CHECK_THROWS_AS(PrimeField(6), InputError);
  CHECK_THROWS_AS(PrimeField(0), InputError);
}

TEST_CASE("mixing characteristics is rejected") {
  PrimeField a(3), b(5);
  CHECK_THROWS_AS(require_same(a, b, "test"), InputError);
  require_same(a, PrimeField(3), "test");
}
