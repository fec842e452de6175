#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "theta/format.hpp"

using namespace theta;

TEST_CASE("small and exact-width integers") {
  CHECK(sci_mpz(mpz_class(0)) == "0.00000e0");
  CHECK(sci_mpz(mpz_class(42)) == "4.20000e1");
  CHECK(sci_mpz(mpz_class(999999)) == "9.99999e5");
  CHECK(sci_mpz(mpz_class(-7)) == "-7.00000e0");
}

TEST_CASE("truncation without ties") {
  CHECK(sci_mpz(mpz_class("1234564999")) == "1.23456e9");
  CHECK(sci_mpz(mpz_class("1234567")) == "1.23457e6");
  CHECK(sci_mpz(mpz_class("-1234567")) == "-1.23457e6");
}

TEST_CASE("ties round to even") {
  CHECK(sci_mpz(mpz_class("12345650000")) == "1.23456e10");
  CHECK(sci_mpz(mpz_class("12345750000")) == "1.23458e10");
  CHECK(sci_mpz(mpz_class("1234565000000001")) == "1.23457e15");  // not a tie
}

TEST_CASE("carry propagation") {
  CHECK(sci_mpz(mpz_class("9999995")) == "1.00000e7");
  CHECK(sci_mpz(mpz_class("9999994")) == "9.99999e6");
}

TEST_CASE("configurable significance") {
  CHECK(sci_mpz(mpz_class("987654321"), 3) == "9.88e8");
  CHECK(sci_mpz(mpz_class("42"), 1) == "4e1");
}

TEST_CASE("real values match the integer path") {
  CHECK(sci_real(Real(mpz_class("12345678901234"))) == sci_mpz(mpz_class("12345678901234")));
  CHECK(sci_real(pi()) == "3.14159e0");
  CHECK(sci_real(Real(0)) == "0.00000e0");
  CHECK(sci_real(Real("0.001234564")) == "1.23456e-3");
}

TEST_CASE("fixed-point ratios") {
  CHECK(fixed_real(Real("0.95554"), 4) == "0.9555");
  CHECK(fixed_real(Real("1.00678"), 4) == "1.0068");
  CHECK(fixed_real(Real(2), 4) == "2.0000");
  CHECK(fixed_real(Real("-0.33335"), 3) == "-0.333");
}
