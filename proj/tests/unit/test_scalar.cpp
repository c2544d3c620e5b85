#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "stabilis/errors.hpp"
#include "stabilis/scalar.hpp"

using namespace stabilis;

TEST_CASE("canonical text") {
  CHECK(Scalar(mpq_class(3, 2)).str() == "3/2");
  CHECK((-Scalar::i()).str() == "-i");
  CHECK(Scalar(0, mpq_class(2, 3)).str() == "2i/3");
  CHECK(Scalar(mpq_class(1, 3), mpq_class(2, 3)).str() == "(1+2i)/3");
  CHECK(Scalar(0).str() == "0");
}

TEST_CASE("parse and print round trip") {
  oracle::Gen g(1);
  for (int k = 0; k < 300; ++k) {
    Scalar s = g.gaussian(50);
    CHECK(parse_scalar(s.str()) == s);
  }
  CHECK(parse_rational("6/4") == mpq_class(3, 2));
  CHECK_THROWS(parse_rational("1/0"));
}

TEST_CASE("field axioms on random Gaussian rationals") {
  oracle::Gen g(2);
  for (int k = 0; k < 300; ++k) {
    Scalar a = g.gaussian(20), b = g.gaussian(20), c = g.gaussian(20);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a * a.conj()).re() == a.norm2());
    CHECK(a.pow(3) == a * a * a);
  }
}

TEST_CASE("modulus bound dominates the modulus") {
  oracle::Gen g(3);
  for (int k = 0; k < 200; ++k) {
    Scalar a = g.gaussian(30);
    mpq_class b = a.abs_bound();
    CHECK(b * b >= a.norm2());
  }
}

TEST_CASE("exact square roots") {
  oracle::Gen g(4);
  for (int k = 0; k < 200; ++k) {
    Scalar a = g.gaussian(15), r;
    REQUIRE(gaussian_sqrt(a * a, r));
    CHECK(r * r == a * a);
  }
  Scalar r;
  CHECK_FALSE(gaussian_sqrt(Scalar(2), r));
  CHECK(gaussian_sqrt(Scalar(0, 2), r));
  CHECK(r * r == Scalar(0, 2));
}
