#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "stabilis/errors.hpp"
#include "stabilis/poly_text.hpp"

using namespace stabilis;

namespace {

std::vector<Scalar> point(oracle::Gen& g, std::size_t n) {
  std::vector<Scalar> p;
  for (std::size_t k = 0; k < n; ++k) p.push_back(g.gaussian(7));
  return p;
}

}  // namespace

TEST_CASE("grlex puts higher total degree first") {
  MPoly f = parse_polynomial("1+z1+z2^2+z1*z2", 2);
  std::vector<Exponent> order;
  for (const auto& [e, c] : f.terms()) order.push_back(e);
  CHECK(order.front() == Exponent{1, 1});
  CHECK(order.back() == Exponent{0, 0});
}

TEST_CASE("evaluation is a ring homomorphism") {
  oracle::Gen g(11);
  for (int k = 0; k < 100; ++k) {
    std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
    Exponent box(n, 2);
    MPoly f = g.mpoly(box, 9), h = g.mpoly(box, 9);
    auto p = point(g, n);
    CHECK((f * h).evaluate(p) == f.evaluate(p) * h.evaluate(p));
    CHECK((f + h).evaluate(p) == f.evaluate(p) + h.evaluate(p));
    CHECK(f * h == h * f);
  }
}

TEST_CASE("Leibniz rule") {
  oracle::Gen g(12);
  for (int k = 0; k < 100; ++k) {
    MPoly f = g.mpoly({2, 3}, 9), h = g.mpoly({3, 1}, 9);
    for (std::size_t j = 0; j < 2; ++j) CHECK((f * h).derivative(j) == f.derivative(j) * h + f * h.derivative(j));
  }
}

TEST_CASE("composition agrees with evaluation") {
  oracle::Gen g(13);
  for (int k = 0; k < 60; ++k) {
    MPoly f = g.mpoly({2, 2}, 5);
    std::vector<MPoly> images{g.mpoly({1, 1, 1}, 5), g.mpoly({1, 0, 2}, 5)};
    MPoly c = f.compose(images, 3);
    auto p = point(g, 3);
    CHECK(c.evaluate(p) == f.evaluate({images[0].evaluate(p), images[1].evaluate(p)}));
  }
}

TEST_CASE("degrees, shift and remap") {
  MPoly f = parse_polynomial("z1^3*z2+z2^4+2", 2);
  CHECK(f.degrees() == Exponent{3, 4});
  CHECK(f.total_degree() == 4);
  CHECK(f.degree(0) == 3);
  CHECK(MPoly(2).degree(0) == -1);
  CHECK_THROWS_AS(MPoly(2).degrees(), Error);
  CHECK(f.shift({1, 0}) == f * MPoly::variable(2, 0));
  MPoly r = f.remap({1, 0}, 2);
  CHECK(r == parse_polynomial("z2^3*z1+z1^4+2", 2));
  CHECK_FALSE(f.multi_affine());
  CHECK(parse_polynomial("z1*z2+z1", 2).multi_affine());
}

TEST_CASE("real and imaginary parts") {
  oracle::Gen g(14);
  for (int k = 0; k < 50; ++k) {
    MPoly f = g.mpoly({2, 2}, 9);
    CHECK(f.real_part() + f.imag_part() * Scalar::i() == f);
    CHECK(f.real_part().is_real());
    CHECK((f * f.conj()).imag_part().is_zero() == (f * f.conj()).is_real());
  }
}

TEST_CASE("mismatched rings are rejected") {
  CHECK_THROWS_AS(MPoly::variable(2, 0) + MPoly::variable(3, 0), DimensionError);
  MPoly f(2);
  CHECK_THROWS_AS(f.add_term({1}, Scalar(1)), DimensionError);
}
