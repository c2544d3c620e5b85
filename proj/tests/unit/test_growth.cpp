#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "stabilis/errors.hpp"
#include "stabilis/growth.hpp"
#include "stabilis/poly_text.hpp"

using namespace stabilis;

TEST_CASE("the constant") {
  const double e = std::exp(1.0);
  CHECK(szasz_constant() == doctest::Approx(std::sqrt(2 * e * e - e) / (e - 1)).epsilon(1e-15));
}

TEST_CASE("Stirling sandwich") {
  for (unsigned n = 1; n <= 30; ++n) {
    auto s = stirling_bounds(n);
    CHECK(s.holds);
    CHECK(s.lower <= s.ratio);
    CHECK(s.ratio <= s.upper);
  }
}

TEST_CASE("root sums for (1 + z)^2") {
  UPoly p(std::vector<Scalar>{Scalar(1), Scalar(2), Scalar(1)});
  auto r = szasz_root_sum_check(p);
  CHECK(r.root_sum == doctest::Approx(2));
  CHECK(r.bound == doctest::Approx(14));
  CHECK(r.holds);
  CHECK_THROWS_AS(szasz_root_sum_check(UPoly(std::vector<Scalar>{Scalar(2), Scalar(1)})), PreconditionError);
  CHECK_THROWS_AS(szasz_root_sum_check(UPoly(std::vector<Scalar>{Scalar(1), Scalar(0), Scalar(1)})),
                  PreconditionError);
}

TEST_CASE("first-order sums") {
  auto s = first_order_sums(parse_polynomial("1+2*z1-3*i*z2+z1*z2+4*z1^2", 2));
  CHECK(s.S1 == 5);
  CHECK(s.S2 == 5);
}

TEST_CASE("bounds hold on generated stable polynomials") {
  oracle::Gen g(91);
  SamplingConfig cfg;
  int checked = 0;
  while (checked < 40) {
    Exponent kappa{static_cast<std::uint32_t>(g.integer(0, 3)), static_cast<std::uint32_t>(g.integer(0, 2))};
    auto gen = generate_stable(kappa, {g.upper(3), g.upper(3)}, g.mpoly(kappa, 4));
    Scalar c0 = gen.poly.coeff({0, 0});
    if (c0.is_zero()) continue;
    MPoly f = gen.poly * (Scalar(1) / c0);
    ++checked;
    CHECK(coefficient_bound_check(f, cfg).holds);
    auto K = growth_constants(f, cfg);
    CHECK(K.B == doctest::Approx(2 * szasz_constant()));
    for (double r : {0.5, 1.0, 4.0}) CHECK(growth_bound_check(f, K, r, 12).holds);
  }
}

TEST_CASE("minimal support constants") {
  SamplingConfig cfg;
  MPoly f = parse_polynomial("z1^2*(z2+i)", 2);
  auto K = minimal_support_growth_constants(f, cfg);
  CHECK(growth_bound_check(f, K, 2.0, 12).holds);
  CHECK_THROWS(minimal_support_growth_constants(parse_polynomial("1+z1*z2", 2), cfg));
}

TEST_CASE("normalization is required") {
  SamplingConfig cfg;
  CHECK_THROWS_AS(growth_constants(parse_polynomial("2+z1", 1), cfg), PreconditionError);
}
