#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "stabilis/errors.hpp"
#include "stabilis/multivariate.hpp"
#include "stabilis/poly_text.hpp"
#include "stabilis/transforms.hpp"

using namespace stabilis;

namespace {

SamplingConfig cfg(std::size_t count = 64, int threads = 0) {
  SamplingConfig c;
  c.sample_count = count;
  c.threads = threads;
  return c;
}

}  // namespace

TEST_CASE("products of stable linear forms always pass") {
  oracle::Gen g(51);
  for (int k = 0; k < 60; ++k) {
    MPoly f = oracle::stable_product(g, static_cast<std::size_t>(g.integer(1, 3)), 3, 6);
    CHECK_FALSE(check_stability(f, cfg()).refuted());
  }
}

TEST_CASE("refutations come with verifiable witnesses") {
  for (const char* text : {"1+z1*z2", "z1-z2", "-z1^2+2*z1*z2+z2^2", "z1^2+1", "z1*z2*z3+1"}) {
    MPoly f = parse_polynomial(text, 0);
    auto v = check_stability(f, cfg());
    INFO(text);
    REQUIRE(v.refuted());
    CHECK(verify_witness(f, *v.witness));
    if (v.witness->point) CHECK(f.evaluate(*v.witness->point).is_zero());
  }
}

TEST_CASE("witness forgery is caught") {
  MPoly f = parse_polynomial("1+z1*z2", 2);
  auto v = check_stability(f, cfg());
  REQUIRE(v.refuted());
  MultiWitness w = *v.witness;
  CHECK_FALSE(verify_witness(parse_polynomial("(z1+i)*(z2+i)", 2), w));
  w.restriction = w.restriction + UPoly::constant(Scalar(1));
  CHECK_FALSE(verify_witness(f, w));
}

TEST_CASE("verdicts are deterministic and thread independent") {
  oracle::Gen g(52);
  for (int k = 0; k < 30; ++k) {
    MPoly f = g.mpoly({2, 2}, 5);
    if (f.is_zero()) continue;
    auto a = check_stability(f, cfg(64, 1));
    auto b = check_stability(f, cfg(64, 0));
    CHECK(a.status == b.status);
    if (a.witness) CHECK(a.witness->sample_index == b.witness->sample_index);
  }
}

TEST_CASE("a single active variable is decided exactly") {
  auto v = check_stability(parse_polynomial("(z2+i)^3", 3), cfg());
  CHECK(v.status == MultiStatus::ExactStable);
  CHECK(check_stability(MPoly(2), cfg()).status == MultiStatus::ZeroPolynomial);
  CHECK(check_real_stability(parse_polynomial("z1+i*z2", 2), cfg()).status == MultiStatus::NotRealCoefficients);
}

TEST_CASE("line restrictions") {
  MPoly f = parse_polynomial("z1*z2+z1", 2);
  UPoly r = restrict_to_line(f, {1, 2}, std::vector<mpq_class>{0, 1});
  CHECK(r == UPoly(std::vector<Scalar>{Scalar(0), Scalar(2), Scalar(2)}));
  UPoly s = restrict_to_line(f, {0, 1}, std::vector<Scalar>{Scalar::i(), Scalar(0)});
  CHECK(s == UPoly(std::vector<Scalar>{Scalar::i(), Scalar::i()}));
  CHECK_THROWS_AS(restrict_to_line(f, {0, 1}, std::vector<mpq_class>{0, 0}), PreconditionError);
  CHECK_THROWS_AS(restrict_to_line(f, {1, 1}, std::vector<Scalar>{Scalar(0, -1), Scalar(0)}), PreconditionError);
}

TEST_CASE("proper position of multivariate pairs") {
  SamplingConfig c = cfg();
  c.strict_mode = true;
  MPoly f = parse_polynomial("1", 2), g = parse_polynomial("z1+z2", 2);
  auto pq = proper_position_multi(f, g, c);
  CHECK(pq.verdict.passed());
  REQUIRE(pq.lifted);
  CHECK(pq.lifted->passed());
  auto qp = proper_position_multi(g, f, c);
  CHECK(qp.verdict.refuted());
  CHECK(qp.lifted->refuted());
}

TEST_CASE("pencil and Wronskian") {
  auto rep = hko_pencil_check(parse_polynomial("z1+z2", 2), parse_polynomial("z1+z2+1", 2), cfg());
  CHECK(rep.pencil_ok);
  CHECK(rep.consistent);
  CHECK(wronskian_j(parse_polynomial("z1", 1), parse_polynomial("1", 1), 0) == parse_polynomial("1", 1));
}

TEST_CASE("Lieb-Sokal preserves stability") {
  // P + wQ = (z1 + i)(z2 + w + i).
  auto res = lieb_sokal(parse_polynomial("(z1+i)*(z2+i)", 2), parse_polynomial("z1+i", 2), 0, cfg());
  CHECK_FALSE(res.verdict.refuted());
  CHECK(res.output == parse_polynomial("(z1+i)*(z2+i)-1", 2));
  CHECK_THROWS_AS(lieb_sokal(parse_polynomial("z1^2", 1), parse_polynomial("1", 1), 0, cfg()), PreconditionError);
}

TEST_CASE("generated polynomials are stable") {
  oracle::Gen g(53);
  for (int k = 0; k < 40; ++k) {
    Exponent kappa{static_cast<std::uint32_t>(g.integer(0, 3)), static_cast<std::uint32_t>(g.integer(0, 3))};
    auto gen = generate_stable(kappa, {g.upper(4), g.upper(4)}, g.mpoly(kappa, 5));
    CHECK(gen.guaranteed);
    CHECK(gen.epsilon * gen.expansion_bound < 1);
    CHECK_FALSE(check_stability(gen.poly, cfg()).refuted());
  }
  CHECK_THROWS_AS(generate_stable({1}, {Scalar(1)}, MPoly(1)), PreconditionError);
}

TEST_CASE("complex multiples of real stable polynomials") {
  auto r = is_complex_multiple_of_real_stable(parse_polynomial("(2+i)*(z1*z2-1)", 2), cfg());
  CHECK(r.holds());
  CHECK_FALSE(is_complex_multiple_of_real_stable(parse_polynomial("z1+i", 1), cfg()).real_multiple);
}
