#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "stabilis/errors.hpp"
#include "stabilis/operators.hpp"
#include "stabilis/poly_text.hpp"

using namespace stabilis;

namespace {

SamplingConfig cfg(std::size_t count = 64) {
  SamplingConfig c;
  c.sample_count = count;
  return c;
}

LinearOperatorSpec from_table(const Exponent& kappa, const std::vector<std::string>& images) {
  LinearOperatorSpec::ImageMap m;
  std::size_t k = 0;
  for_each_below(kappa, [&](const Exponent& e) { m[e] = parse_polynomial(images.at(k++), kappa.size()); });
  return LinearOperatorSpec::table(kappa, m);
}

}  // namespace

TEST_CASE("application is linear and matches the image table") {
  oracle::Gen g(61);
  for (int k = 0; k < 50; ++k) {
    auto T = g.table({2, 2}, {2, 1}, 5);
    MPoly f = g.mpoly({2, 2}, 5), h = g.mpoly({2, 2}, 5);
    Scalar c = g.gaussian(4);
    CHECK(apply(T, f) == oracle::apply(T, f));
    CHECK(apply(T, f + h * c) == apply(T, f) + apply(T, h) * c);
  }
  auto T = LinearOperatorSpec::identity({1});
  CHECK_THROWS(apply(T, parse_polynomial("z1^2", 1)));
}

TEST_CASE("differential builder") {
  // z d^2/dz^2 + 3 on degree three.
  auto T = LinearOperatorSpec::differential({3}, {{Scalar(1), {1}, {2}}, {Scalar(3), {0}, {0}}});
  CHECK(apply(T, parse_polynomial("z1^3", 1)) == parse_polynomial("6*z1^2+3*z1^3", 1));
  CHECK(apply(T, parse_polynomial("z1", 1)) == parse_polynomial("3*z1", 1));
  CHECK(T.codomain_degree() == Exponent{3});
}

TEST_CASE("composition agrees with sequential application") {
  oracle::Gen g(62);
  for (int k = 0; k < 20; ++k) {
    auto inner = g.table({2}, {2}, 4);
    auto outer = g.table({2}, {3}, 4);
    auto C = LinearOperatorSpec::compose(outer, inner);
    MPoly f = g.mpoly({2}, 5);
    CHECK(apply(C, f) == apply(outer, apply(inner, f)));
  }
}

TEST_CASE("symbols against binomial expansions") {
  oracle::Gen g(63);
  for (int k = 0; k < 40; ++k) {
    Exponent kappa{static_cast<std::uint32_t>(g.integer(0, 3)), static_cast<std::uint32_t>(g.integer(0, 2))};
    auto T = g.table(kappa, {2, 2}, 5);
    CHECK(algebraic_symbol(T) == oracle::apply_in_z(T, oracle::kernel_power(kappa, oracle::Kernel::ZPlusW)));
    CHECK(alt_symbol(T, kappa) == oracle::apply_in_z(T, oracle::kernel_power(kappa, oracle::Kernel::OneMinusZW)));
    CHECK(alt_symbol_identity(T, kappa));
    MPoly G = algebraic_symbol(T);
    MPoly twice = reciprocal_in_w(reciprocal_in_w(G, 2, kappa), 2, kappa);
    CHECK(twice == (total_degree(kappa) % 2 ? -G : G));
  }
}

TEST_CASE("reflected symbol flips odd w powers") {
  auto T = from_table({2}, {"1", "-z1", "z1^2"});
  CHECK(reflected_symbol(T, {2}) == parse_polynomial("(z1+w1)^2", VarNames::zw(1)));
  CHECK(algebraic_symbol(T) == parse_polynomial("(z1-w1)^2", VarNames::zw(1)));
}

TEST_CASE("range dimension") {
  CHECK(range_dimension(LinearOperatorSpec::identity({2, 1})).rank == 6);
  auto dz = LinearOperatorSpec::differential({3}, {{Scalar(1), {0}, {1}}});
  auto r = range_dimension(dz);
  CHECK(r.rank == 3);
  auto zero = LinearOperatorSpec::diagonal({2}, [](const Exponent&) { return Scalar(0); });
  CHECK(range_dimension(zero).rank == 0);
  auto one = from_table({2}, {"z1+i", "2*z1+2*i", "0"});
  CHECK(range_dimension(one).rank == 1);
}

TEST_CASE("complex certification") {
  auto dz = LinearOperatorSpec::differential({3}, {{Scalar(1), {0}, {1}}});
  auto rep = certify_complex_preserver(dz, {3}, cfg());
  CHECK(rep.verdict == PreserverVerdict::PreserverSymbolStable);
  CHECK(rep.branch == "b");

  auto neg = from_table({2}, {"1", "z1", "-z1^2"});
  auto bad = certify_complex_preserver(neg, {2}, cfg());
  CHECK(bad.verdict == PreserverVerdict::NotPreserver);
  REQUIRE(bad.refuter);
  CHECK(uni_is_stable(upoly_from_mpoly(bad.refuter->f)));
  CHECK(bad.refuter->verdict.refuted());

  auto zero = LinearOperatorSpec::diagonal({2}, [](const Exponent&) { return Scalar(0); });
  CHECK(certify_complex_preserver(zero, {2}, cfg()).verdict == PreserverVerdict::PreserverDegenerate);
  auto rank1 = from_table({1}, {"z1+i", "-i*z1+1"});
  auto r1 = certify_complex_preserver(rank1, {1}, cfg());
  CHECK(r1.symbol_verdict->refuted());
  CHECK(r1.verdict == PreserverVerdict::PreserverDegenerate);
  CHECK(r1.branch == "a");

  SamplingConfig strict = cfg();
  strict.require_certified = true;
  CHECK(certify_complex_preserver(dz, {3}, strict).verdict == PreserverVerdict::Inconclusive);
}

TEST_CASE("real certification branches") {
  auto refl = from_table({2}, {"1", "-z1", "z1^2"});
  auto rep = certify_real_preserver(refl, {2}, cfg());
  CHECK(rep.branch == "c");
  auto id = LinearOperatorSpec::identity({2});
  CHECK(certify_real_preserver(id, {2}, cfg()).branch == "b");
}

TEST_CASE("transcendental truncations") {
  oracle::Gen g(64);
  auto T = g.table({2, 2}, {1, 2}, 4);
  for_each_below(Exponent{2, 2}, [&](const Exponent& beta) {
    CHECK(transcendental_truncation(T, beta) == alt_symbol(T, beta));
    CHECK(halfplane_symbol_truncation(T, beta) == oracle::apply_in_z(T, oracle::kernel_power(beta, oracle::Kernel::OnePlusZW)));
  });
  auto sweep = certify_transcendental(LinearOperatorSpec::identity({2}), {2}, cfg());
  CHECK(sweep.passed());
  CHECK(sweep.betas.size() == 3);
  auto neg = from_table({2}, {"1", "z1", "-z1^2"});
  auto bad = certify_transcendental(neg, {2}, cfg());
  REQUIRE(bad.first_refuted);
  CHECK(bad.betas[*bad.first_refuted] == Exponent{2});
}

TEST_CASE("Jensen multipliers") {
  auto J = jensen_operator({3}, {3}, JensenVariant::Normalized);
  // (3)_2 / 3^2 = 6/9.
  CHECK(apply(J, parse_polynomial("z1^2", 1)) == parse_polynomial("2/3*z1^2", 1));
  auto F = jensen_operator({3});
  CHECK(apply(F, parse_polynomial("z1^3", 1)) == parse_polynomial("6*z1^3", 1));
  CHECK(jensen_multiplier({0, 2}, {1, 2}) == mpq_class(1, 2));
}
