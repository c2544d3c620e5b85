#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "stabilis/errors.hpp"
#include "stabilis/univariate.hpp"

using namespace stabilis;

namespace {

QPoly q_from_roots(const std::vector<mpq_class>& roots) {
  QPoly p = QPoly::constant(1);
  for (const auto& r : roots) p = p * QPoly(std::vector<mpq_class>{-r, mpq_class(1)});
  return p;
}

unsigned oracle_upper(const UPoly& p) {
  unsigned c = 0;
  for (auto r : oracle::roots(p)) c += r.imag() > 1e-9L * std::max<long double>(1, std::abs(r));
  return c;
}

}  // namespace

TEST_CASE("Sturm counts match constructed real roots") {
  oracle::Gen g(31);
  for (int k = 0; k < 200; ++k) {
    std::vector<mpq_class> roots;
    unsigned d = static_cast<unsigned>(g.integer(1, 7));
    for (unsigned j = 0; j < d; ++j) roots.push_back(g.rational(9));
    QPoly p = q_from_roots(roots);
    // A positive quadratic adds no real roots.
    if (g.coin()) p = p * QPoly(std::vector<mpq_class>{g.positive(5), 0, 1});
    std::sort(roots.begin(), roots.end());
    unsigned distinct = static_cast<unsigned>(std::unique(roots.begin(), roots.end()) - roots.begin());
    CHECK(sturm_count(p) == distinct);
    CHECK(real_root_count_with_multiplicity(p) == d);
    CHECK(isolate_real_roots(p).size() == distinct);
    mpq_class lo = roots.front() - 1, hi = roots.front() + mpq_class(1, 1000000);
    CHECK(sturm_count(p, lo, hi) >= 1);
  }
}

TEST_CASE("square-free factorization reconstructs the input") {
  oracle::Gen g(32);
  for (int k = 0; k < 100; ++k) {
    std::vector<mpq_class> roots;
    for (int j = 0; j < g.integer(1, 6); ++j) roots.push_back(g.rational(4));
    QPoly p = q_from_roots(roots);
    QPoly prod = QPoly::constant(1);
    for (const auto& [f, m] : squarefree_factorization(p)) prod = prod * f.pow(m);
    CHECK(prod == p.monic());
    CHECK(squarefree_part(p).degree() <= p.degree());
  }
}

TEST_CASE("isolating intervals hold exactly one root each") {
  QPoly p = q_from_roots({1, 2, mpq_class(5, 2), -3});
  auto roots = isolate_real_roots(p);
  REQUIRE(roots.size() == 4);
  for (auto r : roots) {
    refine_root(squarefree_part(p), r, mpq_class(1, 1000));
    CHECK((r.exact || r.hi - r.lo <= mpq_class(1, 1000)));
  }
}

TEST_CASE("upper half-plane root count against eigenvalues") {
  oracle::Gen g(33);
  for (int k = 0; k < 300; ++k) {
    UPoly p = g.upoly(static_cast<unsigned>(g.integer(1, 7)), 9);
    if (oracle::classify(p) == oracle::Call::Indeterminate) continue;
    CHECK(count_upper_half_plane_roots(p) == oracle_upper(p));
  }
}

TEST_CASE("witness regions hold the counted roots") {
  oracle::Gen g(34);
  for (int k = 0; k < 100; ++k) {
    std::vector<Scalar> roots{g.upper(5), g.lower(5), Scalar(g.rational(5))};
    UPoly p = oracle::from_roots(Scalar(2, 1), roots);
    auto v = is_stable_uni(p);
    REQUIRE(v.status == UniStatus::NotStable);
    REQUIRE(v.witness);
    CHECK(v.witness->roots_in_region >= 1);
    CHECK(count_roots_above(p, v.witness->im_lower) == v.witness->roots_in_region);
    if (v.witness->exact_root) CHECK(p.eval(*v.witness->exact_root).is_zero());
  }
}

TEST_CASE("exact root recovery") {
  UPoly p = oracle::from_roots(Scalar(1), {Scalar(mpq_class(1, 3), mpq_class(7, 2)), Scalar(-2)});
  auto r = recover_exact_root(p, mpq_class(333333, 1000000), mpq_class(35, 10));
  REQUIRE(r);
  CHECK(*r == Scalar(mpq_class(1, 3), mpq_class(7, 2)));
}

TEST_CASE("proper position and interlacing") {
  QPoly f = q_from_roots({0, 2}), g = q_from_roots({1, 3});
  CHECK(interlace(f, g));
  CHECK(proper_position_uni(f, g) != proper_position_uni(g, f));
  CHECK_FALSE(interlace(q_from_roots({0, 1}), q_from_roots({2, 3})));
  CHECK_THROWS_AS(interlace(QPoly(std::vector<mpq_class>{1, 0, 1}), f), PreconditionError);
  CHECK(wronskian_sign_on_R(wronskian(f, f)) == WronskianSign::Zero);
}

TEST_CASE("strict stability excludes the real axis") {
  CHECK(is_strictly_stable_uni(UPoly(std::vector<Scalar>{Scalar::i(), Scalar(1)})));
  CHECK_FALSE(is_strictly_stable_uni(UPoly(std::vector<Scalar>{Scalar(1), Scalar(1)})));
  CHECK(uni_is_stable(UPoly(std::vector<Scalar>{Scalar(1), Scalar(1)})));
  CHECK_THROWS_AS(is_strictly_stable_uni(UPoly()), PreconditionError);
  CHECK(is_stable_uni(UPoly()).status == UniStatus::ZeroPolynomial);
  CHECK(uni_is_stable(UPoly::constant(Scalar(0, 5))));
}
