#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "stabilis/domains.hpp"
#include "stabilis/errors.hpp"
#include "stabilis/poly_text.hpp"

using namespace stabilis;

namespace {

MoebiusMap random_map(oracle::Gen& g) {
  while (true) {
    Scalar a = g.gaussian(5), b = g.gaussian(5), c = g.gaussian(5), d = g.gaussian(5);
    if (!(a * d - b * c).is_zero()) return MoebiusMap(a, b, c, d);
  }
}

SamplingConfig cfg() { return SamplingConfig{}; }

}  // namespace

TEST_CASE("Moebius inverse") {
  oracle::Gen g(81);
  for (int k = 0; k < 100; ++k) {
    MoebiusMap m = random_map(g);
    Scalar z = g.gaussian(6);
    auto w = m(z);
    if (!w) continue;
    auto back = m.inverse()(*w);
    REQUIRE(back);
    CHECK(*back == z);
  }
  CHECK_THROWS(MoebiusMap(1, 2, 2, 4));
}

TEST_CASE("standard domains") {
  auto D = CircularDomain::unit_disk();
  CHECK(D.kind() == DomainKind::OpenDisk);
  CHECK(D.center() == Scalar(0));
  CHECK(D.radius2() == 1);
  CHECK(D.contains(Scalar(mpq_class(1, 2), mpq_class(1, 2))));
  CHECK_FALSE(D.contains(Scalar(1)));
  auto E = CircularDomain::unit_disk_exterior();
  CHECK(E.kind() == DomainKind::ExteriorOfClosedDisk);
  CHECK(E.contains(Scalar(2)));
  CHECK_FALSE(E.contains(Scalar(0)));
  auto R = CircularDomain::rotated_half_plane(1);
  CHECK(R.contains(Scalar(1)));
  CHECK_FALSE(R.contains(Scalar(-1)));
  CHECK(parse_domain("H@90").contains(Scalar(1)));
  CHECK(parse_domain("H@pi/2").contains(Scalar(1)));
  CHECK(parse_domain_list("D,Dext,H").size() == 3);
  CHECK_THROWS(parse_domain("H@45"));
  CHECK_THROWS(parse_domain("Q"));
}

TEST_CASE("membership from the map agrees with the shape") {
  oracle::Gen g(82);
  for (int k = 0; k < 40; ++k) {
    CircularDomain C(random_map(g));
    for (int j = 0; j < 25; ++j) {
      Scalar z = g.gaussian(6);
      CHECK(C.contains(z) == C.contains_by_shape(z));
    }
    for (const auto& p : C.grid()) CHECK(C.contains(p));
    CircularDomain Rf = C.reflect();
    for (const auto& p : C.grid()) CHECK_FALSE(Rf.contains(p));
  }
}

TEST_CASE("transport roundtrip") {
  oracle::Gen g(83);
  for (int k = 0; k < 30; ++k) {
    DomainProduct doms{CircularDomain(random_map(g)), CircularDomain::unit_disk()};
    Exponent kappa{static_cast<std::uint32_t>(g.integer(0, 3)), static_cast<std::uint32_t>(g.integer(0, 2))};
    MPoly f = g.mpoly(kappa, 5);
    Scalar c = roundtrip_constant(doms, kappa);
    CHECK(c == doms[0].phi().determinant().pow(kappa[0]) * doms[1].phi().determinant().pow(kappa[1]));
    CHECK(phi_kappa_inverse(phi_kappa_transform(f, doms, kappa), doms, kappa) == f * c);
  }
}

TEST_CASE("transport carries stability to the disk") {
  DomainProduct D1{CircularDomain::unit_disk()};
  MPoly f = parse_polynomial("z1+i", 1);
  MPoly g = phi_kappa_transform(f, D1, {1});
  auto v = check_domain_stability(g, D1, {1}, cfg());
  CHECK(v.passed());
  auto bad = check_domain_stability(parse_polynomial("2*z1-1", 1), D1, {1}, cfg());
  CHECK(bad.refuted());
  REQUIRE(bad.point);
  CHECK((*bad.point)[0] == Scalar(mpq_class(1, 2)));
  CHECK(bad.consistent);
}

TEST_CASE("kernel reductions") {
  oracle::Gen g(84);
  auto T = g.table({2, 1}, {1, 1}, 4);
  DomainProduct disks(2, CircularDomain::unit_disk());
  auto red = domain_symbol_reduction(T, {2, 1}, disks);
  CHECK(red.kind == SymbolReduction::OnePlusZW);
  CHECK(red.exact);
  CHECK(red.reference == oracle::apply_in_z(T, oracle::kernel_power({2, 1}, oracle::Kernel::OnePlusZW)));
  DomainProduct H(2, CircularDomain::upper_half_plane());
  auto hr = domain_symbol_reduction(T, {2, 1}, H);
  CHECK(hr.kind == SymbolReduction::ZPlusW);
  CHECK(domain_symbol(T, {2, 1}, H) == algebraic_symbol(T));
  CHECK(domain_symbol_reduction(T, {2, 1}, H, -1).kind == SymbolReduction::ZMinusW);
}

TEST_CASE("Lee-Yang membership") {
  DomainProduct dd(2, CircularDomain::unit_disk());
  CHECK(lee_yang_membership(parse_polynomial("1+z1*z2", 2), {1, 1}, dd, cfg()).member());
  auto no = lee_yang_membership(parse_polynomial("z1+z2", 2), {1, 1}, dd, cfg());
  CHECK_FALSE(no.member());
}

TEST_CASE("domain certification") {
  DomainProduct D1{CircularDomain::unit_disk()};
  auto id = LinearOperatorSpec::identity({2});
  auto rep = certify_domain_preserver(id, {2}, D1, cfg());
  CHECK(rep.verdict == PreserverVerdict::PreserverSymbolStable);
  auto ly = certify_lee_yang_preserver(id, {2}, D1, cfg());
  CHECK(ly.verdict != PreserverVerdict::NotPreserver);
  auto small = certify_lee_yang_preserver(LinearOperatorSpec::identity({1}), {1}, D1, cfg());
  CHECK(small.out_of_scope);
}

TEST_CASE("strict stability") {
  CHECK(check_strict_stability(parse_polynomial("(z1+i)*(z2+i)", 2), cfg()).sufficient);
  auto rep = check_strict_stability(parse_polynomial("z1+z2", 2), cfg());
  CHECK_FALSE(rep.sufficient);
  CHECK(rep.failing_line.has_value());
}
