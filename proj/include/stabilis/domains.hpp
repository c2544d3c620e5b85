#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stabilis/mpoly.hpp"
#include "stabilis/multivariate.hpp"
#include "stabilis/operators.hpp"
#include "stabilis/sampling.hpp"

namespace stabilis {

// zeta -> (a zeta + b) / (c zeta + d) with ad - bc != 0.
struct MoebiusMap {
  Scalar a, b, c, d;

  MoebiusMap() : a(1), b(0), c(0), d(1) {}
  MoebiusMap(Scalar a_, Scalar b_, Scalar c_, Scalar d_);

  Scalar determinant() const { return a * d - b * c; }
  // nullopt at the pole.
  std::optional<Scalar> operator()(const Scalar& z) const;
  MoebiusMap inverse() const { return MoebiusMap(d, -b, -c, a); }
  // Rescaled to determinant one when the square root is a Gaussian rational.
  std::optional<MoebiusMap> normalized() const;

  friend bool operator==(const MoebiusMap& x, const MoebiusMap& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

enum class DomainKind { OpenDisk, OpenHalfPlane, ExteriorOfClosedDisk };
std::string to_string(DomainKind k);

// Open circular domain phi^{-1}(H).
class CircularDomain {
 public:
  CircularDomain() : CircularDomain(MoebiusMap()) {}
  explicit CircularDomain(MoebiusMap phi);

  static CircularDomain upper_half_plane() { return CircularDomain(); }
  static CircularDomain unit_disk();
  static CircularDomain unit_disk_exterior();
  // {z : Im(e^{i theta} z) > 0}, theta a multiple of a quarter turn.
  static CircularDomain rotated_half_plane(int quarter_turns);

  const MoebiusMap& phi() const { return phi_; }
  DomainKind kind() const { return kind_; }
  bool convex() const { return kind_ != DomainKind::ExteriorOfClosedDisk; }
  // Disk and exterior: center and squared radius.
  const Scalar& center() const { return center_; }
  const mpq_class& radius2() const { return radius2_; }
  // Half-plane {Re(conj(normal) z) + offset > 0}.
  const Scalar& normal() const { return normal_; }
  const mpq_class& offset() const { return offset_; }

  bool contains(const Scalar& z) const;
  // Membership from the classification inequality alone.
  bool contains_by_shape(const Scalar& z) const;
  CircularDomain reflect() const;
  // Deterministic rational points inside the domain.
  std::vector<Scalar> grid() const;
  std::string describe() const;

 private:
  MoebiusMap phi_;
  DomainKind kind_ = DomainKind::OpenHalfPlane;
  Scalar center_;
  mpq_class radius2_;
  Scalar normal_;
  mpq_class offset_;
};

using DomainProduct = std::vector<CircularDomain>;

// "H", "D", "Dext", "H@90", "H@pi/2"; comma separated for products.
CircularDomain parse_domain(const std::string& text);
DomainProduct parse_domain_list(const std::string& text);
DomainProduct reflect(const DomainProduct& domains);

// prod (c_i z_i + d_i)^kappa_i f(m_1(z_1), ..., m_n(z_n)).
MPoly moebius_transform(const MPoly& f, const std::vector<MoebiusMap>& maps, const Exponent& kappa);
// Maps H-stable polynomials to domain-stable ones.
MPoly phi_kappa_transform(const MPoly& f, const DomainProduct& domains, const Exponent& kappa);
// Inverse direction, up to the constant prod det_i^kappa_i.
MPoly phi_kappa_inverse(const MPoly& f, const DomainProduct& domains, const Exponent& kappa);
Scalar roundtrip_constant(const DomainProduct& domains, const Exponent& kappa);

struct DomainVerdict {
  MPoly transported;
  MultiVerdict halfplane;
  std::size_t direct_samples = 0;
  // Exact zero inside the domain product.
  std::optional<std::vector<Scalar>> point;
  bool found_directly = false;
  // Direct zero also vanishes after transport.
  bool consistent = true;

  bool refuted() const { return point.has_value() || halfplane.refuted(); }
  bool passed() const { return !refuted() && halfplane.passed(); }
  bool certified() const { return passed() && halfplane.certified(); }
};

DomainVerdict check_domain_stability(const MPoly& f, const DomainProduct& domains, const Exponent& kappa,
                                     const SamplingConfig& cfg);
inline DomainVerdict check_domain_stability(const MPoly& f, const DomainProduct& domains,
                                            const SamplingConfig& cfg) {
  return check_domain_stability(f, domains, f.is_zero() ? Exponent(f.nvars(), 0) : f.degrees(), cfg);
}

struct NKappaReport {
  DomainVerdict stability;
  bool degree_ok = true;
  std::vector<std::size_t> degree_failures;
  // Support projected onto the non-convex coordinates.
  std::vector<Exponent> maximal_support;
  bool unique_max = true;
  bool member() const { return degree_ok && stability.passed(); }
};

NKappaReport n_kappa_membership(const MPoly& f, const DomainProduct& domains, const Exponent& kappa,
                                const SamplingConfig& cfg);

struct LeeYangReport {
  NKappaReport inner;
  NKappaReport outer;
  bool member() const { return inner.member() && outer.member(); }
};

LeeYangReport lee_yang_membership(const MPoly& f, const Exponent& kappa, const DomainProduct& domains,
                                  const SamplingConfig& cfg);

// T applied in z to prod_i k_i^kappa_i, with
// k_i = (a z_i + b)(c w_i + d) + sign (a w_i + b)(c z_i + d).
MPoly domain_symbol(const LinearOperatorSpec& T, const Exponent& kappa, const DomainProduct& domains,
                    int sign = 1);

enum class SymbolReduction { None, ZPlusW, OnePlusZW, OneMinusZW, ZMinusW };
std::string to_string(SymbolReduction r);

struct ReductionReport {
  SymbolReduction kind = SymbolReduction::None;
  Scalar constant;
  MPoly reference = MPoly(0);  // T applied to the reduced kernel
  bool exact = false;
};

ReductionReport domain_symbol_reduction(const LinearOperatorSpec& T, const Exponent& kappa,
                                        const DomainProduct& domains, int sign = 1);

struct DomainCertification {
  PreserverVerdict verdict = PreserverVerdict::Inconclusive;
  std::string branch;
  bool certified = false;
  RangeInfo range;
  MPoly symbol;
  std::optional<DomainVerdict> symbol_verdict;
  std::optional<DomainVerdict> basis_verdict;
  // Lee-Yang only: plus and minus symbols on the domains and their reflections.
  std::optional<MPoly> minus_symbol;
  std::optional<DomainVerdict> plus_reflected;
  std::optional<DomainVerdict> minus_inner;
  std::optional<DomainVerdict> minus_reflected;
  bool out_of_scope = false;
  std::string note;
};

DomainCertification certify_domain_preserver(const LinearOperatorSpec& T, const Exponent& kappa,
                                             const DomainProduct& domains, const SamplingConfig& cfg);
DomainCertification certify_lee_yang_preserver(const LinearOperatorSpec& T, const Exponent& kappa,
                                               const DomainProduct& domains, const SamplingConfig& cfg);

struct StrictReport {
  MPoly symbol;
  bool sufficient = false;
  std::size_t samples = 0;
  // First sampled line whose restriction is not strictly stable.
  std::optional<Line> failing_line;
  std::optional<UPoly> failing_restriction;
  std::string conclusion;
};

// Closed upper half-plane power, sampled along lines with real offsets.
StrictReport check_strict_stability(const MPoly& f, const SamplingConfig& cfg);
StrictReport strict_sufficiency_check(const LinearOperatorSpec& T, const Exponent& kappa,
                                      const std::optional<CircularDomain>& domain, const SamplingConfig& cfg);

}  // namespace stabilis
