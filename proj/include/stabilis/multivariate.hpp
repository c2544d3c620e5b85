#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stabilis/mpoly.hpp"
#include "stabilis/sampling.hpp"
#include "stabilis/univariate.hpp"

namespace stabilis {

enum class MultiStatus { RefutedWithWitness, PassedSamples, ExactStable, ZeroPolynomial, NotRealCoefficients };
std::string to_string(MultiStatus s);

struct MultiWitness {
  std::vector<mpq_class> lambda;
  std::vector<Scalar> alpha;
  UPoly restriction;
  // Root region of the restriction; absent when it vanishes identically.
  std::optional<UniWitness> root;
  // Exact zero inside the open upper half-plane power.
  std::optional<std::vector<Scalar>> point;
  std::size_t sample_index = 0;
};

struct MultiVerdict {
  MultiStatus status = MultiStatus::ZeroPolynomial;
  std::optional<MultiWitness> witness;
  std::size_t samples = 0;
  std::uint64_t seed = 0;

  bool refuted() const { return status == MultiStatus::RefutedWithWitness; }
  bool passed() const { return status == MultiStatus::PassedSamples || status == MultiStatus::ExactStable; }
  bool certified() const { return status == MultiStatus::ExactStable; }
};

MultiVerdict check_stability(const MPoly& f, const SamplingConfig& cfg);
MultiVerdict check_real_stability(const MPoly& f, const SamplingConfig& cfg);
// Refutation on one given line, or PassedSamples with one sample.
MultiVerdict check_line(const MPoly& f, const std::vector<mpq_class>& lambda, const std::vector<Scalar>& alpha);
MultiVerdict check_line(const MPoly& f, const std::vector<mpq_class>& lambda, const std::vector<mpq_class>& alpha);
// Re-derives the refutation from scratch.
bool verify_witness(const MPoly& f, const MultiWitness& w);
bool in_upper_half_plane(const std::vector<Scalar>& point);

// dg/dz_j * f - g * df/dz_j.
MPoly wronskian_j(const MPoly& g, const MPoly& f, std::size_t j);

struct ProperPositionResult {
  MultiVerdict verdict;                 // stability of g + i f
  std::optional<MultiVerdict> lifted;   // g + z_{n+1} f, strict mode only
  bool transported = false;             // a witness was carried across routes
  // The refutation only exists for the lift; verdict.witness then lives in n + 1 variables.
  bool witness_on_lift = false;
};

// Decides f << g.
ProperPositionResult proper_position_multi(const MPoly& f, const MPoly& g, const SamplingConfig& cfg);

struct PencilMember {
  mpq_class a, b;
  MultiVerdict verdict;
  bool zero = false;
};

struct WronskianViolation {
  std::size_t j;
  std::vector<mpq_class> x;
  mpq_class value;
};

struct PencilReport {
  std::vector<PencilMember> members;
  bool pencil_ok = true;
  bool f_before_g = false;  // f << g passed
  bool g_before_f = false;  // g << f passed
  bool consistent = true;
  std::size_t wronskian_points = 0;
  std::vector<WronskianViolation> wronskian_violations;
};

PencilReport hko_pencil_check(const MPoly& f, const MPoly& g, const SamplingConfig& cfg);

struct LiebSokalResult {
  MPoly output;
  MultiVerdict verdict;
};

// P(z) + w Q(z) must pass sampling and have degree at most one in z_j.
LiebSokalResult lieb_sokal(const MPoly& P, const MPoly& Q, std::size_t j, const SamplingConfig& cfg);

struct GeneratedStable {
  MPoly poly;
  mpq_class epsilon;
  // Sum of |c_alpha| Y^(alpha - kappa) over the expansion of f in powers of z + W.
  mpq_class expansion_bound;
  bool guaranteed = true;
};

GeneratedStable generate_stable(const Exponent& kappa, const std::vector<Scalar>& W, const MPoly& f,
                                const std::optional<mpq_class>& epsilon = std::nullopt);

struct ComplexMultipleResult {
  bool real_multiple = false;
  Scalar factor;
  MPoly normalized;
  MultiVerdict verdict;
  bool holds() const { return real_multiple && verdict.passed(); }
};

ComplexMultipleResult is_complex_multiple_of_real_stable(const MPoly& f, const SamplingConfig& cfg);

}  // namespace stabilis
