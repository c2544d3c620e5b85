#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stabilis/mpoly.hpp"
#include "stabilis/multivariate.hpp"
#include "stabilis/sampling.hpp"

namespace stabilis {

enum class OperatorKind { Table, Diagonal, Differential, Composition };
std::string to_string(OperatorKind k);

struct DifferentialTerm {
  Scalar coeff;
  Exponent zexp;  // multiplier z^zexp
  Exponent dexp;  // derivative order
};

// Linear map on the polynomials of degree at most kappa, stored as monomial images.
class LinearOperatorSpec {
 public:
  using ImageMap = std::map<Exponent, MPoly, GrlexGreater>;

  LinearOperatorSpec() = default;

  static LinearOperatorSpec table(const Exponent& kappa, ImageMap images, std::size_t out_nvars);
  static LinearOperatorSpec table(const Exponent& kappa, ImageMap images) {
    return table(kappa, std::move(images), kappa.size());
  }
  static LinearOperatorSpec diagonal(const Exponent& kappa, const std::function<Scalar(const Exponent&)>& value);
  static LinearOperatorSpec differential(const Exponent& kappa, const std::vector<DifferentialTerm>& terms);
  static LinearOperatorSpec identity(const Exponent& kappa);
  // outer after inner.
  static LinearOperatorSpec compose(const LinearOperatorSpec& outer, const LinearOperatorSpec& inner);

  std::size_t nvars() const { return kappa_.size(); }
  std::size_t out_nvars() const { return out_nvars_; }
  const Exponent& kappa() const { return kappa_; }
  OperatorKind kind() const { return kind_; }
  const ImageMap& images() const { return images_; }
  const MPoly& image(const Exponent& alpha) const;
  bool is_real() const;
  // Componentwise maximum degree over the images.
  Exponent codomain_degree() const;

  // Same operator restricted to a smaller box.
  LinearOperatorSpec restricted(const Exponent& kappa) const;

  friend bool operator==(const LinearOperatorSpec& a, const LinearOperatorSpec& b) {
    return a.kappa_ == b.kappa_ && a.out_nvars_ == b.out_nvars_ && a.images_ == b.images_;
  }

 private:
  Exponent kappa_;
  std::size_t out_nvars_ = 0;
  OperatorKind kind_ = OperatorKind::Table;
  ImageMap images_;
};

MPoly apply(const LinearOperatorSpec& T, const MPoly& f);

// Variables of every symbol: z_1..z_m of the codomain, then w_1..w_n.
MPoly algebraic_symbol(const LinearOperatorSpec& T, const Exponent& kappa);
inline MPoly algebraic_symbol(const LinearOperatorSpec& T) { return algebraic_symbol(T, T.kappa()); }
// T[(1 - zw)^kappa].
MPoly alt_symbol(const LinearOperatorSpec& T, const Exponent& kappa);
// G_T(z, -w).
MPoly reflected_symbol(const LinearOperatorSpec& T, const Exponent& kappa);
// w^kappa G(z, -1/w) for a polynomial G in the symbol variables.
MPoly reciprocal_in_w(const MPoly& G, std::size_t nz, const Exponent& kappa);
// w^kappa G_T(z, -1/w) == (-1)^|kappa| T[(1 - zw)^kappa].
bool alt_symbol_identity(const LinearOperatorSpec& T, const Exponent& kappa);

struct RangeInfo {
  std::size_t rank = 0;
  // Images that form a basis of the range, in grlex order of their source monomials.
  std::vector<MPoly> basis;
};

RangeInfo range_dimension(const LinearOperatorSpec& T);

enum class PreserverVerdict { PreserverDegenerate, PreserverSymbolStable, NotPreserver, Inconclusive };
std::string to_string(PreserverVerdict v);

struct Refuter {
  std::vector<Scalar> W;
  MPoly f;
  MPoly image;
  MultiVerdict verdict;
};

struct CertificationReport {
  PreserverVerdict verdict = PreserverVerdict::Inconclusive;
  std::string branch;  // "a", "b" or "c"
  bool certified = false;
  MPoly symbol;
  std::optional<MultiVerdict> symbol_verdict;
  std::optional<MPoly> reflected;
  std::optional<MultiVerdict> reflected_verdict;
  RangeInfo range;
  std::optional<MultiVerdict> basis_verdict;
  std::optional<ProperPositionResult> basis_pq;
  std::optional<ProperPositionResult> basis_qp;
  std::optional<Refuter> refuter;
  std::string note;
};

CertificationReport certify_complex_preserver(const LinearOperatorSpec& T, const Exponent& kappa,
                                              const SamplingConfig& cfg);
CertificationReport certify_real_preserver(const LinearOperatorSpec& T, const Exponent& kappa,
                                           const SamplingConfig& cfg);

// Searches for a stable f with T(f) refuted, starting from the symbol witness.
std::optional<Refuter> find_refuter(const LinearOperatorSpec& T, const Exponent& kappa,
                                    const MultiVerdict& symbol_verdict, const SamplingConfig& cfg);

// sum over alpha <= beta of (beta)_alpha (-1)^|alpha| T(z^alpha) w^alpha / alpha!
MPoly transcendental_truncation(const LinearOperatorSpec& T, const Exponent& beta);
MultiVerdict transcendental_truncation_check(const LinearOperatorSpec& T, const Exponent& beta,
                                             const SamplingConfig& cfg);

struct TruncationSweep {
  std::vector<Exponent> betas;
  std::vector<MultiVerdict> verdicts;
  std::optional<std::size_t> first_refuted;
  bool passed() const { return !first_refuted; }
};

TruncationSweep certify_transcendental(const LinearOperatorSpec& T, const Exponent& beta_max,
                                       const SamplingConfig& cfg);

// sum over alpha <= beta of binom(beta, alpha) T(z^alpha) w^alpha
MPoly halfplane_symbol_truncation(const LinearOperatorSpec& T, const Exponent& beta);

enum class JensenVariant { Falling, Normalized };
LinearOperatorSpec jensen_operator(const Exponent& beta, const Exponent& kappa,
                                   JensenVariant variant = JensenVariant::Falling);
inline LinearOperatorSpec jensen_operator(const Exponent& beta) { return jensen_operator(beta, beta); }

}  // namespace stabilis
