#pragma once

#include <optional>
#include <vector>

#include "stabilis/mpoly.hpp"
#include "stabilis/multivariate.hpp"
#include "stabilis/operators.hpp"
#include "stabilis/poly_text.hpp"

namespace stabilis {

// Flat positions of the polarized variables z_ij, blocks contiguous per i.
class PolarizedVars {
 public:
  explicit PolarizedVars(Exponent kappa);

  const Exponent& kappa() const { return kappa_; }
  std::size_t size() const { return total_; }
  std::size_t block_start(std::size_t i) const { return offsets_[i]; }
  std::size_t flat(std::size_t i, std::size_t j) const;
  // Block that owns flat position k.
  std::size_t block_of(std::size_t k) const;
  VarNames names(const std::string& prefix = "z") const { return VarNames::blocks(kappa_, prefix); }

 private:
  Exponent kappa_;
  std::vector<std::size_t> offsets_;
  std::size_t total_ = 0;
};

MPoly polarize(const MPoly& f, const Exponent& kappa);
MPoly project(const MPoly& F, const Exponent& kappa);
// Symmetrizes every block: polarize(project(F)).
MPoly symmetrize(const MPoly& F, const Exponent& kappa);

// Pi_gamma-up . T . Pi_kappa-down on the multi-affine space.
LinearOperatorSpec polarize_operator(const LinearOperatorSpec& T, const Exponent& kappa, const Exponent& gamma);
inline LinearOperatorSpec polarize_operator(const LinearOperatorSpec& T) {
  return polarize_operator(T, T.kappa(), T.codomain_degree());
}
// T == Pi_gamma-down . Pi(T) . Pi_kappa-up on every monomial of the box.
bool reconstruction_check(const LinearOperatorSpec& T, const LinearOperatorSpec& PT, const Exponent& kappa,
                          const Exponent& gamma);

bool polarized_symbol_identity_check(const LinearOperatorSpec& T, const Exponent& kappa, const Exponent& gamma);
inline bool polarized_symbol_identity_check(const LinearOperatorSpec& T) {
  return polarized_symbol_identity_check(T, T.kappa(), T.codomain_degree());
}

struct GwsReport {
  MPoly polarized;
  MultiVerdict original;
  MultiVerdict lifted;
  // Refutation of the lift along the diagonal image of the original witness line.
  std::optional<MultiVerdict> transported;
  bool transport_exact = false;
  bool agree = false;
};

GwsReport gws_consistency_check(const MPoly& f, const Exponent& kappa, const SamplingConfig& cfg);

}  // namespace stabilis
