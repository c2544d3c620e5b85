#include "stabilis/combinatorics.hpp"

#include "stabilis/errors.hpp"

namespace stabilis {

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class binomial(const Exponent& kappa, const Exponent& alpha) {
  if (kappa.size() != alpha.size()) throw DimensionError("multi-index length mismatch");
  mpz_class r = 1;
  for (std::size_t k = 0; k < kappa.size(); ++k) {
    if (alpha[k] > kappa[k]) return 0;
    r *= binomial(kappa[k], alpha[k]);
  }
  return r;
}

mpz_class falling_factorial(const Exponent& beta, const Exponent& alpha) {
  if (beta.size() != alpha.size()) throw DimensionError("multi-index length mismatch");
  mpz_class r = 1;
  for (std::size_t k = 0; k < beta.size(); ++k) {
    if (alpha[k] > beta[k]) return 0;
    for (unsigned j = 0; j < alpha[k]; ++j) r *= beta[k] - j;
  }
  return r;
}

mpz_class factorial(const Exponent& alpha) {
  mpz_class r = 1;
  for (auto a : alpha) r *= factorial(a);
  return r;
}

mpz_class self_power(const Exponent& beta) {
  mpz_class r = 1;
  for (auto b : beta) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), b, b);
    r *= p;
  }
  return r;
}

mpq_class jensen_multiplier(const Exponent& alpha, const Exponent& beta) {
  mpz_class num = falling_factorial(beta, alpha);
  if (num == 0) return 0;
  mpz_class den = 1;
  for (std::size_t k = 0; k < beta.size(); ++k) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), beta[k], alpha[k]);
    den *= p;
  }
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace stabilis
