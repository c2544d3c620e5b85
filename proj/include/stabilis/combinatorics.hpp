#pragma once

#include <gmpxx.h>

#include "stabilis/mpoly.hpp"

namespace stabilis {

mpz_class binomial(unsigned n, unsigned k);
mpz_class factorial(unsigned n);

// Multi-index binomial, zero unless alpha <= kappa.
mpz_class binomial(const Exponent& kappa, const Exponent& alpha);
// (beta)_alpha = beta!/(beta-alpha)!, zero unless alpha <= beta.
mpz_class falling_factorial(const Exponent& beta, const Exponent& alpha);
mpz_class factorial(const Exponent& alpha);
// J(alpha, beta) = (beta)_alpha * beta^(-alpha), with 0^0 = 1.
mpq_class jensen_multiplier(const Exponent& alpha, const Exponent& beta);
// beta^beta with 0^0 = 1.
mpz_class self_power(const Exponent& beta);

// Calls fn(alpha) for every alpha <= kappa, odometer order with the first index fastest.
template <class Fn>
void for_each_below(const Exponent& kappa, Fn&& fn) {
  Exponent a(kappa.size(), 0);
  while (true) {
    fn(static_cast<const Exponent&>(a));
    std::size_t k = 0;
    while (k < a.size() && a[k] == kappa[k]) a[k++] = 0;
    if (k == a.size()) return;
    ++a[k];
  }
}

}  // namespace stabilis
