#pragma once

#include <gmpxx.h>

#include <vector>

#include "stabilis/mpoly.hpp"
#include "stabilis/upoly.hpp"

namespace stabilis {

// t -> f(lambda*t + alpha); each coordinate needs lambda > 0, or lambda = 0 with Im alpha > 0,
// and Im alpha >= 0 throughout.
UPoly restrict_to_line(const MPoly& f, const std::vector<mpq_class>& lambda, const std::vector<Scalar>& alpha);
// Same with real offsets.
UPoly restrict_to_line(const MPoly& f, const std::vector<mpq_class>& lambda, const std::vector<mpq_class>& alpha);

// Point lambda*t + alpha for a complex parameter t.
std::vector<Scalar> line_point(const std::vector<mpq_class>& lambda, const std::vector<Scalar>& alpha,
                               const Scalar& t);
std::vector<Scalar> real_offsets(const std::vector<mpq_class>& alpha);

// Variable indices below are zero-based.
MPoly specialize(const MPoly& f, std::size_t i, const Scalar& mu);
MPoly scale_var(const MPoly& f, std::size_t i, const mpq_class& lambda);
// z_i^{d_i} f(..., -1/z_i, ...) with d_i = deg_{z_i} f.
MPoly invert_var(const MPoly& f, std::size_t i);
// Substitute z_j := z_i.
MPoly identify_vars(const MPoly& f, std::size_t i, std::size_t j);

struct SupportExtrema {
  std::vector<Exponent> minimal;
  std::vector<Exponent> maximal;
  bool unique_max = false;
};

SupportExtrema support_extrema(const MPoly& f);

}  // namespace stabilis
