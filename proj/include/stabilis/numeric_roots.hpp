#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <string>
#include <vector>

#include "stabilis/upoly.hpp"

namespace stabilis {

using mpfloat = boost::multiprecision::cpp_bin_float_50;
using mpcomplex = boost::multiprecision::cpp_complex_50;

struct NumericRoot {
  mpcomplex value;
  // Radius of an inclusion disk around value.
  mpfloat radius;
  // Sign of the imaginary part cannot be trusted.
  bool indeterminate = false;
};

struct NumericRootOptions {
  double band = 1e-9;
  unsigned max_iterations = 2000;
};

struct NumericRootsResult {
  bool converged = false;
  std::vector<NumericRoot> roots;
  bool any_indeterminate() const;
  // Roots with Im above the band, counting only determinate ones.
  std::size_t count_upper() const;
};

// Aberth iteration in 50-digit binary floating point.
NumericRootsResult numeric_roots(const UPoly& p, const NumericRootOptions& opts = {});

mpfloat to_mpfloat(const mpq_class& q);
mpq_class to_mpq(const mpfloat& x);
// Simplest rational in [x - tol, x + tol].
mpq_class simplest_rational(const mpq_class& x, const mpq_class& tol);
std::string numeric_str(const mpfloat& x);
std::string numeric_str(double x);

}  // namespace stabilis
