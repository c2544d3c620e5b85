#pragma once

#include <complex>
#include <string>
#include <vector>

#include "stabilis/mpoly.hpp"
#include "stabilis/sampling.hpp"
#include "stabilis/upoly.hpp"

namespace stabilis {

// sqrt(2e^2 - e)/(e - 1) to 40 digits.
inline constexpr const char* kSzaszConstant = "2.021046018265404358458546009080959565132";
double szasz_constant();

struct SzaszRootReport {
  Scalar a1, a2;
  std::vector<std::complex<double>> xi;  // p = prod (1 + xi_j z)
  double root_sum = 0;                   // sum |xi_j|^2
  double bound = 0;                      // 3|a1|^2 + 2|a2|
  double margin = 0;
  bool holds = false;
};

SzaszRootReport szasz_root_sum_check(const UPoly& p);

struct GrowthCheck {
  double r = 0;
  double max_found = 0;
  double bound = 0;
  // log(bound) - log(max_found)
  double log_margin = 0;
  std::size_t grid = 0;
  bool holds = false;
};

GrowthCheck szasz_univariate_growth_check(const UPoly& p, double r, std::size_t grid = 64);

struct CoefficientBound {
  Exponent beta;
  mpq_class lhs;  // |a(beta)|^2
  mpq_class rhs;  // |beta|^-|beta| (beta^beta / beta!)^2 (A^2)^|beta|
};

struct CoefficientBoundReport {
  mpq_class A2;
  std::vector<CoefficientBound> entries;
  bool holds = true;
};

// Rational upper bounds for the first- and second-order coefficient sums.
struct FirstOrderSums {
  mpq_class S1;  // sum_i |a(e_i)|
  mpq_class S2;  // sum over degree-two monomials of |a|
};
FirstOrderSums first_order_sums(const MPoly& f);

CoefficientBoundReport coefficient_bound_check(const MPoly& f, const SamplingConfig& cfg);

struct GrowthConstants {
  std::size_t nvars = 0;
  mpq_class A2;
  mpq_class C_over_e2;  // exact part of C for the base case
  double B = 0;
  double C = 0;
  std::vector<std::string> provenance;
};

GrowthConstants growth_constants(const MPoly& f, const SamplingConfig& cfg);
GrowthConstants growth_constants_unchecked(const MPoly& f);
// max over the torus |z_i| = r against B e^{C r^2}.
GrowthCheck growth_bound_check(const MPoly& f, const GrowthConstants& k, double r, std::size_t grid = 64,
                               int threads = 0);
GrowthCheck growth_bound_check(const MPoly& f, double r, const SamplingConfig& cfg, std::size_t grid = 64);

GrowthConstants minimal_support_growth_constants(const MPoly& f, const SamplingConfig& cfg);
GrowthConstants minimal_support_growth_constants_unchecked(const MPoly& f);

struct StirlingBounds {
  double lower = 0;
  double ratio = 0;  // n!/n^n
  double upper = 0;
  bool holds = false;
};

StirlingBounds stirling_bounds(unsigned n);

}  // namespace stabilis
