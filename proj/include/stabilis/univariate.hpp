#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stabilis/upoly.hpp"

namespace stabilis {

using OptBound = std::optional<mpq_class>;  // nullopt is -inf on the left, +inf on the right

QPoly squarefree_part(const QPoly& p);
// Yun decomposition: monic factors f_k with p = c * prod f_k^k.
std::vector<std::pair<QPoly, unsigned>> squarefree_factorization(const QPoly& p);
std::vector<QPoly> sturm_sequence(const QPoly& p, const QPoly& q);

// Distinct real roots in (lo, hi].
unsigned sturm_count(const QPoly& p, const OptBound& lo = std::nullopt,
                     const OptBound& hi = std::nullopt);
// Real roots counted with multiplicity.
unsigned real_root_count_with_multiplicity(const QPoly& p);

struct RealRoot {
  // Open isolating interval with non-root endpoints, or lo == hi when exact.
  mpq_class lo, hi;
  bool exact = false;
  unsigned multiplicity = 1;
};

std::vector<RealRoot> isolate_real_roots(const QPoly& p);
// Shrinks an isolating interval of a square-free p below the given width.
void refine_root(const QPoly& squarefree, RealRoot& r, const mpq_class& width);

bool is_real_rooted(const QPoly& p);

enum class WronskianSign { NonPositive, NonNegative, Indefinite, Zero };
std::string to_string(WronskianSign s);
WronskianSign wronskian_sign_on_R(const QPoly& w);
QPoly wronskian(const QPoly& f, const QPoly& g);  // f'g - fg'

bool interlace(const QPoly& f, const QPoly& g);
// f << g, i.e. g + i f stable.
bool proper_position_uni(const QPoly& f, const QPoly& g);

enum class UniStatus { Stable, NotStable, ZeroPolynomial };
std::string to_string(UniStatus s);

struct UniWitness {
  // Certified region {Im z > im_lower} containing roots_in_region roots.
  mpq_class im_lower;
  unsigned roots_in_region = 0;
  std::optional<Scalar> exact_root;
  // Numeric location of the root with the largest imaginary part.
  std::optional<std::pair<double, double>> approx;
};

struct UniVerdict {
  UniStatus status = UniStatus::ZeroPolynomial;
  std::optional<UniWitness> witness;
  bool stable() const { return status == UniStatus::Stable; }
};

UniVerdict is_stable_uni(const UPoly& p);
// Verdict only, no witness; false for the zero polynomial.
bool uni_is_stable(const UPoly& p);
bool is_strictly_stable_uni(const UPoly& p);

// Exact count of roots in the open upper half-plane, with multiplicity.
unsigned count_upper_half_plane_roots(const UPoly& p);
// Exact count of roots with Im z > y0.
unsigned count_roots_above(const UPoly& p, const mpq_class& y0);

// Tries to turn a numeric root into an exact Gaussian rational root of p.
std::optional<Scalar> recover_exact_root(const UPoly& p, const mpq_class& re, const mpq_class& im);

}  // namespace stabilis
