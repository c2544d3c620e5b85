#pragma once

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "stabilis/combinatorics.hpp"
#include "stabilis/mpoly.hpp"
#include "stabilis/operators.hpp"
#include "stabilis/upoly.hpp"

namespace oracle {

using stabilis::Exponent;
using stabilis::MPoly;
using stabilis::Scalar;
using stabilis::UPoly;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : eng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }
  bool coin() { return integer(0, 1) == 1; }

  mpq_class rational(long height) {
    mpq_class q(integer(-height, height), integer(1, height));
    q.canonicalize();
    return q;
  }
  mpq_class positive(long height) {
    mpq_class q(integer(1, height), integer(1, height));
    q.canonicalize();
    return q;
  }
  Scalar gaussian(long height) { return Scalar(rational(height), rational(height)); }
  Scalar upper(long height) { return Scalar(rational(height), positive(height)); }
  Scalar lower(long height) { return Scalar(rational(height), -positive(height)); }

  UPoly upoly(unsigned degree, long height) {
    std::vector<Scalar> c;
    for (unsigned k = 0; k <= degree; ++k) c.push_back(gaussian(height));
    if (c.back().is_zero()) c.back() = Scalar(1);
    return UPoly(c);
  }

  UPoly real_upoly(unsigned degree, long height) {
    std::vector<Scalar> c;
    for (unsigned k = 0; k <= degree; ++k) c.push_back(Scalar(rational(height)));
    if (c.back().is_zero()) c.back() = Scalar(1);
    return UPoly(c);
  }

  MPoly mpoly(const Exponent& box, long height, bool real = false, unsigned density = 2) {
    MPoly f(box.size());
    stabilis::for_each_below(box, [&](const Exponent& e) {
      if (integer(0, density) == 0) return;
      f.add_term(e, real ? Scalar(rational(height)) : gaussian(height));
    });
    return f;
  }

  // Random table operator on the box kappa with images of degree at most gamma.
  stabilis::LinearOperatorSpec table(const Exponent& kappa, const Exponent& gamma, long height, bool real = false) {
    stabilis::LinearOperatorSpec::ImageMap images;
    stabilis::for_each_below(kappa, [&](const Exponent& e) { images[e] = mpoly(gamma, height, real); });
    return stabilis::LinearOperatorSpec::table(kappa, std::move(images), gamma.size());
  }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

inline UPoly from_roots(const Scalar& lead, const std::vector<Scalar>& roots) {
  UPoly p = UPoly::constant(lead);
  for (const auto& r : roots) p = p * UPoly(std::vector<Scalar>{-r, Scalar(1)});
  return p;
}

using lcomplex = std::complex<long double>;

inline lcomplex to_lcomplex(const Scalar& s) {
  mpf_class re(s.re(), 256), im(s.im(), 256);
  return {static_cast<long double>(re.get_d()), static_cast<long double>(im.get_d())};
}

// Companion-matrix eigenvalues in long double.
inline std::vector<lcomplex> roots(const UPoly& p) {
  const long d = p.degree();
  if (d < 1) return {};
  using Mat = Eigen::Matrix<lcomplex, Eigen::Dynamic, Eigen::Dynamic>;
  Mat M = Mat::Zero(d, d);
  lcomplex lead = to_lcomplex(p.lead());
  for (long k = 0; k < d; ++k) {
    M(0, k) = -to_lcomplex(p[static_cast<std::size_t>(d - 1 - k)]) / lead;
    if (k + 1 < d) M(k + 1, k) = 1;
  }
  Eigen::ComplexEigenSolver<Mat> es(M, false);
  std::vector<lcomplex> out;
  for (long k = 0; k < d; ++k) out.push_back(es.eigenvalues()(k));
  return out;
}

enum class Call { Stable, Unstable, Indeterminate };

// Unstable once some root sits above the band, stable when every root is at noise level or below.
inline Call classify(const UPoly& p, long double band = 1e-9L) {
  if (p.is_zero()) return Call::Indeterminate;
  Call c = Call::Stable;
  for (const auto& r : roots(p)) {
    long double scale = std::max<long double>(1, std::abs(r));
    long double y = r.imag() / scale;
    if (y > band) return Call::Unstable;
    if (y > 1e-13L) c = Call::Indeterminate;
  }
  return c;
}

inline mpz_class choose(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline MPoly monomial(std::size_t nvars, const Exponent& e, const Scalar& c = Scalar(1)) {
  MPoly m(nvars);
  m.add_term(e, c);
  return m;
}

// sum_alpha c_alpha T(z^alpha), straight from the image table.
inline MPoly apply(const stabilis::LinearOperatorSpec& T, const MPoly& f) {
  MPoly out(T.out_nvars());
  for (const auto& [e, c] : f.terms()) out += T.images().at(e) * c;
  return out;
}

// prod_i k(z_i, w_i)^kappa_i over 2n variables, z first, by the binomial theorem.
enum class Kernel { ZPlusW, OnePlusZW, OneMinusZW };

inline MPoly kernel_power(const Exponent& kappa, Kernel k) {
  const std::size_t n = kappa.size(), nz = n;
  MPoly out(nz + n);
  stabilis::for_each_below(kappa, [&](const Exponent& a) {
    Scalar c(1);
    Exponent e(nz + n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      c *= Scalar(mpq_class(choose(kappa[i], a[i])));
      if (k == Kernel::ZPlusW) {
        e[i] = a[i];
        e[nz + i] = kappa[i] - a[i];
      } else {
        e[i] = a[i];
        e[nz + i] = a[i];
        if (k == Kernel::OneMinusZW && a[i] % 2 == 1) c = -c;
      }
    }
    out.add_term(e, c);
  });
  return out;
}

// T applied in the z variables of a polynomial in (z, w), result in (z_out, w).
inline MPoly apply_in_z(const stabilis::LinearOperatorSpec& T, const MPoly& K) {
  const std::size_t n = T.nvars(), m = T.out_nvars(), nw = K.nvars() - n;
  MPoly out(m + nw);
  for (const auto& [e, c] : K.terms()) {
    Exponent z(e.begin(), e.begin() + static_cast<long>(n));
    Exponent w(m + nw, 0);
    for (std::size_t j = 0; j < nw; ++j) w[m + j] = e[n + j];
    const MPoly& img = T.images().at(z);
    for (const auto& [ie, ic] : img.terms()) {
      Exponent t = w;
      for (std::size_t j = 0; j < m; ++j) t[j] += ie[j];
      out.add_term(t, c * ic);
    }
  }
  return out;
}

// Block-symmetric lift by subset enumeration: z^a in block i becomes e_a(z_i1..z_ik) / C(k, a).
inline MPoly polarize(const MPoly& f, const Exponent& kappa) {
  std::size_t total = 0;
  std::vector<std::size_t> start;
  for (auto k : kappa) {
    start.push_back(total);
    total += k;
  }
  MPoly out(total);
  for (const auto& [e, c] : f.terms()) {
    std::vector<std::vector<Exponent>> per_block;
    for (std::size_t i = 0; i < kappa.size(); ++i) {
      std::vector<Exponent> subsets;
      for (std::uint32_t mask = 0; mask < (1u << kappa[i]); ++mask) {
        if (static_cast<unsigned>(__builtin_popcount(mask)) != e[i]) continue;
        Exponent s(total, 0);
        for (unsigned b = 0; b < kappa[i]; ++b)
          if (mask >> b & 1u) s[start[i] + b] = 1;
        subsets.push_back(s);
      }
      per_block.push_back(std::move(subsets));
    }
    mpq_class weight(1);
    for (std::size_t i = 0; i < kappa.size(); ++i) weight /= mpq_class(choose(kappa[i], e[i]));
    std::vector<std::size_t> idx(kappa.size(), 0);
    while (true) {
      Exponent t(total, 0);
      for (std::size_t i = 0; i < kappa.size(); ++i)
        for (std::size_t k = 0; k < total; ++k) t[k] += per_block[i][idx[i]][k];
      out.add_term(t, c * Scalar(weight));
      std::size_t i = 0;
      while (i < idx.size() && ++idx[i] == per_block[i].size()) idx[i++] = 0;
      if (i == idx.size()) break;
    }
  }
  return out;
}

inline MPoly variable(std::size_t n, std::size_t k) {
  Exponent e(n, 0);
  e[k] = 1;
  return monomial(n, e);
}

inline MPoly constant(std::size_t n, const Scalar& c) { return monomial(n, Exponent(n, 0), c); }

// Product of linear forms sum a_j z_j + c with a_j >= 0 not all zero and Im c >= 0.
inline MPoly stable_product(Gen& g, std::size_t n, unsigned factors, long height) {
  MPoly p = constant(n, Scalar(1));
  for (unsigned k = 0; k < factors; ++k) {
    MPoly L = constant(n, g.coin() ? g.upper(height) : Scalar(g.rational(height)));
    bool any = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (g.integer(0, 2) == 0) continue;
      L += variable(n, j) * Scalar(g.positive(height));
      any = true;
    }
    if (!any) L += variable(n, static_cast<std::size_t>(g.integer(0, static_cast<long>(n) - 1)));
    p = p * L;
  }
  return p;
}

}  // namespace oracle
