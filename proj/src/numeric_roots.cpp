#include "stabilis/numeric_roots.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdio>

#include "stabilis/errors.hpp"

namespace stabilis {

namespace mp = boost::multiprecision;

bool NumericRootsResult::any_indeterminate() const {
  for (const auto& r : roots)
    if (r.indeterminate) return true;
  return !converged;
}

std::size_t NumericRootsResult::count_upper() const {
  std::size_t n = 0;
  for (const auto& r : roots)
    if (!r.indeterminate && r.value.imag() > 0) ++n;
  return n;
}

mpfloat to_mpfloat(const mpq_class& q) {
  return mpfloat(q.get_num().get_str()) / mpfloat(q.get_den().get_str());
}

mpq_class to_mpq(const mpfloat& x) {
  if (x == 0) return 0;
  int exp = 0;
  mpfloat m = mp::frexp(x, &exp);
  // 50 decimal digits fit in 170 bits of mantissa.
  m = mp::ldexp(m, 180);
  mpz_class num(mp::trunc(m).convert_to<mp::cpp_int>().str());
  mpq_class r(num);
  exp -= 180;
  if (exp >= 0) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(exp));
    r *= scale;
  } else {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(-exp));
    r /= scale;
  }
  r.canonicalize();
  return r;
}

namespace {

mpz_class floor_q(const mpq_class& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

// Simplest rational strictly inside or on [lo, hi], 0 < lo <= hi.
mpq_class simplest_between(const mpq_class& lo, const mpq_class& hi) {
  mpz_class fl = floor_q(lo);
  if (fl == lo) return lo;
  if (fl + 1 <= hi) return mpq_class(fl + 1);
  // lo and hi share the integer part; recurse on reciprocals of fractional parts.
  mpq_class r = simplest_between(1 / (hi - fl), 1 / (lo - fl));
  mpq_class out = fl + 1 / r;
  out.canonicalize();
  return out;
}

}  // namespace

mpq_class simplest_rational(const mpq_class& x, const mpq_class& tol) {
  mpq_class lo = x - tol, hi = x + tol;
  if (sgn(lo) <= 0 && sgn(hi) >= 0) return 0;
  if (sgn(hi) < 0) return -simplest_between(-hi, -lo);
  return simplest_between(lo, hi);
}

std::string numeric_str(const mpfloat& x) { return numeric_str(x.convert_to<double>()); }

std::string numeric_str(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

NumericRootsResult numeric_roots(const UPoly& p, const NumericRootOptions& opts) {
  if (p.degree() < 1) throw PreconditionError("numeric roots of a constant polynomial");
  const auto d = static_cast<std::size_t>(p.degree());
  std::vector<mpcomplex> a;
  for (const auto& c : p.coeffs()) a.emplace_back(to_mpfloat(c.re()), to_mpfloat(c.im()));

  auto horner = [&](const mpcomplex& z, mpcomplex& val, mpcomplex& der) {
    val = a[d];
    der = 0;
    for (std::size_t k = d; k-- > 0;) {
      der = der * z + val;
      val = val * z + a[k];
    }
  };

  // Fujiwara-type radius for the starting circle.
  mpfloat radius = 0;
  mpfloat lead = abs(a[d]);
  for (std::size_t k = 0; k < d; ++k) {
    mpfloat ratio = abs(a[k]) / lead;
    if (ratio == 0) continue;
    mpfloat r = 2 * pow(ratio, mpfloat(1) / mpfloat(d - k));
    if (r > radius) radius = r;
  }
  if (radius == 0) radius = 1;

  NumericRootsResult res;
  std::vector<mpcomplex> z(d);
  const mpfloat pi = boost::math::constants::pi<mpfloat>();
  for (std::size_t k = 0; k < d; ++k) {
    mpfloat theta = 2 * pi * k / d + mpfloat(0.4);
    z[k] = mpcomplex(radius * cos(theta), radius * sin(theta));
  }

  const mpfloat tiny = mpfloat("1e-45");
  bool converged = false;
  for (unsigned it = 0; it < opts.max_iterations && !converged; ++it) {
    converged = true;
    for (std::size_t k = 0; k < d; ++k) {
      mpcomplex val, der;
      horner(z[k], val, der);
      if (abs(val) == 0) continue;
      mpcomplex ratio = val / der;
      mpcomplex sum = 0;
      for (std::size_t j = 0; j < d; ++j)
        if (j != k) sum += mpcomplex(1) / (z[k] - z[j]);
      mpcomplex w = ratio / (mpcomplex(1) - ratio * sum);
      z[k] -= w;
      if (abs(w) > tiny * (1 + abs(z[k]))) converged = false;
    }
  }

  // Backward check catches slow convergence on clustered roots.
  bool backward_ok = true;
  const mpfloat backward_tol = mpfloat("1e-30");
  for (std::size_t k = 0; k < d; ++k) {
    mpcomplex val, der;
    horner(z[k], val, der);
    mpfloat scale = 0, zp = 1, az = abs(z[k]);
    for (std::size_t j = 0; j <= d; ++j) {
      scale += abs(a[j]) * zp;
      zp *= az;
    }
    if (abs(val) > backward_tol * scale) backward_ok = false;
  }
  res.converged = converged || backward_ok;

  const mpfloat band(opts.band);
  for (std::size_t k = 0; k < d; ++k) {
    mpcomplex val, der;
    horner(z[k], val, der);
    mpcomplex prod = a[d];
    for (std::size_t j = 0; j < d; ++j)
      if (j != k) prod *= (z[k] - z[j]);
    NumericRoot r;
    r.value = z[k];
    r.radius = abs(prod) == 0 ? mpfloat(1e300) : mpfloat(d) * abs(val) / abs(prod);
    r.indeterminate = !res.converged || abs(z[k].imag()) <= std::max(band, r.radius);
    res.roots.push_back(r);
  }
  return res;
}

}  // namespace stabilis
