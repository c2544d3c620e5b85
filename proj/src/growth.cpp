#include "stabilis/growth.hpp"

#include <cmath>

#include "stabilis/combinatorics.hpp"
#include "stabilis/errors.hpp"
#include "stabilis/kernels.hpp"
#include "stabilis/multivariate.hpp"
#include "stabilis/numeric_roots.hpp"
#include "stabilis/transforms.hpp"
#include "stabilis/univariate.hpp"

namespace stabilis {

namespace {

constexpr double kRelTol = 1e-10;

double modulus(const Scalar& s) { return std::sqrt(s.norm2().get_d()); }

// Conservative comparison in log space: only a clear excess counts as a violation.
bool within(double log_value, double log_bound) {
  return log_value <= log_bound + kRelTol * std::max(1.0, std::abs(log_bound));
}

struct DoubleTerm {
  std::vector<unsigned> e;
  std::complex<double> c;
};

std::vector<DoubleTerm> to_double_terms(const MPoly& f) {
  std::vector<DoubleTerm> t;
  for (const auto& [e, c] : f.terms()) t.push_back({std::vector<unsigned>(e.begin(), e.end()), c.to_complex()});
  return t;
}

}  // namespace

double szasz_constant() { return std::stod(kSzaszConstant); }

SzaszRootReport szasz_root_sum_check(const UPoly& p) {
  if (p.is_zero() || p[0] != Scalar(1)) throw PreconditionError("Szasz check needs p(0) = 1");
  if (!uni_is_stable(p)) throw PreconditionError("Szasz check needs a stable polynomial");
  SzaszRootReport rep;
  rep.a1 = p[1];
  rep.a2 = p[2];
  if (p.degree() > 0) {
    auto roots = numeric_roots(p);
    if (!roots.converged) throw InternalInconsistency("root finder did not converge");
    for (const auto& r : roots.roots) {
      mpcomplex xi = mpcomplex(-1) / r.value;
      std::complex<double> x(static_cast<double>(xi.real()), static_cast<double>(xi.imag()));
      rep.xi.push_back(x);
      rep.root_sum += std::norm(x);
    }
  }
  rep.bound = 3 * rep.a1.norm2().get_d() + 2 * modulus(rep.a2);
  rep.margin = rep.bound - rep.root_sum;
  rep.holds = rep.root_sum <= rep.bound * (1 + kRelTol) + kRelTol;
  return rep;
}

GrowthCheck szasz_univariate_growth_check(const UPoly& p, double r, std::size_t grid) {
  if (p.is_zero() || p[0] != Scalar(1)) throw PreconditionError("growth check needs p(0) = 1");
  if (!uni_is_stable(p)) throw PreconditionError("growth check needs a stable polynomial");
  GrowthCheck g;
  g.r = r;
  g.grid = grid;
  double a1 = modulus(p[1]), a2 = modulus(p[2]);
  double log_bound = r * a1 + 3 * r * r * a1 * a1 + 3 * r * r * a2;
  std::vector<std::complex<double>> c;
  for (const auto& v : p.coeffs()) c.push_back(v.to_complex());
  double log_max = max_over_grid_serial(grid, [&](std::size_t k) {
    std::complex<double> z = std::polar(r, 2 * M_PI * static_cast<double>(k) / static_cast<double>(grid));
    std::complex<double> acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return std::log(std::abs(acc));
  });
  g.max_found = std::exp(log_max);
  g.bound = std::exp(log_bound);
  g.log_margin = log_bound - log_max;
  g.holds = within(log_max, log_bound);
  return g;
}

FirstOrderSums first_order_sums(const MPoly& f) {
  FirstOrderSums s;
  for (const auto& [e, c] : f.terms()) {
    unsigned d = total_degree(e);
    if (d == 1) s.S1 += c.abs_bound();
    if (d == 2) s.S2 += c.abs_bound();
  }
  return s;
}

namespace {

void require_normalized_stable(const MPoly& f, const SamplingConfig& cfg) {
  if (f.coeff(Exponent(f.nvars(), 0)) != Scalar(1)) throw PreconditionError("constant term must be 1");
  if (check_stability(f, cfg).refuted()) throw PreconditionError("polynomial is not stable");
}

}  // namespace

CoefficientBoundReport coefficient_bound_check(const MPoly& f, const SamplingConfig& cfg) {
  require_normalized_stable(f, cfg);
  CoefficientBoundReport rep;
  FirstOrderSums s = first_order_sums(f);
  rep.A2 = 3 * s.S1 * s.S1 + 2 * s.S2;
  for (const auto& [beta, c] : f.terms()) {
    unsigned k = total_degree(beta);
    if (k == 0) continue;
    mpq_class shape(self_power(beta), factorial(beta));
    shape.canonicalize();
    mpz_class kk;
    mpz_pow_ui(kk.get_mpz_t(), mpz_class(k).get_mpz_t(), k);
    mpq_class a2k = 1;
    for (unsigned t = 0; t < k; ++t) a2k *= rep.A2;
    mpq_class rhs = shape * shape * a2k / mpq_class(kk);
    rhs.canonicalize();
    CoefficientBound b{beta, c.norm2(), rhs};
    if (b.lhs > b.rhs) rep.holds = false;
    rep.entries.push_back(std::move(b));
  }
  return rep;
}

GrowthConstants growth_constants_unchecked(const MPoly& f) {
  if (f.coeff(Exponent(f.nvars(), 0)) != Scalar(1)) throw PreconditionError("constant term must be 1");
  GrowthConstants k;
  k.nvars = f.nvars();
  FirstOrderSums s = first_order_sums(f);
  k.A2 = 3 * s.S1 * s.S1 + 2 * s.S2;
  k.C_over_e2 = 6 * s.S1 * s.S1 + 4 * s.S2;
  k.B = std::ldexp(szasz_constant(), static_cast<int>(f.nvars()) - 1);
  k.C = std::exp(2.0) * k.C_over_e2.get_d();
  k.provenance.push_back("base: f(0) = 1 in " + std::to_string(f.nvars()) + " variables");
  return k;
}

GrowthConstants growth_constants(const MPoly& f, const SamplingConfig& cfg) {
  require_normalized_stable(f, cfg);
  return growth_constants_unchecked(f);
}

GrowthCheck growth_bound_check(const MPoly& f, const GrowthConstants& k, double r, std::size_t grid, int threads) {
  const std::size_t n = f.nvars();
  GrowthCheck g;
  g.r = r;
  g.grid = grid;
  double log_bound = std::log(k.B) + k.C * r * r;
  auto terms = to_double_terms(f);
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= grid;
  double log_max = max_over_grid(
      total,
      [&](std::size_t idx) {
        std::vector<std::complex<double>> z(n);
        for (std::size_t i = 0; i < n; ++i) {
          z[i] = std::polar(r, 2 * M_PI * static_cast<double>(idx % grid) / static_cast<double>(grid));
          idx /= grid;
        }
        std::complex<double> acc = 0;
        for (const auto& t : terms) {
          std::complex<double> m = t.c;
          for (std::size_t i = 0; i < n; ++i)
            for (unsigned p = 0; p < t.e[i]; ++p) m *= z[i];
          acc += m;
        }
        return std::log(std::abs(acc));
      },
      threads);
  g.max_found = std::exp(log_max);
  g.bound = std::exp(log_bound);
  g.log_margin = log_bound - log_max;
  g.holds = within(log_max, log_bound);
  return g;
}

GrowthCheck growth_bound_check(const MPoly& f, double r, const SamplingConfig& cfg, std::size_t grid) {
  return growth_bound_check(f, growth_constants(f, cfg), r, grid, cfg.threads);
}

namespace {

GrowthConstants recurse(const MPoly& f, unsigned depth) {
  const std::size_t n = f.nvars();
  const std::string pad(2 * depth, ' ');
  Scalar c0 = f.coeff(Exponent(n, 0));
  if (!c0.is_zero()) {
    GrowthConstants k = growth_constants_unchecked(f * (Scalar(1) / c0));
    k.B *= c0.abs_bound().get_d();
    k.provenance = {pad + "base: f(0) != 0, B scaled by |f(0)|"};
    return k;
  }
  if (n == 1) {
    unsigned m = f.terms().rbegin()->first[0];
    MPoly g(1);
    for (const auto& [e, c] : f.terms()) g.add_term(Exponent{e[0] - m}, c);
    GrowthConstants k = recurse(g, depth + 1);
    k.C += m;
    k.provenance.insert(k.provenance.begin(), pad + "factor z^" + std::to_string(m) + ", r <= e^{r^2}");
    return k;
  }
  auto minimal = support_extrema(f).minimal;
  const Exponent* alpha = &minimal.front();
  for (const auto& a : minimal)
    if (total_degree(a) > total_degree(*alpha)) alpha = &a;
  std::size_t j = 0;
  while ((*alpha)[j] == 0) ++j;
  std::vector<MPoly> images;
  for (std::size_t i = 0; i < n; ++i)
    images.push_back(i == j ? MPoly(n - 1) : MPoly::variable(n - 1, i < j ? i : i - 1));
  MPoly f0 = f.compose(images, n - 1);
  MPoly df = f.derivative(j);
  GrowthConstants k2 = recurse(df, depth + 1);
  GrowthConstants k;
  k.nvars = n;
  k.provenance.push_back(pad + "split on z" + std::to_string(j + 1));
  if (f0.is_zero()) {
    k.B = 2 * k2.B;
    k.C = k2.C + 1;
  } else {
    GrowthConstants k1 = recurse(f0, depth + 1);
    k.B = 2 * std::max(k1.B, k2.B);
    k.C = std::max(k1.C, k2.C + 1);
    k.provenance.insert(k.provenance.end(), k1.provenance.begin(), k1.provenance.end());
  }
  k.provenance.insert(k.provenance.end(), k2.provenance.begin(), k2.provenance.end());
  return k;
}

}  // namespace

GrowthConstants minimal_support_growth_constants_unchecked(const MPoly& f) {
  if (f.is_zero()) throw DomainError("growth constants of the zero polynomial");
  GrowthConstants k = recurse(f, 0);
  k.nvars = f.nvars();
  return k;
}

GrowthConstants minimal_support_growth_constants(const MPoly& f, const SamplingConfig& cfg) {
  if (f.is_zero()) throw DomainError("growth constants of the zero polynomial");
  if (check_stability(f, cfg).refuted()) throw PreconditionError("polynomial is not stable");
  return minimal_support_growth_constants_unchecked(f);
}

StirlingBounds stirling_bounds(unsigned n) {
  StirlingBounds s;
  mpz_class nn;
  mpz_pow_ui(nn.get_mpz_t(), mpz_class(n).get_mpz_t(), n);
  if (n == 0) nn = 1;
  mpq_class ratio(factorial(n), nn);
  ratio.canonicalize();
  mpfloat r = to_mpfloat(ratio);
  mpfloat e = boost::math::constants::e<mpfloat>();
  mpfloat lower = exp(-mpfloat(n));
  mpfloat upper = (e * n + 1) * lower;
  s.lower = static_cast<double>(lower);
  s.ratio = static_cast<double>(r);
  s.upper = static_cast<double>(upper);
  s.holds = lower <= r && r <= upper;
  return s;
}

}  // namespace stabilis
