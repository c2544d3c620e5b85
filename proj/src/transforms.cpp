#include "stabilis/transforms.hpp"

#include "stabilis/errors.hpp"

namespace stabilis {

UPoly restrict_to_line(const MPoly& f, const std::vector<mpq_class>& lambda, const std::vector<Scalar>& alpha) {
  const std::size_t n = f.nvars();
  if (lambda.size() != n || alpha.size() != n)
    throw DimensionError("line parameters must have one entry per variable");
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(lambda[k]) < 0 || sgn(alpha[k].im()) < 0)
      throw PreconditionError("line must keep every coordinate in the closed upper half-plane");
    if (sgn(lambda[k]) == 0 && sgn(alpha[k].im()) == 0)
      throw PreconditionError("a fixed coordinate must lie in the open upper half-plane");
  }
  std::vector<std::vector<UPoly>> powers(n);
  std::vector<Scalar> acc;
  for (const auto& [e, c] : f.terms()) {
    UPoly t = UPoly::constant(c);
    for (std::size_t k = 0; k < n; ++k) {
      if (e[k] == 0) continue;
      auto& tab = powers[k];
      if (tab.empty()) tab.push_back(UPoly::constant(Scalar(1)));
      UPoly lin(std::vector<Scalar>{alpha[k], Scalar(lambda[k])});
      while (tab.size() <= e[k]) tab.push_back(tab.back() * lin);
      t = t * tab[e[k]];
    }
    if (acc.size() < t.coeffs().size()) acc.resize(t.coeffs().size());
    for (std::size_t j = 0; j < t.coeffs().size(); ++j) acc[j] += t.coeffs()[j];
  }
  return UPoly(std::move(acc));
}

UPoly restrict_to_line(const MPoly& f, const std::vector<mpq_class>& lambda, const std::vector<mpq_class>& alpha) {
  return restrict_to_line(f, lambda, real_offsets(alpha));
}

std::vector<Scalar> line_point(const std::vector<mpq_class>& lambda, const std::vector<Scalar>& alpha,
                               const Scalar& t) {
  std::vector<Scalar> p;
  for (std::size_t k = 0; k < lambda.size(); ++k) p.push_back(Scalar(lambda[k]) * t + alpha[k]);
  return p;
}

std::vector<Scalar> real_offsets(const std::vector<mpq_class>& alpha) {
  return std::vector<Scalar>(alpha.begin(), alpha.end());
}

MPoly specialize(const MPoly& f, std::size_t i, const Scalar& mu) {
  if (i >= f.nvars()) throw DimensionError("variable index out of range");
  if (!mu.is_real()) throw PreconditionError("specialization value must be real");
  MPoly r(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    Exponent g = e;
    g[i] = 0;
    r.add_term(g, c * mu.pow(e[i]));
  }
  return r;
}

MPoly scale_var(const MPoly& f, std::size_t i, const mpq_class& lambda) {
  if (i >= f.nvars()) throw DimensionError("variable index out of range");
  if (sgn(lambda) <= 0) throw PreconditionError("scale factor must be positive");
  MPoly r(f.nvars());
  Scalar l(lambda);
  for (const auto& [e, c] : f.terms()) r.add_term(e, c * l.pow(e[i]));
  return r;
}

MPoly invert_var(const MPoly& f, std::size_t i) {
  if (i >= f.nvars()) throw DimensionError("variable index out of range");
  if (f.is_zero()) throw PreconditionError("inversion of the zero polynomial");
  const auto d = static_cast<std::uint32_t>(f.degree(i));
  MPoly r(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    Exponent g = e;
    g[i] = d - e[i];
    r.add_term(g, e[i] % 2 ? -c : c);
  }
  return r;
}

MPoly identify_vars(const MPoly& f, std::size_t i, std::size_t j) {
  if (i >= f.nvars() || j >= f.nvars()) throw DimensionError("variable index out of range");
  MPoly r(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    Exponent g = e;
    if (i != j) {
      g[i] += g[j];
      g[j] = 0;
    }
    r.add_term(g, c);
  }
  return r;
}

SupportExtrema support_extrema(const MPoly& f) {
  if (f.is_zero()) throw PreconditionError("empty support");
  SupportExtrema out;
  std::vector<Exponent> supp;
  for (const auto& [e, c] : f.terms()) supp.push_back(e);
  for (const auto& a : supp) {
    bool is_min = true, is_max = true;
    for (const auto& b : supp) {
      if (a == b) continue;
      if (dominated(b, a)) is_min = false;
      if (dominated(a, b)) is_max = false;
    }
    if (is_min) out.minimal.push_back(a);
    if (is_max) out.maximal.push_back(a);
  }
  out.unique_max = out.maximal.size() == 1;
  return out;
}

}  // namespace stabilis
