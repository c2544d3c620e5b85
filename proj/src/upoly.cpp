#include "stabilis/upoly.hpp"

#include "stabilis/errors.hpp"

namespace stabilis {

UPoly to_upoly(const QPoly& p) {
  std::vector<Scalar> c;
  c.reserve(p.coeffs().size());
  for (const auto& q : p.coeffs()) c.emplace_back(q);
  return UPoly(std::move(c));
}

QPoly upoly_real(const UPoly& p) {
  std::vector<mpq_class> c;
  for (const auto& s : p.coeffs()) c.push_back(s.re());
  return QPoly(std::move(c));
}

QPoly upoly_imag(const UPoly& p) {
  std::vector<mpq_class> c;
  for (const auto& s : p.coeffs()) c.push_back(s.im());
  return QPoly(std::move(c));
}

bool upoly_is_real(const UPoly& p) {
  for (const auto& s : p.coeffs())
    if (!s.is_real()) return false;
  return true;
}

UPoly upoly_from_mpoly(const MPoly& f) {
  if (f.nvars() != 1) throw DimensionError("univariate conversion needs exactly one variable");
  if (f.is_zero()) return UPoly();
  std::vector<Scalar> c(f.degree(0) + 1);
  for (const auto& [e, v] : f.terms()) c[e[0]] = v;
  return UPoly(std::move(c));
}

MPoly mpoly_from_upoly(const UPoly& p) {
  MPoly f(1);
  for (std::size_t k = 0; k < p.coeffs().size(); ++k)
    f.add_term(Exponent{static_cast<std::uint32_t>(k)}, p.coeffs()[k]);
  return f;
}

}  // namespace stabilis
