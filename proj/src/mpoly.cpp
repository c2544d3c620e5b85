#include "stabilis/mpoly.hpp"

#include <algorithm>
#include <numeric>

#include "stabilis/errors.hpp"

namespace stabilis {

unsigned total_degree(const Exponent& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

bool dominated(const Exponent& a, const Exponent& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const {
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Exponent unit_exponent(std::size_t nvars, std::size_t index) {
  Exponent e(nvars, 0);
  e.at(index) = 1;
  return e;
}

MPoly MPoly::constant(std::size_t nvars, const Scalar& c) {
  return monomial(nvars, Exponent(nvars, 0), c);
}

MPoly MPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw DimensionError("variable index out of range");
  return monomial(nvars, unit_exponent(nvars, index));
}

MPoly MPoly::monomial(std::size_t nvars, const Exponent& e, const Scalar& c) {
  if (e.size() != nvars) throw DimensionError("exponent length mismatch");
  MPoly p(nvars);
  if (!c.is_zero()) p.terms_.emplace(e, c);
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && stabilis::total_degree(terms_.begin()->first) == 0);
}

bool MPoly::is_real() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second.is_real(); });
}

Scalar MPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void MPoly::add_term(const Exponent& e, const Scalar& c) {
  if (e.size() != nvars_) throw DimensionError("exponent length mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

long MPoly::degree(std::size_t var) const {
  if (var >= nvars_) throw DimensionError("variable index out of range");
  long d = -1;
  for (const auto& [e, c] : terms_) d = std::max<long>(d, e[var]);
  return d;
}

Exponent MPoly::degrees() const {
  if (is_zero()) throw PreconditionError("degree vector of the zero polynomial");
  Exponent d(nvars_, 0);
  for (const auto& [e, c] : terms_)
    for (std::size_t k = 0; k < nvars_; ++k) d[k] = std::max(d[k], e[k]);
  return d;
}

long MPoly::total_degree() const {
  if (is_zero()) return -1;
  return stabilis::total_degree(terms_.begin()->first);
}

bool MPoly::multi_affine() const {
  for (const auto& [e, c] : terms_)
    for (auto x : e)
      if (x > 1) return false;
  return true;
}

MPoly MPoly::real_part() const {
  MPoly r(nvars_);
  for (const auto& [e, c] : terms_)
    if (sgn(c.re()) != 0) r.terms_.emplace_hint(r.terms_.end(), e, Scalar(c.re()));
  return r;
}

MPoly MPoly::imag_part() const {
  MPoly r(nvars_);
  for (const auto& [e, c] : terms_)
    if (sgn(c.im()) != 0) r.terms_.emplace_hint(r.terms_.end(), e, Scalar(c.im()));
  return r;
}

MPoly MPoly::conj() const {
  MPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, c.conj());
  return r;
}

void MPoly::check_same(const MPoly& o) const {
  if (nvars_ != o.nvars_)
    throw DimensionError("polynomials in " + std::to_string(nvars_) + " and " +
                         std::to_string(o.nvars_) + " variables");
}

MPoly& MPoly::operator+=(const MPoly& o) {
  check_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  check_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.check_same(b);
  MPoly r(a.nvars_);
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < a.nvars_; ++k) e[k] = ea[k] + eb[k];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MPoly MPoly::pow(unsigned k) const {
  MPoly result = constant(nvars_, Scalar(1));
  MPoly base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

MPoly MPoly::derivative(std::size_t var) const {
  if (var >= nvars_) throw DimensionError("variable index out of range");
  MPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent f = e;
    --f[var];
    r.add_term(f, c * Scalar(static_cast<long>(e[var])));
  }
  return r;
}

Scalar MPoly::evaluate(const std::vector<Scalar>& point) const {
  if (point.size() != nvars_) throw DimensionError("evaluation point has wrong length");
  // Power tables keep repeated exponents cheap.
  std::vector<std::vector<Scalar>> powers(nvars_);
  for (const auto& [e, c] : terms_) {
    for (std::size_t k = 0; k < nvars_; ++k) {
      auto& tab = powers[k];
      if (tab.empty()) tab.push_back(Scalar(1));
      while (tab.size() <= e[k]) tab.push_back(tab.back() * point[k]);
    }
  }
  Scalar sum;
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (std::size_t k = 0; k < nvars_; ++k)
      if (e[k]) t *= powers[k][e[k]];
    sum += t;
  }
  return sum;
}

MPoly MPoly::compose(const std::vector<MPoly>& images, std::size_t target_nvars) const {
  if (images.size() != nvars_) throw DimensionError("compose needs one image per variable");
  for (const auto& im : images)
    if (im.nvars() != target_nvars) throw DimensionError("compose image ring mismatch");
  std::vector<std::vector<MPoly>> powers(nvars_);
  MPoly r(target_nvars);
  for (const auto& [e, c] : terms_) {
    MPoly t = constant(target_nvars, c);
    for (std::size_t k = 0; k < nvars_; ++k) {
      if (e[k] == 0) continue;
      auto& tab = powers[k];
      if (tab.empty()) tab.push_back(constant(target_nvars, Scalar(1)));
      while (tab.size() <= e[k]) tab.push_back(tab.back() * images[k]);
      t = t * tab[e[k]];
    }
    r += t;
  }
  return r;
}

MPoly MPoly::remap(const std::vector<std::size_t>& map, std::size_t target_nvars) const {
  if (map.size() != nvars_) throw DimensionError("remap needs one slot per variable");
  MPoly r(target_nvars);
  for (const auto& [e, c] : terms_) {
    Exponent f(target_nvars, 0);
    for (std::size_t k = 0; k < nvars_; ++k) {
      if (map[k] >= target_nvars) throw DimensionError("remap target out of range");
      f[map[k]] += e[k];
    }
    r.add_term(f, c);
  }
  return r;
}

MPoly MPoly::shift(const Exponent& e) const {
  if (e.size() != nvars_) throw DimensionError("exponent length mismatch");
  MPoly r(nvars_);
  for (const auto& [f, c] : terms_) {
    Exponent g = f;
    for (std::size_t k = 0; k < nvars_; ++k) g[k] += e[k];
    r.terms_.emplace(std::move(g), c);
  }
  return r;
}

}  // namespace stabilis
