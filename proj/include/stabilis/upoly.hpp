#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stabilis/mpoly.hpp"
#include "stabilis/scalar.hpp"

namespace stabilis {

inline bool is_zero_value(const mpq_class& q) { return sgn(q) == 0; }
inline bool is_zero_value(const Scalar& s) { return s.is_zero(); }

// Dense univariate polynomial, lowest degree first, no trailing zeros.
template <class T>
class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  static DensePoly constant(const T& v) { return DensePoly(std::vector<T>{v}); }
  static DensePoly x() { return DensePoly(std::vector<T>{T(0), T(1)}); }

  const std::vector<T>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const T& lead() const { return c_.back(); }
  T operator[](std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }

  T eval(const T& x) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  DensePoly derivative() const {
    std::vector<T> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * T(static_cast<long>(k)));
    return DensePoly(std::move(d));
  }

  DensePoly monic() const {
    if (is_zero()) return *this;
    std::vector<T> d = c_;
    T l = lead();
    for (auto& v : d) v = v / l;
    return DensePoly(std::move(d));
  }

  DensePoly scaled(const T& s) const {
    std::vector<T> d = c_;
    for (auto& v : d) v = v * s;
    return DensePoly(std::move(d));
  }

  DensePoly operator-() const { return scaled(T(-1)); }

  friend DensePoly operator+(const DensePoly& a, const DensePoly& b) {
    std::vector<T> d(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) d[k] = d[k] + a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) d[k] = d[k] + b.c_[k];
    return DensePoly(std::move(d));
  }
  friend DensePoly operator-(const DensePoly& a, const DensePoly& b) { return a + (-b); }
  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return DensePoly();
    std::vector<T> d(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) d[i + j] = d[i + j] + a.c_[i] * b.c_[j];
    return DensePoly(std::move(d));
  }
  friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const DensePoly& a, const DensePoly& b) { return !(a == b); }

  DensePoly pow(unsigned k) const {
    DensePoly r = constant(T(1));
    for (unsigned j = 0; j < k; ++j) r = r * *this;
    return r;
  }

  // Euclidean division: *this = q*b + r.
  std::pair<DensePoly, DensePoly> divmod(const DensePoly& b) const {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<T> r = c_;
    long db = b.degree();
    std::vector<T> q(c_.size() >= b.c_.size() ? c_.size() - b.c_.size() + 1 : 0, T(0));
    for (long k = static_cast<long>(r.size()) - 1; k >= db; --k) {
      if (is_zero_value(r[k])) continue;
      T f = r[k] / b.lead();
      q[k - db] = f;
      for (long j = 0; j <= db; ++j) r[k - db + j] = r[k - db + j] - f * b.c_[j];
    }
    return {DensePoly(std::move(q)), DensePoly(std::move(r))};
  }

  // Substitute x -> s*x + t.
  DensePoly affine(const T& s, const T& t) const {
    DensePoly lin(std::vector<T>{t, s});
    DensePoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + constant(*it);
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && is_zero_value(c_.back())) c_.pop_back();
  }
  std::vector<T> c_;
};

using QPoly = DensePoly<mpq_class>;
using UPoly = DensePoly<Scalar>;

template <class T>
DensePoly<T> poly_gcd(DensePoly<T> a, DensePoly<T> b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UPoly to_upoly(const QPoly& p);
QPoly upoly_real(const UPoly& p);
QPoly upoly_imag(const UPoly& p);
bool upoly_is_real(const UPoly& p);
UPoly upoly_from_mpoly(const MPoly& f);
MPoly mpoly_from_upoly(const UPoly& p);
std::string upoly_str(const UPoly& p, const std::string& var = "t");
inline std::string qpoly_str(const QPoly& p, const std::string& var = "t") {
  return upoly_str(to_upoly(p), var);
}

}  // namespace stabilis
