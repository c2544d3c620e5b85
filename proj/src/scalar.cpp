#include "stabilis/scalar.hpp"

#include <ostream>

namespace stabilis {

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class m = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(m);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero scalar");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  mpq_class n = o.norm2();
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

Scalar Scalar::pow(unsigned k) const {
  Scalar result(1);
  Scalar base = *this;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return result;
}

std::string Scalar::str() const {
  if (is_real()) return re_.get_str();
  if (is_imaginary()) {
    const mpz_class& p = im_.get_num();
    std::string s;
    if (p == 1) {
      s = "i";
    } else if (p == -1) {
      s = "-i";
    } else {
      s = p.get_str() + "i";
    }
    if (im_.get_den() != 1) s += "/" + im_.get_den().get_str();
    return s;
  }
  mpz_class d;
  mpz_lcm(d.get_mpz_t(), re_.get_den().get_mpz_t(), im_.get_den().get_mpz_t());
  mpz_class a = re_.get_num() * (d / re_.get_den());
  mpz_class b = im_.get_num() * (d / im_.get_den());
  std::string s = "(" + a.get_str();
  if (b == 1) {
    s += "+i";
  } else if (b == -1) {
    s += "-i";
  } else if (b > 0) {
    s += "+" + b.get_str() + "i";
  } else {
    s += b.get_str() + "i";
  }
  s += ")";
  if (d != 1) s += "/" + d.get_str();
  return s;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

mpq_class parse_rational(const std::string& text) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0)
    throw std::invalid_argument("not a rational: '" + text + "'");
  q.canonicalize();
  return q;
}

namespace {

bool rational_sqrt(const mpq_class& q, mpq_class& out) {
  if (sgn(q) < 0) return false;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
    return false;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  out = mpq_class(n, d);
  out.canonicalize();
  return true;
}

}  // namespace

bool gaussian_sqrt(const Scalar& s, Scalar& out) {
  if (s.is_zero()) {
    out = Scalar(0);
    return true;
  }
  mpq_class modulus;
  if (!rational_sqrt(s.norm2(), modulus)) return false;
  mpq_class u, v;
  if (rational_sqrt((modulus + s.re()) / 2, u) && sgn(u) != 0) {
    v = s.im() / (2 * u);
  } else if (sgn(s.im()) == 0 && rational_sqrt(-s.re(), v)) {
    u = 0;
  } else {
    return false;
  }
  out = Scalar(u, v);
  return out * out == s;
}

}  // namespace stabilis
