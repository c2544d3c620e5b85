#include "stabilis/univariate.hpp"

#include <algorithm>

#include "stabilis/errors.hpp"
#include "stabilis/numeric_roots.hpp"

namespace stabilis {

namespace {

QPoly exact_div(const QPoly& a, const QPoly& b) { return a.divmod(b).first; }

// Positive rescaling keeps signs and tames coefficient growth.
QPoly normalize_positive(const QPoly& p) {
  if (p.is_zero()) return p;
  mpq_class l = abs(p.lead());
  return p.scaled(1 / l);
}

int sign_at(const QPoly& p, const OptBound& x, bool right) {
  if (p.is_zero()) return 0;
  if (x) return sgn(p.eval(*x));
  int s = sgn(p.lead());
  if (!right && p.degree() % 2 == 1) s = -s;
  return s;
}

unsigned sign_changes(const std::vector<QPoly>& seq, const OptBound& x, bool right) {
  unsigned changes = 0;
  int prev = 0;
  for (const auto& p : seq) {
    int s = sign_at(p, x, right);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

class SturmCounter {
 public:
  explicit SturmCounter(const QPoly& squarefree)
      : seq_(sturm_sequence(squarefree, squarefree.derivative())) {}
  unsigned count(const OptBound& lo, const OptBound& hi) const {
    unsigned a = sign_changes(seq_, lo, false);
    unsigned b = sign_changes(seq_, hi, true);
    return a >= b ? a - b : 0;
  }

 private:
  std::vector<QPoly> seq_;
};

// A point strictly inside (lo, hi) where p does not vanish.
mpq_class non_root_between(const QPoly& p, const mpq_class& lo, const mpq_class& hi) {
  for (unsigned m = 2;; ++m) {
    for (unsigned j = 1; j < m; ++j) {
      mpq_class x = lo + (hi - lo) * mpq_class(j, m);
      x.canonicalize();
      if (sgn(p.eval(x)) != 0) return x;
    }
  }
}

mpq_class cauchy_bound(const QPoly& p) {
  mpq_class m = 0;
  for (long k = 0; k < p.degree(); ++k) m = std::max(m, mpq_class(abs(p[k] / p.lead())));
  return m + 1;
}

}  // namespace

QPoly squarefree_part(const QPoly& p) {
  if (p.is_zero()) throw PreconditionError("square-free part of the zero polynomial");
  if (p.degree() == 0) return QPoly::constant(1);
  return exact_div(p, poly_gcd(p, p.derivative())).monic();
}

std::vector<std::pair<QPoly, unsigned>> squarefree_factorization(const QPoly& p) {
  if (p.is_zero()) throw PreconditionError("square-free factorization of the zero polynomial");
  std::vector<std::pair<QPoly, unsigned>> out;
  if (p.degree() == 0) return out;
  QPoly dp = p.derivative();
  QPoly a = poly_gcd(p, dp);
  QPoly b = exact_div(p, a);
  QPoly c = exact_div(dp, a);
  QPoly d = c - b.derivative();
  for (unsigned i = 1; b.degree() > 0; ++i) {
    QPoly g = poly_gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g.monic(), i);
    b = exact_div(b, g);
    c = exact_div(d, g);
    d = c - b.derivative();
  }
  return out;
}

std::vector<QPoly> sturm_sequence(const QPoly& p, const QPoly& q) {
  std::vector<QPoly> seq;
  if (p.is_zero()) return seq;
  seq.push_back(normalize_positive(p));
  if (q.is_zero()) return seq;
  seq.push_back(normalize_positive(q));
  while (true) {
    QPoly r = seq[seq.size() - 2].divmod(seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(normalize_positive(-r));
  }
  return seq;
}

unsigned sturm_count(const QPoly& p, const OptBound& lo, const OptBound& hi) {
  if (p.is_zero()) throw PreconditionError("Sturm count of the zero polynomial");
  if (lo && hi && *lo >= *hi) return 0;
  QPoly s = squarefree_part(p);
  if (s.degree() == 0) return 0;
  return SturmCounter(s).count(lo, hi);
}

unsigned real_root_count_with_multiplicity(const QPoly& p) {
  unsigned n = 0;
  for (const auto& [f, k] : squarefree_factorization(p)) n += k * sturm_count(f);
  return n;
}

std::vector<RealRoot> isolate_real_roots(const QPoly& p) {
  std::vector<RealRoot> out;
  QPoly s = squarefree_part(p);
  if (s.degree() == 0) return out;
  SturmCounter counter(s);
  mpq_class m = cauchy_bound(s);

  struct Pending {
    mpq_class lo, hi;
    unsigned count;
  };
  std::vector<Pending> stack{{-m, m, counter.count(mpq_class(-m), mpq_class(m))}};
  std::vector<RealRoot> found;
  while (!stack.empty()) {
    Pending cur = stack.back();
    stack.pop_back();
    if (cur.count == 0) continue;
    if (cur.count == 1) {
      RealRoot r;
      r.lo = cur.lo;
      r.hi = cur.hi;
      found.push_back(r);
      continue;
    }
    mpq_class mid = non_root_between(s, cur.lo, cur.hi);
    unsigned left = counter.count(cur.lo, mid);
    stack.push_back({mid, cur.hi, cur.count - left});
    stack.push_back({cur.lo, mid, left});
  }
  std::sort(found.begin(), found.end(), [](const RealRoot& a, const RealRoot& b) { return a.lo < b.lo; });

  auto factors = squarefree_factorization(p);
  for (auto& r : found) {
    for (const auto& [f, k] : factors) {
      if (SturmCounter(f).count(r.lo, r.hi) == 1) {
        r.multiplicity = k;
        break;
      }
    }
    out.push_back(r);
  }
  return out;
}

void refine_root(const QPoly& squarefree, RealRoot& r, const mpq_class& width) {
  if (r.exact) return;
  SturmCounter counter(squarefree);
  while (r.hi - r.lo > width) {
    mpq_class mid = (r.lo + r.hi) / 2;
    if (sgn(squarefree.eval(mid)) == 0) {
      r.lo = r.hi = mid;
      r.exact = true;
      return;
    }
    if (counter.count(r.lo, mid) == 1) {
      r.hi = mid;
    } else {
      r.lo = mid;
    }
  }
}

bool is_real_rooted(const QPoly& p) {
  if (p.is_zero()) throw PreconditionError("real-rootedness of the zero polynomial");
  QPoly s = squarefree_part(p);
  return static_cast<long>(sturm_count(s)) == s.degree();
}

std::string to_string(WronskianSign s) {
  switch (s) {
    case WronskianSign::NonPositive: return "NonPositive";
    case WronskianSign::NonNegative: return "NonNegative";
    case WronskianSign::Indefinite: return "Indefinite";
    case WronskianSign::Zero: return "Zero";
  }
  return "?";
}

QPoly wronskian(const QPoly& f, const QPoly& g) { return f.derivative() * g - f * g.derivative(); }

WronskianSign wronskian_sign_on_R(const QPoly& w) {
  if (w.is_zero()) return WronskianSign::Zero;
  for (const auto& [f, k] : squarefree_factorization(w))
    if (k % 2 == 1 && sturm_count(f) > 0) return WronskianSign::Indefinite;
  for (long x = 0;; x = x > 0 ? -x : -x + 1) {
    int s = sgn(w.eval(mpq_class(x)));
    if (s != 0) return s > 0 ? WronskianSign::NonNegative : WronskianSign::NonPositive;
  }
}

bool interlace(const QPoly& f, const QPoly& g) {
  if (f.is_zero() || g.is_zero()) throw PreconditionError("interlacing needs nonzero polynomials");
  if (!is_real_rooted(f) || !is_real_rooted(g))
    throw PreconditionError("interlacing needs real-rooted polynomials");
  QPoly s = squarefree_part(f * g);
  if (s.degree() == 0) return true;
  auto roots = isolate_real_roots(s);
  auto ff = squarefree_factorization(f);
  auto gf = squarefree_factorization(g);
  auto mult = [](const std::vector<std::pair<QPoly, unsigned>>& fac, const RealRoot& r) {
    unsigned m = 0;
    for (const auto& [h, k] : fac)
      if (sturm_count(h, r.lo, r.hi) == 1) m += k;
    return m;
  };
  long d = 0, lo = 0, hi = 0;
  for (const auto& r : roots) {
    d += static_cast<long>(mult(ff, r)) - static_cast<long>(mult(gf, r));
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  return hi - lo <= 1;
}

bool proper_position_uni(const QPoly& f, const QPoly& g) {
  if (f.is_zero() && g.is_zero()) return false;
  if (f.is_zero()) return is_real_rooted(g);
  if (g.is_zero()) return is_real_rooted(f);
  if (!is_real_rooted(f) || !is_real_rooted(g)) return false;
  if (!interlace(f, g)) return false;
  auto s = wronskian_sign_on_R(wronskian(f, g));
  return s == WronskianSign::NonPositive || s == WronskianSign::Zero;
}

std::string to_string(UniStatus s) {
  switch (s) {
    case UniStatus::Stable: return "Stable";
    case UniStatus::NotStable: return "NotStable";
    case UniStatus::ZeroPolynomial: return "ZeroPolynomial";
  }
  return "?";
}

unsigned count_upper_half_plane_roots(const UPoly& p) {
  if (p.is_zero()) throw PreconditionError("root count of the zero polynomial");
  QPoly P = upoly_real(p), Q = upoly_imag(p);
  QPoly G = poly_gcd(P, Q);
  long dg = G.degree();
  long real_g = static_cast<long>(real_root_count_with_multiplicity(G));
  if ((dg - real_g) % 2 != 0) throw InternalInconsistency("odd non-real root count of a real polynomial");
  long upper = (dg - real_g) / 2;

  QPoly P1 = exact_div(P, G), Q1 = exact_div(Q, G);
  long m = p.degree() - dg;
  if (m > 0) {
    if (P1.degree() < Q1.degree()) {
      QPoly t = P1;
      P1 = Q1;
      Q1 = -t;
    }
    auto seq = sturm_sequence(P1, Q1);
    long ind = static_cast<long>(sign_changes(seq, std::nullopt, false)) -
               static_cast<long>(sign_changes(seq, std::nullopt, true));
    if ((m - ind) % 2 != 0 || m - ind < 0 || m - ind > 2 * m)
      throw InternalInconsistency("Cauchy index out of range");
    upper += (m - ind) / 2;
  }
  return static_cast<unsigned>(upper);
}

unsigned count_roots_above(const UPoly& p, const mpq_class& y0) {
  return count_upper_half_plane_roots(p.affine(Scalar(1), Scalar(0, y0)));
}

std::optional<Scalar> recover_exact_root(const UPoly& p, const mpq_class& re, const mpq_class& im) {
  static const char* tols[] = {"1/1000", "1/1000000", "1/1000000000", "1/1000000000000",
                               "1/1000000000000000", "1/1000000000000000000000"};
  for (const char* t : tols) {
    mpq_class tol(t);
    Scalar cand(simplest_rational(re, tol), simplest_rational(im, tol));
    if (p.eval(cand).is_zero()) return cand;
  }
  return std::nullopt;
}

namespace {

UniWitness upper_root_witness(const UPoly& p) {
  UniWitness w;
  if (p.degree() >= 1) {
    auto res = numeric_roots(p);
    if (res.converged) {
      std::vector<const NumericRoot*> upper;
      for (const auto& r : res.roots)
        if (r.value.imag() > 0) upper.push_back(&r);
      std::sort(upper.begin(), upper.end(), [](const NumericRoot* a, const NumericRoot* b) {
        return a->value.imag() > b->value.imag();
      });
      for (const auto* r : upper) {
        auto exact = recover_exact_root(p, to_mpq(r->value.real()), to_mpq(r->value.imag()));
        if (exact && sgn(exact->im()) > 0) {
          w.exact_root = exact;
          break;
        }
      }
      if (!upper.empty()) {
        const auto& best = upper.front()->value;
        w.approx = std::make_pair(best.real().convert_to<double>(), best.imag().convert_to<double>());
        mpq_class im = to_mpq(best.imag());
        mpq_class y0 = simplest_rational(im / 2, im / 4);
        if (sgn(y0) > 0) {
          unsigned c = count_roots_above(p, y0);
          if (c > 0) {
            w.im_lower = y0;
            w.roots_in_region = c;
            return w;
          }
        }
      }
    }
  }
  w.im_lower = 0;
  w.roots_in_region = count_upper_half_plane_roots(p);
  if (w.roots_in_region == 0)
    throw InternalInconsistency("unstable verdict without an upper half-plane root");
  return w;
}

}  // namespace

bool uni_is_stable(const UPoly& p) {
  if (p.is_zero()) return false;
  if (p.degree() == 0) return true;
  return count_upper_half_plane_roots(p) == 0;
}

UniVerdict is_stable_uni(const UPoly& p) {
  UniVerdict v;
  if (p.is_zero()) return v;
  bool stable = uni_is_stable(p);
  v.status = stable ? UniStatus::Stable : UniStatus::NotStable;
  if (!stable) v.witness = upper_root_witness(p);
  return v;
}

bool is_strictly_stable_uni(const UPoly& p) {
  if (p.is_zero()) throw PreconditionError("strict stability of the zero polynomial");
  if (!is_stable_uni(p).stable()) return false;
  QPoly G = poly_gcd(upoly_real(p), upoly_imag(p));
  return sturm_count(G) == 0;
}

}  // namespace stabilis
