#include "stabilis/multivariate.hpp"

#include "stabilis/errors.hpp"
#include "stabilis/kernels.hpp"
#include "stabilis/transforms.hpp"

namespace stabilis {

std::string to_string(MultiStatus s) {
  switch (s) {
    case MultiStatus::RefutedWithWitness: return "RefutedWithWitness";
    case MultiStatus::PassedSamples: return "PassedSamples";
    case MultiStatus::ExactStable: return "ExactStable";
    case MultiStatus::ZeroPolynomial: return "ZeroPolynomial";
    case MultiStatus::NotRealCoefficients: return "NotRealCoefficients";
  }
  return "?";
}

bool in_upper_half_plane(const std::vector<Scalar>& point) {
  for (const auto& z : point)
    if (sgn(z.im()) <= 0) return false;
  return true;
}

namespace {

bool line_refutes(const UPoly& r) { return r.is_zero() || !uni_is_stable(r); }

MultiWitness witness_on_line(const std::vector<mpq_class>& lambda, const std::vector<Scalar>& alpha,
                             UPoly r, std::size_t index) {
  MultiWitness w;
  w.lambda = lambda;
  w.alpha = alpha;
  w.sample_index = index;
  if (r.is_zero()) {
    w.point = line_point(lambda, alpha, Scalar::i());
  } else {
    UniVerdict uv = is_stable_uni(r);
    if (uv.status != UniStatus::NotStable || !uv.witness)
      throw InternalInconsistency("line restriction flagged but not unstable");
    w.root = uv.witness;
    if (uv.witness->exact_root) w.point = line_point(lambda, alpha, *uv.witness->exact_root);
  }
  w.restriction = std::move(r);
  return w;
}

std::size_t active_variables(const MPoly& f) {
  std::size_t active = 0;
  for (std::size_t k = 0; k < f.nvars(); ++k)
    if (f.degree(k) > 0) ++active;
  return active;
}

MPoly lift(const MPoly& f, std::size_t target) {
  std::vector<std::size_t> map(f.nvars());
  for (std::size_t k = 0; k < map.size(); ++k) map[k] = k;
  return f.remap(map, target);
}

}  // namespace

MultiVerdict check_line(const MPoly& f, const std::vector<mpq_class>& lambda, const std::vector<mpq_class>& alpha) {
  return check_line(f, lambda, real_offsets(alpha));
}

MultiVerdict check_line(const MPoly& f, const std::vector<mpq_class>& lambda, const std::vector<Scalar>& alpha) {
  MultiVerdict v;
  if (f.is_zero()) return v;
  UPoly r = restrict_to_line(f, lambda, alpha);
  v.samples = 1;
  if (line_refutes(r)) {
    v.status = MultiStatus::RefutedWithWitness;
    v.witness = witness_on_line(lambda, alpha, std::move(r), 0);
  } else {
    v.status = MultiStatus::PassedSamples;
  }
  return v;
}

MultiVerdict check_stability(const MPoly& f, const SamplingConfig& cfg) {
  MultiVerdict v;
  v.seed = cfg.seed;
  if (f.is_zero()) return v;
  const std::size_t n = f.nvars();
  const std::vector<mpq_class> ones(n, mpq_class(1));
  const std::vector<Scalar> zeros(n, Scalar(0));

  if (active_variables(f) <= 1) {
    // Only one variable occurs, so the diagonal line is an exact reduction.
    UPoly r = restrict_to_line(f, ones, zeros);
    if (uni_is_stable(r)) {
      v.status = MultiStatus::ExactStable;
    } else {
      v.status = MultiStatus::RefutedWithWitness;
      v.witness = witness_on_line(ones, zeros, std::move(r), 0);
    }
    return v;
  }

  v.samples = cfg.sample_count;
  auto hit = first_failure(
      cfg.sample_count,
      [&](std::size_t k) {
        Line line = sample_line(n, k, cfg);
        return line_refutes(restrict_to_line(f, line.lambda, line.alpha));
      },
      cfg.threads);
  if (!hit) {
    v.status = MultiStatus::PassedSamples;
    return v;
  }
  Line line = sample_line(n, *hit, cfg);
  v.status = MultiStatus::RefutedWithWitness;
  v.witness = witness_on_line(line.lambda, line.alpha, restrict_to_line(f, line.lambda, line.alpha), *hit);
  return v;
}

MultiVerdict check_real_stability(const MPoly& f, const SamplingConfig& cfg) {
  if (!f.is_real()) {
    MultiVerdict v;
    v.status = MultiStatus::NotRealCoefficients;
    v.seed = cfg.seed;
    return v;
  }
  return check_stability(f, cfg);
}

bool verify_witness(const MPoly& f, const MultiWitness& w) {
  if (w.point) {
    if (!in_upper_half_plane(*w.point) || !f.evaluate(*w.point).is_zero()) return false;
  }
  UPoly r = restrict_to_line(f, w.lambda, w.alpha);
  if (r != w.restriction) return false;
  if (r.is_zero()) return w.point.has_value();
  if (uni_is_stable(r)) return false;
  if (w.root && count_roots_above(r, w.root->im_lower) != w.root->roots_in_region) return false;
  return true;
}

MPoly wronskian_j(const MPoly& g, const MPoly& f, std::size_t j) {
  if (g.nvars() != f.nvars()) throw DimensionError("Wronskian of polynomials in different rings");
  return g.derivative(j) * f - g * f.derivative(j);
}

ProperPositionResult proper_position_multi(const MPoly& f, const MPoly& g, const SamplingConfig& cfg) {
  if (f.nvars() != g.nvars()) throw DimensionError("proper position of polynomials in different rings");
  const std::size_t n = f.nvars();
  ProperPositionResult out;
  MPoly h = g + f * Scalar::i();
  out.verdict = check_stability(h, cfg);
  if (!cfg.strict_mode || !f.is_real() || !g.is_real()) return out;

  MPoly lifted = lift(g, n + 1) + MPoly::variable(n + 1, n) * lift(f, n + 1);
  MultiVerdict second = check_real_stability(lifted, cfg);

  if (out.verdict.refuted() && second.passed()) {
    // A zero of g + i f at zeta gives the zero (zeta, i) of g + z_{n+1} f.
    const MultiWitness& w = *out.verdict.witness;
    std::optional<Scalar> t0;
    if (w.restriction.is_zero()) {
      t0 = Scalar::i();
    } else if (w.root->exact_root) {
      t0 = w.root->exact_root;
    } else if (w.root->approx) {
      t0 = Scalar(mpq_class(w.root->approx->first), mpq_class(w.root->approx->second));
    }
    bool moved = false;
    if (t0 && sgn(t0->im()) > 0) {
      std::vector<mpq_class> lam = w.lambda;
      std::vector<Scalar> alp = w.alpha;
      lam.push_back(1 / t0->im());
      alp.push_back(Scalar(-t0->re() / t0->im()));
      MultiVerdict carried = check_line(lifted, lam, alp);
      if (carried.refuted()) {
        carried.seed = cfg.seed;
        second = carried;
        moved = true;
      }
    }
    out.transported = moved;
  } else if (second.refuted() && out.verdict.passed()) {
    const MultiWitness& w = *second.witness;
    bool moved = false;
    if (w.point && sgn((*w.point)[n].im()) > 0) {
      // First n coordinates of the lifted line.
      std::vector<mpq_class> lam(w.lambda.begin(), w.lambda.begin() + static_cast<long>(n));
      std::vector<Scalar> alp(w.alpha.begin(), w.alpha.begin() + static_cast<long>(n));
      MultiVerdict carried = check_line(h, lam, alp);
      if (carried.refuted()) {
        carried.seed = cfg.seed;
        carried.samples = out.verdict.samples;
        out.verdict = carried;
        moved = true;
      }
    }
    if (!moved) {
      out.verdict.status = MultiStatus::RefutedWithWitness;
      out.verdict.witness = w;
      out.witness_on_lift = true;
    }
    out.transported = moved;
  }
  out.lifted = second;
  return out;
}

PencilReport hko_pencil_check(const MPoly& f, const MPoly& g, const SamplingConfig& cfg) {
  if (!f.is_real() || !g.is_real()) throw PreconditionError("pencil check needs real coefficients");
  if (f.nvars() != g.nvars()) throw DimensionError("pencil of polynomials in different rings");
  PencilReport rep;
  std::vector<std::pair<mpq_class, mpq_class>> coeffs = {
      {1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 1}, {1, 2}, {-1, 2}, {3, -1}};
  std::uint64_t s = stream_state(cfg.seed, 0xC0FFEE);
  for (int k = 0; k < 8; ++k) coeffs.emplace_back(random_signed(s, cfg.height), random_signed(s, cfg.height));
  for (const auto& [a, b] : coeffs) {
    PencilMember m;
    m.a = a;
    m.b = b;
    MPoly p = f * Scalar(a) + g * Scalar(b);
    m.zero = p.is_zero();
    if (!m.zero) {
      m.verdict = check_real_stability(p, cfg);
      if (m.verdict.refuted()) rep.pencil_ok = false;
    }
    rep.members.push_back(std::move(m));
  }
  rep.f_before_g = proper_position_multi(f, g, cfg).verdict.passed();
  rep.g_before_f = proper_position_multi(g, f, cfg).verdict.passed();
  bool both_zero = f.is_zero() && g.is_zero();
  // Refutations are exact, so a refuted pencil next to a passed proper position is a contradiction,
  // and so is a clean pencil next to two refuted orders.
  rep.consistent = rep.pencil_ok == (both_zero || rep.f_before_g || rep.g_before_f);

  const std::size_t n = f.nvars();
  const std::size_t points = 16;
  for (std::size_t p = 0; p < points; ++p) {
    std::vector<Scalar> x;
    std::vector<mpq_class> xq;
    for (std::size_t k = 0; k < n; ++k) {
      xq.push_back(random_signed(s, cfg.height));
      x.emplace_back(xq.back());
    }
    ++rep.wronskian_points;
    for (std::size_t j = 0; j < n; ++j) {
      mpq_class w = wronskian_j(g, f, j).evaluate(x).re();
      bool bad = (rep.f_before_g && sgn(w) < 0) || (rep.g_before_f && sgn(w) > 0);
      if (bad) rep.wronskian_violations.push_back({j, xq, w});
    }
  }
  return rep;
}

LiebSokalResult lieb_sokal(const MPoly& P, const MPoly& Q, std::size_t j, const SamplingConfig& cfg) {
  if (P.nvars() != Q.nvars()) throw DimensionError("Lieb-Sokal pair in different rings");
  const std::size_t n = P.nvars();
  if (j >= n) throw DimensionError("variable index out of range");
  MPoly F = lift(P, n + 1) + MPoly::variable(n + 1, n) * lift(Q, n + 1);
  if (F.degree(j) > 1) throw PreconditionError("degree in the chosen variable exceeds one");
  if (check_stability(F, cfg).refuted()) throw PreconditionError("P + wQ is not stable");
  LiebSokalResult out{P - Q.derivative(j), MultiVerdict{}};
  out.verdict = check_stability(out.output, cfg);
  return out;
}

GeneratedStable generate_stable(const Exponent& kappa, const std::vector<Scalar>& W, const MPoly& f,
                                const std::optional<mpq_class>& epsilon) {
  const std::size_t n = kappa.size();
  if (W.size() != n || f.nvars() != n) throw DimensionError("generator inputs disagree on the number of variables");
  for (const auto& w : W)
    if (sgn(w.im()) <= 0) throw PreconditionError("W must lie in the open upper half-plane");
  if (!f.is_zero() && !dominated(f.degrees(), kappa)) throw DomainError("f exceeds the degree bound kappa");

  std::vector<MPoly> shift;
  MPoly base = MPoly::constant(n, Scalar(1));
  for (std::size_t i = 0; i < n; ++i) {
    shift.push_back(MPoly::variable(n, i) - MPoly::constant(n, W[i]));
    base = base * (MPoly::variable(n, i) + MPoly::constant(n, W[i])).pow(kappa[i]);
  }
  GeneratedStable out;
  out.expansion_bound = 0;
  const MPoly shifted = f.compose(shift, n);
  for (const auto& [e, c] : shifted.terms()) {
    mpq_class term = c.abs_bound();
    for (std::size_t i = 0; i < n; ++i) {
      const mpq_class& y = W[i].im();
      for (std::uint32_t k = e[i]; k < kappa[i]; ++k) term /= y;
    }
    out.expansion_bound += term;
  }
  if (epsilon) {
    out.epsilon = *epsilon;
  } else {
    // Largest power of two not above 1/(2 bound).
    out.epsilon = 1;
    while (out.epsilon * 2 * out.expansion_bound > 1) out.epsilon /= 2;
  }
  out.guaranteed = sgn(out.epsilon) >= 0 && out.epsilon * out.expansion_bound < 1;
  out.poly = base + f * Scalar(out.epsilon);
  return out;
}

ComplexMultipleResult is_complex_multiple_of_real_stable(const MPoly& f, const SamplingConfig& cfg) {
  if (f.is_zero()) throw PreconditionError("zero polynomial has no real normalization");
  ComplexMultipleResult out;
  out.factor = f.terms().begin()->second;
  out.normalized = f * (Scalar(1) / out.factor);
  out.real_multiple = out.normalized.is_real();
  if (out.real_multiple) {
    out.verdict = check_real_stability(out.normalized, cfg);
  } else {
    out.verdict.status = MultiStatus::NotRealCoefficients;
    out.verdict.seed = cfg.seed;
  }
  return out;
}

}  // namespace stabilis
