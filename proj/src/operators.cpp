#include "stabilis/operators.hpp"

#include "stabilis/combinatorics.hpp"
#include "stabilis/errors.hpp"
#include "stabilis/kernels.hpp"
#include "stabilis/transforms.hpp"

namespace stabilis {

std::string to_string(OperatorKind k) {
  switch (k) {
    case OperatorKind::Table: return "table";
    case OperatorKind::Diagonal: return "diagonal";
    case OperatorKind::Differential: return "differential";
    case OperatorKind::Composition: return "composition";
  }
  return "?";
}

std::string to_string(PreserverVerdict v) {
  switch (v) {
    case PreserverVerdict::PreserverDegenerate: return "Preserver-Degenerate";
    case PreserverVerdict::PreserverSymbolStable: return "Preserver-SymbolStable";
    case PreserverVerdict::NotPreserver: return "NotPreserver";
    case PreserverVerdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

LinearOperatorSpec LinearOperatorSpec::table(const Exponent& kappa, ImageMap images, std::size_t out_nvars) {
  LinearOperatorSpec T;
  T.kappa_ = kappa;
  T.out_nvars_ = out_nvars;
  for (const auto& [a, p] : images) {
    if (a.size() != kappa.size()) throw DimensionError("image key has the wrong length");
    if (!dominated(a, kappa)) throw DomainError("image key outside the degree box");
    if (p.nvars() != out_nvars) throw DimensionError("image lives in the wrong ring");
  }
  for_each_below(kappa, [&](const Exponent& a) {
    auto it = images.find(a);
    T.images_.emplace(a, it == images.end() ? MPoly(out_nvars) : it->second);
  });
  return T;
}

LinearOperatorSpec LinearOperatorSpec::diagonal(const Exponent& kappa,
                                                const std::function<Scalar(const Exponent&)>& value) {
  ImageMap images;
  for_each_below(kappa, [&](const Exponent& a) { images.emplace(a, MPoly::monomial(kappa.size(), a, value(a))); });
  LinearOperatorSpec T = table(kappa, std::move(images));
  T.kind_ = OperatorKind::Diagonal;
  return T;
}

LinearOperatorSpec LinearOperatorSpec::differential(const Exponent& kappa,
                                                    const std::vector<DifferentialTerm>& terms) {
  const std::size_t n = kappa.size();
  ImageMap images;
  for_each_below(kappa, [&](const Exponent& g) {
    MPoly img(n);
    for (const auto& t : terms) {
      if (t.zexp.size() != n || t.dexp.size() != n) throw DimensionError("differential term has the wrong length");
      mpz_class ff = falling_factorial(g, t.dexp);
      if (ff == 0) continue;
      Exponent e(n);
      for (std::size_t k = 0; k < n; ++k) e[k] = t.zexp[k] + g[k] - t.dexp[k];
      img.add_term(e, t.coeff * Scalar(mpq_class(ff)));
    }
    images.emplace(g, std::move(img));
  });
  LinearOperatorSpec T = table(kappa, std::move(images));
  T.kind_ = OperatorKind::Differential;
  return T;
}

LinearOperatorSpec LinearOperatorSpec::identity(const Exponent& kappa) {
  return diagonal(kappa, [](const Exponent&) { return Scalar(1); });
}

LinearOperatorSpec LinearOperatorSpec::compose(const LinearOperatorSpec& outer, const LinearOperatorSpec& inner) {
  if (inner.out_nvars() != outer.nvars()) throw DimensionError("composition across different rings");
  ImageMap images;
  for (const auto& [a, p] : inner.images()) images.emplace(a, apply(outer, p));
  LinearOperatorSpec T = table(inner.kappa(), std::move(images), outer.out_nvars());
  T.kind_ = OperatorKind::Composition;
  return T;
}

const MPoly& LinearOperatorSpec::image(const Exponent& alpha) const {
  auto it = images_.find(alpha);
  if (it == images_.end()) throw DomainError("operator table has no image for this monomial");
  return it->second;
}

bool LinearOperatorSpec::is_real() const {
  for (const auto& [a, p] : images_)
    if (!p.is_real()) return false;
  return true;
}

Exponent LinearOperatorSpec::codomain_degree() const {
  Exponent g(out_nvars_, 0);
  for (const auto& [a, p] : images_) {
    if (p.is_zero()) continue;
    Exponent d = p.degrees();
    for (std::size_t k = 0; k < g.size(); ++k) g[k] = std::max(g[k], d[k]);
  }
  return g;
}

LinearOperatorSpec LinearOperatorSpec::restricted(const Exponent& kappa) const {
  if (kappa.size() != kappa_.size() || !dominated(kappa, kappa_))
    throw DomainError("restriction box exceeds the operator table");
  ImageMap images;
  for_each_below(kappa, [&](const Exponent& a) { images.emplace(a, image(a)); });
  LinearOperatorSpec T = table(kappa, std::move(images), out_nvars_);
  T.kind_ = kind_;
  return T;
}

MPoly apply(const LinearOperatorSpec& T, const MPoly& f) {
  if (f.nvars() != T.nvars()) throw DimensionError("operator applied to a polynomial in the wrong ring");
  MPoly out(T.out_nvars());
  for (const auto& [e, c] : f.terms()) {
    if (!dominated(e, T.kappa())) throw DomainError("input degree exceeds the operator's degree box");
    out += T.image(e) * c;
  }
  return out;
}

namespace {

std::vector<std::size_t> prefix_map(std::size_t n) {
  std::vector<std::size_t> m(n);
  for (std::size_t k = 0; k < n; ++k) m[k] = k;
  return m;
}

void check_box(const LinearOperatorSpec& T, const Exponent& kappa) {
  if (kappa.size() != T.nvars()) throw DimensionError("degree box has the wrong length");
  if (!dominated(kappa, T.kappa())) throw DomainError("operator table does not cover the requested box");
}

// sum over alpha <= box of weight(alpha) * T(z^alpha) * w^wexp(alpha)
template <class Weight, class WExp>
MPoly symbol_sum(const LinearOperatorSpec& T, const Exponent& box, Weight&& weight, WExp&& wexp) {
  const std::size_t m = T.out_nvars(), n = T.nvars();
  const auto zmap = prefix_map(m);
  MPoly out(m + n);
  for_each_below(box, [&](const Exponent& a) {
    const MPoly& img = T.image(a);
    if (img.is_zero()) return;
    Scalar w = weight(a);
    if (w.is_zero()) return;
    Exponent e(m + n, 0);
    Exponent we = wexp(a);
    for (std::size_t k = 0; k < n; ++k) e[m + k] = we[k];
    out += img.remap(zmap, m + n).shift(e) * w;
  });
  return out;
}

Exponent minus(const Exponent& a, const Exponent& b) {
  Exponent c(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) c[k] = a[k] - b[k];
  return c;
}

}  // namespace

MPoly algebraic_symbol(const LinearOperatorSpec& T, const Exponent& kappa) {
  check_box(T, kappa);
  return symbol_sum(
      T, kappa, [&](const Exponent& a) { return Scalar(mpq_class(binomial(kappa, a))); },
      [&](const Exponent& a) { return minus(kappa, a); });
}

MPoly alt_symbol(const LinearOperatorSpec& T, const Exponent& kappa) {
  check_box(T, kappa);
  return symbol_sum(
      T, kappa,
      [&](const Exponent& a) {
        Scalar b(mpq_class(binomial(kappa, a)));
        return total_degree(a) % 2 ? -b : b;
      },
      [](const Exponent& a) { return a; });
}

MPoly reflected_symbol(const LinearOperatorSpec& T, const Exponent& kappa) {
  MPoly G = algebraic_symbol(T, kappa);
  const std::size_t m = T.out_nvars();
  MPoly out(G.nvars());
  for (const auto& [e, c] : G.terms()) {
    unsigned wdeg = 0;
    for (std::size_t k = m; k < e.size(); ++k) wdeg += e[k];
    out.add_term(e, wdeg % 2 ? -c : c);
  }
  return out;
}

MPoly reciprocal_in_w(const MPoly& G, std::size_t nz, const Exponent& kappa) {
  MPoly out(G.nvars());
  for (const auto& [e, c] : G.terms()) {
    Exponent f = e;
    unsigned wdeg = 0;
    for (std::size_t k = 0; k < kappa.size(); ++k) {
      if (e[nz + k] > kappa[k]) throw DomainError("w-degree exceeds kappa");
      f[nz + k] = kappa[k] - e[nz + k];
      wdeg += e[nz + k];
    }
    out.add_term(f, wdeg % 2 ? -c : c);
  }
  return out;
}

bool alt_symbol_identity(const LinearOperatorSpec& T, const Exponent& kappa) {
  MPoly lhs = reciprocal_in_w(algebraic_symbol(T, kappa), T.out_nvars(), kappa);
  MPoly rhs = alt_symbol(T, kappa);
  if (total_degree(kappa) % 2) rhs = -rhs;
  return lhs == rhs;
}

RangeInfo range_dimension(const LinearOperatorSpec& T) {
  RangeInfo info;
  std::vector<MPoly> rows;
  std::vector<Exponent> pivots;
  for (const auto& [a, img] : T.images()) {
    MPoly v = img;
    for (std::size_t r = 0; r < rows.size() && !v.is_zero(); ++r) {
      Scalar c = v.coeff(pivots[r]);
      if (!c.is_zero()) v -= rows[r] * (c / rows[r].coeff(pivots[r]));
    }
    if (v.is_zero()) continue;
    pivots.push_back(v.terms().begin()->first);
    rows.push_back(std::move(v));
    info.basis.push_back(img);
  }
  info.rank = rows.size();
  return info;
}

namespace {

std::vector<Scalar> w_part(const std::vector<Scalar>& point, std::size_t m, std::size_t n) {
  return std::vector<Scalar>(point.begin() + static_cast<long>(m), point.begin() + static_cast<long>(m + n));
}

MPoly shifted_power(const Exponent& kappa, const std::vector<Scalar>& W) {
  const std::size_t n = kappa.size();
  MPoly f = MPoly::constant(n, Scalar(1));
  for (std::size_t i = 0; i < n; ++i)
    f = f * (MPoly::variable(n, i) + MPoly::constant(n, W[i])).pow(kappa[i]);
  return f;
}

}  // namespace

std::optional<Refuter> find_refuter(const LinearOperatorSpec& T, const Exponent& kappa,
                                    const MultiVerdict& symbol_verdict, const SamplingConfig& cfg) {
  const std::size_t m = T.out_nvars(), n = T.nvars();
  std::vector<std::vector<Scalar>> candidates{std::vector<Scalar>(n, Scalar::i()), std::vector<Scalar>(n, Scalar(1, 1))};
  std::optional<Line> zline;
  if (symbol_verdict.witness) {
    const auto& w = *symbol_verdict.witness;
    zline = Line{std::vector<mpq_class>(w.lambda.begin(), w.lambda.begin() + static_cast<long>(m)),
                 std::vector<Scalar>(w.alpha.begin(), w.alpha.begin() + static_cast<long>(m))};
    if (w.point) {
      candidates.push_back(w_part(*w.point, m, n));
    } else if (w.root && w.root->exact_root) {
      candidates.push_back(w_part(line_point(w.lambda, w.alpha, *w.root->exact_root), m, n));
    } else if (w.root && w.root->approx) {
      Scalar t0(mpq_class(w.root->approx->first), mpq_class(w.root->approx->second));
      if (sgn(t0.im()) > 0) candidates.push_back(w_part(line_point(w.lambda, w.alpha, t0), m, n));
    }
  }
  std::uint64_t s = stream_state(cfg.seed, 0xBADC0DE);
  for (int k = 0; k < 4; ++k) {
    std::vector<Scalar> W;
    for (std::size_t i = 0; i < n; ++i) W.emplace_back(random_signed(s, cfg.height), random_positive(s, cfg.height));
    candidates.push_back(std::move(W));
  }

  for (const auto& W : candidates) {
    std::vector<MPoly> inputs{shifted_power(kappa, W)};
    // Perturbations from the stable generator, in case T kills the pure power.
    for_each_below(kappa, [&](const Exponent& a) {
      if (inputs.size() < 4 && total_degree(a) > 0)
        inputs.push_back(generate_stable(kappa, W, MPoly::monomial(n, a)).poly);
    });
    for (const auto& f : inputs) {
      MPoly img = apply(T, f);
      if (img.is_zero()) continue;
      MultiVerdict v;
      if (zline) v = check_line(img, zline->lambda, zline->alpha);
      if (!v.refuted()) v = check_stability(img, cfg);
      if (v.refuted()) return Refuter{W, f, img, v};
    }
  }
  return std::nullopt;
}

namespace {

void accept_sampled(CertificationReport& rep, PreserverVerdict v, const std::string& branch, bool certified,
                    const SamplingConfig& cfg) {
  rep.branch = branch;
  rep.certified = certified;
  rep.verdict = (cfg.require_certified && !certified) ? PreserverVerdict::Inconclusive : v;
  if (rep.verdict == PreserverVerdict::Inconclusive) rep.note = "acceptance rests on sampling only";
}

}  // namespace

CertificationReport certify_complex_preserver(const LinearOperatorSpec& T, const Exponent& kappa,
                                              const SamplingConfig& cfg) {
  CertificationReport rep;
  LinearOperatorSpec Tk = T.restricted(kappa);
  rep.symbol = algebraic_symbol(Tk, kappa);
  rep.symbol_verdict = check_stability(rep.symbol, cfg);
  rep.range = range_dimension(Tk);
  if (rep.symbol_verdict->passed()) {
    accept_sampled(rep, PreserverVerdict::PreserverSymbolStable, "b", rep.symbol_verdict->certified(), cfg);
    return rep;
  }
  if (rep.range.rank == 0) {
    rep.verdict = PreserverVerdict::PreserverDegenerate;
    rep.branch = "a";
    rep.certified = true;
    rep.note = "operator is identically zero";
    return rep;
  }
  if (rep.range.rank == 1) {
    rep.basis_verdict = check_stability(rep.range.basis[0], cfg);
    if (rep.basis_verdict->passed()) {
      accept_sampled(rep, PreserverVerdict::PreserverDegenerate, "a", rep.basis_verdict->certified(), cfg);
    } else {
      rep.verdict = PreserverVerdict::NotPreserver;
      rep.certified = true;
      rep.note = "rank one with unstable range generator";
    }
    return rep;
  }
  rep.verdict = PreserverVerdict::NotPreserver;
  rep.certified = true;
  rep.refuter = find_refuter(Tk, kappa, *rep.symbol_verdict, cfg);
  return rep;
}

CertificationReport certify_real_preserver(const LinearOperatorSpec& T, const Exponent& kappa,
                                           const SamplingConfig& cfg) {
  if (!T.is_real()) throw PreconditionError("real certification needs real-coefficient images");
  CertificationReport rep;
  LinearOperatorSpec Tk = T.restricted(kappa);
  rep.symbol = algebraic_symbol(Tk, kappa);
  rep.symbol_verdict = check_real_stability(rep.symbol, cfg);
  rep.range = range_dimension(Tk);
  if (rep.symbol_verdict->passed()) {
    accept_sampled(rep, PreserverVerdict::PreserverSymbolStable, "b", rep.symbol_verdict->certified(), cfg);
    return rep;
  }
  rep.reflected = reflected_symbol(Tk, kappa);
  rep.reflected_verdict = check_real_stability(*rep.reflected, cfg);
  if (rep.reflected_verdict->passed()) {
    accept_sampled(rep, PreserverVerdict::PreserverSymbolStable, "c", rep.reflected_verdict->certified(), cfg);
    return rep;
  }
  if (rep.range.rank == 0) {
    rep.verdict = PreserverVerdict::PreserverDegenerate;
    rep.branch = "a";
    rep.certified = true;
    rep.note = "operator is identically zero";
    return rep;
  }
  if (rep.range.rank == 1) {
    rep.basis_verdict = check_real_stability(rep.range.basis[0], cfg);
    if (rep.basis_verdict->passed()) {
      accept_sampled(rep, PreserverVerdict::PreserverDegenerate, "a", rep.basis_verdict->certified(), cfg);
    } else {
      rep.verdict = PreserverVerdict::NotPreserver;
      rep.certified = true;
      rep.note = "rank one with a range generator that is not real stable";
    }
    return rep;
  }
  if (rep.range.rank == 2) {
    const MPoly& P = rep.range.basis[0];
    const MPoly& Q = rep.range.basis[1];
    rep.basis_pq = proper_position_multi(P, Q, cfg);
    if (rep.basis_pq->verdict.passed()) {
      accept_sampled(rep, PreserverVerdict::PreserverDegenerate, "a", rep.basis_pq->verdict.certified(), cfg);
      return rep;
    }
    rep.basis_qp = proper_position_multi(Q, P, cfg);
    if (rep.basis_qp->verdict.passed()) {
      accept_sampled(rep, PreserverVerdict::PreserverDegenerate, "a", rep.basis_qp->verdict.certified(), cfg);
      return rep;
    }
    rep.note = "rank two range basis is in proper position in neither order";
  }
  rep.verdict = PreserverVerdict::NotPreserver;
  rep.certified = true;
  return rep;
}

MPoly transcendental_truncation(const LinearOperatorSpec& T, const Exponent& beta) {
  if (beta.size() != T.nvars()) throw DimensionError("beta has the wrong length");
  if (!dominated(beta, T.kappa())) throw DomainError("operator table does not cover every alpha <= beta");
  return symbol_sum(
      T, beta,
      [&](const Exponent& a) {
        mpq_class c(falling_factorial(beta, a), factorial(a));
        c.canonicalize();
        Scalar s(c);
        return total_degree(a) % 2 ? -s : s;
      },
      [](const Exponent& a) { return a; });
}

MultiVerdict transcendental_truncation_check(const LinearOperatorSpec& T, const Exponent& beta,
                                             const SamplingConfig& cfg) {
  return check_stability(transcendental_truncation(T, beta), cfg);
}

TruncationSweep certify_transcendental(const LinearOperatorSpec& T, const Exponent& beta_max,
                                       const SamplingConfig& cfg) {
  if (beta_max.size() != T.nvars()) throw DimensionError("beta_max has the wrong length");
  if (!dominated(beta_max, T.kappa())) throw DomainError("operator table does not cover beta_max");
  TruncationSweep sweep;
  for_each_below(beta_max, [&](const Exponent& b) { sweep.betas.push_back(b); });
  sweep.verdicts.resize(sweep.betas.size());
  SamplingConfig inner = cfg;
  inner.threads = 1;
  for_each_index(
      sweep.betas.size(),
      [&](std::size_t k) { sweep.verdicts[k] = transcendental_truncation_check(T, sweep.betas[k], inner); },
      cfg.threads);
  for (std::size_t k = 0; k < sweep.verdicts.size(); ++k) {
    if (sweep.verdicts[k].refuted()) {
      sweep.first_refuted = k;
      break;
    }
  }
  return sweep;
}

MPoly halfplane_symbol_truncation(const LinearOperatorSpec& T, const Exponent& beta) {
  if (beta.size() != T.nvars()) throw DimensionError("beta has the wrong length");
  if (!dominated(beta, T.kappa())) throw DomainError("operator table does not cover every alpha <= beta");
  return symbol_sum(
      T, beta, [&](const Exponent& a) { return Scalar(mpq_class(binomial(beta, a))); },
      [](const Exponent& a) { return a; });
}

LinearOperatorSpec jensen_operator(const Exponent& beta, const Exponent& kappa, JensenVariant variant) {
  if (beta.size() != kappa.size()) throw DimensionError("beta and kappa lengths differ");
  return LinearOperatorSpec::diagonal(kappa, [&](const Exponent& a) {
    if (variant == JensenVariant::Falling) return Scalar(mpq_class(falling_factorial(beta, a)));
    return Scalar(jensen_multiplier(a, beta));
  });
}

}  // namespace stabilis
