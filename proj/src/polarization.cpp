#include "stabilis/polarization.hpp"

#include "stabilis/combinatorics.hpp"
#include "stabilis/errors.hpp"
#include "stabilis/kernels.hpp"
#include "stabilis/transforms.hpp"

namespace stabilis {

PolarizedVars::PolarizedVars(Exponent kappa) : kappa_(std::move(kappa)) {
  for (auto k : kappa_) {
    offsets_.push_back(total_);
    total_ += k;
  }
}

std::size_t PolarizedVars::flat(std::size_t i, std::size_t j) const {
  if (i >= kappa_.size() || j >= kappa_[i]) throw DimensionError("polarized index out of range");
  return offsets_[i] + j;
}

std::size_t PolarizedVars::block_of(std::size_t k) const {
  if (k >= total_) throw DimensionError("flat index out of range");
  std::size_t i = 0;
  while (i + 1 < kappa_.size() && offsets_[i + 1] <= k) ++i;
  while (kappa_[i] == 0) ++i;
  return i;
}

namespace {

// elementary[i][k] = E_k of block i, as polynomials in the flat ring.
std::vector<std::vector<MPoly>> elementary(const PolarizedVars& pv) {
  const std::size_t N = pv.size();
  std::vector<std::vector<MPoly>> E;
  for (std::size_t i = 0; i < pv.kappa().size(); ++i) {
    std::vector<MPoly> e(pv.kappa()[i] + 1, MPoly(N));
    e[0] = MPoly::constant(N, Scalar(1));
    for (std::size_t j = 0; j < pv.kappa()[i]; ++j) {
      MPoly x = MPoly::variable(N, pv.flat(i, j));
      for (std::size_t k = j + 1; k >= 1; --k) e[k] += x * e[k - 1];
    }
    E.push_back(std::move(e));
  }
  return E;
}

}  // namespace

MPoly polarize(const MPoly& f, const Exponent& kappa) {
  if (f.nvars() != kappa.size()) throw DimensionError("kappa length differs from the number of variables");
  PolarizedVars pv(kappa);
  const auto E = elementary(pv);
  std::vector<std::pair<Exponent, Scalar>> terms(f.terms().begin(), f.terms().end());
  std::vector<MPoly> parts(terms.size(), MPoly(pv.size()));
  for (const auto& [a, c] : terms)
    if (!dominated(a, kappa)) throw DomainError("degree exceeds kappa");
  for_each_index(
      terms.size(),
      [&](std::size_t t) {
        const auto& [a, c] = terms[t];
        MPoly p = MPoly::constant(pv.size(), c / Scalar(mpq_class(binomial(kappa, a))));
        for (std::size_t i = 0; i < kappa.size(); ++i) p = p * E[i][a[i]];
        parts[t] = std::move(p);
      },
      0);
  MPoly out(pv.size());
  for (auto& p : parts) out += p;
  return out;
}

MPoly project(const MPoly& F, const Exponent& kappa) {
  PolarizedVars pv(kappa);
  if (F.nvars() != pv.size()) throw DimensionError("polynomial is not in the polarized ring");
  if (!F.multi_affine()) throw PreconditionError("projection needs a multi-affine polynomial");
  std::vector<MPoly> images;
  for (std::size_t k = 0; k < pv.size(); ++k) images.push_back(MPoly::variable(kappa.size(), pv.block_of(k)));
  return F.compose(images, kappa.size());
}

MPoly symmetrize(const MPoly& F, const Exponent& kappa) { return polarize(project(F, kappa), kappa); }

LinearOperatorSpec polarize_operator(const LinearOperatorSpec& T, const Exponent& kappa, const Exponent& gamma) {
  if (gamma.size() != T.out_nvars()) throw DimensionError("gamma has the wrong length");
  if (T.out_nvars() > 0 && !dominated(T.codomain_degree(), gamma))
    throw DomainError("codomain degree exceeds gamma");
  LinearOperatorSpec Tk = T.restricted(kappa);
  PolarizedVars in(kappa), out(gamma);
  Exponent ones(in.size(), 1);
  std::vector<Exponent> keys;
  for_each_below(ones, [&](const Exponent& s) { keys.push_back(s); });
  std::vector<MPoly> images(keys.size(), MPoly(out.size()));
  for_each_index(
      keys.size(),
      [&](std::size_t t) {
        Exponent a(kappa.size(), 0);
        for (std::size_t k = 0; k < in.size(); ++k) a[in.block_of(k)] += keys[t][k];
        images[t] = polarize(Tk.image(a), gamma);
      },
      1);
  LinearOperatorSpec::ImageMap table;
  for (std::size_t t = 0; t < keys.size(); ++t) table.emplace(keys[t], std::move(images[t]));
  return LinearOperatorSpec::table(ones, std::move(table), out.size());
}

bool reconstruction_check(const LinearOperatorSpec& T, const LinearOperatorSpec& PT, const Exponent& kappa,
                          const Exponent& gamma) {
  bool ok = true;
  for_each_below(kappa, [&](const Exponent& a) {
    if (!ok) return;
    MPoly lifted = polarize(MPoly::monomial(kappa.size(), a), kappa);
    ok = project(apply(PT, lifted), gamma) == T.image(a);
  });
  return ok;
}

bool polarized_symbol_identity_check(const LinearOperatorSpec& T, const Exponent& kappa, const Exponent& gamma) {
  LinearOperatorSpec PT = polarize_operator(T, kappa, gamma);
  MPoly lhs = algebraic_symbol(PT);
  Exponent both = gamma;
  both.insert(both.end(), kappa.begin(), kappa.end());
  MPoly rhs = polarize(algebraic_symbol(T, kappa), both);
  return lhs == rhs;
}

GwsReport gws_consistency_check(const MPoly& f, const Exponent& kappa, const SamplingConfig& cfg) {
  GwsReport rep;
  rep.polarized = polarize(f, kappa);
  rep.original = check_stability(f, cfg);
  rep.lifted = check_stability(rep.polarized, cfg);
  if (rep.original.refuted()) {
    const auto& w = *rep.original.witness;
    PolarizedVars pv(kappa);
    std::vector<mpq_class> lambda(pv.size());
    std::vector<Scalar> alpha(pv.size());
    for (std::size_t k = 0; k < pv.size(); ++k) {
      lambda[k] = w.lambda[pv.block_of(k)];
      alpha[k] = w.alpha[pv.block_of(k)];
    }
    rep.transported = check_line(rep.polarized, lambda, alpha);
    rep.transport_exact = rep.transported->refuted() && rep.transported->witness->restriction == w.restriction;
    // Sampling may miss the lift's zero set; the transported line settles it.
    rep.agree = rep.transport_exact;
  } else {
    rep.agree = !rep.lifted.refuted();
  }
  return rep;
}

}  // namespace stabilis
