#include "stabilis/domains.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "stabilis/combinatorics.hpp"
#include "stabilis/errors.hpp"
#include "stabilis/kernels.hpp"
#include "stabilis/transforms.hpp"

namespace stabilis {

MoebiusMap::MoebiusMap(Scalar a_, Scalar b_, Scalar c_, Scalar d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
  if (determinant().is_zero()) throw DomainError("Moebius map with ad - bc = 0");
}

std::optional<Scalar> MoebiusMap::operator()(const Scalar& z) const {
  Scalar den = c * z + d;
  if (den.is_zero()) return std::nullopt;
  return (a * z + b) / den;
}

std::optional<MoebiusMap> MoebiusMap::normalized() const {
  Scalar s;
  if (!gaussian_sqrt(determinant(), s)) return std::nullopt;
  return MoebiusMap(a / s, b / s, c / s, d / s);
}

std::string to_string(DomainKind k) {
  switch (k) {
    case DomainKind::OpenDisk: return "disk";
    case DomainKind::OpenHalfPlane: return "halfplane";
    case DomainKind::ExteriorOfClosedDisk: return "exterior";
  }
  return "?";
}

namespace {

mpq_class im_of_product(const Scalar& x, const Scalar& y) { return x.im() * y.re() + x.re() * y.im(); }
mpq_class re_of_product(const Scalar& x, const Scalar& y) { return x.re() * y.re() - x.im() * y.im(); }

}  // namespace

CircularDomain::CircularDomain(MoebiusMap phi) : phi_(std::move(phi)) {
  // Im phi(z) |cz+d|^2 = A|z|^2 + Bx x + By y + Dv.
  const auto& [a, b, c, d] = std::tie(phi_.a, phi_.b, phi_.c, phi_.d);
  mpq_class A = im_of_product(a, c.conj());
  mpq_class Bx = im_of_product(a, d.conj()) + im_of_product(b, c.conj());
  mpq_class By = re_of_product(a, d.conj()) - re_of_product(b, c.conj());
  mpq_class Dv = im_of_product(b, d.conj());
  if (sgn(A) == 0) {
    kind_ = DomainKind::OpenHalfPlane;
    normal_ = Scalar(Bx, By);
    offset_ = Dv;
  } else {
    kind_ = sgn(A) < 0 ? DomainKind::OpenDisk : DomainKind::ExteriorOfClosedDisk;
    center_ = Scalar(-Bx / (2 * A), -By / (2 * A));
    radius2_ = center_.norm2() - Dv / A;
  }
}

CircularDomain CircularDomain::unit_disk() { return CircularDomain(MoebiusMap(1, Scalar::i(), Scalar::i(), 1)); }

CircularDomain CircularDomain::unit_disk_exterior() {
  return CircularDomain(MoebiusMap(-1, -Scalar::i(), Scalar::i(), 1));
}

CircularDomain CircularDomain::rotated_half_plane(int quarter_turns) {
  static const Scalar units[4] = {Scalar(1), Scalar::i(), Scalar(-1), -Scalar::i()};
  return CircularDomain(MoebiusMap(units[((quarter_turns % 4) + 4) % 4], 0, 0, 1));
}

bool CircularDomain::contains(const Scalar& z) const {
  Scalar den = phi_.c * z + phi_.d;
  if (den.is_zero()) return false;
  return sgn(im_of_product(phi_.a * z + phi_.b, den.conj())) > 0;
}

bool CircularDomain::contains_by_shape(const Scalar& z) const {
  if (kind_ == DomainKind::OpenHalfPlane) return sgn(re_of_product(normal_.conj(), z) + offset_) > 0;
  mpq_class dist2 = (z - center_).norm2();
  return kind_ == DomainKind::OpenDisk ? dist2 < radius2_ : dist2 > radius2_;
}

CircularDomain CircularDomain::reflect() const {
  return CircularDomain(MoebiusMap(-phi_.a, -phi_.b, phi_.c, phi_.d));
}

namespace {

// Largest power of two rho with rho^2 <= r2 (or smallest with rho^2 >= r2).
mpq_class power_of_two_radius(const mpq_class& r2, bool below) {
  mpq_class rho(1);
  if (below) {
    while (rho * rho > r2) rho /= 2;
    while (4 * rho * rho <= r2) rho *= 2;
  } else {
    while (rho * rho < r2) rho *= 2;
    while (rho * rho >= 4 * r2) rho /= 2;
  }
  return rho;
}

}  // namespace

std::vector<Scalar> CircularDomain::grid() const {
  static const Scalar dirs[4] = {Scalar(1), Scalar(-1), Scalar::i(), -Scalar::i()};
  std::vector<Scalar> pts;
  if (kind_ == DomainKind::OpenHalfPlane) {
    Scalar p0 = normal_ * Scalar(-offset_ / normal_.norm2());
    static const int ts[][2] = {{2, 0}, {2, 2}, {2, -2}, {1, 0}, {4, 0}, {2, 4}, {2, -4}, {8, 1}};
    for (const auto& ts_k : ts)
      pts.push_back(p0 + normal_ * Scalar(mpq_class(ts_k[0], 2)) + normal_ * Scalar::i() * Scalar(mpq_class(ts_k[1], 2)));
  } else if (kind_ == DomainKind::OpenDisk) {
    mpq_class rho = power_of_two_radius(radius2_, true);
    for (const auto& u : dirs) pts.push_back(center_ + u * Scalar(rho / 2));
    pts.push_back(center_);
    pts.push_back(center_ + Scalar(rho / 4, rho / 4));
    pts.push_back(center_ + Scalar(3 * rho / 4));
    pts.push_back(center_ - Scalar::i() * Scalar(3 * rho / 4));
  } else {
    mpq_class rho = power_of_two_radius(radius2_, false);
    for (const auto& u : dirs) pts.push_back(center_ + u * Scalar(2 * rho));
    pts.push_back(center_ + Scalar(3 * rho / 2, 3 * rho / 2));
    pts.push_back(center_ + Scalar(4 * rho));
    pts.push_back(center_ - Scalar::i() * Scalar(3 * rho));
    pts.push_back(center_ + Scalar(-8 * rho, rho));
  }
  return pts;
}

std::string CircularDomain::describe() const {
  if (kind_ == DomainKind::OpenHalfPlane)
    return "halfplane Re(conj(" + normal_.str() + ") z) + " + offset_.get_str() + " > 0";
  return to_string(kind_) + " center " + center_.str() + " radius^2 " + radius2_.get_str();
}

CircularDomain parse_domain(const std::string& text) {
  if (text == "H") return CircularDomain::upper_half_plane();
  if (text == "D") return CircularDomain::unit_disk();
  if (text == "Dext") return CircularDomain::unit_disk_exterior();
  if (text.rfind("H@", 0) == 0) {
    std::string t = text.substr(2);
    static const std::pair<const char*, int> named[] = {
        {"0", 0}, {"pi/2", 1}, {"pi", 2}, {"3pi/2", 3}, {"-pi/2", 3}, {"-pi", 2}, {"-3pi/2", 1}, {"2pi", 0}};
    for (const auto& [name, q] : named)
      if (t == name) return CircularDomain::rotated_half_plane(q);
    try {
      std::size_t used = 0;
      long deg = std::stol(t, &used);
      if (used == t.size() && deg % 90 == 0) return CircularDomain::rotated_half_plane(static_cast<int>(deg / 90));
    } catch (const std::exception&) {
    }
    throw ParseError("rotation angle must be a multiple of 90 degrees or pi/2", 2);
  }
  throw ParseError("unknown domain '" + text + "'", 0);
}

DomainProduct parse_domain_list(const std::string& text) {
  DomainProduct out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    while (!item.empty() && item.front() == ' ') item.erase(item.begin());
    while (!item.empty() && item.back() == ' ') item.pop_back();
    try {
      out.push_back(parse_domain(item));
    } catch (const ParseError& e) {
      throw ParseError("unknown domain '" + item + "'", start + e.position());
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

DomainProduct reflect(const DomainProduct& domains) {
  DomainProduct out;
  for (const auto& C : domains) out.push_back(C.reflect());
  return out;
}

MPoly moebius_transform(const MPoly& f, const std::vector<MoebiusMap>& maps, const Exponent& kappa) {
  const std::size_t n = f.nvars();
  if (maps.size() != n || kappa.size() != n) throw DimensionError("one map and one degree per variable");
  // num[i][k] = (a z_i + b)^k, den[i][k] = (c z_i + d)^k
  std::vector<std::vector<MPoly>> num(n), den(n);
  for (std::size_t i = 0; i < n; ++i) {
    MPoly zi = MPoly::variable(n, i);
    MPoly p = zi * maps[i].a + MPoly::constant(n, maps[i].b);
    MPoly q = zi * maps[i].c + MPoly::constant(n, maps[i].d);
    num[i].push_back(MPoly::constant(n, Scalar(1)));
    den[i].push_back(MPoly::constant(n, Scalar(1)));
    for (unsigned k = 1; k <= kappa[i]; ++k) {
      num[i].push_back(num[i].back() * p);
      den[i].push_back(den[i].back() * q);
    }
  }
  MPoly out(n);
  for (const auto& [e, c] : f.terms()) {
    if (!dominated(e, kappa)) throw DomainError("degree exceeds kappa");
    MPoly t = MPoly::constant(n, c);
    for (std::size_t i = 0; i < n; ++i) t = t * num[i][e[i]] * den[i][kappa[i] - e[i]];
    out += t;
  }
  return out;
}

namespace {

std::vector<MoebiusMap> phis(const DomainProduct& domains) {
  std::vector<MoebiusMap> m;
  for (const auto& C : domains) m.push_back(C.phi());
  return m;
}

std::vector<MoebiusMap> inverses(const DomainProduct& domains) {
  std::vector<MoebiusMap> m;
  for (const auto& C : domains) m.push_back(C.phi().inverse());
  return m;
}

DomainProduct doubled(const DomainProduct& domains) {
  DomainProduct d = domains;
  d.insert(d.end(), domains.begin(), domains.end());
  return d;
}

Exponent concat(const Exponent& x, const Exponent& y) {
  Exponent e = x;
  e.insert(e.end(), y.begin(), y.end());
  return e;
}

}  // namespace

MPoly phi_kappa_transform(const MPoly& f, const DomainProduct& domains, const Exponent& kappa) {
  return moebius_transform(f, phis(domains), kappa);
}

MPoly phi_kappa_inverse(const MPoly& f, const DomainProduct& domains, const Exponent& kappa) {
  return moebius_transform(f, inverses(domains), kappa);
}

Scalar roundtrip_constant(const DomainProduct& domains, const Exponent& kappa) {
  Scalar c(1);
  for (std::size_t i = 0; i < domains.size(); ++i) c *= domains[i].phi().determinant().pow(kappa[i]);
  return c;
}

DomainVerdict check_domain_stability(const MPoly& f, const DomainProduct& domains, const Exponent& kappa,
                                     const SamplingConfig& cfg) {
  const std::size_t n = f.nvars();
  if (domains.size() != n) throw DimensionError("one domain per variable");
  DomainVerdict v;
  v.transported = phi_kappa_inverse(f, domains, kappa);
  v.halfplane = check_stability(v.transported, cfg);

  std::vector<std::vector<Scalar>> grids;
  std::size_t total = 1;
  const std::size_t budget = std::max<std::size_t>(64, cfg.sample_count * 8);
  for (const auto& C : domains) {
    grids.push_back(C.grid());
    total = std::min(budget, total * grids.back().size());
  }
  auto tuple = [&](std::size_t k) {
    std::vector<Scalar> p(n);
    for (std::size_t i = n; i-- > 0;) {
      p[i] = grids[i][k % grids[i].size()];
      k /= grids[i].size();
    }
    return p;
  };
  v.direct_samples = f.is_zero() ? 0 : total;
  if (!f.is_zero()) {
    auto hit = first_failure(total, [&](std::size_t k) { return f.evaluate(tuple(k)).is_zero(); }, cfg.threads);
    if (hit) {
      v.point = tuple(*hit);
      v.found_directly = true;
      std::vector<Scalar> z;
      for (std::size_t i = 0; i < n; ++i) z.push_back(*domains[i].phi()((*v.point)[i]));
      v.consistent = v.transported.evaluate(z).is_zero();
    }
  }
  if (!v.point && v.halfplane.refuted()) {
    const auto& w = *v.halfplane.witness;
    std::optional<std::vector<Scalar>> z = w.point;
    if (!z && w.root && w.root->exact_root) z = line_point(w.lambda, w.alpha, *w.root->exact_root);
    if (z) {
      std::vector<Scalar> zeta;
      for (std::size_t i = 0; i < n; ++i) {
        auto image = domains[i].phi().inverse()((*z)[i]);
        if (!image) break;
        zeta.push_back(*image);
      }
      if (zeta.size() == n && f.evaluate(zeta).is_zero()) v.point = zeta;
    }
  }
  return v;
}

NKappaReport n_kappa_membership(const MPoly& f, const DomainProduct& domains, const Exponent& kappa,
                                const SamplingConfig& cfg) {
  if (kappa.size() != f.nvars() || domains.size() != f.nvars()) throw DimensionError("dimension mismatch");
  NKappaReport rep;
  rep.stability = check_domain_stability(f, domains, kappa, cfg);
  std::vector<std::size_t> J;
  for (std::size_t j = 0; j < domains.size(); ++j) {
    if (domains[j].convex()) continue;
    J.push_back(j);
    if (f.degree(j) != static_cast<long>(kappa[j])) {
      rep.degree_ok = false;
      rep.degree_failures.push_back(j);
    }
  }
  std::vector<Exponent> proj;
  for (const auto& [e, c] : f.terms()) {
    Exponent p;
    for (auto j : J) p.push_back(e[j]);
    proj.push_back(p);
  }
  for (const auto& p : proj) {
    bool maximal = true;
    for (const auto& q : proj)
      if (q != p && dominated(p, q)) maximal = false;
    if (maximal && std::find(rep.maximal_support.begin(), rep.maximal_support.end(), p) == rep.maximal_support.end())
      rep.maximal_support.push_back(p);
  }
  rep.unique_max = rep.maximal_support.size() <= 1;
  return rep;
}

LeeYangReport lee_yang_membership(const MPoly& f, const Exponent& kappa, const DomainProduct& domains,
                                  const SamplingConfig& cfg) {
  return {n_kappa_membership(f, domains, kappa, cfg), n_kappa_membership(f, reflect(domains), kappa, cfg)};
}

MPoly domain_symbol(const LinearOperatorSpec& T, const Exponent& kappa, const DomainProduct& domains, int sign) {
  const std::size_t n = T.nvars();
  if (domains.size() != n || kappa.size() != n) throw DimensionError("one domain per variable");
  if (T.out_nvars() != n) throw DimensionError("domain symbols need an operator on a single ring");
  const std::size_t N = 2 * n;
  MPoly K = MPoly::constant(N, Scalar(1));
  for (std::size_t i = 0; i < n; ++i) {
    const auto& m = domains[i].phi();
    MPoly z = MPoly::variable(N, i), w = MPoly::variable(N, n + i);
    MPoly az = z * m.a + MPoly::constant(N, m.b), aw = w * m.a + MPoly::constant(N, m.b);
    MPoly cz = z * m.c + MPoly::constant(N, m.d), cw = w * m.c + MPoly::constant(N, m.d);
    MPoly k = sign > 0 ? az * cw + aw * cz : az * cw - aw * cz;
    K = K * k.pow(kappa[i]);
  }
  std::vector<std::size_t> zmap(n);
  for (std::size_t i = 0; i < n; ++i) zmap[i] = i;
  MPoly out(N);
  for (const auto& [e, c] : K.terms()) {
    Exponent alpha(e.begin(), e.begin() + static_cast<long>(n));
    Exponent shift(N, 0);
    for (std::size_t i = 0; i < n; ++i) shift[n + i] = e[n + i];
    out += T.image(alpha).remap(zmap, N).shift(shift) * c;
  }
  return out;
}

std::string to_string(SymbolReduction r) {
  switch (r) {
    case SymbolReduction::None: return "none";
    case SymbolReduction::ZPlusW: return "z+w";
    case SymbolReduction::OnePlusZW: return "1+zw";
    case SymbolReduction::OneMinusZW: return "1-zw";
    case SymbolReduction::ZMinusW: return "z-w";
  }
  return "?";
}

ReductionReport domain_symbol_reduction(const LinearOperatorSpec& T, const Exponent& kappa,
                                        const DomainProduct& domains, int sign) {
  ReductionReport rep;
  rep.constant = Scalar(1);
  std::optional<SymbolReduction> common;
  for (std::size_t i = 0; i < domains.size(); ++i) {
    const auto& m = domains[i].phi();
    SymbolReduction kind = SymbolReduction::None;
    Scalar lambda;
    Scalar ac = m.a * m.c, bd = m.b * m.d, mixed = m.a * m.d + m.b * m.c;
    if (sign < 0) {
      kind = SymbolReduction::ZMinusW;
      lambda = m.determinant();
    } else if (ac.is_zero() && bd.is_zero()) {
      kind = SymbolReduction::ZPlusW;
      lambda = mixed;
    } else if (mixed.is_zero() && ac == bd) {
      kind = SymbolReduction::OnePlusZW;
      lambda = Scalar(2) * bd;
    } else if (mixed.is_zero() && ac == -bd) {
      kind = SymbolReduction::OneMinusZW;
      lambda = Scalar(2) * bd;
    }
    if (kind == SymbolReduction::None || (common && *common != kind)) return ReductionReport{};
    common = kind;
    rep.constant *= lambda.pow(kappa[i]);
  }
  if (!common) return ReductionReport{};
  rep.kind = *common;
  LinearOperatorSpec Tk = T.restricted(kappa);
  switch (rep.kind) {
    case SymbolReduction::ZPlusW: rep.reference = algebraic_symbol(Tk, kappa); break;
    case SymbolReduction::OnePlusZW: rep.reference = halfplane_symbol_truncation(Tk, kappa); break;
    case SymbolReduction::OneMinusZW: rep.reference = alt_symbol(Tk, kappa); break;
    case SymbolReduction::ZMinusW: rep.reference = reflected_symbol(Tk, kappa); break;
    case SymbolReduction::None: break;
  }
  rep.exact = domain_symbol(Tk, kappa, domains, sign) == rep.reference * rep.constant;
  return rep;
}

namespace {

void accept(DomainCertification& rep, PreserverVerdict v, const std::string& branch, bool certified,
            const SamplingConfig& cfg) {
  rep.branch = branch;
  rep.certified = certified;
  rep.verdict = cfg.require_certified && !certified ? PreserverVerdict::Inconclusive : v;
  if (rep.verdict == PreserverVerdict::Inconclusive) rep.note = "acceptance rests on sampling only";
}

}  // namespace

DomainCertification certify_domain_preserver(const LinearOperatorSpec& T, const Exponent& kappa,
                                             const DomainProduct& domains, const SamplingConfig& cfg) {
  DomainCertification rep;
  LinearOperatorSpec Tk = T.restricted(kappa);
  rep.range = range_dimension(Tk);
  if (rep.range.rank == 0) {
    rep.verdict = PreserverVerdict::PreserverDegenerate;
    rep.branch = "a";
    rep.certified = true;
    rep.note = "operator is identically zero";
    return rep;
  }
  if (rep.range.rank == 1) {
    rep.basis_verdict = check_domain_stability(rep.range.basis[0], domains, cfg);
    if (rep.basis_verdict->passed()) {
      accept(rep, PreserverVerdict::PreserverDegenerate, "a", rep.basis_verdict->certified(), cfg);
    } else {
      rep.verdict = PreserverVerdict::NotPreserver;
      rep.certified = true;
      rep.note = "rank one with a range generator that is not stable on the domains";
    }
    return rep;
  }
  rep.symbol = domain_symbol(Tk, kappa, domains, 1);
  Exponent box = concat(Tk.codomain_degree(), kappa);
  rep.symbol_verdict = check_domain_stability(rep.symbol, doubled(domains), box, cfg);
  if (rep.symbol_verdict->passed()) {
    accept(rep, PreserverVerdict::PreserverSymbolStable, "b", rep.symbol_verdict->certified(), cfg);
  } else if (rep.symbol_verdict->refuted()) {
    rep.verdict = PreserverVerdict::NotPreserver;
    rep.certified = true;
  } else {
    rep.note = "symbol vanishes identically";
  }
  return rep;
}

DomainCertification certify_lee_yang_preserver(const LinearOperatorSpec& T, const Exponent& kappa,
                                               const DomainProduct& domains, const SamplingConfig& cfg) {
  DomainCertification rep;
  LinearOperatorSpec Tk = T.restricted(kappa);
  rep.range = range_dimension(Tk);
  if (rep.range.rank <= 2) {
    rep.out_of_scope = true;
    rep.note = "degenerate: theorem inapplicable (range dimension " + std::to_string(rep.range.rank) + ")";
    return rep;
  }
  DomainProduct inner = doubled(domains), outer = reflect(inner);
  Exponent box = concat(Tk.codomain_degree(), kappa);
  rep.symbol = domain_symbol(Tk, kappa, domains, 1);
  rep.minus_symbol = domain_symbol(Tk, kappa, domains, -1);
  rep.symbol_verdict = check_domain_stability(rep.symbol, inner, box, cfg);
  rep.plus_reflected = check_domain_stability(rep.symbol, outer, box, cfg);
  if (rep.symbol_verdict->passed() && rep.plus_reflected->passed()) {
    accept(rep, PreserverVerdict::PreserverSymbolStable, "a",
           rep.symbol_verdict->certified() && rep.plus_reflected->certified(), cfg);
    return rep;
  }
  rep.minus_inner = check_domain_stability(*rep.minus_symbol, inner, box, cfg);
  rep.minus_reflected = check_domain_stability(*rep.minus_symbol, outer, box, cfg);
  if (rep.minus_inner->passed() && rep.minus_reflected->passed()) {
    accept(rep, PreserverVerdict::PreserverSymbolStable, "b",
           rep.minus_inner->certified() && rep.minus_reflected->certified(), cfg);
    return rep;
  }
  bool plus_refuted = rep.symbol_verdict->refuted() || rep.plus_reflected->refuted();
  bool minus_refuted = rep.minus_inner->refuted() || rep.minus_reflected->refuted();
  if (plus_refuted && minus_refuted) {
    rep.verdict = PreserverVerdict::NotPreserver;
    rep.certified = true;
  } else {
    rep.note = "a symbol vanishes identically";
  }
  return rep;
}

StrictReport check_strict_stability(const MPoly& f, const SamplingConfig& cfg) {
  StrictReport rep;
  rep.symbol = f;
  const std::size_t n = f.nvars();
  auto line_for = [&](std::size_t k) {
    Line L = sample_line(n, k, cfg);
    // Some lines pin coordinates to real values to reach the mixed boundary strata.
    if (n > 1 && k >= std::max<std::size_t>(1, cfg.sample_count / 4) && k % 2 == 1) {
      std::uint64_t s = stream_state(cfg.seed, k ^ 0x5151u);
      std::size_t keep = splitmix64(s) % n;
      for (std::size_t j = 0; j < n; ++j)
        if (j != keep && splitmix64(s) % 2) L.lambda[j] = 0;
    }
    return L;
  };
  auto restriction = [&](const Line& L) {
    std::vector<MPoly> images;
    for (std::size_t j = 0; j < n; ++j)
      images.push_back(MPoly::variable(1, 0) * Scalar(L.lambda[j]) + MPoly::constant(1, Scalar(L.alpha[j])));
    return upoly_from_mpoly(f.compose(images, 1));
  };
  rep.samples = std::max<std::size_t>(1, cfg.sample_count);
  if (f.is_zero()) {
    rep.conclusion = "no conclusion";
    return rep;
  }
  auto bad = first_failure(
      rep.samples,
      [&](std::size_t k) {
        UPoly p = restriction(line_for(k));
        return p.is_zero() || !is_strictly_stable_uni(p);
      },
      cfg.threads);
  if (bad) {
    rep.failing_line = line_for(*bad);
    rep.failing_restriction = restriction(*rep.failing_line);
    rep.conclusion = "no conclusion";
  } else {
    rep.sufficient = true;
    rep.conclusion = "sufficient condition met";
  }
  return rep;
}

StrictReport strict_sufficiency_check(const LinearOperatorSpec& T, const Exponent& kappa,
                                      const std::optional<CircularDomain>& domain, const SamplingConfig& cfg) {
  LinearOperatorSpec Tk = T.restricted(kappa);
  if (!domain) return check_strict_stability(algebraic_symbol(Tk, kappa), cfg);
  if (!domain->convex()) throw PreconditionError("closed-domain check needs a convex domain");
  DomainProduct domains(T.nvars(), *domain);
  MPoly symbol = domain_symbol(Tk, kappa, domains, 1);
  DomainProduct both = doubled(domains);
  MPoly transported = phi_kappa_inverse(symbol, both, concat(Tk.codomain_degree(), kappa));
  StrictReport rep = check_strict_stability(transported, cfg);
  rep.symbol = symbol;
  return rep;
}

}  // namespace stabilis
