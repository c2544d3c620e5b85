#include "stabilis/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "stabilis/errors.hpp"

namespace stabilis::cli {

namespace {

struct Options {
  std::string verb;
  std::string poly, f, g, op, domains, kappa, beta_max, format = "json";
  std::vector<double> radius;
  std::size_t samples = 64;
  std::uint64_t seed = 1;
  unsigned height = 32;
  int threads = 0;
  bool strict = false;
  bool inverse = false;
};

const std::vector<std::string> kVerbs = {
    "check-stability", "check-real-stability", "proper-position", "symbol",    "certify",   "certify-real",
    "certify-domain",  "certify-ly",           "truncation-sweep", "polarize", "project",   "transform",
    "ly-member",       "szasz",                "growth",           "strict-check"};

class InputError : public Error {
 public:
  using Error::Error;
};

void require(const std::string& value, const char* flag, const std::string& verb) {
  if (value.empty()) throw InputError(verb + " needs " + flag);
}

Exponent parse_exponent(const std::string& text, const char* what) {
  Exponent e;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::size_t used = 0;
    long v = -1;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item.empty() || v < 0)
      throw ParseError(std::string("bad ") + what + " entry '" + item + "'", start);
    e.push_back(static_cast<unsigned>(v));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return e;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json load_json(const std::string& value) {
  std::string text = value;
  auto first = value.find_first_not_of(" \t\n");
  if (first == std::string::npos || (value[first] != '{' && value[first] != '[')) text = slurp(value);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what(), "");
  }
}

LinearOperatorSpec load_operator(const Options& o) {
  require(o.op, "--op", o.verb);
  return parse_operator(load_json(o.op));
}

DomainProduct load_domains(const Options& o, std::size_t n) {
  require(o.domains, "--domains", o.verb);
  DomainProduct d;
  auto first = o.domains.find_first_not_of(" \t\n");
  bool inline_json = first != std::string::npos && (o.domains[first] == '{' || o.domains[first] == '[');
  if (inline_json || (o.domains.size() > 5 && o.domains.substr(o.domains.size() - 5) == ".json")) {
    d = parse_domains(load_json(o.domains));
  } else {
    d = parse_domains(json(o.domains));
  }
  if (d.size() == 1 && n > 1) d.assign(n, d.front());
  if (d.size() != n) throw DimensionError("expected " + std::to_string(n) + " domains, got " + std::to_string(d.size()));
  return d;
}

Exponent kappa_or(const Options& o, const Exponent& fallback) {
  if (o.kappa.empty()) return fallback;
  Exponent k = parse_exponent(o.kappa, "kappa");
  if (k.size() != fallback.size()) throw DimensionError("kappa has the wrong length");
  return k;
}

Exponent poly_degrees(const MPoly& f) { return f.is_zero() ? Exponent(f.nvars(), 0) : f.degrees(); }

int verdict_exit(const MultiVerdict& v, bool strict) {
  if (v.refuted() || v.status == MultiStatus::NotRealCoefficients) return kRejected;
  if (v.passed()) return strict && !v.certified() ? kInconclusive : kAccepted;
  return kInconclusive;
}

int preserver_exit(PreserverVerdict v) {
  switch (v) {
    case PreserverVerdict::PreserverDegenerate:
    case PreserverVerdict::PreserverSymbolStable: return kAccepted;
    case PreserverVerdict::NotPreserver: return kRejected;
    case PreserverVerdict::Inconclusive: return kInconclusive;
  }
  return kInconclusive;
}

std::pair<MPoly, MPoly> parse_pair(const std::string& a, const std::string& b) {
  MPoly f = parse_polynomial(a), g = parse_polynomial(b);
  std::size_t n = std::max(f.nvars(), g.nvars());
  return {parse_polynomial(a, n), parse_polynomial(b, n)};
}

std::pair<int, json> dispatch(const Options& o, const SamplingConfig& cfg) {
  const std::string& v = o.verb;
  if (v == "check-stability" || v == "check-real-stability") {
    require(o.poly, "--poly", v);
    MPoly f = parse_polynomial(o.poly);
    MultiVerdict r = v == "check-stability" ? check_stability(f, cfg) : check_real_stability(f, cfg);
    return {verdict_exit(r, o.strict), json{{"poly", to_string(f)}, {"verdict", to_json(r, VarNames::z(f.nvars()))}}};
  }
  if (v == "proper-position") {
    require(o.f, "--f", v);
    require(o.g, "--g", v);
    auto [f, g] = parse_pair(o.f, o.g);
    ProperPositionResult r = proper_position_multi(f, g, cfg);
    VarNames names = VarNames::z(f.nvars());
    return {verdict_exit(r.verdict, o.strict),
            json{{"f", to_string(f, names)},
                 {"g", to_string(g, names)},
                 {"proper_position", r.verdict.passed()},
                 {"result", to_json(r, names)}}};
  }
  if (v == "symbol") {
    LinearOperatorSpec T = load_operator(o);
    Exponent kappa = kappa_or(o, T.kappa());
    VarNames sn = VarNames::zw(T.out_nvars(), T.nvars());
    LinearOperatorSpec Tk = T.restricted(kappa);
    json r{{"kappa", exponent_json(kappa)},
           {"symbol", to_string(algebraic_symbol(Tk, kappa), sn)},
           {"alt_symbol", to_string(alt_symbol(Tk, kappa), sn)},
           {"reflected_symbol", to_string(reflected_symbol(Tk, kappa), sn)},
           {"alt_identity", alt_symbol_identity(Tk, kappa)},
           {"range", to_json(range_dimension(Tk), VarNames::z(T.out_nvars()))}};
    return {kAccepted, r};
  }
  if (v == "certify" || v == "certify-real") {
    LinearOperatorSpec T = load_operator(o);
    Exponent kappa = kappa_or(o, T.kappa());
    CertificationReport r =
        v == "certify" ? certify_complex_preserver(T, kappa, cfg) : certify_real_preserver(T, kappa, cfg);
    return {preserver_exit(r.verdict),
            to_json(r, VarNames::z(T.out_nvars()), VarNames::zw(T.out_nvars(), T.nvars()))};
  }
  if (v == "certify-domain" || v == "certify-ly") {
    LinearOperatorSpec T = load_operator(o);
    Exponent kappa = kappa_or(o, T.kappa());
    DomainProduct d = load_domains(o, T.nvars());
    DomainCertification r = v == "certify-domain" ? certify_domain_preserver(T, kappa, d, cfg)
                                                  : certify_lee_yang_preserver(T, kappa, d, cfg);
    json j = to_json(r, VarNames::z(T.out_nvars()), VarNames::zw(T.nvars()));
    json dj = json::array();
    for (const auto& C : d) dj.push_back(domain_to_json(C));
    j["domains"] = dj;
    return {r.out_of_scope ? kInconclusive : preserver_exit(r.verdict), j};
  }
  if (v == "truncation-sweep") {
    LinearOperatorSpec T = load_operator(o);
    require(o.beta_max, "--beta-max", v);
    Exponent beta = parse_exponent(o.beta_max, "beta-max");
    TruncationSweep s = certify_transcendental(T, beta, cfg);
    int code = kAccepted;
    if (!s.passed()) {
      code = kRejected;
    } else {
      for (const auto& r : s.verdicts)
        if (!r.passed() || (o.strict && !r.certified())) code = kInconclusive;
    }
    return {code, to_json(s, VarNames::zw(T.out_nvars(), T.nvars()))};
  }
  if (v == "polarize") {
    require(o.poly, "--poly", v);
    MPoly f = parse_polynomial(o.poly);
    Exponent kappa = kappa_or(o, poly_degrees(f));
    PolarizedVars pv(kappa);
    MPoly F = polarize(f, kappa);
    return {kAccepted, json{{"kappa", exponent_json(kappa)},
                            {"variables", pv.names().names()},
                            {"polarized", to_string(F, pv.names())}}};
  }
  if (v == "project") {
    require(o.poly, "--poly", v);
    require(o.kappa, "--kappa", v);
    Exponent kappa = parse_exponent(o.kappa, "kappa");
    PolarizedVars pv(kappa);
    MPoly F = parse_polynomial(o.poly, pv.names());
    return {kAccepted, json{{"kappa", exponent_json(kappa)}, {"projected", to_string(project(F, kappa))}}};
  }
  if (v == "transform") {
    require(o.poly, "--poly", v);
    MPoly f = parse_polynomial(o.poly);
    Exponent kappa = kappa_or(o, poly_degrees(f));
    DomainProduct d = load_domains(o, f.nvars());
    MPoly out = o.inverse ? phi_kappa_inverse(f, d, kappa) : phi_kappa_transform(f, d, kappa);
    MPoly back = o.inverse ? phi_kappa_transform(out, d, kappa) : phi_kappa_inverse(out, d, kappa);
    Scalar c = roundtrip_constant(d, kappa);
    return {kAccepted, json{{"kappa", exponent_json(kappa)},
                            {"direction", o.inverse ? "to-halfplane" : "from-halfplane"},
                            {"transformed", to_string(out)},
                            {"roundtrip_constant", exact(c)},
                            {"roundtrip_exact", back == f * c}}};
  }
  if (v == "ly-member") {
    require(o.poly, "--poly", v);
    MPoly f = parse_polynomial(o.poly);
    Exponent kappa = kappa_or(o, poly_degrees(f));
    DomainProduct d = load_domains(o, f.nvars());
    LeeYangReport r = lee_yang_membership(f, kappa, d, cfg);
    int code = r.member() ? kAccepted : kRejected;
    if (!r.member() && !r.inner.stability.refuted() && !r.outer.stability.refuted() && r.inner.degree_ok &&
        r.outer.degree_ok)
      code = kInconclusive;
    if (code == kAccepted && o.strict && !(r.inner.stability.certified() && r.outer.stability.certified()))
      code = kInconclusive;
    return {code, to_json(r, VarNames::z(f.nvars()))};
  }
  if (v == "szasz") {
    require(o.poly, "--poly", v);
    MPoly f = parse_polynomial(o.poly);
    if (f.nvars() > 1) throw DimensionError("szasz takes a univariate polynomial");
    UPoly p = upoly_from_mpoly(parse_polynomial(o.poly, 1));
    SzaszRootReport r = szasz_root_sum_check(p);
    json checks = json::array();
    bool ok = r.holds;
    for (double rad : o.radius.empty() ? std::vector<double>{1, 2} : o.radius) {
      GrowthCheck g = szasz_univariate_growth_check(p, rad);
      ok = ok && g.holds;
      checks.push_back(to_json(g));
    }
    return {ok ? kAccepted : kRejected, json{{"root_sum", to_json(r)}, {"growth", checks}}};
  }
  if (v == "growth") {
    require(o.poly, "--poly", v);
    MPoly f = parse_polynomial(o.poly);
    json j;
    bool ok = true;
    GrowthConstants k;
    if (f.coeff(Exponent(f.nvars(), 0)) == Scalar(1)) {
      k = growth_constants(f, cfg);
      CoefficientBoundReport cb = coefficient_bound_check(f, cfg);
      ok = cb.holds;
      j["coefficients"] = to_json(cb);
    } else {
      k = minimal_support_growth_constants(f, cfg);
    }
    j["constants"] = to_json(k);
    json checks = json::array();
    for (double rad : o.radius.empty() ? std::vector<double>{1, 2} : o.radius) {
      GrowthCheck g = growth_bound_check(f, k, rad, 64, cfg.threads);
      ok = ok && g.holds;
      checks.push_back(to_json(g));
    }
    j["growth"] = checks;
    return {ok ? kAccepted : kRejected, j};
  }
  if (v == "strict-check") {
    LinearOperatorSpec T = load_operator(o);
    Exponent kappa = kappa_or(o, T.kappa());
    std::optional<CircularDomain> dom;
    if (!o.domains.empty()) dom = load_domains(o, 1).front();
    StrictReport r = strict_sufficiency_check(T, kappa, dom, cfg);
    return {r.sufficient ? kAccepted : kInconclusive, to_json(r, VarNames::zw(T.out_nvars(), T.nvars()))};
  }
  throw InputError("unknown verb '" + v + "'");
}

std::string render_text(const json& report) {
  std::ostringstream os;
  os << "verb: " << report.value("verb", "") << "\n";
  os << "exit: " << report["exit_code"].get<int>() << "\n";
  if (report.contains("error")) os << "error: " << report["error"].get<std::string>() << "\n";
  if (report.contains("result"))
    for (const auto& [key, value] : report["result"].items())
      os << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  return os.str();
}

}  // namespace

Outcome run(const std::vector<std::string>& args) {
  Options o;
  CLI::App app{"Exact stability tools for multivariate polynomials", "stabilis"};
  app.add_option("verb", o.verb, "Command")->required()->check(CLI::IsMember(kVerbs));
  app.add_option("--poly", o.poly, "Polynomial in z1..zn");
  app.add_option("--f", o.f, "First polynomial (proper-position)");
  app.add_option("--g", o.g, "Second polynomial (proper-position)");
  app.add_option("--op", o.op, "Operator JSON file or inline JSON");
  app.add_option("--domains", o.domains, "Domain shorthand list, JSON file or inline JSON");
  app.add_option("--kappa", o.kappa, "Degree box, comma separated");
  app.add_option("--beta-max", o.beta_max, "Largest truncation index, comma separated");
  app.add_option("--radius", o.radius, "Radii for growth checks");
  app.add_option("--samples", o.samples, "Sampled lines per check");
  auto* seed_opt = app.add_option("--seed", o.seed, "Sampling seed");
  app.add_option("--height", o.height, "Height bound of sampled rationals");
  app.add_option("--threads", o.threads, "OpenMP threads, 1 = serial");
  app.add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--strict", o.strict, "Demand certified output");
  app.add_flag("--inverse", o.inverse, "transform: map towards the upper half-plane");
  app.set_version_flag("--version", kVersion);

  Outcome out;
  json report;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out.exit_code = kAccepted;
    out.output = app.help();
    return out;
  } catch (const CLI::CallForVersion&) {
    out.exit_code = kAccepted;
    out.output = std::string(kVersion) + "\n";
    return out;
  } catch (const CLI::ParseError& e) {
    report = {{"verb", o.verb}, {"exit_code", int(kInputError)}, {"error", e.what()}};
    out.report = report;
    out.output = report.dump(2) + "\n";
    return out;
  }

  if (const char* env = std::getenv("STABILIS_SEED"); env && seed_opt->count() == 0) {
    try {
      o.seed = std::stoull(env);
    } catch (const std::exception&) {
      report = {{"verb", o.verb}, {"exit_code", int(kInputError)}, {"error", "STABILIS_SEED is not an integer"}};
      out.report = report;
      out.output = report.dump(2) + "\n";
      return out;
    }
  }
  SamplingConfig cfg;
  cfg.sample_count = o.samples;
  cfg.seed = o.seed;
  cfg.height = o.height;
  cfg.threads = o.threads;
  cfg.strict_mode = o.strict;
  cfg.require_certified = o.strict;

  report["verb"] = o.verb;
  try {
    auto [code, result] = dispatch(o, cfg);
    out.exit_code = code;
    report["result"] = result;
  } catch (const InternalInconsistency& e) {
    out.exit_code = kInconclusive;
    report["error"] = std::string("internal inconsistency: ") + e.what();
  } catch (const SchemaError& e) {
    out.exit_code = kInputError;
    report["error"] = e.what();
    report["pointer"] = e.pointer();
  } catch (const ParseError& e) {
    out.exit_code = kInputError;
    report["error"] = e.what();
    report["position"] = e.position();
  } catch (const Error& e) {
    out.exit_code = kInputError;
    report["error"] = e.what();
  }
  report["exit_code"] = out.exit_code;
  report["replay"] = {{"args", args}, {"seed", o.seed}, {"version", kVersion}};
  out.report = report;
  out.output = o.format == "text" ? render_text(report) : report.dump(2) + "\n";
  return out;
}

}  // namespace stabilis::cli
