#include "stabilis/json_io.hpp"

#include "stabilis/errors.hpp"
#include "stabilis/numeric_roots.hpp"

namespace stabilis {

json numeric(double x) { return json{{"numeric", numeric_str(x)}}; }
json exact(const mpq_class& q) { return q.get_str(); }
json exact(const Scalar& s) { return s.str(); }

json exponent_json(const Exponent& e) { return json(std::vector<unsigned>(e.begin(), e.end())); }

json rationals_json(const std::vector<mpq_class>& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(exact(q));
  return a;
}

json scalars_json(const std::vector<Scalar>& v) {
  json a = json::array();
  for (const auto& s : v) a.push_back(exact(s));
  return a;
}

json to_json(const UniWitness& w) {
  json j{{"region", "Im t > " + w.im_lower.get_str()},
         {"im_lower", exact(w.im_lower)},
         {"roots_in_region", w.roots_in_region}};
  if (w.exact_root) j["exact_root"] = exact(*w.exact_root);
  if (w.approx) j["approx_root"] = {{"re", numeric(w.approx->first)}, {"im", numeric(w.approx->second)}};
  return j;
}

json to_json(const MultiVerdict& v, const VarNames& names) {
  json j{{"status", to_string(v.status)}, {"certified", v.certified()}, {"samples", v.samples}, {"seed", v.seed}};
  if (v.witness) {
    const auto& w = *v.witness;
    json wj{{"lambda", rationals_json(w.lambda)},
            {"alpha", scalars_json(w.alpha)},
            {"restriction", upoly_str(w.restriction, "t")},
            {"sample_index", w.sample_index}};
    if (w.root) wj["root"] = to_json(*w.root);
    if (w.point) wj["point"] = scalars_json(*w.point);
    j["witness"] = wj;
  }
  (void)names;
  return j;
}

json to_json(const ProperPositionResult& r, const VarNames& names) {
  json j{{"verdict", to_json(r.verdict, names)}, {"transported", r.transported}, {"witness_on_lift", r.witness_on_lift}};
  if (r.lifted) j["lifted"] = to_json(*r.lifted, VarNames::concat(names, VarNames({"z_extra"})));
  return j;
}

json to_json(const RangeInfo& r, const VarNames& names) {
  json basis = json::array();
  for (const auto& p : r.basis) basis.push_back(to_string(p, names));
  return json{{"rank", r.rank}, {"basis", basis}};
}

json to_json(const CertificationReport& r, const VarNames& in, const VarNames& symbol_names) {
  json j{{"verdict", to_string(r.verdict)},
         {"branch", r.branch},
         {"certified", r.certified},
         {"symbol", to_string(r.symbol, symbol_names)},
         {"range", to_json(r.range, in)}};
  if (r.symbol_verdict) j["symbol_verdict"] = to_json(*r.symbol_verdict, symbol_names);
  if (r.reflected) j["reflected_symbol"] = to_string(*r.reflected, symbol_names);
  if (r.reflected_verdict) j["reflected_verdict"] = to_json(*r.reflected_verdict, symbol_names);
  if (r.basis_verdict) j["basis_verdict"] = to_json(*r.basis_verdict, in);
  if (r.basis_pq) j["basis_pq"] = to_json(*r.basis_pq, in);
  if (r.basis_qp) j["basis_qp"] = to_json(*r.basis_qp, in);
  if (r.refuter) {
    VarNames dom = VarNames::z(r.refuter->f.nvars());
    j["refuter"] = {{"W", scalars_json(r.refuter->W)},
                    {"f", to_string(r.refuter->f, dom)},
                    {"image", to_string(r.refuter->image, in)},
                    {"verdict", to_json(r.refuter->verdict, in)}};
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

json to_json(const TruncationSweep& s, const VarNames& symbol_names) {
  json items = json::array();
  for (std::size_t k = 0; k < s.betas.size(); ++k)
    items.push_back({{"beta", exponent_json(s.betas[k])}, {"verdict", to_json(s.verdicts[k], symbol_names)}});
  json j{{"passed", s.passed()}, {"truncations", items}};
  if (s.first_refuted) j["first_refuted"] = exponent_json(s.betas[*s.first_refuted]);
  return j;
}

json to_json(const DomainVerdict& v, const VarNames& names) {
  json j{{"refuted", v.refuted()},
         {"passed", v.passed()},
         {"certified", v.certified()},
         {"transported", to_string(v.transported, names)},
         {"halfplane", to_json(v.halfplane, names)},
         {"direct_samples", v.direct_samples},
         {"consistent", v.consistent}};
  if (v.point) {
    j["point"] = scalars_json(*v.point);
    j["found_directly"] = v.found_directly;
  }
  return j;
}

json to_json(const NKappaReport& r, const VarNames& names) {
  json maxs = json::array();
  for (const auto& e : r.maximal_support) maxs.push_back(exponent_json(e));
  return json{{"member", r.member()},
              {"stability", to_json(r.stability, names)},
              {"degree_ok", r.degree_ok},
              {"degree_failures", r.degree_failures},
              {"maximal_support", maxs},
              {"unique_max", r.unique_max}};
}

json to_json(const LeeYangReport& r, const VarNames& names) {
  return json{{"member", r.member()}, {"domains", to_json(r.inner, names)}, {"reflected", to_json(r.outer, names)}};
}

json to_json(const DomainCertification& r, const VarNames& in, const VarNames& symbol_names) {
  json j{{"verdict", to_string(r.verdict)},
         {"branch", r.branch},
         {"certified", r.certified},
         {"out_of_scope", r.out_of_scope},
         {"range", to_json(r.range, in)}};
  if (!r.symbol.is_zero() || r.symbol_verdict) j["symbol"] = to_string(r.symbol, symbol_names);
  if (r.symbol_verdict) j["symbol_verdict"] = to_json(*r.symbol_verdict, symbol_names);
  if (r.basis_verdict) j["basis_verdict"] = to_json(*r.basis_verdict, in);
  if (r.minus_symbol) j["minus_symbol"] = to_string(*r.minus_symbol, symbol_names);
  if (r.plus_reflected) j["plus_reflected"] = to_json(*r.plus_reflected, symbol_names);
  if (r.minus_inner) j["minus_verdict"] = to_json(*r.minus_inner, symbol_names);
  if (r.minus_reflected) j["minus_reflected"] = to_json(*r.minus_reflected, symbol_names);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

json to_json(const StrictReport& r, const VarNames& names) {
  json j{{"symbol", to_string(r.symbol, names)},
         {"sufficient", r.sufficient},
         {"samples", r.samples},
         {"conclusion", r.conclusion}};
  if (r.failing_line)
    j["failing_line"] = {{"lambda", rationals_json(r.failing_line->lambda)},
                         {"alpha", scalars_json(r.failing_line->alpha)},
                         {"restriction", upoly_str(*r.failing_restriction, "t")}};
  return j;
}

json to_json(const SzaszRootReport& r) {
  json xi = json::array();
  for (const auto& x : r.xi) xi.push_back({{"re", numeric(x.real())}, {"im", numeric(x.imag())}});
  return json{{"a1", exact(r.a1)},     {"a2", exact(r.a2)},         {"xi", xi},
              {"root_sum", numeric(r.root_sum)}, {"bound", numeric(r.bound)}, {"margin", numeric(r.margin)},
              {"holds", r.holds}};
}

json to_json(const GrowthCheck& g) {
  return json{{"r", numeric(g.r)},
              {"max_found", numeric(g.max_found)},
              {"bound", numeric(g.bound)},
              {"log_margin", numeric(g.log_margin)},
              {"grid", g.grid},
              {"holds", g.holds}};
}

json to_json(const GrowthConstants& k) {
  return json{{"nvars", k.nvars},         {"A2", exact(k.A2)}, {"C_over_e2", exact(k.C_over_e2)},
              {"B", numeric(k.B)},        {"C", numeric(k.C)}, {"provenance", k.provenance}};
}

json to_json(const CoefficientBoundReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries)
    entries.push_back({{"beta", exponent_json(e.beta)}, {"abs2", exact(e.lhs)}, {"bound2", exact(e.rhs)}});
  return json{{"A2", exact(r.A2)}, {"holds", r.holds}, {"entries", entries}};
}

json to_json(const GwsReport& r, const VarNames& names, const VarNames& polarized_names) {
  json j{{"polarized", to_string(r.polarized, polarized_names)},
         {"original", to_json(r.original, names)},
         {"lifted", to_json(r.lifted, polarized_names)},
         {"agree", r.agree}};
  if (r.transported) {
    j["transported"] = to_json(*r.transported, polarized_names);
    j["transport_exact"] = r.transport_exact;
  }
  return j;
}

namespace {

std::string child(const std::string& ptr, const std::string& key) { return ptr + "/" + key; }
std::string child(const std::string& ptr, std::size_t k) { return ptr + "/" + std::to_string(k); }

const json& field(const json& j, const std::string& key, const std::string& ptr) {
  if (!j.is_object()) throw SchemaError("expected an object", ptr);
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError("missing field '" + key + "'", ptr);
  return *it;
}

Exponent exponent_field(const json& j, const std::string& ptr) {
  if (!j.is_array()) throw SchemaError("expected an array of nonnegative integers", ptr);
  Exponent e;
  for (std::size_t k = 0; k < j.size(); ++k) {
    if (!j[k].is_number_integer() || j[k].get<long>() < 0)
      throw SchemaError("expected a nonnegative integer", child(ptr, k));
    e.push_back(j[k].get<unsigned>());
  }
  return e;
}

std::string string_field(const json& j, const std::string& ptr) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long>());
  throw SchemaError("expected a string", ptr);
}

template <class Fn>
auto wrap_parse(const std::string& ptr, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    throw SchemaError(e.what(), ptr);
  }
}

}  // namespace

LinearOperatorSpec parse_operator(const json& j) {
  const std::string root;
  Exponent kappa = exponent_field(field(j, "kappa", root), "/kappa");
  if (j.contains("nvars")) {
    const json& nv = j["nvars"];
    if (!nv.is_number_integer() || nv.get<long>() != static_cast<long>(kappa.size()))
      throw SchemaError("nvars must equal the length of kappa", "/nvars");
  }
  std::size_t out = kappa.size();
  if (j.contains("out_nvars")) {
    if (!j["out_nvars"].is_number_integer() || j["out_nvars"].get<long>() < 0)
      throw SchemaError("expected a nonnegative integer", "/out_nvars");
    out = j["out_nvars"].get<std::size_t>();
  }
  std::string kind = j.contains("kind") ? string_field(j["kind"], "/kind") : "table";
  auto check_key = [&](const Exponent& e, const std::string& ptr) {
    if (e.size() != kappa.size()) throw SchemaError("monomial has the wrong length", ptr);
    if (!dominated(e, kappa)) throw SchemaError("monomial outside the degree box", ptr);
  };
  if (kind == "table") {
    LinearOperatorSpec::ImageMap images;
    const json& arr = field(j, "images", root);
    if (!arr.is_array()) throw SchemaError("expected an array", "/images");
    for (std::size_t k = 0; k < arr.size(); ++k) {
      std::string ptr = child("/images", k);
      Exponent e = exponent_field(field(arr[k], "monomial", ptr), child(ptr, "monomial"));
      check_key(e, child(ptr, "monomial"));
      std::string text = string_field(field(arr[k], "poly", ptr), child(ptr, "poly"));
      MPoly p = wrap_parse(child(ptr, "poly"), [&] { return parse_polynomial(text, VarNames::z(out)); });
      if (!images.emplace(e, p).second) throw SchemaError("duplicate monomial", child(ptr, "monomial"));
    }
    return LinearOperatorSpec::table(kappa, std::move(images), out);
  }
  if (out != kappa.size()) throw SchemaError("out_nvars only applies to tables", "/out_nvars");
  if (kind == "diagonal") {
    std::map<Exponent, Scalar> values;
    const json& arr = field(j, "diag", root);
    if (!arr.is_array()) throw SchemaError("expected an array", "/diag");
    for (std::size_t k = 0; k < arr.size(); ++k) {
      std::string ptr = child("/diag", k);
      Exponent e = exponent_field(field(arr[k], "monomial", ptr), child(ptr, "monomial"));
      check_key(e, child(ptr, "monomial"));
      std::string text = string_field(field(arr[k], "value", ptr), child(ptr, "value"));
      values[e] = wrap_parse(child(ptr, "value"), [&] { return parse_scalar(text); });
    }
    return LinearOperatorSpec::diagonal(kappa, [&](const Exponent& a) {
      auto it = values.find(a);
      return it == values.end() ? Scalar(0) : it->second;
    });
  }
  if (kind == "differential") {
    std::vector<DifferentialTerm> terms;
    const json& arr = field(j, "diff", root);
    if (!arr.is_array()) throw SchemaError("expected an array", "/diff");
    for (std::size_t k = 0; k < arr.size(); ++k) {
      std::string ptr = child("/diff", k);
      std::string text = string_field(field(arr[k], "coeff", ptr), child(ptr, "coeff"));
      DifferentialTerm t;
      t.coeff = wrap_parse(child(ptr, "coeff"), [&] { return parse_scalar(text); });
      t.zexp = exponent_field(field(arr[k], "zexp", ptr), child(ptr, "zexp"));
      t.dexp = exponent_field(field(arr[k], "dexp", ptr), child(ptr, "dexp"));
      if (t.zexp.size() != kappa.size()) throw SchemaError("wrong length", child(ptr, "zexp"));
      if (t.dexp.size() != kappa.size()) throw SchemaError("wrong length", child(ptr, "dexp"));
      terms.push_back(std::move(t));
    }
    return LinearOperatorSpec::differential(kappa, terms);
  }
  throw SchemaError("kind must be table, diagonal or differential", "/kind");
}

json operator_to_json(const LinearOperatorSpec& T) {
  json images = json::array();
  VarNames names = VarNames::z(T.out_nvars());
  for (const auto& [a, p] : T.images())
    if (!p.is_zero()) images.push_back({{"monomial", exponent_json(a)}, {"poly", to_string(p, names)}});
  json j{{"nvars", T.nvars()}, {"kappa", exponent_json(T.kappa())}, {"kind", "table"}, {"images", images}};
  if (T.out_nvars() != T.nvars()) j["out_nvars"] = T.out_nvars();
  return j;
}

namespace {

CircularDomain parse_domain_object(const json& j, const std::string& ptr) {
  if (j.is_string()) {
    try {
      return parse_domain(j.get<std::string>());
    } catch (const ParseError& e) {
      throw SchemaError(e.what(), ptr);
    }
  }
  std::string kind = string_field(field(j, "kind", ptr), child(ptr, "kind"));
  if (kind != "halfplane" && kind != "disk" && kind != "exterior" && kind != "moebius")
    throw SchemaError("kind must be halfplane, disk, exterior or moebius", child(ptr, "kind"));
  if (!j.contains("phi")) {
    if (kind == "halfplane") return CircularDomain::upper_half_plane();
    if (kind == "disk") return CircularDomain::unit_disk();
    if (kind == "exterior") return CircularDomain::unit_disk_exterior();
    throw SchemaError("missing field 'phi'", ptr);
  }
  const json& phi = j["phi"];
  std::string pptr = child(ptr, "phi");
  auto coef = [&](const char* name) {
    std::string text = string_field(field(phi, name, pptr), child(pptr, name));
    return wrap_parse(child(pptr, name), [&] { return parse_scalar(text); });
  };
  CircularDomain C;
  try {
    C = CircularDomain(MoebiusMap(coef("a"), coef("b"), coef("c"), coef("d")));
  } catch (const DomainError& e) {
    throw SchemaError(e.what(), pptr);
  }
  if (kind != "moebius" && to_string(C.kind()) != kind)
    throw SchemaError("phi describes a " + to_string(C.kind()) + ", not a " + kind, pptr);
  return C;
}

}  // namespace

DomainProduct parse_domains(const json& j) {
  if (j.is_string()) {
    try {
      return parse_domain_list(j.get<std::string>());
    } catch (const ParseError& e) {
      throw SchemaError(e.what(), "");
    }
  }
  if (!j.is_array()) throw SchemaError("expected an array of domains", "");
  DomainProduct out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(parse_domain_object(j[k], child("", k)));
  return out;
}

json domain_to_json(const CircularDomain& C) {
  const auto& m = C.phi();
  json j{{"kind", to_string(C.kind())},
         {"phi", {{"a", exact(m.a)}, {"b", exact(m.b)}, {"c", exact(m.c)}, {"d", exact(m.d)}}},
         {"convex", C.convex()},
         {"shape", C.describe()}};
  return j;
}

}  // namespace stabilis
