#pragma once

#include <json.hpp>

#include <string>

#include "stabilis/domains.hpp"
#include "stabilis/growth.hpp"
#include "stabilis/multivariate.hpp"
#include "stabilis/operators.hpp"
#include "stabilis/polarization.hpp"
#include "stabilis/poly_text.hpp"

namespace stabilis {

using nlohmann::json;

// Floating values carry a "numeric" tag and 17 significant digits.
json numeric(double x);
json exact(const mpq_class& q);
json exact(const Scalar& s);
json exponent_json(const Exponent& e);
json rationals_json(const std::vector<mpq_class>& v);
json scalars_json(const std::vector<Scalar>& v);

json to_json(const UniWitness& w);
json to_json(const MultiVerdict& v, const VarNames& names);
json to_json(const ProperPositionResult& r, const VarNames& names);
json to_json(const RangeInfo& r, const VarNames& names);
json to_json(const CertificationReport& r, const VarNames& in, const VarNames& symbol_names);
json to_json(const TruncationSweep& s, const VarNames& symbol_names);
json to_json(const DomainVerdict& v, const VarNames& names);
json to_json(const NKappaReport& r, const VarNames& names);
json to_json(const LeeYangReport& r, const VarNames& names);
json to_json(const DomainCertification& r, const VarNames& in, const VarNames& symbol_names);
json to_json(const StrictReport& r, const VarNames& names);
json to_json(const SzaszRootReport& r);
json to_json(const GrowthCheck& g);
json to_json(const GrowthConstants& k);
json to_json(const CoefficientBoundReport& r);
json to_json(const GwsReport& r, const VarNames& names, const VarNames& polarized_names);

// Operator schema: {"nvars", "kappa", "kind": "table|diagonal|differential", "out_nvars"?,
// "images": [{"monomial", "poly"}], "diag": [{"monomial", "value"}], "diff": [{"coeff", "zexp", "dexp"}]}.
LinearOperatorSpec parse_operator(const json& j);
json operator_to_json(const LinearOperatorSpec& T);

// Array of {"kind", "phi": {"a","b","c","d"}} objects or shorthand strings, or one shorthand string.
DomainProduct parse_domains(const json& j);
json domain_to_json(const CircularDomain& C);

}  // namespace stabilis
