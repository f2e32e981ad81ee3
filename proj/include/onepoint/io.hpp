#ifndef ONEPOINT_IO_HPP
#define ONEPOINT_IO_HPP

#include <string>

#include <json.hpp>

#include <onepoint/classify.hpp>
#include <onepoint/quotient.hpp>

namespace onepoint
{

using Json = nlohmann::ordered_json;

// Throws ParseError carrying the line and column of malformed input.
Json parse_json(const std::string &text);

// Rationals are written as strings "p/q" (or "p"); integers are also accepted on input.
Json rational_to_json(const Rational &q);
Rational rational_from_json(const Json &j);
Json vector_to_json(const LatticeVector &v);
LatticeVector vector_from_json(const Json &j, std::size_t rank);

// {"ambient_rank": n, "generators": [[...], ...]}. Schema problems throw InvalidArgument.
SemigroupPtr semigroup_from_json(const Json &j);
Json semigroup_to_json(const AffineSemigroup &s);

// Element syntax: terms "c*x^[a1,...,an]", "x^inf", bare rationals, joined by
// "+" or "-" (U+2212 is accepted). For rank-one ambient lattices "x^3" is
// short for "x^[3]". Throws ParseError (also for x^inf over C[S]) and NotInSemigroup.
AlgebraElement parse_element(SemigroupPtr s, const std::string &text, Carrier carrier);

// {"carrier": "S"|"S_inf", "terms": [{"exponent": [...]|"inf", "coefficient": "p/q"}, ...]}
Json element_to_json(const AlgebraElement &f);
AlgebraElement element_from_json(SemigroupPtr s, const Json &j);

// {"components": [{"degree": [...], "phi": [...]}, ...]} or
// {"images": {"[h]": "element", ...}} with an optional "carrier" ("S" or "S_inf").
// Images mentioning x^inf are read over C[S_inf]. The result is lifted when
// the carrier is S_inf, either from the spec or because images demanded it.
Derivation derivation_from_json(SemigroupPtr s, const Json &j);
// Components form with ambient degrees and forms.
Json derivation_to_json(const Derivation &d);

Json quotient_to_json(const FiniteQuotient &q);
FiniteQuotient quotient_from_json(const Json &j);

Json bounds_to_json(const OracleBounds &b);
OracleBounds bounds_from_json(const Json &j);
// "i,j,n,span"
OracleBounds parse_bounds(const std::string &text);

Json witness_to_json(const Witness &w);
Witness witness_from_json(SemigroupPtr s, const Json &j);
Json verdict_to_json(const IntegrabilityVerdict &v, const std::optional<OracleBounds> &bounds = std::nullopt);
IntegrabilityVerdict verdict_from_json(SemigroupPtr s, const Json &j);

Json tower_report_to_json(const TowerReport &r);

} // namespace onepoint

#endif
