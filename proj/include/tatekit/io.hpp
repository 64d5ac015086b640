#pragma once

#include <json.hpp>
#include <string>

#include "tatekit/geometry.hpp"
#include "tatekit/lattice.hpp"
#include "tatekit/liftings.hpp"
#include "tatekit/operator.hpp"
#include "tatekit/series.hpp"

// JSON forms of the domain types. Parsers raise SchemaError with a path such
// as "$.cert.hi[1]"; serializers emit the canonical form, so
// serialize(parse(serialize(v))) == serialize(v).
namespace tatekit::io {

using Json = nlohmann::ordered_json;

Json to_json(const FieldRef& k);
FieldRef field_from_json(const Json& j, const std::string& path = "$");

Json to_json(const BoundCertificate& c);
BoundCertificate cert_from_json(const Json& j, int n, const std::string& path = "$");

// "field" may be omitted when a context field is supplied.
Json to_json(const TruncatedSeries& s, bool with_field = true);
TruncatedSeries series_from_json(const Json& j, const FieldRef& context = nullptr, const std::string& path = "$");

Json to_json(const MonomialSubspace& s);
SubspaceRef subspace_from_json(const Json& j, const std::string& path = "$");
MonomialLattice lattice_from_json(const Json& j, const std::string& path = "$");

// {"field": ..., "n": ..., "expr": node}; nodes carry no field of their own.
Json to_json(const OperatorExpr& f);
OperatorExpr operator_from_json(const Json& j, const std::string& path = "$");

Json to_json(const LiftingSpec& s);
LiftingSpec lifting_from_json(const Json& j, const std::string& path = "$");

Json to_json(const OpenProfile& v);
OpenProfile profile_from_json(const Json& j, const std::string& path = "$");

// Report payloads; output only.
Json to_json(const IdealFlags& f);
Json to_json(const WindowTransfer& w);
Json to_json(const FalsifierVerdict& v);
Json to_json(const CuspVerdict& v);
Json to_json(const CompletionModel& m);
Json to_json(const AdeleDescription& d);
Json to_json(const CoverReport& r);
Json to_json(const IdempotentReport& r);
Json to_json(const SuiteCheck& c);

Json exponent_json(const Exponent& e);
Exponent exponent_from_json(const Json& j, int n, const std::string& path);

// Integer polynomial in x, low degree first: "x^2 - 2", "3*x^3+x+1", or a
// coefficient list "-2,0,1". SchemaError on anything else.
polymod::Poly parse_poly(const std::string& text);
std::string poly_to_string(const polymod::Poly& f, const std::string& var = "x");

// Parses text, mapping JSON syntax errors to SchemaError.
Json parse_text(const std::string& text, const std::string& what = "input");

}  // namespace tatekit::io
