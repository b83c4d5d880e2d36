#pragma once

#include <json.hpp>

#include "weylfact/newton.hpp"
#include "weylfact/pseudopoly.hpp"
#include "weylfact/weyl.hpp"

namespace weylfact {

using Json = nlohmann::ordered_json;

/// Rationals travel as "num/den" strings, never as JSON numbers.
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json slope_to_json(const Slope& s);
Json poly_to_json(const UniPoly& p);

/// {"width": n, "breakpoints": [[i,j],...]}
Json polygon_to_json(const AdmissiblePolygon& d);
AdmissiblePolygon polygon_from_json(const Json& j);

/// {"degree": n, "truncation": N, "terms": [{"i":..,"j":..,"c":"num/den"},...]}
Json pseudopoly_to_json(const PseudoPolynomial& p);
PseudoPolynomial pseudopoly_from_json(const Json& j);

/// The pseudopolynomial layout plus "order" and "t_shift".
Json operator_to_json(const WeylOperator& l);
/// Accepts the pseudopolynomial layout too (t_shift defaults to 0).
WeylOperator operator_from_json(const Json& j);

}  // namespace weylfact
