#ifndef SPARSEMULT_JSON_IO_HPP
#define SPARSEMULT_JSON_IO_HPP

#include "sparsemult/branch.hpp"
#include "sparsemult/laurent.hpp"
#include "sparsemult/lattice.hpp"
#include "sparsemult/polynomial.hpp"

#include <json.hpp>

#include <initializer_list>
#include <string>

namespace sparsemult {

using Json = nlohmann::ordered_json;

// Every *_from_json throws InvalidInput on malformed input, including
// unknown object fields.

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(LatticePoint p);
LatticePoint point_from_json(const Json& j);

/// {"points": [[x, y], ...]}
Json to_json(const SupportSet& s);
SupportSet support_from_json(const Json& j);

Json to_json(const LatticePolygon& p);

Json to_json(const UnimodularAffineMap& m);

/// {"terms": [{"exp": [e1, e2], "coeff": "p/q"}, ...]}
Json to_json(const LaurentPolynomial& p);
LaurentPolynomial laurent_from_json(const Json& j);

/// {"variable": "t", "coefficients": ["c0", "c1", ...]}
Json to_json(const UnivariatePolynomial& p);
UnivariatePolynomial univariate_from_json(const Json& j);

/// ["px", "py"]
Json to_json(const TorusPoint& p);
TorusPoint torus_point_from_json(const Json& j);

Json to_json(const std::vector<Rational>& v);

/// Throws InvalidInput unless j is an object whose keys are all in `allowed`.
void require_fields(const Json& j, std::initializer_list<const char*> allowed, const std::string& what);
const Json& field(const Json& j, const char* key, const std::string& what);

}  // namespace sparsemult

#endif  // SPARSEMULT_JSON_IO_HPP
