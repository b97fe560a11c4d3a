#include "sparsemult/json_io.hpp"

#include "sparsemult/errors.hpp"

#include <algorithm>
#include <cstring>

namespace sparsemult {

void require_fields(const Json& j, std::initializer_list<const char*> allowed, const std::string& what) {
    if (!j.is_object()) throw InvalidInput(what + ": expected a JSON object");
    for (const auto& [key, value] : j.items()) {
        const bool known = std::any_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; });
        if (!known) throw InvalidInput(what + ": unknown field '" + key + "'");
    }
}

const Json& field(const Json& j, const char* key, const std::string& what) {
    const auto it = j.find(key);
    if (it == j.end()) throw InvalidInput(what + ": missing field '" + std::string(key) + "'");
    return *it;
}

Json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return make_rational(j.get<long>());
    throw InvalidInput("rational must be a string \"p/q\" or an integer");
}

Json to_json(LatticePoint p) { return Json::array({p.x, p.y}); }

LatticePoint point_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw InvalidInput("lattice point must be [x, y] with integer entries");
    return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
}

Json to_json(const SupportSet& s) {
    Json pts = Json::array();
    for (const auto& p : s) pts.push_back(to_json(p));
    return Json{{"points", pts}};
}

SupportSet support_from_json(const Json& j) {
    require_fields(j, {"points"}, "support");
    const Json& pts = field(j, "points", "support");
    if (!pts.is_array()) throw InvalidInput("support: 'points' must be an array");
    std::vector<LatticePoint> v;
    for (const auto& p : pts) v.push_back(point_from_json(p));
    if (v.empty()) throw InvalidInput("support: empty point set");
    return SupportSet(std::move(v));
}

Json to_json(const LatticePolygon& p) {
    Json v = Json::array();
    for (const auto& q : p.vertices) v.push_back(to_json(q));
    return Json{{"vertices", v}, {"dim", p.dim}};
}

Json to_json(const UnimodularAffineMap& m) {
    const auto& a = m.matrix();
    return Json{{"matrix", Json::array({Json::array({a[0][0], a[0][1]}), Json::array({a[1][0], a[1][1]})})},
                {"shift", to_json(m.shift())}};
}

Json to_json(const LaurentPolynomial& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back(Json{{"exp", to_json(e)}, {"coeff", to_json(c)}});
    return Json{{"terms", terms}};
}

LaurentPolynomial laurent_from_json(const Json& j) {
    require_fields(j, {"terms"}, "polynomial");
    const Json& terms = field(j, "terms", "polynomial");
    if (!terms.is_array()) throw InvalidInput("polynomial: 'terms' must be an array");
    LaurentPolynomial p;
    for (const auto& t : terms) {
        require_fields(t, {"exp", "coeff"}, "term");
        p.add_term(point_from_json(field(t, "exp", "term")), rational_from_json(field(t, "coeff", "term")));
    }
    return p;
}

Json to_json(const UnivariatePolynomial& p) {
    return Json{{"variable", p.variable()}, {"coefficients", to_json(p.coefficients())}};
}

UnivariatePolynomial univariate_from_json(const Json& j) {
    require_fields(j, {"variable", "coefficients"}, "univariate polynomial");
    const Json& c = field(j, "coefficients", "univariate polynomial");
    if (!c.is_array()) throw InvalidInput("univariate polynomial: 'coefficients' must be an array");
    std::vector<Rational> v;
    for (const auto& x : c) v.push_back(rational_from_json(x));
    std::string var = "t";
    if (j.contains("variable")) {
        if (!j["variable"].is_string()) throw InvalidInput("univariate polynomial: 'variable' must be a string");
        var = j["variable"].get<std::string>();
    }
    return UnivariatePolynomial(std::move(v), var);
}

Json to_json(const TorusPoint& p) { return Json::array({to_json(p.x), to_json(p.y)}); }

TorusPoint torus_point_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw InvalidInput("point must be [\"px\", \"py\"]");
    return {rational_from_json(j[0]), rational_from_json(j[1])};
}

Json to_json(const std::vector<Rational>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

}  // namespace sparsemult
