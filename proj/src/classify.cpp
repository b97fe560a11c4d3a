#include "sparsemult/classify.hpp"

#include "sparsemult/errors.hpp"

#include <algorithm>
#include <set>

namespace sparsemult {

namespace {

using UP = UnivariatePolynomial;

UP lin(const Rational& c0, const Rational& c1) { return UP({c0, c1}, "a"); }
UP cst(const Rational& c) { return UP::constant(c, "a"); }
Rational r(std::int64_t v) { return Rational(static_cast<long>(v)); }

}  // namespace

UnivariatePolynomial hessian_at_one(std::int64_t n, std::int64_t m, std::int64_t k, std::int64_t l) {
    if (n * l - m * k == 0) throw InvalidInput("triangle is degenerate (collinear vertices)");
    const std::vector<std::pair<LatticePoint, UP>> terms{
        {{0, 0}, cst(1)}, {{n, m}, lin(0, 1)}, {{k, l}, lin(-1, -1)}};
    UP fx({}, "a"), fy({}, "a"), fxx({}, "a"), fxy({}, "a"), fyy({}, "a");
    for (const auto& [e, c] : terms) {
        fx += c * r(e.x);
        fy += c * r(e.y);
        fxx += c * r(e.x * (e.x - 1));
        fxy += c * r(e.x * e.y);
        fyy += c * r(e.y * (e.y - 1));
    }
    // det [[Fxx, Fxy, Fx], [Fxy, Fyy, Fy], [Fx, Fy, 0]]
    UP he = fxy * fx * fy * Rational(2) - fxx * fy * fy - fyy * fx * fx;
    he = UP(he.coefficients(), "a");
    if (he.evaluate(0) != r(-k * l * (k + l)) || he.evaluate(-1) != r(-m * n * (m + n)))
        throw VerificationFailure("Hessian endpoint identities failed");
    return he;
}

UnivariatePolynomial theta(std::int64_t n, std::int64_t m, std::int64_t k) {
    const UP amn = lin(r(n), r(m));
    const UP inner = lin(r((n - 1) * n), r((m - 1) * m));
    UP t = amn * amn * r(k - 1) - lin(1, 1) * inner * r(k);
    return UP(t.coefficients(), "a");
}

// --- triangle families ------------------------------------------------------

std::optional<TriangleFamilyMatch> match_triangle_family(const SupportSet& t) {
    if (t.size() != 3) throw InvalidInput("a triangle has exactly three points");
    const auto group = projective_monomial_group();
    for (int family = 1; family <= 4; ++family) {
        for (const auto& g : group) {
            const UnimodularAffineMap lin_map(g, {0, 0});
            const SupportSet img = apply_map(lin_map, t);
            const auto p = img.points();
            for (std::size_t i = 0; i < 3; ++i) {
                const LatticePoint base = p[i], u = p[(i + 1) % 3], w = p[(i + 2) % 3];
                std::optional<LatticePoint> shift;
                SupportSet rep;
                if (family == 1) {
                    // base, base + (1,0), and a point straight above or below base
                    for (const auto& [q, z] : {std::pair{u, w}, std::pair{w, u}})
                        if (!shift && q == base + LatticePoint{1, 0} && z.x == base.x) {
                            shift = LatticePoint{0, 0} - base;
                            rep = SupportSet{{0, 0}, {1, 0}, {0, z.y - base.y}};
                        }
                } else if (family == 2 || family == 3) {
                    // apex `base`, two points on the row below it
                    if (u.y == base.y - 1 && w.y == base.y - 1) {
                        const std::int64_t o1 = u.x - base.x, o2 = w.x - base.x;
                        const bool ok = family == 2 ? o1 + o2 == 1 : (o1 == 1 || o2 == 1);
                        if (ok) {
                            shift = LatticePoint{0, 1} - base;
                            rep = SupportSet{{o1, 0}, {o2, 0}, {0, 1}};
                        }
                    }
                } else {
                    for (const auto& [q, z] : {std::pair{u, w}, std::pair{w, u}}) {
                        const LatticePoint dq = q - base, dz = z - base;
                        if (!shift && dq.y == 0 && dz.x == 0 && dq.x == dz.y && dq.x != 0) {
                            shift = LatticePoint{0, 0} - base;
                            rep = SupportSet{{0, 0}, {dq.x, 0}, {0, dq.x}};
                        }
                    }
                }
                if (shift) {
                    const UnimodularAffineMap map = UnimodularAffineMap::translation(*shift).compose(lin_map);
                    if (apply_map(map, t) != rep) throw VerificationFailure("family witness map is inconsistent");
                    return TriangleFamilyMatch{family, map, rep};
                }
            }
        }
    }
    return std::nullopt;
}

TriangleClass triangle_inflection(const SupportSet& t) {
    if (t.size() != 3 || is_segment(t)) throw InvalidInput("input is not a non-degenerate triangle");
    TriangleClass out;
    out.triangle = t;
    const auto p = t.points();
    const LatticePoint d1 = p[1] - p[0], d2 = p[2] - p[0];
    out.hessian = hessian_at_one(d1.x, d1.y, d2.x, d2.y);
    if (out.hessian.is_zero()) {
        out.reduced = out.hessian;
        out.has_inflection = false;
    } else {
        out.reduced = factor_out_roots(out.hessian, {Rational(0), Rational(-1)}).quotient;
        out.has_inflection = out.reduced.degree() >= 1;
    }

    // Θ cross-check: bring a horizontal, vertical or anti-diagonal edge to
    // the horizontal with the apex at (0, k).
    for (const auto& g : projective_monomial_group()) {
        const SupportSet img = apply_map(UnimodularAffineMap(g, {0, 0}), t);
        const auto q = img.points();
        std::optional<std::size_t> apex;
        for (std::size_t i = 0; i < 3 && !apex; ++i)
            if (q[(i + 1) % 3].y == q[(i + 2) % 3].y) apex = i;
        if (!apex) continue;
        const LatticePoint w = q[*apex], u = q[(*apex + 1) % 3], v = q[(*apex + 2) % 3];
        const std::int64_t n = u.x - w.x, m = v.x - w.x, k = w.y - u.y;
        out.theta = theta(n, m, k);
        const bool th_has = !out.theta->is_zero() &&
                            factor_out_roots(*out.theta, {Rational(0), Rational(-1)}).quotient.degree() >= 1;
        out.theta_reduced = out.theta->is_zero() ? *out.theta
                                                 : factor_out_roots(*out.theta, {Rational(0), Rational(-1)}).quotient;
        if (th_has != out.has_inflection) throw VerificationFailure("Hessian and Θ criteria disagree");
        break;
    }

    const auto fam = match_triangle_family(t);
    if (!out.has_inflection && !fam) throw VerificationFailure("triangle without inflection is outside the catalogue");
    if (out.has_inflection && fam) throw VerificationFailure("catalogue triangle has an inflection point");
    if (fam) {
        out.family = fam->family;
        out.witness_map = fam->map;
    }
    return out;
}

Json to_json(const TriangleClass& c) {
    Json j{{"triangle", to_json(c.triangle)},
           {"verdict", c.has_inflection ? "HasInflection" : "NoInflection"},
           {"hessian", to_json(c.hessian)},
           {"reduced_factor", to_json(c.reduced)}};
    if (!c.has_inflection) {
        j["family"] = c.family;
        j["witness_map"] = to_json(c.witness_map);
    }
    if (c.theta) {
        j["theta"] = to_json(*c.theta);
        j["theta_reduced"] = to_json(*c.theta_reduced);
    }
    return j;
}

// --- pair catalogue ---------------------------------------------------------

SegmentShape segment_shape(const SupportSet& seg, const SupportSet& other) {
    if (!is_segment(seg)) throw InvalidInput("support does not lie on a line");
    // Point counts, not hull counts: the sparse univariate bound caps the
    // multiplicity by (h - 1)(v - 1) even when the rows have gaps.
    SegmentShape s;
    s.h = seg.size();
    if (seg.size() >= 2) {
        const auto p = seg.points();
        s.map = UnimodularAffineMap(basis_completion(primitive(p.back() - p.front())), {0, 0});
    }
    std::set<std::int64_t> rows;
    for (const auto& q : other) rows.insert(s.map.apply(q).y);
    s.v = rows.size();
    return s;
}

std::optional<FamilyMatch> match_exceptional_family(const SupportSet& a, const SupportSet& b) {
    if (a.empty() || b.empty()) throw InvalidInput("supports must be non-empty");
    for (const auto& [x, y, tr] : {std::tuple{&a, &b, false}, std::tuple{&b, &a, true}}) {
        if (!is_segment(*x)) continue;
        const SegmentShape s = segment_shape(*x, *y);
        const bool listed = s.v == 1 || s.h == 1 || (s.h == 3 && s.v == 2) || (s.h == 2 && s.v == 3) ||
                            (s.h == 2 && s.v == 2);
        if (listed) return FamilyMatch{1, tr, s.h, s.v, "segment with (h, v) = (" + std::to_string(s.h) + ", " +
                                                           std::to_string(s.v) + ")"};
    }
    if (a.size() == 4 && translate_to_origin(a) == translate_to_origin(b)) {
        static const SupportSet square = normal_form(SupportSet{{0, 0}, {1, 0}, {0, 1}, {1, 1}}).form;
        static const SupportSet ell = normal_form(SupportSet{{0, 0}, {1, 0}, {0, 1}, {2, 0}}).form;
        const SupportSet nf = normal_form(a).form;
        if (nf == square) return FamilyMatch{2, false, 0, 0, "A = B = unit square"};
        if (nf == ell) return FamilyMatch{2, false, 0, 0, "A = B = {(0,0),(1,0),(0,1),(2,0)}"};
    }
    for (const auto& [x, y, tr] : {std::tuple{&a, &b, false}, std::tuple{&b, &a, true}}) {
        if (x->size() != 3 || area2(convex_hull(*x)) != 1) continue;
        const SupportSet img = apply_map(standardizing_map(*x), *y);
        std::int64_t mx = img.begin()->x, my = img.begin()->y, ms = img.begin()->x + img.begin()->y;
        for (const auto& q : img) {
            mx = std::min(mx, q.x);
            my = std::min(my, q.y);
            ms = std::max(ms, q.x + q.y);
        }
        if (ms - mx - my <= 2) return FamilyMatch{3, tr, 0, 0, "standard simplex against a subset of a 2-simplex"};
    }
    return std::nullopt;
}

Json to_json(const FamilyMatch& m) {
    Json j{{"family", m.family}, {"transposed", m.transposed}, {"detail", m.detail}};
    if (m.family == 1) {
        j["h"] = m.h;
        j["v"] = m.v;
    }
    return j;
}

// --- segment route ----------------------------------------------------------

namespace {

LaurentPolynomial map_poly(const UnimodularAffineMap& m, const LaurentPolynomial& p) {
    LaurentPolynomial out;
    for (const auto& [e, c] : p.terms()) out.add_term(m.apply(e), c);
    return out;
}

/// Coefficients on `values` (distinct) with a root of exact multiplicity mult at 1.
std::vector<Rational> univariate_coefficients(const std::vector<std::int64_t>& values, std::size_t mult) {
    const UnivariateConstruction u = construct_univariate(values, mult);
    std::vector<Rational> c;
    for (auto v : values) c.push_back(u.polynomial->coefficient(static_cast<std::size_t>(v - u.shift)));
    return c;
}

}  // namespace

std::optional<ConstructedSystem> segment_route(const SupportSet& a, const SupportSet& b, std::vector<std::string>* log) {
    const TorusPoint one{1, 1};
    for (const auto& [s, o, name] : {std::tuple{&a, &b, "A"}, std::tuple{&b, &a, "B"}}) {
        if (!is_segment(*s) || s->size() < 2) continue;
        const SegmentShape shape = segment_shape(*s, *o);
        const UnimodularAffineMap back = shape.map.inverse();
        const SupportSet ms = apply_map(shape.map, *s), mo = apply_map(shape.map, *o);
        std::vector<std::int64_t> xs;
        for (const auto& q : ms) xs.push_back(q.x);
        const std::int64_t y0 = ms.begin()->y;
        std::map<std::int64_t, std::vector<LatticePoint>> rows;
        for (const auto& q : mo) rows[q.y].push_back(q);
        std::vector<std::int64_t> ys;
        for (const auto& [y, pts] : rows) ys.push_back(y);
        const std::size_t h = xs.size(), v = ys.size();

        std::vector<std::pair<std::size_t, std::size_t>> splits;
        if (v >= 4 && h >= 2) splits.push_back({1, 3});
        if (h >= 4 && v >= 2) splits.push_back({3, 1});
        if (h >= 3 && v >= 3) splits.push_back({2, 2});
        if (splits.empty() && log)
            log->push_back(std::string("segment route: ") + name + " has (h, v) = (" + std::to_string(h) + ", " +
                           std::to_string(v) + "), no multiplicity split reaches 3");
        for (const auto& [m1, m2] : splits) {
            LaurentPolynomial p;
            const auto pc = univariate_coefficients(xs, m1);
            for (std::size_t j = 0; j < h; ++j) p.add_term({xs[j], y0}, pc[j]);
            const auto qc = univariate_coefficients(ys, m2);
            // One representative per row; for the (2,2) split the choice
            // must make q smooth at (1,1) through its x-derivative.
            std::vector<std::size_t> pick(v, 0);
            for (std::size_t tries = 0; tries < 4096; ++tries) {
                LaurentPolynomial q;
                Rational qx = 0;
                for (std::size_t i = 0; i < v; ++i) {
                    const LatticePoint e = rows[ys[i]][pick[i]];
                    q.add_term(e, qc[i]);
                    qx += qc[i] * Rational(static_cast<long>(e.x));
                }
                const bool smooth_q = m2 == 1 || !is_zero(qx);
                if (m1 == 1 || smooth_q) {
                    const LaurentPolynomial po = map_poly(back, p), qo = map_poly(back, q);
                    ConstructedSystem sys;
                    sys.f = m1 == 1 ? po : qo;
                    sys.g = m1 == 1 ? qo : po;
                    sys.points = {one};
                    const SmoothIntersection check = intersection_multiplicity_smooth(sys.f, sys.g, one);
                    if (!check.order || *check.order != m1 * m2)
                        throw VerificationFailure("segment construction failed independent verification");
                    sys.multiplicities = {*check.order};
                    sys.certificates = {check.certificate};
                    return sys;
                }
                // next representative choice
                std::size_t i = 0;
                while (i < v && ++pick[i] == rows[ys[i]].size()) pick[i++] = 0;
                if (i == v) break;
            }
            // Both curves singular: p depends on x alone, so the local
            // intersection number factors as ord_1 p * I(x - 1, q).
            LaurentPolynomial q;
            for (std::size_t i = 0; i < v; ++i) q.add_term(rows[ys[i]].front(), qc[i]);
            const std::int64_t x0 = *std::min_element(xs.begin(), xs.end());
            std::vector<Rational> pu(static_cast<std::size_t>(*std::max_element(xs.begin(), xs.end()) - x0) + 1);
            for (std::size_t j = 0; j < h; ++j) pu[static_cast<std::size_t>(xs[j] - x0)] = pc[j];
            const UnivariateMultiplicity um = univariate_multiplicity(UnivariatePolynomial(pu), Rational(1));
            const LaurentPolynomial line = LaurentPolynomial::monomial({1, 0}) - LaurentPolynomial::constant(1);
            const SmoothIntersection chk = intersection_multiplicity_smooth(line, q, one);
            if (!chk.order || um.multiplicity * *chk.order != m1 * m2)
                throw VerificationFailure("segment construction failed independent verification");
            ConstructedSystem sys;
            sys.f = map_poly(back, p);
            sys.g = map_poly(back, q);
            sys.points = {one};
            sys.multiplicities = {m1 * m2};
            sys.certificates = {um.certificate, chk.certificate};
            if (log)
                log->push_back("segment route: both curves singular; multiplicity certified as " +
                               std::to_string(um.multiplicity) + " * " + std::to_string(*chk.order) +
                               " in the frame where " + name + " is horizontal");
            return sys;
        }
    }
    return std::nullopt;
}

// --- decision ---------------------------------------------------------------

std::string to_string(WitnessStatus s) {
    switch (s) {
        case WitnessStatus::Verified: return "verified";
        case WitnessStatus::ComplexOnly: return "complex-only";
        case WitnessStatus::None: return "none";
    }
    return "unknown";
}

Mult3Report decide_mult3(const SupportSet& a, const SupportSet& b, std::uint64_t seed) {
    if (a.empty() || b.empty()) throw InvalidInput("supports must be non-empty");
    Mult3Report rep;
    rep.a = a;
    rep.b = b;
    rep.mixed_volume = mixed_volume(convex_hull(a), convex_hull(b));
    rep.family = match_exceptional_family(a, b);
    rep.impossible = rep.mixed_volume <= 2;
    if (rep.impossible) {
        if (!rep.family) throw VerificationFailure("mixed volume at most 2 but the pair matches no catalogue family");
        return rep;
    }
    if (rep.family)
        throw VerificationFailure("catalogue pair has mixed volume " + std::to_string(rep.mixed_volume) +
                                  " > 2 (" + rep.family->detail + ")");

    // (i) osculating construction with m = 3
    bool prescribed_applies = false;
    for (const auto& [x, y] : {std::pair{&a, &b}, std::pair{&b, &a}}) {
        if (is_segment(*x) || is_segment(*y)) continue;
        const auto idx = primitivity_index(*x, *y);
        if (!idx || *idx != 1) continue;
        const bool convex = *x == lattice_points(convex_hull(*x));
        if (!convex || x->size() >= erode(convex_hull(*x), *y).size() + 4) prescribed_applies = true;
    }
    if (prescribed_applies) {
        rep.applicable_routes.push_back("prescribed");
        if (auto w = prescribed_route(a, b, 3, seed)) {
            rep.route = "prescribed";
            rep.witness_status = WitnessStatus::Verified;
            rep.construction = std::move(w);
            return rep;
        }
        rep.log.push_back("prescribed route: no draw reached D >= 3 with a verified order-3 contact");
    } else {
        rep.log.push_back("prescribed route: inapplicable (segment, non-primitive pair, or D < 3)");
    }

    // (ii) line contact
    const bool line_applies = !unimodular_triangles(a).empty() || !unimodular_triangles(b).empty();
    bool complex_only = false;
    if (line_applies) {
        rep.applicable_routes.push_back("line");
        if (auto w = line_route(a, b, 3, seed, 20000, &complex_only)) {
            rep.route = "line";
            rep.witness_status = WitnessStatus::Verified;
            rep.construction = std::move(w);
            return rep;
        }
        rep.log.push_back(complex_only ? "line route: contact of order 3 exists only at irrational slopes"
                                       : "line route: no line contact of order 3");
    } else {
        rep.log.push_back("line route: inapplicable (no unimodular triangle in either support)");
    }

    // (iii) segment case
    if (is_segment(a) || is_segment(b)) {
        rep.applicable_routes.push_back("segment");
        if (auto w = segment_route(a, b, &rep.log)) {
            rep.route = "segment";
            rep.witness_status = WitnessStatus::Verified;
            rep.construction = std::move(w);
            return rep;
        }
    } else {
        rep.log.push_back("segment route: inapplicable (neither support is a segment)");
    }
    rep.witness_status = complex_only ? WitnessStatus::ComplexOnly : WitnessStatus::None;
    return rep;
}

Json to_json(const Mult3Report& r) {
    Json j{{"A", to_json(r.a)},
           {"B", to_json(r.b)},
           {"mixed_volume", r.mixed_volume},
           {"verdict", r.impossible ? "Impossible" : "Achievable"}};
    if (r.family) j["matched_family"] = to_json(*r.family);
    if (!r.impossible) {
        j["construction_route"] = r.route;
        j["witness"] = to_string(r.witness_status);
        j["applicable_routes"] = r.applicable_routes;
        if (r.construction) j["construction"] = to_json(*r.construction);
        j["log"] = r.log;
    }
    return j;
}

// --- four-point bodies ------------------------------------------------------

std::vector<SupportSet> enumerate_four_point_bodies() {
    // With i <= 1 interior points, area2 = i + 2 <= 3 bounds every
    // coordinate of the fourth point by 3 in absolute value.
    std::set<SupportSet> forms;
    for (std::int64_t x = -3; x <= 3; ++x)
        for (std::int64_t y = -3; y <= 3; ++y) {
            const SupportSet s{{0, 0}, {1, 0}, {0, 1}, {x, y}};
            if (s.size() != 4 || is_segment(s)) continue;
            const LatticePolygon hull = convex_hull(s);
            if (lattice_points(hull) != s) continue;
            if (pick_counts(hull).interior > 1) continue;
            forms.insert(normal_form(s).form);
        }
    return {forms.begin(), forms.end()};
}

}  // namespace sparsemult
