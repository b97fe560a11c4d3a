#include "sparsemult/oracle.hpp"

#include "sparsemult/errors.hpp"

#include <algorithm>

namespace sparsemult {

std::string to_string(OracleVerdict v) {
    switch (v) {
        case OracleVerdict::ProvedImpossible: return "ProvedImpossible";
        case OracleVerdict::FoundWitness: return "FoundWitness";
        case OracleVerdict::Inconclusive: return "Inconclusive";
    }
    return "unknown";
}

namespace {

const TorusPoint kOne{1, 1};
const std::vector<std::string> kParam{"a"};

LaurentPolynomial map_exponents(const UnimodularAffineMap& m, const LaurentPolynomial& p) {
    LaurentPolynomial out;
    for (const auto& [e, c] : p.terms()) out.add_term(m.apply(e), c);
    return out;
}

}  // namespace

UnimodularAffineMap standardizing_map(const SupportSet& s) {
    const auto pts = s.points();
    if (s.size() == 3) {
        const LatticePoint u = pts[1] - pts[0], v = pts[2] - pts[0];
        const std::int64_t d = cross(u, v);
        if (d != 1 && d != -1) throw InvalidInput("triangle is not unimodular");
        // Inverse of the matrix with columns u, v.
        const UnimodularAffineMap::Matrix inv{{{v.y * d, -v.x * d}, {-u.y * d, u.x * d}}};
        const UnimodularAffineMap lin(inv, {0, 0});
        return UnimodularAffineMap::translation(LatticePoint{0, 0} - lin.apply(pts[0])).compose(lin);
    }
    if (s.size() == 2) {
        const LatticePoint e = primitive(pts[1] - pts[0]);
        const UnimodularAffineMap lin(basis_completion(e), {0, 0});
        return UnimodularAffineMap::translation(LatticePoint{0, 0} - lin.apply(pts[0])).compose(lin);
    }
    throw InvalidInput("line-like support must have two or three points");
}

namespace {

Integer binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

using PolyMatrix = std::vector<std::vector<MPoly>>;

/// Combinations of {0..n-1} of size k, lexicographic.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        out.push_back(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

struct MinorGcd {
    std::optional<UnivariatePolynomial> gcd;  // nullopt: every s-minor vanishes identically
    bool over_budget = false;
};

MinorGcd minor_gcd(const PolyMatrix& m, std::size_t s, std::size_t& used, std::size_t budget) {
    MinorGcd out;
    if (m.empty() || s > m.size() || s > m[0].size()) return out;
    const auto rows = combinations(m.size(), s), cols = combinations(m[0].size(), s);
    for (const auto& r : rows)
        for (const auto& c : cols) {
            if (++used > budget) {
                out.over_budget = true;
                return out;
            }
            PolyMatrix sub(s, std::vector<MPoly>(s));
            for (std::size_t i = 0; i < s; ++i)
                for (std::size_t j = 0; j < s; ++j) sub[i][j] = m[r[i]][c[j]];
            const MPoly det = bareiss_determinant<MPoly>(
                std::move(sub), [](const MPoly& x, const MPoly& y) { return exact_div(x, y); },
                [](const MPoly& x) { return x.is_zero(); });
            if (det.is_zero()) continue;
            const UnivariatePolynomial d(det.to_univariate(0).coefficients(), "a");
            out.gcd = out.gcd ? gcd(*out.gcd, d) : d.monic();
            if (out.gcd->degree() == 0) return out;
        }
    return out;
}

UnivariatePolynomial strip_common(UnivariatePolynomial r, const UnivariatePolynomial& h) {
    for (;;) {
        const UnivariatePolynomial d = gcd(r, h);
        if (d.degree() <= 0) return r.monic();
        r = divmod(r, d).first;
    }
}

RationalMatrix evaluate(const PolyMatrix& m, const Rational& a, std::size_t cols) {
    RationalMatrix out(m.size(), cols);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = m[i][j].substitute(0, a).constant_value();
    return out;
}

/// c in ker(cond) with full * c != 0, if any.
std::optional<RationalVector> escaping_kernel_vector(const RationalMatrix& cond, const RationalMatrix& full) {
    for (auto& v : kernel_basis(cond)) {
        const auto image = full.apply(v);
        if (std::any_of(image.begin(), image.end(), [](const Rational& x) { return !is_zero(x); })) return v;
    }
    return std::nullopt;
}

Json poly_json(const std::optional<UnivariatePolynomial>& p) { return p ? to_json(*p) : Json("identically zero"); }

}  // namespace

std::vector<SupportSet> unimodular_triangles(const SupportSet& s) {
    std::vector<SupportSet> out;
    const auto p = s.points();
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            for (std::size_t k = j + 1; k < p.size(); ++k) {
                const std::int64_t d = cross(p[j] - p[i], p[k] - p[i]);
                if (d == 1 || d == -1) out.push_back(SupportSet{p[i], p[j], p[k]});
            }
    return out;
}

LineAnalysis analyze_line_pencil(const SupportSet& line_points, const SupportSet& other, std::size_t target,
                                 std::size_t budget) {
    if (other.empty()) throw InvalidInput("second support is empty");
    if (target == 0) throw InvalidInput("target multiplicity must be positive");
    const UnimodularAffineMap phi = standardizing_map(line_points);
    const UnimodularAffineMap back = phi.inverse();
    const bool pencil = line_points.size() == 3;
    const SupportSet mapped = apply_map(phi, other);
    LatticePoint lo = *mapped.begin();
    for (const auto& e : mapped) lo = {std::min(lo.x, e.x), std::min(lo.y, e.y)};
    std::vector<LatticePoint> cols;
    for (const auto& e : mapped) cols.push_back(e - lo);

    std::int64_t top = 0;
    for (const auto& e : cols) top = std::max(top, e.x + e.y);
    const std::size_t full_rows = static_cast<std::size_t>(top) + 1;
    const std::size_t cond_rows = std::min(target, full_rows);

    LineAnalysis out;
    out.transcript = Json{{"map", to_json(phi)}, {"other_mapped", to_json(SupportSet(cols))}, {"target", target}};

    auto make_witness = [&](const LaurentPolynomial& line_mapped, const RationalVector& c) {
        LaurentPolynomial g_mapped;
        for (std::size_t j = 0; j < cols.size(); ++j) g_mapped.add_term(cols[j] + lo, c[j]);
        ConstructedSystem sys;
        sys.f = map_exponents(back, line_mapped);
        sys.g = map_exponents(back, g_mapped);
        sys.points = {kOne};
        const SmoothIntersection check = intersection_multiplicity_smooth(sys.f, sys.g, kOne);
        if (!check.order || *check.order < target)
            throw VerificationFailure("elimination witness failed independent verification");
        sys.multiplicities = {*check.order};
        sys.certificates = {check.certificate};
        return sys;
    };

    // Vertical line X = 1, the only member outside the slope pencil; for two
    // point supports it is the whole family.
    {
        RationalMatrix full(full_rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (std::size_t i = 0; i < full_rows; ++i) full(i, j) = Rational(binomial(cols[j].y, static_cast<std::int64_t>(i)));
        const RationalMatrix cond = full.top_rows(cond_rows);
        out.transcript["vertical"] = Json{{"rank_condition", rank(cond)}, {"rank_full", rank(full)}};
        if (cond_rows < target || rank(cond) < rank(full)) {
            if (const auto c = escaping_kernel_vector(cond, full)) {
                // X - 1 on the triangle, X^k - 1 on the pair {(0,0), (k,0)}.
                LaurentPolynomial line;
                line.add_term(pencil ? LatticePoint{1, 0} : apply_map(phi, line_points).points()[1], 1);
                line.add_term({0, 0}, -1);
                out.verdict = OracleVerdict::FoundWitness;
                out.witness = make_witness(line, *c);
                out.reason = "vertical line";
                return out;
            }
        }
    }
    if (!pencil) {
        out.verdict = OracleVerdict::ProvedImpossible;
        out.reason = "the binomial curve is locally the line X = 1 and the contact conditions force g to vanish on it";
        return out;
    }

    // Slope pencil Y - 1 = a (X - 1): entry (i, b) is the t^i coefficient of
    // (1 + t)^b1 (1 + a t)^b2.
    PolyMatrix full(full_rows, std::vector<MPoly>(cols.size(), MPoly(kParam)));
    const MPoly a = MPoly::variable(kParam, 0);
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < full_rows; ++i)
            for (std::int64_t q = 0; q <= static_cast<std::int64_t>(i); ++q) {
                const Integer c = binomial(cols[j].x, static_cast<std::int64_t>(i) - q) * binomial(cols[j].y, q);
                if (c != 0) full[i][j] += pow(a, static_cast<unsigned>(q)) * Rational(c);
            }
    const PolyMatrix cond(full.begin(), full.begin() + static_cast<long>(cond_rows));

    std::size_t used = 0;
    bool irrational_only = false;
    Json steps = Json::array();
    for (std::size_t s = 1; s <= std::min(full_rows, cols.size()); ++s) {
        const MinorGcd h = minor_gcd(full, s, used, budget);
        const MinorGcd g = minor_gcd(cond, s, used, budget);
        if (h.over_budget || g.over_budget) {
            out.reason = "minor budget exhausted";
            out.transcript["steps"] = steps;
            return out;
        }
        if (!h.gcd) break;  // rank of the full matrix never reaches s
        Json step{{"s", s}, {"condition_gcd", poly_json(g.gcd)}, {"full_gcd", poly_json(h.gcd)}};
        std::optional<Rational> slope;
        if (!g.gcd) {
            // The conditions have rank < s for every slope; any slope off the
            // roots of h works.
            for (long k = 2; !slope; ++k)
                for (long sign : {1, -1})
                    if (!slope && !is_zero(h.gcd->evaluate(Rational(sign * k)))) slope = Rational(sign * k);
            step["generic"] = true;
        } else {
            const UnivariatePolynomial r = strip_common(*g.gcd, *h.gcd);
            step["residual"] = to_json(r);
            if (r.degree() >= 1) {
                const RationalRoots roots = rational_roots(r);
                if (!roots.roots.empty()) slope = roots.roots.front();
                else irrational_only = true;
                step["rational_roots"] = to_json(roots.roots);
            }
        }
        steps.push_back(step);
        if (slope) {
            const RationalMatrix fe = evaluate(full, *slope, cols.size());
            const RationalMatrix ce = fe.top_rows(cond_rows);
            if (const auto c = escaping_kernel_vector(ce, fe)) {
                LaurentPolynomial line;
                line.add_term({0, 1}, 1);
                line.add_term({1, 0}, -*slope);
                line.add_term({0, 0}, *slope - 1);
                out.verdict = OracleVerdict::FoundWitness;
                out.witness = make_witness(line, *c);
                out.reason = "slope " + to_string(*slope);
                out.transcript["steps"] = steps;
                return out;
            }
            throw VerificationFailure("rank drop predicted by the minor gcds did not occur");
        }
    }
    out.transcript["steps"] = steps;
    if (irrational_only) {
        out.reason = "contact of the required order occurs only at irrational slopes";
        return out;
    }
    out.verdict = OracleVerdict::ProvedImpossible;
    out.reason = "no slope lowers the condition rank below the full rank";
    return out;
}

std::optional<ConstructedSystem> prescribed_route(const SupportSet& a, const SupportSet& b, std::size_t target,
                                                  std::uint64_t seed) {
    for (const auto& [x, y] : {std::pair{&a, &b}, std::pair{&b, &a}}) {
        if (is_segment(*x) || is_segment(*y)) continue;
        const auto idx = primitivity_index(*x, *y);
        if (!idx || *idx != 1) continue;
        // For convex x the bound is exact, so skip hopeless orientations.
        const std::size_t eroded = erode(convex_hull(*x), *y).size();
        if (*x == lattice_points(convex_hull(*x)) && x->size() < eroded + 1 + target) continue;
        try {
            return construct_prescribed(*x, *y, target, seed);
        } catch (const HypothesisViolation&) {
        } catch (const RetryBudgetExhausted&) {
        }
    }
    return std::nullopt;
}

std::optional<ConstructedSystem> line_route(const SupportSet& a, const SupportSet& b, std::size_t target,
                                            std::uint64_t seed, std::size_t budget, bool* complex_only) {
    for (const auto& [s, c] : {std::pair{&a, &b}, std::pair{&b, &a}}) {
        for (const auto& tri : unimodular_triangles(*s)) {
            const UnimodularAffineMap phi = standardizing_map(tri);
            if (c->size() > target) {
                try {
                    ConstructedSystem sys = line_contact_construct(apply_map(phi, *c), target, seed);
                    const UnimodularAffineMap back = phi.inverse();
                    sys.f = map_exponents(back, sys.f);
                    sys.g = map_exponents(back, sys.g);
                    const SmoothIntersection check = intersection_multiplicity_smooth(sys.f, sys.g, kOne);
                    if (!check.order || *check.order != target)
                        throw VerificationFailure("mapped line contact failed independent verification");
                    sys.certificates = {check.certificate};
                    return sys;
                } catch (const RetryBudgetExhausted&) {
                } catch (const HypothesisViolation&) {
                }
            }
            LineAnalysis la = analyze_line_pencil(tri, *c, target, budget);
            if (la.witness) return la.witness;
            if (complex_only && la.verdict == OracleVerdict::Inconclusive && la.transcript.contains("steps")) {
                for (const auto& st : la.transcript["steps"])
                    if (st.contains("rational_roots") && st["rational_roots"].empty()) *complex_only = true;
            }
        }
    }
    return std::nullopt;
}

namespace {

OracleResult run_oracle(const SupportSet& a, const SupportSet& b, const OracleOptions& opts, bool constructive) {
    if (a.empty() || b.empty()) throw InvalidInput("supports must be non-empty");
    if (a.size() > 6 || b.size() > 6) throw InvalidInput("elimination oracle is limited to supports of at most six points");
    OracleResult out;
    const Json inputs{{"A", to_json(a)}, {"B", to_json(b)}, {"target", opts.target}, {"budget", opts.budget}};
    if (constructive) {
        if (auto w = prescribed_route(a, b, opts.target, opts.seed)) {
            out.verdict = OracleVerdict::FoundWitness;
            out.witness = std::move(w);
            out.route = "prescribed";
            return out;
        }
    }
    std::string reasons;
    for (const auto& [name, s, c] : {std::tuple{"A", &a, &b}, std::tuple{"B", &b, &a}}) {
        if (s->size() == 1) {
            out.verdict = OracleVerdict::ProvedImpossible;
            out.route = name;
            out.reason = "a monomial has no zeros on the torus";
            out.certificate = MultiplicityCertificate{CertificateKind::EliminationImpossibility, inputs,
                                                      Json{{"line_support", name}, {"monomial", true}}};
            return out;
        }
        const bool line_like = s->size() == 2 || (s->size() == 3 && area2(convex_hull(*s)) == 1);
        if (!line_like) continue;
        LineAnalysis la = analyze_line_pencil(*s, *c, opts.target, opts.budget);
        if (la.verdict == OracleVerdict::FoundWitness) {
            out.verdict = la.verdict;
            out.witness = std::move(la.witness);
            out.route = name;
            out.reason = la.reason;
            return out;
        }
        if (la.verdict == OracleVerdict::ProvedImpossible) {
            out.verdict = la.verdict;
            out.route = name;
            out.reason = la.reason;
            Json t = la.transcript;
            t["line_support"] = name;
            out.certificate = MultiplicityCertificate{CertificateKind::EliminationImpossibility, inputs, t};
            return out;
        }
        reasons += std::string(name) + ": " + la.reason + "; ";
    }
    if (constructive) {
        if (auto w = line_route(a, b, opts.target, opts.seed, opts.budget)) {
            out.verdict = OracleVerdict::FoundWitness;
            out.witness = std::move(w);
            out.route = "line";
            return out;
        }
    }
    out.reason = reasons.empty() ? "neither support is line-like after a monomial change" : reasons;
    return out;
}

}  // namespace

OracleResult elimination_mult3_oracle(const SupportSet& a, const SupportSet& b, const OracleOptions& opts) {
    return run_oracle(a, b, opts, true);
}

MultiplicityCertificate replay_elimination(const Json& inputs) {
    OracleOptions opts;
    opts.target = field(inputs, "target", "inputs").get<std::size_t>();
    opts.budget = field(inputs, "budget", "inputs").get<std::size_t>();
    const OracleResult r = run_oracle(support_from_json(field(inputs, "A", "inputs")),
                                      support_from_json(field(inputs, "B", "inputs")), opts, false);
    if (r.certificate) return *r.certificate;
    return {CertificateKind::EliminationImpossibility, inputs, Json{{"verdict", to_string(r.verdict)}}};
}

Json to_json(const OracleResult& r) {
    Json j{{"verdict", to_string(r.verdict)}, {"route", r.route}, {"reason", r.reason}};
    if (r.witness) j["witness"] = to_json(*r.witness);
    if (r.certificate) j["certificate"] = to_json(*r.certificate);
    return j;
}

}  // namespace sparsemult
