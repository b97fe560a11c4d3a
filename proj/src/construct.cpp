#include "sparsemult/construct.hpp"

#include "sparsemult/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace sparsemult {

// --- serialization ----------------------------------------------------------

Json to_json(const ConstructedSystem& s) {
    Json j{{"f", to_json(s.f)}, {"g", to_json(s.g)}};
    if (s.points.size() == 1) {
        j["point"] = to_json(s.points[0]);
        j["multiplicity"] = s.multiplicities[0];
    } else {
        Json pts = Json::array();
        for (const auto& p : s.points) pts.push_back(to_json(p));
        j["points"] = pts;
        j["multiplicities"] = s.multiplicities;
    }
    j["exact"] = s.exact;
    j["seed"] = s.seed;
    j["retries_used"] = s.retries_used;
    if (s.certificates.size() == 1) {
        j["certificate"] = to_json(s.certificates[0]);
    } else {
        Json cs = Json::array();
        for (const auto& c : s.certificates) cs.push_back(to_json(c));
        j["certificates"] = cs;
    }
    return j;
}

ConstructedSystem constructed_system_from_json(const Json& j) {
    const std::string what = "constructed system";
    require_fields(j, {"f", "g", "point", "points", "multiplicity", "multiplicities", "exact", "seed", "retries_used",
                       "certificate", "certificates"},
                   what);
    ConstructedSystem s;
    s.f = laurent_from_json(field(j, "f", what));
    s.g = laurent_from_json(field(j, "g", what));
    try {
        if (j.contains("point")) {
            s.points.push_back(torus_point_from_json(j["point"]));
            s.multiplicities.push_back(field(j, "multiplicity", what).get<std::size_t>());
        } else {
            for (const auto& p : field(j, "points", what)) s.points.push_back(torus_point_from_json(p));
            s.multiplicities = field(j, "multiplicities", what).get<std::vector<std::size_t>>();
        }
        if (s.points.empty() || s.points.size() != s.multiplicities.size())
            throw InvalidInput(what + ": points and multiplicities do not match");
        if (j.contains("exact")) s.exact = j["exact"].get<bool>();
        if (j.contains("seed")) s.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("retries_used")) s.retries_used = j["retries_used"].get<std::size_t>();
        if (j.contains("certificate")) s.certificates.push_back(certificate_from_json(j["certificate"]));
        if (j.contains("certificates"))
            for (const auto& c : j["certificates"]) s.certificates.push_back(certificate_from_json(c));
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(what + ": " + e.what());
    }
    return s;
}

// --- dim V ------------------------------------------------------------------

DimV compute_dim_V(const SupportSet& a, const LaurentPolynomial& f) {
    if (f.is_zero()) throw InvalidInput("compute_dim_V needs a non-zero polynomial");
    const SupportSet c = erode(convex_hull(a), f.support());
    DimV out;
    out.bound = c.size();
    if (c.empty()) return out;
    // One row per product exponent outside A: its coefficient must vanish.
    std::map<LatticePoint, std::size_t> rows;
    for (const auto& ci : c)
        for (const auto& [b, coeff] : f.terms())
            if (!a.contains(ci + b)) rows.try_emplace(ci + b, rows.size());
    RationalMatrix m(rows.size(), c.size());
    std::size_t j = 0;
    for (const auto& ci : c) {
        for (const auto& [b, coeff] : f.terms())
            if (const auto it = rows.find(ci + b); it != rows.end()) m(it->second, j) = coeff;
        ++j;
    }
    out.dim = c.size() - rank(m);
    if (out.dim > out.bound) throw VerificationFailure("dim V exceeds the erosion bound");
    if (a == lattice_points(convex_hull(a)) && out.dim != out.bound)
        throw VerificationFailure("dim V differs from the erosion bound for a convex support");
    return out;
}

// --- helpers ----------------------------------------------------------------

namespace {

const TorusPoint kOne{1, 1};

void require_construction_hypotheses(const SupportSet& a, const SupportSet& b) {
    if (a.empty() || b.empty()) throw InvalidInput("supports must be non-empty");
    if (is_segment(a) || is_segment(b)) throw HypothesisViolation("a support lies on a segment");
    const auto idx = primitivity_index(a, b);
    if (!idx || *idx != 1)
        throw HypothesisViolation("supports can be shifted into a common proper sublattice (index " +
                                  (idx ? std::to_string(*idx) : std::string("infinite")) + ")");
}

/// Random f on B with f(1,1) = 0: all coefficients non-zero in [-10, 10]
/// except the last, which cancels the others. nullopt when it would vanish.
std::optional<LaurentPolynomial> draw_through_one(const SupportSet& b, Rng& rng) {
    std::vector<Rational> c(b.size());
    Rational sum = 0;
    for (std::size_t i = 0; i + 1 < b.size(); ++i) {
        c[i] = draw_nonzero_coefficient(rng);
        sum += c[i];
    }
    if (is_zero(sum)) return std::nullopt;
    c.back() = -sum;
    return LaurentPolynomial::from_coefficients(b, c);
}

bool smooth_at(const LaurentPolynomial& f, const TorusPoint& p) {
    return !is_zero(f.derivative(Variable::X).evaluate(p.x, p.y)) || !is_zero(f.derivative(Variable::Y).evaluate(p.x, p.y));
}

void normalize_leading(RationalVector& v) {
    const auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return !is_zero(x); });
    if (it == v.end()) return;
    const Rational inv = 1 / *it;
    for (auto& x : v) x *= inv;
}

/// First kernel vector of the first `m` rows with non-zero residual against row m.
std::optional<RationalVector> osculating_vector(const RationalMatrix& rows, std::size_t m) {
    const RationalVector last = rows.row(m);
    for (auto& v : kernel_basis(rows.top_rows(m))) {
        if (is_zero(dot(v, last))) continue;
        normalize_leading(v);
        return v;
    }
    return std::nullopt;
}

}  // namespace

// --- single point -----------------------------------------------------------

ConstructedSystem construct_prescribed(const SupportSet& a, const SupportSet& b, std::size_t m, std::uint64_t seed,
                                       const ConstructOptions& opts) {
    require_construction_hypotheses(a, b);
    Rng rng(seed);
    bool reached_bound_check = false, some_draw_admits_m = false;
    std::ostringstream diag;
    for (std::size_t attempt = 0; attempt < opts.retry_budget; ++attempt) {
        const auto f = draw_through_one(b, rng);
        if (!f) {
            diag << "attempt " << attempt << ": coefficients sum to zero; ";
            continue;
        }
        if (!smooth_at(*f, kOne)) {
            diag << "attempt " << attempt << ": singular at (1,1); ";
            continue;
        }
        const DimV dv = compute_dim_V(a, *f);
        const long d = static_cast<long>(a.size()) - static_cast<long>(dv.dim) - 1;
        reached_bound_check = true;
        if (static_cast<long>(m) > d) {
            diag << "attempt " << attempt << ": m exceeds D = " << d << "; ";
            continue;
        }
        some_draw_admits_m = true;
        const std::size_t n = std::max(opts.truncation.value_or(m + a.size() + 4), m);
        const BranchParametrization br = branch_series(*f, kOne, n);
        const OsculatingData osc = osculating_matrix(a, br, m);
        bool chain = true;
        for (std::size_t i = 0; i <= m; ++i) chain = chain && osc.row_ranks[i] == i + 1;
        if (!chain) {
            diag << "attempt " << attempt << ": osculating ranks stall before row " << m << "; ";
            continue;
        }
        const auto v = osculating_vector(osc.matrix, m);
        if (!v) {
            diag << "attempt " << attempt << ": no kernel vector with non-zero residual; ";
            continue;
        }
        ConstructedSystem sys;
        sys.f = *f;
        sys.g = LaurentPolynomial::from_coefficients(a, *v);
        sys.points = {kOne};
        sys.multiplicities = {m};
        sys.seed = seed;
        sys.retries_used = attempt;
        const SmoothIntersection check = intersection_multiplicity_smooth(sys.f, sys.g, kOne);
        if (!check.order || *check.order != m)
            throw VerificationFailure("independent verification disagrees with the constructed order");
        sys.certificates = {check.certificate};
        return sys;
    }
    if (reached_bound_check && !some_draw_admits_m)
        throw HypothesisViolation("m = " + std::to_string(m) + " exceeds D for every draw: " + diag.str());
    throw RetryBudgetExhausted("no verified construction after " + std::to_string(opts.retry_budget) +
                               " attempts: " + diag.str());
}

// --- several points ---------------------------------------------------------

ConstructedSystem construct_multipoint(const SupportSet& a, const SupportSet& b, const std::vector<std::size_t>& ms,
                                       std::uint64_t seed, const ConstructOptions& opts) {
    require_construction_hypotheses(a, b);
    if (ms.empty()) throw InvalidInput("no multiplicities given");
    if (ms.size() >= b.size()) throw HypothesisViolation("need fewer points than |B| to force f through them");
    const std::size_t total = std::accumulate(ms.begin(), ms.end(), std::size_t{0});
    std::vector<TorusPoint> pts;
    for (std::size_t i = 0; i < ms.size(); ++i) pts.push_back({Rational(static_cast<long>(i + 1)), 1});

    RationalMatrix eval(pts.size(), b.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::size_t j = 0;
        for (const auto& e : b) eval(i, j++) = LaurentPolynomial::monomial(e).evaluate(pts[i].x, pts[i].y);
    }
    const auto through = kernel_basis(eval);

    Rng rng(seed);
    bool reached_bound_check = false, some_draw_admits = false;
    std::ostringstream diag;
    for (std::size_t attempt = 0; attempt < opts.retry_budget; ++attempt) {
        RationalVector c(b.size());
        for (const auto& k : through) {
            const Rational w = draw_nonzero_coefficient(rng);
            for (std::size_t j = 0; j < c.size(); ++j) c[j] += w * k[j];
        }
        if (std::any_of(c.begin(), c.end(), [](const Rational& x) { return is_zero(x); })) {
            diag << "attempt " << attempt << ": a coefficient vanished; ";
            continue;
        }
        const LaurentPolynomial f = LaurentPolynomial::from_coefficients(b, c);
        if (!std::all_of(pts.begin(), pts.end(), [&](const TorusPoint& p) { return smooth_at(f, p); })) {
            diag << "attempt " << attempt << ": singular at a prescribed point; ";
            continue;
        }
        const DimV dv = compute_dim_V(a, f);
        const long d = static_cast<long>(a.size()) - static_cast<long>(dv.dim) - 1;
        reached_bound_check = true;
        if (static_cast<long>(total) > d) {
            diag << "attempt " << attempt << ": sum of multiplicities exceeds D = " << d << "; ";
            continue;
        }
        some_draw_admits = true;
        std::vector<RationalVector> stacked;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const std::size_t n = std::max(opts.truncation.value_or(ms[i] + a.size() + 4), ms[i]);
            const RationalMatrix block = monomial_expansion_rows(a, branch_series(f, pts[i], n), ms[i]);
            for (std::size_t r = 0; r < block.rows(); ++r) stacked.push_back(block.row(r));
        }
        const RationalMatrix sm = stacked.empty() ? RationalMatrix(0, a.size()) : RationalMatrix::from_rows(stacked);
        std::optional<LaurentPolynomial> g;
        for (auto& v : kernel_basis(sm)) {
            normalize_leading(v);
            LaurentPolynomial cand = LaurentPolynomial::from_coefficients(a, v);
            if (!exact_quotient(cand, f)) {
                g = std::move(cand);
                break;
            }
        }
        if (!g) {
            diag << "attempt " << attempt << ": every solution is a multiple of f; ";
            continue;
        }
        ConstructedSystem sys;
        sys.f = f;
        sys.g = *g;
        sys.points = pts;
        sys.multiplicities = ms;
        sys.exact = false;
        sys.seed = seed;
        sys.retries_used = attempt;
        bool ok = true;
        for (std::size_t i = 0; i < pts.size() && ok; ++i) {
            const SmoothIntersection check = intersection_multiplicity_smooth(f, *g, pts[i]);
            ok = check.order && *check.order >= ms[i];
            sys.certificates.push_back(check.certificate);
        }
        if (!ok) {
            diag << "attempt " << attempt << ": g meets a component of f non-isolatedly; ";
            continue;
        }
        return sys;
    }
    if (reached_bound_check && !some_draw_admits)
        throw HypothesisViolation("sum of multiplicities exceeds D for every draw: " + diag.str());
    throw RetryBudgetExhausted("no verified multi-point construction after " + std::to_string(opts.retry_budget) +
                               " attempts: " + diag.str());
}

// --- line contact -----------------------------------------------------------

ConstructedSystem line_contact_construct(const SupportSet& a, std::size_t r, std::uint64_t seed,
                                         const ConstructOptions& opts) {
    if (a.empty()) throw InvalidInput("support must be non-empty");
    if (r < 2) throw InvalidInput("line contact order must be at least 2");
    if (a.size() <= r) throw HypothesisViolation("need |A| > r for a contact of order r");
    Rng rng(seed);
    std::ostringstream diag;
    for (std::size_t attempt = 0; attempt < opts.retry_budget; ++attempt) {
        const long q = draw_int(rng, 1, 5), p = draw_int(rng, -10, 10);
        const Rational s = make_rational(p, q);
        if (is_zero(s) || s == 1) {
            diag << "attempt " << attempt << ": slope " << to_string(s) << " leaves the torus pencil; ";
            continue;
        }
        // y - 1 - s (x - 1)
        LaurentPolynomial line;
        line.add_term({0, 1}, 1);
        line.add_term({1, 0}, -s);
        line.add_term({0, 0}, s - 1);
        const std::size_t n = std::max(opts.truncation.value_or(r + a.size() + 4), r);
        const RationalMatrix rows = monomial_expansion_rows(a, branch_series(line, kOne, n), r + 1);
        const auto v = osculating_vector(rows, r);
        if (!v) {
            diag << "attempt " << attempt << ": slope " << to_string(s) << " admits no contact of order " << r << "; ";
            continue;
        }
        ConstructedSystem sys;
        sys.f = line;
        sys.g = LaurentPolynomial::from_coefficients(a, *v);
        sys.points = {kOne};
        sys.multiplicities = {r};
        sys.seed = seed;
        sys.retries_used = attempt;
        const SmoothIntersection check = intersection_multiplicity_smooth(sys.f, sys.g, kOne);
        if (!check.order || *check.order != r)
            throw VerificationFailure("independent verification disagrees with the line contact order");
        sys.certificates = {check.certificate};
        return sys;
    }
    throw RetryBudgetExhausted("no line with contact order " + std::to_string(r) + " after " +
                               std::to_string(opts.retry_budget) + " slopes: " + diag.str());
}

// --- univariate -------------------------------------------------------------

UnivariateConstruction construct_univariate(const std::vector<std::int64_t>& exponents, std::size_t l) {
    if (exponents.empty()) throw InvalidInput("empty exponent list");
    UnivariateConstruction out;
    if (l >= exponents.size()) {
        out.impossibility = rank_impossibility(exponents);
        return out;
    }
    for (std::size_t i = 0; i < exponents.size(); ++i)
        for (std::size_t j = i + 1; j < exponents.size(); ++j)
            if (exponents[i] == exponents[j]) throw InvalidInput("exponents must be distinct");
    const std::size_t k = exponents.size();
    // Row i is (t d/dt)^i applied to each monomial at t = 1.
    RationalMatrix rows(l + 1, k);
    for (std::size_t j = 0; j < k; ++j) {
        Rational v = 1;
        for (std::size_t i = 0; i <= l; ++i) {
            rows(i, j) = v;
            v *= Rational(static_cast<long>(exponents[j]));
        }
    }
    const RationalVector last = rows.row(l);
    std::optional<RationalVector> coeffs;
    for (auto& v : kernel_basis(rows.top_rows(l)))
        if (!is_zero(dot(v, last))) {
            coeffs = std::move(v);
            break;
        }
    if (!coeffs) throw VerificationFailure("power-basis rows are dependent for distinct exponents");
    out.shift = std::min<std::int64_t>(0, *std::min_element(exponents.begin(), exponents.end()));
    const std::int64_t top = *std::max_element(exponents.begin(), exponents.end()) - out.shift;
    std::vector<Rational> dense(static_cast<std::size_t>(top) + 1);
    for (std::size_t j = 0; j < k; ++j) dense[static_cast<std::size_t>(exponents[j] - out.shift)] = (*coeffs)[j];
    out.polynomial = UnivariatePolynomial(std::move(dense));
    out.verification = univariate_multiplicity(*out.polynomial, 1);
    if (out.verification->multiplicity != l) throw VerificationFailure("univariate construction has the wrong multiplicity");
    return out;
}

Json to_json(const UnivariateConstruction& u) {
    if (u.impossibility) {
        return Json{{"achievable", false},
                    {"determinant", to_json(u.impossibility->determinant)},
                    {"certificate", to_json(u.impossibility->certificate)}};
    }
    return Json{{"achievable", true},
                {"polynomial", to_json(*u.polynomial)},
                {"shift", u.shift},
                {"multiplicity", u.verification->multiplicity},
                {"certificate", to_json(u.verification->certificate)}};
}

}  // namespace sparsemult
