#include "sparsemult/examples.hpp"

#include "sparsemult/errors.hpp"
#include "sparsemult/verify.hpp"

namespace sparsemult {

namespace {

using LP = LaurentPolynomial;

LP mono(std::int64_t i, std::int64_t j, const Rational& c = 1) { return LP::monomial({i, j}, c); }

Rational q(long v) { return Rational(v); }

}  // namespace

// --- lines through the origin ----------------------------------------------

LineProductSystem build_example_ex3(std::size_t n, std::size_t k, std::size_t l, std::uint64_t seed,
                                    std::optional<std::vector<std::size_t>> exponents) {
    if (n < 2 || k + 1 > n || l > k) throw InvalidInput("need l <= k <= n - 1");
    LineProductSystem s;
    s.n = n;
    s.k = k;
    s.l = l;
    s.seed = seed;
    if (exponents) {
        std::size_t sum = 0;
        for (auto e : *exponents) {
            if (e == 0) throw InvalidInput("exponents a_i must be positive");
            sum += e;
        }
        if (exponents->size() != l || (l > 0 && sum != k)) throw InvalidInput("need l exponents summing to k");
        s.exponents = *exponents;
    } else if (l > 0) {
        s.exponents.assign(l, 1);
        s.exponents[0] = k - l + 1;
    }

    s.u = LP::constant(1);
    for (std::size_t i = 1; i <= n; ++i) {
        s.lines.push_back(mono(1, 0) - mono(0, 1, q(static_cast<long>(i))));
        s.u = s.u * s.lines.back();
    }
    LP lead = LP::constant(1);
    if (l == 0) lead = mono(0, static_cast<std::int64_t>(k));
    for (std::size_t i = 0; i < l; ++i) lead = lead * pow(s.lines[i], static_cast<unsigned>(s.exponents[i]));

    Rng rng(seed);
    const auto d = static_cast<std::int64_t>(k + 1);
    for (;;) {
        LP h;
        for (std::int64_t j = 0; j <= d; ++j) h.add_term({j, d - j}, q(draw_int(rng, -10, 10)));
        bool ok = true;
        for (std::size_t i = 1; i <= n && ok; ++i) ok = !is_zero(h.evaluate(q(static_cast<long>(i)), 1));
        if (ok) {
            s.h = h;
            break;
        }
    }
    s.v = lead + s.h;
    s.expected = n * k + l;
    return s;
}

Json to_json(const LineProductSystem& s) {
    Json lines = Json::array();
    for (const auto& h : s.lines) lines.push_back(to_json(h));
    return Json{{"n", s.n},   {"k", s.k},         {"l", s.l},        {"exponents", s.exponents},
                {"lines", lines}, {"u", to_json(s.u)}, {"v", to_json(s.v)}, {"H", to_json(s.h)},
                {"expected_multiplicity", s.expected}, {"seed", s.seed}};
}

// --- the gap example --------------------------------------------------------

std::pair<SupportSet, SupportSet> gap_example_supports(std::size_t n) {
    std::vector<LatticePoint> a{{0, 0}, {1, 0}};
    for (std::int64_t j = 1; j <= static_cast<std::int64_t>(n); ++j) a.push_back({0, j});
    return {SupportSet(a), SupportSet{{0, 0}, {1, 0}, {2, 0}, {0, 1}}};
}

std::vector<Integer> phi_sequence(std::size_t count) {
    std::vector<Integer> phi(count + 1, 0);
    if (count >= 1) phi[1] = 1;
    for (std::size_t k = 2; k <= count; ++k)
        for (std::size_t i = 1; i < k; ++i) phi[k] += phi[i] * phi[k - i];
    return {phi.begin() + 1, phi.end()};
}

namespace {

// Coefficients a_1..a_{count} of p (a_0 = 0, q(y) = y^2 + u y) that kill
// x^1..x^{count} in q(p(x)) - x, and the sums S_k = sum_{i=1}^{k-1} a_i a_{k-i}.
std::vector<Rational> gap_recursion(const Rational& u, std::size_t count) {
    std::vector<Rational> a(count + 1, 0);
    for (std::size_t k = 1; k <= count; ++k) {
        Rational s = 0;
        for (std::size_t i = 1; i < k; ++i) s += a[i] * a[k - i];
        a[k] = (Rational(k == 1 ? 1 : 0) - s) / u;
    }
    return a;
}

Rational convolution(const std::vector<Rational>& a, std::size_t k) {
    Rational s = 0;
    for (std::size_t i = 1; i < k; ++i)
        if (i < a.size() && k - i < a.size()) s += a[i] * a[k - i];
    return s;
}

// (x - 1) - p(y - 1) and (y - 1) - q(x - 1): the graph form y = p(x), x = q(y) with the
// root moved from the origin to (1, 1) and the variables exchanged.
ConstructedSystem gap_system(const std::vector<Rational>& p, const std::vector<Rational>& qc) {
    const LP s = mono(0, 1) - LP::constant(1), r = mono(1, 0) - LP::constant(1);
    LP f = r, g = s;
    for (std::size_t j = 0; j < p.size(); ++j)
        if (!is_zero(p[j])) f -= pow(s, static_cast<unsigned>(j)) * p[j];
    for (std::size_t j = 0; j < qc.size(); ++j)
        if (!is_zero(qc[j])) g -= pow(r, static_cast<unsigned>(j)) * qc[j];
    ConstructedSystem sys;
    sys.f = f;
    sys.g = g;
    sys.points = {TorusPoint{1, 1}};
    return sys;
}

}  // namespace

std::variant<ConstructedSystem, GapImpossibility> build_example_ex10(std::size_t n, std::size_t m) {
    if (n < 3 || n % 2 == 0) throw InvalidInput("n must be odd and at least 3");
    if (m == 0 || m > 2 * n) throw InvalidInput("target multiplicity must lie in 1..2n");

    ConstructedSystem sys;
    if (m <= n + 1) {
        // u = a + 2 a_0 = 1 with a_0 = 0, b = 0; a_m.. a_n stay zero.
        auto a = gap_recursion(Rational(1), m - 1);
        a.resize(std::max<std::size_t>(a.size(), 1));
        sys = gap_system(a, {0, 1, 1});
    } else if (m % 2 == 0) {
        // c_2 = 0: the doubled line (x - 1)^2 meets x - 1 = (y - 1)^{m/2}.
        std::vector<Rational> p(m / 2 + 1, 0);
        p[m / 2] = 1;
        sys = gap_system(p, {});
        sys.g = pow(mono(1, 0) - LP::constant(1), 2);
    } else {
        GapImpossibility g;
        g.n = n;
        g.m = m;
        g.phi = phi_sequence(n + 1);
        g.phi_positive = std::all_of(g.phi.begin(), g.phi.end(), [](const Integer& v) { return v > 0; });
        g.obstruction_numerator = (n % 2 == 1 ? 1 : -1) * g.phi[n];
        g.obstruction_nonzero = g.phi_positive;
        for (const Rational& u : {Rational(1), Rational(2), Rational(-3), Rational(1, 2)}) {
            const auto a = gap_recursion(u, n);
            Rational upow = 1;
            for (std::size_t k = 1; k <= n; ++k) {
                if (a[k] * pow(u, static_cast<long>(2 * k - 1)) != Rational((k % 2 == 1 ? 1 : -1) * g.phi[k - 1]))
                    throw VerificationFailure("coefficient recursion does not match the phi closed form");
            }
            const Rational c = convolution(a, n + 1);
            upow = pow(u, static_cast<long>(2 * n));
            if (c * upow != Rational(g.obstruction_numerator))
                throw VerificationFailure("obstruction coefficient does not match the phi closed form");
            g.sampled_obstruction.emplace_back(u, c);
            if (is_zero(c)) g.obstruction_nonzero = false;
        }
        g.normalization =
            "root moved to the origin, leading coefficient of q set to 1, c_n and c_2 non-zero; "
            "for c_n = 0 or c_2 = 0 only even multiplicities occur";
        return g;
    }
    const SmoothIntersection chk = intersection_multiplicity_smooth(sys.f, sys.g, sys.points[0]);
    if (!chk.order || *chk.order != m) throw VerificationFailure("gap example construction failed verification");
    sys.multiplicities = {m};
    sys.certificates = {chk.certificate};
    const auto [sa, sb] = gap_example_supports(n);
    for (const auto& e : sys.f.support())
        if (!sa.contains(e)) throw VerificationFailure("gap example f leaves its support");
    for (const auto& e : sys.g.support())
        if (!sb.contains(e)) throw VerificationFailure("gap example g leaves its support");
    return sys;
}

Json to_json(const GapImpossibility& g) {
    Json phi = Json::array(), samples = Json::array();
    for (const auto& v : g.phi) phi.push_back(v.get_str());
    for (const auto& [u, c] : g.sampled_obstruction) samples.push_back({{"u", to_json(u)}, {"coefficient", to_json(c)}});
    return Json{{"n", g.n},
                {"m", g.m},
                {"verdict", "impossible"},
                {"phi", phi},
                {"phi_positive", g.phi_positive},
                {"obstruction", "(" + g.obstruction_numerator.get_str() + ") / u^" + std::to_string(2 * g.n)},
                {"obstruction_samples", samples},
                {"obstruction_nonzero", g.obstruction_nonzero},
                {"normalization", g.normalization}};
}

// --- the inflection example -------------------------------------------------

namespace {

const std::vector<std::string> kVars{"x", "y", "a", "b"};
enum { X, Y, A, B };

MPoly var(std::size_t i) { return MPoly::variable(kVars, i); }
MPoly cst(long c) { return MPoly::constant(kVars, Rational(c)); }

Rational leading(const MPoly& p) { return p.terms().rbegin()->second; }

// R^(j)(1) for j < count, each affine in (a, b); solve them jointly.
std::optional<std::pair<Rational, Rational>> solve_conditions(const MPoly& r, std::size_t count) {
    RationalMatrix m(count, 2);
    RationalVector rhs(count);
    MPoly d = r;
    for (std::size_t j = 0; j < count; ++j) {
        const MPoly c = d.substitute(X, 1);
        for (const auto& [e, v] : c.terms()) {
            const unsigned deg = e[A] + e[B];
            if (deg > 1 || e[X] != 0 || e[Y] != 0) throw VerificationFailure("condition is not affine in (a, b)");
            if (e[A] == 1) m(j, 0) = v;
            else if (e[B] == 1) m(j, 1) = v;
            else rhs[j] = -v;
        }
        d = d.derivative(X);
    }
    const auto sol = solve_linear(m, rhs);
    if (!sol) return std::nullopt;
    if (rank(m) < 2) throw VerificationFailure("conditions do not determine (a, b)");
    return std::pair{(*sol)[0], (*sol)[1]};
}

}  // namespace

InflectionExampleReport reproduce_exim(std::uint64_t seed) {
    InflectionExampleReport rep;
    const SupportSet simplex{{0, 0}, {1, 0}, {0, 1}};
    const SupportSet bset{{0, 1}, {3, 0}, {4, 0}};
    rep.mixed_volume = mixed_volume(convex_hull(simplex), convex_hull(bset));

    const MPoly x = var(X), y = var(Y), a = var(A), b = var(B);
    const MPoly f = y - cst(1) - a * (x - cst(1));
    const MPoly g = y - b * pow(x, 3) - (cst(1) - b) * pow(x, 4);
    rep.resultant = resultant(f, g, Y);
    rep.expected_resultant = (x - cst(1)) * (cst(-1) + a - x - pow(x, 2) - pow(x, 3) + b * pow(x, 3));
    if (!rep.resultant.is_zero()) {
        const Rational c = leading(rep.resultant) / leading(rep.expected_resultant);
        if (rep.resultant == rep.expected_resultant * c) rep.resultant_ratio = c;
    }

    rep.order3_solution = solve_conditions(rep.resultant, 3);
    rep.order4_solution = solve_conditions(rep.resultant, 4);
    if (rep.order3_solution) {
        const auto& [av, bv] = *rep.order3_solution;
        const LP lf = mono(0, 1) - LP::constant(1) - (mono(1, 0) - LP::constant(1)) * av;
        const LP lg = mono(0, 1) - mono(3, 0, bv) - mono(4, 0, Rational(1) - bv);
        const auto chk = intersection_multiplicity_smooth(lf, lg, TorusPoint{1, 1});
        if (chk.order) rep.witness_multiplicity = *chk.order;
    }

    OracleOptions o3;
    o3.seed = seed;
    rep.oracle3 = elimination_mult3_oracle(simplex, bset, o3);
    OracleOptions o4 = o3;
    o4.target = 4;
    rep.oracle4 = elimination_mult3_oracle(simplex, bset, o4);
    return rep;
}

Json to_json(const InflectionExampleReport& r) {
    auto sol = [](const std::optional<std::pair<Rational, Rational>>& s) {
        return s ? Json{{"a", to_json(s->first)}, {"b", to_json(s->second)}} : Json(nullptr);
    };
    return Json{{"mixed_volume", r.mixed_volume.get_str()},
                {"resultant", r.resultant.to_string()},
                {"expected_resultant", r.expected_resultant.to_string()},
                {"resultant_ratio", r.resultant_ratio ? to_json(*r.resultant_ratio) : Json(nullptr)},
                {"order3_conditions_solution", sol(r.order3_solution)},
                {"order4_conditions_solution", sol(r.order4_solution)},
                {"witness_multiplicity", r.witness_multiplicity ? Json(*r.witness_multiplicity) : Json(nullptr)},
                {"oracle_target3", to_json(r.oracle3)},
                {"oracle_target4", to_json(r.oracle4)}};
}

}  // namespace sparsemult
