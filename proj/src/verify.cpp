#include "sparsemult/verify.hpp"

#include "sparsemult/errors.hpp"
#include "sparsemult/oracle.hpp"

#include <array>
#include <map>

namespace sparsemult {

namespace {

constexpr std::array<std::pair<CertificateKind, const char*>, 5> kKindNames{{
    {CertificateKind::BranchOrder, "BranchOrder"},
    {CertificateKind::DerivativeTable, "DerivativeTable"},
    {CertificateKind::LineSum, "LineSum"},
    {CertificateKind::RankImpossibility, "RankImpossibility"},
    {CertificateKind::EliminationImpossibility, "EliminationImpossibility"},
}};

}  // namespace

std::string to_string(CertificateKind k) {
    for (const auto& [kind, name] : kKindNames)
        if (kind == k) return name;
    return "unknown";
}

CertificateKind certificate_kind_from_string(const std::string& s) {
    for (const auto& [kind, name] : kKindNames)
        if (s == name) return kind;
    throw InvalidInput("unknown certificate kind '" + s + "'");
}

Json to_json(const MultiplicityCertificate& c) {
    return Json{{"kind", to_string(c.kind)}, {"inputs", c.inputs}, {"transcript", c.transcript}};
}

MultiplicityCertificate certificate_from_json(const Json& j) {
    require_fields(j, {"kind", "inputs", "transcript"}, "certificate");
    const Json& kind = field(j, "kind", "certificate");
    if (!kind.is_string()) throw InvalidInput("certificate: 'kind' must be a string");
    return {certificate_kind_from_string(kind.get<std::string>()), field(j, "inputs", "certificate"),
            field(j, "transcript", "certificate")};
}

// --- univariate -------------------------------------------------------------

UnivariateMultiplicity univariate_multiplicity(const UnivariatePolynomial& p, const Rational& t0) {
    if (p.is_zero()) throw InvalidInput("multiplicity of the zero polynomial");
    UnivariateMultiplicity out;
    UnivariatePolynomial d = p;
    for (;;) {
        const Rational v = d.evaluate(t0);
        out.derivative_table.push_back(v);
        if (!is_zero(v)) break;
        d = d.derivative();
        ++out.multiplicity;
    }
    out.certificate.kind = CertificateKind::DerivativeTable;
    out.certificate.inputs = Json{{"polynomial", to_json(p)}, {"t0", to_json(t0)}};
    out.certificate.transcript = Json{{"multiplicity", out.multiplicity}, {"derivatives", to_json(out.derivative_table)}};
    return out;
}

// --- smooth branch order ----------------------------------------------------

SmoothIntersection intersection_multiplicity_smooth(const LaurentPolynomial& f, const LaurentPolynomial& g,
                                                    const TorusPoint& p, std::size_t initial_order) {
    if (f.is_zero()) throw InvalidInput("the curve polynomial is zero");
    SmoothIntersection out;
    out.order_cap = g.is_zero() ? 0 : mixed_volume(convex_hull(f.support()), convex_hull(g.support()));
    std::size_t n = std::max<std::size_t>(initial_order, 1);
    for (;;) {
        const BranchParametrization b = branch_series(f, p, n);
        const TruncatedSeries s = g.along(b.x_series(), b.y_series());
        out.truncation_used = n;
        if (const auto ord = s.order()) {
            out.order = *ord;
            out.leading_coefficient = s[*ord];
            break;
        }
        if (static_cast<std::int64_t>(n) > out.order_cap) break;
        n = std::max<std::size_t>(2 * n, static_cast<std::size_t>(out.order_cap) + 1);
    }
    if (!out.order) out.multiple_of_f = exact_quotient(g, f).has_value();

    out.certificate.kind = CertificateKind::BranchOrder;
    out.certificate.inputs =
        Json{{"f", to_json(f)}, {"g", to_json(g)}, {"point", to_json(p)}, {"initial_order", initial_order}};
    out.certificate.transcript = Json{{"order", out.order ? Json(*out.order) : Json(nullptr)},
                                      {"leading_coefficient", to_json(out.leading_coefficient)},
                                      {"truncation", out.truncation_used},
                                      {"order_cap", out.order_cap},
                                      {"multiple_of_f", out.multiple_of_f}};
    return out;
}

// --- line products ----------------------------------------------------------

LineSumMultiplicity origin_multiplicity_line_product(const std::vector<LaurentPolynomial>& lines,
                                                     const LaurentPolynomial& v) {
    if (lines.empty()) throw InvalidInput("no linear factors given");
    std::map<std::int64_t, LaurentPolynomial> by_degree;
    for (const auto& [e, c] : v.terms()) {
        if (e.x < 0 || e.y < 0) throw InvalidInput("origin multiplicity needs a polynomial (no negative exponents)");
        by_degree[e.x + e.y].add_term(e, c);
    }
    std::vector<std::pair<Rational, Rational>> forms;
    for (const auto& h : lines) {
        for (const auto& [e, c] : h.terms())
            if (!(e == LatticePoint{1, 0} || e == LatticePoint{0, 1}))
                throw InvalidInput("factor " + h.to_string() + " is not a linear form");
        if (h.is_zero()) throw InvalidInput("zero linear form");
        const Rational a = h.coefficient({1, 0}), b = h.coefficient({0, 1});
        for (const auto& [a2, b2] : forms)
            if (is_zero(a * b2 - a2 * b)) throw InvalidInput("linear forms are not pairwise independent");
        forms.emplace_back(a, b);
    }
    LineSumMultiplicity out;
    for (const auto& [a, b] : forms) {
        // h = a x + b y vanishes on (x, y) = (b t, -a t).
        std::optional<std::size_t> ord;
        for (const auto& [d, part] : by_degree)
            if (!is_zero(part.evaluate(b, -a))) {
                ord = static_cast<std::size_t>(d);
                break;
            }
        if (!ord) throw VerificationFailure("a linear factor divides the second polynomial (non-isolated root)");
        out.per_line.push_back(*ord);
        out.multiplicity += *ord;
    }
    Json ls = Json::array();
    for (const auto& h : lines) ls.push_back(to_json(h));
    out.certificate.kind = CertificateKind::LineSum;
    out.certificate.inputs = Json{{"lines", ls}, {"v", to_json(v)}};
    out.certificate.transcript = Json{{"multiplicity", out.multiplicity}, {"per_line", out.per_line}};
    return out;
}

// --- rank impossibility -----------------------------------------------------

RankImpossibility rank_impossibility(const std::vector<std::int64_t>& exponents) {
    if (exponents.empty()) throw InvalidInput("empty exponent list");
    for (std::size_t i = 0; i < exponents.size(); ++i)
        for (std::size_t j = i + 1; j < exponents.size(); ++j)
            if (exponents[i] == exponents[j]) throw InvalidInput("exponents must be distinct");
    const std::size_t k = exponents.size();
    RationalMatrix m(k, k);
    for (std::size_t j = 0; j < k; ++j) {
        Rational v = 1;
        for (std::size_t i = 0; i < k; ++i) {
            m(i, j) = v;
            v *= Rational(static_cast<long>(exponents[j]));
        }
    }
    RankImpossibility out;
    out.determinant = determinant(m);
    if (is_zero(out.determinant)) throw VerificationFailure("power-basis matrix is singular for distinct exponents");
    out.certificate.kind = CertificateKind::RankImpossibility;
    out.certificate.inputs = Json{{"exponents", exponents}};
    out.certificate.transcript = Json{{"size", k}, {"determinant", to_json(out.determinant)}};
    return out;
}

// --- replay -----------------------------------------------------------------

bool replay(const MultiplicityCertificate& c) {
    const Json& in = c.inputs;
    MultiplicityCertificate again;
    switch (c.kind) {
        case CertificateKind::DerivativeTable:
            again = univariate_multiplicity(univariate_from_json(field(in, "polynomial", "inputs")),
                                            rational_from_json(field(in, "t0", "inputs")))
                        .certificate;
            break;
        case CertificateKind::BranchOrder:
            again = intersection_multiplicity_smooth(laurent_from_json(field(in, "f", "inputs")),
                                                     laurent_from_json(field(in, "g", "inputs")),
                                                     torus_point_from_json(field(in, "point", "inputs")),
                                                     field(in, "initial_order", "inputs").get<std::size_t>())
                        .certificate;
            break;
        case CertificateKind::LineSum: {
            std::vector<LaurentPolynomial> lines;
            for (const auto& h : field(in, "lines", "inputs")) lines.push_back(laurent_from_json(h));
            again = origin_multiplicity_line_product(lines, laurent_from_json(field(in, "v", "inputs"))).certificate;
            break;
        }
        case CertificateKind::RankImpossibility:
            again = rank_impossibility(field(in, "exponents", "inputs").get<std::vector<std::int64_t>>()).certificate;
            break;
        case CertificateKind::EliminationImpossibility:
            again = replay_elimination(in);
            break;
    }
    return again.kind == c.kind && again.transcript == c.transcript;
}

}  // namespace sparsemult
