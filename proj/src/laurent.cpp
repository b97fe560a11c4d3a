#include "sparsemult/laurent.hpp"

#include "sparsemult/errors.hpp"
#include "sparsemult/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace sparsemult {

LaurentPolynomial::LaurentPolynomial(Terms terms) {
    for (auto& [e, c] : terms) add_term(e, c);
}

LaurentPolynomial LaurentPolynomial::monomial(LatticePoint e, const Rational& c) {
    LaurentPolynomial p;
    p.add_term(e, c);
    return p;
}

LaurentPolynomial LaurentPolynomial::from_coefficients(const SupportSet& support, const std::vector<Rational>& coeffs) {
    if (coeffs.size() != support.size()) throw InvalidInput("coefficient count does not match support size");
    LaurentPolynomial p;
    std::size_t i = 0;
    for (const auto& e : support) p.add_term(e, coeffs[i++]);
    return p;
}

SupportSet LaurentPolynomial::support() const {
    std::vector<LatticePoint> pts;
    for (const auto& [e, c] : terms_) pts.push_back(e);
    return SupportSet(std::move(pts));
}

Rational LaurentPolynomial::coefficient(LatticePoint e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPolynomial::add_term(LatticePoint e, const Rational& c) {
    if (sparsemult::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sparsemult::is_zero(it->second)) terms_.erase(it);
    }
}

namespace {

Rational int_pow(const Rational& base, std::int64_t e) {
    if (e >= 0) return pow(base, static_cast<unsigned>(e));
    if (is_zero(base)) throw InvalidInput("negative power of zero in Laurent evaluation");
    return pow(Rational(1 / base), static_cast<unsigned>(-e));
}

}  // namespace

Rational LaurentPolynomial::evaluate(const Rational& x, const Rational& y) const {
    Rational acc = 0;
    for (const auto& [e, c] : terms_) acc += c * int_pow(x, e.x) * int_pow(y, e.y);
    return acc;
}

LaurentPolynomial LaurentPolynomial::derivative(Variable v) const {
    LaurentPolynomial d;
    for (const auto& [e, c] : terms_) {
        const std::int64_t k = v == Variable::X ? e.x : e.y;
        if (k == 0) continue;
        const LatticePoint ne = v == Variable::X ? LatticePoint{e.x - 1, e.y} : LatticePoint{e.x, e.y - 1};
        d.add_term(ne, c * Rational(static_cast<long>(k)));
    }
    return d;
}

LaurentPolynomial LaurentPolynomial::shifted(LatticePoint s) const {
    LaurentPolynomial out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e + s, c);
    return out;
}

LatticePoint LaurentPolynomial::min_exponent() const {
    if (terms_.empty()) return {0, 0};
    LatticePoint m = terms_.begin()->first;
    for (const auto& [e, c] : terms_) m = {std::min(m.x, e.x), std::min(m.y, e.y)};
    return m;
}

TruncatedSeries LaurentPolynomial::along(const TruncatedSeries& xs, const TruncatedSeries& ys) const {
    const std::size_t n = std::min(xs.truncation_order(), ys.truncation_order());
    TruncatedSeries acc(n);
    // Powers are cached per exponent since supports share rows and columns.
    std::map<std::int64_t, TruncatedSeries> xp, yp;
    auto power = [](std::map<std::int64_t, TruncatedSeries>& cache, const TruncatedSeries& s, std::int64_t e) -> const TruncatedSeries& {
        auto it = cache.find(e);
        if (it == cache.end()) it = cache.emplace(e, series_int_pow(s, e)).first;
        return it->second;
    };
    for (const auto& [e, c] : terms_) acc += series_mul(power(xp, xs, e.x), power(yp, ys, e.y)) * c;
    return acc;
}

MPoly LaurentPolynomial::to_mpoly() const {
    const std::vector<std::string> vars{"x", "y"};
    MPoly out(vars);
    const LatticePoint m = min_exponent();
    for (const auto& [e, c] : terms_) {
        const LatticePoint s = e - m;
        out.add_term({static_cast<unsigned>(s.x), static_cast<unsigned>(s.y)}, c);
    }
    return out;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Rational& c) {
    if (sparsemult::is_zero(c)) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
}

std::string LaurentPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) os << "-";
        first = false;
        const Rational mag = abs(c);
        bool wrote = false;
        if (mag != 1 || (e.x == 0 && e.y == 0)) {
            os << sparsemult::to_string(mag);
            wrote = true;
        }
        auto var = [&](const char* name, std::int64_t k) {
            if (k == 0) return;
            os << (wrote ? "*" : "") << name;
            if (k != 1) os << "^" << (k < 0 ? "(" + std::to_string(k) + ")" : std::to_string(k));
            wrote = true;
        };
        var("x", e.x);
        var("y", e.y);
    }
    return os.str();
}

LaurentPolynomial pow(const LaurentPolynomial& p, unsigned e) {
    LaurentPolynomial out = LaurentPolynomial::constant(1);
    for (unsigned i = 0; i < e; ++i) out = out * p;
    return out;
}

std::optional<LaurentPolynomial> exact_quotient(const LaurentPolynomial& g, const LaurentPolynomial& f) {
    if (f.is_zero()) throw InvalidInput("division by the zero polynomial");
    if (g.is_zero()) return LaurentPolynomial{};
    // Newton polygons add under multiplication, so the quotient lives on
    // conv(g) eroded by supp(f).
    const SupportSet fs = f.support();
    const SupportSet qs = erode(convex_hull(g.support()), fs);
    if (qs.empty()) return std::nullopt;
    std::map<LatticePoint, std::size_t> row_of;
    for (const auto& c : qs)
        for (const auto& b : fs) row_of.try_emplace(c + b, 0);
    for (const auto& e : g.support()) row_of.try_emplace(e, 0);
    std::size_t r = 0;
    for (auto& [e, idx] : row_of) idx = r++;
    RationalMatrix m(row_of.size(), qs.size());
    std::size_t j = 0;
    for (const auto& c : qs) {
        for (const auto& [b, coeff] : f.terms()) m(row_of.at(c + b), j) = coeff;
        ++j;
    }
    RationalVector rhs(row_of.size());
    for (const auto& [e, coeff] : g.terms()) rhs[row_of.at(e)] = coeff;
    const auto sol = solve_linear(m, rhs);
    if (!sol) return std::nullopt;
    return LaurentPolynomial::from_coefficients(qs, *sol);
}

UnivariatePolynomial sylvester_resultant(const LaurentPolynomial& f, const LaurentPolynomial& g, Variable var) {
    if (f.is_zero() || g.is_zero()) throw InvalidInput("resultant with a zero polynomial");
    const std::size_t elim = var == Variable::X ? 0 : 1;
    const MPoly r = resultant(f.to_mpoly(), g.to_mpoly(), elim);
    auto u = r.to_univariate(1 - elim);
    return UnivariatePolynomial(u.coefficients(), var == Variable::X ? "y" : "x");
}

}  // namespace sparsemult
