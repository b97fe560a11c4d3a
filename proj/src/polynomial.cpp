#include "sparsemult/polynomial.hpp"

#include "sparsemult/errors.hpp"
#include "sparsemult/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace sparsemult {

// --- UnivariatePolynomial ---------------------------------------------------

UnivariatePolynomial::UnivariatePolynomial(std::vector<Rational> coefficients, std::string variable)
    : coeffs_(std::move(coefficients)), var_(std::move(variable)) {
    normalize();
}

UnivariatePolynomial UnivariatePolynomial::constant(const Rational& c, std::string variable) {
    return UnivariatePolynomial({c}, std::move(variable));
}

UnivariatePolynomial UnivariatePolynomial::identity(std::string variable) {
    return UnivariatePolynomial({0, 1}, std::move(variable));
}

UnivariatePolynomial UnivariatePolynomial::monomial(const Rational& c, std::size_t power, std::string variable) {
    std::vector<Rational> v(power + 1);
    v[power] = c;
    return UnivariatePolynomial(std::move(v), std::move(variable));
}

void UnivariatePolynomial::normalize() {
    while (!coeffs_.empty() && sparsemult::is_zero(coeffs_.back())) coeffs_.pop_back();
}

Rational UnivariatePolynomial::evaluate(const Rational& t) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

UnivariatePolynomial UnivariatePolynomial::derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<long>(i));
    return UnivariatePolynomial(std::move(d), var_);
}

UnivariatePolynomial UnivariatePolynomial::monic() const {
    if (is_zero()) return *this;
    return *this * Rational(1 / leading_coefficient());
}

UnivariatePolynomial& UnivariatePolynomial::operator+=(const UnivariatePolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

UnivariatePolynomial& UnivariatePolynomial::operator-=(const UnivariatePolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

UnivariatePolynomial& UnivariatePolynomial::operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    normalize();
    return *this;
}

UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    if (a.is_zero() || b.is_zero()) return UnivariatePolynomial({}, a.var_);
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UnivariatePolynomial(std::move(out), a.var_);
}

std::string UnivariatePolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (sparsemult::is_zero(coeffs_[i])) continue;
        const Rational& c = coeffs_[i];
        if (!first) os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) os << "-";
        const Rational mag = abs(c);
        if (i == 0 || mag != 1) os << sparsemult::to_string(mag);
        if (i > 0) os << (i == 0 || mag != 1 ? "*" : "") << var_ << (i > 1 ? "^" + std::to_string(i) : "");
        first = false;
    }
    return os.str();
}

std::pair<UnivariatePolynomial, UnivariatePolynomial> divmod(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    if (b.is_zero()) throw InvalidInput("polynomial division by zero");
    std::vector<Rational> rem = a.coefficients();
    const auto& d = b.coefficients();
    if (rem.size() < d.size()) return {UnivariatePolynomial({}, a.variable()), a};
    std::vector<Rational> quo(rem.size() - d.size() + 1);
    const Rational lead_inv = 1 / d.back();
    for (std::size_t k = quo.size(); k-- > 0;) {
        const Rational q = rem[k + d.size() - 1] * lead_inv;
        quo[k] = q;
        if (is_zero(q)) continue;
        for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= q * d[j];
    }
    rem.resize(d.size() - 1);
    return {UnivariatePolynomial(std::move(quo), a.variable()), UnivariatePolynomial(std::move(rem), a.variable())};
}

UnivariatePolynomial gcd(UnivariatePolynomial a, UnivariatePolynomial b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

UnivariatePolynomial squarefree_part(const UnivariatePolynomial& p) {
    if (p.is_zero()) return p;
    if (p.degree() == 0) return UnivariatePolynomial::constant(1, p.variable());
    return divmod(p, gcd(p, p.derivative())).first.monic();
}

RootStripping factor_out_roots(const UnivariatePolynomial& p, const std::vector<Rational>& roots) {
    if (p.is_zero()) throw InvalidInput("root stripping of the zero polynomial");
    RootStripping out{p, {}};
    for (const auto& r : roots) {
        const UnivariatePolynomial linear({-r, 1}, p.variable());
        std::size_t mult = 0;
        for (;;) {
            auto [q, rem] = divmod(out.quotient, linear);
            if (!rem.is_zero() || out.quotient.degree() < 1) break;
            out.quotient = std::move(q);
            ++mult;
        }
        out.multiplicities.push_back(mult);
    }
    return out;
}

namespace {

constexpr unsigned long kDivisorLimit = 1'000'000'000'000UL;

// Positive divisors of |n| (n != 0); nullopt when |n| is beyond the limit.
std::optional<std::vector<Integer>> divisors(const Integer& n) {
    const Integer a = abs(n);
    if (a > kDivisorLimit) return std::nullopt;
    const unsigned long v = a.get_ui();
    std::vector<Integer> out;
    for (unsigned long d = 1; d * d <= v; ++d)
        if (v % d == 0) {
            out.emplace_back(d);
            if (d != v / d) out.emplace_back(v / d);
        }
    return out;
}

}  // namespace

RationalRoots rational_roots(const UnivariatePolynomial& p) {
    RationalRoots out;
    if (p.degree() < 1) return out;
    // Integer primitive polynomial, zero roots removed.
    Integer lcm = 1;
    for (const auto& c : p.coefficients()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> z;
    for (const auto& c : p.coefficients()) z.push_back(c.get_num() * (lcm / c.get_den()));
    std::size_t low = 0;
    while (z[low] == 0) ++low;
    if (low > 0) out.roots.push_back(0);
    if (low + 1 == z.size()) return out;

    const auto ps = divisors(z[low]);
    const auto qs = divisors(z.back());
    std::vector<Integer> pc, qc;
    if (ps && qs) {
        pc = *ps;
        qc = *qs;
    } else {
        out.complete = false;
        for (long d = 1; d <= 1000; ++d) {
            if (mpz_divisible_ui_p(z[low].get_mpz_t(), d)) pc.emplace_back(d);
            if (mpz_divisible_ui_p(z.back().get_mpz_t(), d)) qc.emplace_back(d);
        }
    }
    for (const auto& num : pc)
        for (const auto& den : qc)
            for (int sign : {1, -1}) {
                const Rational r = make_rational(Integer(num * sign), den);
                if (std::find(out.roots.begin(), out.roots.end(), r) == out.roots.end() && is_zero(p.evaluate(r)))
                    out.roots.push_back(r);
            }
    std::sort(out.roots.begin(), out.roots.end());
    return out;
}

// --- MPoly ------------------------------------------------------------------

MPoly::MPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

MPoly::MPoly(long c) {
    if (c != 0) terms_[{}] = c;
}

MPoly MPoly::constant(std::vector<std::string> variables, const Rational& c) {
    MPoly p(std::move(variables));
    if (!sparsemult::is_zero(c)) p.terms_[Exponent(p.vars_.size(), 0)] = c;
    return p;
}

MPoly MPoly::variable(std::vector<std::string> variables, std::size_t index) {
    MPoly p(std::move(variables));
    Exponent e(p.vars_.size(), 0);
    e.at(index) = 1;
    p.terms_[e] = 1;
    return p;
}

std::size_t MPoly::index_of(const std::string& name) const {
    const auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw InvalidInput("unknown variable '" + name + "'");
    return static_cast<std::size_t>(it - vars_.begin());
}

bool MPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](unsigned v) { return v == 0; });
}

Rational MPoly::constant_value() const {
    if (!is_constant()) throw InvalidInput("polynomial is not constant: " + to_string());
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

long MPoly::degree_in(std::size_t var) const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max<long>(d, e.empty() ? 0 : e.at(var));
    return d;
}

std::vector<MPoly> MPoly::coefficients_in(std::size_t var) const {
    std::vector<MPoly> out(static_cast<std::size_t>(std::max<long>(degree_in(var), 0)) + 1, MPoly(vars_));
    for (const auto& [e, c] : terms_) {
        Exponent reduced = e;
        unsigned d = 0;
        if (!reduced.empty()) d = std::exchange(reduced.at(var), 0u);
        out[d].add_term(reduced, c);
    }
    return out;
}

MPoly MPoly::substitute(std::size_t var, const Rational& value) const {
    MPoly out(vars_);
    for (const auto& [e, c] : terms_) {
        Exponent reduced = e;
        unsigned d = 0;
        if (!reduced.empty()) d = std::exchange(reduced.at(var), 0u);
        out.add_term(reduced, c * sparsemult::pow(value, d));
    }
    return out;
}

MPoly MPoly::derivative(std::size_t var) const {
    MPoly out(vars_);
    for (const auto& [e, c] : terms_) {
        if (e.empty() || e.at(var) == 0) continue;
        Exponent d = e;
        const long k = d[var]--;
        out.add_term(d, c * k);
    }
    return out;
}

UnivariatePolynomial MPoly::to_univariate(std::size_t var) const {
    std::vector<Rational> c(static_cast<std::size_t>(std::max<long>(degree_in(var), 0)) + 1);
    for (const auto& [e, v] : terms_) {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (i != var && e[i] != 0) throw InvalidInput("polynomial depends on more than one variable: " + to_string());
        c[e.empty() ? 0 : e[var]] += v;
    }
    return UnivariatePolynomial(std::move(c), var < vars_.size() ? vars_[var] : "t");
}

MPoly MPoly::from_univariate(std::vector<std::string> variables, std::size_t var, const UnivariatePolynomial& p) {
    MPoly out(std::move(variables));
    for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
        Exponent e(out.vars_.size(), 0);
        e.at(var) = static_cast<unsigned>(i);
        out.add_term(e, p.coefficients()[i]);
    }
    return out;
}

std::vector<std::size_t> MPoly::occurring_variables() const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < vars_.size(); ++v)
        if (degree_in(v) > 0) out.push_back(v);
    return out;
}

void MPoly::add_term(const Exponent& e, const Rational& c) {
    if (sparsemult::is_zero(c)) return;
    if (e.size() != vars_.size()) {
        if (!vars_.empty() || !std::all_of(e.begin(), e.end(), [](unsigned v) { return v == 0; }))
            throw InvalidInput("exponent arity mismatch");
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sparsemult::is_zero(it->second)) terms_.erase(it);
    }
}

void MPoly::adopt_variables(const MPoly& o) {
    if (vars_ == o.vars_ || o.vars_.empty()) return;
    if (!vars_.empty()) throw InvalidInput("mixing polynomials over different variables");
    std::map<Exponent, Rational> rekeyed;
    for (auto& [e, c] : terms_) rekeyed[Exponent(o.vars_.size(), 0)] = c;
    vars_ = o.vars_;
    terms_ = std::move(rekeyed);
}

MPoly& MPoly::operator+=(const MPoly& o) {
    adopt_variables(o);
    for (const auto& [e, c] : o.terms_) add_term(e.empty() ? Exponent(vars_.size(), 0) : e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    adopt_variables(o);
    for (const auto& [e, c] : o.terms_) add_term(e.empty() ? Exponent(vars_.size(), 0) : e, -c);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly out(a.vars_.empty() ? b.vars_ : a.vars_);
    if (!a.vars_.empty() && !b.vars_.empty() && a.vars_ != b.vars_)
        throw InvalidInput("mixing polynomials over different variables");
    const std::size_t n = out.vars_.size();
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            MPoly::Exponent e(n, 0);
            for (std::size_t i = 0; i < n; ++i) e[i] = (ea.empty() ? 0 : ea[i]) + (eb.empty() ? 0 : eb[i]);
            out.add_term(e, ca * cb);
        }
    return out;
}

MPoly operator*(MPoly a, const Rational& c) {
    if (is_zero(c)) return MPoly(a.vars_);
    for (auto& [e, v] : a.terms_) v *= c;
    return a;
}

std::string MPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) os << "-";
        first = false;
        const Rational mag = abs(c);
        bool wrote = false;
        if (mag != 1 || std::all_of(e.begin(), e.end(), [](unsigned v) { return v == 0; })) {
            os << sparsemult::to_string(mag);
            wrote = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << (wrote ? "*" : "") << vars_[i];
            if (e[i] > 1) os << "^" << e[i];
            wrote = true;
        }
    }
    return os.str();
}

MPoly exact_div(const MPoly& a, const MPoly& b) {
    if (b.is_zero()) throw InvalidInput("polynomial division by zero");
    const auto& vars = a.variables().empty() ? b.variables() : a.variables();
    MPoly rem = a, quo(vars);
    rem += MPoly(vars);  // normalize arity
    const auto& [lb_e, lb_c] = *b.terms().rbegin();
    while (!rem.is_zero()) {
        const auto [lr_e, lr_c] = *rem.terms().rbegin();
        MPoly::Exponent e(lr_e.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            const unsigned bi = lb_e.empty() ? 0 : lb_e[i];
            if (lr_e[i] < bi) throw VerificationFailure("inexact multivariate division");
            e[i] = lr_e[i] - bi;
        }
        MPoly term(vars);
        term.add_term(e, lr_c / lb_c);
        quo += term;
        rem -= term * b;
    }
    return quo;
}

MPoly pow(const MPoly& p, unsigned e) {
    MPoly out = MPoly::constant(p.variables(), 1);
    for (unsigned i = 0; i < e; ++i) out = out * p;
    return out;
}

MPoly resultant(const MPoly& f, const MPoly& g, std::size_t var) {
    if (f.is_zero() || g.is_zero()) throw InvalidInput("resultant with a zero polynomial");
    const long df = f.degree_in(var), dg = g.degree_in(var);
    if (df <= 0 && dg <= 0) throw InvalidInput("neither polynomial depends on the eliminated variable");
    const auto fc = f.coefficients_in(var), gc = g.coefficients_in(var);
    if (df == 0) return pow(fc[0], static_cast<unsigned>(dg));
    if (dg == 0) return pow(gc[0], static_cast<unsigned>(df));
    const std::size_t n = static_cast<std::size_t>(df + dg);
    const auto& vars = f.variables();
    std::vector<std::vector<MPoly>> s(n, std::vector<MPoly>(n, MPoly(vars)));
    // Rows hold coefficients from the leading one downwards.
    for (long r = 0; r < dg; ++r)
        for (long i = 0; i <= df; ++i) s[r][r + i] = fc[df - i];
    for (long r = 0; r < df; ++r)
        for (long i = 0; i <= dg; ++i) s[dg + r][r + i] = gc[dg - i];
    return bareiss_determinant<MPoly>(
        std::move(s), [](const MPoly& x, const MPoly& y) { return exact_div(x, y); },
        [](const MPoly& x) { return x.is_zero(); });
}

}  // namespace sparsemult
