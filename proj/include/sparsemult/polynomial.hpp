#ifndef SPARSEMULT_POLYNOMIAL_HPP
#define SPARSEMULT_POLYNOMIAL_HPP

#include "sparsemult/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sparsemult {

/// Dense univariate polynomial over Q, coefficients from degree 0 upwards,
/// no trailing zeros. The variable name is only used for printing.
class UnivariatePolynomial {
public:
    UnivariatePolynomial() = default;
    explicit UnivariatePolynomial(std::vector<Rational> coefficients, std::string variable = "t");

    static UnivariatePolynomial constant(const Rational& c, std::string variable = "t");
    /// The polynomial `variable`.
    static UnivariatePolynomial identity(std::string variable = "t");
    /// c * variable^power.
    static UnivariatePolynomial monomial(const Rational& c, std::size_t power, std::string variable = "t");

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    const std::string& variable() const { return var_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    Rational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
    Rational leading_coefficient() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

    Rational evaluate(const Rational& t) const;
    UnivariatePolynomial derivative() const;
    UnivariatePolynomial monic() const;

    UnivariatePolynomial& operator+=(const UnivariatePolynomial& o);
    UnivariatePolynomial& operator-=(const UnivariatePolynomial& o);
    UnivariatePolynomial& operator*=(const Rational& c);

    friend UnivariatePolynomial operator+(UnivariatePolynomial a, const UnivariatePolynomial& b) { return a += b; }
    friend UnivariatePolynomial operator-(UnivariatePolynomial a, const UnivariatePolynomial& b) { return a -= b; }
    friend UnivariatePolynomial operator*(UnivariatePolynomial a, const Rational& c) { return a *= c; }
    friend UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
    /// Coefficient equality; variable names are ignored.
    friend bool operator==(const UnivariatePolynomial& a, const UnivariatePolynomial& b) { return a.coeffs_ == b.coeffs_; }

    std::string to_string() const;

private:
    void normalize();

    std::vector<Rational> coeffs_;
    std::string var_ = "t";
};

/// Quotient and remainder; throws InvalidInput when dividing by zero.
std::pair<UnivariatePolynomial, UnivariatePolynomial> divmod(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
/// Monic gcd; gcd(0, 0) = 0.
UnivariatePolynomial gcd(UnivariatePolynomial a, UnivariatePolynomial b);
/// p / gcd(p, p'), monic.
UnivariatePolynomial squarefree_part(const UnivariatePolynomial& p);

struct RootStripping {
    UnivariatePolynomial quotient;
    std::vector<std::size_t> multiplicities;  // one per requested root
};
/// Divides out each root to its full multiplicity. p must be non-zero.
RootStripping factor_out_roots(const UnivariatePolynomial& p, const std::vector<Rational>& roots);

struct RationalRoots {
    std::vector<Rational> roots;  // ascending, distinct
    /// False when coefficients were too large for divisor enumeration, so
    /// the list may miss roots.
    bool complete = true;
};
RationalRoots rational_roots(const UnivariatePolynomial& p);

/// Sparse polynomial over Q in a fixed number of named variables, with
/// non-negative exponents. Terms are keyed by exponent vectors; the
/// lexicographically largest key is the leading term.
class MPoly {
public:
    using Exponent = std::vector<unsigned>;

    MPoly() = default;
    explicit MPoly(std::vector<std::string> variables);
    /// Constant `c` (also usable as T(0)/T(1) in generic code with zero variables).
    MPoly(long c);

    static MPoly constant(std::vector<std::string> variables, const Rational& c);
    static MPoly variable(std::vector<std::string> variables, std::size_t index);

    const std::vector<std::string>& variables() const { return vars_; }
    const std::map<Exponent, Rational>& terms() const { return terms_; }
    std::size_t variable_count() const { return vars_.size(); }
    std::size_t index_of(const std::string& name) const;

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;  // throws unless is_constant()
    /// Degree in one variable; -1 for the zero polynomial.
    long degree_in(std::size_t var) const;
    /// Coefficients of var^0 .. var^degree as polynomials in the same variables.
    std::vector<MPoly> coefficients_in(std::size_t var) const;
    /// Set var = value.
    MPoly substitute(std::size_t var, const Rational& value) const;
    MPoly derivative(std::size_t var) const;
    /// Only `var` may occur; converted to a univariate polynomial.
    UnivariatePolynomial to_univariate(std::size_t var) const;
    /// Lift a univariate polynomial into variable `var`.
    static MPoly from_univariate(std::vector<std::string> variables, std::size_t var, const UnivariatePolynomial& p);
    /// Variables that actually occur.
    std::vector<std::size_t> occurring_variables() const;

    void add_term(const Exponent& e, const Rational& c);

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(MPoly a, const Rational& c);
    friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

    std::string to_string() const;

private:
    void adopt_variables(const MPoly& o);

    std::vector<std::string> vars_;
    std::map<Exponent, Rational> terms_;
};

/// a / b when b divides a exactly; throws VerificationFailure otherwise.
MPoly exact_div(const MPoly& a, const MPoly& b);
MPoly pow(const MPoly& p, unsigned e);

/// Sylvester resultant of f and g with respect to variable `var`.
/// Throws InvalidInput if neither depends on `var` or either is zero.
MPoly resultant(const MPoly& f, const MPoly& g, std::size_t var);

}  // namespace sparsemult

#endif  // SPARSEMULT_POLYNOMIAL_HPP
