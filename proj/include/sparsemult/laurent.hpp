#ifndef SPARSEMULT_LAURENT_HPP
#define SPARSEMULT_LAURENT_HPP

#include "sparsemult/lattice.hpp"
#include "sparsemult/polynomial.hpp"
#include "sparsemult/rational.hpp"
#include "sparsemult/series.hpp"

#include <map>
#include <optional>
#include <string>

namespace sparsemult {

enum class Variable { X, Y };

/// Finite sum of c * x^e1 * y^e2 with e in Z^2 and c != 0.
class LaurentPolynomial {
public:
    using Terms = std::map<LatticePoint, Rational>;

    LaurentPolynomial() = default;
    explicit LaurentPolynomial(Terms terms);
    static LaurentPolynomial monomial(LatticePoint e, const Rational& c = 1);
    static LaurentPolynomial constant(const Rational& c) { return monomial({0, 0}, c); }
    /// sum c_i x^{a_i} over the support order.
    static LaurentPolynomial from_coefficients(const SupportSet& support, const std::vector<Rational>& coeffs);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    SupportSet support() const;
    Rational coefficient(LatticePoint e) const;
    void add_term(LatticePoint e, const Rational& c);

    /// Throws InvalidInput when a zero coordinate meets a negative exponent.
    Rational evaluate(const Rational& x, const Rational& y) const;
    LaurentPolynomial derivative(Variable v) const;
    /// Multiply by x^s1 y^s2.
    LaurentPolynomial shifted(LatticePoint s) const;
    /// Componentwise minimum exponent; (0,0) for the zero polynomial.
    LatticePoint min_exponent() const;

    /// Substitute x = xs(t), y = ys(t); both must be units when negative
    /// exponents occur.
    TruncatedSeries along(const TruncatedSeries& xs, const TruncatedSeries& ys) const;

    /// Polynomial in variables {"x","y"} after multiplying by x^-min y^-min.
    MPoly to_mpoly() const;

    LaurentPolynomial& operator+=(const LaurentPolynomial& o);
    LaurentPolynomial& operator-=(const LaurentPolynomial& o);
    LaurentPolynomial& operator*=(const Rational& c);
    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    friend LaurentPolynomial operator*(LaurentPolynomial a, const Rational& c) { return a *= c; }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

    std::string to_string() const;

private:
    Terms terms_;
};

LaurentPolynomial pow(const LaurentPolynomial& p, unsigned e);

/// q with q * f == g, or nullopt when f does not divide g among Laurent
/// polynomials. f must be non-zero.
std::optional<LaurentPolynomial> exact_quotient(const LaurentPolynomial& g, const LaurentPolynomial& f);

/// Resultant eliminating `var`, as a polynomial in the other variable.
/// Monomial factors are cleared first (they do not vanish on the torus).
/// Throws InvalidInput for zero inputs or when neither depends on `var`.
UnivariatePolynomial sylvester_resultant(const LaurentPolynomial& f, const LaurentPolynomial& g, Variable var);

}  // namespace sparsemult

#endif  // SPARSEMULT_LAURENT_HPP
