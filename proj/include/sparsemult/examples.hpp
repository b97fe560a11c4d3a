#ifndef SPARSEMULT_EXAMPLES_HPP
#define SPARSEMULT_EXAMPLES_HPP

#include "sparsemult/construct.hpp"
#include "sparsemult/json_io.hpp"
#include "sparsemult/oracle.hpp"
#include "sparsemult/random.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace sparsemult {

// --- lines through the origin ----------------------------------------------

struct LineProductSystem {
    std::size_t n = 0, k = 0, l = 0;
    std::vector<std::size_t> exponents;  // a_1..a_l
    std::vector<LaurentPolynomial> lines;  // h_i = x - i y
    LaurentPolynomial u;  // prod h_i
    LaurentPolynomial v;  // prod_{i<=l} h_i^{a_i} + H, or y^k + H when l = 0
    LaurentPolynomial h;  // the random form of degree k + 1
    std::size_t expected = 0;  // nk + l
    std::uint64_t seed = 0;
};

/// Requires 0 <= l <= k <= n - 1 and, for l >= 1, a_i >= 1 summing to k.
/// Without explicit exponents, a_1 = k - l + 1 and the rest are 1. H is
/// redrawn until it is non-zero at every point (i, 1).
LineProductSystem build_example_ex3(std::size_t n, std::size_t k, std::size_t l, std::uint64_t seed = kDefaultSeed,
                                    std::optional<std::vector<std::size_t>> exponents = std::nullopt);
Json to_json(const LineProductSystem& s);

// --- the gap example --------------------------------------------------------

/// Supports of the gap example: A = {(0,0),(1,0),(0,1),...,(0,n)},
/// B = {(0,0),(1,0),(2,0),(0,1)}.
std::pair<SupportSet, SupportSet> gap_example_supports(std::size_t n);

/// Catalan-type sequence phi_1 = 1, phi_k = sum_{i=1}^{k-1} phi_i phi_{k-i}.
std::vector<Integer> phi_sequence(std::size_t count);

struct GapImpossibility {
    std::size_t n = 0, m = 0;
    std::vector<Integer> phi;  // phi_1..phi_{n+1}
    bool phi_positive = false;
    /// Coefficient of x^{n+1} in q(p(x)) - x after x^0..x^n are killed,
    /// as (-1)^{n-1} phi_{n+1} / u^{2n} with u = a + 2 a_0; checked exactly
    /// against the recursion for several values of u.
    Integer obstruction_numerator;
    std::vector<std::pair<Rational, Rational>> sampled_obstruction;  // (u, coefficient)
    bool obstruction_nonzero = false;
    std::string normalization;
};
Json to_json(const GapImpossibility& g);

/// n odd >= 3, 1 <= m <= 2n. Multiplicities up to n + 1 come from the
/// triangular coefficient system, even ones above from a doubled line.
/// Odd m > n + 1 yields the obstruction report.
std::variant<ConstructedSystem, GapImpossibility> build_example_ex10(std::size_t n, std::size_t m);

// --- the inflection example -------------------------------------------------

struct InflectionExampleReport {
    Integer mixed_volume;
    MPoly resultant;
    MPoly expected_resultant;
    std::optional<Rational> resultant_ratio;  // resultant / expected when constant
    /// Solutions (a, b) of R(1) = R'(1) = ... = R^(j)(1) = 0, j = 2 and 3.
    std::optional<std::pair<Rational, Rational>> order3_solution;
    std::optional<std::pair<Rational, Rational>> order4_solution;
    std::optional<std::size_t> witness_multiplicity;  // verified at order3_solution
    OracleResult oracle3;
    OracleResult oracle4;
};
InflectionExampleReport reproduce_exim(std::uint64_t seed = kDefaultSeed);
Json to_json(const InflectionExampleReport& r);

}  // namespace sparsemult

#endif  // SPARSEMULT_EXAMPLES_HPP
