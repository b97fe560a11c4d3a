#include <doctest.h>

#include "sparsemult/branch.hpp"
#include "sparsemult/construct.hpp"
#include "sparsemult/errors.hpp"
#include "sparsemult/random.hpp"
#include "sparsemult/verify.hpp"

using namespace sparsemult;

namespace {

using LP = LaurentPolynomial;

Rational q(long n, long d = 1) { return make_rational(n, d); }
LP x() { return LP::monomial({1, 0}); }
LP y() { return LP::monomial({0, 1}); }
LP c(long v) { return LP::constant(q(v)); }

const SupportSet kSimplex{{0, 0}, {1, 0}, {0, 1}};
const SupportSet kSquare{{0, 0}, {1, 0}, {0, 1}, {1, 1}};

// Power of (x - 1) dividing Res_y(f, g): an upper bound on the multiplicity at
// (1, 1), equal to it when no other common root has x = 1.
std::size_t resultant_order_at_one(const LP& f, const LP& g) {
    auto r = sylvester_resultant(f, g, Variable::Y);
    if (r.is_zero()) return static_cast<std::size_t>(-1);
    const UnivariatePolynomial lin({q(-1), q(1)}, r.variable());
    std::size_t k = 0;
    for (;;) {
        auto [quo, rem] = divmod(r, lin);
        if (!rem.is_zero()) return k;
        r = quo;
        ++k;
    }
}

SupportSet random_support(Rng& rng, long box, std::size_t size) {
    std::vector<LatticePoint> pts;
    while (pts.size() < size) pts.push_back({draw_int(rng, 0, box), draw_int(rng, 0, box)});
    return SupportSet(pts);
}

}  // namespace

TEST_CASE("branch series") {
    const auto line = branch_series(x() + y() - c(2), {1, 1}, 5);
    CHECK(line.y_series() == TruncatedSeries({1, -1}, 5));
    CHECK(line.x_series() == TruncatedSeries({1, 1}, 5));
    CHECK(branch_series(y() - x() * x(), {1, 1}, 5).y_series() == TruncatedSeries({1, 2, 1}, 5));
    CHECK(branch_series(x() * y() - c(1), {1, 1}, 5).y_series() == TruncatedSeries({1, -1, 1, -1, 1, -1}, 5));
    // Laurent: x^-1 y - 1 has branch y = x
    CHECK(branch_series(LP::monomial({-1, 1}) - c(1), {1, 1}, 4).y_series() == TruncatedSeries({1, 1}, 4));
    // y = sqrt(1 + t)
    const auto root = branch_series(y() * y() - x(), {1, 1}, 4);
    CHECK(root.y_series() == TruncatedSeries({1, q(1, 2), q(-1, 8), q(1, 16), q(-5, 128)}, 4));

    CHECK_THROWS_AS(branch_series(x() + y() - c(2), {1, 2}, 4), InvalidInput);
    CHECK_THROWS_AS(branch_series(x() + y(), {0, 0}, 4), InvalidInput);
    const LP node = (x() - c(1)) * (y() - c(1));
    CHECK_THROWS_AS(branch_series(node, {1, 1}, 4), InvalidInput);

    // oracle: f vanishes identically along the computed branch
    Rng rng(11);
    for (int it = 0; it < 40; ++it) {
        LP f;
        for (const auto& p : random_support(rng, 3, 4)) f += LP::monomial({p.x, p.y}, q(draw_nonzero_coefficient(rng)));
        f -= LP::constant(f.evaluate(1, 1));
        if (f.is_zero() || (f.derivative(Variable::X).evaluate(1, 1) == 0 && f.derivative(Variable::Y).evaluate(1, 1) == 0))
            continue;
        const auto br = branch_series(f, {1, 1}, 6);
        TruncatedSeries acc(6);
        for (const auto& [e, coeff] : f.terms())
            acc += series_mul(series_int_pow(br.x_series(), e.x), series_int_pow(br.y_series(), e.y)) * coeff;
        CHECK(acc == TruncatedSeries(6));
    }
}

TEST_CASE("osculating matrix") {
    const auto line = branch_series(x() + y() - c(2), {1, 1}, 4);
    const auto osc = osculating_matrix(kSimplex, line, 1);
    CHECK(osc.matrix == RationalMatrix::from_rows({{1, 1, 1}, {0, -1, 1}}));
    CHECK(osc.row_ranks == std::vector<std::size_t>{1, 2});

    const auto sq = osculating_matrix(kSquare, line, 2);
    // columns in lex order: 1, y, x, xy; xy = (1+t)(1-t) = 1 - t^2
    CHECK(sq.matrix.row(2) == RationalVector{0, 0, 0, -1});
    CHECK_THROWS_AS(osculating_matrix(kSquare, line, 5), TruncationTooSmall);
    CHECK(monomial_expansion_rows(kSquare, line, 2) == sq.matrix.top_rows(2));
}

TEST_CASE("dimension of the multiplier space") {
    const SupportSet simplex2{{0, 0}, {2, 0}, {0, 2}, {1, 0}, {0, 1}, {1, 1}};
    const auto d = compute_dim_V(simplex2, x() + y() - c(2));
    CHECK(d.dim == 3);
    CHECK(d.bound == 3);
    CHECK(compute_dim_V(kSimplex, x() + y() - c(2)).dim == 1);
    CHECK(compute_dim_V(kSimplex, x() * y() - c(1)).dim == 0);
    CHECK_THROWS_AS(compute_dim_V(kSimplex, LP()), InvalidInput);
}

TEST_CASE("prescribed multiplicity at (1,1)") {
    const SupportSet big{{0, 0}, {3, 0}, {0, 3}, {1, 1}, {2, 1}, {1, 2}, {1, 0}, {0, 1}, {2, 0}, {0, 2}};
    // D = 3 here: |A| = 10 and the multiples of the line supported in A form a 6-dimensional space
    for (std::size_t m = 1; m <= 3; ++m) {
        const auto s = construct_prescribed(big, kSimplex, m, kDefaultSeed + m);
        REQUIRE(s.multiplicities.size() == 1);
        CHECK(s.multiplicities[0] == m);
        CHECK(s.points[0] == TorusPoint{1, 1});
        CHECK(s.f.support().is_subset_of(kSimplex));
        CHECK(s.g.support().is_subset_of(big));
        CHECK(s.exact);
        CHECK(resultant_order_at_one(s.f, s.g) >= m);
        CHECK(intersection_multiplicity_smooth(s.f, s.g, {1, 1}).order == m);
        for (const auto& cert : s.certificates) CHECK(replay(cert));
    }
    // deterministic in the seed
    CHECK(construct_prescribed(big, kSimplex, 3, 7).g == construct_prescribed(big, kSimplex, 3, 7).g);

    CHECK_THROWS_AS(construct_prescribed(big, kSimplex, 4, 1), HypothesisViolation);
    CHECK_THROWS_AS(construct_prescribed(SupportSet{{0, 0}, {1, 1}}, kSimplex, 1, 1), HypothesisViolation);
    CHECK_THROWS_AS(construct_prescribed(SupportSet{{0, 0}, {2, 0}, {0, 2}}, SupportSet{{0, 0}, {2, 0}, {0, 2}, {2, 2}}, 1, 1),
                    HypothesisViolation);
    CHECK_THROWS_AS(construct_prescribed(SupportSet{}, kSimplex, 1, 1), InvalidInput);
}

TEST_CASE("multi-point construction") {
    const SupportSet big{{0, 0}, {4, 0}, {0, 4}, {1, 0}, {2, 0}, {3, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1}, {2, 1}, {1, 2}, {3, 1}, {2, 2}, {1, 3}};
    const SupportSet cubic{{0, 0}, {1, 0}, {2, 0}, {3, 0}, {0, 1}};
    const auto s = construct_multipoint(big, cubic, {2, 2, 1}, kDefaultSeed);
    REQUIRE(s.points.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(s.points[i] == TorusPoint{q(static_cast<long>(i + 1)), 1});
        CHECK(s.f.evaluate(s.points[i].x, s.points[i].y) == 0);
        CHECK(s.g.evaluate(s.points[i].x, s.points[i].y) == 0);
        CHECK(s.multiplicities[i] >= std::vector<std::size_t>{2, 2, 1}[i]);
    }
    for (const auto& cert : s.certificates) CHECK(replay(cert));
    CHECK_THROWS_AS(construct_multipoint(big, cubic, {}, 1), InvalidInput);
    CHECK_THROWS_AS(construct_multipoint(big, kSimplex, {1, 1, 1}, 1), HypothesisViolation);
}

TEST_CASE("line contact") {
    const SupportSet a{{0, 0}, {1, 0}, {2, 0}, {3, 0}, {0, 1}, {1, 1}};
    for (std::size_t r = 2; r <= 3; ++r) {
        const auto s = line_contact_construct(a, r, kDefaultSeed);
        CHECK(s.f.support().size() == 3);
        CHECK(s.multiplicities[0] == r);
        CHECK(intersection_multiplicity_smooth(s.f, s.g, {1, 1}).order == r);
    }
    CHECK_THROWS_AS(line_contact_construct(kSimplex, 3, 1), HypothesisViolation);
    CHECK_THROWS_AS(line_contact_construct(a, 1, 1), InvalidInput);
}

TEST_CASE("univariate construction") {
    const auto u = construct_univariate({0, 1, 3}, 2);
    REQUIRE(u.polynomial.has_value());
    CHECK(*u.polynomial == UnivariatePolynomial({q(2), q(-3), q(0), q(1)}, "t"));
    CHECK(u.verification->multiplicity == 2);

    const auto imp = construct_univariate({0, 1, 3}, 3);
    CHECK_FALSE(imp.polynomial.has_value());
    REQUIRE(imp.impossibility.has_value());
    CHECK(imp.impossibility->determinant != 0);

    const auto neg = construct_univariate({-2, 0, 5}, 2);
    REQUIRE(neg.polynomial.has_value());
    CHECK(neg.shift == -2);
    CHECK(neg.verification->multiplicity == 2);
    CHECK_THROWS_AS(construct_univariate({1, 1}, 1), InvalidInput);
    CHECK_THROWS_AS(construct_univariate({}, 1), InvalidInput);

    // oracle: P(1) = ... = P^(l-1)(1) = 0 checked by evaluating the sparse sum directly
    const std::vector<std::int64_t> e{0, 2, 5, 7, 11};
    for (std::size_t l = 1; l < e.size(); ++l) {
        const auto r = construct_univariate(e, l);
        REQUIRE(r.polynomial.has_value());
        UnivariatePolynomial p = *r.polynomial;
        for (std::size_t d = 0; d < l; ++d, p = p.derivative()) CHECK(p.evaluate(1) == 0);
        CHECK(p.evaluate(1) != 0);
    }
}
