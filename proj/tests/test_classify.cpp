#include <doctest.h>

#include "sparsemult/classify.hpp"
#include "sparsemult/errors.hpp"
#include "sparsemult/examples.hpp"
#include "sparsemult/random.hpp"
#include "sparsemult/verify.hpp"

#include <set>
#include <variant>

using namespace sparsemult;

namespace {

using LP = LaurentPolynomial;

Rational q(long n, long d = 1) { return make_rational(n, d); }
LP x() { return LP::monomial({1, 0}); }
LP y() { return LP::monomial({0, 1}); }

const SupportSet kSimplex{{0, 0}, {1, 0}, {0, 1}};
const SupportSet kSquare{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
const SupportSet kBody{{0, 0}, {1, 0}, {0, 1}, {-1, -1}};

// det [[0, Fx, Fy], [Fx, Fxx, Fxy], [Fy, Fxy, Fyy]] at (1, 1), from scratch.
Rational bordered_hessian(const LP& f) {
    const LP fx = f.derivative(Variable::X), fy = f.derivative(Variable::Y);
    const auto at = [](const LP& p) { return p.evaluate(1, 1); };
    return determinant(RationalMatrix::from_rows({{0, at(fx), at(fy)},
                                                  {at(fx), at(fx.derivative(Variable::X)), at(fx.derivative(Variable::Y))},
                                                  {at(fy), at(fx.derivative(Variable::Y)), at(fy.derivative(Variable::Y))}}));
}

}  // namespace

TEST_CASE("bordered Hessian and Theta against direct differentiation") {
    Rng rng(31);
    int checked = 0;
    while (checked < 40) {
        const long n = draw_int(rng, -3, 4), m = draw_int(rng, -3, 4), k = draw_int(rng, -3, 4), l = draw_int(rng, -3, 4);
        if (n * l - m * k == 0) {
            CHECK_THROWS_AS(hessian_at_one(n, m, k, l), InvalidInput);
            continue;
        }
        const auto he = hessian_at_one(n, m, k, l);
        for (long a : {1, 2, -3, 5}) {
            const LP f = LP::constant(1) + LP::monomial({n, m}, q(a)) - LP::monomial({k, l}, q(1 + a));
            CHECK(he.evaluate(q(a)) == bordered_hessian(f));
        }
        CHECK(he.evaluate(0) == q(-k * l * (k + l)));
        CHECK(he.evaluate(-1) == q(-m * n * (m + n)));
        ++checked;
    }
    for (long n = 1; n < 5; ++n)
        for (long m = 0; m < 5; ++m)
            for (long k = 1; k < 5; ++k) {
                if (n == m) continue;
                const auto th = theta(n, m, k);
                for (long a : {2, 3, -5}) {
                    const LP f = LP::monomial({n, 0}) + LP::monomial({m, 0}, q(a)) - LP::monomial({0, k}, q(1 + a));
                    CHECK(bordered_hessian(f) == q((1 + a) * k) * th.evaluate(q(a)));
                }
            }
}

TEST_CASE("triangle inflection") {
    CHECK_FALSE(triangle_inflection(kSimplex).has_inflection);
    CHECK(triangle_inflection(kSimplex).family == 1);
    CHECK(triangle_inflection(SupportSet{{0, 0}, {2, 0}, {0, 2}}).family == 4);
    const auto c = triangle_inflection(SupportSet{{0, 0}, {3, 1}, {1, 2}});
    CHECK(c.has_inflection);
    CHECK(c.family == 0);
    CHECK(c.reduced.degree() > 0);
    CHECK_THROWS_AS(triangle_inflection(SupportSet{{0, 0}, {1, 1}, {2, 2}}), InvalidInput);
    CHECK_THROWS_AS(triangle_inflection(kSquare), InvalidInput);

    // no-inflection verdicts come with a map onto the family representative
    const auto parabola = triangle_inflection(SupportSet{{0, 0}, {2, 0}, {0, 1}});
    REQUIRE_FALSE(parabola.has_inflection);
    const auto fam = match_triangle_family(parabola.triangle);
    REQUIRE(fam.has_value());
    CHECK(apply_map(fam->map, parabola.triangle) == fam->representative);

    // invariance under translations and the projective monomial group
    Rng rng(32);
    for (int it = 0; it < 60; ++it) {
        const SupportSet t{{draw_int(rng, 0, 4), draw_int(rng, 0, 4)},
                           {draw_int(rng, 0, 4), draw_int(rng, 0, 4)},
                           {draw_int(rng, 0, 4), draw_int(rng, 0, 4)}};
        if (t.size() != 3 || is_segment(t)) continue;
        const bool base = triangle_inflection(t).has_inflection;
        for (const auto& g : projective_monomial_group()) {
            const auto img = apply_map(UnimodularAffineMap(g, {draw_int(rng, -3, 3), draw_int(rng, -3, 3)}), t);
            CHECK(triangle_inflection(img).has_inflection == base);
        }
    }
}

TEST_CASE("segment shape") {
    const auto s = segment_shape(SupportSet{{0, 0}, {1, 0}, {2, 0}}, SupportSet{{0, 0}, {0, 1}, {0, 2}});
    CHECK(s.h == 3);
    CHECK(s.v == 3);
    const auto d = segment_shape(SupportSet{{0, 0}, {1, 1}, {2, 2}}, SupportSet{{0, 0}, {1, 0}});
    CHECK(d.h == 3);
    CHECK(d.v == 2);
    // gaps count: rows 0 and 2 only
    CHECK(segment_shape(SupportSet{{0, 0}, {1, 0}}, SupportSet{{0, 0}, {0, 2}}).v == 2);
}

TEST_CASE("mult-3 decision") {
    const auto r = decide_mult3(kSimplex, kSimplex);
    CHECK(r.mixed_volume == 1);
    CHECK(r.impossible);
    REQUIRE(r.family.has_value());
    CHECK(decide_mult3(kSquare, kSquare).impossible);
    CHECK(decide_mult3(kSquare, kSquare).mixed_volume == 2);

    const auto ex = decide_mult3(kSimplex, SupportSet{{0, 1}, {3, 0}, {4, 0}});
    CHECK_FALSE(ex.impossible);
    CHECK(ex.witness_status == WitnessStatus::Verified);
    REQUIRE(ex.construction.has_value());
    CHECK(intersection_multiplicity_smooth(ex.construction->f, ex.construction->g, {1, 1}).order >= 3);

    const auto body = decide_mult3(kBody, kSimplex);
    CHECK(body.mixed_volume == 3);
    CHECK(body.witness_status == WitnessStatus::ComplexOnly);
    CHECK(decide_mult3(kBody, kSquare).witness_status == WitnessStatus::Verified);

    // mixed volume 3 but only simple roots: the verdict and the catalogue disagree
    CHECK_THROWS_AS(decide_mult3(SupportSet{{0, 0}, {1, 1}}, SupportSet{{0, 1}, {2, 0}}), VerificationFailure);

    // segment route with a (2,2) split
    const SupportSet seg{{0, 0}, {1, 0}, {2, 0}};
    const SupportSet col{{0, 0}, {0, 1}, {0, 2}, {1, 0}};
    const auto sr = segment_route(seg, col);
    REQUIRE(sr.has_value());
    CHECK(sr->multiplicities[0] >= 3);

    CHECK(enumerate_four_point_bodies().size() == 3);
    std::set<SupportSet> forms;
    for (const auto& b : enumerate_four_point_bodies()) forms.insert(normal_form(b).form);
    CHECK(forms.size() == 3);
}

TEST_CASE("lines through the origin") {
    const std::tuple<int, int, int> cases[] = {{2, 1, 0}, {3, 2, 1}, {4, 3, 2}, {4, 2, 2}, {5, 4, 4}};
    for (const auto& [n, k, l] : cases) {
        const auto s = build_example_ex3(n, k, l);
        CHECK(s.expected == static_cast<std::size_t>(n * k + l));
        CHECK(origin_multiplicity_line_product(s.lines, s.v).multiplicity == s.expected);
    }
    CHECK(build_example_ex3(4, 3, 2).exponents == std::vector<std::size_t>{2, 1});
    CHECK_THROWS_AS(build_example_ex3(3, 3, 1), InvalidInput);
    CHECK_THROWS_AS(build_example_ex3(4, 3, 2, 1, std::vector<std::size_t>{1, 1}), InvalidInput);
}

TEST_CASE("gap example") {
    CHECK(phi_sequence(5) == std::vector<Integer>{1, 1, 2, 5, 14});
    std::set<std::size_t> achieved;
    for (std::size_t m = 1; m <= 6; ++m) {
        const auto r = build_example_ex10(3, m);
        if (const auto* s = std::get_if<ConstructedSystem>(&r)) {
            CHECK(s->multiplicities[0] == m);
            achieved.insert(m);
        } else {
            const auto& g = std::get<GapImpossibility>(r);
            CHECK(g.phi_positive);
            CHECK(g.obstruction_nonzero);
            CHECK(g.obstruction_numerator == 5);
        }
    }
    CHECK(achieved == std::set<std::size_t>{1, 2, 3, 4, 6});
    const auto [a, b] = gap_example_supports(3);
    CHECK(a.size() == 5);
    CHECK(b.size() == 4);
}

TEST_CASE("inflection example") {
    const auto r = reproduce_exim();
    CHECK(r.mixed_volume == 4);
    REQUIRE(r.resultant_ratio.has_value());
    CHECK((*r.resultant_ratio == 1 || *r.resultant_ratio == -1));
    REQUIRE(r.order3_solution.has_value());
    CHECK(*r.order3_solution == std::pair<Rational, Rational>{2, 2});
    CHECK_FALSE(r.order4_solution.has_value());
    CHECK(r.witness_multiplicity == std::size_t{3});
    CHECK(r.oracle3.verdict == OracleVerdict::FoundWitness);
    CHECK(r.oracle4.verdict == OracleVerdict::ProvedImpossible);
}
