#include "sparsemult/branch.hpp"

#include "sparsemult/errors.hpp"

namespace sparsemult {

TruncatedSeries BranchParametrization::x_series() const {
    if (free_variable == Variable::X) return TruncatedSeries::linear(base_point.x, 1, truncation_order);
    return series;
}

TruncatedSeries BranchParametrization::y_series() const {
    if (free_variable == Variable::Y) return TruncatedSeries::linear(base_point.y, 1, truncation_order);
    return series;
}

BranchParametrization branch_series(const LaurentPolynomial& f, const TorusPoint& p, std::size_t order) {
    if (is_zero(p.x) || is_zero(p.y)) throw InvalidInput("base point is not in the torus");
    if (!is_zero(f.evaluate(p.x, p.y))) throw InvalidInput("base point is not on the curve");
    const LaurentPolynomial fx = f.derivative(Variable::X), fy = f.derivative(Variable::Y);
    BranchParametrization b;
    b.defining_polynomial = f;
    b.base_point = p;
    b.truncation_order = order;
    Variable dep;
    if (!is_zero(fy.evaluate(p.x, p.y))) {
        b.free_variable = Variable::X;
        dep = Variable::Y;
    } else if (!is_zero(fx.evaluate(p.x, p.y))) {
        b.free_variable = Variable::Y;
        dep = Variable::X;
    } else {
        throw InvalidInput("curve is singular at the base point");
    }
    const LaurentPolynomial& fd = dep == Variable::Y ? fy : fx;
    const TruncatedSeries free = TruncatedSeries::linear(b.free_variable == Variable::X ? p.x : p.y, 1, order);
    TruncatedSeries dependent = TruncatedSeries::constant(dep == Variable::Y ? p.y : p.x, order);
    auto eval = [&](const LaurentPolynomial& h) {
        return dep == Variable::Y ? h.along(free, dependent) : h.along(dependent, free);
    };
    // Newton steps double the number of correct coefficients.
    for (std::size_t correct = 1; correct <= order; correct *= 2) {
        dependent -= series_mul(eval(f), series_inverse(eval(fd)));
    }
    if (eval(f).order().has_value()) throw VerificationFailure("branch expansion did not converge");
    b.series = dependent;
    return b;
}

RationalMatrix monomial_expansion_rows(const SupportSet& a, const BranchParametrization& branch, std::size_t count) {
    if (count == 0) return RationalMatrix(0, a.size());
    if (branch.truncation_order + 1 < count) throw TruncationTooSmall("branch truncation is shorter than the requested rows");
    const TruncatedSeries xs = branch.x_series(), ys = branch.y_series();
    RationalMatrix m(count, a.size());
    std::size_t j = 0;
    for (const auto& e : a) {
        const TruncatedSeries s = LaurentPolynomial::monomial(e).along(xs, ys);
        for (std::size_t i = 0; i < count; ++i) m(i, j) = s[i];
        ++j;
    }
    return m;
}

OsculatingData osculating_matrix(const SupportSet& a, const BranchParametrization& branch, std::size_t m) {
    OsculatingData d;
    d.support = a;
    d.matrix = monomial_expansion_rows(a, branch, m + 1);
    d.row_ranks = leading_row_ranks(d.matrix);
    return d;
}

}  // namespace sparsemult
