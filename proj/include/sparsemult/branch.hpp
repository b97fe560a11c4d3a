#ifndef SPARSEMULT_BRANCH_HPP
#define SPARSEMULT_BRANCH_HPP

#include "sparsemult/laurent.hpp"
#include "sparsemult/matrix.hpp"

#include <vector>

namespace sparsemult {

struct TorusPoint {
    Rational x;
    Rational y;
    friend bool operator==(const TorusPoint&, const TorusPoint&) = default;
};

/// Local parametrization of Z(f) at a smooth point: the free coordinate is
/// base + t, the dependent one is `series`.
struct BranchParametrization {
    LaurentPolynomial defining_polynomial;
    TorusPoint base_point;
    Variable free_variable = Variable::X;
    TruncatedSeries series{0};
    std::size_t truncation_order = 0;

    TruncatedSeries x_series() const;
    TruncatedSeries y_series() const;
};

/// Newton iteration on f(x(t), y(t)) = 0, preferring y as the dependent
/// coordinate. Throws InvalidInput when p is not on Z(f), is off the torus,
/// or f is singular at p.
BranchParametrization branch_series(const LaurentPolynomial& f, const TorusPoint& p, std::size_t order);

struct OsculatingData {
    SupportSet support;
    /// Row i, column j: t^i coefficient of the j-th monomial of `support`
    /// along the branch.
    RationalMatrix matrix;
    std::vector<std::size_t> row_ranks;
};

/// Rows 0..m. Throws TruncationTooSmall when the branch is shorter than m.
OsculatingData osculating_matrix(const SupportSet& a, const BranchParametrization& branch, std::size_t m);

/// Rows 0..count-1 of the osculating matrix, without ranks.
RationalMatrix monomial_expansion_rows(const SupportSet& a, const BranchParametrization& branch, std::size_t count);

}  // namespace sparsemult

#endif  // SPARSEMULT_BRANCH_HPP
