#ifndef SPARSEMULT_MATRIX_HPP
#define SPARSEMULT_MATRIX_HPP

#include "sparsemult/rational.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace sparsemult {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix over Q.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    /// Throws InvalidInput on ragged input.
    static RationalMatrix from_rows(const std::vector<RationalVector>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RationalVector row(std::size_t r) const;
    /// First `count` rows.
    RationalMatrix top_rows(std::size_t count) const;
    RationalVector apply(const RationalVector& v) const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Fraction-free echelon form: each row is scaled to integers and reduced by
/// Bareiss elimination. `pivots` lists the pivot column of each leading row.
struct EchelonForm {
    std::vector<std::vector<Integer>> rows;
    std::vector<std::size_t> pivots;
};
EchelonForm bareiss_echelon(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Right kernel basis: one vector per free column in ascending order, that
/// free variable set to 1 and the other free variables to 0.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

Rational determinant(const RationalMatrix& m);

/// Some x with m * x = b, or nullopt when the system is inconsistent.
std::optional<RationalVector> solve_linear(const RationalMatrix& m, const RationalVector& b);

/// rank of the first i rows for i = 1..rows(), computed incrementally.
std::vector<std::size_t> leading_row_ranks(const RationalMatrix& m);

Rational dot(const RationalVector& a, const RationalVector& b);

/// Fraction-free determinant over an integral domain T. `exact_div(a, b)`
/// must return a / b when b divides a.
template <class T, class ExactDiv, class IsZero>
T bareiss_determinant(std::vector<std::vector<T>> a, ExactDiv exact_div, IsZero is_zero_fn) {
    const std::size_t n = a.size();
    if (n == 0) return T(1);
    bool negate = false;
    T prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero_fn(a[k][k])) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && is_zero_fn(a[swap_row][k])) ++swap_row;
            if (swap_row == n) return T(0);
            std::swap(a[k], a[swap_row]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
            a[i][k] = T(0);
        }
        prev = a[k][k];
    }
    T det = a[n - 1][n - 1];
    if (negate) det = T(0) - det;
    return det;
}

}  // namespace sparsemult

#endif  // SPARSEMULT_MATRIX_HPP
