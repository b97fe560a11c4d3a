#include "sparsemult/matrix.hpp"

#include "sparsemult/errors.hpp"

namespace sparsemult {

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows) {
    if (rows.empty()) return {};
    RationalMatrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) throw InvalidInput("ragged matrix rows");
        for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

RationalVector RationalMatrix::row(std::size_t r) const {
    return RationalVector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

RationalMatrix RationalMatrix::top_rows(std::size_t count) const {
    RationalMatrix out(count, cols_);
    std::copy(data_.begin(), data_.begin() + count * cols_, out.data_.begin());
    return out;
}

RationalVector RationalMatrix::apply(const RationalVector& v) const {
    if (v.size() != cols_) throw InvalidInput("matrix-vector size mismatch");
    RationalVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!is_zero((*this)(r, c))) out[r] += (*this)(r, c) * v[c];
    return out;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size()) throw InvalidInput("dot product size mismatch");
    Rational acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

namespace {

std::vector<Integer> integer_row(const RationalMatrix& m, std::size_t r) {
    Integer lcm = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(r, c).get_den_mpz_t());
    std::vector<Integer> out(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) out[c] = m(r, c).get_num() * (lcm / m(r, c).get_den());
    return out;
}

}  // namespace

EchelonForm bareiss_echelon(const RationalMatrix& m) {
    std::vector<std::vector<Integer>> a;
    a.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(integer_row(m, r));

    EchelonForm out;
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[r], a[p]);
        for (std::size_t i = r + 1; i < a.size(); ++i) {
            for (std::size_t j = c + 1; j < m.cols(); ++j) {
                Integer v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                if (!mpz_divisible_p(v.get_mpz_t(), prev.get_mpz_t()))
                    throw VerificationFailure("Bareiss elimination produced an inexact division");
                mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        out.pivots.push_back(c);
        ++r;
    }
    a.resize(r);
    out.rows = std::move(a);
    return out;
}

std::size_t rank(const RationalMatrix& m) { return bareiss_echelon(m).pivots.size(); }

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
    const auto ech = bareiss_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : ech.pivots) is_pivot[c] = true;

    std::vector<RationalVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        RationalVector x(m.cols());
        x[f] = 1;
        for (std::size_t i = ech.pivots.size(); i-- > 0;) {
            const auto pc = ech.pivots[i];
            Rational acc = 0;
            for (std::size_t j = pc + 1; j < m.cols(); ++j)
                if (ech.rows[i][j] != 0 && !is_zero(x[j])) acc += Rational(ech.rows[i][j]) * x[j];
            x[pc] = -acc / Rational(ech.rows[i][pc]);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

Rational determinant(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw InvalidInput("determinant of a non-square matrix");
    std::vector<std::vector<Rational>> a(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) a[r] = m.row(r);
    return bareiss_determinant<Rational>(
        std::move(a), [](const Rational& x, const Rational& y) { return Rational(x / y); },
        [](const Rational& x) { return is_zero(x); });
}

std::optional<RationalVector> solve_linear(const RationalMatrix& m, const RationalVector& b) {
    if (b.size() != m.rows()) throw InvalidInput("right-hand side size mismatch");
    RationalMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    // The last column is free exactly when b lies in the column space; its
    // basis vector then has a 1 in the last slot.
    for (auto& v : kernel_basis(aug)) {
        if (is_zero(v.back())) continue;
        v.pop_back();
        for (auto& x : v) x = -x;
        return v;
    }
    return std::nullopt;
}

std::vector<std::size_t> leading_row_ranks(const RationalMatrix& m) {
    // Reduced rows keyed by pivot column; each new row is reduced against them.
    std::vector<std::pair<std::size_t, RationalVector>> basis;
    std::vector<std::size_t> ranks;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        RationalVector v = m.row(r);
        for (const auto& [pc, b] : basis) {
            if (is_zero(v[pc])) continue;
            const Rational f = v[pc];
            for (std::size_t j = 0; j < v.size(); ++j)
                if (!is_zero(b[j])) v[j] -= f * b[j];
        }
        std::size_t pc = 0;
        while (pc < v.size() && is_zero(v[pc])) ++pc;
        if (pc < v.size()) {
            const Rational inv = 1 / v[pc];
            for (auto& x : v) x *= inv;
            for (auto& [opc, b] : basis)
                if (!is_zero(b[pc])) {
                    const Rational f = b[pc];
                    for (std::size_t j = 0; j < b.size(); ++j)
                        if (!is_zero(v[j])) b[j] -= f * v[j];
                }
            basis.emplace_back(pc, std::move(v));
        }
        ranks.push_back(basis.size());
    }
    return ranks;
}

}  // namespace sparsemult
