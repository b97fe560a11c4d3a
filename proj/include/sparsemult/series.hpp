#ifndef SPARSEMULT_SERIES_HPP
#define SPARSEMULT_SERIES_HPP

#include "sparsemult/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace sparsemult {

/// Power series in t known exactly through t^N (N = truncation_order()).
/// Binary operations truncate to the smaller operand order.
class TruncatedSeries {
public:
    /// Zero series known through t^order.
    explicit TruncatedSeries(std::size_t order);
    /// Coefficients beyond `order` are dropped; missing ones are zero.
    TruncatedSeries(std::vector<Rational> coefficients, std::size_t order);

    static TruncatedSeries constant(const Rational& c, std::size_t order);
    /// c0 + c1 t.
    static TruncatedSeries linear(const Rational& c0, const Rational& c1, std::size_t order);

    std::size_t truncation_order() const { return coeffs_.size() - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
    Rational& operator[](std::size_t i) { return coeffs_[i]; }

    /// Index of the first non-zero coefficient; nullopt means "beyond N".
    std::optional<std::size_t> order() const;
    bool is_unit() const { return !is_zero(coeffs_[0]); }

    TruncatedSeries truncated(std::size_t order) const;

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    TruncatedSeries& operator*=(const Rational& c);

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const Rational& c) { return a *= c; }
    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
/// Throws NonUnitError when the constant term vanishes.
TruncatedSeries series_inverse(const TruncatedSeries& s);
/// Negative exponents go through series_inverse.
TruncatedSeries series_int_pow(const TruncatedSeries& s, long exponent);

inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return series_mul(a, b); }

}  // namespace sparsemult

#endif  // SPARSEMULT_SERIES_HPP
