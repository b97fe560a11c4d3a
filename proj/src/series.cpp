#include "sparsemult/series.hpp"

#include "sparsemult/errors.hpp"

#include <algorithm>

namespace sparsemult {

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coefficients, std::size_t order)
    : coeffs_(std::move(coefficients)) {
    coeffs_.resize(order + 1);
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, std::size_t order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::linear(const Rational& c0, const Rational& c1, std::size_t order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c0;
    if (order >= 1) s.coeffs_[1] = c1;
    return s;
}

std::optional<std::size_t> TruncatedSeries::order() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!is_zero(coeffs_[i])) return i;
    return std::nullopt;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
    return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + std::min(order, truncation_order()) + 1),
                           std::min(order, truncation_order()));
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.truncation_order(), b.truncation_order());
    TruncatedSeries out(n);
    // Skip zero coefficients: branch expansions are often sparse at the start.
    for (std::size_t i = 0; i <= n; ++i) {
        if (is_zero(a[i])) continue;
        for (std::size_t j = 0; i + j <= n; ++j)
            if (!is_zero(b[j])) out[i + j] += a[i] * b[j];
    }
    return out;
}

TruncatedSeries series_inverse(const TruncatedSeries& s) {
    if (!s.is_unit()) throw NonUnitError("series inverse of a non-unit");
    const std::size_t n = s.truncation_order();
    TruncatedSeries out(n);
    const Rational inv0 = 1 / s[0];
    out[0] = inv0;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc = 0;
        for (std::size_t j = 1; j <= k; ++j)
            if (!is_zero(s[j])) acc += s[j] * out[k - j];
        out[k] = -acc * inv0;
    }
    return out;
}

TruncatedSeries series_int_pow(const TruncatedSeries& s, long exponent) {
    const std::size_t n = s.truncation_order();
    if (exponent < 0) return series_int_pow(series_inverse(s), -exponent);
    TruncatedSeries result = TruncatedSeries::constant(1, n);
    TruncatedSeries base = s;
    auto e = static_cast<unsigned long>(exponent);
    while (e > 0) {
        if (e & 1u) result = series_mul(result, base);
        e >>= 1;
        if (e > 0) base = series_mul(base, base);
    }
    return result;
}

}  // namespace sparsemult
