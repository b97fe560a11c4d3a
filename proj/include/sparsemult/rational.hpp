#ifndef SPARSEMULT_RATIONAL_HPP
#define SPARSEMULT_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace sparsemult {

using Integer = mpz_class;

/// Exact rational number. mpq_class keeps values canonical (reduced,
/// positive denominator) as long as every constructor path canonicalizes,
/// which make_rational and parse_rational guarantee.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Integer& num, const Integer& den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// Accepts "p", "-p", "p/q". Throws InvalidInput on anything else or q == 0.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

/// Exact power with a non-negative exponent.
Rational pow(const Rational& base, unsigned exponent);

}  // namespace sparsemult

#endif  // SPARSEMULT_RATIONAL_HPP
