#ifndef SPARSEMULT_ERRORS_HPP
#define SPARSEMULT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sparsemult {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad JSON, empty supports, collinear triangles, ...
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// A hypothesis of a construction does not hold (segment support,
/// non-primitive pair, multiplicity above the achievable bound).
class HypothesisViolation : public Error {
public:
    using Error::Error;
};

/// Randomized construction gave up after its retry budget.
class RetryBudgetExhausted : public Error {
public:
    using Error::Error;
};

/// An exact check disagreed with a claim.
class VerificationFailure : public Error {
public:
    using Error::Error;
};

/// Series inversion of a non-unit, or a negative power of one.
class NonUnitError : public Error {
public:
    using Error::Error;
};

/// A series computation ran past its truncation order; retry with a larger one.
class TruncationTooSmall : public Error {
public:
    using Error::Error;
};

class ArithmeticOverflow : public Error {
public:
    using Error::Error;
};

}  // namespace sparsemult

#endif  // SPARSEMULT_ERRORS_HPP
