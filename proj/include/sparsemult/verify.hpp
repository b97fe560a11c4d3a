#ifndef SPARSEMULT_VERIFY_HPP
#define SPARSEMULT_VERIFY_HPP

#include "sparsemult/branch.hpp"
#include "sparsemult/json_io.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace sparsemult {

enum class CertificateKind { BranchOrder, DerivativeTable, LineSum, RankImpossibility, EliminationImpossibility };

std::string to_string(CertificateKind k);
CertificateKind certificate_kind_from_string(const std::string& s);

/// `inputs` holds everything needed to recompute `transcript`.
struct MultiplicityCertificate {
    CertificateKind kind = CertificateKind::BranchOrder;
    Json inputs;
    Json transcript;
};

Json to_json(const MultiplicityCertificate& c);
MultiplicityCertificate certificate_from_json(const Json& j);

/// Recompute the certificate from its inputs; true iff the transcript is
/// reproduced exactly.
bool replay(const MultiplicityCertificate& c);

struct UnivariateMultiplicity {
    std::size_t multiplicity = 0;
    /// P(t0), P'(t0), ..., P^(m)(t0); the last entry is the first non-zero one.
    std::vector<Rational> derivative_table;
    MultiplicityCertificate certificate;
};
/// Throws InvalidInput for the zero polynomial.
UnivariateMultiplicity univariate_multiplicity(const UnivariatePolynomial& p, const Rational& t0);

struct SmoothIntersection {
    /// nullopt: g vanishes on the branch (non-isolated root).
    std::optional<std::size_t> order;
    /// First non-zero coefficient of g along the branch (zero when non-isolated).
    Rational leading_coefficient;
    std::size_t truncation_used = 0;
    /// Mixed volume of the Newton polygons; an isolated root never exceeds it.
    std::int64_t order_cap = 0;
    /// Set when g is a Laurent multiple of f.
    bool multiple_of_f = false;
    MultiplicityCertificate certificate;

    bool isolated() const { return order.has_value(); }
};

/// Order of g along the branch of Z(f) at p, recomputed from scratch with
/// doubling truncation until either the order is found or the truncation
/// exceeds the mixed volume bound. Throws InvalidInput when p is not on Z(f)
/// or f is singular at p.
SmoothIntersection intersection_multiplicity_smooth(const LaurentPolynomial& f, const LaurentPolynomial& g,
                                                    const TorusPoint& p, std::size_t initial_order = 8);

struct LineSumMultiplicity {
    std::size_t multiplicity = 0;
    std::vector<std::size_t> per_line;
    MultiplicityCertificate certificate;
};
/// Origin multiplicity of (prod h_i, v) for pairwise independent linear
/// forms h_i: the sum over lines of ord_t v along h_i = 0. Throws
/// InvalidInput for non-linear or dependent forms and
/// VerificationFailure when some h_i divides v.
LineSumMultiplicity origin_multiplicity_line_product(const std::vector<LaurentPolynomial>& lines,
                                                     const LaurentPolynomial& v);

struct RankImpossibility {
    Rational determinant;
    MultiplicityCertificate certificate;
};
/// det of the k x k matrix (a_j^i), i = 0..k-1. Non-zero for distinct
/// exponents, so no non-zero coefficient vector reaches multiplicity k at 1.
RankImpossibility rank_impossibility(const std::vector<std::int64_t>& exponents);

}  // namespace sparsemult

#endif  // SPARSEMULT_VERIFY_HPP
