#ifndef SPARSEMULT_CONSTRUCT_HPP
#define SPARSEMULT_CONSTRUCT_HPP

#include "sparsemult/branch.hpp"
#include "sparsemult/random.hpp"
#include "sparsemult/verify.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sparsemult {

/// A system (f, g) with certified roots. f is the smooth curve along which
/// multiplicities were measured; g is the osculating one.
struct ConstructedSystem {
    LaurentPolynomial f;
    LaurentPolynomial g;
    std::vector<TorusPoint> points;
    std::vector<std::size_t> multiplicities;
    /// true: each multiplicity is exact; false: a lower bound.
    bool exact = true;
    std::uint64_t seed = 0;
    std::size_t retries_used = 0;
    std::vector<MultiplicityCertificate> certificates;
};

Json to_json(const ConstructedSystem& s);
ConstructedSystem constructed_system_from_json(const Json& j);

struct DimV {
    std::size_t dim = 0;
    std::size_t bound = 0;
};
/// Dimension of { c * f supported in A } and the erosion bound |conv(A) ⊖ supp f|.
DimV compute_dim_V(const SupportSet& a, const LaurentPolynomial& f);

struct ConstructOptions {
    std::size_t retry_budget = 16;
    /// Overrides the default truncation m + |A| + 4.
    std::optional<std::size_t> truncation;
};

/// g on A meeting a random smooth f on B at (1,1) with multiplicity exactly m.
ConstructedSystem construct_prescribed(const SupportSet& a, const SupportSet& b, std::size_t m, std::uint64_t seed,
                                       const ConstructOptions& opts = {});

/// g on A meeting f on B at (i, 1), i = 1..l, with multiplicity at least m_i.
ConstructedSystem construct_multipoint(const SupportSet& a, const SupportSet& b, const std::vector<std::size_t>& ms,
                                       std::uint64_t seed, const ConstructOptions& opts = {});

/// f is a line through (1,1) with rational slope, g on A has contact order
/// exactly r with it.
ConstructedSystem line_contact_construct(const SupportSet& a, std::size_t r, std::uint64_t seed,
                                         const ConstructOptions& opts = {});

struct UnivariateConstruction {
    /// P(t) = t^shift * polynomial(t); shift < 0 only for negative exponents.
    std::optional<UnivariatePolynomial> polynomial;
    std::int64_t shift = 0;
    std::optional<UnivariateMultiplicity> verification;
    std::optional<RankImpossibility> impossibility;
};
/// Coefficients on `exponents` with a root of multiplicity exactly l at t = 1,
/// or the rank certificate when l >= |exponents|.
UnivariateConstruction construct_univariate(const std::vector<std::int64_t>& exponents, std::size_t l);

Json to_json(const UnivariateConstruction& u);

}  // namespace sparsemult

#endif  // SPARSEMULT_CONSTRUCT_HPP
