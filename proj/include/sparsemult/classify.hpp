#ifndef SPARSEMULT_CLASSIFY_HPP
#define SPARSEMULT_CLASSIFY_HPP

#include "sparsemult/oracle.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sparsemult {

/// He(a): bordered Hessian of 1 + a x^n y^m - (1 + a) x^k y^l at (1,1).
/// Checks He(0) = -kl(k+l) and He(-1) = -mn(m+n); throws InvalidInput when
/// (0,0), (n,m), (k,l) are collinear.
UnivariatePolynomial hessian_at_one(std::int64_t n, std::int64_t m, std::int64_t k, std::int64_t l);

/// Θ(a) = (k-1)(a m + n)^2 - (1 + a) k (a (m-1) m + (n-1) n), the reduced
/// Hessian of x^n + a x^m - (1 + a) y^k.
UnivariatePolynomial theta(std::int64_t n, std::int64_t m, std::int64_t k);

struct TriangleClass {
    SupportSet triangle;
    bool has_inflection = false;
    /// 1..4 for NoInflection verdicts.
    int family = 0;
    /// Maps the triangle onto the family representative (NoInflection only).
    UnimodularAffineMap witness_map;
    UnivariatePolynomial hessian;
    /// hessian with the roots 0 and -1 divided out.
    UnivariatePolynomial reduced;
    /// Present when an edge is horizontal, vertical or anti-diagonal.
    std::optional<UnivariatePolynomial> theta;
    std::optional<UnivariatePolynomial> theta_reduced;
};

/// Throws InvalidInput for collinear input and VerificationFailure when the
/// Hessian verdict, the Θ cross-check and the family catalogue disagree.
TriangleClass triangle_inflection(const SupportSet& t);

Json to_json(const TriangleClass& c);

/// Family of the no-inflection catalogue that t belongs to up to
/// translations and projective_monomial_group(), with the map onto the
/// representative; nullopt when none.
struct TriangleFamilyMatch {
    int family = 0;
    UnimodularAffineMap map;
    SupportSet representative;
};
std::optional<TriangleFamilyMatch> match_triangle_family(const SupportSet& t);

struct FamilyMatch {
    /// 1: segment case, 2: A = B small body, 3: simplex against a 2-simplex.
    int family = 0;
    bool transposed = false;
    /// Segment measurements for family 1.
    std::size_t h = 0;
    std::size_t v = 0;
    std::string detail;
};
/// Membership in the catalogue of pairs with mixed volume at most 2.
std::optional<FamilyMatch> match_exceptional_family(const SupportSet& a, const SupportSet& b);
Json to_json(const FamilyMatch& m);

/// Segment measurements: seg is put horizontal by a unimodular map;
/// After mapping seg horizontal: h = |seg|, v = number of rows met by other.
struct SegmentShape {
    std::size_t h = 0;
    std::size_t v = 0;
    UnimodularAffineMap map;
};
/// seg must lie on a line (a single point counts).
SegmentShape segment_shape(const SupportSet& seg, const SupportSet& other);

enum class WitnessStatus { Verified, ComplexOnly, None };

struct Mult3Report {
    SupportSet a;
    SupportSet b;
    std::int64_t mixed_volume = 0;
    bool impossible = false;
    std::optional<FamilyMatch> family;
    /// "prescribed", "line", "segment" or "none".
    std::string route = "none";
    WitnessStatus witness_status = WitnessStatus::None;
    std::optional<ConstructedSystem> construction;
    /// Routes whose hypotheses held, in the order tried.
    std::vector<std::string> applicable_routes;
    /// Which routes applied and why they produced no rational witness.
    std::vector<std::string> log;
};

/// mv(A, B) <= 2 decides; Impossible verdicts must match the catalogue
/// (VerificationFailure otherwise) and Achievable ones try the constructive
/// routes in order.
Mult3Report decide_mult3(const SupportSet& a, const SupportSet& b, std::uint64_t seed = kDefaultSeed);
Json to_json(const Mult3Report& r);
std::string to_string(WitnessStatus s);

/// Multiplicity >= 3 through the segment case: p(x) q(x, y) with the
/// multiplicity split (m1, m2) in {(1,3), (3,1), (2,2)}.
std::optional<ConstructedSystem> segment_route(const SupportSet& a, const SupportSet& b, std::vector<std::string>* log = nullptr);

/// Normal forms of 4-point convex bodies containing a unimodular triangle.
std::vector<SupportSet> enumerate_four_point_bodies();

}  // namespace sparsemult

#endif  // SPARSEMULT_CLASSIFY_HPP
