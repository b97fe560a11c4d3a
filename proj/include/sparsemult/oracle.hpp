#ifndef SPARSEMULT_ORACLE_HPP
#define SPARSEMULT_ORACLE_HPP

#include "sparsemult/construct.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sparsemult {

enum class OracleVerdict { ProvedImpossible, FoundWitness, Inconclusive };
std::string to_string(OracleVerdict v);

/// Outcome of deciding whether (line-like curve on S, curve on C) can meet
/// at (1,1) with multiplicity >= target. A line-like support is a unimodular
/// triangle (curves are lines after a monomial change) or a two-point set
/// (curves are x^k = const, locally a line).
struct LineAnalysis {
    OracleVerdict verdict = OracleVerdict::Inconclusive;
    std::optional<ConstructedSystem> witness;
    std::string reason;
    Json transcript;
};

/// `line_points` must be a unimodular triangle or two points; `other` is the
/// second support. Curves on line_points are the f side of any witness.
LineAnalysis analyze_line_pencil(const SupportSet& line_points, const SupportSet& other, std::size_t target,
                                 std::size_t budget);

/// Unimodular triangles (area2 == 1) contained in s, in lexicographic order.
std::vector<SupportSet> unimodular_triangles(const SupportSet& s);

struct OracleOptions {
    std::size_t target = 3;
    /// Maximum number of minors evaluated per analysis.
    std::size_t budget = 20000;
    std::uint64_t seed = kDefaultSeed;
};

struct OracleResult {
    OracleVerdict verdict = OracleVerdict::Inconclusive;
    std::optional<ConstructedSystem> witness;
    /// Set for ProvedImpossible.
    std::optional<MultiplicityCertificate> certificate;
    /// Which support carries the line-like curve ("A" or "B"), or the constructive route used.
    std::string route;
    std::string reason;
};

/// Decides whether a system supported at (A, B) can have a torus root of
/// multiplicity >= target. Constructive routes are tried first; exact
/// elimination over the pencil of lines is decisive when one support is a
/// unimodular triangle or a two-point set. Throws InvalidInput when a
/// support has more than six points.
OracleResult elimination_mult3_oracle(const SupportSet& a, const SupportSet& b, const OracleOptions& opts = {});

Json to_json(const OracleResult& r);

/// Rebuilds the elimination certificate from its inputs.
MultiplicityCertificate replay_elimination(const Json& inputs);

/// Route helpers shared with the classifier. Each returns a verified system
/// supported at (A, B) (f on one support, g on the other) or nullopt.
std::optional<ConstructedSystem> prescribed_route(const SupportSet& a, const SupportSet& b, std::size_t target,
                                                  std::uint64_t seed);
/// `complex_only` is set when some pencil admits the contact only at
/// irrational slopes (existence over C, no rational witness).
std::optional<ConstructedSystem> line_route(const SupportSet& a, const SupportSet& b, std::size_t target,
                                            std::uint64_t seed, std::size_t budget = 20000,
                                            bool* complex_only = nullptr);

/// phi with phi(s) = {(0,0),(1,0),(0,1)} for a unimodular triangle s, or
/// phi(s) = {(0,0),(k,0)} with k > 0 for a two-point set.
UnimodularAffineMap standardizing_map(const SupportSet& s);

}  // namespace sparsemult

#endif  // SPARSEMULT_ORACLE_HPP
