#ifndef SPARSEMULT_ATLAS_HPP
#define SPARSEMULT_ATLAS_HPP

#include "sparsemult/classify.hpp"

#include <array>
#include <string>
#include <vector>

namespace sparsemult {

/// Non-degenerate triangles with vertices in [0, box]^2, one per class of
/// projective_normal_form, in sorted order.
std::vector<SupportSet> atlas_triangles(std::int64_t box);

struct TriangleAtlasEntry {
    SupportSet triangle;
    bool has_inflection = false;
    int family = 0;  // 0 when HasInflection
    bool identities_ok = true;  // He(0), He(-1)
    std::string error;  // non-empty on a classification mismatch
};

struct TriangleAtlas {
    std::int64_t box = 0;
    std::vector<TriangleAtlasEntry> entries;
    std::size_t has_inflection = 0;
    std::array<std::size_t, 5> family_counts{};  // index 1..4
    std::size_t identity_failures = 0;
    std::size_t mismatches = 0;
};

TriangleAtlas triangle_atlas_serial(std::int64_t box);
TriangleAtlas triangle_atlas_parallel(std::int64_t box);
Json to_json(const TriangleAtlas& a, bool include_entries = false);

/// Non-empty convex lattice sets (points, segments and polygons) inside
/// {0..box-1}^2, one per normal-form class.
std::vector<SupportSet> convex_sets_in_box(std::int64_t box);

/// Canonical key of an unordered pair under simultaneous GL(2,Z) maps and
/// independent translations. Exact when one support is full-dimensional;
/// pairs of segments are keyed up to translation only.
std::pair<SupportSet, SupportSet> pair_key(const SupportSet& a, const SupportSet& b);

/// All pair keys drawn from convex_sets_in_box(box), sorted.
std::vector<std::pair<SupportSet, SupportSet>> atlas_pairs(std::int64_t box);

struct PairAtlasEntry {
    SupportSet a, b;
    std::int64_t mixed_volume = 0;
    bool impossible = false;
    int family = 0;
    std::string route;
    WitnessStatus witness = WitnessStatus::None;
    std::vector<std::string> applicable_routes;
    std::vector<std::string> log;
    std::string error;  // mv verdict and catalogue disagree, or a route failed
};

struct PairAtlas {
    std::int64_t box = 0;
    std::vector<PairAtlasEntry> entries;
    std::size_t impossible = 0;
    std::size_t verified = 0;
    std::size_t complex_only = 0;
    std::size_t no_route = 0;  // Achievable, every route inapplicable
    std::size_t unresolved = 0;  // Achievable, some route applied, no witness
    std::size_t mismatches = 0;
};

PairAtlas pair_atlas_serial(std::int64_t box, std::uint64_t seed = kDefaultSeed);
PairAtlas pair_atlas_parallel(std::int64_t box, std::uint64_t seed = kDefaultSeed);
Json to_json(const PairAtlas& a, bool include_entries = false);

}  // namespace sparsemult

#endif  // SPARSEMULT_ATLAS_HPP
