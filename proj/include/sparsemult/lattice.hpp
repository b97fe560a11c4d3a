#ifndef SPARSEMULT_LATTICE_HPP
#define SPARSEMULT_LATTICE_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace sparsemult {

/// Point of Z^2. Arithmetic on points is overflow-checked and throws
/// ArithmeticOverflow instead of wrapping.
struct LatticePoint {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

LatticePoint operator+(LatticePoint a, LatticePoint b);
LatticePoint operator-(LatticePoint a, LatticePoint b);

/// cross(a, b) = a.x*b.y - a.y*b.x, overflow-checked.
std::int64_t cross(LatticePoint a, LatticePoint b);

/// Finite subset of Z^2, stored sorted and deduplicated so that equality is
/// set equality.
class SupportSet {
public:
    SupportSet() = default;
    explicit SupportSet(std::vector<LatticePoint> points);
    SupportSet(std::initializer_list<LatticePoint> points);

    std::span<const LatticePoint> points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    bool contains(LatticePoint p) const;
    /// True when every point of this set is in `other`.
    bool is_subset_of(const SupportSet& other) const;

    SupportSet translated(LatticePoint shift) const;

    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

    friend bool operator==(const SupportSet&, const SupportSet&) = default;
    friend auto operator<=>(const SupportSet& a, const SupportSet& b) { return a.points_ <=> b.points_; }

private:
    std::vector<LatticePoint> points_;
};

/// Convex lattice polygon. `vertices` are the extreme points in
/// counterclockwise order starting at the lexicographically smallest one;
/// dim 0 has one vertex, dim 1 has the two segment endpoints.
struct LatticePolygon {
    std::vector<LatticePoint> vertices;
    int dim = 0;

    friend bool operator==(const LatticePolygon&, const LatticePolygon&) = default;
};

/// p -> matrix * p + shift with |det(matrix)| = 1.
class UnimodularAffineMap {
public:
    using Matrix = std::array<std::array<std::int64_t, 2>, 2>;

    UnimodularAffineMap() = default;
    /// Throws InvalidInput unless |det(matrix)| == 1.
    UnimodularAffineMap(Matrix matrix, LatticePoint shift);

    static UnimodularAffineMap identity() { return {}; }
    static UnimodularAffineMap translation(LatticePoint shift) { return {{{{1, 0}, {0, 1}}}, shift}; }

    const Matrix& matrix() const { return matrix_; }
    LatticePoint shift() const { return shift_; }
    std::int64_t det() const;

    LatticePoint apply(LatticePoint p) const;
    /// Linear part only (for direction vectors).
    LatticePoint apply_linear(LatticePoint v) const;
    /// (this ∘ inner)(p) = this(inner(p)).
    UnimodularAffineMap compose(const UnimodularAffineMap& inner) const;
    UnimodularAffineMap inverse() const;

    friend bool operator==(const UnimodularAffineMap&, const UnimodularAffineMap&) = default;

private:
    Matrix matrix_{{{1, 0}, {0, 1}}};
    LatticePoint shift_{};
};

LatticePolygon convex_hull(const SupportSet& s);
/// Closed-region membership.
bool contains(const LatticePolygon& p, LatticePoint q);
SupportSet lattice_points(const LatticePolygon& p);
/// Twice the Euclidean area; 0 for degenerate polygons.
std::int64_t area2(const LatticePolygon& p);
LatticePolygon minkowski_sum(const LatticePolygon& p, const LatticePolygon& q);
/// { c : c + b in region(p) for every b in B }.
SupportSet erode(const LatticePolygon& p, const SupportSet& b);
/// { c : c + B ⊆ A } against the finite set A.
SupportSet erode_set(const SupportSet& a, const SupportSet& b);
/// Normalized so that mixed_volume(p, p) == area2(p).
std::int64_t mixed_volume(const LatticePolygon& p, const LatticePolygon& q);

struct PickCounts {
    std::int64_t interior = 0;
    std::int64_t boundary = 0;
};
/// Throws InvalidInput for degenerate polygons.
PickCounts pick_counts(const LatticePolygon& p);

/// All points collinear (a single point counts).
bool is_segment(const SupportSet& s);

/// Index in Z^2 of the lattice spanned by (A - a0) ∪ (B - b0); nullopt when
/// that lattice has rank < 2.
std::optional<std::int64_t> primitivity_index(const SupportSet& a, const SupportSet& b);

struct NormalForm {
    SupportSet form;
    /// Satisfies apply_map(map, input) == form.
    UnimodularAffineMap map;
};
/// Canonical representative under translations and GL(2,Z).
NormalForm normal_form(const SupportSet& s);

/// Every map M (matrix in GL(2,Z), shift) with apply_map(M, s) == normal_form(s).form.
/// Only defined for full-dimensional s; throws InvalidInput otherwise.
std::vector<UnimodularAffineMap> normalizing_maps(const SupportSet& s);

SupportSet apply_map(const UnimodularAffineMap& m, const SupportSet& s);

/// The six linear maps permuting the homogeneous coordinates [x:y:1]; on
/// exponents these are the lattice automorphisms of the standard simplex
/// (up to translation), i.e. the monomial changes that map lines to lines.
std::span<const UnimodularAffineMap::Matrix> projective_monomial_group();

/// Canonical representative under translations and projective_monomial_group().
SupportSet projective_normal_form(const SupportSet& s);

/// Translate so that the lexicographically smallest point is the origin.
SupportSet translate_to_origin(const SupportSet& s);

/// Primitive direction of v (v / gcd). v must be non-zero.
LatticePoint primitive(LatticePoint v);

/// A matrix U with det 1 and U * e = (1, 0) for primitive e.
UnimodularAffineMap::Matrix basis_completion(LatticePoint e);

}  // namespace sparsemult

#endif  // SPARSEMULT_LATTICE_HPP
