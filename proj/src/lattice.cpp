#include "sparsemult/lattice.hpp"

#include "sparsemult/errors.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>
#include <utility>

namespace sparsemult {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("lattice coordinate overflow");
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("lattice coordinate overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("lattice coordinate overflow");
    return r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Returns g = gcd(a, b) >= 0 with s*a + t*b = g.
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& s, std::int64_t& t) {
    std::int64_t old_r = a, r = b, old_s = 1, s1 = 0, old_t = 0, t1 = 1;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_s = std::exchange(s1, old_s - q * s1);
        old_t = std::exchange(t1, old_t - q * t1);
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    s = old_s;
    t = old_t;
    return old_r;
}

using Matrix = UnimodularAffineMap::Matrix;

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    Matrix c{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            c[i][j] = checked_add(checked_mul(a[i][0], b[0][j]), checked_mul(a[i][1], b[1][j]));
    return c;
}

LatticePoint mat_apply(const Matrix& m, LatticePoint p) {
    return {checked_add(checked_mul(m[0][0], p.x), checked_mul(m[0][1], p.y)),
            checked_add(checked_mul(m[1][0], p.x), checked_mul(m[1][1], p.y))};
}

}  // namespace

LatticePoint operator+(LatticePoint a, LatticePoint b) { return {checked_add(a.x, b.x), checked_add(a.y, b.y)}; }

LatticePoint operator-(LatticePoint a, LatticePoint b) { return {checked_sub(a.x, b.x), checked_sub(a.y, b.y)}; }

std::int64_t cross(LatticePoint a, LatticePoint b) { return checked_sub(checked_mul(a.x, b.y), checked_mul(a.y, b.x)); }

// --- SupportSet -------------------------------------------------------------

SupportSet::SupportSet(std::vector<LatticePoint> points) : points_(std::move(points)) {
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

SupportSet::SupportSet(std::initializer_list<LatticePoint> points) : SupportSet(std::vector<LatticePoint>(points)) {}

bool SupportSet::contains(LatticePoint p) const { return std::binary_search(points_.begin(), points_.end(), p); }

bool SupportSet::is_subset_of(const SupportSet& other) const {
    return std::includes(other.points_.begin(), other.points_.end(), points_.begin(), points_.end());
}

SupportSet SupportSet::translated(LatticePoint shift) const {
    std::vector<LatticePoint> out;
    out.reserve(points_.size());
    for (const auto& p : points_) out.push_back(p + shift);
    return SupportSet(std::move(out));
}

// --- UnimodularAffineMap ----------------------------------------------------

UnimodularAffineMap::UnimodularAffineMap(Matrix matrix, LatticePoint shift) : matrix_(matrix), shift_(shift) {
    const auto d = det();
    if (d != 1 && d != -1) throw InvalidInput("matrix is not unimodular (det = " + std::to_string(d) + ")");
}

std::int64_t UnimodularAffineMap::det() const {
    return checked_sub(checked_mul(matrix_[0][0], matrix_[1][1]), checked_mul(matrix_[0][1], matrix_[1][0]));
}

LatticePoint UnimodularAffineMap::apply(LatticePoint p) const { return mat_apply(matrix_, p) + shift_; }

LatticePoint UnimodularAffineMap::apply_linear(LatticePoint v) const { return mat_apply(matrix_, v); }

UnimodularAffineMap UnimodularAffineMap::compose(const UnimodularAffineMap& inner) const {
    return {mat_mul(matrix_, inner.matrix_), mat_apply(matrix_, inner.shift_) + shift_};
}

UnimodularAffineMap UnimodularAffineMap::inverse() const {
    const auto d = det();
    const Matrix inv{{{matrix_[1][1] * d, -matrix_[0][1] * d}, {-matrix_[1][0] * d, matrix_[0][0] * d}}};
    const auto s = mat_apply(inv, shift_);
    return {inv, LatticePoint{-s.x, -s.y}};
}

// --- hulls and regions ------------------------------------------------------

LatticePolygon convex_hull(const SupportSet& s) {
    if (s.empty()) throw InvalidInput("convex hull of an empty set");
    const auto pts = s.points();
    if (pts.size() == 1) return {{pts.front()}, 0};

    // Andrew's monotone chain; strict turns only, so collinear points drop out.
    std::vector<LatticePoint> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0) --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        const auto& p = pts[i];
        while (k >= lower && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0) --k;
        hull[k++] = p;
    }
    hull.resize(k - 1);
    if (hull.size() <= 2) return {{pts.front(), pts.back()}, 1};
    return {std::move(hull), 2};
}

bool contains(const LatticePolygon& p, LatticePoint q) {
    const auto& v = p.vertices;
    switch (p.dim) {
        case 0:
            return q == v[0];
        case 1: {
            if (cross(v[1] - v[0], q - v[0]) != 0) return false;
            return std::min(v[0].x, v[1].x) <= q.x && q.x <= std::max(v[0].x, v[1].x) &&
                   std::min(v[0].y, v[1].y) <= q.y && q.y <= std::max(v[0].y, v[1].y);
        }
        default:
            for (std::size_t i = 0; i < v.size(); ++i) {
                const auto& a = v[i];
                const auto& b = v[(i + 1) % v.size()];
                if (cross(b - a, q - a) < 0) return false;
            }
            return true;
    }
}

namespace {

struct Box {
    std::int64_t x0, x1, y0, y1;
};

Box bounding_box(std::span<const LatticePoint> pts) {
    Box b{pts[0].x, pts[0].x, pts[0].y, pts[0].y};
    for (const auto& p : pts) {
        b.x0 = std::min(b.x0, p.x);
        b.x1 = std::max(b.x1, p.x);
        b.y0 = std::min(b.y0, p.y);
        b.y1 = std::max(b.y1, p.y);
    }
    return b;
}

}  // namespace

SupportSet lattice_points(const LatticePolygon& p) {
    const Box box = bounding_box(p.vertices);
    std::vector<LatticePoint> out;
    for (auto x = box.x0; x <= box.x1; ++x)
        for (auto y = box.y0; y <= box.y1; ++y)
            if (contains(p, {x, y})) out.push_back({x, y});
    return SupportSet(std::move(out));
}

std::int64_t area2(const LatticePolygon& p) {
    if (p.dim < 2) return 0;
    std::int64_t twice = 0;
    const auto& v = p.vertices;
    for (std::size_t i = 0; i < v.size(); ++i) twice = checked_add(twice, cross(v[i], v[(i + 1) % v.size()]));
    return twice < 0 ? -twice : twice;
}

LatticePolygon minkowski_sum(const LatticePolygon& p, const LatticePolygon& q) {
    std::vector<LatticePoint> sums;
    if (p.dim == 2 && q.dim == 2) {
        // Merge the edge sequences by polar angle, both starting at the
        // lowest (then leftmost) vertex.
        auto rotate_lowest = [](std::vector<LatticePoint> v) {
            auto lowest = std::min_element(v.begin(), v.end(), [](const auto& a, const auto& b) {
                return std::tie(a.y, a.x) < std::tie(b.y, b.x);
            });
            std::rotate(v.begin(), lowest, v.end());
            return v;
        };
        auto a = rotate_lowest(p.vertices);
        auto b = rotate_lowest(q.vertices);
        const std::size_t n = a.size(), m = b.size();
        a.push_back(a[0]);
        a.push_back(a[1]);
        b.push_back(b[0]);
        b.push_back(b[1]);
        std::size_t i = 0, j = 0;
        while (i < n || j < m) {
            sums.push_back(a[i] + b[j]);
            const auto c = cross(a[i + 1] - a[i], b[j + 1] - b[j]);
            if (c >= 0 && i < n) ++i;
            if (c <= 0 && j < m) ++j;
        }
    } else {
        for (const auto& u : p.vertices)
            for (const auto& w : q.vertices) sums.push_back(u + w);
    }
    return convex_hull(SupportSet(std::move(sums)));
}

SupportSet erode(const LatticePolygon& p, const SupportSet& b) {
    if (b.empty()) throw InvalidInput("erosion by an empty set");
    const auto probe = convex_hull(b).vertices;  // region is convex, extreme points suffice
    const Box pb = bounding_box(p.vertices);
    const Box bb = bounding_box(b.points());
    std::vector<LatticePoint> out;
    for (auto x = pb.x0 - bb.x0; x <= pb.x1 - bb.x1; ++x)
        for (auto y = pb.y0 - bb.y0; y <= pb.y1 - bb.y1; ++y) {
            const LatticePoint c{x, y};
            if (std::all_of(probe.begin(), probe.end(), [&](const auto& v) { return contains(p, c + v); }))
                out.push_back(c);
        }
    return SupportSet(std::move(out));
}

SupportSet erode_set(const SupportSet& a, const SupportSet& b) {
    if (b.empty()) throw InvalidInput("erosion by an empty set");
    const auto b0 = *b.begin();
    std::vector<LatticePoint> out;
    for (const auto& p : a) {
        const auto c = p - b0;
        if (std::all_of(b.begin(), b.end(), [&](const auto& v) { return a.contains(c + v); })) out.push_back(c);
    }
    return SupportSet(std::move(out));
}

std::int64_t mixed_volume(const LatticePolygon& p, const LatticePolygon& q) {
    const auto twice = area2(minkowski_sum(p, q)) - area2(p) - area2(q);
    return twice / 2;
}

PickCounts pick_counts(const LatticePolygon& p) {
    if (p.dim != 2) throw InvalidInput("Pick counts need a full-dimensional polygon");
    std::int64_t boundary = 0;
    const auto& v = p.vertices;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto d = v[(i + 1) % v.size()] - v[i];
        boundary += std::gcd(d.x, d.y);
    }
    const auto a2 = area2(p);
    const PickCounts out{(a2 - boundary + 2) / 2, boundary};
    if (a2 != 2 * out.interior + out.boundary - 2) throw VerificationFailure("Pick identity violated");
    return out;
}

bool is_segment(const SupportSet& s) {
    if (s.empty()) throw InvalidInput("collinearity test on an empty set");
    return convex_hull(s).dim < 2;
}

std::optional<std::int64_t> primitivity_index(const SupportSet& a, const SupportSet& b) {
    if (a.empty() || b.empty()) throw InvalidInput("primitivity index of an empty set");
    std::vector<LatticePoint> gens;
    for (const auto& p : a) gens.push_back(p - *a.begin());
    for (const auto& p : b) gens.push_back(p - *b.begin());
    std::int64_t g = 0;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) g = std::gcd(g, cross(gens[i], gens[j]));
    if (g == 0) return std::nullopt;
    return g;
}

// --- canonical forms --------------------------------------------------------

LatticePoint primitive(LatticePoint v) {
    const auto g = std::gcd(v.x, v.y);
    if (g == 0) throw InvalidInput("primitive direction of the zero vector");
    return {v.x / g, v.y / g};
}

Matrix basis_completion(LatticePoint e) {
    std::int64_t s, t;
    if (ext_gcd(e.x, e.y, s, t) != 1) throw InvalidInput("basis completion of a non-primitive vector");
    return {{{s, t}, {-e.y, e.x}}};
}

SupportSet apply_map(const UnimodularAffineMap& m, const SupportSet& s) {
    std::vector<LatticePoint> out;
    out.reserve(s.size());
    for (const auto& p : s) out.push_back(m.apply(p));
    return SupportSet(std::move(out));
}

namespace {

// Candidate normalizing maps: one per (hull vertex, incident edge).
std::vector<UnimodularAffineMap> frame_candidates(const SupportSet& s, const LatticePolygon& hull) {
    std::vector<UnimodularAffineMap> out;
    const auto& v = hull.vertices;
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& here = v[i];
        for (int side = 0; side < 2; ++side) {
            const auto& along = v[side == 0 ? (i + 1) % n : (i + n - 1) % n];
            const auto& other = v[side == 0 ? (i + n - 1) % n : (i + 1) % n];
            Matrix m = basis_completion(primitive(along - here));
            // The polygon lies on one side of the edge line; put it above.
            if (mat_apply(m, other - here).y < 0) m = mat_mul(Matrix{{{1, 0}, {0, -1}}}, m);
            const auto w = mat_apply(m, other - here);
            const auto k = -floor_div(w.x, w.y);
            m = mat_mul(Matrix{{{1, k}, {0, 1}}}, m);
            const auto shifted = mat_apply(m, here);
            out.emplace_back(m, LatticePoint{-shifted.x, -shifted.y});
        }
    }
    (void)s;
    return out;
}

}  // namespace

NormalForm normal_form(const SupportSet& s) {
    if (s.empty()) throw InvalidInput("normal form of an empty set");
    const auto hull = convex_hull(s);
    if (hull.dim == 0) {
        const auto m = UnimodularAffineMap::translation({-hull.vertices[0].x, -hull.vertices[0].y});
        return {apply_map(m, s), m};
    }
    if (hull.dim == 1) {
        const auto e = primitive(hull.vertices[1] - hull.vertices[0]);
        const Matrix u = basis_completion(e);
        std::optional<NormalForm> best;
        for (const Matrix& m : {u, mat_mul(Matrix{{{-1, 0}, {0, 1}}}, u)}) {
            // Every point maps onto a horizontal line; anchor the leftmost at the origin.
            auto image = apply_map(UnimodularAffineMap(m, {}), s);
            const auto anchor = *image.begin();
            const UnimodularAffineMap map(m, LatticePoint{-anchor.x, -anchor.y});
            NormalForm cand{apply_map(map, s), map};
            if (!best || cand.form < best->form) best = std::move(cand);
        }
        return *best;
    }
    std::optional<NormalForm> best;
    for (const auto& map : frame_candidates(s, hull)) {
        NormalForm cand{apply_map(map, s), map};
        if (!best || cand.form < best->form) best = std::move(cand);
    }
    return *best;
}

std::vector<UnimodularAffineMap> normalizing_maps(const SupportSet& s) {
    const auto hull = convex_hull(s);
    if (hull.dim < 2) throw InvalidInput("normalizing maps are only enumerated for full-dimensional sets");
    const auto target = normal_form(s).form;
    std::vector<UnimodularAffineMap> out;
    for (const auto& map : frame_candidates(s, hull))
        if (apply_map(map, s) == target && std::find(out.begin(), out.end(), map) == out.end()) out.push_back(map);
    return out;
}

std::span<const Matrix> projective_monomial_group() {
    // Exponent actions of the permutations of [x : y : 1].
    static const std::array<Matrix, 6> group{{
        {{{1, 0}, {0, 1}}},
        {{{0, 1}, {1, 0}}},
        {{{1, 0}, {-1, -1}}},
        {{{-1, -1}, {1, 0}}},
        {{{0, 1}, {-1, -1}}},
        {{{-1, -1}, {0, 1}}},
    }};
    return group;
}

SupportSet translate_to_origin(const SupportSet& s) {
    if (s.empty()) return s;
    const auto p = *s.begin();
    return s.translated({-p.x, -p.y});
}

SupportSet projective_normal_form(const SupportSet& s) {
    std::optional<SupportSet> best;
    for (const auto& m : projective_monomial_group()) {
        auto cand = translate_to_origin(apply_map(UnimodularAffineMap(m, {}), s));
        if (!best || cand < *best) best = std::move(cand);
    }
    return *best;
}

}  // namespace sparsemult
