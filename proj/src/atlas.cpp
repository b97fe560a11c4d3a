#include "sparsemult/atlas.hpp"

#include "sparsemult/errors.hpp"

#include <algorithm>
#include <set>

namespace sparsemult {

// --- triangles --------------------------------------------------------------

std::vector<SupportSet> atlas_triangles(std::int64_t box) {
    std::vector<LatticePoint> grid;
    for (std::int64_t x = 0; x <= box; ++x)
        for (std::int64_t y = 0; y <= box; ++y) grid.push_back({x, y});
    std::set<SupportSet> forms;
    for (std::size_t i = 0; i < grid.size(); ++i)
        for (std::size_t j = i + 1; j < grid.size(); ++j)
            for (std::size_t k = j + 1; k < grid.size(); ++k) {
                if (cross(grid[j] - grid[i], grid[k] - grid[i]) == 0) continue;
                forms.insert(projective_normal_form(SupportSet{grid[i], grid[j], grid[k]}));
            }
    return {forms.begin(), forms.end()};
}

namespace {

TriangleAtlasEntry classify_triangle_entry(const SupportSet& t) {
    TriangleAtlasEntry e;
    e.triangle = t;
    const auto p = t.points();
    const LatticePoint d1 = p[1] - p[0], d2 = p[2] - p[0];
    try {
        hessian_at_one(d1.x, d1.y, d2.x, d2.y);
    } catch (const VerificationFailure&) {
        e.identities_ok = false;
    }
    try {
        const TriangleClass c = triangle_inflection(t);
        e.has_inflection = c.has_inflection;
        e.family = c.family;
    } catch (const VerificationFailure& ex) {
        e.error = ex.what();
    }
    return e;
}

TriangleAtlas summarize(std::int64_t box, std::vector<TriangleAtlasEntry> entries) {
    TriangleAtlas a;
    a.box = box;
    for (const auto& e : entries) {
        if (!e.error.empty()) ++a.mismatches;
        else if (e.has_inflection) ++a.has_inflection;
        else ++a.family_counts[e.family];
        if (!e.identities_ok) ++a.identity_failures;
    }
    a.entries = std::move(entries);
    return a;
}

}  // namespace

TriangleAtlas triangle_atlas_serial(std::int64_t box) {
    const auto tris = atlas_triangles(box);
    std::vector<TriangleAtlasEntry> out;
    out.reserve(tris.size());
    for (const auto& t : tris) out.push_back(classify_triangle_entry(t));
    return summarize(box, std::move(out));
}

TriangleAtlas triangle_atlas_parallel(std::int64_t box) {
    const auto tris = atlas_triangles(box);
    std::vector<TriangleAtlasEntry> out(tris.size());
    const auto n = static_cast<long>(tris.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (long i = 0; i < n; ++i) out[i] = classify_triangle_entry(tris[i]);
    return summarize(box, std::move(out));
}

Json to_json(const TriangleAtlas& a, bool include_entries) {
    Json fam = Json::object();
    for (int f = 1; f <= 4; ++f) fam[std::to_string(f)] = a.family_counts[f];
    Json j{{"box", a.box},
           {"classes", a.entries.size()},
           {"has_inflection", a.has_inflection},
           {"no_inflection_by_family", fam},
           {"identity_failures", a.identity_failures},
           {"mismatches", a.mismatches}};
    Json errs = Json::array();
    for (const auto& e : a.entries)
        if (!e.error.empty()) errs.push_back({{"triangle", to_json(e.triangle)}, {"error", e.error}});
    j["mismatch_details"] = errs;
    if (include_entries) {
        Json es = Json::array();
        for (const auto& e : a.entries)
            es.push_back({{"triangle", to_json(e.triangle)},
                          {"verdict", e.has_inflection ? "HasInflection" : "NoInflection"},
                          {"family", e.family}});
        j["entries"] = es;
    }
    return j;
}

// --- pairs ------------------------------------------------------------------

std::vector<SupportSet> convex_sets_in_box(std::int64_t box) {
    std::vector<LatticePoint> grid;
    for (std::int64_t x = 0; x < box; ++x)
        for (std::int64_t y = 0; y < box; ++y) grid.push_back({x, y});
    if (grid.size() > 20) throw InvalidInput("box too large for subset enumeration");
    std::set<SupportSet> forms;
    for (std::uint32_t mask = 1; mask < (1u << grid.size()); ++mask) {
        std::vector<LatticePoint> pts;
        for (std::size_t i = 0; i < grid.size(); ++i)
            if (mask & (1u << i)) pts.push_back(grid[i]);
        const SupportSet s(pts);
        if (lattice_points(convex_hull(s)) != s) continue;
        forms.insert(normal_form(s).form);
    }
    return {forms.begin(), forms.end()};
}

namespace {

bool full_dimensional(const SupportSet& s) { return s.size() >= 3 && !is_segment(s); }

std::pair<SupportSet, SupportSet> oriented_key(const SupportSet& a, const SupportSet& b) {
    if (full_dimensional(a)) {
        std::optional<SupportSet> best;
        for (const auto& m : normalizing_maps(a)) {
            SupportSet img = translate_to_origin(apply_map(m, b));
            if (!best || img < *best) best = std::move(img);
        }
        return {normal_form(a).form, *best};
    }
    if (full_dimensional(b)) {
        std::optional<SupportSet> best;
        for (const auto& m : normalizing_maps(b)) {
            SupportSet img = translate_to_origin(apply_map(m, a));
            if (!best || img < *best) best = std::move(img);
        }
        return {*best, normal_form(b).form};
    }
    return {translate_to_origin(a), translate_to_origin(b)};
}

}  // namespace

std::pair<SupportSet, SupportSet> pair_key(const SupportSet& a, const SupportSet& b) {
    auto k1 = oriented_key(a, b);
    auto k2 = oriented_key(b, a);
    std::swap(k2.first, k2.second);
    // transposition: the unordered pair is represented by its smallest ordering
    auto sw = [](const std::pair<SupportSet, SupportSet>& p) { return std::pair{p.second, p.first}; };
    return std::min({k1, sw(k1), k2, sw(k2)});
}

std::vector<std::pair<SupportSet, SupportSet>> atlas_pairs(std::int64_t box) {
    // Both supports range over every convex set in the box (not only the
    // class representatives), since the relative position matters.
    std::vector<LatticePoint> grid;
    for (std::int64_t x = 0; x < box; ++x)
        for (std::int64_t y = 0; y < box; ++y) grid.push_back({x, y});
    std::vector<SupportSet> sets;
    for (std::uint32_t mask = 1; mask < (1u << grid.size()); ++mask) {
        std::vector<LatticePoint> pts;
        for (std::size_t i = 0; i < grid.size(); ++i)
            if (mask & (1u << i)) pts.push_back(grid[i]);
        SupportSet s(pts);
        if (lattice_points(convex_hull(s)) == s) sets.push_back(std::move(s));
    }
    std::set<std::pair<SupportSet, SupportSet>> keys;
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i; j < sets.size(); ++j) keys.insert(pair_key(sets[i], sets[j]));
    return {keys.begin(), keys.end()};
}

namespace {

PairAtlasEntry decide_entry(const SupportSet& a, const SupportSet& b, std::uint64_t seed) {
    PairAtlasEntry e;
    e.a = a;
    e.b = b;
    e.mixed_volume = mixed_volume(convex_hull(a), convex_hull(b));
    try {
        const Mult3Report r = decide_mult3(a, b, seed);
        e.impossible = r.impossible;
        e.family = r.family ? r.family->family : 0;
        e.route = r.route;
        e.witness = r.witness_status;
        e.applicable_routes = r.applicable_routes;
        e.log = r.log;
    } catch (const Error& ex) {
        e.error = ex.what();
    }
    return e;
}

PairAtlas summarize(std::int64_t box, std::vector<PairAtlasEntry> entries) {
    PairAtlas a;
    a.box = box;
    for (const auto& e : entries) {
        if (!e.error.empty()) ++a.mismatches;
        else if (e.impossible) ++a.impossible;
        else if (e.witness == WitnessStatus::Verified) ++a.verified;
        else if (e.witness == WitnessStatus::ComplexOnly) ++a.complex_only;
        else if (e.applicable_routes.empty()) ++a.no_route;
        else ++a.unresolved;
    }
    a.entries = std::move(entries);
    return a;
}

}  // namespace

PairAtlas pair_atlas_serial(std::int64_t box, std::uint64_t seed) {
    const auto pairs = atlas_pairs(box);
    std::vector<PairAtlasEntry> out;
    out.reserve(pairs.size());
    for (const auto& [a, b] : pairs) out.push_back(decide_entry(a, b, seed));
    return summarize(box, std::move(out));
}

PairAtlas pair_atlas_parallel(std::int64_t box, std::uint64_t seed) {
    const auto pairs = atlas_pairs(box);
    std::vector<PairAtlasEntry> out(pairs.size());
    const auto n = static_cast<long>(pairs.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < n; ++i) out[i] = decide_entry(pairs[i].first, pairs[i].second, seed);
    return summarize(box, std::move(out));
}

Json to_json(const PairAtlas& a, bool include_entries) {
    Json j{{"box", a.box},
           {"pairs", a.entries.size()},
           {"impossible", a.impossible},
           {"achievable_verified", a.verified},
           {"achievable_complex_only", a.complex_only},
           {"achievable_no_applicable_route", a.no_route},
           {"achievable_unresolved", a.unresolved},
           {"mismatches", a.mismatches}};
    Json logged = Json::array();
    for (const auto& e : a.entries) {
        const bool noteworthy = !e.error.empty() || (!e.impossible && e.witness != WitnessStatus::Verified);
        if (!noteworthy && !include_entries) continue;
        Json x{{"A", to_json(e.a)}, {"B", to_json(e.b)}, {"mixed_volume", e.mixed_volume},
               {"verdict", e.impossible ? "Impossible" : "Achievable"}};
        if (e.family) x["family"] = e.family;
        if (!e.impossible) {
            x["route"] = e.route;
            x["witness"] = to_string(e.witness);
            x["applicable_routes"] = e.applicable_routes;
            x["log"] = e.log;
        }
        if (!e.error.empty()) x["error"] = e.error;
        logged.push_back(x);
    }
    j[include_entries ? "entries" : "logged_cases"] = logged;
    return j;
}

}  // namespace sparsemult
