#include <doctest.h>

#include "sparsemult/atlas.hpp"

#include <set>

using namespace sparsemult;

TEST_CASE("triangle atlas") {
    const auto tris = atlas_triangles(5);
    CHECK(tris.size() == 423);
    std::set<SupportSet> forms;
    for (const auto& t : tris) {
        CHECK(t.size() == 3);
        CHECK_FALSE(is_segment(t));
        forms.insert(projective_normal_form(t));
    }
    CHECK(forms.size() == tris.size());

    const auto serial = triangle_atlas_serial(5);
    CHECK(serial.entries.size() == 423);
    CHECK(serial.has_inflection == 402);
    CHECK(serial.family_counts[1] == 10);
    CHECK(serial.family_counts[2] == 2);
    CHECK(serial.family_counts[3] == 0);
    CHECK(serial.family_counts[4] == 9);
    CHECK(serial.mismatches == 0);
    CHECK(serial.identity_failures == 0);

    const auto par = triangle_atlas_parallel(5);
    CHECK(to_json(par, true) == to_json(serial, true));
}

TEST_CASE("convex sets and pair keys") {
    // one representative per normal-form class
    const auto sets = convex_sets_in_box(2);
    std::set<SupportSet> forms;
    for (const auto& s : sets) forms.insert(normal_form(s).form);
    CHECK(forms.size() == sets.size());

    const SupportSet tri{{0, 0}, {1, 0}, {0, 1}};
    const SupportSet seg{{0, 0}, {1, 1}};
    CHECK(pair_key(tri, seg) == pair_key(seg, tri));
    const UnimodularAffineMap g({{{1, 1}, {0, 1}}}, {0, 0});
    CHECK(pair_key(apply_map(g, tri).translated({3, -1}), apply_map(g, seg).translated({-2, 5})) == pair_key(tri, seg));
}

TEST_CASE("pair atlas, serial and parallel agree") {
    const auto serial = pair_atlas_serial(2);
    const auto par = pair_atlas_parallel(2);
    CHECK(to_json(par, true) == to_json(serial, true));
    CHECK(serial.impossible + serial.verified + serial.complex_only + serial.no_route + serial.unresolved +
              serial.mismatches ==
          serial.entries.size());
    CHECK(serial.mismatches == 0);
    CHECK(serial.unresolved == 0);
    for (const auto& e : serial.entries) CHECK(e.impossible == (e.mixed_volume <= 2));
}
