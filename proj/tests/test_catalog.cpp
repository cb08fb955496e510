#include <map>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "toricqh/catalog.hpp"
#include "toricqh/landau_ginzburg.hpp"

using namespace toricqh;
using namespace toricqh::test;

TEST_CASE("catalog health") {
    std::map<std::size_t, int> by_dim;
    for (const auto& e : catalog()) {
        CAPTURE(e.name);
        const auto v = check_entry(e);
        CHECK_MESSAGE(v.ok, v.diagnostic);
        CHECK(check_fan_axioms(e.build().fan()).ok);
        ++by_dim[e.dim];
    }
    CHECK(by_dim[2] == 5);
    CHECK(catalog().size() == 14);
    CHECK(catalog_entry("u8")->build().fan().rays().size() == 10);
    CHECK(catalog_entry("u8")->build().fan().maximal_cones().size() == 24);
    CHECK_FALSE(catalog_entry("nonsense").has_value());
}

TEST_CASE("maximal cone counts") {
    const std::map<std::string, std::size_t> expect{
        {"cp1", 2},     {"cp2", 3},          {"cp3", 4},          {"cp4", 5},           {"cp5", 6},
        {"cp6", 7},     {"cp1xcp1", 4},      {"bl1_cp2", 4},      {"bl2_cp2", 5},       {"bl3_cp2", 6},
        {"bl_points3", 12}, {"bl_points4", 20}, {"bl_points5", 30}, {"u8", 24}};
    for (const auto& e : catalog()) CHECK(e.build().fan().maximal_cones().size() == expect.at(e.name));
}

TEST_CASE("Fano entries: cone count equals the normalized volume of the ray polytope") {
    for (const auto& e : catalog()) {
        if (!e.fano) continue;
        CAPTURE(e.name);
        const auto f = e.build().fan();
        const auto dual = Polytope::from_points(f.rays(), LatticeSide::N);
        CHECK(Integer(f.maximal_cones().size()) == normalized_volume(dual));
        CHECK(is_reflexive(dual).ok);
    }
}

TEST_CASE("blow-up of CP^d at its fixed points") {
    for (std::size_t d = 2; d <= 5; ++d) {
        const auto f = bl_points_fan(d);
        CHECK(f.rays().size() == 2 * d + 2);
        CHECK(is_smooth(f).smooth);
        CHECK(is_complete(f));
        CHECK(check_fan_axioms(f).ok);
        CHECK(is_strictly_convex(bl_points_support(d)).strictly_convex);
        CHECK(is_strictly_convex(monotone_support(f)).strictly_convex == (d == 2));
    }
    // W = Σ x_j + Σ 1/x_j + Π x_j + Π 1/x_j.
    const auto w = build_potential(bl_points_fan(3), bl_points_support(3));
    CHECK(render(w, RenderMode::Numeric) ==
          "x1 + x2 + x3 + x1^{-1} + x2^{-1} + x3^{-1} + x1 x2 x3 + x1^{-1} x2^{-1} x3^{-1}");

    // For d = 2 it is bl3_cp2 after a unimodular change of basis: (x, y) -> (x, -y)
    // followed by a shear sends the hexagon's rays to the other hexagon's rays.
    const auto a = bl_points_fan(2).rays();
    const auto b = bl_cp2_fan(3).rays();
    std::set<LatticeVector> target(b.begin(), b.end());
    bool found = false;
    const long mats[][4] = {{1, 0, 0, 1}, {1, 0, 0, -1}, {0, 1, 1, 0}, {0, -1, 1, 0}, {1, -1, 0, -1}, {1, 0, 1, -1},
                            {-1, 0, 0, -1}, {1, 1, 0, -1}, {0, 1, -1, 0}, {-1, 0, 0, 1}};
    for (const auto& g : mats) {
        std::set<LatticeVector> image;
        for (const auto& n : a) image.insert(lv({g[0] * n[0].convert_to<long>() + g[1] * n[1].convert_to<long>(),
                                                 g[2] * n[0].convert_to<long>() + g[3] * n[1].convert_to<long>()}));
        found = found || image == target;
    }
    CHECK(found);
}
