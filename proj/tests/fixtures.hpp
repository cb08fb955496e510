#pragma once

// Shared inputs for the test suites.

#include <initializer_list>
#include <vector>

#include "toricqh/catalog.hpp"
#include "toricqh/exact.hpp"
#include "toricqh/fan.hpp"
#include "toricqh/lattice_geometry.hpp"

namespace toricqh::test {

inline LatticeVector lv(std::initializer_list<long> xs) {
    LatticeVector v(xs.size());
    std::size_t i = 0;
    for (long x : xs) v[i++] = x;
    return v;
}

inline RationalVector rv(std::initializer_list<long> xs) { return RationalVector(lv(xs)); }

inline std::vector<LatticeVector> lvs(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<LatticeVector> out;
    for (auto r : rows) out.push_back(lv(r));
    return out;
}

/// Vertices of the ray polytope of the 4-fold U8, in the order they are
/// usually listed: e1, e2, e3, e4, -e1+e4, -e2+e4, e2-e4, -e2, -e4, -e3-e4.
inline std::vector<LatticeVector> u8_rays() {
    return lvs({{1, 0, 0, 0},
                {0, 1, 0, 0},
                {0, 0, 1, 0},
                {0, 0, 0, 1},
                {-1, 0, 0, 1},
                {0, -1, 0, 1},
                {0, 1, 0, -1},
                {0, -1, 0, 0},
                {0, 0, 0, -1},
                {0, 0, -1, -1}});
}

inline Polytope u8_dual() { return Polytope::from_points(u8_rays(), LatticeSide::N); }

inline Polytope box(std::size_t d, long lo, long hi) {
    std::vector<LatticeVector> pts;
    for (std::size_t mask = 0; mask < (std::size_t(1) << d); ++mask) {
        LatticeVector v(d);
        for (std::size_t i = 0; i < d; ++i) v[i] = (mask >> i & 1) ? hi : lo;
        pts.push_back(v);
    }
    return Polytope::from_points(pts, LatticeSide::M);
}

inline Polytope unit_simplex(std::size_t d) {
    std::vector<LatticeVector> pts{LatticeVector(d)};
    for (std::size_t i = 0; i < d; ++i) pts.push_back(LatticeVector::unit(d, i));
    return Polytope::from_points(pts, LatticeSide::M);
}

/// Fan over the faces of conv(rays), rays numbered as given.
inline Fan fan_of(const std::vector<LatticeVector>& rays) {
    return fan_from_reflexive(Polytope::from_points(rays, LatticeSide::N)).with_ray_order(rays);
}

inline Fan cp2_fan() { return fan_of(lvs({{1, 0}, {0, 1}, {-1, -1}})); }
inline Fan cp1_fan() { return fan_of(lvs({{1}, {-1}})); }
inline Fan bl1_fan() { return fan_of(lvs({{1, 0}, {0, 1}, {0, -1}, {-1, -1}})); }

}  // namespace toricqh::test
