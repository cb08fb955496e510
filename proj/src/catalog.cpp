#include "toricqh/catalog.hpp"

#include "toricqh/errors.hpp"
#include "toricqh/lattice_geometry.hpp"

namespace toricqh {

namespace {

LatticeVector all_ones(std::size_t d, long sign) {
    LatticeVector v(d);
    for (auto& x : v) x = sign;
    return v;
}

LatticeVector vec(std::initializer_list<long> xs) {
    LatticeVector v(xs.size());
    std::size_t i = 0;
    for (long x : xs) v[i++] = x;
    return v;
}

// Fan over the faces of conv(rays), numbered as given.
Fan face_fan(const std::vector<LatticeVector>& rays) {
    return fan_from_reflexive(Polytope::from_points(rays, LatticeSide::N)).with_ray_order(rays);
}

CatalogEntry monotone_entry(std::string name, std::size_t dim, std::string description, std::function<Fan()> fan) {
    return {std::move(name), dim, true, std::move(description), [fan] { return monotone_support(fan()); }};
}

}  // namespace

Fan cp_fan(std::size_t d) {
    if (d == 0) throw DomainError("projective space needs d >= 1");
    std::vector<LatticeVector> rays;
    for (std::size_t i = 0; i < d; ++i) rays.push_back(LatticeVector::unit(d, i));
    rays.push_back(all_ones(d, -1));
    return face_fan(rays);
}

Fan cp1xcp1_fan() { return face_fan({vec({1, 0}), vec({0, 1}), vec({-1, 0}), vec({0, -1})}); }

Fan bl_cp2_fan(int k) {
    if (k < 1 || k > 3) throw DomainError("only blow-ups at 1, 2 or 3 fixed points are toric Fano");
    std::vector<LatticeVector> rays{vec({1, 0}), vec({0, 1}), vec({0, -1}), vec({-1, -1})};
    if (k >= 2) rays.push_back(vec({-1, 0}));
    if (k >= 3) rays.push_back(vec({1, 1}));
    return face_fan(rays);
}

// Star subdivision of the CP^d fan at each maximal cone. With e_0 = -(1,...,1),
// the cone omitting e_i is subdivided by the sum of its rays, which is -e_i,
// into the d cones obtained by swapping one of its rays for -e_i.
Fan bl_points_fan(std::size_t d) {
    if (d < 2) throw DomainError("bl_points needs d >= 2");
    std::vector<LatticeVector> rays;
    for (std::size_t j = 0; j < d; ++j) rays.push_back(LatticeVector::unit(d, j));
    for (std::size_t j = 0; j < d; ++j) rays.push_back(-LatticeVector::unit(d, j));
    rays.push_back(all_ones(d, 1));
    rays.push_back(all_ones(d, -1));
    // Index of e_i (i = 0 meaning e_0) and of -e_i.
    auto original = [d](std::size_t i) { return i == 0 ? 2 * d + 1 : i - 1; };
    auto exceptional = [d](std::size_t i) { return i == 0 ? 2 * d : d + i - 1; };
    std::vector<std::vector<std::size_t>> maximal;
    for (std::size_t i = 0; i <= d; ++i) {
        for (std::size_t j = 0; j <= d; ++j) {
            if (j == i) continue;
            std::vector<std::size_t> cone{exceptional(i)};
            for (std::size_t k = 0; k <= d; ++k) {
                if (k != i && k != j) cone.push_back(original(k));
            }
            maximal.push_back(std::move(cone));
        }
    }
    return Fan::from_maximal_cones(d, std::move(rays), std::move(maximal));
}

SupportFunction bl_points_support(std::size_t d) {
    const Fan f = bl_points_fan(d);
    std::vector<Rational> values(f.rays().size(), Rational(-1));
    for (std::size_t j = 0; j < d; ++j) values[d + j] = Rational(1) - Rational(d);
    values[2 * d] = Rational(1) - Rational(d);
    return SupportFunction(f, std::move(values));
}

Fan u8_fan() {
    return face_fan({vec({1, 0, 0, 0}), vec({0, 1, 0, 0}), vec({0, 0, 1, 0}), vec({0, 0, 0, 1}), vec({-1, 0, 0, 1}),
                     vec({0, -1, 0, 1}), vec({0, 1, 0, -1}), vec({0, -1, 0, 0}), vec({0, 0, 0, -1}),
                     vec({0, 0, -1, -1})});
}

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> out;
        for (std::size_t d = 1; d <= 6; ++d) {
            out.push_back(monotone_entry("cp" + std::to_string(d), d, "complex projective space of dimension " + std::to_string(d),
                                         [d] { return cp_fan(d); }));
        }
        out.push_back(monotone_entry("cp1xcp1", 2, "product of two projective lines", [] { return cp1xcp1_fan(); }));
        for (int k = 1; k <= 3; ++k) {
            out.push_back(monotone_entry("bl" + std::to_string(k) + "_cp2", 2,
                                         "projective plane blown up at " + std::to_string(k) + " fixed point" +
                                             (k > 1 ? "s" : ""),
                                         [k] { return bl_cp2_fan(k); }));
        }
        for (std::size_t d = 3; d <= 5; ++d) {
            out.push_back({"bl_points" + std::to_string(d), d, false,
                           "CP^" + std::to_string(d) + " blown up at its " + std::to_string(d + 1) +
                               " fixed points (not Fano)",
                           [d] { return bl_points_support(d); }});
        }
        out.push_back(monotone_entry("u8", 4, "non-semisimple toric Fano 4-fold with 10 rays", [] { return u8_fan(); }));
        return out;
    }();
    return entries;
}

std::optional<CatalogEntry> catalog_entry(const std::string& name) {
    for (const auto& e : catalog()) {
        if (e.name == name) return e;
    }
    return std::nullopt;
}

Verdict check_entry(const CatalogEntry& e) {
    const auto F = e.build();
    const Fan& f = F.fan();
    if (f.dim() != e.dim) return {false, e.name + ": dimension mismatch"};
    if (!is_smooth(f).smooth) return {false, e.name + ": fan is not smooth"};
    if (!is_complete(f)) return {false, e.name + ": fan is not complete"};
    if (!is_strictly_convex(F).strictly_convex) return {false, e.name + ": class is not strictly convex"};
    if (e.fano != is_strictly_convex(monotone_support(f)).strictly_convex) {
        return {false, e.name + (e.fano ? ": monotone class is not strictly convex" : ": unexpectedly Fano")};
    }
    return {true, ""};
}

}  // namespace toricqh
