#pragma once

// Built-in smooth complete fans with a chosen symplectic class.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "toricqh/fan.hpp"
#include "toricqh/support_function.hpp"

namespace toricqh {

struct CatalogEntry {
    std::string name;
    std::size_t dim;
    /// Whether the monotone class is strictly convex, i.e. the entry is Fano.
    bool fano;
    std::string description;
    std::function<SupportFunction()> build;
};

/// CP^d: rays e_1..e_d, -(1,...,1).
Fan cp_fan(std::size_t d);
Fan cp1xcp1_fan();
/// CP^2 blown up at k ∈ {1,2,3} torus-fixed points. Rays (1,0), (0,1),
/// (0,-1), (-1,-1), then (-1,0) for k >= 2 and (1,1) for k = 3.
Fan bl_cp2_fan(int k);
/// CP^d blown up at its d+1 fixed points (d >= 2): rays e_j, then -e_j,
/// then (1,...,1) and -(1,...,1). Fano only for d = 2.
Fan bl_points_fan(std::size_t d);
/// The 4-fold whose dual polytope has vertices e1, e2, e3, e4, -e1+e4,
/// -e2+e4, e2-e4, -e2, -e4, -e3-e4 (rays in that order).
Fan u8_fan();

/// The class H' = (d+1)H - E_1 - ... - E_{d+1} on bl_points_fan(d): F = -1 on
/// the rays of CP^d and 1 - d on the exceptional rays. Strictly convex for
/// all d >= 2 and monotone for d = 2.
SupportFunction bl_points_support(std::size_t d);

/// cp1..cp6, cp1xcp1, bl1_cp2..bl3_cp2, bl_points3..bl_points5, u8.
const std::vector<CatalogEntry>& catalog();
std::optional<CatalogEntry> catalog_entry(const std::string& name);

/// Smooth, complete, and strictly convex for its chosen class; for Fano
/// entries the monotone class must be strictly convex too.
Verdict check_entry(const CatalogEntry& e);

}  // namespace toricqh
