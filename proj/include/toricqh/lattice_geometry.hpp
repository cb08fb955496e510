#pragma once

// Exact lattice-polytope computations: V/H conversion, duality, reflexivity,
// the Delzant condition, lattice volume and lattice-point enumeration.
//
// Everything here is exact rational arithmetic. Outputs are canonically
// ordered (lexicographic) so that reports built on top are byte-stable.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "toricqh/exact.hpp"

namespace toricqh {

/// Which lattice a polytope lives in: M (moment polytopes Δ) or the dual
/// lattice N (ray polytopes Δ*).
enum class LatticeSide { M, N };

inline LatticeSide flipped(LatticeSide s) { return s == LatticeSide::M ? LatticeSide::N : LatticeSide::M; }

/// Half-space {m : <m, normal> >= offset} with a primitive inner normal.
struct Facet {
    LatticeVector normal;
    Rational offset;

    friend bool operator==(const Facet&, const Facet&) = default;
};

/// Boolean answer plus a human-readable reason when the answer is "no".
struct Verdict {
    bool ok = true;
    std::string diagnostic;

    explicit operator bool() const { return ok; }
};

class Polytope {
public:
    /// Convex hull of `points`. Points that are not extreme are dropped and
    /// counted in dropped_points(). Throws NotFullDimensional.
    static Polytope from_points(std::vector<RationalVector> points, LatticeSide side);
    static Polytope from_points(const std::vector<LatticeVector>& points, LatticeSide side);

    /// Builds a polytope from a vertex list and an irredundant facet list
    /// that are already known to describe the same polytope (used by duality,
    /// products and moment polytopes, where both sides come for free).
    static Polytope from_description(std::vector<RationalVector> vertices, std::vector<Facet> facets,
                                     LatticeSide side);

    std::size_t dim() const noexcept { return dim_; }
    LatticeSide side() const noexcept { return side_; }
    const std::vector<RationalVector>& vertices() const noexcept { return vertices_; }
    const std::vector<Facet>& facets() const noexcept { return facets_; }
    /// Indices (into vertices()) of the vertices on facet k.
    const std::vector<std::size_t>& facet_vertices(std::size_t k) const { return incidence_[k]; }
    std::size_t dropped_points() const noexcept { return dropped_; }

    bool contains(const RationalVector& m) const;
    bool contains_in_interior(const RationalVector& m) const;
    RationalVector vertex_centroid() const;

private:
    Polytope(std::vector<RationalVector> vertices, std::vector<Facet> facets, LatticeSide side,
             std::size_t dropped);

    std::size_t dim_ = 0;
    std::vector<RationalVector> vertices_;
    std::vector<Facet> facets_;
    std::vector<std::vector<std::size_t>> incidence_;
    LatticeSide side_ = LatticeSide::M;
    std::size_t dropped_ = 0;
};

/// Irredundant facets of conv(points), sorted by normal. Throws
/// NotFullDimensional when the points lie in a proper affine subspace.
std::vector<Facet> convex_hull_facets(std::span<const RationalVector> points);

/// Δ* = {n : <m, n> >= -1 for all m in Δ}. Throws OriginNotInterior.
Polytope dual_polytope(const Polytope& p);

Verdict is_reflexive(const Polytope& p);

/// Integral points of p, sorted lexicographically.
std::vector<LatticeVector> lattice_points(const Polytope& p);
std::vector<LatticeVector> interior_lattice_points(const Polytope& p);

/// Vertex index pairs (i < j) joined by an edge.
std::vector<std::pair<std::size_t, std::size_t>> edges(const Polytope& p);

Verdict is_delzant(const Polytope& p);

/// Simplices (as vertex-index lists, apex omitted) of the triangulation of
/// the boundary of p used for coning from an interior apex.
std::vector<std::vector<std::size_t>> boundary_triangulation(const Polytope& p);

/// d! times the Euclidean volume, coned from `apex` (default: vertex centroid).
Rational normalized_volume(const Polytope& p);
Rational normalized_volume(const Polytope& p, const RationalVector& apex);

/// P x Q in the direct-sum lattice.
Polytope polytope_product(const Polytope& p, const Polytope& q);

}  // namespace toricqh
