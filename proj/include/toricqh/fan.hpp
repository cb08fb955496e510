#pragma once

// Simplicial fans given by ray generators and ray-index cones.

#include <cstddef>
#include <optional>
#include <vector>

#include "toricqh/exact.hpp"
#include "toricqh/lattice_geometry.hpp"

namespace toricqh {

/// A cone of a simplicial fan, identified by the sorted indices of its rays.
struct Cone {
    std::vector<std::size_t> rays;

    std::size_t dim() const noexcept { return rays.size(); }
    bool contains_ray(std::size_t r) const;

    friend bool operator==(const Cone&, const Cone&) = default;
    friend auto operator<=>(const Cone&, const Cone&) = default;
};

class Fan {
public:
    /// Builds the fan whose cones are the given maximal cones and all of
    /// their faces. Rays must be primitive and pairwise distinct.
    static Fan from_maximal_cones(std::size_t dim, std::vector<LatticeVector> rays,
                                  std::vector<std::vector<std::size_t>> maximal);

    std::size_t dim() const noexcept { return dim_; }
    const std::vector<LatticeVector>& rays() const noexcept { return rays_; }
    /// Σ^k, sorted.
    const std::vector<Cone>& cones(std::size_t k) const { return by_dim_.at(k); }
    /// Inclusion-maximal cones, sorted.
    const std::vector<Cone>& maximal_cones() const noexcept { return maximal_; }
    bool has_cone(const std::vector<std::size_t>& sorted_rays) const;

    bool simplicial() const noexcept { return simplicial_; }
    bool complete() const noexcept { return complete_; }
    /// Only meaningful for simplicial fans.
    bool smooth() const noexcept { return smooth_; }

    /// Same fan with rays renumbered to follow `order` (a permutation of rays()).
    Fan with_ray_order(const std::vector<LatticeVector>& order) const;

private:
    Fan() = default;

    std::size_t dim_ = 0;
    std::vector<LatticeVector> rays_;
    std::vector<std::vector<Cone>> by_dim_;
    std::vector<Cone> maximal_;
    std::vector<std::vector<std::size_t>> all_sorted_;
    bool simplicial_ = false;
    bool complete_ = false;
    bool smooth_ = false;
};

/// Fan over the faces of a reflexive polytope in N. Throws NotReflexive, or
/// NotSimplicial when some facet is not a simplex.
Fan fan_from_reflexive(const Polytope& dual);

struct SmoothnessReport {
    bool smooth = true;
    std::optional<Cone> offending;
};

/// Every maximal cone generated by part of a lattice basis. Throws NotSimplicial.
SmoothnessReport is_smooth(const Fan& f);

bool is_complete(const Fan& f);

struct ConeMembership {
    Cone cone;                          // minimal cone containing the vector
    std::vector<Integer> coefficients;  // one positive entry per ray of `cone`
};

/// The cone whose relative interior contains v, with v expressed in its rays.
ConeMembership minimal_cone_containing(const Fan& f, const LatticeVector& v);

/// Ray sets that span no cone although every proper subset does.
std::vector<std::vector<std::size_t>> primitive_collections(const Fan& f);

Fan fan_product(const Fan& f, const Fan& g);

/// Face closure, plus (for complete fans) the wall-crossing and covering
/// conditions that make the maximal cones intersect along common faces.
Verdict check_fan_axioms(const Fan& f);

}  // namespace toricqh
