#pragma once

// Piecewise linear functions on a smooth complete fan, i.e. toric symplectic
// classes. F is stored by its values on the ray generators; on each maximal
// cone σ it agrees with a linear form m_σ.
//
// Conventions: the moment polytope is {m : <m, n_ρ> >= F(n_ρ)}, so the
// monotone class is F ≡ -1 and its moment polytope is the reflexive Δ whose
// dual carries the fan. (The canonical divisor would be F ≡ +1 instead.)

#include <optional>
#include <utility>
#include <vector>

#include "toricqh/exact.hpp"
#include "toricqh/fan.hpp"
#include "toricqh/lattice_geometry.hpp"

namespace toricqh {

class SupportFunction {
public:
    /// One value per ray of `fan`. The fan must be simplicial with
    /// full-dimensional maximal cones so that every m_σ is determined.
    SupportFunction(Fan fan, std::vector<Rational> values);

    const Fan& fan() const noexcept { return fan_; }
    const std::vector<Rational>& values() const noexcept { return values_; }
    const Rational& value(std::size_t ray) const { return values_[ray]; }
    /// m_σ for the i-th maximal cone of fan().
    const RationalVector& cone_form(std::size_t i) const { return forms_[i]; }

private:
    Fan fan_;
    std::vector<Rational> values_;
    std::vector<RationalVector> forms_;
};

SupportFunction monotone_support(const Fan& f);

struct ConvexityReport {
    bool strictly_convex = true;
    /// First (maximal cone index, ray index) with <m_σ, n_ρ> <= F(n_ρ).
    std::optional<std::pair<std::size_t, std::size_t>> violation;
};

ConvexityReport is_strictly_convex(const SupportFunction& F);

/// Sup-norm radius of value perturbations that provably keep F strictly
/// convex: min over σ and ρ ∉ σ of slack / (1 + |c|_1), where c are the
/// coordinates of n_ρ in the basis of σ. Zero if F is not strictly convex.
Rational convexity_margin(const SupportFunction& F);

/// Δ_F; its vertices are the forms m_σ. Throws NotStrictlyConvex.
Polytope moment_polytope(const SupportFunction& F);

/// Normal fan of a Delzant polytope with F(n_k) = λ_k taken from its facet
/// inequalities (no normalizing shift). Throws NotDelzant.
std::pair<Fan, SupportFunction> support_from_polytope(const Polytope& p);

}  // namespace toricqh
