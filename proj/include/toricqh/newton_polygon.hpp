#pragma once

// Newton polygons of univariate polynomials over a valued field. Valuations
// are orders of vanishing in s, so a coefficient s^λ has valuation λ and
// norm 10^{-λ}.

#include <string>
#include <utility>
#include <vector>

#include "toricqh/exact.hpp"

namespace toricqh {

class ValuedPoly {
public:
    /// (degree, valuation of the coefficient) for each nonzero coefficient.
    /// Needs two or more terms with distinct nonnegative degrees.
    explicit ValuedPoly(std::vector<std::pair<long, Rational>> terms);

    const std::vector<std::pair<long, Rational>>& terms() const noexcept { return terms_; }  // by degree
    long degree_span() const { return terms_.back().first - terms_.front().first; }

private:
    std::vector<std::pair<long, Rational>> terms_;
};

struct HullFace {
    Rational slope;
    long length;  // horizontal

    friend bool operator==(const HullFace&, const HullFace&) = default;
};

/// Faces of the lower convex hull of {(degree, valuation)}, by increasing slope.
std::vector<HullFace> lower_hull(const ValuedPoly& p);

struct ValuationClass {
    Rational valuation;
    long count;

    friend bool operator==(const ValuationClass&, const ValuationClass&) = default;
};

/// One class per hull face: valuation -slope, count = face length.
std::vector<ValuationClass> root_valuations(const ValuedPoly& p);

/// x^4 - s^α x - s^{α+β}, which x_1 satisfies at the critical points of the
/// superpotential of CP^2 blown up at a point with line area α and
/// exceptional area β. Throws InvalidRegime unless α > β > 0.
ValuedPoly blowup_family(const Rational& alpha, const Rational& beta);

struct QuasimorphismReport {
    Rational alpha, beta;
    std::vector<HullFace> faces;
    std::vector<ValuationClass> valuations;
    bool distinct;  // two valuation classes, i.e. α < 3β
    std::string text;
};

QuasimorphismReport quasimorphism_report(const Rational& alpha, const Rational& beta);

}  // namespace toricqh
