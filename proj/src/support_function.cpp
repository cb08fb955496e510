#include "toricqh/support_function.hpp"

#include <algorithm>

#include "toricqh/errors.hpp"

namespace toricqh {

namespace {

RationalMatrix cone_rows(const Fan& f, const Cone& c) {
    std::vector<LatticeVector> rows;
    for (auto r : c.rays) rows.push_back(f.rays()[r]);
    return rows_of(rows);
}

// Coordinates c of n in the basis of σ: n = Σ c_ρ n_ρ.
RationalVector coordinates(const Fan& f, const Cone& c, const LatticeVector& n) {
    const std::size_t d = f.dim();
    RationalMatrix m(d, std::vector<Rational>(d));
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < d; ++i) m[i][j] = f.rays()[c.rays[j]][i];
    }
    return *solve(std::move(m), RationalVector(n));
}

}  // namespace

SupportFunction::SupportFunction(Fan fan, std::vector<Rational> values)
    : fan_(std::move(fan)), values_(std::move(values)) {
    if (values_.size() != fan_.rays().size()) {
        throw DomainError("support function needs one value per ray (" + std::to_string(fan_.rays().size()) +
                          "), got " + std::to_string(values_.size()));
    }
    if (!fan_.simplicial()) throw NotSimplicial("support functions need a simplicial fan");
    for (const auto& c : fan_.maximal_cones()) {
        if (c.dim() != fan_.dim()) throw DomainError("maximal cone of lower dimension");
        RationalVector rhs(c.dim());
        for (std::size_t j = 0; j < c.dim(); ++j) rhs[j] = values_[c.rays[j]];
        forms_.push_back(*solve(cone_rows(fan_, c), rhs));
    }
}

SupportFunction monotone_support(const Fan& f) {
    return SupportFunction(f, std::vector<Rational>(f.rays().size(), Rational(-1)));
}

ConvexityReport is_strictly_convex(const SupportFunction& F) {
    const auto& f = F.fan();
    for (std::size_t i = 0; i < f.maximal_cones().size(); ++i) {
        const auto& c = f.maximal_cones()[i];
        for (std::size_t r = 0; r < f.rays().size(); ++r) {
            if (c.contains_ray(r)) continue;
            if (pairing(F.cone_form(i), f.rays()[r]) <= F.value(r)) return {false, std::make_pair(i, r)};
        }
    }
    return {};
}

Rational convexity_margin(const SupportFunction& F) {
    if (!is_strictly_convex(F).strictly_convex) return 0;
    const auto& f = F.fan();
    std::optional<Rational> best;
    for (std::size_t i = 0; i < f.maximal_cones().size(); ++i) {
        const auto& c = f.maximal_cones()[i];
        for (std::size_t r = 0; r < f.rays().size(); ++r) {
            if (c.contains_ray(r)) continue;
            const Rational slack = pairing(F.cone_form(i), f.rays()[r]) - F.value(r);
            Rational norm = 1;
            for (const auto& q : coordinates(f, c, f.rays()[r])) norm += abs(q);
            const Rational m = slack / norm;
            if (!best || m < *best) best = m;
        }
    }
    // A fan with a single maximal cone has no competing rays.
    return best.value_or(Rational(1));
}

Polytope moment_polytope(const SupportFunction& F) {
    const auto convex = is_strictly_convex(F);
    if (!convex.strictly_convex) {
        const auto [cone, ray] = *convex.violation;
        throw NotStrictlyConvex("support function is not strictly convex: ray " +
                                to_string(F.fan().rays()[ray]) + " against maximal cone " + std::to_string(cone));
    }
    std::vector<RationalVector> vertices;
    for (std::size_t i = 0; i < F.fan().maximal_cones().size(); ++i) vertices.push_back(F.cone_form(i));
    std::vector<Facet> facets;
    for (std::size_t r = 0; r < F.fan().rays().size(); ++r) facets.push_back({F.fan().rays()[r], F.value(r)});
    return Polytope::from_description(std::move(vertices), std::move(facets), LatticeSide::M);
}

std::pair<Fan, SupportFunction> support_from_polytope(const Polytope& p) {
    const auto delzant = is_delzant(p);
    if (!delzant.ok) throw NotDelzant(delzant.diagnostic);
    std::vector<LatticeVector> rays;
    std::vector<Rational> values;
    for (const auto& facet : p.facets()) {
        rays.push_back(facet.normal);
        values.push_back(facet.offset);
    }
    std::vector<std::vector<std::size_t>> maximal(p.vertices().size());
    for (std::size_t k = 0; k < p.facets().size(); ++k) {
        for (auto v : p.facet_vertices(k)) maximal[v].push_back(k);
    }
    auto fan = Fan::from_maximal_cones(p.dim(), std::move(rays), std::move(maximal));
    SupportFunction F(fan, std::move(values));
    return {std::move(fan), std::move(F)};
}

}  // namespace toricqh
