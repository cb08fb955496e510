#include "toricqh/fan.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "toricqh/errors.hpp"

namespace toricqh {

bool Cone::contains_ray(std::size_t r) const { return std::binary_search(rays.begin(), rays.end(), r); }

namespace {

RationalMatrix ray_matrix(const std::vector<LatticeVector>& rays, const std::vector<std::size_t>& idx) {
    std::vector<LatticeVector> rows;
    for (auto i : idx) rows.push_back(rays[i]);
    return rows_of(rows);
}

// gcd of the maximal minors of the rows; 1 iff the rows extend to a basis.
Integer minor_gcd(const std::vector<LatticeVector>& rays, const std::vector<std::size_t>& idx, std::size_t d) {
    Integer g = 0;
    for_each_subset(d, idx.size(), [&](const std::vector<std::size_t>& cols) {
        RationalMatrix m;
        for (auto r : idx) {
            std::vector<Rational> row;
            for (auto c : cols) row.emplace_back(rays[r][c]);
            m.push_back(std::move(row));
        }
        g = boost::multiprecision::gcd(g, boost::multiprecision::numerator(determinant(std::move(m))));
        return g != 1;
    });
    return abs(g);
}

// Coefficients of v in the basis of a full-dimensional simplicial cone.
std::optional<RationalVector> coordinates_in(const std::vector<LatticeVector>& rays, const Cone& c,
                                             const LatticeVector& v) {
    const std::size_t d = v.size();
    RationalMatrix m(d, std::vector<Rational>(c.dim()));
    for (std::size_t j = 0; j < c.dim(); ++j) {
        for (std::size_t i = 0; i < d; ++i) m[i][j] = rays[c.rays[j]][i];
    }
    return solve(std::move(m), RationalVector(v));
}

}  // namespace

bool Fan::has_cone(const std::vector<std::size_t>& sorted_rays) const {
    return std::binary_search(all_sorted_.begin(), all_sorted_.end(), sorted_rays);
}

Fan Fan::from_maximal_cones(std::size_t dim, std::vector<LatticeVector> rays,
                            std::vector<std::vector<std::size_t>> maximal) {
    if (dim == 0) throw DomainError("fan of dimension 0");
    for (std::size_t i = 0; i < rays.size(); ++i) {
        if (rays[i].size() != dim) throw DomainError("ray " + to_string(rays[i]) + " has wrong dimension");
        if (content(rays[i]) != 1) throw DomainError("ray " + to_string(rays[i]) + " is not primitive");
        for (std::size_t j = 0; j < i; ++j) {
            if (rays[i] == rays[j]) throw DomainError("duplicate ray " + to_string(rays[i]));
        }
    }

    Fan f;
    f.dim_ = dim;
    f.rays_ = std::move(rays);

    std::set<std::vector<std::size_t>> all;
    for (auto& m : maximal) {
        std::sort(m.begin(), m.end());
        m.erase(std::unique(m.begin(), m.end()), m.end());
        for (auto r : m) {
            if (r >= f.rays_.size()) throw DomainError("cone refers to a missing ray");
        }
        for (std::size_t k = 0; k <= m.size(); ++k) {
            for_each_subset(m.size(), k, [&](const std::vector<std::size_t>& s) {
                std::vector<std::size_t> face;
                for (auto i : s) face.push_back(m[i]);
                all.insert(std::move(face));
                return true;
            });
        }
    }
    f.all_sorted_.assign(all.begin(), all.end());

    std::size_t top = 0;
    for (const auto& c : all) top = std::max(top, c.size());
    f.by_dim_.assign(std::max(top, dim) + 1, {});
    for (const auto& c : all) f.by_dim_[c.size()].push_back(Cone{c});

    std::set<std::vector<std::size_t>> maximal_set(maximal.begin(), maximal.end());
    for (const auto& m : maximal_set) {
        const bool is_face = std::any_of(maximal_set.begin(), maximal_set.end(), [&](const auto& other) {
            return other.size() > m.size() && std::includes(other.begin(), other.end(), m.begin(), m.end());
        });
        if (!is_face) f.maximal_.push_back(Cone{m});
    }

    f.simplicial_ = std::all_of(f.maximal_.begin(), f.maximal_.end(), [&](const Cone& c) {
        return c.dim() <= dim && rank(ray_matrix(f.rays_, c.rays)) == c.dim();
    });
    f.complete_ = is_complete(f);
    f.smooth_ = f.simplicial_ && std::all_of(f.maximal_.begin(), f.maximal_.end(), [&](const Cone& c) {
                    return minor_gcd(f.rays_, c.rays, dim) == 1;
                });
    return f;
}

Fan Fan::with_ray_order(const std::vector<LatticeVector>& order) const {
    if (order.size() != rays_.size()) throw DomainError("ray order has the wrong length");
    std::vector<std::size_t> new_index(rays_.size());
    for (std::size_t i = 0; i < rays_.size(); ++i) {
        auto it = std::find(order.begin(), order.end(), rays_[i]);
        if (it == order.end()) throw DomainError("ray " + to_string(rays_[i]) + " missing from ray order");
        new_index[i] = static_cast<std::size_t>(it - order.begin());
    }
    std::vector<std::vector<std::size_t>> maximal;
    for (const auto& c : maximal_) {
        std::vector<std::size_t> m;
        for (auto r : c.rays) m.push_back(new_index[r]);
        maximal.push_back(std::move(m));
    }
    return from_maximal_cones(dim_, order, std::move(maximal));
}

Fan fan_from_reflexive(const Polytope& dual) {
    const auto verdict = is_reflexive(dual);
    if (!verdict.ok) throw NotReflexive(verdict.diagnostic);
    const std::size_t d = dual.dim();
    std::vector<LatticeVector> rays;
    for (const auto& v : dual.vertices()) rays.push_back(to_lattice(v));
    std::vector<std::vector<std::size_t>> maximal;
    for (std::size_t k = 0; k < dual.facets().size(); ++k) {
        const auto& vs = dual.facet_vertices(k);
        if (vs.size() != d) {
            throw NotSimplicial("facet with normal " + to_string(dual.facets()[k].normal) + " has " +
                                std::to_string(vs.size()) + " vertices; only simplicial polytopes are supported");
        }
        maximal.push_back(vs);
    }
    return Fan::from_maximal_cones(d, std::move(rays), std::move(maximal));
}

SmoothnessReport is_smooth(const Fan& f) {
    if (!f.simplicial()) throw NotSimplicial("smoothness is only decided for simplicial fans");
    for (const auto& c : f.maximal_cones()) {
        if (minor_gcd(f.rays(), c.rays, f.dim()) != 1) return {false, c};
    }
    return {};
}

bool is_complete(const Fan& f) {
    const std::size_t d = f.dim();
    if (f.maximal_cones().empty()) return false;
    for (const auto& c : f.maximal_cones()) {
        if (c.dim() != d) return false;
    }
    std::map<std::vector<std::size_t>, int> wall_count;
    for (const auto& c : f.maximal_cones()) {
        for (std::size_t skip = 0; skip < c.dim(); ++skip) {
            std::vector<std::size_t> wall;
            for (std::size_t i = 0; i < c.dim(); ++i) {
                if (i != skip) wall.push_back(c.rays[i]);
            }
            ++wall_count[wall];
        }
    }
    return std::all_of(wall_count.begin(), wall_count.end(), [](const auto& kv) { return kv.second == 2; });
}

ConeMembership minimal_cone_containing(const Fan& f, const LatticeVector& v) {
    if (v.is_zero()) return {};
    for (const auto& c : f.maximal_cones()) {
        if (c.dim() != f.dim()) continue;
        const auto coords = coordinates_in(f.rays(), c, v);
        if (!coords) continue;
        if (std::any_of(coords->begin(), coords->end(), [](const Rational& q) { return q < 0; })) continue;
        ConeMembership out;
        for (std::size_t j = 0; j < c.dim(); ++j) {
            const auto& q = (*coords)[j];
            if (q == 0) continue;
            if (!is_integral(q)) throw NotSmooth("non-integral coordinates in cone; fan is not smooth");
            out.cone.rays.push_back(c.rays[j]);
            out.coefficients.push_back(boost::multiprecision::numerator(q));
        }
        return out;
    }
    throw DomainError("vector " + to_string(v) + " lies in no cone of the fan");
}

std::vector<std::vector<std::size_t>> primitive_collections(const Fan& f) {
    std::vector<std::vector<std::size_t>> out;
    const std::size_t r = f.rays().size();
    for (std::size_t k = 2; k <= std::min(f.dim() + 1, r); ++k) {
        for_each_subset(r, k, [&](const std::vector<std::size_t>& s) {
            if (f.has_cone(s)) return true;
            for (std::size_t drop = 0; drop < k; ++drop) {
                std::vector<std::size_t> sub;
                for (std::size_t i = 0; i < k; ++i) {
                    if (i != drop) sub.push_back(s[i]);
                }
                if (!f.has_cone(sub)) return true;
            }
            out.push_back(s);
            return true;
        });
    }
    return out;
}

Fan fan_product(const Fan& f, const Fan& g) {
    const std::size_t d1 = f.dim(), d2 = g.dim();
    std::vector<LatticeVector> rays;
    for (const auto& n : f.rays()) {
        LatticeVector v(d1 + d2);
        for (std::size_t i = 0; i < d1; ++i) v[i] = n[i];
        rays.push_back(std::move(v));
    }
    for (const auto& n : g.rays()) {
        LatticeVector v(d1 + d2);
        for (std::size_t i = 0; i < d2; ++i) v[d1 + i] = n[i];
        rays.push_back(std::move(v));
    }
    const std::size_t shift = f.rays().size();
    std::vector<std::vector<std::size_t>> maximal;
    for (const auto& a : f.maximal_cones()) {
        for (const auto& b : g.maximal_cones()) {
            auto m = a.rays;
            for (auto r : b.rays) m.push_back(r + shift);
            maximal.push_back(std::move(m));
        }
    }
    return Fan::from_maximal_cones(d1 + d2, std::move(rays), std::move(maximal));
}

Verdict check_fan_axioms(const Fan& f) {
    const std::size_t d = f.dim();
    for (std::size_t k = 0; k < d + 1 && k < f.rays().size() + 1; ++k) {
        for (const auto& c : f.cones(k)) {
            for (std::size_t skip = 0; skip < c.dim(); ++skip) {
                std::vector<std::size_t> face;
                for (std::size_t i = 0; i < c.dim(); ++i) {
                    if (i != skip) face.push_back(c.rays[i]);
                }
                if (!f.has_cone(face)) return {false, "a face of a stored cone is missing"};
            }
        }
    }
    if (!f.complete()) return {};
    if (!f.simplicial()) return {false, "non-simplicial fan"};

    // Each wall separates the two maximal cones containing it.
    for (const auto& wall : f.cones(d - 1)) {
        std::vector<std::size_t> apexes;
        for (const auto& c : f.maximal_cones()) {
            if (std::includes(c.rays.begin(), c.rays.end(), wall.rays.begin(), wall.rays.end())) {
                for (auto r : c.rays) {
                    if (!wall.contains_ray(r)) apexes.push_back(r);
                }
            }
        }
        if (apexes.size() != 2) return {false, "a wall is not shared by exactly two maximal cones"};
        const auto normal = kernel(ray_matrix(f.rays(), wall.rays), d);
        if (normal.size() != 1) return {false, "degenerate wall"};
        const Rational a = pairing(f.rays()[apexes[0]], normal[0]);
        const Rational b = pairing(f.rays()[apexes[1]], normal[0]);
        if (a * b >= 0) return {false, "two maximal cones overlap across a wall"};
    }

    // Covering degree one: a generic vector lies in exactly one maximal cone.
    int generic_points = 0;
    for (long t = 1009; generic_points < 3 && t < 1100; t += 7) {
        LatticeVector v(d);
        Integer power = 1;
        for (std::size_t i = 0; i < d; ++i) {
            v[i] = (i % 2 == 0) ? power : Integer(-power - 1);
            power *= t;
        }
        int hits = 0;
        bool generic = true;
        for (const auto& c : f.maximal_cones()) {
            const auto coords = coordinates_in(f.rays(), c, v);
            if (!coords) return {false, "maximal cone with dependent rays"};
            if (std::any_of(coords->begin(), coords->end(), [](const Rational& q) { return q == 0; })) {
                generic = false;
                break;
            }
            if (std::all_of(coords->begin(), coords->end(), [](const Rational& q) { return q > 0; })) ++hits;
        }
        if (!generic) continue;
        ++generic_points;
        if (hits != 1) return {false, "generic vector covered " + std::to_string(hits) + " times"};
    }
    return {};
}

}  // namespace toricqh
