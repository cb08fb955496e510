#include "toricqh/lattice_geometry.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "toricqh/errors.hpp"

namespace toricqh {

namespace {

// A supporting hyperplane {x : <x, normal> = offset} of a point cloud,
// together with the indices of the cloud points lying on it.
struct HullFace {
    RationalVector normal;
    Rational offset;
    std::vector<std::size_t> on;
};

std::size_t affine_dimension(const std::vector<RationalVector>& pts, const std::vector<std::size_t>& idx) {
    if (idx.size() <= 1) return 0;
    RationalMatrix diffs;
    for (std::size_t i = 1; i < idx.size(); ++i) {
        const auto d = pts[idx[i]] - pts[idx[0]];
        diffs.emplace_back(d.begin(), d.end());
    }
    return rank(std::move(diffs));
}

// Hyperplane through the points `through` (affinely spanning a hyperplane)
// oriented so that every point of the cloud is on the nonnegative side.
// Returns nothing if the hyperplane cuts the cloud.
std::optional<HullFace> supporting_plane(const std::vector<RationalVector>& pts,
                                         const std::vector<std::size_t>& through) {
    const std::size_t k = pts.front().size();
    RationalMatrix diffs;
    for (std::size_t i = 1; i < through.size(); ++i) {
        const auto d = pts[through[i]] - pts[through[0]];
        diffs.emplace_back(d.begin(), d.end());
    }
    auto ker = kernel(std::move(diffs), k);
    if (ker.size() != 1) return std::nullopt;
    HullFace face{std::move(ker.front()), 0, {}};
    face.offset = pairing(pts[through[0]], face.normal);

    bool above = false, below = false;
    std::vector<Rational> values(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        values[i] = pairing(pts[i], face.normal);
        if (values[i] > face.offset) above = true;
        if (values[i] < face.offset) below = true;
        if (above && below) return std::nullopt;
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (values[i] == face.offset) face.on.push_back(i);
    }
    if (below) {
        face.normal = -face.normal;
        face.offset = -face.offset;
    }
    return face;
}

std::vector<HullFace> gift_wrap(const std::vector<RationalVector>& pts);

// Facets of the (k-1)-dimensional point set `face` (a facet of the cloud),
// returned as index sets into `pts`.
std::vector<std::vector<std::size_t>> ridges_of(const std::vector<RationalVector>& pts, const HullFace& face) {
    const std::size_t k = face.normal.size();
    std::size_t drop = 0;
    while (face.normal[drop] == 0) ++drop;
    // Dropping a coordinate with nonzero normal entry is injective on the
    // facet hyperplane, so the face lattice is preserved.
    std::vector<RationalVector> proj;
    proj.reserve(face.on.size());
    for (auto i : face.on) {
        RationalVector q(k - 1);
        for (std::size_t j = 0, t = 0; j < k; ++j) {
            if (j != drop) q[t++] = pts[i][j];
        }
        proj.push_back(std::move(q));
    }
    std::vector<std::vector<std::size_t>> out;
    for (const auto& sub : gift_wrap(proj)) {
        std::vector<std::size_t> ridge;
        for (auto j : sub.on) ridge.push_back(face.on[j]);
        out.push_back(std::move(ridge));
    }
    return out;
}

// Rotates a supporting hyperplane around the (k-2)-face `ridge` until it
// hits a facet; points in `exclude` are not tried as pivots.
HullFace pivot(const std::vector<RationalVector>& pts, const std::vector<std::size_t>& ridge,
               const std::vector<std::size_t>& exclude) {
    std::vector<bool> skip(pts.size(), false);
    for (auto i : exclude) skip[i] = true;
    for (std::size_t p = 0; p < pts.size(); ++p) {
        if (skip[p]) continue;
        auto through = ridge;
        through.push_back(p);
        if (auto face = supporting_plane(pts, through)) return *face;
    }
    throw std::logic_error("gift wrapping: no facet through ridge");
}

// All facets of conv(pts); pts are distinct and affinely span R^k.
std::vector<HullFace> gift_wrap(const std::vector<RationalVector>& pts) {
    const std::size_t k = pts.front().size();
    if (k == 1) {
        std::size_t lo = 0, hi = 0;
        for (std::size_t i = 1; i < pts.size(); ++i) {
            if (pts[i][0] < pts[lo][0]) lo = i;
            if (pts[i][0] > pts[hi][0]) hi = i;
        }
        return {HullFace{RationalVector{1}, pts[lo][0], {lo}}, HullFace{RationalVector{-1}, -pts[hi][0], {hi}}};
    }

    // Seed: a facet of the shadow on the first k-1 coordinates lifts to a
    // vertical supporting hyperplane touching a face of dimension >= k-2.
    std::map<RationalVector, std::vector<std::size_t>> shadow_index;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        RationalVector q(std::vector<Rational>(pts[i].begin(), pts[i].end() - 1));
        shadow_index[q].push_back(i);
    }
    std::vector<RationalVector> shadow;
    for (const auto& [q, _] : shadow_index) shadow.push_back(q);
    const HullFace low = gift_wrap(shadow).front();
    RationalVector lifted(k);
    for (std::size_t j = 0; j + 1 < k; ++j) lifted[j] = low.normal[j];
    std::vector<std::size_t> touching;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pairing(pts[i], lifted) == low.offset) touching.push_back(i);
    }
    HullFace seed;
    if (affine_dimension(pts, touching) == k - 1) {
        seed = HullFace{lifted, low.offset, touching};
    } else {
        seed = pivot(pts, touching, touching);
    }

    std::vector<HullFace> facets;
    std::set<std::vector<std::size_t>> seen;
    std::deque<HullFace> queue;
    seen.insert(seed.on);
    queue.push_back(std::move(seed));
    while (!queue.empty()) {
        HullFace f = std::move(queue.front());
        queue.pop_front();
        for (const auto& ridge : ridges_of(pts, f)) {
            HullFace g = pivot(pts, ridge, f.on);
            if (seen.insert(g.on).second) queue.push_back(std::move(g));
        }
        facets.push_back(std::move(f));
    }
    return facets;
}

std::vector<RationalVector> distinct(std::vector<RationalVector> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

void require_full_dimensional(const std::vector<RationalVector>& pts) {
    if (pts.empty() || pts.front().size() == 0) throw NotFullDimensional("empty point set");
    const std::size_t d = pts.front().size();
    std::vector<std::size_t> all(pts.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    const auto dim = affine_dimension(pts, all);
    if (dim < d) {
        throw NotFullDimensional("points span an affine subspace of dimension " + std::to_string(dim) +
                                 " in R^" + std::to_string(d));
    }
}

Facet to_facet(const HullFace& f, const RationalVector& on_point) {
    Facet out{primitive_direction(f.normal), 0};
    out.offset = pairing(on_point, out.normal);
    return out;
}

}  // namespace

std::vector<Facet> convex_hull_facets(std::span<const RationalVector> points) {
    const auto pts = distinct(std::vector<RationalVector>(points.begin(), points.end()));
    require_full_dimensional(pts);
    std::vector<Facet> out;
    for (const auto& f : gift_wrap(pts)) out.push_back(to_facet(f, pts[f.on.front()]));
    std::sort(out.begin(), out.end(), [](const Facet& a, const Facet& b) { return a.normal < b.normal; });
    return out;
}

Polytope::Polytope(std::vector<RationalVector> vertices, std::vector<Facet> facets, LatticeSide side,
                   std::size_t dropped)
    : dim_(vertices.front().size()),
      vertices_(std::move(vertices)),
      facets_(std::move(facets)),
      side_(side),
      dropped_(dropped) {
    std::sort(vertices_.begin(), vertices_.end());
    std::sort(facets_.begin(), facets_.end(), [](const Facet& a, const Facet& b) { return a.normal < b.normal; });
    incidence_.resize(facets_.size());
    for (std::size_t k = 0; k < facets_.size(); ++k) {
        for (std::size_t v = 0; v < vertices_.size(); ++v) {
            if (pairing(vertices_[v], facets_[k].normal) == facets_[k].offset) incidence_[k].push_back(v);
        }
    }
}

Polytope Polytope::from_points(std::vector<RationalVector> points, LatticeSide side) {
    const auto pts = distinct(std::move(points));
    require_full_dimensional(pts);
    const std::size_t d = pts.front().size();
    const auto faces = gift_wrap(pts);

    // A point is a vertex iff the facet normals through it have full rank.
    std::vector<std::vector<RationalVector>> normals_at(pts.size());
    for (const auto& f : faces) {
        for (auto i : f.on) normals_at[i].push_back(f.normal);
    }
    std::vector<RationalVector> vertices;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (normals_at[i].size() >= d && rank(rows_of(normals_at[i])) == d) vertices.push_back(pts[i]);
    }
    std::vector<Facet> facets;
    for (const auto& f : faces) facets.push_back(to_facet(f, pts[f.on.front()]));
    const std::size_t dropped = pts.size() - vertices.size();
    return Polytope(std::move(vertices), std::move(facets), side, dropped);
}

Polytope Polytope::from_points(const std::vector<LatticeVector>& points, LatticeSide side) {
    std::vector<RationalVector> pts;
    pts.reserve(points.size());
    for (const auto& p : points) pts.emplace_back(p);
    return from_points(std::move(pts), side);
}

Polytope Polytope::from_description(std::vector<RationalVector> vertices, std::vector<Facet> facets,
                                    LatticeSide side) {
    if (vertices.empty()) throw NotFullDimensional("polytope without vertices");
    return Polytope(distinct(std::move(vertices)), std::move(facets), side, 0);
}

bool Polytope::contains(const RationalVector& m) const {
    return std::all_of(facets_.begin(), facets_.end(),
                       [&](const Facet& f) { return pairing(m, f.normal) >= f.offset; });
}

bool Polytope::contains_in_interior(const RationalVector& m) const {
    return std::all_of(facets_.begin(), facets_.end(),
                       [&](const Facet& f) { return pairing(m, f.normal) > f.offset; });
}

RationalVector Polytope::vertex_centroid() const {
    RationalVector c(dim_);
    for (const auto& v : vertices_) c += v;
    c *= Rational(1, vertices_.size());
    return c;
}

Polytope dual_polytope(const Polytope& p) {
    for (const auto& f : p.facets()) {
        if (f.offset >= 0) {
            throw OriginNotInterior("origin is not in the interior: facet with normal " + to_string(f.normal) +
                                    " has offset " + to_string(f.offset));
        }
    }
    std::vector<RationalVector> vertices;
    for (const auto& f : p.facets()) {
        RationalVector v(f.normal);
        v *= Rational(-1) / f.offset;
        vertices.push_back(std::move(v));
    }
    std::vector<Facet> facets;
    for (const auto& v : p.vertices()) {
        // v = t u with u primitive, t > 0; <v, n> >= -1 becomes <u, n> >= -1/t.
        auto u = primitive_direction(v);
        std::size_t i = 0;
        while (u[i] == 0) ++i;
        const Rational t = v[i] / Rational(u[i]);
        facets.push_back(Facet{std::move(u), Rational(-1) / t});
    }
    return Polytope::from_description(std::move(vertices), std::move(facets), flipped(p.side()));
}

Verdict is_reflexive(const Polytope& p) {
    for (const auto& f : p.facets()) {
        if (f.offset >= 0) return {false, "origin is not an interior point"};
    }
    for (const auto& v : p.vertices()) {
        if (!is_integral(v)) return {false, "vertex " + to_string(v) + " is not integral"};
    }
    const auto d = dual_polytope(p);
    for (const auto& v : d.vertices()) {
        if (!is_integral(v)) return {false, "dual vertex " + to_string(v) + " is not integral"};
    }
    return {};
}

namespace {

template <typename Keep>
std::vector<LatticeVector> scan_box(const Polytope& p, Keep&& keep) {
    const std::size_t d = p.dim();
    LatticeVector lo(d), hi(d);
    for (std::size_t i = 0; i < d; ++i) {
        Rational mn = p.vertices().front()[i], mx = mn;
        for (const auto& v : p.vertices()) {
            mn = std::min(mn, v[i]);
            mx = std::max(mx, v[i]);
        }
        // floor / ceil of rationals
        Integer num = boost::multiprecision::numerator(mn), den = boost::multiprecision::denominator(mn);
        lo[i] = num / den - ((num % den != 0 && num < 0) ? 1 : 0);
        num = boost::multiprecision::numerator(mx);
        den = boost::multiprecision::denominator(mx);
        hi[i] = num / den + ((num % den != 0 && num > 0) ? 1 : 0);
    }
    std::vector<LatticeVector> out;
    LatticeVector cur = lo;
    while (true) {
        if (keep(RationalVector(cur))) out.push_back(cur);
        std::size_t i = d;
        while (i > 0) {
            --i;
            if (cur[i] < hi[i]) {
                ++cur[i];
                for (std::size_t j = i + 1; j < d; ++j) cur[j] = lo[j];
                break;
            }
            if (i == 0) return out;
        }
    }
}

}  // namespace

std::vector<LatticeVector> lattice_points(const Polytope& p) {
    return scan_box(p, [&](const RationalVector& m) { return p.contains(m); });
}

std::vector<LatticeVector> interior_lattice_points(const Polytope& p) {
    return scan_box(p, [&](const RationalVector& m) { return p.contains_in_interior(m); });
}

std::vector<std::pair<std::size_t, std::size_t>> edges(const Polytope& p) {
    const std::size_t n = p.vertices().size();
    std::vector<std::vector<std::size_t>> facets_at(n);
    for (std::size_t k = 0; k < p.facets().size(); ++k) {
        for (auto v : p.facet_vertices(k)) facets_at[v].push_back(k);
    }
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            std::vector<std::size_t> common;
            std::set_intersection(facets_at[a].begin(), facets_at[a].end(), facets_at[b].begin(),
                                  facets_at[b].end(), std::back_inserter(common));
            if (common.size() + 1 < p.dim()) continue;
            std::vector<LatticeVector> normals;
            for (auto k : common) normals.push_back(p.facets()[k].normal);
            if (rank(rows_of(normals)) == p.dim() - 1) out.emplace_back(a, b);
        }
    }
    return out;
}

Verdict is_delzant(const Polytope& p) {
    const std::size_t d = p.dim();
    const auto es = edges(p);
    for (std::size_t v = 0; v < p.vertices().size(); ++v) {
        std::vector<LatticeVector> dirs;
        for (const auto& [a, b] : es) {
            if (a == v) dirs.push_back(primitive_direction(p.vertices()[b] - p.vertices()[a]));
            if (b == v) dirs.push_back(primitive_direction(p.vertices()[a] - p.vertices()[b]));
        }
        const auto& at = p.vertices()[v];
        if (dirs.size() != d) {
            return {false, "vertex " + to_string(at) + " meets " + std::to_string(dirs.size()) + " edges, expected " +
                               std::to_string(d)};
        }
        const Rational det = determinant(rows_of(dirs));
        if (det != 1 && det != -1) {
            return {false, "primitive edge vectors at vertex " + to_string(at) + " have determinant " +
                               to_string(det)};
        }
    }
    return {};
}

namespace {

void pull(const Polytope& p, const std::vector<std::size_t>& face, std::size_t face_dim,
          std::vector<std::vector<std::size_t>>& out) {
    if (face.size() == face_dim + 1) {
        out.push_back(face);
        return;
    }
    const std::size_t apex = face.front();
    std::set<std::vector<std::size_t>> subfaces;
    for (std::size_t k = 0; k < p.facets().size(); ++k) {
        std::vector<std::size_t> sub;
        std::set_intersection(face.begin(), face.end(), p.facet_vertices(k).begin(), p.facet_vertices(k).end(),
                              std::back_inserter(sub));
        if (sub.size() < face_dim || sub.size() == face.size()) continue;
        if (std::binary_search(sub.begin(), sub.end(), apex)) continue;
        if (affine_dimension(p.vertices(), sub) != face_dim - 1) continue;
        subfaces.insert(std::move(sub));
    }
    for (const auto& sub : subfaces) {
        std::vector<std::vector<std::size_t>> inner;
        pull(p, sub, face_dim - 1, inner);
        for (auto& s : inner) {
            s.insert(s.begin(), apex);
            out.push_back(std::move(s));
        }
    }
}

}  // namespace

std::vector<std::vector<std::size_t>> boundary_triangulation(const Polytope& p) {
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t k = 0; k < p.facets().size(); ++k) pull(p, p.facet_vertices(k), p.dim() - 1, out);
    return out;
}

Rational normalized_volume(const Polytope& p) { return normalized_volume(p, p.vertex_centroid()); }

Rational normalized_volume(const Polytope& p, const RationalVector& apex) {
    Rational total = 0;
    for (const auto& simplex : boundary_triangulation(p)) {
        std::vector<RationalVector> rows;
        for (auto v : simplex) rows.push_back(p.vertices()[v] - apex);
        total += abs(determinant(rows_of(rows)));
    }
    return total;
}

Polytope polytope_product(const Polytope& p, const Polytope& q) {
    const std::size_t d1 = p.dim(), d2 = q.dim();
    std::vector<RationalVector> vertices;
    for (const auto& a : p.vertices()) {
        for (const auto& b : q.vertices()) {
            std::vector<Rational> c(a.begin(), a.end());
            c.insert(c.end(), b.begin(), b.end());
            vertices.emplace_back(std::move(c));
        }
    }
    std::vector<Facet> facets;
    for (const auto& f : p.facets()) {
        LatticeVector n(d1 + d2);
        for (std::size_t i = 0; i < d1; ++i) n[i] = f.normal[i];
        facets.push_back({std::move(n), f.offset});
    }
    for (const auto& f : q.facets()) {
        LatticeVector n(d1 + d2);
        for (std::size_t i = 0; i < d2; ++i) n[d1 + i] = f.normal[i];
        facets.push_back({std::move(n), f.offset});
    }
    return Polytope::from_description(std::move(vertices), std::move(facets), p.side());
}

}  // namespace toricqh
