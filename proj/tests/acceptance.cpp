// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "hull_oracle.hpp"
#include "oracles.hpp"
#include "toricqh/batyrev.hpp"
#include "toricqh/catalog.hpp"
#include "toricqh/critical_solver.hpp"
#include "toricqh/errors.hpp"
#include "toricqh/newton_polygon.hpp"
#include "toricqh/spectra.hpp"

using namespace toricqh;
using namespace toricqh::test;

namespace {

// Pinned tolerances.
constexpr double kCoordTol = 1e-8;      // criteria 5 and 6
constexpr double kSpecializeTol = 0.1;  // criterion 9, relative
constexpr double kFiniteDiffTol = 1e-6; // criterion 11, relative

struct Outcome {
    bool pass;
    std::string detail;
};

Superpotential monotone_w(const Fan& f) { return build_potential(f, monotone_support(f)); }

SolverConfig seeded(std::uint64_t seed, std::size_t starts = 0) {
    SolverConfig cfg;
    cfg.seed = seed;
    cfg.starts = starts;
    return cfg;
}

std::size_t count_nondegenerate(const SolveReport& r) {
    std::size_t n = 0;
    for (const auto& p : r.points) n += p.nondegenerate;
    return n;
}

const SolveReport& u8_report() {
    static const SolveReport report = solve(monotone_w(u8_fan()), 24, seeded(1, 4800));
    return report;
}

Outcome u8_combinatorics() {
    const auto dual = Polytope::from_points(u8_rays(), LatticeSide::N);
    const auto delta = dual_polytope(dual);
    const auto fan = fan_from_reflexive(dual);
    std::ostringstream d;
    d << "Δ*: " << dual.vertices().size() << " vertices, " << dual.facets().size() << " facets, "
      << lattice_points(dual).size() << " lattice points; Δ: " << delta.vertices().size() << " vertices, "
      << lattice_points(delta).size() << " lattice points; " << fan.maximal_cones().size() << " maximal cones";
    const bool ok = dual.vertices().size() == 10 && lattice_points(dual).size() == 11 && delta.vertices().size() == 24 &&
                    lattice_points(delta).size() == 59 && dual.facets().size() == 24 &&
                    fan.maximal_cones().size() == 24 && is_reflexive(dual).ok && is_smooth(fan).smooth;
    return {ok, d.str()};
}

Outcome u8_degeneracy() {
    const auto W = monotone_w(u8_fan());
    const RationalVector x0 = rv({-1, -1, -1, 1});
    const auto p = verify_point(W, x0, SolverConfig{});
    const RationalMatrix expected{{-2, 0, 0, -1}, {0, -4, 0, -2}, {0, 0, -2, 1}, {-1, -2, 1, -2}};
    const auto h = hessian_affine(W, x0);
    const auto verdict = classify(u8_report()).verdict;
    std::ostringstream d;
    d << "residual " << p.residual << " (exact), affine Hessian " << (h == expected ? "equals" : "differs from")
      << " the expected matrix, exact rank " << rank(h) << ", verdict " << to_string(verdict);
    return {p.residual == 0 && h == expected && rank(h) == 3 && !p.nondegenerate && verdict != Classification::Semisimple,
            d.str()};
}

Outcome u8_field_summand() {
    const auto& r = u8_report();
    std::ostringstream d;
    d << r.found_count << " points, " << count_nondegenerate(r) << " nondegenerate, verdict " << to_string(r.verdict);
    return {count_nondegenerate(r) >= 1 && r.verdict == Classification::FieldSummand, d.str()};
}

Outcome generic_semisimplicity() {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> coef(0.9, 1.1);
    std::vector<double> b(10);
    for (auto& x : b) x = coef(rng);
    const auto W = build_potential(u8_fan(), monotone_support(u8_fan()), b);
    const auto r = solve(W, 24, seeded(1, 4800));
    std::ostringstream d;
    d << "coefficient seed 4: " << r.found_count << " points, " << count_nondegenerate(r) << " nondegenerate";
    return {r.found_count >= 1 && count_nondegenerate(r) == r.found_count, d.str()};
}

Outcome surfaces_semisimple() {
    const std::vector<std::pair<std::string, std::size_t>> surfaces{
        {"cp2", 3}, {"cp1xcp1", 4}, {"bl1_cp2", 4}, {"bl2_cp2", 5}, {"bl3_cp2", 6}};
    bool ok = true;
    std::ostringstream d;
    for (const auto& [name, expected] : surfaces) {
        const auto F = catalog_entry(name)->build();
        const auto r = solve(build_potential(F.fan(), F), F.fan().maximal_cones().size(), seeded(1));
        const auto oracle = critical_point_oracle(name);
        std::size_t matched = 0;
        for (const auto& q : oracle) {
            const auto hits = std::count_if(r.points.begin(), r.points.end(), [&](const CriticalPoint& p) {
                for (std::size_t i = 0; i < q.size(); ++i) {
                    if (std::abs(p.coords(Eigen::Index(i)) - q[i]) > kCoordTol) return false;
                }
                return true;
            });
            matched += hits == 1;
        }
        const bool this_ok = r.found_count == expected && count_nondegenerate(r) == expected &&
                             r.verdict == Classification::Semisimple && oracle.size() == expected && matched == expected;
        ok = ok && this_ok;
        d << name << " " << r.found_count << "/" << expected << (this_ok ? "" : " (mismatch)") << "; ";
    }
    return {ok, d.str() + "oracle tolerance 1e-8"};
}

Outcome cp_spectrum() {
    bool ok = true;
    std::ostringstream d;
    for (std::size_t dim = 1; dim <= 4; ++dim) {
        const auto W = monotone_w(cp_fan(dim));
        const auto s = critical_values(W, solve(W, dim + 1, seeded(1)));
        const bool this_ok = same_values(s, cp_closed_form(dim), kCoordTol);
        ok = ok && this_ok;
        d << "d=" << dim << (this_ok ? " ok" : " mismatch") << "; ";
    }
    return {ok, d.str() + "critical values = eigenvalues of multiplication by q^-1 c1, tolerance 1e-8"};
}

Outcome bl_points_certificates() {
    bool ok = true;
    std::ostringstream d;
    for (std::size_t dim = 2; dim <= 4; ++dim) {
        const auto W = build_potential(bl_points_fan(dim), bl_points_support(dim));
        LatticeVector minus(dim);
        for (auto& x : minus) x = -1;
        const auto p = verify_point(W, RationalVector(minus), SolverConfig{});
        const bool this_ok = p.residual == 0 && p.hessian_rank == dim && p.nondegenerate;
        ok = ok && this_ok;
        d << "d=" << dim << " rank " << p.hessian_rank << "/" << dim << "; ";
    }
    return {ok, d.str() + "exact residual 0 at (-1,...,-1)"};
}

Outcome valuation_regime() {
    const std::vector<std::pair<Rational, Rational>> two{{2, 1}, {5, 2}, {1, Rational(2, 5)}};
    const std::vector<std::pair<Rational, Rational>> one{{3, 1}, {4, 1}, {7, 2}};
    bool ok = true;
    std::ostringstream d;
    auto run = [&](const auto& cases, std::size_t classes) {
        for (const auto& [a, b] : cases) {
            const auto r = quasimorphism_report(a, b);
            long total = 0;
            for (const auto& v : r.valuations) total += v.count;
            ok = ok && r.valuations.size() == classes && total == 4 && r.distinct == (classes == 2);
            d << "(" << to_string(a) << "," << to_string(b) << "): " << r.valuations.size() << "; ";
        }
    };
    run(two, 2);
    run(one, 1);
    return {ok, d.str() + "exact"};
}

Outcome valuation_specialization() {
    const double eps = 1e-3;
    const auto roots = polynomial_roots({-std::pow(eps, 3), -std::pow(eps, 2), 0, 0, 1});
    std::vector<double> moduli;
    for (auto r : roots) moduli.push_back(std::abs(r));
    std::sort(moduli.begin(), moduli.end());
    // Valuation 1 once, 2/3 three times.
    const std::vector<double> predicted{eps, std::pow(eps, 2.0 / 3), std::pow(eps, 2.0 / 3), std::pow(eps, 2.0 / 3)};
    double worst = 0;
    for (std::size_t k = 0; k < 4; ++k) worst = std::max(worst, std::abs(moduli[k] / predicted[k] - 1));
    const auto vals = root_valuations(blowup_family(2, 1));
    const bool classes_ok = vals == std::vector<ValuationClass>{{1, 1}, {Rational(2, 3), 3}};
    std::ostringstream d;
    d << "eps = 1e-3, worst relative error " << worst << " (tolerance 0.1)";
    return {classes_ok && worst < kSpecializeTol, d.str()};
}

Outcome substitution_identity() {
    bool ok = true;
    std::ostringstream d;
    for (const auto& e : catalog()) {
        const auto F = e.build();
        const auto v = check_substitution_identity(presentation(F), build_potential(F.fan(), F));
        if (!v.ok) d << e.name << ": " << v.diagnostic << "; ";
        ok = ok && v.ok;
    }
    d << catalog().size() << " catalog entries, exact";
    return {ok, d.str()};
}

bool primitive_collections_recheck(const Fan& f) {
    const auto listed = primitive_collections(f);
    std::vector<std::vector<std::size_t>> brute;
    for (std::size_t k = 2; k <= f.dim() + 1 && k <= f.rays().size(); ++k) {
        for_each_subset(f.rays().size(), k, [&](const std::vector<std::size_t>& s) {
            if (f.has_cone(s)) return true;
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                std::vector<std::size_t> sub;
                for (std::size_t i = 0; i < s.size(); ++i) {
                    if (i != drop) sub.push_back(s[i]);
                }
                if (!f.has_cone(sub)) return true;
            }
            brute.push_back(s);
            return true;
        });
    }
    auto sorted = listed;
    std::sort(sorted.begin(), sorted.end());
    std::sort(brute.begin(), brute.end());
    return sorted == brute;
}

Outcome invariant_suites() {
    std::vector<std::string> failures;
    for (const auto& e : catalog()) {
        const auto F = e.build();
        const Fan& f = F.fan();
        if (!check_fan_axioms(f).ok) failures.push_back(e.name + " fan axioms");
        if (!primitive_collections_recheck(f)) failures.push_back(e.name + " primitive collections");
        if (e.fano) {
            const auto dual = Polytope::from_points(f.rays(), LatticeSide::N);
            const auto back = dual_polytope(dual_polytope(dual));
            if (back.vertices() != dual.vertices() || back.facets() != dual.facets()) {
                failures.push_back(e.name + " duality");
            }
            if (normalized_volume(dual) != Rational(f.maximal_cones().size())) failures.push_back(e.name + " volume");
        }
    }

    std::mt19937 rng(20240611);
    std::uniform_int_distribution<long> coord(-3, 3);
    int hulls = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t d = 1 + trial % 3;
        std::vector<LatticeVector> pts;
        for (std::size_t i = 0; i < d + 1 + rng() % (8 - d); ++i) {
            LatticeVector v(d);
            for (auto& x : v) x = coord(rng);
            pts.push_back(v);
        }
        std::vector<RationalVector> rpts(pts.begin(), pts.end());
        std::vector<Facet> facets;
        try {
            facets = convex_hull_facets(rpts);
        } catch (const NotFullDimensional&) {
            continue;
        }
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        if (as_set(facets) != brute_force_facets(pts)) failures.push_back("hull oracle trial " + std::to_string(trial));
        ++hulls;
    }

    std::mt19937_64 prng(17);
    std::uniform_real_distribution<double> logr(std::log(0.5), std::log(2.0)), phase(0, 2 * M_PI), coef(0.9, 1.1);
    std::vector<double> b(10);
    for (auto& x : b) x = coef(prng);
    const auto W = build_potential(u8_fan(), monotone_support(u8_fan()), b);
    double worst = 0;
    const double h = 1e-5;
    for (int trial = 0; trial < 100; ++trial) {
        ComplexVector p(4);
        for (Eigen::Index i = 0; i < 4; ++i) p(i) = std::polar(std::exp(logr(prng)), phase(prng));
        ComplexVector fd_g(4);
        ComplexMatrix fd_h(4, 4);
        for (Eigen::Index i = 0; i < 4; ++i) {
            ComplexVector up = p, down = p;
            up(i) *= std::exp(h);
            down(i) *= std::exp(-h);
            fd_g(i) = (eval(W, up) - eval(W, down)) / (2 * h);
            fd_h.col(i) = (log_gradient(W, up) - log_gradient(W, down)) / (2 * h);
        }
        const auto g = log_gradient(W, p);
        const auto H = log_hessian(W, p);
        worst = std::max(worst, (fd_g - g).cwiseAbs().maxCoeff() / std::max(1.0, g.cwiseAbs().maxCoeff()));
        worst = std::max(worst, (fd_h - H).cwiseAbs().maxCoeff() / std::max(1.0, H.cwiseAbs().maxCoeff()));
    }
    if (!(worst < kFiniteDiffTol)) failures.push_back("finite differences");

    auto cfg = seeded(11, 2400);
    cfg.threads = 1;
    const auto serial = report_to_json(solve(monotone_w(u8_fan()), 24, cfg)).dump();
    cfg.threads = 4;
    const auto parallel = report_to_json(solve(monotone_w(u8_fan()), 24, cfg)).dump();
    if (serial != parallel) failures.push_back("solver determinism");

    std::ostringstream d;
    d << "fan axioms, primitive collections, duality, |Σ^d| = d! Vol(Δ*) on Fano entries; " << hulls
      << " random hulls; finite-difference error " << worst << "; threads 1 vs 4";
    for (const auto& f : failures) d << "; FAILED " << f;
    return {failures.empty(), d.str()};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"U8 combinatorics", u8_combinatorics},
        {"U8 degeneracy", u8_degeneracy},
        {"U8 field summand", u8_field_summand},
        {"generic semisimplicity", generic_semisimplicity},
        {"surfaces semisimple", surfaces_semisimple},
        {"CP^d spectrum", cp_spectrum},
        {"blow-ups of CP^d at d+1 points", bl_points_certificates},
        {"Newton polygon regime", valuation_regime},
        {"valuation specialization", valuation_specialization},
        {"substitution identity", substitution_identity},
        {"invariant suites", invariant_suites},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failed += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  " << k + 1 << ". " << criteria[k].first << ": " << o.detail
                  << " [" << std::fixed << std::setprecision(2) << secs << "s]" << std::defaultfloat << "\n";
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
    return failed ? 1 : 0;
}
