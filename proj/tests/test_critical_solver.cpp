#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "toricqh/catalog.hpp"
#include "toricqh/critical_solver.hpp"
#include "toricqh/errors.hpp"

using namespace toricqh;
using namespace toricqh::test;

namespace {

Superpotential catalog_w(const std::string& name, const std::optional<std::vector<double>>& b = std::nullopt) {
    const auto F = catalog_entry(name)->build();
    return build_potential(F.fan(), F, b);
}

LatticeVector ones(std::size_t d) {
    LatticeVector v(d);
    for (auto& x : v) x = 1;
    return v;
}

SolverConfig config(std::uint64_t seed, std::size_t starts = 0) {
    SolverConfig cfg;
    cfg.seed = seed;
    cfg.starts = starts;
    return cfg;
}

bool matches(const CriticalPoint& p, const std::vector<C>& q, double tol) {
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (std::abs(p.coords(Eigen::Index(i)) - q[i]) > tol) return false;
    }
    return true;
}

// Residuals are re-evaluated here rather than trusted from the report.
bool residual_ok(const Superpotential& W, const CriticalPoint& p, double tol) {
    return log_gradient(W, p.coords).cwiseAbs().maxCoeff() < tol;
}

SolveReport fake_report(std::size_t expected, std::vector<bool> nondeg) {
    SolveReport r;
    r.expected_count = expected;
    for (bool n : nondeg) {
        CriticalPoint p;
        p.coords = ComplexVector::Ones(2);
        p.nondegenerate = n;
        p.hessian_rank = n ? 2 : 1;
        r.points.push_back(p);
    }
    r.found_count = r.points.size();
    r.deficit = long(expected) - long(r.found_count);
    return r;
}

}  // namespace

TEST_CASE("projective spaces and surfaces against the oracles") {
    for (const std::string name : {"cp1", "cp2", "cp3", "cp4", "cp1xcp1", "bl1_cp2", "bl2_cp2", "bl3_cp2"}) {
        CAPTURE(name);
        const auto W = catalog_w(name);
        const auto expected = catalog_entry(name)->build().fan().maximal_cones().size();
        CHECK(kushnirenko_count(W) == expected);
        const auto report = solve(W, expected, config(1));
        CHECK(report.found_count == expected);
        CHECK(report.verdict == Classification::Semisimple);
        const auto oracle = critical_point_oracle(name);
        REQUIRE(oracle.size() == expected);
        for (const auto& q : oracle) {
            const auto hits = std::count_if(report.points.begin(), report.points.end(),
                                            [&](const CriticalPoint& p) { return matches(p, q, 1e-8); });
            CHECK(hits == 1);
        }
        for (const auto& p : report.points) {
            CHECK(p.nondegenerate);
            CHECK(residual_ok(W, p, 1e-12));
        }
    }
}

TEST_CASE("U8 is not semisimple but has a field summand") {
    const auto W = catalog_w("u8");
    const auto report = solve(W, 24, config(1, 4800));
    CHECK(report.verdict == Classification::FieldSummand);
    CHECK(report.found_count < 24);
    std::size_t nondeg = 0;
    bool saw_x0 = false;
    for (const auto& p : report.points) {
        nondeg += p.nondegenerate;
        CHECK(residual_ok(W, p, 1e-12));
        if (p.exact_coords && *p.exact_coords == rv({-1, -1, -1, 1})) {
            saw_x0 = true;
            CHECK(p.hessian_rank == 3);
            CHECK_FALSE(p.nondegenerate);
            CHECK(p.value == Complex(-6));
        }
    }
    CHECK(saw_x0);
    CHECK(nondeg >= 1);
    CHECK(nondeg <= 24);
    const auto why = classify(report).justification;
    CHECK(why.find("degenerate") != std::string::npos);
    CHECK(report_to_text(report).find("verdict: field_summand") != std::string::npos);
}

TEST_CASE("generic coefficients make U8 semisimple") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> coef(0.9, 1.1);
    for (int trial = 0; trial < 2; ++trial) {
        std::vector<double> b(10);
        for (auto& x : b) x = coef(rng);
        const auto W = catalog_w("u8", b);
        const auto report = solve(W, kushnirenko_count(W), config(7, 4800));
        CHECK(report.found_count >= 1);
        for (const auto& p : report.points) CHECK(p.nondegenerate);
        CHECK(report.verdict != Classification::Undetermined);
    }
}

TEST_CASE("verify_point") {
    const SolverConfig cfg;
    const auto u8 = verify_point(catalog_w("u8"), rv({-1, -1, -1, 1}), cfg);
    CHECK(u8.residual == 0);
    CHECK(u8.hessian_rank == 3);
    CHECK_FALSE(u8.nondegenerate);

    for (std::size_t d = 2; d <= 4; ++d) {
        const auto W = build_potential(bl_points_fan(d), bl_points_support(d));
        const auto p = verify_point(W, -RationalVector(ones(d)), cfg);
        CHECK(p.residual == 0);
        CHECK(p.hessian_rank == d);
        CHECK(p.nondegenerate);
    }

    const auto cp2 = catalog_w("cp2");
    const auto one = verify_point(cp2, rv({1, 1}), cfg);
    CHECK(one.residual == 0);
    CHECK(one.nondegenerate);
    CHECK_THROWS_AS(verify_point(cp2, rv({1, 2}), cfg), NotCritical);
    ComplexVector w(2);
    w << std::polar(1.0, 2 * M_PI / 3), std::polar(1.0, 2 * M_PI / 3);
    CHECK(verify_point(cp2, w, cfg).nondegenerate);
    w(1) = 2.0;
    CHECK_THROWS_AS(verify_point(cp2, w, cfg), NotCritical);
}

TEST_CASE("classify") {
    CHECK(classify(fake_report(3, {true, true, true})).verdict == Classification::Semisimple);
    std::vector<bool> u8_like(21, true);
    u8_like.push_back(false);
    CHECK(classify(fake_report(24, u8_like)).verdict == Classification::FieldSummand);
    CHECK(classify(fake_report(24, {})).verdict == Classification::Undetermined);
    CHECK(classify(fake_report(3, {true, true})).verdict == Classification::FieldSummand);
    CHECK(classify(fake_report(3, {false})).verdict == Classification::Undetermined);
}

TEST_CASE("over-count is an error") {
    CHECK_THROWS_AS(solve(catalog_w("cp2"), 2, config(1, 200)), OverCount);
}

TEST_CASE("determinism") {
    const auto W = catalog_w("u8");
    auto cfg = config(3, 1200);
    cfg.threads = 1;
    const auto serial = report_to_json(solve(W, 24, cfg)).dump();
    cfg.threads = 3;
    CHECK(report_to_json(solve(W, 24, cfg)).dump() == serial);
    CHECK(report_to_json(solve(W, 24, cfg)).dump() == serial);

    // Semisimple case: another seed finds the same points.
    const auto bl = catalog_w("bl3_cp2");
    const auto a = solve(bl, 6, config(1));
    const auto b = solve(bl, 6, config(99));
    REQUIRE(a.found_count == b.found_count);
    for (std::size_t k = 0; k < a.points.size(); ++k) {
        CHECK((a.points[k].coords - b.points[k].coords).cwiseAbs().maxCoeff() < 1e-5);
    }
}

TEST_CASE("Kushnirenko bound over the catalog") {
    for (const auto& e : catalog()) {
        CAPTURE(e.name);
        const auto F = e.build();
        const auto W = build_potential(F.fan(), F);
        const auto expected = kushnirenko_count(W);
        if (e.fano) CHECK(expected == F.fan().maximal_cones().size());
        const auto report = solve(W, expected, config(5, 40 * expected));
        std::size_t nondeg = 0;
        for (const auto& p : report.points) nondeg += p.nondegenerate;
        CHECK(nondeg <= expected);
        if (report.verdict == Classification::Semisimple) CHECK(nondeg >= 1);
    }
}

TEST_CASE("report formats") {
    const auto report = solve(catalog_w("cp1"), 2, config(1, 50));
    const auto j = report_to_json(report);
    CHECK(j["expected"] == 2);
    CHECK(j["found"] == 2);
    CHECK(j["verdict"] == "semisimple");
    CHECK(j["points"][0]["coords"][0].size() == 2);
    CHECK(j["critical_values"].size() == 2);
    CHECK(to_string(Complex(1.5, -2)) == "1.5-2i");
    CHECK(to_string(Complex(0, 1)) == "1i");
    CHECK(to_string(Complex(-3, 1e-15)) == "-3");
}
