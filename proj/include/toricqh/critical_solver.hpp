#pragma once

// Critical points of a superpotential on the complex torus, found by
// multistart Newton iteration in log coordinates, and the resulting verdict
// on the quantum cohomology: it is semisimple iff every critical point is
// nondegenerate, and has a field summand iff some critical point is.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "toricqh/exact.hpp"
#include "toricqh/landau_ginzburg.hpp"

namespace toricqh {

struct SolverConfig {
    std::uint64_t seed = 0;
    std::size_t starts = 0;  // 0: 200 per expected critical point
    double newton_tol = 1e-12;
    int max_iters = 100;
    double cluster_tol = 1e-6;
    double rank_tol = 1e-8;  // relative to the largest singular value
    unsigned threads = 0;    // 0: hardware concurrency
};

struct CriticalPoint {
    ComplexVector coords;
    /// Set when the point was recognized as rational and certified exactly;
    /// residual and rank then come from exact arithmetic.
    std::optional<RationalVector> exact_coords;
    double residual = 0;  // max-norm of the log-gradient
    std::size_t hessian_rank = 0;
    bool nondegenerate = false;
    std::size_t cluster_size = 1;
    Complex value;  // W at the point
};

enum class Classification { Semisimple, FieldSummand, Undetermined };

std::string to_string(Classification c);  // "semisimple", "field_summand", "undetermined"

struct SolveReport {
    std::size_t expected_count = 0;
    std::size_t starts = 0;
    std::size_t converged_runs = 0;
    std::vector<CriticalPoint> points;  // canonically sorted
    std::size_t found_count = 0;
    long deficit = 0;
    Classification verdict = Classification::Undetermined;
    std::vector<Complex> critical_values;  // W(p), in point order
};

/// Number of critical points with multiplicity for generic coefficients:
/// the normalized volume of the convex hull of the exponents. For the fan
/// over a reflexive polytope this is the number of maximal cones.
std::size_t kushnirenko_count(const Superpotential& W);

/// Throws OverCount when more distinct points than expected_count are found.
SolveReport solve(const Superpotential& W, std::size_t expected_count, const SolverConfig& cfg);

/// Residual and Hessian rank at p without iterating. Throws NotCritical.
CriticalPoint verify_point(const Superpotential& W, const ComplexVector& p, const SolverConfig& cfg);
/// Exact version: residual is exactly 0 or NotCritical is thrown; rank is exact.
CriticalPoint verify_point(const Superpotential& W, const RationalVector& p, const SolverConfig& cfg);

/// Numeric rank by singular values with relative threshold.
std::size_t numeric_rank(const ComplexMatrix& m, double rank_tol);

struct Classified {
    Classification verdict;
    std::string justification;
};

Classified classify(const SolveReport& report);

nlohmann::json report_to_json(const SolveReport& report);
std::string report_to_text(const SolveReport& report);

/// "a+bi" with `digits` significant digits; parts below 1e-13 print as 0.
std::string to_string(const Complex& z, int digits = 10);
std::string to_string(const ComplexVector& v, int digits = 10);

}  // namespace toricqh
