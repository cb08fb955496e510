#pragma once

// Independent reference values for critical points, computed without the
// library's solver: eliminate by hand to one variable, then take companion
// matrix eigenvalues.

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace toricqh::test {

using C = std::complex<double>;

/// Roots of c[0] + c[1] x + ... + c[n] x^n.
inline std::vector<C> polynomial_roots(const std::vector<double>& c) {
    const std::size_t n = c.size() - 1;
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(Eigen::Index(n), Eigen::Index(n));
    for (std::size_t i = 1; i < n; ++i) comp(Eigen::Index(i), Eigen::Index(i - 1)) = 1;
    for (std::size_t i = 0; i < n; ++i) comp(Eigen::Index(i), Eigen::Index(n - 1)) = -c[i] / c[n];
    const Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp);
    std::vector<C> out;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) out.push_back(es.eigenvalues()(i));
    return out;
}

/// One Newton step on p(x) = 0 to clean up eigenvalue round-off.
inline C polish_root(const std::vector<double>& c, C x) {
    for (int it = 0; it < 3; ++it) {
        C p = 0, dp = 0;
        for (std::size_t k = c.size(); k-- > 0;) {
            dp = dp * x + p;
            p = p * x + c[k];
        }
        if (dp != C(0)) x -= p / dp;
    }
    return x;
}

inline std::vector<std::vector<C>> roots_to_points(const std::vector<double>& c, auto&& lift) {
    std::vector<std::vector<C>> out;
    for (auto r : polynomial_roots(c)) out.push_back(lift(polish_root(c, r)));
    return out;
}

/// Critical points of the monotone potentials of the surfaces and of CP^d,
/// in the catalog's ray conventions.
inline std::vector<std::vector<C>> critical_point_oracle(const std::string& name) {
    const C omega = std::polar(1.0, 2 * M_PI / 3);
    if (name.rfind("cp", 0) == 0 && name != "cp1xcp1") {
        // x_j = ζ for all j with ζ^{d+1} = 1.
        const int d = std::stoi(name.substr(2));
        std::vector<std::vector<C>> out;
        for (int k = 0; k <= d; ++k) out.push_back(std::vector<C>(std::size_t(d), std::polar(1.0, 2 * M_PI * k / (d + 1))));
        return out;
    }
    if (name == "cp1xcp1") return {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    if (name == "bl1_cp2") {
        // W = x + y + 1/y + 1/(xy): y = x^-2 and x^4 + x^3 - 1 = 0.
        return roots_to_points({-1, 0, 0, 1, 1}, [](C x) { return std::vector<C>{x, 1.0 / (x * x)}; });
    }
    if (name == "bl2_cp2") {
        // W = x + y + 1/y + 1/(xy) + 1/x: y = 1/(x^2 - 1) and (x+1)^3 (x-1)^2 - x = 0,
        // i.e. x^5 + x^4 - 2x^3 - 2x^2 + 1 = 0.
        return roots_to_points({1, 0, -2, -2, 1, 1}, [](C x) { return std::vector<C>{x, 1.0 / (x * x - 1.0)}; });
    }
    if (name == "bl3_cp2") {
        return {{1, 1}, {omega, omega}, {std::conj(omega), std::conj(omega)}, {-1, -1}, {1, -1}, {-1, 1}};
    }
    return {};
}

}  // namespace toricqh::test
