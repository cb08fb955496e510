#include "toricqh/landau_ginzburg.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "toricqh/errors.hpp"

namespace toricqh {

namespace {

template <typename T>
T power(T base, unsigned long e) {
    T result(1);
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

template <typename T>
T signed_power(const T& base, const Integer& e) {
    const long k = e.convert_to<long>();
    if (k >= 0) return power(base, static_cast<unsigned long>(k));
    return T(1) / power(base, static_cast<unsigned long>(-k));
}

Rational exact_coefficient(double b) { return Rational(b); }

}  // namespace

Superpotential::Superpotential(std::size_t dim, std::vector<Term> terms) : dim_(dim), terms_(std::move(terms)) {
    std::set<LatticeVector> seen;
    for (const auto& t : terms_) {
        if (t.exponent.size() != dim_) throw DomainError("exponent " + to_string(t.exponent) + " has wrong length");
        if (!(t.coefficient > 0) || !std::isfinite(t.coefficient)) {
            throw NonpositiveCoefficient("coefficient of x^" + to_string(t.exponent) + " is " +
                                         std::to_string(t.coefficient) + ", must be positive");
        }
        if (!seen.insert(t.exponent).second) throw DomainError("repeated exponent " + to_string(t.exponent));
    }
}

bool Superpotential::monotone_coefficients() const {
    for (const auto& t : terms_) {
        if (t.coefficient != 1.0) return false;
    }
    return true;
}

Superpotential build_potential(const Fan& f, const SupportFunction& F, const std::optional<std::vector<double>>& coeffs) {
    if (!f.complete()) throw DomainError("superpotential needs a complete fan");
    if (coeffs && coeffs->size() != f.rays().size()) {
        throw DomainError("expected " + std::to_string(f.rays().size()) + " coefficients, got " +
                          std::to_string(coeffs->size()));
    }
    std::vector<Term> terms;
    for (std::size_t r = 0; r < f.rays().size(); ++r) {
        terms.push_back({f.rays()[r], coeffs ? (*coeffs)[r] : 1.0, F.value(r)});
    }
    return Superpotential(f.dim(), std::move(terms));
}

Complex monomial(const ComplexVector& p, const LatticeVector& n) {
    Complex v(1);
    for (std::size_t i = 0; i < n.size(); ++i) {
        if (n[i] != 0) v *= signed_power(p(Eigen::Index(i)), n[i]);
    }
    return v;
}

Rational monomial(const RationalVector& p, const LatticeVector& n) {
    Rational v(1);
    for (std::size_t i = 0; i < n.size(); ++i) {
        if (n[i] == 0) continue;
        if (p[i] == 0) throw DomainError("point " + to_string(p) + " is not in the torus");
        v *= signed_power(p[i], n[i]);
    }
    return v;
}

Complex eval(const Superpotential& W, const ComplexVector& p) {
    Complex sum(0);
    for (const auto& t : W.terms()) sum += t.coefficient * monomial(p, t.exponent);
    return sum;
}

ComplexVector log_gradient(const Superpotential& W, const ComplexVector& p) {
    ComplexVector g = ComplexVector::Zero(Eigen::Index(W.dim()));
    for (const auto& t : W.terms()) {
        const Complex v = t.coefficient * monomial(p, t.exponent);
        for (std::size_t i = 0; i < W.dim(); ++i) g(Eigen::Index(i)) += t.exponent[i].convert_to<double>() * v;
    }
    return g;
}

ComplexMatrix log_hessian(const Superpotential& W, const ComplexVector& p) {
    const auto d = Eigen::Index(W.dim());
    ComplexMatrix h = ComplexMatrix::Zero(d, d);
    for (const auto& t : W.terms()) {
        const Complex v = t.coefficient * monomial(p, t.exponent);
        for (Eigen::Index i = 0; i < d; ++i) {
            for (Eigen::Index j = 0; j < d; ++j) {
                h(i, j) += (t.exponent[i] * t.exponent[j]).convert_to<double>() * v;
            }
        }
    }
    return h;
}

// ∂²x^n/∂x_i∂x_j = n_i (n_j - δ_ij) x^{n - e_i - e_j}; the shifted monomial is
// x^n / (x_i x_j), which avoids a second power evaluation.
ComplexMatrix hessian_affine(const Superpotential& W, const ComplexVector& p) {
    const auto d = Eigen::Index(W.dim());
    ComplexMatrix h = ComplexMatrix::Zero(d, d);
    for (const auto& t : W.terms()) {
        const Complex v = t.coefficient * monomial(p, t.exponent);
        for (Eigen::Index i = 0; i < d; ++i) {
            for (Eigen::Index j = 0; j < d; ++j) {
                const Integer c = t.exponent[i] * (t.exponent[j] - (i == j ? 1 : 0));
                if (c != 0) h(i, j) += c.convert_to<double>() * v / (p(i) * p(j));
            }
        }
    }
    return h;
}

Rational eval(const Superpotential& W, const RationalVector& p) {
    Rational sum(0);
    for (const auto& t : W.terms()) sum += exact_coefficient(t.coefficient) * monomial(p, t.exponent);
    return sum;
}

RationalVector log_gradient(const Superpotential& W, const RationalVector& p) {
    RationalVector g(W.dim());
    for (const auto& t : W.terms()) {
        const Rational v = exact_coefficient(t.coefficient) * monomial(p, t.exponent);
        for (std::size_t i = 0; i < W.dim(); ++i) g[i] += Rational(t.exponent[i]) * v;
    }
    return g;
}

RationalMatrix log_hessian(const Superpotential& W, const RationalVector& p) {
    const std::size_t d = W.dim();
    RationalMatrix h(d, std::vector<Rational>(d));
    for (const auto& t : W.terms()) {
        const Rational v = exact_coefficient(t.coefficient) * monomial(p, t.exponent);
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) h[i][j] += Rational(t.exponent[i] * t.exponent[j]) * v;
        }
    }
    return h;
}

RationalMatrix hessian_affine(const Superpotential& W, const RationalVector& p) {
    const std::size_t d = W.dim();
    RationalMatrix h(d, std::vector<Rational>(d));
    for (const auto& t : W.terms()) {
        const Rational v = exact_coefficient(t.coefficient) * monomial(p, t.exponent);
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                const Integer c = t.exponent[i] * (t.exponent[j] - (i == j ? 1 : 0));
                if (c != 0) h[i][j] += Rational(c) * v / (p[i] * p[j]);
            }
        }
    }
    return h;
}

std::vector<LaurentTerm> log_derivative(const Superpotential& W, const LatticeVector& m) {
    std::vector<LaurentTerm> out;
    for (const auto& t : W.terms()) {
        const Integer c = pairing(m, t.exponent);
        if (c != 0) out.push_back({c, t.s_exponent, t.exponent});
    }
    return out;
}

std::string render(const Superpotential& W, RenderMode mode) {
    std::ostringstream out;
    bool first = true;
    for (const auto& t : W.terms()) {
        if (!first) out << " + ";
        first = false;
        std::vector<std::string> factors;
        if (mode == RenderMode::Symbolic && t.s_exponent != 0) factors.push_back("s^{" + to_string(t.s_exponent) + "}");
        if (mode == RenderMode::Numeric && t.coefficient != 1.0) {
            std::ostringstream c;
            c << t.coefficient;
            factors.push_back(c.str());
        }
        for (std::size_t i = 0; i < t.exponent.size(); ++i) {
            const auto& e = t.exponent[i];
            if (e == 0) continue;
            std::string x = "x" + std::to_string(i + 1);
            if (e != 1) x += "^{" + to_string(e) + "}";
            factors.push_back(x);
        }
        for (std::size_t k = 0; k < factors.size(); ++k) out << (k ? " " : "") << factors[k];
    }
    return out.str();
}

}  // namespace toricqh
