#pragma once

// The Landau-Ginzburg superpotential W = Σ_ρ b_ρ x^{n_ρ} of a toric manifold,
// with s specialized to numbers b_ρ (b_ρ = 1 for the monotone form at s = 1).
// Derivatives come in two flavours: log-derivatives x_i ∂/∂x_i, which are
// the natural ones on the torus, and ordinary affine partials.

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "toricqh/exact.hpp"
#include "toricqh/fan.hpp"
#include "toricqh/support_function.hpp"

namespace toricqh {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

struct Term {
    LatticeVector exponent;  // n_ρ
    double coefficient;      // b_ρ > 0
    Rational s_exponent;     // F(n_ρ), for display and symbolic checks
};

class Superpotential {
public:
    /// Throws NonpositiveCoefficient, or DomainError on repeated exponents or
    /// exponents of the wrong length.
    Superpotential(std::size_t dim, std::vector<Term> terms);

    std::size_t dim() const noexcept { return dim_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    /// True when every b_ρ is 1.
    bool monotone_coefficients() const;

private:
    std::size_t dim_;
    std::vector<Term> terms_;
};

/// One term per ray, in ray order. Without `coeffs` every b_ρ is 1.
Superpotential build_potential(const Fan& f, const SupportFunction& F,
                               const std::optional<std::vector<double>>& coeffs = std::nullopt);

/// p^n by repeated squaring; p must lie in the torus.
Complex monomial(const ComplexVector& p, const LatticeVector& n);
Rational monomial(const RationalVector& p, const LatticeVector& n);

Complex eval(const Superpotential& W, const ComplexVector& p);
ComplexVector log_gradient(const Superpotential& W, const ComplexVector& p);
ComplexMatrix log_hessian(const Superpotential& W, const ComplexVector& p);
ComplexMatrix hessian_affine(const Superpotential& W, const ComplexVector& p);

// Exact versions for rational points. The coefficients b_ρ enter through
// their exact binary values.
Rational eval(const Superpotential& W, const RationalVector& p);
RationalVector log_gradient(const Superpotential& W, const RationalVector& p);
RationalMatrix log_hessian(const Superpotential& W, const RationalVector& p);
RationalMatrix hessian_affine(const Superpotential& W, const RationalVector& p);

/// A term c · s^λ · x^n of a Laurent polynomial in s and x.
struct LaurentTerm {
    Integer coefficient;
    Rational s_exponent;
    LatticeVector exponent;

    friend bool operator==(const LaurentTerm&, const LaurentTerm&) = default;
};

/// ∂_m W = Σ_ρ <m, n_ρ> s^{F(n_ρ)} x^{n_ρ} with s kept symbolic; terms with
/// <m, n_ρ> = 0 are dropped.
std::vector<LaurentTerm> log_derivative(const Superpotential& W, const LatticeVector& m);

enum class RenderMode {
    Symbolic,  // s^{F(n_ρ)} x^{n_ρ}
    Numeric,   // b_ρ x^{n_ρ}, coefficient omitted when it is 1
};

/// E.g. "x1 + x2 + s^{-1} x2^{-1} + s^{-2} x1 x2^{-1}".
std::string render(const Superpotential& W, RenderMode mode = RenderMode::Symbolic);

}  // namespace toricqh
