#pragma once

// Batyrev's presentation of quantum cohomology:
//   Λ[z_ρ] / (linear relations + quantized Stanley-Reisner relations).
// Relations are kept as exponent data; text and JSON are renderings of it.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "toricqh/exact.hpp"
#include "toricqh/fan.hpp"
#include "toricqh/landau_ginzburg.hpp"
#include "toricqh/support_function.hpp"

namespace toricqh {

/// Σ_ρ <m, n_ρ> z_ρ.
struct LinearRelation {
    LatticeVector m;
    std::vector<Integer> coefficients;

    friend bool operator==(const LinearRelation&, const LinearRelation&) = default;
};

/// Π_{ρ∈C} q^{-1} s^{-F(n_ρ)} z_ρ - Π_{ρ∈σ_C} (q^{-1} s^{-F(n_ρ)} z_ρ)^{a_ρ}.
struct QuantumRelation {
    std::vector<std::size_t> collection;  // C
    Cone sigma;                           // σ_C
    std::map<std::size_t, Integer> a;     // keyed by the rays of σ_C
    std::vector<Rational> s_values;       // F on the rays of C, then on the rays of σ_C

    std::size_t q_left() const noexcept { return collection.size(); }
    Integer q_right() const;

    friend bool operator==(const QuantumRelation&, const QuantumRelation&) = default;
};

struct Presentation {
    std::vector<LatticeVector> rays;
    std::vector<Rational> support;  // F(n_ρ)
    std::vector<LinearRelation> linear;
    std::vector<QuantumRelation> quantum;

    std::size_t dim() const { return rays.empty() ? 0 : rays.front().size(); }
    std::size_t variables() const { return rays.size(); }
    /// "z1 + z2 + ... + zr"
    std::string c1() const;

    friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// One relation per standard basis vector of M. Needs a complete fan.
std::vector<LinearRelation> linear_ideal(const Fan& f);

/// One relation per primitive collection. Throws NotSmooth. F is not
/// required to be convex, so weakly convex classes are accepted too.
std::vector<QuantumRelation> quantum_sr_generators(const Fan& f, const SupportFunction& F);

Presentation presentation(const SupportFunction& F);

enum class Format { Text, Json };

std::string emit_presentation(const Presentation& p, Format format);
nlohmann::json presentation_to_json(const Presentation& p);
/// Inverse of presentation_to_json. Throws DomainError on malformed documents.
Presentation presentation_from_json(const nlohmann::json& j);

/// A monomial q^k s^λ x^n.
struct QsxMonomial {
    Integer q;
    Rational s;
    LatticeVector x;

    friend bool operator==(const QsxMonomial&, const QsxMonomial&) = default;
};

/// ψ(z_ρ) = q s^{F(n_ρ)} x^{n_ρ} applied to both monomials of a quantum relation.
std::pair<QsxMonomial, QsxMonomial> substitute(const Presentation& p, const QuantumRelation& rel);

/// ψ applied to a linear relation: (coefficient, monomial) per z_ρ with a
/// nonzero coefficient, in ray order.
std::vector<std::pair<Integer, QsxMonomial>> substitute(const Presentation& p, const LinearRelation& rel);

/// Checks both halves of the substitution identity against W: every quantum
/// relation maps to zero, and every linear relation maps to q ∂_m W term by
/// term. W must carry the s-exponents of p.support.
Verdict check_substitution_identity(const Presentation& p, const Superpotential& W);

}  // namespace toricqh
