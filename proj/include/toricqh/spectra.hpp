#pragma once

// Critical values of W. These are the eigenvalues of multiplication by
// q^{-1} c_1 on the degree-zero quantum cohomology: W represents q^{-1} c_1
// in the Jacobian ring, and multiplication by a function on a finite scheme
// has its values at the points as eigenvalues.

#include <vector>

#include <json.hpp>

#include "toricqh/critical_solver.hpp"
#include "toricqh/landau_ginzburg.hpp"

namespace toricqh {

struct SpectrumValue {
    Complex value;
    /// 1 at a nondegenerate point; 2 at a degenerate one, since a
    /// non-reduced point has length at least 2. The exact length is unknown.
    std::size_t multiplicity_lower_bound = 1;
    bool degenerate = false;
};

struct Spectrum {
    std::vector<SpectrumValue> values;  // sorted by (re, im)

    std::size_t total_lower_bound() const;
};

/// W at every point of the report, re-evaluated.
Spectrum critical_values(const Superpotential& W, const SolveReport& report);

/// {(d+1) ζ : ζ^{d+1} = 1}, the spectrum of CP^d.
Spectrum cp_closed_form(std::size_t d);

/// {a + b} over pairs, multiplicities multiplied: the spectrum of a product.
Spectrum minkowski_sum(const Spectrum& a, const Spectrum& b);

/// Multiset equality of the values (ignoring flags) up to tol per value.
bool same_values(const Spectrum& a, const Spectrum& b, double tol);

/// {"values": [[re, im, multiplicity_lower_bound, degenerate]]}
nlohmann::json spectrum_to_json(const Spectrum& s);
std::string spectrum_to_text(const Spectrum& s);

}  // namespace toricqh
