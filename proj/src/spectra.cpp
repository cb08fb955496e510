#include "toricqh/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "toricqh/errors.hpp"

namespace toricqh {

namespace {

void sort_values(Spectrum& s) {
    auto key = [](const SpectrumValue& v) {
        return std::make_pair(std::llround(v.value.real() * 1e9), std::llround(v.value.imag() * 1e9));
    };
    std::stable_sort(s.values.begin(), s.values.end(),
                     [&](const SpectrumValue& a, const SpectrumValue& b) { return key(a) < key(b); });
}

}  // namespace

std::size_t Spectrum::total_lower_bound() const {
    std::size_t n = 0;
    for (const auto& v : values) n += v.multiplicity_lower_bound;
    return n;
}

Spectrum critical_values(const Superpotential& W, const SolveReport& report) {
    Spectrum s;
    for (const auto& p : report.points) {
        const Complex v = p.exact_coords ? Complex(eval(W, *p.exact_coords).convert_to<double>()) : eval(W, p.coords);
        s.values.push_back({v, p.nondegenerate ? 1u : 2u, !p.nondegenerate});
    }
    sort_values(s);
    return s;
}

Spectrum cp_closed_form(std::size_t d) {
    if (d == 0) throw DomainError("projective space needs d >= 1");
    Spectrum s;
    for (std::size_t k = 0; k <= d; ++k) {
        s.values.push_back({std::polar(double(d + 1), 2 * M_PI * double(k) / double(d + 1)), 1, false});
    }
    sort_values(s);
    return s;
}

Spectrum minkowski_sum(const Spectrum& a, const Spectrum& b) {
    Spectrum s;
    for (const auto& x : a.values) {
        for (const auto& y : b.values) {
            s.values.push_back({x.value + y.value, x.multiplicity_lower_bound * y.multiplicity_lower_bound,
                                x.degenerate || y.degenerate});
        }
    }
    sort_values(s);
    return s;
}

bool same_values(const Spectrum& a, const Spectrum& b, double tol) {
    if (a.values.size() != b.values.size()) return false;
    std::vector<bool> used(b.values.size(), false);
    for (const auto& x : a.values) {
        bool hit = false;
        for (std::size_t k = 0; k < b.values.size() && !hit; ++k) {
            if (!used[k] && std::abs(x.value - b.values[k].value) <= tol) used[k] = hit = true;
        }
        if (!hit) return false;
    }
    return true;
}

nlohmann::json spectrum_to_json(const Spectrum& s) {
    nlohmann::json values = nlohmann::json::array();
    for (const auto& v : s.values) {
        values.push_back({v.value.real(), v.value.imag(), v.multiplicity_lower_bound, v.degenerate});
    }
    return {{"values", values}};
}

std::string spectrum_to_text(const Spectrum& s) {
    std::ostringstream out;
    out << "critical values (eigenvalues of multiplication by q^-1 c1):\n";
    for (const auto& v : s.values) {
        out << "  " << to_string(v.value);
        if (v.degenerate) out << "  multiplicity >= " << v.multiplicity_lower_bound << " (degenerate point)";
        out << "\n";
    }
    return out.str();
}

}  // namespace toricqh
