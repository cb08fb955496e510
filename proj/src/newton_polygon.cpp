#include "toricqh/newton_polygon.hpp"

#include <algorithm>
#include <sstream>

#include "toricqh/errors.hpp"

namespace toricqh {

ValuedPoly::ValuedPoly(std::vector<std::pair<long, Rational>> terms) : terms_(std::move(terms)) {
    if (terms_.size() < 2) throw DomainError("a Newton polygon needs at least two terms");
    std::sort(terms_.begin(), terms_.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        if (terms_[k].first < 0) throw DomainError("negative degree " + std::to_string(terms_[k].first));
        if (k && terms_[k].first == terms_[k - 1].first) {
            throw DomainError("repeated degree " + std::to_string(terms_[k].first));
        }
    }
}

// Monotone chain over points sorted by degree.
std::vector<HullFace> lower_hull(const ValuedPoly& p) {
    std::vector<std::pair<long, Rational>> chain;
    auto cross = [](const auto& o, const auto& a, const auto& b) {
        return Rational(a.first - o.first) * (b.second - o.second) - (a.second - o.second) * Rational(b.first - o.first);
    };
    for (const auto& pt : p.terms()) {
        while (chain.size() >= 2 && cross(chain[chain.size() - 2], chain.back(), pt) <= 0) chain.pop_back();
        chain.push_back(pt);
    }
    std::vector<HullFace> faces;
    for (std::size_t k = 1; k < chain.size(); ++k) {
        const long len = chain[k].first - chain[k - 1].first;
        faces.push_back({(chain[k].second - chain[k - 1].second) / Rational(len), len});
    }
    return faces;
}

std::vector<ValuationClass> root_valuations(const ValuedPoly& p) {
    std::vector<ValuationClass> out;
    for (const auto& f : lower_hull(p)) out.push_back({-f.slope, f.length});
    return out;
}

ValuedPoly blowup_family(const Rational& alpha, const Rational& beta) {
    if (!(alpha > beta && beta > 0)) {
        throw InvalidRegime("need alpha > beta > 0, got alpha = " + to_string(alpha) + ", beta = " + to_string(beta));
    }
    return ValuedPoly({{4, 0}, {1, alpha}, {0, alpha + beta}});
}

QuasimorphismReport quasimorphism_report(const Rational& alpha, const Rational& beta) {
    const auto poly = blowup_family(alpha, beta);
    QuasimorphismReport r{alpha, beta, lower_hull(poly), root_valuations(poly), false, ""};
    r.distinct = r.valuations.size() >= 2;

    const Rational ratio = alpha / beta;
    std::ostringstream out;
    out << "alpha = " << to_string(alpha) << ", beta = " << to_string(beta) << ", alpha/beta = " << to_string(ratio)
        << "\n";
    out << "Newton polygon of x^4 - s^" << to_string(alpha) << " x - s^" << to_string(alpha + beta) << ":";
    for (const auto& f : r.faces) out << " slope " << to_string(f.slope) << " (length " << f.length << ")";
    out << "\n";
    for (const auto& v : r.valuations) {
        out << "valuation " << to_string(v.valuation) << " (" << v.count << " root" << (v.count > 1 ? "s" : "")
            << "): spectral norm of x^n at the idempotent = 10^(" << to_string(-v.valuation) << ")\n";
    }
    if (r.distinct) {
        out << "two distinct Calabi quasimorphisms (α/β = " << to_string(ratio) << " < 3)\n";
    } else {
        out << "criterion inconclusive, single valuation (α/β = " << to_string(ratio) << " >= 3)\n";
    }
    r.text = out.str();
    return r;
}

}  // namespace toricqh
