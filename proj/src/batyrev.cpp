#include "toricqh/batyrev.hpp"

#include <sstream>

#include "toricqh/errors.hpp"

namespace toricqh {

namespace {

std::string power(const std::string& base, const Rational& e) {
    if (e == 0) return "";
    if (e == 1) return base;
    const std::string text = to_string(e);
    return base + "^" + (is_integral(e) ? text : "(" + text + ")");
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
        if (p.empty()) continue;
        if (!out.empty()) out += ' ';
        out += p;
    }
    return out;
}

// q^{-k} s^{-λ} Π z^e; "1" when nothing remains.
std::string render_monomial(const Integer& q, const Rational& s,
                            const std::vector<std::pair<std::size_t, Integer>>& z) {
    std::vector<std::string> parts{power("q", Rational(-q)), power("s", -s)};
    for (const auto& [r, e] : z) parts.push_back(power("z" + std::to_string(r + 1), Rational(e)));
    const auto out = join(parts);
    return out.empty() ? "1" : out;
}

std::string render_linear(const LinearRelation& rel) {
    std::string out;
    for (std::size_t r = 0; r < rel.coefficients.size(); ++r) {
        const Integer& c = rel.coefficients[r];
        if (c == 0) continue;
        const Integer mag = abs(c);
        if (out.empty()) {
            out += c < 0 ? "-" : "";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (mag != 1) out += to_string(mag) + " ";
        out += "z" + std::to_string(r + 1);
    }
    return out;
}

Rational json_rational(const nlohmann::json& j) {
    const auto q = parse_rational(j.get<std::string>());
    if (!q) throw DomainError("not a rational number: " + j.dump());
    return *q;
}

LatticeVector json_lattice(const nlohmann::json& j) {
    LatticeVector v(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) v[i] = j[i].get<long long>();
    return v;
}

nlohmann::json lattice_json(const LatticeVector& v) {
    auto out = nlohmann::json::array();
    for (const auto& x : v) out.push_back(x.convert_to<long long>());
    return out;
}

}  // namespace

Integer QuantumRelation::q_right() const {
    Integer sum = 0;
    for (const auto& [r, e] : a) sum += e;
    return sum;
}

std::string Presentation::c1() const {
    std::string out;
    for (std::size_t r = 0; r < rays.size(); ++r) out += (r ? " + z" : "z") + std::to_string(r + 1);
    return out;
}

std::vector<LinearRelation> linear_ideal(const Fan& f) {
    if (!f.complete()) throw DomainError("linear relations need a complete fan");
    std::vector<LinearRelation> out;
    for (std::size_t i = 0; i < f.dim(); ++i) {
        LinearRelation rel{LatticeVector::unit(f.dim(), i), {}};
        for (const auto& n : f.rays()) rel.coefficients.push_back(pairing(rel.m, n));
        out.push_back(std::move(rel));
    }
    return out;
}

std::vector<QuantumRelation> quantum_sr_generators(const Fan& f, const SupportFunction& F) {
    if (!f.complete()) throw DomainError("quantum relations need a complete fan");
    const auto smooth = is_smooth(f);
    if (!smooth.smooth) {
        std::string rays;
        for (auto r : smooth.offending->rays) rays += (rays.empty() ? "" : ", ") + to_string(f.rays()[r]);
        throw NotSmooth("fan is not smooth at the cone spanned by " + rays);
    }
    std::vector<QuantumRelation> out;
    for (const auto& c : primitive_collections(f)) {
        LatticeVector sum(f.dim());
        for (auto r : c) sum += f.rays()[r];
        const auto member = minimal_cone_containing(f, sum);
        QuantumRelation rel{c, member.cone, {}, {}};
        for (std::size_t k = 0; k < member.cone.rays.size(); ++k) rel.a[member.cone.rays[k]] = member.coefficients[k];
        for (auto r : c) rel.s_values.push_back(F.value(r));
        for (auto r : member.cone.rays) rel.s_values.push_back(F.value(r));

        LatticeVector check = sum;
        for (const auto& [r, e] : rel.a) check -= e * f.rays()[r];
        if (!check.is_zero()) throw DomainError("internal: σ_C expansion does not reproduce Σ n_ρ");
        for (auto r : c) {
            if (member.cone.contains_ray(r)) throw DomainError("internal: σ_C shares a ray with its collection");
        }
        out.push_back(std::move(rel));
    }
    return out;
}

Presentation presentation(const SupportFunction& F) {
    const auto& f = F.fan();
    return {f.rays(), F.values(), linear_ideal(f), quantum_sr_generators(f, F)};
}

std::string emit_presentation(const Presentation& p, Format format) {
    if (format == Format::Json) return presentation_to_json(p).dump(2);
    if (p.quantum.empty()) throw DomainError("presentation without quantum relations");
    std::ostringstream out;
    out << "variables: ";
    for (std::size_t r = 0; r < p.rays.size(); ++r) out << (r ? ", " : "") << "z" << r + 1 << " <-> " << to_string(p.rays[r]);
    out << "\nlinear relations:\n";
    for (const auto& rel : p.linear) out << "  " << render_linear(rel) << "\n";
    out << "quantum relations:\n";
    for (const auto& rel : p.quantum) {
        Rational left_s = 0, right_s = 0;
        std::vector<std::pair<std::size_t, Integer>> left, right;
        for (std::size_t k = 0; k < rel.collection.size(); ++k) {
            left_s += rel.s_values[k];
            left.emplace_back(rel.collection[k], 1);
        }
        for (std::size_t k = 0; k < rel.sigma.rays.size(); ++k) {
            const auto r = rel.sigma.rays[k];
            right_s += rel.a.at(r) * rel.s_values[rel.collection.size() + k];
            right.emplace_back(r, rel.a.at(r));
        }
        out << "  " << render_monomial(rel.q_left(), left_s, left) << " - "
            << render_monomial(rel.q_right(), right_s, right) << "\n";
    }
    out << "c1 = " << p.c1() << "\n";
    return out.str();
}

nlohmann::json presentation_to_json(const Presentation& p) {
    nlohmann::json j;
    j["rays"] = nlohmann::json::array();
    for (const auto& n : p.rays) j["rays"].push_back(lattice_json(n));
    j["F"] = nlohmann::json::array();
    for (const auto& v : p.support) j["F"].push_back(to_string(v));
    j["linear"] = nlohmann::json::array();
    for (const auto& rel : p.linear) {
        nlohmann::json coeffs = nlohmann::json::array();
        for (const auto& c : rel.coefficients) coeffs.push_back(c.convert_to<long long>());
        j["linear"].push_back({{"m", lattice_json(rel.m)}, {"coeffs", coeffs}});
    }
    j["quantum"] = nlohmann::json::array();
    for (const auto& rel : p.quantum) {
        nlohmann::json a = nlohmann::json::object(), sF = nlohmann::json::array();
        for (const auto& [r, e] : rel.a) a[std::to_string(r)] = e.convert_to<long long>();
        for (const auto& v : rel.s_values) sF.push_back(to_string(v));
        j["quantum"].push_back({{"C", rel.collection}, {"sigmaC", rel.sigma.rays}, {"a", a}, {"sF", sF}});
    }
    j["c1"] = p.c1();
    return j;
}

Presentation presentation_from_json(const nlohmann::json& j) {
    try {
        Presentation p;
        for (const auto& n : j.at("rays")) p.rays.push_back(json_lattice(n));
        if (j.contains("F")) {
            for (const auto& v : j.at("F")) p.support.push_back(json_rational(v));
        }
        for (const auto& rel : j.at("linear")) {
            LinearRelation l{json_lattice(rel.at("m")), {}};
            for (const auto& c : rel.at("coeffs")) l.coefficients.push_back(c.get<long long>());
            p.linear.push_back(std::move(l));
        }
        for (const auto& rel : j.at("quantum")) {
            QuantumRelation q;
            q.collection = rel.at("C").get<std::vector<std::size_t>>();
            q.sigma.rays = rel.at("sigmaC").get<std::vector<std::size_t>>();
            for (const auto& [key, e] : rel.at("a").items()) q.a[std::stoul(key)] = e.get<long long>();
            for (const auto& v : rel.at("sF")) q.s_values.push_back(json_rational(v));
            p.quantum.push_back(std::move(q));
        }
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed presentation document: ") + e.what());
    }
}

std::pair<QsxMonomial, QsxMonomial> substitute(const Presentation& p, const QuantumRelation& rel) {
    // In each factor q^{-1} s^{-F(n_ρ)} z_ρ the relation contributes q^{-1} s^{-F}
    // and ψ(z_ρ) contributes q s^{F} x^{n_ρ}; the sums are kept unsimplified
    // so that stored s-values disagreeing with the support function show up.
    const std::size_t d = p.dim();
    QsxMonomial left{0, 0, LatticeVector(d)}, right{0, 0, LatticeVector(d)};
    for (std::size_t k = 0; k < rel.collection.size(); ++k) {
        const auto r = rel.collection[k];
        left.q += Integer(-1) + 1;
        left.s += -rel.s_values[k] + p.support[r];
        left.x += p.rays[r];
    }
    for (std::size_t k = 0; k < rel.sigma.rays.size(); ++k) {
        const auto r = rel.sigma.rays[k];
        const Integer& e = rel.a.at(r);
        right.q += e * (-1 + 1);
        right.s += Rational(e) * (-rel.s_values[rel.collection.size() + k] + p.support[r]);
        right.x += e * p.rays[r];
    }
    return {left, right};
}

std::vector<std::pair<Integer, QsxMonomial>> substitute(const Presentation& p, const LinearRelation& rel) {
    std::vector<std::pair<Integer, QsxMonomial>> out;
    for (std::size_t r = 0; r < rel.coefficients.size(); ++r) {
        if (rel.coefficients[r] != 0) out.push_back({rel.coefficients[r], {1, p.support[r], p.rays[r]}});
    }
    return out;
}

Verdict check_substitution_identity(const Presentation& p, const Superpotential& W) {
    for (std::size_t k = 0; k < p.quantum.size(); ++k) {
        const auto [left, right] = substitute(p, p.quantum[k]);
        if (!(left == right)) {
            return {false, "quantum relation " + std::to_string(k + 1) + " maps to x^" + to_string(left.x) + " - x^" +
                               to_string(right.x) + ", not zero"};
        }
    }
    for (const auto& rel : p.linear) {
        const auto image = substitute(p, rel);
        const auto derivative = log_derivative(W, rel.m);
        bool same = image.size() == derivative.size();
        for (std::size_t k = 0; same && k < image.size(); ++k) {
            const auto& [c, mono] = image[k];
            const auto& t = derivative[k];
            same = c == t.coefficient && mono.q == 1 && mono.s == t.s_exponent && mono.x == t.exponent;
        }
        if (!same) return {false, "linear relation for m = " + to_string(rel.m) + " is not q times the log-derivative of W"};
    }
    return {true, ""};
}

}  // namespace toricqh
