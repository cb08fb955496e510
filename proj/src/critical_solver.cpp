#include "toricqh/critical_solver.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <thread>

#include <boost/multiprecision/mpfr.hpp>

#include "toricqh/errors.hpp"
#include "toricqh/lattice_geometry.hpp"

namespace toricqh {

namespace {

double max_norm(const ComplexVector& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

ComplexVector exp_coords(const ComplexVector& u) { return u.array().exp().matrix(); }

struct Run {
    bool converged = false;
    ComplexVector x;
    double residual = 0;
};

// Damped Newton on g(u) = log_gradient(W, exp u). After the residual drops
// below tol a few more steps are taken while they keep improving it.
Run newton(const Superpotential& W, ComplexVector u, const SolverConfig& cfg) {
    const double max_step = 2.0;
    const double escape = 60.0;
    Run best;
    double best_res = INFINITY;
    int polish = 0;
    for (int it = 0; it <= cfg.max_iters; ++it) {
        const ComplexVector x = exp_coords(u);
        const ComplexVector g = log_gradient(W, x);
        const double res = max_norm(g);
        if (!std::isfinite(res)) break;
        if (res < best_res) {
            best_res = res;
            best.x = x;
            best.residual = res;
        } else if (best_res < cfg.newton_tol) {
            break;
        }
        if (best_res < cfg.newton_tol && ++polish > 3) break;
        if (res == 0 || it == cfg.max_iters) break;
        ComplexVector step = log_hessian(W, x).fullPivLu().solve(-g);
        if (!step.allFinite()) break;
        const double len = max_norm(step);
        if (len > max_step) step *= max_step / len;
        u += step;
        if (u.real().cwiseAbs().maxCoeff() > escape) break;
    }
    best.converged = best_res < cfg.newton_tol;
    return best;
}

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<60>,
                                           boost::multiprecision::et_off>;
using MpComplex = std::complex<Real>;
using MpVector = std::vector<MpComplex>;

MpComplex mp_monomial(const MpVector& x, const LatticeVector& n) {
    MpComplex v(1);
    for (std::size_t i = 0; i < n.size(); ++i) {
        long e = n[i].convert_to<long>();
        MpComplex base = e < 0 ? MpComplex(1) / x[i] : x[i];
        for (e = std::abs(e); e; e >>= 1) {
            if (e & 1) v *= base;
            if (e > 1) base *= base;
        }
    }
    return v;
}

// Newton in log coordinates at 60 digits, for points where the Hessian is
// nearly singular and double precision stalls far from the root. Converges
// linearly at multiple points, hence the generous iteration cap.
ComplexVector refine(const Superpotential& W, const ComplexVector& start) {
    const std::size_t d = W.dim();
    MpVector x(d);
    for (std::size_t i = 0; i < d; ++i) x[i] = MpComplex(Real(start(Eigen::Index(i)).real()), Real(start(Eigen::Index(i)).imag()));
    const Real floor("1e-50");
    for (int it = 0; it < 400; ++it) {
        std::vector<MpVector> a(d, MpVector(d + 1));
        for (const auto& t : W.terms()) {
            const MpComplex v = Real(t.coefficient) * mp_monomial(x, t.exponent);
            for (std::size_t i = 0; i < d; ++i) {
                const Real ni(t.exponent[i].convert_to<long>());
                a[i][d] -= ni * v;
                for (std::size_t j = 0; j < d; ++j) a[i][j] += ni * Real(t.exponent[j].convert_to<long>()) * v;
            }
        }
        // Gaussian elimination with partial pivoting on [H | -g].
        for (std::size_t c = 0; c < d; ++c) {
            std::size_t piv = c;
            for (std::size_t r = c + 1; r < d; ++r) {
                if (abs(a[r][c]) > abs(a[piv][c])) piv = r;
            }
            std::swap(a[c], a[piv]);
            if (abs(a[c][c]) == 0) return start;
            for (std::size_t r = c + 1; r < d; ++r) {
                const MpComplex f = a[r][c] / a[c][c];
                for (std::size_t k = c; k <= d; ++k) a[r][k] -= f * a[c][k];
            }
        }
        MpVector step(d);
        Real len = 0;
        for (std::size_t c = d; c-- > 0;) {
            MpComplex v = a[c][d];
            for (std::size_t k = c + 1; k < d; ++k) v -= a[c][k] * step[k];
            step[c] = v / a[c][c];
            len = std::max(len, abs(step[c]));
        }
        if (len > 1) return start;  // left the neighbourhood; keep the double result
        for (std::size_t i = 0; i < d; ++i) x[i] *= exp(step[i]);
        if (len < floor) break;
    }
    ComplexVector out(static_cast<Eigen::Index>(d));
    for (std::size_t i = 0; i < d; ++i) out(Eigen::Index(i)) = Complex(x[i].real().convert_to<double>(), x[i].imag().convert_to<double>());
    return out;
}

bool nearly_singular(const Superpotential& W, const ComplexVector& x, double rank_tol) {
    const Eigen::JacobiSVD<ComplexMatrix> svd(log_hessian(W, x));
    const auto& s = svd.singularValues();
    return s(s.size() - 1) < std::sqrt(rank_tol) * s(0);
}

std::optional<Rational> nearby_rational(double v, double tol) {
    for (long q = 1; q <= 12; ++q) {
        const double p = std::round(v * double(q));
        if (std::abs(p / double(q) - v) <= tol * std::max(1.0, std::abs(v))) return Rational(long(p), q);
    }
    return std::nullopt;
}

// A converged point that is numerically rational is replaced by its exact
// certificate when the exact log-gradient vanishes there.
std::optional<RationalVector> snap(const Superpotential& W, const ComplexVector& x, double tol) {
    RationalVector p(std::size_t(x.size()));
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        if (std::abs(x(i).imag()) > tol * std::abs(x(i))) return std::nullopt;
        const auto q = nearby_rational(x(i).real(), tol);
        if (!q || *q == 0) return std::nullopt;
        p[std::size_t(i)] = *q;
    }
    if (!log_gradient(W, p).is_zero()) return std::nullopt;
    return p;
}

ComplexVector to_complex(const RationalVector& p) {
    ComplexVector x(Eigen::Index(p.size()));
    for (std::size_t i = 0; i < p.size(); ++i) x(Eigen::Index(i)) = p[i].convert_to<double>();
    return x;
}

bool same_point(const ComplexVector& a, const ComplexVector& b, double tol) {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (std::abs(a(i) - b(i)) > tol * std::max(std::abs(a(i)), std::abs(b(i)))) return false;
    }
    return true;
}

// Sort key insensitive to noise far below the clustering tolerance.
std::vector<long long> sort_key(const ComplexVector& x) {
    std::vector<long long> key;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        key.push_back(std::llround(x(i).real() * 1e6));
        key.push_back(std::llround(x(i).imag() * 1e6));
    }
    return key;
}

std::string format_double(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

}  // namespace

std::string to_string(Classification c) {
    switch (c) {
        case Classification::Semisimple:
            return "semisimple";
        case Classification::FieldSummand:
            return "field_summand";
        case Classification::Undetermined:
            break;
    }
    return "undetermined";
}

std::size_t numeric_rank(const ComplexMatrix& m, double rank_tol) {
    if (m.size() == 0) return 0;
    const Eigen::JacobiSVD<ComplexMatrix> svd(m);
    const auto& s = svd.singularValues();
    if (s(0) == 0) return 0;
    std::size_t r = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i) {
        if (s(i) > rank_tol * s(0)) ++r;
    }
    return r;
}

std::size_t kushnirenko_count(const Superpotential& W) {
    std::vector<LatticeVector> exps;
    for (const auto& t : W.terms()) exps.push_back(t.exponent);
    const auto newton = Polytope::from_points(exps, LatticeSide::N);
    return normalized_volume(newton).convert_to<std::size_t>();
}

CriticalPoint verify_point(const Superpotential& W, const ComplexVector& p, const SolverConfig& cfg) {
    for (Eigen::Index i = 0; i < p.size(); ++i) {
        if (p(i) == 0.0) throw DomainError("point is not in the torus");
    }
    CriticalPoint c;
    c.coords = p;
    c.residual = max_norm(log_gradient(W, p));
    if (!(c.residual < cfg.newton_tol)) {
        throw NotCritical("log-gradient has max-norm " + format_double(c.residual, 3) + " at " + to_string(p));
    }
    c.hessian_rank = numeric_rank(log_hessian(W, p), cfg.rank_tol);
    c.nondegenerate = c.hessian_rank == W.dim();
    c.value = eval(W, p);
    return c;
}

CriticalPoint verify_point(const Superpotential& W, const RationalVector& p, const SolverConfig&) {
    const auto g = log_gradient(W, p);
    if (!g.is_zero()) {
        throw NotCritical("log-gradient is " + to_string(g) + " at " + to_string(p) + ", not zero");
    }
    CriticalPoint c;
    c.coords = to_complex(p);
    c.exact_coords = p;
    c.residual = 0;
    c.hessian_rank = rank(log_hessian(W, p));
    c.nondegenerate = c.hessian_rank == W.dim();
    c.value = eval(W, p).convert_to<double>();
    return c;
}

SolveReport solve(const Superpotential& W, std::size_t expected_count, const SolverConfig& cfg) {
    if (!(cfg.newton_tol > 0 && cfg.cluster_tol > 0 && cfg.rank_tol > 0) || cfg.max_iters < 1) {
        throw DomainError("solver tolerances must be positive");
    }
    const std::size_t d = W.dim();
    SolveReport report;
    report.expected_count = expected_count;
    report.starts = cfg.starts ? cfg.starts : 200 * std::max<std::size_t>(expected_count, 1);

    std::vector<Run> runs(report.starts);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k; (k = next++) < runs.size();) {
            std::seed_seq seq{std::uint32_t(cfg.seed), std::uint32_t(cfg.seed >> 32), std::uint32_t(k),
                              std::uint32_t(std::uint64_t(k) >> 32)};
            std::mt19937_64 rng(seq);
            std::uniform_real_distribution<double> log_modulus(std::log(0.5), std::log(2.0));
            std::uniform_real_distribution<double> phase(-M_PI, M_PI);
            ComplexVector u(static_cast<Eigen::Index>(d));
            for (Eigen::Index i = 0; i < u.size(); ++i) {
                const double r = log_modulus(rng);
                u(i) = Complex(r, phase(rng));
            }
            runs[k] = newton(W, u, cfg);
        }
    };
    unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = unsigned(std::min<std::size_t>(threads, runs.size()));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    // Candidates in canonical order, so merging does not depend on scheduling.
    std::vector<CriticalPoint> candidates;
    for (const auto& run : runs) {
        if (!run.converged) continue;
        ++report.converged_runs;
        CriticalPoint c;
        c.coords = run.x;
        c.residual = run.residual;
        candidates.push_back(std::move(c));
    }
    auto canonical = [](const CriticalPoint& a, const CriticalPoint& b) {
        const auto ka = sort_key(a.coords), kb = sort_key(b.coords);
        if (ka != kb) return ka < kb;
        return a.residual < b.residual;
    };
    std::stable_sort(candidates.begin(), candidates.end(), canonical);

    // Points where the Hessian is nearly singular are only located to about
    // eps^(1/m) by double-precision Newton (m the multiplicity), so their
    // copies are grouped at sqrt(cluster_tol) and the group's best member is
    // refined at high precision before the final merge.
    auto merge = [](std::vector<CriticalPoint>& into, CriticalPoint c, double tol) {
        auto it = std::find_if(into.begin(), into.end(),
                               [&](const CriticalPoint& m) { return same_point(m.coords, c.coords, tol); });
        if (it == into.end()) {
            into.push_back(std::move(c));
        } else {
            const std::size_t size = it->cluster_size + c.cluster_size;
            if (c.residual < it->residual) *it = std::move(c);
            it->cluster_size = size;
        }
    };
    std::vector<CriticalPoint> regular, singular;
    for (auto& c : candidates) {
        if (nearly_singular(W, c.coords, cfg.rank_tol)) {
            merge(singular, std::move(c), std::sqrt(cfg.cluster_tol));
        } else {
            merge(regular, std::move(c), cfg.cluster_tol);
        }
    }
    for (auto& c : singular) c.coords = refine(W, c.coords);
    std::vector<CriticalPoint> merged;
    for (auto& c : regular) merge(merged, std::move(c), cfg.cluster_tol);
    for (auto& c : singular) merge(merged, std::move(c), cfg.cluster_tol);

    for (auto& m : merged) {
        const std::size_t size = m.cluster_size;
        if (auto exact = snap(W, m.coords, cfg.cluster_tol)) {
            m = verify_point(W, *exact, cfg);
        } else {
            m = verify_point(W, m.coords, cfg);
        }
        m.cluster_size = size;
    }
    std::stable_sort(merged.begin(), merged.end(), canonical);

    if (merged.size() > expected_count) {
        throw OverCount("found " + std::to_string(merged.size()) + " distinct critical points but at most " +
                        std::to_string(expected_count) + " exist; cluster_tol may be too small");
    }
    report.points = std::move(merged);
    report.found_count = report.points.size();
    report.deficit = long(expected_count) - long(report.found_count);
    for (const auto& p : report.points) report.critical_values.push_back(p.value);
    report.verdict = classify(report).verdict;
    return report;
}

Classified classify(const SolveReport& report) {
    std::size_t nondeg = 0;
    for (const auto& p : report.points) nondeg += p.nondegenerate;
    const std::size_t degenerate = report.points.size() - nondeg;
    std::ostringstream why;
    why << report.expected_count << " critical points expected with multiplicity, " << report.points.size()
        << " distinct found: " << nondeg << " nondegenerate, " << degenerate << " degenerate";
    if (degenerate) {
        why << " (Hessian ranks";
        for (const auto& p : report.points) {
            if (!p.nondegenerate) why << " " << p.hessian_rank;
        }
        why << " of " << (report.points.empty() ? 0 : report.points.front().coords.size()) << ")";
    }
    why << ". ";
    Classification verdict;
    if (report.points.size() == report.expected_count && degenerate == 0 && nondeg > 0) {
        verdict = Classification::Semisimple;
        why << "All critical points are nondegenerate, so the algebra is semisimple.";
    } else if (nondeg > 0) {
        verdict = Classification::FieldSummand;
        why << "A nondegenerate critical point splits off a field summand";
        if (degenerate) {
            why << "; a degenerate point rules out semisimplicity";
        } else {
            why << "; semisimplicity is undecided while points are missing";
        }
        why << ".";
    } else {
        verdict = Classification::Undetermined;
        why << "No nondegenerate critical point was found.";
    }
    if (report.deficit > 0 && degenerate > 0) {
        why << " The deficit of " << report.deficit
            << " is consistent with multiplicities >= 2 at the degenerate points (if no nondegenerate point was missed).";
    }
    return {verdict, why.str()};
}

std::string to_string(const Complex& z, int digits) {
    const double re = std::abs(z.real()) < 1e-13 ? 0.0 : z.real();
    const double im = std::abs(z.imag()) < 1e-13 ? 0.0 : z.imag();
    if (im == 0) return format_double(re, digits);
    std::string out = re == 0 ? "" : format_double(re, digits);
    if (im > 0 && !out.empty()) out += "+";
    return out + format_double(im, digits) + "i";
}

std::string to_string(const ComplexVector& v, int digits) {
    std::string out = "(";
    for (Eigen::Index i = 0; i < v.size(); ++i) out += (i ? ", " : "") + to_string(v(i), digits);
    return out + ")";
}

nlohmann::json report_to_json(const SolveReport& report) {
    auto pair = [](const Complex& z) { return nlohmann::json::array({z.real(), z.imag()}); };
    nlohmann::json j;
    j["expected"] = report.expected_count;
    j["found"] = report.found_count;
    j["deficit"] = report.deficit;
    j["starts"] = report.starts;
    j["converged_runs"] = report.converged_runs;
    j["points"] = nlohmann::json::array();
    for (const auto& p : report.points) {
        nlohmann::json coords = nlohmann::json::array();
        for (Eigen::Index i = 0; i < p.coords.size(); ++i) coords.push_back(pair(p.coords(i)));
        nlohmann::json entry{{"coords", coords},           {"residual", p.residual},
                             {"rank", p.hessian_rank},     {"nondeg", p.nondegenerate},
                             {"cluster_size", p.cluster_size}, {"exact", p.exact_coords.has_value()}};
        j["points"].push_back(entry);
    }
    j["verdict"] = to_string(report.verdict);
    j["critical_values"] = nlohmann::json::array();
    for (const auto& v : report.critical_values) j["critical_values"].push_back(pair(v));
    return j;
}

std::string report_to_text(const SolveReport& report) {
    std::ostringstream out;
    out << "expected: " << report.expected_count << "\n";
    out << "found: " << report.found_count << " (" << report.converged_runs << " of " << report.starts
        << " runs converged)\n";
    out << "deficit: " << report.deficit << "\n";
    for (std::size_t k = 0; k < report.points.size(); ++k) {
        const auto& p = report.points[k];
        out << "point " << k + 1 << ": "
            << (p.exact_coords ? toricqh::to_string(*p.exact_coords) : to_string(p.coords)) << "  W = "
            << to_string(p.value) << "  residual " << (p.exact_coords ? "0 (exact)" : format_double(p.residual, 3))
            << "  rank " << p.hessian_rank << (p.exact_coords ? " (exact)" : "") << "  runs " << p.cluster_size
            << (p.nondegenerate ? "" : "  DEGENERATE") << "\n";
    }
    const auto c = classify(report);
    out << "verdict: " << to_string(c.verdict) << "\n" << c.justification << "\n";
    return out.str();
}

}  // namespace toricqh
