#include "toricqh/corpus_io.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "toricqh/batyrev.hpp"
#include "toricqh/catalog.hpp"
#include "toricqh/critical_solver.hpp"
#include "toricqh/errors.hpp"
#include "toricqh/fan.hpp"
#include "toricqh/landau_ginzburg.hpp"
#include "toricqh/newton_polygon.hpp"
#include "toricqh/spectra.hpp"

namespace toricqh {

namespace {

struct Token {
    std::string text;
    std::size_t column;  // 1-based
};

std::vector<Token> tokens(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

long long parse_int(const Token& t, std::size_t line) {
    long long v = 0;
    const char* first = t.text.data();
    const char* last = first + t.text.size();
    if (*first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec == std::errc::result_out_of_range) throw ParseError(line, t.column, "integer out of 64-bit range: " + t.text);
    if (ec != std::errc() || ptr != last) throw ParseError(line, t.column, "expected an integer, got '" + t.text + "'");
    return v;
}

template <typename T>
std::vector<T> split_list(const std::string& text, const char* what, T (*convert)(const std::string&)) {
    std::vector<T> out;
    std::stringstream in(text);
    std::string item;
    std::size_t column = 1;
    while (std::getline(in, item, ',')) {
        try {
            out.push_back(convert(item));
        } catch (const std::exception&) {
            throw ParseError(1, column, std::string("bad ") + what + " '" + item + "'");
        }
        column += item.size() + 1;
    }
    return out;
}

Rational to_rational(const std::string& s) {
    const auto q = parse_rational(s);
    if (!q) throw std::invalid_argument(s);
    return *q;
}

double to_double(const std::string& s) {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string rays_text(const Fan& f, const std::vector<std::size_t>& idx) {
    std::string out;
    for (auto r : idx) out += (out.empty() ? "" : " ") + to_string(f.rays()[r]);
    return "{" + out + "}";
}

void print_polytope_summary(std::ostream& out, const std::string& title, const Polytope& p) {
    out << title << ": " << p.vertices().size() << " vertices, " << p.facets().size() << " facets, "
        << lattice_points(p).size() << " lattice points\n";
}

}  // namespace

PolytopeFile parse_polytope(const std::string& text, LatticeSide side) {
    PolytopeFile f;
    f.side = side;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    std::size_t count = 0;
    bool header = false;
    while (std::getline(in, line)) {
        ++lineno;
        const auto toks = tokens(line);
        if (toks.empty() || toks.front().text.front() == '#') continue;
        if (!header) {
            if (toks.size() != 2) throw ParseError(lineno, toks.front().column, "header must be 'd n'");
            const long long d = parse_int(toks[0], lineno), n = parse_int(toks[1], lineno);
            if (d < 1) throw ParseError(lineno, toks[0].column, "dimension must be positive");
            if (n < 1) throw ParseError(lineno, toks[1].column, "point count must be positive");
            f.dim = std::size_t(d);
            count = std::size_t(n);
            header = true;
            continue;
        }
        if (f.rows.size() == count) throw ParseError(lineno, toks.front().column, "more rows than the header's " + std::to_string(count));
        if (toks.size() != f.dim) {
            throw ParseError(lineno, toks.size() > f.dim ? toks[f.dim].column : line.size() + 1,
                             "expected " + std::to_string(f.dim) + " integers, got " + std::to_string(toks.size()));
        }
        LatticeVector v(f.dim);
        for (std::size_t i = 0; i < f.dim; ++i) v[i] = parse_int(toks[i], lineno);
        f.rows.push_back(std::move(v));
    }
    if (!header) throw ParseError(lineno + 1, 0, "missing header 'd n'");
    if (f.rows.size() != count) {
        throw ParseError(lineno + 1, 0, "expected " + std::to_string(count) + " rows, got " + std::to_string(f.rows.size()));
    }
    return f;
}

std::string serialize(const PolytopeFile& f) {
    std::ostringstream out;
    out << f.dim << " " << f.rows.size() << "\n";
    for (const auto& r : f.rows) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? " " : "") << r[i];
        out << "\n";
    }
    return out.str();
}

SupportFunction support_from_file(const PolytopeFile& f) {
    const auto p = Polytope::from_points(f.rows, f.side);
    if (f.side == LatticeSide::M) return support_from_polytope(p).second;
    // Keep the file's order for the rays, skipping rows that are not vertices.
    std::vector<LatticeVector> order;
    for (const auto& r : f.rows) {
        if (std::find(order.begin(), order.end(), r) == order.end() &&
            std::find(p.vertices().begin(), p.vertices().end(), RationalVector(r)) != p.vertices().end()) {
            order.push_back(r);
        }
    }
    return monotone_support(fan_from_reflexive(p).with_ray_order(order));
}

ResolvedInput resolve_input(const std::string& name_or_path, bool primal) {
    if (const auto e = catalog_entry(name_or_path)) return {e->name, e->build(), std::nullopt};
    std::ifstream in(name_or_path);
    if (!in) throw DomainError("'" + name_or_path + "' is neither a catalog entry nor a readable file");
    std::stringstream buf;
    buf << in.rdbuf();
    const auto file = parse_polytope(buf.str(), primal ? LatticeSide::M : LatticeSide::N);
    const auto poly = Polytope::from_points(file.rows, file.side);
    return {name_or_path, support_from_file(file), poly};
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quantum cohomology of toric Fano manifolds via their Landau-Ginzburg superpotentials", "toricqh"};
    app.require_subcommand(1);
    bool primal = false;
    app.add_flag("--primal", primal, "file rows are vertices of the moment polytope instead of the ray polytope");

    std::string input;
    bool json = false;
    std::string support_text, coeff_text;
    std::uint64_t seed = 0;
    std::size_t starts = 0;
    unsigned threads = 0;
    std::string alpha_text, beta_text;

    auto* check = app.add_subcommand("check", "reflexivity, Delzant and smoothness report");
    auto* fan = app.add_subcommand("fan", "rays, cone counts and primitive collections");
    auto* pres = app.add_subcommand("presentation", "Batyrev presentation of quantum cohomology");
    auto* pot = app.add_subcommand("potential", "the superpotential W");
    auto* solve_cmd = app.add_subcommand("solve", "critical points of W and the semisimplicity verdict");
    auto* spec = app.add_subcommand("spectrum", "critical values of W");
    auto* vals = app.add_subcommand("valuations", "Newton-polygon report for CP^2 blown up at a point");
    auto* cat = app.add_subcommand("catalog", "list built-in examples");
    for (auto* sub : {check, fan, pres, pot, solve_cmd, spec}) {
        sub->add_option("input", input, "catalog name or polytope file")->required();
        sub->add_flag("--primal", primal, "file rows are vertices of the moment polytope");
    }
    pres->add_option("--support", support_text, "values F(n_rho), comma separated");
    for (auto* sub : {pres, solve_cmd, spec}) sub->add_flag("--json", json, "machine-readable output");
    for (auto* sub : {pot, solve_cmd, spec}) sub->add_option("--coeffs", coeff_text, "positive coefficients b_rho, comma separated");
    for (auto* sub : {solve_cmd, spec}) {
        sub->add_option("--seed", seed, "random seed");
        sub->add_option("--starts", starts, "number of Newton starts (default 200 per expected point)");
        sub->add_option("--threads", threads, "worker threads (default: all cores)");
    }
    vals->add_option("--alpha", alpha_text, "area of a line")->required();
    vals->add_option("--beta", beta_text, "area of the exceptional curve")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        auto coeffs = [&]() -> std::optional<std::vector<double>> {
            if (coeff_text.empty()) return std::nullopt;
            return split_list<double>(coeff_text, "coefficient", to_double);
        };
        auto solver_config = [&] {
            SolverConfig cfg;
            cfg.seed = seed;
            cfg.starts = starts;
            cfg.threads = threads;
            return cfg;
        };

        if (cat->parsed()) {
            for (const auto& e : catalog()) {
                const auto F = e.build();
                out << e.name << "  dim " << e.dim << "  rays " << F.fan().rays().size() << "  maximal cones "
                    << F.fan().maximal_cones().size() << "  " << (e.fano ? "Fano" : "not Fano") << "  " << e.description
                    << "\n";
            }
            return 0;
        }
        if (vals->parsed()) {
            const auto a = parse_rational(alpha_text), b = parse_rational(beta_text);
            if (!a) throw ParseError(1, 0, "bad --alpha '" + alpha_text + "'");
            if (!b) throw ParseError(1, 0, "bad --beta '" + beta_text + "'");
            out << quasimorphism_report(*a, *b).text;
            return 0;
        }

        if (check->parsed()) {
            // Report as much as possible even when the fan cannot be built.
            if (!catalog_entry(input)) {
                std::ifstream in(input);
                if (!in) throw DomainError("'" + input + "' is neither a catalog entry nor a readable file");
                std::stringstream buf;
                buf << in.rdbuf();
                const auto file = parse_polytope(buf.str(), primal ? LatticeSide::M : LatticeSide::N);
                const auto p = Polytope::from_points(file.rows, file.side);
                out << "input: " << input << " (" << (primal ? "moment polytope" : "ray polytope") << ")\n";
                out << "dimension: " << p.dim() << "\n";
                if (p.dropped_points()) out << "non-vertex rows ignored: " << p.dropped_points() << "\n";
                print_polytope_summary(out, primal ? "moment polytope" : "ray polytope", p);
                if (!primal) {
                    const auto r = is_reflexive(p);
                    out << "reflexive: " << yes_no(r.ok) << (r.ok ? "" : " (" + r.diagnostic + ")") << "\n";
                    if (!r.ok) return 0;
                    const auto dual = dual_polytope(p);
                    print_polytope_summary(out, "moment polytope", dual);
                    out << "Delzant: " << yes_no(is_delzant(dual).ok) << "\n";
                } else {
                    const auto dz = is_delzant(p);
                    out << "Delzant: " << yes_no(dz.ok) << (dz.ok ? "" : " (" + dz.diagnostic + ")") << "\n";
                    if (!dz.ok) return 0;
                }
                const auto F = support_from_file(file);
                const auto sm = is_smooth(F.fan());
                out << "fan: " << F.fan().rays().size() << " rays, " << F.fan().maximal_cones().size()
                    << " maximal cones, complete " << yes_no(is_complete(F.fan())) << ", smooth " << yes_no(sm.smooth)
                    << "\n";
                out << "class strictly convex: " << yes_no(is_strictly_convex(F).strictly_convex) << "\n";
                return 0;
            }
            const auto in = resolve_input(input, primal);
            const auto& f = in.support.fan();
            out << "input: " << in.label << " (catalog)\n";
            out << "dimension: " << f.dim() << "\n";
            const auto rays = Polytope::from_points(f.rays(), LatticeSide::N);
            print_polytope_summary(out, "ray polytope", rays);
            const auto r = is_reflexive(rays);
            out << "reflexive: " << yes_no(r.ok) << (r.ok ? "" : " (" + r.diagnostic + ")") << "\n";
            const auto convex = is_strictly_convex(in.support).strictly_convex;
            if (convex) {
                const auto delta = moment_polytope(in.support);
                print_polytope_summary(out, "moment polytope", delta);
                out << "Delzant: " << yes_no(is_delzant(delta).ok) << "\n";
            }
            out << "fan: " << f.rays().size() << " rays, " << f.maximal_cones().size() << " maximal cones, complete "
                << yes_no(is_complete(f)) << ", smooth " << yes_no(is_smooth(f).smooth) << "\n";
            out << "class strictly convex: " << yes_no(convex) << "\n";
            return 0;
        }

        const auto in = resolve_input(input, primal);
        const auto& f = in.support.fan();

        if (fan->parsed()) {
            out << "rays:\n";
            for (std::size_t r = 0; r < f.rays().size(); ++r) out << "  z" << r + 1 << "  " << to_string(f.rays()[r]) << "\n";
            out << "cones by dimension:";
            for (std::size_t k = 0; k <= f.dim(); ++k) out << " " << f.cones(k).size();
            out << "\nmaximal cones: " << f.maximal_cones().size() << "\n";
            out << "smooth: " << yes_no(is_smooth(f).smooth) << ", complete: " << yes_no(is_complete(f)) << "\n";
            out << "primitive collections:\n";
            for (const auto& c : primitive_collections(f)) {
                std::string zs;
                for (auto r : c) zs += (zs.empty() ? "z" : " z") + std::to_string(r + 1);
                out << "  " << zs << "  " << rays_text(f, c) << "\n";
            }
            return 0;
        }
        if (pres->parsed()) {
            SupportFunction F = in.support;
            if (!support_text.empty()) F = SupportFunction(f, split_list<Rational>(support_text, "support value", to_rational));
            out << emit_presentation(presentation(F), json ? Format::Json : Format::Text) << (json ? "\n" : "");
            return 0;
        }
        const auto W = build_potential(f, in.support, coeffs());
        if (pot->parsed()) {
            out << "W = " << render(W, RenderMode::Symbolic) << "\n";
            out << "at s = 1: " << render(W, RenderMode::Numeric) << "\n";
            return 0;
        }
        const auto report = solve(W, kushnirenko_count(W), solver_config());
        if (solve_cmd->parsed()) {
            if (json) {
                out << report_to_json(report).dump(2) << "\n";
            } else {
                out << "input: " << in.label << "\n" << report_to_text(report);
            }
            return 0;
        }
        if (spec->parsed()) {
            const auto s = critical_values(W, report);
            out << (json ? spectrum_to_json(s).dump(2) + "\n" : spectrum_to_text(s));
            return 0;
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace toricqh
