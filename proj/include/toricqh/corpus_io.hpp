#pragma once

// Polytope files, resolution of CLI inputs, and the command-line interface.
//
// File format: a line "d n", then n lines of d integers. '#' starts a comment
// line. Rows are read as vertices of the ray polytope Δ* unless the primal
// flag says they are vertices of the moment polytope Δ.

#include <iosfwd>
#include <string>
#include <vector>

#include "toricqh/exact.hpp"
#include "toricqh/lattice_geometry.hpp"
#include "toricqh/support_function.hpp"

namespace toricqh {

struct PolytopeFile {
    std::size_t dim = 0;
    std::vector<LatticeVector> rows;
    LatticeSide side = LatticeSide::N;

    friend bool operator==(const PolytopeFile&, const PolytopeFile&) = default;
};

/// Throws ParseError with 1-based line and column.
PolytopeFile parse_polytope(const std::string& text, LatticeSide side = LatticeSide::N);
std::string serialize(const PolytopeFile& f);

struct ResolvedInput {
    std::string label;
    SupportFunction support;
    /// The polytope as read, for files; empty for catalog entries.
    std::optional<Polytope> file_polytope;
};

/// SupportFunction for a file: the face fan of Δ* with F ≡ -1 (rays in file
/// order), or the normal fan of Δ with F from its facets.
SupportFunction support_from_file(const PolytopeFile& f);

/// A catalog name, or a path to a polytope file.
ResolvedInput resolve_input(const std::string& name_or_path, bool primal);

/// Runs the CLI. Exit codes: 0 success, 1 domain error, 2 malformed input.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace toricqh
